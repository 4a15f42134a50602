#include "quadhopf/bundles/idempotents.hpp"

namespace quadhopf::bundles {

std::pair<PolyMatrix, PolyMatrix> q4_idempotents(const Ring& ring) {
  PolyMatrix m = PolyMatrix::parse(ring, {{"z", "0", "x2", "-x1"},
                                          {"0", "z", "y1", "y2"},
                                          {"y2", "x1", "1 - z", "0"},
                                          {"-y1", "x2", "0", "1 - z"}});
  PolyMatrix n = PolyMatrix::identity(ring, 4) - m;
  return {std::move(m), std::move(n)};
}

PolyMatrix universal_MP(const Ring& ring) {
  std::vector<Poly> x, y;
  for (int i = 1; i <= 3; ++i) {
    x.push_back(Poly::variable(ring, "x" + std::to_string(i)));
    y.push_back(Poly::variable(ring, "y" + std::to_string(i)));
  }
  return PolyMatrix::identity(ring, 3) - PolyMatrix::column(y) * PolyMatrix::row(x);
}

PluckerChart plucker_chart(const Ring& ring) {
  auto minor = [&ring](int i, int j) {
    auto v = [&ring](char c, int k) { return Poly::variable(ring, std::string(1, c) + std::to_string(k)); };
    return v('a', i) * v('b', j) - v('a', j) * v('b', i);
  };
  PluckerChart c;
  c.z = minor(1, 2);
  c.x1 = minor(1, 3);
  c.x2 = minor(1, 4);
  c.y1 = minor(2, 4);
  c.y2 = minor(3, 2);
  c.u6 = minor(3, 4);
  c.d = c.z + c.u6;
  return c;
}

}  // namespace quadhopf::bundles
