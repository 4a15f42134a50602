#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace quadhopf::displays {

using MatrixText = std::vector<std::vector<std::string>>;

/// Verbatim polynomial displays, keyed "theorem1.a" .. "theorem1.d",
/// "theorem2.a", "theorem2.b", "turiel.a", "turiel.b". Terms are in the
/// displayed order, not canonical order.
std::string_view polynomial(std::string_view key);

/// Matrices displayed along the symplectic reduction: U, M1, E1, E2,
/// after_E1E2, S1, after_S1, M2, E3, E4, S2, M3, E5, E6, S3, S4, M4, E7, E8.
const MatrixText& matrix(std::string_view key);

}  // namespace quadhopf::displays
