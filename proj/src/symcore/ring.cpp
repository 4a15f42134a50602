#include "quadhopf/symcore/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf {
namespace {

bool valid_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

std::string_view to_string(TermOrder order) {
  return order == TermOrder::lex ? "lex" : "degrevlex";
}

TermOrder parse_term_order(std::string_view text) {
  if (text == "lex") return TermOrder::lex;
  if (text == "degrevlex") return TermOrder::degrevlex;
  throw InvalidArgument("unknown term order: " + std::string(text));
}

RingSpec::RingSpec(std::vector<std::string> variables, TermOrder order, Domain domain,
                   std::vector<std::string> invertible)
    : variables_(std::move(variables)),
      invertible_(variables_.size(), false),
      order_(order),
      domain_(domain) {
  if (variables_.size() > kMaxVariables) {
    throw InvalidArgument("too many variables: " + std::to_string(variables_.size()));
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_name(v)) throw InvalidArgument("invalid variable name: '" + v + "'");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name: " + v);
  }
  for (const auto& v : invertible) invertible_[require_index(v)] = true;
}

bool RingSpec::has_invertible() const noexcept {
  return std::find(invertible_.begin(), invertible_.end(), true) != invertible_.end();
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t RingSpec::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw InvalidArgument("unknown variable: " + std::string(name));
  return *i;
}

int RingSpec::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = variables_.size();
  if (order_ == TermOrder::lex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::shared_ptr<const RingSpec> RingSpec::with_domain(Domain domain) const {
  auto copy = std::make_shared<RingSpec>(*this);
  copy->domain_ = domain;
  return copy;
}

std::shared_ptr<const RingSpec> RingSpec::with_order(TermOrder order) const {
  auto copy = std::make_shared<RingSpec>(*this);
  copy->order_ = order;
  return copy;
}

bool RingSpec::same_as(const RingSpec& other) const noexcept {
  return variables_ == other.variables_ && invertible_ == other.invertible_ &&
         order_ == other.order_ && domain_ == other.domain_;
}

std::string RingSpec::describe() const {
  std::string out = domain_.name() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ",";
    out += variables_[i];
    if (invertible_[i]) out += "^+-1";
  }
  out += "] ";
  out += to_string(order_);
  return out;
}

Ring make_ring(std::vector<std::string> variables, TermOrder order, Domain domain,
               std::vector<std::string> invertible) {
  return std::make_shared<const RingSpec>(std::move(variables), order, domain,
                                          std::move(invertible));
}

}  // namespace quadhopf
