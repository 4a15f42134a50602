#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadhopf/symcore/monomial.hpp"
#include "quadhopf/symcore/scalar.hpp"

namespace quadhopf {

enum class TermOrder { lex, degrevlex };

std::string_view to_string(TermOrder order);
/// Accepts "lex" and "degrevlex"; throws InvalidArgument otherwise.
TermOrder parse_term_order(std::string_view text);

/// A (Laurent) polynomial ring over an exact field. Variables listed in
/// `invertible` may carry negative exponents. The declared variable order is
/// the order used by the term order (first variable largest).
class RingSpec {
 public:
  RingSpec(std::vector<std::string> variables, TermOrder order, Domain domain,
           std::vector<std::string> invertible = {});

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  TermOrder order() const noexcept { return order_; }
  const Domain& domain() const noexcept { return domain_; }
  bool is_invertible(std::size_t i) const noexcept { return invertible_[i]; }
  bool has_invertible() const noexcept;

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws InvalidArgument for an unknown name.
  std::size_t require_index(std::string_view name) const;

  /// Three-way comparison under this ring's term order.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  /// Same ring with a different coefficient domain or term order.
  std::shared_ptr<const RingSpec> with_domain(Domain domain) const;
  std::shared_ptr<const RingSpec> with_order(TermOrder order) const;

  bool same_as(const RingSpec& other) const noexcept;
  std::string describe() const;

 private:
  std::vector<std::string> variables_;
  std::vector<bool> invertible_;
  TermOrder order_;
  Domain domain_;
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(std::vector<std::string> variables, TermOrder order = TermOrder::degrevlex,
               Domain domain = Domain::rationals(), std::vector<std::string> invertible = {});

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace quadhopf
