#pragma once

#include <compare>
#include <string_view>

#include "germ/monomial.hpp"
#include "germ/polynomial.hpp"

namespace germ {

enum class OrderKind { GlobalDegRevLex, GlobalLex, LocalNegDegRevLex };

/// Total multiplicative order on monomials. `compare(a, b) > 0` means a leads b.
///
/// Variables are ranked x_1 > x_2 > ... > x_n; the reverse-lexicographic
/// tie-break inspects the last variable first. Global kinds make 1 the smallest
/// monomial, the local kind makes 1 the largest.
class MonomialOrder {
 public:
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static constexpr MonomialOrder local() { return MonomialOrder(OrderKind::LocalNegDegRevLex); }
  static constexpr MonomialOrder degrevlex() { return MonomialOrder(OrderKind::GlobalDegRevLex); }
  static constexpr MonomialOrder lex() { return MonomialOrder(OrderKind::GlobalLex); }

  constexpr OrderKind kind() const noexcept { return kind_; }
  constexpr bool is_local() const noexcept { return kind_ == OrderKind::LocalNegDegRevLex; }
  std::string_view name() const noexcept;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Index into f.terms() of the leading term. Requires f nonzero.
  std::size_t leading_index(const Polynomial& f) const;
  const Monomial& leading_monomial(const Polynomial& f) const {
    return f.terms()[leading_index(f)].first;
  }
  const Rational& leading_coefficient(const Polynomial& f) const {
    return f.terms()[leading_index(f)].second;
  }

  /// deg(f) - deg(LM(f)); the termination measure of Mora's normal form.
  std::uint64_t ecart(const Polynomial& f) const;

  friend constexpr bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  OrderKind kind_;
};

}  // namespace germ
