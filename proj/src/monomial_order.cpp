#include "germ/monomial_order.hpp"

#include <cassert>

namespace germ {

namespace {

// a >_revlex b for monomials of equal degree: the last differing exponent is smaller in a.
std::strong_ordering revlex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::string_view MonomialOrder::name() const noexcept {
  switch (kind_) {
    case OrderKind::GlobalDegRevLex: return "global-degrevlex";
    case OrderKind::GlobalLex: return "global-lex";
    case OrderKind::LocalNegDegRevLex: return "local-negdegrevlex";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  assert(a.nvars() == b.nvars());
  switch (kind_) {
    case OrderKind::GlobalLex:
      return a <=> b;
    case OrderKind::GlobalDegRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b);
    case OrderKind::LocalNegDegRevLex:
      if (a.degree() != b.degree()) return b.degree() <=> a.degree();
      return revlex(a, b);
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialOrder::leading_index(const Polynomial& f) const {
  assert(!f.is_zero());
  const auto terms = f.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (greater(terms[i].first, terms[best].first)) best = i;
  return best;
}

std::uint64_t MonomialOrder::ecart(const Polynomial& f) const {
  return static_cast<std::uint64_t>(f.total_degree()) - leading_monomial(f).degree();
}

}  // namespace germ
