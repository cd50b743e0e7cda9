#include "germ/standard_basis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "germ/mora.hpp"

namespace germ {

namespace {

Polynomial normalize_element(const Polynomial& p, const MonomialOrder& order) {
  Polynomial q = primitive_part(p);
  if (sgn(order.leading_coefficient(q)) < 0) q = -q;
  return q;
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  std::uint64_t serial;
};

Polynomial s_polynomial(const Polynomial& a, const Monomial& la, const Rational& ca, const Polynomial& b,
                        const Monomial& lb, const Rational& cb) {
  const Monomial l = lcm(la, lb);
  Polynomial s(a.ring());
  s.add_scaled(cb, quotient(l, la), a);
  s.add_scaled(-ca, quotient(l, lb), b);
  return s;
}

}  // namespace

std::vector<Monomial> StandardBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elements) out.push_back(order.leading_monomial(e));
  return out;
}

bool StandardBasis::is_unit() const {
  return elements.size() == 1 && order.leading_monomial(elements.front()).is_one();
}

StandardBasis standard_basis(const IdealPresentation& ideal, const MonomialOrder& order) {
  StandardBasis result{{}, order, ideal};
  const Ring& ring = ideal.ring();

  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  std::vector<Rational> coeffs;
  std::vector<Pair> pending;
  std::uint64_t serial = 0;

  auto unit_basis = [&] {
    result.elements = {Polynomial::constant(ring, 1)};
    return result;
  };

  // Buchberger's chain criterion: some k has LM_k | lcm(i, j) and neither
  // (i, k) nor (j, k) is still pending.
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pending.begin(), pending.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
  };
  auto chain_covered = [&](const Pair& p) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!leads[k].divides(p.lcm)) continue;
      if (!is_pending(p.i, k) && !is_pending(p.j, k)) return true;
    }
    return false;
  };

  auto add_element = [&](Polynomial p) {
    p = normalize_element(p, order);
    const auto idx = order.leading_index(p);
    const std::size_t j = basis.size();
    leads.push_back(p.terms()[idx].first);
    coeffs.push_back(p.terms()[idx].second);
    basis.push_back(std::move(p));
    for (std::size_t i = 0; i < j; ++i) pending.push_back(Pair{i, j, lcm(leads[i], leads[j]), serial++});
  };

  for (const auto& g : ideal.generators()) {
    if (order.leading_monomial(g).is_one()) return unit_basis();
    add_element(g);
  }

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return a.serial < b.serial;
    });
    const Pair pair = *it;
    pending.erase(it);

    if (leads[pair.i].coprime(leads[pair.j])) continue;
    if (chain_covered(pair)) continue;

    Polynomial s = s_polynomial(basis[pair.i], leads[pair.i], coeffs[pair.i], basis[pair.j], leads[pair.j],
                                coeffs[pair.j]);
    Polynomial h = mora_normal_form(s, basis, order);
    if (h.is_zero()) continue;
    if (order.leading_monomial(h).is_one()) return unit_basis();
    add_element(std::move(h));
  }

  // Minimalize: keep an element unless another element's leading monomial
  // divides its own (equal leading monomials keep the earliest).
  for (std::size_t j = 0; j < basis.size(); ++j) {
    bool redundant = false;
    for (std::size_t i = 0; i < basis.size() && !redundant; ++i) {
      if (i == j || !leads[i].divides(leads[j])) continue;
      redundant = leads[i] != leads[j] || i < j;
    }
    if (!redundant) result.elements.push_back(basis[j]);
  }
  return result;
}

bool ideal_membership_local(const Polynomial& f, const StandardBasis& basis) {
  if (f.is_zero()) return true;
  if (basis.elements.empty()) return false;
  return mora_normal_form(f, basis.elements, basis.order).is_zero();
}

bool ideal_membership_local(const Polynomial& f, const IdealPresentation& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  if (ideal.has_unit_generator()) return true;
  if (ideal.empty()) return false;
  return ideal_membership_local(f, standard_basis(ideal));
}

int monomial_ideal_dimension(std::size_t nvars, const std::vector<Monomial>& monomials) {
  // Bitmask over variables; the catalogue of germs stays far below 32 variables.
  std::vector<std::uint32_t> supports;
  for (const auto& m : monomials) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] != 0) s |= 1u << i;
    supports.push_back(s);
  }
  int best = -1;
  for (std::uint32_t subset = 0; subset < (1u << nvars); ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

DimensionValue local_dimension(const IdealPresentation& ideal) {
  if (ideal.has_unit_generator()) return {-1};
  if (ideal.empty()) return {static_cast<int>(ideal.ring()->nvars())};
  const StandardBasis sb = standard_basis(ideal);
  if (sb.is_unit()) return {-1};
  return {monomial_ideal_dimension(ideal.ring()->nvars(), sb.leading_monomials())};
}

MinimalGenerators mu_local(const IdealPresentation& ideal) {
  MinimalGenerators out;
  if (ideal.has_unit_generator()) {
    out.unit = true;
    return out;
  }
  std::vector<Polynomial> kept = ideal.generators();

  for (std::size_t i = 0; i < kept.size();) {
    bool redundant = false;
    for (std::size_t j = 0; j < kept.size() && !redundant; ++j)
      redundant = j != i && divides_locally(kept[j], kept[i]);
    if (redundant) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (ideal_membership_local(kept[i], IdealPresentation(ideal.ring(), std::move(others)))) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  out.count = kept.size();
  out.generators = std::move(kept);
  return out;
}

}  // namespace germ
