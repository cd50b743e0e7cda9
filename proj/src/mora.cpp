#include "germ/mora.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

#include "germ/errors.hpp"
#include "germ/unit_certificate.hpp"

namespace germ {

namespace {

struct Reducer {
  Polynomial poly;
  Monomial lead;
  Rational lead_coeff;
  std::uint64_t ecart;
  // Tracked mode: poly == unit * f + sum_i combo[i] * basis[i].
  std::optional<Polynomial> unit;
  std::vector<Polynomial> combo;
};

Reducer make_reducer(const Polynomial& p, const MonomialOrder& order) {
  const auto idx = order.leading_index(p);
  return Reducer{p, p.terms()[idx].first, p.terms()[idx].second, order.ecart(p), std::nullopt, {}};
}

// s with s*p having coprime integer coefficients; keeps rationals from growing
// across reduction steps.
Rational primitive_scale(const Polynomial& p) {
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.second.get_num_mpz_t());
  }
  Rational s(den, num);
  s.canonicalize();
  return s;
}

// Past either limit the remainder's coefficients typically grow without bound
// while the reduction slowly builds a high-degree unit multiplier.
constexpr std::size_t kStepBudget = 256;
constexpr std::size_t kBitBudget = 2048;

std::size_t coefficient_bits(const Polynomial& p) {
  std::size_t bits = 0;
  for (const auto& t : p.terms())
    bits = std::max({bits, mpz_sizeinbase(t.second.get_num_mpz_t(), 2), mpz_sizeinbase(t.second.get_den_mpz_t(), 2)});
  return bits;
}

// Smallest d such that every monomial of degree d is divisible by a leading
// monomial of `basis`, when the leading monomials include a pure power of each
// variable. Leading monomials of ideal members lie in the leading ideal, and
// for a local degree order that ideal containing m^d forces m^d into the ideal
// itself: reducing a monomial of degree >= d never lowers the degree, so its
// weak normal form has a leading monomial in the leading ideal and must vanish.
std::optional<std::uint64_t> corner_degree(std::span<const Polynomial> basis, const MonomialOrder& order) {
  if (basis.empty()) return std::nullopt;
  const std::size_t n = basis.front().nvars();
  std::vector<Monomial> leads;
  std::vector<std::uint64_t> pure(n, 0);
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    leads.push_back(order.leading_monomial(g));
    const Monomial& m = leads.back();
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] == m.degree() && m.degree() > 0 && (pure[i] == 0 || m[i] < pure[i])) pure[i] = m[i];
  }
  std::uint64_t d = 1;
  for (const auto p : pure) {
    if (p == 0) return std::nullopt;
    d += p - 1;
  }
  auto covered = [&](std::uint64_t degree) {
    std::vector<Monomial::Exponent> e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> bool {
      if (i + 1 == n) {
        e[i] = static_cast<Monomial::Exponent>(left);
        const Monomial m(e);
        return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
      }
      for (std::uint64_t k = 0; k <= left; ++k) {
        e[i] = static_cast<Monomial::Exponent>(k);
        if (!self(self, i + 1, left - k)) return false;
      }
      return true;
    };
    return rec(rec, 0, degree);
  };
  while (d > 1 && covered(d - 1)) --d;
  return d;
}

// Returns nullopt if `budgeted` and the budget runs out. With `corner` set,
// terms of degree >= corner are dropped throughout; they lie in the ideal.
template <bool Track>
std::optional<Division> reduce(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order,
                               bool budgeted, std::optional<std::uint64_t> corner = std::nullopt) {
  const Ring& ring = f.ring();
  const Polynomial zero(ring);
  std::vector<Reducer> divisors;
  divisors.reserve(basis.size() + 8);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require_same_ring(ring, basis[i].ring());
    if (basis[i].is_zero()) continue;
    if (corner) {
      Polynomial g = truncate(basis[i], *corner - 1);
      if (g.is_zero()) continue;
      divisors.push_back(make_reducer(g, order));
    } else {
      divisors.push_back(make_reducer(basis[i], order));
    }
    if constexpr (Track) {
      divisors.back().unit = zero;
      divisors.back().combo.assign(basis.size(), zero);
      divisors.back().combo[i] = Polynomial::constant(ring, 1);
    }
  }

  Polynomial h = corner ? truncate(f, *corner - 1) : f;
  Polynomial unit = Polynomial::constant(ring, 1);
  std::vector<Polynomial> combo;
  if constexpr (Track) combo.assign(basis.size(), zero);

  for (std::size_t steps = 1; !h.is_zero(); ++steps) {
    if (budgeted && (steps > kStepBudget || (steps % 16 == 0 && coefficient_bits(h) > kBitBudget)))
      return std::nullopt;
    const auto idx = order.leading_index(h);
    const Monomial lead = h.terms()[idx].first;
    const Rational lead_coeff = h.terms()[idx].second;
    const std::uint64_t h_ecart = static_cast<std::uint64_t>(h.total_degree()) - lead.degree();

    std::size_t best = divisors.size();
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const auto& r = divisors[k];
      if (r.lead.divides(lead) && (best == divisors.size() || r.ecart < divisors[best].ecart)) best = k;
    }
    if (best == divisors.size()) break;

    const Rational scale = -lead_coeff / divisors[best].lead_coeff;
    const Monomial shift = quotient(lead, divisors[best].lead);
    if (divisors[best].ecart > h_ecart) {
      Reducer saved = make_reducer(h, order);
      if constexpr (Track) {
        saved.unit = unit;
        saved.combo = combo;
      }
      divisors.push_back(std::move(saved));
    }
    const Reducer& chosen = divisors[best];
    h.add_scaled(scale, shift, chosen.poly);
    if (corner) h = truncate(h, *corner - 1);
    if constexpr (Track) {
      unit.add_scaled(scale, shift, *chosen.unit);
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i].add_scaled(scale, shift, chosen.combo[i]);
    }
    if (h.is_zero()) break;
    const Rational s = primitive_scale(h);
    if (s != 1) {
      h *= s;
      if constexpr (Track) {
        unit *= s;
        for (auto& c : combo) c *= s;
      }
    }
  }

  Division out{std::move(h), std::move(unit), {}};
  if constexpr (Track) {
    // h = unit*f + sum combo_i*g_i  =>  unit*f - h = sum (-combo_i)*g_i.
    for (auto& c : combo) out.cofactors.push_back(-std::move(c));
  }
  return out;
}

// Degree slack tried for the unit-multiple certificate, and the largest
// number of monomials the linear algebra may range over.
constexpr std::uint64_t kCertificateSlack[] = {1, 2, 4, 8};
constexpr std::size_t kCertificateColumns = 3000;

std::size_t binomial(std::uint64_t n, std::uint64_t k) {
  std::size_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Zero is a valid weak normal form exactly when f lies in the ideal, so a
// certificate of membership may stand in for a reduction that stalls.
template <bool Track>
Division weak_normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  if (!order.is_local()) return *reduce<Track>(f, basis, order, false);
  if constexpr (!Track) {
    // Dropping terms in the ideal keeps the result a weak normal form but
    // would leave the cofactors incomplete, so only the untracked mode uses it.
    if (const auto corner = corner_degree(basis, order)) return *reduce<false>(f, basis, order, false, corner);
  }
  if (auto d = reduce<Track>(f, basis, order, true)) return *std::move(d);
  const std::size_t n = f.nvars();
  std::uint64_t top = static_cast<std::uint64_t>(f.total_degree());
  for (const auto& g : basis) top = std::max<std::uint64_t>(top, std::max<std::int64_t>(0, g.total_degree()));
  for (const std::uint64_t slack : kCertificateSlack) {
    const std::uint64_t bound = top + slack;
    if (binomial(bound + n, n) > kCertificateColumns) break;
    if constexpr (Track) {
      if (auto d = unit_multiple_certificate(f, basis, bound)) return *std::move(d);
    } else {
      if (has_unit_multiple_certificate(f, basis, bound)) return Division{Polynomial(f.ring()), Polynomial(f.ring()), {}};
    }
  }
  return *reduce<Track>(f, basis, order, false);
}

}  // namespace

Polynomial mora_normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  return weak_normal_form<false>(f, basis, order).remainder;
}

Division mora_division(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  Division d = weak_normal_form<true>(f, basis, order);
  if (order.is_local() && !is_unit_germ(d.unit))
    throw TheoremViolation("Mora division produced a non-unit multiplier");
  return d;
}

bool divides_locally(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  const Polynomial basis[] = {g};
  return mora_normal_form(f, basis).is_zero();
}

}  // namespace germ
