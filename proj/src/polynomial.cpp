#include "germ/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "germ/errors.hpp"

namespace germ {

namespace {

using Term = Polynomial::Term;

bool by_monomial(const Term& a, const Term& b) { return a.first < b.first; }

// Sorts, merges duplicates and drops zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), by_monomial);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].second;
    while (j < terms.size() && terms[j].first == terms[i].first) sum += terms[j++].second;
    if (sgn(sum) != 0) {
      if (out != i) terms[out].first = std::move(terms[i].first);
      terms[out].second = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// a + c*m*b for sorted inputs; `m` may be empty (meaning the unit monomial).
std::vector<Term> merge(const std::vector<Term>& a, const Rational& c, const Monomial* m,
                        std::span<const Term> b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  auto shift = [&](const Monomial& x) -> const Monomial& {
    if (m == nullptr) return x;
    shifted = x * *m;
    return shifted;
  };
  while (i < a.size() && j < b.size()) {
    const Monomial& mb = shift(b[j].first);
    if (a[i].first < mb) {
      out.push_back(a[i++]);
    } else if (mb < a[i].first) {
      out.emplace_back(mb, c * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + c * b[j].second;
      if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.emplace_back(shift(b[j].first), c * b[j].second);
  return out;
}

}  // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(ring);
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial(ring->nvars()), c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  if (i >= ring->nvars()) throw std::out_of_range("variable index out of range");
  return term(ring, Monomial::variable(ring->nvars(), i), 1);
}

Polynomial Polynomial::term(Ring ring, Monomial m, const Rational& c) {
  if (m.nvars() != ring->nvars()) throw ContextMismatch();
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.first.nvars() != ring->nvars()) throw ContextMismatch();
  Polynomial p(std::move(ring));
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Rational Polynomial::constant_term() const {
  // The unit monomial is the smallest in storage order.
  if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
  return 0;
}

std::int64_t Polynomial::total_degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.first.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.first.degree() != terms_.front().first.degree()) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge(terms_, Rational(1), nullptr, other.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge(terms_, Rational(-1), nullptr, other.terms_);
  return *this;
}

Polynomial& Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& g) {
  require_same_ring(ring_, g.ring_);
  if (sgn(c) == 0) return *this;
  terms_ = merge(terms_, c, m.is_one() ? nullptr : &m, g.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  Polynomial r(a.ring_);
  normalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.ring(), 1);
  Polynomial square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.nvars()) throw std::out_of_range("partial derivative: variable index out of range");
  std::vector<Polynomial::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    const auto e = m[i];
    if (e == 0) continue;
    out.emplace_back(quotient(m, Monomial::variable(f.nvars(), i)), c * e);
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

std::uint64_t order_of(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("order of the zero polynomial is undefined");
  std::uint64_t d = std::numeric_limits<std::uint64_t>::max();
  for (const auto& t : f.terms()) d = std::min(d, t.first.degree());
  return d;
}

bool is_unit_germ(const Polynomial& f) { return sgn(f.constant_term()) != 0; }

Polynomial truncate(const Polynomial& f, std::uint64_t degree) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms())
    if (t.first.degree() <= degree) out.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial homogeneous_part(const Polynomial& f, std::uint64_t degree) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms())
    if (t.first.degree() == degree) out.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den = 1, num = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.second.get_num_mpz_t());
  }
  Rational scale(den, num);
  if (sgn(f.terms().front().second) < 0) scale = -scale;
  scale.canonicalize();
  return f * scale;
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, std::uint64_t degree) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial::Term> prod;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() > degree) continue;
    for (const auto& [mb, cb] : b.terms())
      if (ma.degree() + mb.degree() <= degree) prod.emplace_back(ma * mb, ca * cb);
  }
  return Polynomial::from_terms(a.ring(), std::move(prod));
}

}  // namespace germ
