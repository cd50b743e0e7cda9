#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "germ/monomial.hpp"
#include "germ/rational.hpp"
#include "germ/ring.hpp"

namespace germ {

/// Sparse multivariate polynomial over Q, the finite representative of a germ.
///
/// Terms are kept sorted by the storage order of Monomial with no zero
/// coefficients, so equality is structural and the zero polynomial has no terms.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial term(Ring ring, Monomial m, const Rational& c);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  /// Largest total degree of a term; -1 for the zero polynomial.
  std::int64_t total_degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  /// *this += c * m * g, in a single merge.
  Polynomial& add_scaled(const Rational& c, const Monomial& m, const Polynomial& g);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Formal partial derivative with respect to variable `i` (0-based).
Polynomial partial_derivative(const Polynomial& f, std::size_t i);

/// Minimal total degree of a term. Throws DomainError for the zero polynomial.
std::uint64_t order_of(const Polynomial& f);

/// Nonzero constant term, i.e. invertible in the power series ring.
bool is_unit_germ(const Polynomial& f);

/// Drops every term of total degree > `degree`.
Polynomial truncate(const Polynomial& f, std::uint64_t degree);

/// Sum of the terms of total degree exactly `degree`.
Polynomial homogeneous_part(const Polynomial& f, std::uint64_t degree);

/// Clears denominators and the integer content; leading sign made positive
/// with respect to the storage order. Zero stays zero.
Polynomial primitive_part(const Polynomial& f);

/// truncate(a * b, degree) without forming the discarded products.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, std::uint64_t degree);

}  // namespace germ
