#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace germ {

/// Exponent vector x^a. Stored densely; germs of interest have few variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  /// The unit monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// No variable occurs in both.
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// b / a; requires a.divides(b).
  friend Monomial quotient(const Monomial& b, const Monomial& a);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  /// Storage order: lexicographic on the exponent vector. Multiplicative, so
  /// shifting a sorted term list by a monomial keeps it sorted.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

}  // namespace germ
