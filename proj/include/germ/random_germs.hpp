#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "germ/coordinate_change.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// Seeded source of random germs. Coefficients are nonzero integers in [-5, 5].
class GermGenerator {
 public:
  explicit GermGenerator(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi);
  std::int64_t coefficient();

  /// Ring on x, y, z for up to three variables, x1..xn beyond.
  static Ring ring(std::size_t nvars);

  Monomial monomial(std::size_t nvars, std::uint64_t degree);

  /// Up to `max_terms` terms with degrees in [min_degree, max_degree].
  Polynomial polynomial(const Ring& ring, std::uint64_t min_degree, std::uint64_t max_degree,
                        std::size_t max_terms);
  /// A nonzero germ vanishing at the origin.
  Polynomial nonunit(const Ring& ring, std::uint64_t max_degree, std::size_t max_terms);
  /// A germ with nonzero linear part.
  Polynomial smooth(const Ring& ring, std::uint64_t max_degree, std::size_t max_terms);
  Polynomial homogeneous(const Ring& ring, std::uint64_t degree, std::size_t max_terms);
  /// 1 plus a non-unit tail.
  Polynomial unit(const Ring& ring, std::uint64_t max_degree, std::size_t max_terms);

  CoordinateChange linear_change(const Ring& ring, std::uint64_t truncation_degree);
  /// Invertible linear part plus higher-order terms up to `max_degree`.
  CoordinateChange nonlinear_change(const Ring& ring, std::uint64_t truncation_degree, std::uint64_t max_degree);

 private:
  std::mt19937_64 rng_;
};

/// Independent per-trial seed so trials can run in any order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t trial);

}  // namespace germ
