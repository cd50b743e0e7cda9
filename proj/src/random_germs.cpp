#include "germ/random_germs.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace germ {

std::size_t GermGenerator::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

std::int64_t GermGenerator::coefficient() {
  const auto c = std::uniform_int_distribution<std::int64_t>(1, 5)(rng_);
  return std::bernoulli_distribution(0.5)(rng_) ? c : -c;
}

Ring GermGenerator::ring(std::size_t nvars) {
  static std::mutex mutex;
  static std::vector<Ring> cache;
  std::lock_guard lock(mutex);
  if (cache.size() <= nvars) cache.resize(nvars + 1);
  if (!cache[nvars]) {
    std::vector<std::string> names;
    if (nvars <= 3) {
      names.assign({"x", "y", "z"});
      names.resize(nvars);
    } else {
      for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    }
    cache[nvars] = make_ring(std::move(names));
  }
  return cache[nvars];
}

Monomial GermGenerator::monomial(std::size_t nvars, std::uint64_t degree) {
  std::vector<Monomial::Exponent> e(nvars, 0);
  for (std::uint64_t k = 0; k < degree; ++k) ++e[uniform(0, nvars - 1)];
  return Monomial(std::move(e));
}

Polynomial GermGenerator::polynomial(const Ring& ring, std::uint64_t min_degree, std::uint64_t max_degree,
                                     std::size_t max_terms) {
  for (;;) {
    const std::size_t count = uniform(1, max_terms);
    std::vector<Polynomial::Term> terms;
    for (std::size_t t = 0; t < count; ++t)
      terms.emplace_back(monomial(ring->nvars(), uniform(min_degree, max_degree)), Rational(coefficient()));
    Polynomial p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

Polynomial GermGenerator::nonunit(const Ring& ring, std::uint64_t max_degree, std::size_t max_terms) {
  return polynomial(ring, 1, max_degree, max_terms);
}

Polynomial GermGenerator::smooth(const Ring& ring, std::uint64_t max_degree, std::size_t max_terms) {
  const Polynomial linear = Polynomial::term(ring, monomial(ring->nvars(), 1), coefficient());
  if (max_terms <= 1 || max_degree < 2) return linear;
  Polynomial tail = polynomial(ring, 2, max_degree, max_terms - 1);
  return linear + tail;
}

Polynomial GermGenerator::homogeneous(const Ring& ring, std::uint64_t degree, std::size_t max_terms) {
  return polynomial(ring, degree, degree, max_terms);
}

Polynomial GermGenerator::unit(const Ring& ring, std::uint64_t max_degree, std::size_t max_terms) {
  return Polynomial::constant(ring, 1) + polynomial(ring, 1, max_degree, max_terms);
}

CoordinateChange GermGenerator::linear_change(const Ring& ring, std::uint64_t truncation_degree) {
  const std::size_t n = ring->nvars();
  for (;;) {
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial image(ring);
      for (std::size_t j = 0; j < n; ++j) {
        const auto c = static_cast<std::int64_t>(uniform(0, 4)) - 2;
        matrix[i][j] = c;
        image += Polynomial::term(ring, Monomial::variable(n, j), c);
      }
      images.push_back(std::move(image));
    }
    if (sgn(determinant(matrix)) != 0) return CoordinateChange(std::move(images), truncation_degree);
  }
}

CoordinateChange GermGenerator::nonlinear_change(const Ring& ring, std::uint64_t truncation_degree,
                                                 std::uint64_t max_degree) {
  const CoordinateChange linear = linear_change(ring, truncation_degree);
  std::vector<Polynomial> images;
  for (const auto& image : linear.images())
    images.push_back(image + polynomial(ring, 2, std::max<std::uint64_t>(2, max_degree), 2));
  return CoordinateChange(std::move(images), truncation_degree);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace germ
