#include "germ/coordinate_change.hpp"

#include <limits>
#include <stdexcept>

#include "germ/errors.hpp"

namespace germ {

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

CoordinateChange::CoordinateChange(std::vector<Polynomial> images, std::uint64_t truncation_degree)
    : images_(std::move(images)), truncation_degree_(truncation_degree) {
  if (images_.empty()) throw DomainError("coordinate change needs one image per variable");
  const std::size_t n = images_.front().nvars();
  if (images_.size() != n) throw DomainError("coordinate change needs one image per variable");
  if (truncation_degree_ < 1) throw DomainError("truncation degree must be at least 1");
  std::vector<std::vector<Rational>> linear(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    require_same_ring(images_.front().ring(), images_[i].ring());
    if (is_unit_germ(images_[i]))
      throw DomainError("coordinate change image has a nonzero constant term");
    for (std::size_t j = 0; j < n; ++j)
      linear[i][j] = images_[i].coefficient(Monomial::variable(n, j));
  }
  if (sgn(determinant(std::move(linear))) == 0)
    throw DomainError("coordinate change has a singular linear part");
}

CoordinateChange CoordinateChange::identity(const Ring& ring, std::uint64_t truncation_degree) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(Polynomial::variable(ring, i));
  return CoordinateChange(std::move(images), truncation_degree);
}

bool CoordinateChange::is_linear() const noexcept {
  for (const auto& p : images_)
    for (const auto& t : p.terms())
      if (t.first.degree() != 1) return false;
  return true;
}

Polynomial CoordinateChange::jacobian_entry(std::size_t j, std::size_t i) const {
  return partial_derivative(images_.at(j), i);
}

namespace {

template <class Multiply>
Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& images, Multiply multiply,
                   std::uint64_t max_degree) {
  const std::size_t n = f.nvars();
  if (images.size() != n) throw DomainError("substitution needs one image per variable");
  for (const auto& p : images) require_same_ring(f.ring(), p.ring());

  // powers[i][e] = images[i]^e, built on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, std::size_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(f.ring(), 1));
    while (cache.size() <= e) cache.push_back(multiply(cache.back(), images[i]));
    return cache[e];
  };

  Polynomial result(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() > max_degree) continue;
    Polynomial term = Polynomial::constant(f.ring(), c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) term = multiply(term, power(i, m[i]));
    result += term;
  }
  return result;
}

}  // namespace

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  return compose(
      f, images, [](const Polynomial& a, const Polynomial& b) { return a * b; },
      std::numeric_limits<std::uint64_t>::max());
}

Polynomial truncate_compose(const Polynomial& f, const CoordinateChange& change) {
  const std::uint64_t d = change.truncation_degree();
  // Images have order >= 1, so a term of degree > D lands in m^{D+1}.
  return compose(
      f, change.images(),
      [d](const Polynomial& a, const Polynomial& b) { return multiply_truncated(a, b, d); }, d);
}

}  // namespace germ
