#pragma once

#include <cstdint>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// A germ automorphism x_i -> images[i](u), computed modulo m^{D+1}.
///
/// Every image vanishes at the origin and the matrix of linear coefficients is
/// invertible over Q. The source and target rings share variable names.
class CoordinateChange {
 public:
  /// Throws DomainError if an image has a constant term or the linear part is singular.
  CoordinateChange(std::vector<Polynomial> images, std::uint64_t truncation_degree);

  static CoordinateChange identity(const Ring& ring, std::uint64_t truncation_degree);

  const Ring& ring() const noexcept { return images_.front().ring(); }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }
  std::uint64_t truncation_degree() const noexcept { return truncation_degree_; }

  /// All images are homogeneous linear forms.
  bool is_linear() const noexcept;

  /// d(image_j)/du_i, the Jacobian entry used by the chain rule.
  Polynomial jacobian_entry(std::size_t j, std::size_t i) const;

 private:
  std::vector<Polynomial> images_;
  std::uint64_t truncation_degree_;
};

/// Determinant of a square rational matrix (row-major), by exact elimination.
Rational determinant(std::vector<std::vector<Rational>> matrix);

/// f(images) computed exactly. Images must live in f's ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// theta(f) with every term of total degree > D dropped. Truncating after each
/// product gives the same result, since truncation is a congruence mod m^{D+1}.
Polynomial truncate_compose(const Polynomial& f, const CoordinateChange& change);

}  // namespace germ
