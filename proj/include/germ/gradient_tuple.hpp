#pragma once

#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// Candidate values for (df/dx_1, ..., df/dx_n), all in one ring.
class GradientTuple {
 public:
  explicit GradientTuple(std::vector<Polynomial> components);

  const Ring& ring() const noexcept { return components_.front().ring(); }
  std::size_t size() const noexcept { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const noexcept { return components_; }

  friend bool operator==(const GradientTuple&, const GradientTuple&) = default;

 private:
  std::vector<Polynomial> components_;
};

/// (df/dx_1, ..., df/dx_n), zero components included.
GradientTuple gradient(const Polynomial& f);

/// Mixed partials agree: dg_i/dx_j == dg_j/dx_i for all i < j. Over a field of
/// characteristic zero this is exactly the condition for g to be a gradient.
bool is_exact_tuple(const GradientTuple& g);

/// The unique f with f(0) = 0 and grad f = g, built degree by degree from
/// the Euler identity  sum_i x_i (df/dx_i)_{d-1} = d f_d.
/// Throws DomainError if g is not exact.
Polynomial euler_potential(const GradientTuple& g);

}  // namespace germ
