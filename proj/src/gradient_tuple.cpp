#include "germ/gradient_tuple.hpp"

#include <stdexcept>

#include "germ/errors.hpp"

namespace germ {

GradientTuple::GradientTuple(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("gradient tuple needs at least one component");
  for (const auto& c : components_) require_same_ring(components_.front().ring(), c.ring());
  if (components_.size() != components_.front().nvars())
    throw std::invalid_argument("gradient tuple length must equal the number of variables");
}

GradientTuple gradient(const Polynomial& f) {
  std::vector<Polynomial> parts;
  parts.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) parts.push_back(partial_derivative(f, i));
  return GradientTuple(std::move(parts));
}

bool is_exact_tuple(const GradientTuple& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (partial_derivative(g[i], j) != partial_derivative(g[j], i)) return false;
  return true;
}

Polynomial euler_potential(const GradientTuple& g) {
  if (!is_exact_tuple(g)) throw DomainError("tuple is not a gradient: mixed partials disagree");
  const Ring& ring = g.ring();
  Polynomial radial(ring);
  for (std::size_t i = 0; i < g.size(); ++i) radial += Polynomial::variable(ring, i) * g[i];

  // Every term of x_i * g_i has degree >= 1, so dividing by the degree is safe.
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : radial.terms()) terms.emplace_back(m, c / Rational(m.degree()));
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace germ
