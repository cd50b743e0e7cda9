#include "germ/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace germ {

IdealPresentation::IdealPresentation(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

namespace {

Ring ring_of(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw std::invalid_argument("cannot infer the ring of an empty generator list");
  return generators.front().ring();
}

}  // namespace

IdealPresentation::IdealPresentation(std::vector<Polynomial> generators)
    : IdealPresentation(ring_of(generators), std::move(generators)) {}

bool IdealPresentation::has_unit_generator() const {
  return std::any_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return is_unit_germ(g); });
}

}  // namespace germ
