#pragma once

#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// Finitely many generators, read as an ideal of the local ring at the origin.
/// Zero entries and exact duplicates are dropped; first occurrences keep their order.
class IdealPresentation {
 public:
  IdealPresentation(Ring ring, std::vector<Polynomial> generators);
  /// Ring taken from the first generator; the list must be nonempty.
  explicit IdealPresentation(std::vector<Polynomial> generators);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }

  /// Some generator is a unit germ. In a local ring this is equivalent to the
  /// ideal being the whole ring.
  bool has_unit_generator() const;

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace germ
