#include "germ/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "germ/errors.hpp"

namespace germ {

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("variable names must be nonempty");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::size_t RingContext::index_of(const std::string& name) const {
  return static_cast<std::size_t>(std::find(names_.begin(), names_.end(), name) - names_.begin());
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const RingContext>(std::move(names));
}

Ring make_ring(std::initializer_list<const char*> names) {
  return make_ring(std::vector<std::string>(names.begin(), names.end()));
}

bool same_ring(const Ring& a, const Ring& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw ContextMismatch();
}

}  // namespace germ
