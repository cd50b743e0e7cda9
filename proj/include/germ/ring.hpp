#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace germ {

/// The ambient ring Q[x_1, ..., x_n], used as a stand-in for Q[[x_1, ..., x_n]].
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> names);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// Index of the variable called `name`, or nvars() if absent.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(std::vector<std::string> names);
Ring make_ring(std::initializer_list<const char*> names);

/// Same variables in the same order.
bool same_ring(const Ring& a, const Ring& b) noexcept;

/// Throws ContextMismatch unless same_ring(a, b).
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace germ
