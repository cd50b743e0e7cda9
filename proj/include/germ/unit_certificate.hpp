#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "germ/mora.hpp"

namespace germ {

/// Searches for u with u(0) = 1 and polynomials a_i with u*f = sum_i a_i*basis[i],
/// every product of total degree at most `degree_bound`. Exact linear algebra
/// over Q. A hit proves local membership and is returned as a Division with
/// zero remainder; a miss proves nothing.
std::optional<Division> unit_multiple_certificate(const Polynomial& f, std::span<const Polynomial> basis,
                                                  std::uint64_t degree_bound);

/// Same search without recording the combination.
bool has_unit_multiple_certificate(const Polynomial& f, std::span<const Polynomial> basis,
                                   std::uint64_t degree_bound);

}  // namespace germ
