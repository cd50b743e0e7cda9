#pragma once

#include <string>

#include "germ/monomial_order.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// Canonical text form: terms in descending `order`, coefficients in lowest
/// terms, `*` between factors, `^` for powers. Zero prints as "0".
///
///   to_string(y^2 - x^3) == "y^2 - x^3"      (local order, lowest degree first)
std::string to_string(const Polynomial& f, const MonomialOrder& order = MonomialOrder::local());

}  // namespace germ
