#pragma once

#include <string_view>

#include "germ/parse.hpp"
#include "germ/polynomial.hpp"
#include "germ/polynomial_format.hpp"
#include "germ/ring.hpp"

namespace germ::testing {

inline Polynomial P(std::string_view text, const Ring& ring) { return parse_expression(text, ring); }

inline Ring xy() { return make_ring({"x", "y"}); }
inline Ring xyz() { return make_ring({"x", "y", "z"}); }

}  // namespace germ::testing

namespace doctest {
template <typename T> struct StringMaker;
template <>
struct StringMaker<germ::Polynomial> {
  static String convert(const germ::Polynomial& f) { return germ::to_string(f).c_str(); }
};
}  // namespace doctest
