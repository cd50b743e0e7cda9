#pragma once

#include <gmpxx.h>

#include <string>

namespace germ {

/// Exact rationals, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace germ
