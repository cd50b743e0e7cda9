#pragma once

#include <span>
#include <vector>

#include "germ/monomial_order.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// Result of a cofactor-tracked division:  unit * f - remainder == sum_i cofactors[i] * basis[i],
/// where `unit` has nonzero constant term (so it is invertible in the local ring).
struct Division {
  Polynomial remainder;
  Polynomial unit;
  std::vector<Polynomial> cofactors;
};

/// Mora's weak normal form of f with respect to `basis`: some unit u makes
/// u*f - result a member of the ideal, so f itself differs from the result by
/// a member only up to that unit.
///
/// Leading terms are cancelled against the eligible divisor of least ecart
/// (earliest on ties); whenever that divisor has larger ecart than the
/// current remainder, the remainder itself joins the divisor set. The result
/// is zero or has a leading monomial divisible by no basis leading monomial.
///
/// With a global order the loop is ordinary top-reduction.
///
/// Local reduction can need thousands of steps with huge coefficients even for
/// small inputs. The loop therefore runs under a step and coefficient-size
/// budget; on overrun a unit-multiple certificate (see unit_certificate.hpp) is
/// sought, and a hit yields remainder zero, a valid weak normal form because f
/// then lies in the ideal. Only if no certificate is found does the loop rerun
/// without a budget.
///
/// When the basis leading monomials contain a pure power of every variable,
/// m^d lies in the ideal for the least such d and the untracked form works
/// modulo m^d. Its result is then zero exactly when f is a member.
Polynomial mora_normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                            const MonomialOrder& order = MonomialOrder::local());

/// Same reduction, additionally returning the certificate described by Division.
Division mora_division(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order = MonomialOrder::local());

/// Local membership of f in the principal ideal (g). A single polynomial is
/// always a standard basis of the ideal it generates.
bool divides_locally(const Polynomial& g, const Polynomial& f);

}  // namespace germ
