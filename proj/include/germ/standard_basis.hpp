#pragma once

#include <cstddef>
#include <vector>

#include "germ/ideal.hpp"
#include "germ/monomial_order.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// Generators whose leading monomials generate the leading ideal of `source`
/// under `order`. For the local order this is a standard basis of the ideal in
/// the local ring at the origin; every element is primitive with positive
/// leading coefficient.
struct StandardBasis {
  std::vector<Polynomial> elements;
  MonomialOrder order = MonomialOrder::local();
  IdealPresentation source;

  std::vector<Monomial> leading_monomials() const;
  /// The basis is {1}: the source ideal is the whole ring.
  bool is_unit() const;
};

/// Buchberger-style completion with Mora normal forms. Pairs are processed by
/// increasing lcm degree, then creation order; pairs with coprime leading
/// monomials and pairs covered by Buchberger's chain criterion are skipped.
/// The result is minimal: no leading monomial divides another.
StandardBasis standard_basis(const IdealPresentation& ideal,
                             const MonomialOrder& order = MonomialOrder::local());

/// f lies in the ideal's extension to the local ring.
bool ideal_membership_local(const Polynomial& f, const IdealPresentation& ideal);
bool ideal_membership_local(const Polynomial& f, const StandardBasis& basis);

/// Krull dimension of the localized quotient; -1 stands for the unit ideal.
struct DimensionValue {
  int value;
  friend bool operator==(DimensionValue, DimensionValue) = default;
};

DimensionValue local_dimension(const IdealPresentation& ideal);

/// Dimension of Q[x]/(monomials): the largest set of variables that contains
/// the support of none of the monomials.
int monomial_ideal_dimension(std::size_t nvars, const std::vector<Monomial>& monomials);

/// Minimal number of generators in the local ring.
struct MinimalGenerators {
  std::size_t count = 0;
  std::vector<Polynomial> generators;
  /// Unit ideal; count is 0 by convention.
  bool unit = false;
};

/// Greedy Nakayama elimination: drop any generator that lies in the ideal of
/// the others until none can be dropped. The surviving count does not depend
/// on the order of elimination. Single-generator containments are tried first
/// because they need no completion.
MinimalGenerators mu_local(const IdealPresentation& ideal);

}  // namespace germ
