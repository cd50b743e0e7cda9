#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/coordinate_change.hpp"
#include "germ/gradient_tuple.hpp"
#include "germ/ideal.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// A germ f at the origin satisfying the standing hypothesis: f is nonzero and
/// not a unit. Construction throws DomainError otherwise.
class GermInput {
 public:
  explicit GermInput(Polynomial f);

  const Polynomial& f() const noexcept { return f_; }
  const Ring& ring() const noexcept { return f_.ring(); }

 private:
  Polynomial f_;
};

/// (df/dx_1, ..., df/dx_n) with zero partials dropped.
IdealPresentation gradient_ideal(const Polynomial& f);

/// (f, df/dx_1, ..., df/dx_n).
IdealPresentation jacobian_ideal(const Polynomial& f);

/// Q[[x]]/(f) is regular, i.e. the Jacobian ideal is the unit ideal.
/// Since f(0) = 0 this amounts to grad f(0) != 0.
bool smooth_at_origin(const Polynomial& f);

/// Q[[x]]/sqrt(f) is regular.
///
/// Decided as "the Jacobian ideal is principal or the unit ideal". In the
/// factorial ring Q[[x]] an ideal whose associated primes all have height one
/// is an intersection of powers of principal primes, hence principal, and a
/// principal ideal has only height-one associated primes; principality is
/// mu <= 1 by Nakayama.
bool reduced_regular_at_origin(const Polynomial& f);

/// Smallest k <= cap with f^k in the gradient ideal. Throws CapExceeded when
/// none is found; such a k always exists for a non-unit germ.
unsigned radical_membership_exponent(const Polynomial& f, unsigned cap);

/// Caller's assurance that a germ is squarefree. The library has no
/// multivariate gcd, so this is taken on trust from how the germ was built.
class SquarefreeWitness {
 public:
  static SquarefreeWitness asserted() { return SquarefreeWitness(); }

 private:
  SquarefreeWitness() = default;
};

/// dim Q[[x]]/(f, grad f) <= n - 2 (the unit ideal counts as dimension -1).
bool isolated_dimension_check(const Polynomial& f, SquarefreeWitness);

/// The implication "h^k divides every df/dx_i  =>  h^{k+1} divides f", with
/// divisibility taken in the local ring.
bool divpartials_check(const Polynomial& h, unsigned k, const Polynomial& f);

/// theta(f) modulo m^{D+1}.
Polynomial apply_coordinate_change(const Polynomial& f, const CoordinateChange& change);

/// The gradient ideal of theta(f) equals theta applied to the gradient ideal of f.
///
/// Linear changes are compared exactly through standard bases. Nonlinear ones
/// are compared with the truncated oracle at slack degree D - deg f; throws
/// DomainError if that slack is below 2.
bool gradient_invariance_check(const Polynomial& f, const CoordinateChange& change);

struct PrincipalGradient {
  std::optional<Polynomial> generator;
  /// Index of the partial derivative used as generator, when one was.
  std::optional<std::size_t> partial_index;
  std::string diagnostic;
};

/// If the gradient ideal is principal (or the unit ideal), a generator for it.
/// A single partial derivative is searched first; when the ideal is principal
/// one of them always generates it.
PrincipalGradient principal_gradient(const Polynomial& f);

std::optional<Polynomial> is_principal_gradient(const Polynomial& f);

struct MainTheoremVerdict {
  enum class Status { Pass, HypothesisNotMet, Violation };

  Status status = Status::HypothesisNotMet;
  std::optional<Polynomial> generator;
  /// Smallest k with f^k in (generator).
  std::optional<unsigned> radical_exponent;
  std::string note;
};

/// Principal gradient ideal (h)  =>  Q[[x]]/sqrt(h) regular. A Violation
/// status means the engine contradicts the theorem.
MainTheoremVerdict verify_main_theorem(const Polynomial& f, unsigned radical_cap);

struct AnalysisOptions {
  /// 0 selects the number of variables.
  unsigned radical_cap = 0;
  std::uint64_t truncation_degree = 12;
  /// Run the chain-rule check under a fixed nonlinear change of coordinates.
  bool chain_rule_check = true;
};

struct AnalysisReport {
  GermInput germ;
  GradientTuple gradient_gens;
  IdealPresentation jacobian_gens;
  bool smooth = false;
  std::size_t jacobian_mu = 0;
  bool reduced_regular = false;
  std::optional<Polynomial> principal_gradient;
  std::optional<unsigned> radical_exponent;
  std::vector<std::string> diagnostics;
  /// Stage name and wall time in milliseconds, in execution order.
  std::vector<std::pair<std::string, double>> timings;
};

/// Runs every check on one germ. Throws TheoremViolation if the results
/// contradict one another or a proved statement, CapExceeded if the radical
/// exponent search fails.
AnalysisReport analyze(const GermInput& germ, const AnalysisOptions& options = {});

}  // namespace germ
