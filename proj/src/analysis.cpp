#include "germ/analysis.hpp"

#include <chrono>

#include "germ/errors.hpp"
#include "germ/mora.hpp"
#include "germ/polynomial_format.hpp"
#include "germ/standard_basis.hpp"
#include "germ/truncated_oracle.hpp"

namespace germ {

namespace {

void require_germ(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("input is the zero polynomial");
  if (is_unit_germ(f)) throw DomainError("input is a unit germ");
}

bool mutually_contained(const IdealPresentation& a, const IdealPresentation& b) {
  const StandardBasis sa = standard_basis(a);
  const StandardBasis sb = standard_basis(b);
  for (const auto& g : b.generators())
    if (!ideal_membership_local(g, sa)) return false;
  for (const auto& g : a.generators())
    if (!ideal_membership_local(g, sb)) return false;
  return true;
}

bool mutually_contained_truncated(const IdealPresentation& a, const IdealPresentation& b, std::uint64_t degree) {
  const TruncatedIdeal ta(a, degree);
  const TruncatedIdeal tb(b, degree);
  for (const auto& g : b.generators())
    if (!ta.contains(g)) return false;
  for (const auto& g : a.generators())
    if (!tb.contains(g)) return false;
  return true;
}

class StageTimer {
 public:
  explicit StageTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}

  void lap(std::string stage) {
    const auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(std::move(stage), std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

GermInput::GermInput(Polynomial f) : f_(std::move(f)) { require_germ(f_); }

IdealPresentation gradient_ideal(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("gradient ideal of the zero polynomial");
  return IdealPresentation(f.ring(), gradient(f).components());
}

IdealPresentation jacobian_ideal(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("Jacobian ideal of the zero polynomial");
  std::vector<Polynomial> gens{f};
  const GradientTuple g = gradient(f);
  for (const auto& p : g.components()) gens.push_back(p);
  return IdealPresentation(f.ring(), std::move(gens));
}

bool smooth_at_origin(const Polynomial& f) {
  require_germ(f);
  return jacobian_ideal(f).has_unit_generator();
}

bool reduced_regular_at_origin(const Polynomial& f) {
  require_germ(f);
  return mu_local(jacobian_ideal(f)).count <= 1;
}

unsigned radical_membership_exponent(const Polynomial& f, unsigned cap) {
  require_germ(f);
  if (cap < 1) throw DomainError("radical exponent cap must be positive");
  const StandardBasis basis = standard_basis(gradient_ideal(f));
  Polynomial power = f;
  for (unsigned k = 1; k <= cap; ++k) {
    if (ideal_membership_local(power, basis)) return k;
    if (k < cap) power *= f;
  }
  throw CapExceeded("no power f^k with k <= " + std::to_string(cap) + " lies in the gradient ideal of " +
                    to_string(f));
}

bool isolated_dimension_check(const Polynomial& f, SquarefreeWitness) {
  require_germ(f);
  const int bound = static_cast<int>(f.nvars()) - 2;
  return local_dimension(jacobian_ideal(f)).value <= bound;
}

bool divpartials_check(const Polynomial& h, unsigned k, const Polynomial& f) {
  const Polynomial hk = pow(h, k);
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!divides_locally(hk, partial_derivative(f, i))) return true;
  return divides_locally(hk * h, f);
}

Polynomial apply_coordinate_change(const Polynomial& f, const CoordinateChange& change) {
  return truncate_compose(f, change);
}

bool gradient_invariance_check(const Polynomial& f, const CoordinateChange& change) {
  require_germ(f);
  require_same_ring(f.ring(), change.ring());
  const auto partials = gradient(f).components();

  if (change.is_linear()) {
    const Polynomial image = substitute(f, change.images());
    std::vector<Polynomial> pulled;
    for (const auto& p : partials) pulled.push_back(substitute(p, change.images()));
    return mutually_contained(gradient_ideal(image), IdealPresentation(f.ring(), std::move(pulled)));
  }

  const auto d = static_cast<std::int64_t>(change.truncation_degree()) - f.total_degree();
  if (d < 2) throw DomainError("truncation degree leaves slack " + std::to_string(d) + " < 2");
  const Polynomial image = truncate_compose(f, change);
  std::vector<Polynomial> pulled;
  for (const auto& p : partials) pulled.push_back(truncate_compose(p, change));
  return mutually_contained_truncated(IdealPresentation(f.ring(), gradient(image).components()),
                                      IdealPresentation(f.ring(), std::move(pulled)),
                                      static_cast<std::uint64_t>(d));
}

PrincipalGradient principal_gradient(const Polynomial& f) {
  require_germ(f);
  const auto partials = gradient(f).components();
  for (std::size_t i = 0; i < partials.size(); ++i) {
    if (partials[i].is_zero()) continue;
    bool generates = true;
    for (std::size_t j = 0; j < partials.size() && generates; ++j)
      generates = j == i || divides_locally(partials[i], partials[j]);
    if (generates) return {partials[i], i, {}};
  }

  const MinimalGenerators mu = mu_local(gradient_ideal(f));
  if (mu.count <= 1 && !mu.unit) {
    return {mu.generators.front(), std::nullopt,
            "gradient ideal is principal but no single partial derivative generates it"};
  }
  return {std::nullopt, std::nullopt, "gradient ideal needs " + std::to_string(mu.count) + " generators"};
}

std::optional<Polynomial> is_principal_gradient(const Polynomial& f) { return principal_gradient(f).generator; }

MainTheoremVerdict verify_main_theorem(const Polynomial& f, unsigned radical_cap) {
  using Status = MainTheoremVerdict::Status;
  MainTheoremVerdict verdict;
  PrincipalGradient pg = principal_gradient(f);
  if (!pg.generator) {
    verdict.status = Status::HypothesisNotMet;
    verdict.note = "theorem hypothesis not met: " + pg.diagnostic;
    return verdict;
  }
  const Polynomial& h = *pg.generator;
  verdict.generator = h;

  Polynomial power = f;
  for (unsigned k = 1; k <= radical_cap; ++k) {
    if (divides_locally(h, power)) {
      verdict.radical_exponent = k;
      break;
    }
    if (k < radical_cap) power *= f;
  }
  if (!verdict.radical_exponent) {
    verdict.status = Status::Violation;
    verdict.note = "no power f^k with k <= " + std::to_string(radical_cap) + " lies in the principal gradient ideal";
    return verdict;
  }

  if (is_unit_germ(h)) {
    verdict.status = Status::Pass;
    verdict.note = "gradient ideal is the unit ideal; the gradient scheme is empty at the origin";
    return verdict;
  }
  if (!reduced_regular_at_origin(h)) {
    verdict.status = Status::Violation;
    verdict.note = "reduced quotient by the principal gradient generator " + to_string(h) + " is not regular";
    return verdict;
  }
  verdict.status = Status::Pass;
  verdict.note = "principal gradient generator " + to_string(h) + " has a regular reduced quotient";
  return verdict;
}

AnalysisReport analyze(const GermInput& germ, const AnalysisOptions& options) {
  const Polynomial& f = germ.f();
  const unsigned cap = options.radical_cap != 0 ? options.radical_cap : static_cast<unsigned>(f.nvars());

  AnalysisReport report{.germ = germ,
                        .gradient_gens = gradient(f),
                        .jacobian_gens = jacobian_ideal(f),
                        .principal_gradient = std::nullopt,
                        .radical_exponent = std::nullopt,
                        .diagnostics = {},
                        .timings = {}};
  StageTimer timer(report.timings);
  timer.lap("ideals");

  report.smooth = report.jacobian_gens.has_unit_generator();
  const MinimalGenerators jac_mu = mu_local(report.jacobian_gens);
  report.jacobian_mu = jac_mu.count;
  report.reduced_regular = jac_mu.count <= 1;
  if (report.smooth) report.diagnostics.push_back("Jacobian ideal is the unit ideal");
  timer.lap("jacobian_mu");

  const PrincipalGradient pg = principal_gradient(f);
  report.principal_gradient = pg.generator;
  if (!pg.diagnostic.empty()) report.diagnostics.push_back(pg.diagnostic);
  timer.lap("principal_gradient");

  report.radical_exponent = radical_membership_exponent(f, cap);
  timer.lap("radical_exponent");

  if (report.smooth && (!report.reduced_regular || report.jacobian_mu != 0))
    throw TheoremViolation("smooth germ without a unit Jacobian ideal: " + to_string(f));

  const MainTheoremVerdict main = verify_main_theorem(f, cap);
  report.diagnostics.push_back("main theorem: " + main.note);
  if (main.status == MainTheoremVerdict::Status::Violation) throw TheoremViolation(main.note);
  timer.lap("main_theorem");

  if (options.chain_rule_check) {
    const auto slack = static_cast<std::int64_t>(options.truncation_degree) - f.total_degree();
    if (slack < 2) {
      report.diagnostics.push_back("chain-rule check skipped: truncation degree " +
                                   std::to_string(options.truncation_degree) + " too small");
    } else {
      // x_i -> x_i + x_{i+1}^2, indices cyclic.
      std::vector<Polynomial> images;
      const std::size_t n = f.nvars();
      for (std::size_t i = 0; i < n; ++i) {
        const Polynomial next = Polynomial::variable(f.ring(), (i + 1) % n);
        images.push_back(Polynomial::variable(f.ring(), i) + next * next);
      }
      const CoordinateChange change(std::move(images), options.truncation_degree);
      if (!gradient_invariance_check(f, change))
        throw TheoremViolation("gradient ideal not invariant under a change of coordinates: " + to_string(f));
      report.diagnostics.push_back("chain-rule check passed modulo m^" + std::to_string(slack + 1));
    }
    timer.lap("chain_rule");
  }
  return report;
}

}  // namespace germ
