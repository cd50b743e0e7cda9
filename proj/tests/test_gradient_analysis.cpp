#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germ/analysis.hpp"
#include "germ/errors.hpp"
#include "germ/mora.hpp"
#include "germ/random_germs.hpp"
#include "germ/standard_basis.hpp"
#include "germ/truncated_oracle.hpp"
#include "support/fixtures.hpp"

using namespace germ;
using germ::testing::P;

namespace {

bool same_local_ideal(const IdealPresentation& a, const IdealPresentation& b) {
  for (const auto& g : b.generators())
    if (!ideal_membership_local(g, a)) return false;
  for (const auto& g : a.generators())
    if (!ideal_membership_local(g, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("gradient and Jacobian ideals") {
  const Ring X = make_ring({"x1"});
  for (unsigned k = 1; k <= 4; ++k) {
    const Polynomial f = pow(P("x1", X), k);
    CHECK(gradient_ideal(f).generators() == std::vector{Rational(k) * pow(P("x1", X), k - 1)});
    if (k >= 2) CHECK(same_local_ideal(jacobian_ideal(f), IdealPresentation(X, {pow(P("x1", X), k - 1)})));
  }
  const Ring R = germ::testing::xy();
  CHECK(gradient_ideal(P("y^2 - x^3", R)).generators() == std::vector{P("-3*x^2", R), P("2*y", R)});
  CHECK(jacobian_ideal(P("x^2*y^2", R)).generators() ==
        std::vector{P("x^2*y^2", R), P("2*x*y^2", R), P("2*x^2*y", R)});
  CHECK(jacobian_ideal(P("x + x^2 + y^3", R)).has_unit_generator());
  // Zero partials are dropped.
  CHECK(gradient_ideal(P("x^3", R)).size() == 1);
  CHECK_THROWS_AS(gradient_ideal(Polynomial(R)), DomainError);
  CHECK_THROWS_AS(jacobian_ideal(Polynomial(R)), DomainError);

  const Polynomial g = P("x + x^2 + y^3", R);
  for (unsigned k = 2; k <= 3; ++k) {
    const auto gens = gradient(pow(g, k));
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(gens[i] == Rational(k) * pow(g, k - 1) * partial_derivative(g, i));
  }
}

TEST_CASE("smoothness") {
  const Ring R = germ::testing::xy();
  CHECK(smooth_at_origin(P("x + x^2 + y^3", R)));
  CHECK_FALSE(smooth_at_origin(P("y^2 - x^3", R)));
  CHECK_FALSE(smooth_at_origin(P("x*y", R)));
  CHECK_THROWS_AS(smooth_at_origin(P("1 + x", R)), DomainError);
  CHECK_THROWS_AS(smooth_at_origin(Polynomial(R)), DomainError);
}

TEST_CASE("regularity of the reduced quotient") {
  const Ring X = make_ring({"x1"});
  for (unsigned k = 1; k <= 4; ++k) CHECK(reduced_regular_at_origin(pow(P("x1", X), k)));
  const Ring R = germ::testing::xy();
  CHECK_FALSE(reduced_regular_at_origin(P("y^2 - x^3", R)));
  CHECK_FALSE(reduced_regular_at_origin(P("x^2*y^2", R)));
  CHECK(reduced_regular_at_origin(pow(P("x + x^2 + y^3", R), 3)));
  CHECK_THROWS_AS(reduced_regular_at_origin(P("2 - y", R)), DomainError);

  // Independent confirmation of the two-generator Jacobian ideals.
  const IdealPresentation cusp = jacobian_ideal(P("y^2 - x^3", R));
  CHECK(truncated_membership_oracle(P("x^2", R), cusp, 10));
  CHECK(truncated_membership_oracle(P("y", R), cusp, 10));
  CHECK_FALSE(truncated_membership_oracle(P("x", R), cusp, 10));
}

TEST_CASE("radical membership exponent") {
  const Ring X = make_ring({"x"});
  for (unsigned k = 1; k <= 5; ++k) CHECK(radical_membership_exponent(pow(P("x", X), k), 1) == 1);
  const Ring R = germ::testing::xy();
  CHECK(radical_membership_exponent(P("x^2*y + y^3", R), 2) == 1);

  const Polynomial f = P("x^5 + y^5 + x^3*y^3", R);
  const unsigned k = radical_membership_exponent(f, 2);
  CHECK(k >= 1);
  CHECK(k <= 2);
  // The oracle separates f from the gradient ideal and admits f^2.
  const TruncatedIdeal grad(gradient_ideal(f), 10);
  CHECK_FALSE(grad.contains(f));
  CHECK(grad.contains(truncate(f * f, 10)));
  CHECK(k == 2);
  CHECK_THROWS_AS(radical_membership_exponent(f, 1), CapExceeded);
  CHECK_THROWS_AS(radical_membership_exponent(f, 0), DomainError);
}

TEST_CASE("isolated dimension") {
  const Ring R = germ::testing::xy();
  const auto sq = SquarefreeWitness::asserted();
  CHECK(isolated_dimension_check(P("x*y", R), sq));
  CHECK(isolated_dimension_check(P("x", R), sq));
  CHECK(isolated_dimension_check(P("y^2 - x^3", R), sq));
  CHECK(local_dimension(jacobian_ideal(P("x*y", R))) == DimensionValue{0});
  CHECK(local_dimension(jacobian_ideal(P("x", R))) == DimensionValue{-1});
  // Not squarefree: the double line is singular along a curve.
  CHECK_FALSE(isolated_dimension_check(P("x^2", R), sq));
}

TEST_CASE("divisibility of partials") {
  const Ring R = germ::testing::xy();
  const Polynomial h = P("x + y^2", R);
  const Polynomial g = P("1 + x", R);
  CHECK(divpartials_check(h, 2, pow(h, 3) * g));
  for (std::size_t i = 0; i < 2; ++i) CHECK(divides_locally(pow(h, 2), partial_derivative(pow(h, 3) * g, i)));
  CHECK(divides_locally(pow(h, 3), pow(h, 3) * g));
  // Hypothesis false: the implication holds vacuously.
  CHECK(divpartials_check(h, 1, h * P("y", R)));
  CHECK_FALSE(divides_locally(h, partial_derivative(h * P("y", R), 1)));
  // With the cusp as irreducible factor.
  const Polynomial cusp = P("y^2 - x^3", R);
  CHECK(divpartials_check(cusp, 1, pow(cusp, 2) * P("1 - y", R)));
}

TEST_CASE("divisibility of partials on constructed families") {
  GermGenerator gen(71);
  for (int t = 0; t < 40; ++t) {
    const Ring S = GermGenerator::ring(gen.uniform(1, 3));
    const Polynomial h = gen.smooth(S, 3, 3);
    const Polynomial g = gen.unit(S, 2, 2);
    const auto k = static_cast<unsigned>(gen.uniform(1, 3));
    const Polynomial f = pow(h, k + 1) * g;
    CHECK(divpartials_check(h, k, f));
    for (std::size_t i = 0; i < S->nvars(); ++i) CHECK(divides_locally(pow(h, k), partial_derivative(f, i)));
    CHECK(divides_locally(pow(h, k + 1), f));
  }
}

TEST_CASE("coordinate changes") {
  const Ring R = germ::testing::xy();
  const Polynomial cusp = P("y^2 - x^3", R);
  CHECK(apply_coordinate_change(cusp, CoordinateChange::identity(R, 12)) == cusp);
  const CoordinateChange swap({P("y", R), P("x", R)}, 12);
  CHECK(apply_coordinate_change(cusp, swap) == P("x^2 - y^3", R));
  const Ring U = make_ring({"u"});
  CHECK(apply_coordinate_change(P("u^2", U), CoordinateChange({P("u + u^2", U)}, 3)) == P("u^2 + 2*u^3", U));

  CHECK(gradient_invariance_check(cusp, CoordinateChange::identity(R, 12)));
  CHECK(gradient_invariance_check(cusp, CoordinateChange({P("x + y", R), P("y", R)}, 12)));
  CHECK(gradient_invariance_check(P("u^2", U), CoordinateChange({P("u + u^2", U)}, 8)));
  CHECK_THROWS_AS(gradient_invariance_check(P("u^2", U), CoordinateChange({P("u + u^2", U)}, 3)), DomainError);
}

TEST_CASE("coordinate invariance on random germs") {
  GermGenerator gen(81);
  for (int t = 0; t < 30; ++t) {
    const Ring S = GermGenerator::ring(gen.uniform(1, 3));
    const Polynomial f = gen.nonunit(S, 4, 3);
    CHECK(gradient_invariance_check(f, gen.linear_change(S, 12)));
    CHECK(gradient_invariance_check(f, gen.nonlinear_change(S, 12, 3)));
  }
}

TEST_CASE("principal gradient") {
  const Ring R = germ::testing::xy();
  const Polynomial g = P("x + y^2", R);
  const PrincipalGradient pg = principal_gradient(pow(g, 2));
  REQUIRE(pg.generator.has_value());
  CHECK(*pg.generator == Rational(2) * g);
  CHECK(pg.partial_index == 0);
  CHECK(divides_locally(partial_derivative(pow(g, 2), 0), partial_derivative(pow(g, 2), 1)));

  CHECK_FALSE(is_principal_gradient(P("y^2 - x^3", R)).has_value());
  const Ring S = germ::testing::xyz();
  CHECK(is_principal_gradient(P("x^3", S)) == P("3*x^2", S));
  CHECK(is_principal_gradient(P("x + y^3", R)) == Polynomial::constant(R, 1));
}

TEST_CASE("main theorem verdicts") {
  const Ring X = make_ring({"x1"});
  const MainTheoremVerdict cube = verify_main_theorem(pow(P("x1", X), 3), 1);
  CHECK(cube.status == MainTheoremVerdict::Status::Pass);
  CHECK(cube.generator == P("3*x1^2", X));
  CHECK(cube.radical_exponent == 1u);

  const Ring R = germ::testing::xy();
  const MainTheoremVerdict sq = verify_main_theorem(P("(x + y^2)^2", R), 2);
  CHECK(sq.status == MainTheoremVerdict::Status::Pass);
  REQUIRE(sq.generator.has_value());
  CHECK(smooth_at_origin(*sq.generator));
  CHECK(mu_local(jacobian_ideal(*sq.generator)).count == 0);

  const MainTheoremVerdict cusp = verify_main_theorem(P("y^2 - x^3", R), 2);
  CHECK(cusp.status == MainTheoremVerdict::Status::HypothesisNotMet);
  CHECK_FALSE(cusp.generator.has_value());
}

TEST_CASE("analysis reports") {
  const Ring R = germ::testing::xy();
  const AnalysisReport smooth = analyze(GermInput(P("x + y^3", R)));
  CHECK(smooth.smooth);
  CHECK(smooth.reduced_regular);
  CHECK(smooth.jacobian_mu == 0);

  const AnalysisReport cross = analyze(GermInput(P("x^2*y^2", R)));
  CHECK_FALSE(cross.smooth);
  CHECK_FALSE(cross.reduced_regular);
  CHECK(cross.jacobian_mu == 2);
  CHECK_FALSE(cross.principal_gradient.has_value());

  const Ring X = make_ring({"x1"});
  const AnalysisReport quartic = analyze(GermInput(P("x1^4", X)));
  CHECK_FALSE(quartic.smooth);
  CHECK(quartic.reduced_regular);
  CHECK(quartic.principal_gradient == P("4*x1^3", X));
  CHECK(quartic.radical_exponent == 1u);

  CHECK_THROWS_AS(GermInput(P("1 + x", R)), DomainError);
  CHECK_THROWS_AS(GermInput(Polynomial(R)), DomainError);
}

TEST_CASE("analysis properties on random germs") {
  GermGenerator gen(91);
  for (int t = 0; t < 60; ++t) {
    const Ring S = GermGenerator::ring(gen.uniform(1, 3));
    const Polynomial f = gen.nonunit(S, 4, 3);
    const bool regular = reduced_regular_at_origin(f);
    if (smooth_at_origin(f)) CHECK(regular);

    const Polynomial u = gen.unit(S, 2, 2);
    CHECK(same_local_ideal(jacobian_ideal(u * f), jacobian_ideal(f)));

    CHECK(reduced_regular_at_origin(pow(f, 2)) == regular);
    if (t % 3 == 0) CHECK(reduced_regular_at_origin(pow(f, 3)) == regular);

    const Polynomial hom = gen.homogeneous(S, gen.uniform(1, 4), 3);
    CHECK(radical_membership_exponent(hom, static_cast<unsigned>(S->nvars())) == 1);
  }
}
