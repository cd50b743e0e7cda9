#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germ/coordinate_change.hpp"
#include "germ/errors.hpp"
#include "germ/gradient_tuple.hpp"
#include "germ/monomial_order.hpp"
#include "germ/random_germs.hpp"
#include "support/fixtures.hpp"

using namespace germ;
using germ::testing::P;

TEST_CASE("ring arithmetic") {
  const Ring R = germ::testing::xy();
  CHECK(P("x + y", R) * P("x - y", R) == P("x^2 - y^2", R));
  CHECK((P("x^3 - 2*y", R) * Polynomial(R)).is_zero());
  CHECK(pow(P("x + y^2", R), 2) == P("x^2 + 2*x*y^2 + y^4", R));
  CHECK(pow(P("x", R), 0) == Polynomial::constant(R, 1));
  CHECK((P("1/2*x", R) * Rational(4)) == P("2*x", R));
  CHECK((P("x + y", R) - P("x + y", R)).is_zero());
  CHECK(P("x + y", R).size() == 2);
}

TEST_CASE("arithmetic across rings is rejected") {
  const Polynomial a = P("x", make_ring({"x", "y"}));
  const Polynomial b = P("x", make_ring({"x", "z"}));
  CHECK_THROWS_AS(a + b, ContextMismatch);
  CHECK_THROWS_AS(a * b, ContextMismatch);
  // Structurally equal rings from separate make_ring calls interoperate.
  CHECK_NOTHROW(a + P("y", make_ring({"x", "y"})));
}

TEST_CASE("ring construction") {
  CHECK_THROWS(make_ring(std::vector<std::string>{}));
  CHECK_THROWS(make_ring({"x", "x"}));
  CHECK_THROWS(make_ring({"x", ""}));
  const Ring R = germ::testing::xyz();
  CHECK(R->index_of("z") == 2);
  CHECK(R->index_of("w") == 3);
}

TEST_CASE("partial derivatives") {
  const Ring R = germ::testing::xy();
  CHECK(partial_derivative(P("y^2 - x^3", R), 0) == P("-3*x^2", R));
  CHECK(partial_derivative(P("7/3", R), 1).is_zero());
  CHECK(partial_derivative(P("x^2*y^2", R), 1) == P("2*x^2*y", R));
  CHECK_THROWS_AS(partial_derivative(P("x", R), 2), std::out_of_range);
}

TEST_CASE("order and unit germs") {
  const Ring R = germ::testing::xy();
  CHECK(order_of(P("x^2*y + x^5", R)) == 3);
  CHECK(order_of(P("5", R)) == 0);
  CHECK(order_of(P("x + y^2", R)) == 1);
  CHECK_THROWS_AS(order_of(Polynomial(R)), DomainError);

  CHECK(is_unit_germ(P("1 + x", R)));
  CHECK_FALSE(is_unit_germ(P("x - x^3", R)));
  CHECK_FALSE(is_unit_germ(Polynomial(R)));
}

TEST_CASE("truncation helpers") {
  const Ring R = germ::testing::xy();
  const Polynomial f = P("1 + x + x*y + y^3 + x^4", R);
  CHECK(truncate(f, 2) == P("1 + x + x*y", R));
  CHECK(homogeneous_part(f, 3) == P("y^3", R));
  CHECK(multiply_truncated(f, f, 3) == truncate(f * f, 3));
  CHECK(primitive_part(P("1/2*x + 3/4*y", R)) == P("2*x + 3*y", R));
}

TEST_CASE("monomial orders") {
  const Monomial one{0, 0}, x{1, 0}, y{0, 1}, x2{2, 0}, xy{1, 1}, y2{0, 2};
  const auto local = MonomialOrder::local();
  const auto grevlex = MonomialOrder::degrevlex();
  const auto lex = MonomialOrder::lex();

  CHECK(local.greater(one, x));
  CHECK(local.greater(x, x2));
  CHECK(grevlex.greater(x, one));
  CHECK(lex.greater(x, y2));
  CHECK(grevlex.greater(x2, xy));
  CHECK(grevlex.greater(xy, y2));
  CHECK(local.greater(x, y));
  CHECK_FALSE(grevlex.greater(y2, x2));

  const Ring R = germ::testing::xy();
  CHECK(local.leading_monomial(P("x - x^2", R)) == x);
  CHECK(local.ecart(P("x - x^2", R)) == 1);
  CHECK(grevlex.leading_monomial(P("x - x^2", R)) == x2);
}

TEST_CASE("monomial orders are total and multiplicative") {
  GermGenerator gen(11);
  for (const auto order : {MonomialOrder::local(), MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
    for (int t = 0; t < 200; ++t) {
      const Monomial a = gen.monomial(3, gen.uniform(0, 4));
      const Monomial b = gen.monomial(3, gen.uniform(0, 4));
      const Monomial m = gen.monomial(3, gen.uniform(0, 3));
      CHECK((order.compare(a, b) == 0) == (a == b));
      CHECK(order.compare(a, b) == order.compare(a * m, b * m));
    }
  }
}

TEST_CASE("canonical text form") {
  const Ring R = germ::testing::xy();
  CHECK(to_string(P("y^2 - x^3", R)) == "y^2 - x^3");
  CHECK(to_string(Polynomial(R)) == "0");
  CHECK(to_string(P("-1/2*x*y + 3", R)) == "3 - 1/2*x*y");
  GermGenerator gen(3);
  for (int t = 0; t < 100; ++t) {
    const Ring S = GermGenerator::ring(gen.uniform(1, 4));
    const Polynomial f = gen.polynomial(S, 0, 5, 6);
    CHECK(P(to_string(f), S) == f);
  }
}

TEST_CASE("coordinate changes") {
  const Ring U = make_ring({"u"});
  const CoordinateChange theta({P("u + u^2", U)}, 3);
  CHECK(truncate_compose(P("u", U), theta) == P("u + u^2", U));
  CHECK(truncate_compose(P("u^2", U), theta) == P("u^2 + 2*u^3", U));

  const Ring R = make_ring({"u", "v"});
  const CoordinateChange lin({P("u + v", R), P("u - v", R)}, 2);
  CHECK(lin.is_linear());
  CHECK(truncate_compose(P("u*v", R), lin) == P("u^2 - v^2", R));

  CHECK_THROWS_AS(CoordinateChange({P("1 + u", U)}, 3), DomainError);
  CHECK_THROWS_AS(CoordinateChange({P("u + v", R), P("2*u + 2*v", R)}, 3), DomainError);
  CHECK_THROWS_AS(CoordinateChange({P("u^2", U)}, 3), DomainError);
  CHECK(determinant({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == -2);
}

TEST_CASE("truncated composition equals composition then truncation") {
  GermGenerator gen(5);
  for (int t = 0; t < 40; ++t) {
    const Ring R = GermGenerator::ring(gen.uniform(1, 3));
    const Polynomial f = gen.nonunit(R, 4, 4);
    const std::uint64_t D = gen.uniform(2, 7);
    const CoordinateChange change = gen.nonlinear_change(R, D, 3);
    CHECK(truncate_compose(f, change) == truncate(substitute(f, change.images()), D));
  }
}

TEST_CASE("linear composition is exact") {
  GermGenerator gen(6);
  for (int t = 0; t < 40; ++t) {
    const Ring R = GermGenerator::ring(gen.uniform(1, 3));
    const Polynomial f = gen.nonunit(R, 4, 4);
    const Polynomial g = gen.nonunit(R, 4, 4);
    const CoordinateChange change = gen.linear_change(R, 8);
    CHECK(truncate_compose(f * g, change) == truncate_compose(f, change) * truncate_compose(g, change));
    CHECK(truncate_compose(f + g, change) == truncate_compose(f, change) + truncate_compose(g, change));
  }
}

TEST_CASE("gradient tuples") {
  const Ring R = germ::testing::xy();
  CHECK(is_exact_tuple(GradientTuple({P("2*x", R), P("2*y", R)})));
  CHECK(is_exact_tuple(GradientTuple({P("y", R), P("x", R)})));
  CHECK_FALSE(is_exact_tuple(GradientTuple({P("y", R), P("-x", R)})));

  CHECK(euler_potential(GradientTuple({P("2*x", R), P("2*y", R)})) == P("x^2 + y^2", R));
  CHECK(euler_potential(GradientTuple({P("y^2", R), P("2*x*y", R)})) == P("x*y^2", R));
  CHECK_THROWS_AS(euler_potential(GradientTuple({P("y", R), P("-x", R)})), DomainError);
  CHECK(gradient(P("y^2 - x^3", R)) == GradientTuple({P("-3*x^2", R), P("2*y", R)}));
}

TEST_CASE("calculus identities on random polynomials") {
  GermGenerator gen(7);
  for (int t = 0; t < 150; ++t) {
    const Ring R = GermGenerator::ring(gen.uniform(1, 3));
    const std::size_t n = R->nvars();
    const Polynomial f = gen.polynomial(R, 0, 5, 5);
    const Polynomial g = gen.polynomial(R, 0, 5, 5);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(partial_derivative(f * g, i) == f * partial_derivative(g, i) + g * partial_derivative(f, i));
      for (std::size_t j = 0; j < n; ++j)
        CHECK(partial_derivative(partial_derivative(f, i), j) == partial_derivative(partial_derivative(f, j), i));
    }
    if (!f.is_zero() && !g.is_zero()) CHECK(order_of(f * g) == order_of(f) + order_of(g));

    const Polynomial f0 = f - Polynomial::constant(R, f.constant_term());
    CHECK(euler_potential(gradient(f0)) == f0);
    CHECK(is_exact_tuple(gradient(f)));
  }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
  GermGenerator gen(8);
  for (int t = 0; t < 100; ++t) {
    const Ring R = GermGenerator::ring(gen.uniform(1, 3));
    const std::uint64_t d = gen.uniform(1, 6);
    const Polynomial f = gen.homogeneous(R, d, 5);
    Polynomial lhs(R);
    for (std::size_t i = 0; i < R->nvars(); ++i) lhs += Polynomial::variable(R, i) * partial_derivative(f, i);
    CHECK(lhs == Rational(static_cast<long>(d)) * f);
  }
}
