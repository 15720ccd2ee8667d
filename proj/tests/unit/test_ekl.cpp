#include "doctest.h"

#include <cmath>
#include <numbers>

#include "arithdt/ekl.hpp"
#include "../support/generators.hpp"

using namespace arithdt;

namespace {

const BaseField Q = BaseField::rationals();
const std::vector<std::string> X{"x"};
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

MultiPoly mono(const std::vector<std::string>& vars, Exponents e, Rational c = 1) {
  return MultiPoly::monomial(vars, std::move(e), c);
}

GwElement A(const Rational& a) { return GwElement::angle(Q, a); }
GwElement H() { return GwElement::hyperbolic(Q); }

double eval_double(const MultiPoly& p, double x, double y) {
  double total = 0;
  for (const auto& [e, c] : p.terms()) total += c.get_d() * std::pow(x, e[0]) * std::pow(y, e[1]);
  return total;
}

// Brouwer degree of a planar map around the origin from the winding number of
// its image of a circle. All zeros of an accepted map lie at the origin, so any
// radius works.
long winding_number(const std::vector<MultiPoly>& p) {
  const int samples = 20000;
  double total = 0;
  double prev = 0;
  for (int k = 0; k <= samples; ++k) {
    const double t = 2 * std::numbers::pi * k / samples;
    const double angle = std::atan2(eval_double(p[1], std::cos(t), std::sin(t)),
                                    eval_double(p[0], std::cos(t), std::sin(t)));
    if (k > 0) {
      double d = angle - prev;
      while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
      while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
      total += d;
    }
    prev = angle;
  }
  return std::lround(total / (2 * std::numbers::pi));
}

struct Sample {
  std::string name;
  std::vector<MultiPoly> map;
  std::size_t dim;
};

std::vector<Sample> sample_maps() {
  MultiPoly x = MultiPoly::variable(XY, 0), y = MultiPoly::variable(XY, 1);
  return {
      {"x^2", {mono(X, {2})}, 2},
      {"x^3", {mono(X, {3})}, 3},
      {"-x^5", {mono(X, {5}, -1)}, 5},
      {"(x,y)", {x, y}, 1},
      {"(x^2,y^2)", {x * x, y * y}, 4},
      {"(x^2-y^2,xy)", {x * x - y * y, x * y}, 4},
      {"(x^2+y^2,xy)", {x * x + y * y, x * y}, 4},
      {"(x^3,y^2)", {x * x * x, y * y}, 6},
      {"Re/Im z^3", {x * x * x - Rational(3) * x * y * y, Rational(3) * x * x * y - y * y * y}, 9},
      {"(x^3+y^2,xy)", {x * x * x + y * y, x * y}, 5},
      {"(y,-x)", {y, -x}, 1},
      {"(x^2,y^2,z^2)", {mono(XYZ, {2, 0, 0}), mono(XYZ, {0, 2, 0}), mono(XYZ, {0, 0, 2})}, 8},
      {"(x^2,y^2,z^3)", {mono(XYZ, {2, 0, 0}), mono(XYZ, {0, 2, 0}), mono(XYZ, {0, 0, 3})}, 12},
  };
}

}  // namespace

TEST_SUITE("ekl_degree") {

TEST_CASE("golden values") {
  CHECK(gw_equal(ekl_class({mono(X, {2})}).gw_class, H()));
  CHECK(gw_equal(ekl_class({mono(X, {1}, 2)}).gw_class, A(2)));
  CHECK(gw_equal(ekl_class({mono(XY, {1, 0}, 2), mono(XY, {0, 1}, -2)}).gw_class, A(-1)));
  CHECK(gw_equal(ekl_class({mono(X, {3})}).gw_class, A(1) + H()));
  MultiPoly x = MultiPoly::variable(XY, 0), y = MultiPoly::variable(XY, 1);
  CHECK(gw_equal(milnor_number_a1(x * x - y * y).gw_class, A(-1)));
  CHECK(gw_equal(milnor_number_a1(x * x + y * y).gw_class, A(1)));
  CHECK(gw_equal(milnor_number_a1(mono(X, {3})).gw_class, H()));
  CHECK(gw_equal(milnor_number_a1(mono(X, {2})).gw_class, A(2)));
}

TEST_CASE("the Gram matrix of x^3") {
  EklResult r = ekl_class({mono(X, {3})});
  CHECK(r.gram == Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(r.standard_monomials == std::vector<Exponents>{{0}, {1}, {2}});
  CHECK(r.distinguished_socle == mono(X, {2}));
}

TEST_CASE("rank equals the algebra dimension and the signature is the topological degree") {
  for (const auto& s : sample_maps()) {
    CAPTURE(s.name);
    EklResult r = ekl_class(s.map);
    CHECK(r.rank == static_cast<std::int64_t>(s.dim));
    CHECK(r.gw_class.rank() == r.rank);
    CHECK(r.gram.is_symmetric());
    CHECK(r.gram.determinant() != 0);
    if (s.map.size() == 2) CHECK(r.gw_class.signature() == winding_number(s.map));
  }
}

TEST_CASE("the class does not depend on the normalised functional") {
  gen::Rng rng(61);
  for (const auto& s : sample_maps()) {
    CAPTURE(s.name);
    EklResult base = ekl_class(s.map);
    QuotientAlgebra alg = groebner_basis(s.map);
    std::vector<Rational> e = alg.coordinates(base.distinguished_socle);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> r(e.size());
      Rational r_e = 0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = rng.rational(4);
        r_e += r[i] * e[i];
      }
      std::vector<Rational> phi(e.size());
      for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = base.functional[i] + r[i] - r_e * base.functional[i];
      EklResult other = ekl_class_with_functional(s.map, phi);
      CHECK(gw_equal(other.gw_class, base.gw_class));
    }
    std::vector<Rational> wrong(base.functional.size());
    for (std::size_t i = 0; i < wrong.size(); ++i) wrong[i] = 2 * base.functional[i];
    CHECK_THROWS_AS(ekl_class_with_functional(s.map, wrong), DomainError);
  }
}

TEST_CASE("over other fields") {
  const BaseField R = BaseField::reals();
  CHECK(ekl_class({mono(X, {3})}, R).gw_class.signature() == 1);
  const BaseField F7 = BaseField::finite_prime(7);
  CHECK(gw_equal(ekl_class({mono(X, {2})}, F7).gw_class, GwElement::hyperbolic(F7)));
}

TEST_CASE("degenerate and unsupported systems") {
  CHECK_THROWS_AS(ekl_class({mono(XY, {2, 0})}), std::exception);
  CHECK_THROWS_AS(ekl_class({mono(XY, {1, 0}), mono(XY, {1, 0})}), DomainError);
  CHECK_THROWS_AS(ekl_class({mono(X, {2}) - mono(X, {1})}), DomainError);
}

TEST_CASE("simple local degrees") {
  MultiPoly x2 = mono(X, {2});
  CHECK(gw_equal(local_degree_simple({x2}, std::vector<Rational>{1}), A(2)));
  QuadraticNumber i{0, 1, -1};
  CHECK(gw_equal(local_degree_simple({x2}, std::vector<QuadraticNumber>{i}), H()));
  CHECK(gw_equal(local_degree_simple({mono(XY, {1, 0}), mono(XY, {0, 1})}, std::vector<Rational>{0, 0}), A(1)));
  CHECK_THROWS_AS(local_degree_simple({x2}, std::vector<Rational>{0}), DomainError);
}

TEST_CASE("global degree of a univariate map is independent of the regular value") {
  MultiPoly x2 = mono(X, {2});
  for (int y : {1, -1, 4, 2, -3}) {
    CAPTURE(y);
    CHECK(gw_equal(global_degree_univariate(x2, y), H()));
  }
  CHECK(gw_equal(global_degree_univariate(mono(X, {1}), 5), A(1)));
  MultiPoly cubic = mono(X, {3}) - mono(X, {1});
  // x^3 - x - y at y = 0: roots 0, 1, -1 with derivatives -1, 2, 2
  CHECK(gw_equal(global_degree_univariate(cubic, 0), A(-1) + A(2) + A(2)));
  CHECK(gw_equal(global_degree_univariate(cubic, 0), A(1) + H()));
  CHECK_THROWS_AS(global_degree_univariate(x2, 0), DomainError);
  CHECK_THROWS_AS(global_degree_univariate(mono(X, {3}), 2), DomainError);
  CHECK_THROWS_AS(global_degree_univariate(MultiPoly::constant(X, 1), 2), DomainError);
}

TEST_CASE("Milnor relation") {
  MultiPoly x = MultiPoly::variable(XY, 0), y = MultiPoly::variable(XY, 1);
  const MotivicClass L = MotivicClass::lefschetz();

  SUBCASE("hyperbola: equal") {
    SncData local = SncData::make({StratumRecord::make({1}, MotivicClass(), {{1, 1}}),
                                   StratumRecord::make({2}, MotivicClass(), {{2, 1}}),
                                   StratumRecord::make({1, 2}, MotivicClass(1), {{1, 1}, {2, 1}})},
                                  2, MotivicClass(1));
    auto report = milnor_chi_relation(x * x - y * y, local);
    CHECK(report.equal);
    CHECK(gw_equal(report.lhs, GwAlphaElement(A(1) - A(-1))));
    CHECK(gw_equal(report.rhs, GwAlphaElement(A(1) - A(-1))));
  }

  SUBCASE("x^2 + y^2 with its conjugate pair of branches") {
    auto pt = GeneratorSpec::quadratic_point(-1);
    SncData local = SncData::make(
        {StratumRecord::make({1}, L + 1 - MotivicClass::generator(pt), {{1, 2}}),
         StratumRecord::make({1, 2}, MotivicClass::generator(pt), {{1, 2}, {2, 1}})},
        2, MotivicClass(1));
    auto report = milnor_chi_relation(x * x + y * y, local);
    CHECK(gw_equal(report.milnor, A(1)));
    CHECK(report.equal);
  }

  SUBCASE("zero nearby class is reported, not raised") {
    SncData empty = SncData::make({}, 2, MotivicClass(1));
    auto report = milnor_chi_relation(x * x - y * y, empty);
    CHECK_FALSE(report.equal);
    CHECK(report.lhs.is_zero());
    CHECK_FALSE(report.verdict.empty());
  }

  CHECK_THROWS_AS(milnor_chi_relation(x * x - y * y, std::nullopt), DomainError);
}

}  // TEST_SUITE
