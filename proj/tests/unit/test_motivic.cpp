#include "doctest.h"

#include "arithdt/motivic.hpp"
#include "../support/generators.hpp"

using namespace arithdt;

namespace {

const BaseField Q = BaseField::rationals();
const MotivicClass L = MotivicClass::lefschetz();

MotivicClass Lp(std::int64_t k) { return MotivicClass::u_power(2 * k); }

// q-binomial through the Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k];
// independent of the division-based implementation.
MotivicClass pascal_q_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return MotivicClass();
  if (k == 0 || k == n) return MotivicClass(1);
  return pascal_q_binomial(n - 1, k - 1) + Lp(k) * pascal_q_binomial(n - 1, k);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t b = 1;
  for (std::int64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_SUITE("motivic_ring") {

TEST_CASE("ring operation examples") {
  CHECK(L * MotivicClass::u_power(-2) == MotivicClass(1));
  CHECK((L + 1) * (L - 1) == Lp(2) - 1);
  CHECK(projective_space_class(1) * projective_space_class(1) == Lp(2) + 2 * L + 1);
}

TEST_CASE("projective spaces") {
  CHECK(projective_space_class(0) == MotivicClass(1));
  CHECK(projective_space_class(1) == 1 + L);
  CHECK(projective_space_class(4) == 1 + L + Lp(2) + Lp(3) + Lp(4));
  CHECK_THROWS(projective_space_class(-1));
}

TEST_CASE("Grassmannians") {
  CHECK(grassmannian_class(2, 1) == 1 + L);
  CHECK(grassmannian_class(5, 0) == MotivicClass(1));
  CHECK(grassmannian_class(4, 2) == 1 + L + 2 * Lp(2) + Lp(3) + Lp(4));
  CHECK_THROWS(grassmannian_class(3, 4));
  for (std::int64_t n = 0; n <= 8; ++n)
    for (std::int64_t k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      MotivicClass g = grassmannian_class(n, k);
      CHECK(g == pascal_q_binomial(n, k));
      CHECK(g == grassmannian_class(n, n - k));
      CHECK(chi_complex(g) == binomial(n, k));
    }
}

TEST_CASE("exact division") {
  CHECK((Lp(3) - 1).divide_exact(L - 1) == 1 + L + Lp(2));
  CHECK_THROWS_AS((Lp(3) - 2).divide_exact(L - 1), DomainError);
  CHECK_THROWS_AS(L.divide_exact(MotivicClass()), DomainError);
}

TEST_CASE("Euler characteristic examples") {
  CHECK(chi_complex(L) == 1);
  for (int n = 0; n < 6; ++n) CHECK(chi_complex(projective_space_class(n)) == n + 1);
  CHECK(chi_complex(MotivicClass::u_power(3)) == -1);
  CHECK(chi_real(L) == GaussianInteger{-1, 0});
  CHECK(chi_real(MotivicClass(1)) == GaussianInteger{1, 0});
  CHECK(chi_real(MotivicClass::half_lefschetz()) == GaussianInteger{0, 1});
  CHECK(chi_a1(L, Q) == GwAlphaElement(GwElement::angle(Q, -1)));
  CHECK(gw_equal(chi_a1(projective_space_class(1), Q), GwAlphaElement(GwElement::hyperbolic(Q))));
  CHECK(chi_a1(projective_space_class(4), Q) ==
        GwAlphaElement(GwElement::angle(Q, 1, 3) + GwElement::angle(Q, -1, 2)));
}

TEST_CASE("Euler characteristics are ring morphisms and commute with the numeric evaluations") {
  gen::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    MotivicClass a = gen::tate(rng), b = gen::tate(rng);
    CHECK(chi_complex(a + b) == chi_complex(a) + chi_complex(b));
    CHECK(chi_complex(a * b) == chi_complex(a) * chi_complex(b));
    CHECK(chi_real(a + b) == chi_real(a) + chi_real(b));
    CHECK(chi_real(a * b) == chi_real(a) * chi_real(b));
    CHECK(chi_a1(a + b, Q) == chi_a1(a, Q) + chi_a1(b, Q));
    CHECK(gw_equal(chi_a1(a * b, Q), chi_a1(a, Q) * chi_a1(b, Q)));
    CHECK(numeric_complex(chi_a1(a, Q)) == chi_complex(a));
    CHECK(numeric_real(chi_a1(a, Q)) == chi_real(a));
  }
}

TEST_CASE("ring axioms on Laurent classes") {
  gen::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    MotivicClass a = gen::tate(rng), b = gen::tate(rng), c = gen::tate(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("the generator [Spec C] over R") {
  auto spec = GeneratorSpec::spec_complex();
  MotivicClass x = MotivicClass::generator(spec);
  const BaseField R = BaseField::reals();
  CHECK(chi_complex(x) == 2);
  CHECK(chi_real(x) == GaussianInteger{0, 0});
  CHECK(gw_equal(chi_a1(x, R), GwAlphaElement(GwElement::hyperbolic(R))));
  // [X] = L + 1 - [Spec C] for the conic x^2 + y^2 = -1 style example
  MotivicClass conic = L + 1 - x;
  CHECK(chi_complex(conic) == 0);
  CHECK(chi_real(conic) == GaussianInteger{0, 0});
  CHECK(conic.to_string() == "L + 1 - [Spec C]");
}

TEST_CASE("generator consistency and products") {
  CHECK_THROWS_AS(GeneratorSpec::make("bad", 3, {1, 0}, GwAlphaElement(GwElement::one(Q))), DomainError);
  CHECK_THROWS_AS(GeneratorSpec::make("bad", 1, {3, 0}, GwAlphaElement(GwElement::one(Q))), DomainError);
  auto q = GeneratorSpec::quadratic_point(-1);
  CHECK(q->chi_complex == 2);
  CHECK(q->chi_real == GaussianInteger{0, 0});
  CHECK(gw_equal(q->chi_a1, GwAlphaElement(GwElement::angle(Q, 2) + GwElement::angle(Q, -2))));
  MotivicClass x = MotivicClass::generator(q);
  CHECK(L * x == MotivicClass::generator(q, {{2, 1}}));
  CHECK_THROWS_AS(x * x, DomainError);
  CHECK_THROWS_AS(x * MotivicClass::generator(GeneratorSpec::quadratic_point(2)), DomainError);
  CHECK_THROWS_AS(GeneratorSpec::quadratic_point(4), DomainError);
  CHECK((x - x).is_zero());
}

TEST_CASE("rendering") {
  CHECK(MotivicClass::u_power(3).to_string() == "L^{3/2}");
  CHECK(L.to_string() == "L");
  CHECK(MotivicClass::u_power(-2).to_string() == "L^{-1}");
  CHECK((L - 1).to_string() == "L - 1");
  CHECK(MotivicClass().to_string() == "0");
  CHECK((1 - L).to_string() == "-L + 1");
}

}  // TEST_SUITE
