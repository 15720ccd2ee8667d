#include "doctest.h"

#include "arithdt/castelnuovo.hpp"

using namespace arithdt;

namespace {

const BaseField Q = BaseField::rationals();
const MotivicClass L = MotivicClass::lefschetz();

GwElement A(const Rational& a, std::int64_t n = 1) { return GwElement::angle(Q, a, n); }
GwAlphaElement alpha_times(const GwElement& x) { return GwAlphaElement(GwElement::zero(Q), x); }

std::int64_t choose(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("castelnuovo_gv") {

TEST_CASE("the bound") {
  CHECK(castelnuovo_bound(5) == 6);
  CHECK(castelnuovo_bound(10) == 16);
  CHECK(castelnuovo_bound(1) == Rational(8, 5));
  for (std::int64_t d = 1; d <= 60; ++d) CHECK(castelnuovo_bound_is_integral(d) == (d % 5 == 0));
}

TEST_CASE("inputs") {
  CHECK(binomial3(2) == 0);
  CHECK(binomial3(-1) == 0);
  CHECK(binomial3(7) == 35);
  auto in = CastelnuovoInput::of(1);
  CHECK(in.d == 5);
  CHECK(in.g == 6);
  CHECK(in.n == -5);
  CHECK(in.N == 3);
  CHECK(CastelnuovoInput::of(2).N == 9);
  CHECK(CastelnuovoInput::of(4).N == 34);
  CHECK_THROWS_AS(CastelnuovoInput::of(0), DomainError);
  for (std::int64_t m = 1; m <= 40; ++m) {
    CAPTURE(m);
    const std::int64_t N = CastelnuovoInput::of(m).N;
    CHECK(N == choose(m + 3, 3) - choose(m - 2, 3) - 1);
    if (m % 4 == 2 || m % 4 == 3) CHECK(N % 2 == 1);
    else if (m >= 4) CHECK(N % 2 == 0);
    else CHECK(N % 2 == 1);  // m = 1 is the exception
  }
}

TEST_CASE("motivic class") {
  CHECK(gv_virtual_class_motivic(1) ==
        MotivicClass::u_power(7) * projective_space_class(3) * projective_space_class(4));
  for (std::int64_t m = 1; m <= 8; ++m) {
    CAPTURE(m);
    const std::int64_t N = CastelnuovoInput::of(m).N;
    MotivicClass c = gv_virtual_class_motivic(m);
    MotivicClass numerator = MotivicClass::u_power(N + 4) * (pow(L, static_cast<unsigned>(N + 1)) - 1) * (pow(L, 5) - 1);
    CHECK(c * (L - 1) * (L - 1) == numerator);
    CHECK(gv_virtual_class_numerator(m) == numerator);
    CHECK(numerator.divide_exact((L - 1) * (L - 1)) == c);
    CHECK(chi_complex(c) * ((N + 4) % 2 == 0 ? 1 : -1) == 5 * (N + 1));
    // coefficients are palindromic in L^{1/2}
    const auto& t = c.tate();
    const std::int64_t lo = t.begin()->first, hi = t.rbegin()->first;
    for (const auto& [e, k] : t) CHECK(c.coefficient(lo + hi - e) == k);
  }
}

TEST_CASE("direct arithmetic values") {
  CHECK(gw_equal(gv_arithmetic_direct(1), alpha_times(10 * GwElement::hyperbolic(Q))));
  CHECK(gw_equal(gv_arithmetic_direct(2), alpha_times(25 * GwElement::hyperbolic(Q))));
  CHECK(gw_equal(gv_arithmetic_direct(4), GwAlphaElement(A(1, 87) + A(-1, 88))));
  for (std::int64_t m = 1; m <= 12; ++m) {
    CAPTURE(m);
    const std::int64_t N = CastelnuovoInput::of(m).N;
    GwAlphaElement v = gv_arithmetic_direct(m);
    CHECK(v.total_rank() == 5 * (N + 1));
    if ((N + 4) % 2 == 1) CHECK(v.even().is_zero());
    else CHECK(v.odd().is_zero());
  }
}

TEST_CASE("closed form evaluated literally") {
  CHECK(gw_equal(gv_closed_form(4), alpha_times(A(1, 88) + A(-1, 87))));
  CHECK(gw_equal(gv_closed_form(2), GwAlphaElement(25 * GwElement::hyperbolic(Q))));
  CHECK_THROWS_AS(gv_closed_form(1), DomainError);
}

TEST_CASE("comparison reports") {
  auto c1 = gv_compare(1);
  CHECK_FALSE(c1.closed.has_value());
  CHECK_FALSE(c1.closed_error.empty());
  CHECK(c1.ranks_agree);
  CHECK(c1.expected_rank == 20);

  auto c2 = gv_compare(2);
  CHECK(c2.ranks_agree);
  CHECK_FALSE(c2.equal);
  REQUIRE(c2.alpha_relation.has_value());
  CHECK(*c2.alpha_relation == 1);  // alpha^2 = <-1> fixes H
  CHECK_FALSE(c2.discrepancy.empty());

  auto c4 = gv_compare(4);
  CHECK(c4.expected_rank == 175);
  CHECK(c4.ranks_agree);
  CHECK_FALSE(c4.equal);
  REQUIRE(c4.alpha_relation.has_value());
  CHECK(*c4.alpha_relation == 3);

  for (std::int64_t m = 1; m <= 12; ++m) {
    CAPTURE(m);
    auto c = gv_compare(m);
    CHECK(c.ranks_agree);
    CHECK(c.direct_rank == c.expected_rank);
    if (c.closed) {
      CHECK(*c.closed_rank == c.expected_rank);
      if (c.alpha_relation) {
        CHECK(gw_equal(*c.closed, GwAlphaElement::alpha_power(Q, *c.alpha_relation) * c.direct));
      }
    }
  }
}

}  // TEST_SUITE
