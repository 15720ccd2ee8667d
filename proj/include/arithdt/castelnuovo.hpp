#pragma once

// Gopakumar-Vafa moduli of the quintic threefold at the Castelnuovo bound:
// a P^N-bundle over P^4, with its motivic and GW(k)(alpha)-valued virtual classes.

#include <cstdint>
#include <optional>
#include <string>

#include "arithdt/motivic.hpp"

namespace arithdt {

/// (d^2 + 5d + 10) / 10.
Rational castelnuovo_bound(std::int64_t d);
bool castelnuovo_bound_is_integral(std::int64_t d);

/// C(a, 3), taken to be 0 for a < 3.
std::int64_t binomial3(std::int64_t a);

struct CastelnuovoInput {
  std::int64_t m;
  std::int64_t d;  // 5m
  std::int64_t g;  // B(d)
  std::int64_t n;  // 1 - g
  std::int64_t N;  // fibre dimension C(m+3,3) - C(m-2,3) - 1

  static CastelnuovoInput of(std::int64_t m);
};

/// L^{(N+4)/2} [P^N][P^4].
MotivicClass gv_virtual_class_motivic(std::int64_t m);
/// L^{(N+4)/2} (L^{N+1} - 1)(L^5 - 1), the class above times (L - 1)^2.
MotivicClass gv_virtual_class_numerator(std::int64_t m);
/// chi_a1 of the motivic class; the authoritative arithmetic value.
GwAlphaElement gv_arithmetic_direct(std::int64_t m, const BaseField& field = BaseField::rationals());
/// The piecewise closed form evaluated literally:
///   m = 0,1 mod 4: alpha ((6+5N)/2 <1> + (4+5N)/2 <-1>)
///   m = 2,3 mod 4: 5(N+1)/2 H
/// Throws DomainError when a coefficient is not an integer.
GwAlphaElement gv_closed_form(std::int64_t m, const BaseField& field = BaseField::rationals());

struct GvComparison {
  CastelnuovoInput input;
  GwAlphaElement direct;
  std::optional<GwAlphaElement> closed;
  std::string closed_error;
  std::int64_t expected_rank;  // 5(N+1)
  std::int64_t direct_rank;
  std::optional<std::int64_t> closed_rank;
  bool ranks_agree;  // every available rank equals 5(N+1)
  GaussianInteger direct_real;
  std::optional<GaussianInteger> closed_real;
  bool real_agree;
  bool equal;
  /// k in {0,1,2,3} with closed == alpha^k * direct, if any.
  std::optional<int> alpha_relation;
  std::string discrepancy;
};

GvComparison gv_compare(std::int64_t m, const BaseField& field = BaseField::rationals());

}  // namespace arithdt
