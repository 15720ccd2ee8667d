#include "arithdt/castelnuovo.hpp"

#include <sstream>

namespace arithdt {

namespace {

void require_positive(std::int64_t m) {
  if (m < 1) throw DomainError("m must be a positive integer");
}

}  // namespace

Rational castelnuovo_bound(std::int64_t d) {
  if (d < 1) throw DomainError("degree must be positive");
  Integer dz(static_cast<long>(d));
  Rational b(dz * dz + 5 * dz + 10, 10);
  b.canonicalize();
  return b;
}

bool castelnuovo_bound_is_integral(std::int64_t d) { return castelnuovo_bound(d).get_den() == 1; }

std::int64_t binomial3(std::int64_t a) {
  if (a < 3) return 0;
  return a * (a - 1) * (a - 2) / 6;
}

CastelnuovoInput CastelnuovoInput::of(std::int64_t m) {
  require_positive(m);
  const std::int64_t d = 5 * m;
  const std::int64_t g = castelnuovo_bound(d).get_num().get_si();
  return {m, d, g, 1 - g, binomial3(m + 3) - binomial3(m - 2) - 1};
}

MotivicClass gv_virtual_class_motivic(std::int64_t m) {
  const auto in = CastelnuovoInput::of(m);
  return MotivicClass::u_power(in.N + 4) * projective_space_class(in.N) * projective_space_class(4);
}

MotivicClass gv_virtual_class_numerator(std::int64_t m) {
  const auto in = CastelnuovoInput::of(m);
  return MotivicClass::u_power(in.N + 4) * (MotivicClass::u_power(2 * (in.N + 1)) - 1) *
         (MotivicClass::u_power(10) - 1);
}

GwAlphaElement gv_arithmetic_direct(std::int64_t m, const BaseField& field) {
  return chi_a1(gv_virtual_class_motivic(m), field);
}

GwAlphaElement gv_closed_form(std::int64_t m, const BaseField& field) {
  const auto in = CastelnuovoInput::of(m);
  const std::int64_t N = in.N;
  auto half = [&](std::int64_t v, const char* what) {
    if (v % 2 != 0) {
      throw DomainError("closed form at m=" + std::to_string(m) + " (N=" + std::to_string(N) + "): coefficient " +
                        what + " = " + std::to_string(v) + "/2 is not an integer");
    }
    return v / 2;
  };
  if (m % 4 == 0 || m % 4 == 1) {
    const std::int64_t plus = half(6 + 5 * N, "(6+5N)/2");
    const std::int64_t minus = half(4 + 5 * N, "(4+5N)/2");
    GwElement odd = GwElement::angle(field, 1, plus) + GwElement::angle(field, -1, minus);
    return GwAlphaElement(GwElement::zero(field), odd);
  }
  const std::int64_t h = half(5 * (N + 1), "5(N+1)/2");
  return GwAlphaElement(h * GwElement::hyperbolic(field));
}

GvComparison gv_compare(std::int64_t m, const BaseField& field) {
  GvComparison r{CastelnuovoInput::of(m), gv_arithmetic_direct(m, field), std::nullopt, {}, 0, 0, std::nullopt,
                 false, {}, std::nullopt, false, false, std::nullopt, {}};
  r.expected_rank = 5 * (r.input.N + 1);
  r.direct_rank = r.direct.total_rank();
  try {
    r.closed = gv_closed_form(m, field);
  } catch (const DomainError& e) {
    r.closed_error = e.what();
  }
  const bool ordered = field.is_ordered();
  if (ordered) r.direct_real = numeric_real(r.direct);

  std::ostringstream why;
  if (r.closed) {
    r.closed_rank = r.closed->total_rank();
    r.ranks_agree = r.direct_rank == r.expected_rank && *r.closed_rank == r.expected_rank;
    if (ordered) {
      r.closed_real = numeric_real(*r.closed);
      r.real_agree = *r.closed_real == r.direct_real;
    }
    r.equal = gw_equal(*r.closed, r.direct);
    for (int k = 0; k < 4; ++k) {
      if (gw_equal(*r.closed, GwAlphaElement::alpha_power(field, k) * r.direct)) {
        r.alpha_relation = k;
        break;
      }
    }
    if (!r.equal) {
      why << "closed form " << r.closed->to_string(true) << " differs from direct evaluation "
          << r.direct.to_string(true);
      if (r.alpha_relation) why << "; closed = alpha^" << *r.alpha_relation << " * direct";
      else why << "; no power of alpha relates them";
    }
  } else {
    r.ranks_agree = r.direct_rank == r.expected_rank;
    why << r.closed_error << "; direct evaluation gives " << r.direct.to_string(true);
  }
  r.discrepancy = why.str();
  return r;
}

}  // namespace arithdt
