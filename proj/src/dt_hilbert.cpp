#include "arithdt/dt_hilbert.hpp"

namespace arithdt {

// Every infinite product below is evaluated as a finite product over m <= order:
// the m-th factor is 1 + O(t^m), so factors with m > order leave all
// coefficients up to t^order unchanged.

MotivicSeries z_motivic(int order) {
  if (order < 1) throw std::invalid_argument("z_motivic needs order >= 1");
  MotivicSeries z = MotivicSeries::one(order, MotivicClass(1));
  for (int m = 1; m <= order; ++m) {
    for (int k = 0; k < m; ++k) {
      // L^{k+2-m/2} = u^{2k+4-m}
      z.divide_by_one_minus(MotivicClass::u_power(2 * k + 4 - m), m);
    }
  }
  return z;
}

namespace {

// generator_power(e) is the image of the refinement variable raised to e.
template <typename PowerFn>
GwAlphaSeries refined_product(int order, const BaseField& field, PowerFn generator_power) {
  if (order < 1) throw std::invalid_argument("z_arithmetic needs order >= 1");
  const GwAlphaElement one = GwAlphaElement::one(field);
  const GwAlphaElement hyperbolic(GwElement::hyperbolic(field));
  const GwAlphaElement minus_one(GwElement::angle(field, -1));
  GwAlphaSeries z = GwAlphaSeries::one(order, one);

  for (int n = 1; 2 * n - 1 <= order; ++n) {
    const int m = 2 * n - 1;
    GwAlphaSeries factor = GwAlphaSeries::one(order, one) - GwAlphaSeries::monomial(order, generator_power(m), m);
    z = z * factor.pow(-1);
  }
  for (int n = 2; n <= order; ++n) {
    GwAlphaSeries factor = GwAlphaSeries::one(order, one) -
                           GwAlphaSeries::monomial(order, generator_power(n) * hyperbolic, n) +
                           GwAlphaSeries::monomial(order, minus_one * generator_power(2 * n), 2 * n);
    z = z * factor.pow(-(n / 2));
  }
  return z;
}

}  // namespace

GwAlphaSeries z_arithmetic(int order, const BaseField& field) {
  return refined_product(order, field, [&](std::int64_t e) { return GwAlphaElement::alpha_power(field, -e); });
}

GwAlphaSeries z_arithmetic_alpha_form(int order, const BaseField& field) {
  return refined_product(order, field, [&](std::int64_t e) { return GwAlphaElement::alpha_power(field, e); });
}

PartitionFunctionResult partition_function(int order, const BaseField& field) {
  MotivicSeries motivic = z_motivic(order);
  GwAlphaSeries arithmetic = z_arithmetic(order, field);
  IntSeries complex = arithmetic.map_coeffs(morphisms::AlphaToMinusOne{});
  bool has_real = field.is_ordered();
  GaussianSeries real = has_real ? arithmetic.map_coeffs(morphisms::AlphaToI{})
                                 : GaussianSeries::zero(order, GaussianInteger{});
  return {std::move(motivic), std::move(arithmetic), std::move(complex), std::move(real), has_real};
}

IntSeries macmahon(int order) {
  if (order < 0) throw std::invalid_argument("macmahon needs order >= 0");
  IntSeries m = IntSeries::one(order, 0);
  for (int n = 1; n <= order; ++n)
    for (int copy = 0; copy < n; ++copy) m.divide_by_one_minus(1, n);
  return m;
}

IntSeries macmahon_symmetric(int order) {
  if (order < 0) throw std::invalid_argument("macmahon_symmetric needs order >= 0");
  IntSeries m = IntSeries::one(order, 0);
  for (int n = 1; 2 * n - 1 <= order; ++n) m.divide_by_one_minus(1, 2 * n - 1);
  for (int n = 2; 2 * n <= order; ++n)
    for (int copy = 0; copy < n / 2; ++copy) m.divide_by_one_minus(1, 2 * n);
  return m;
}

namespace {

void check_triple(const MatrixTriple& t) {
  const std::size_t n = t.a.rows();
  auto ok = [n](const Matrix& m) { return m.rows() == n && m.cols() == n; };
  if (!ok(t.a) || !ok(t.b) || !ok(t.c) || t.v.size() != n) {
    throw DomainError("matrix triple size mismatch");
  }
}

}  // namespace

Rational trace_potential(const MatrixTriple& t) {
  check_triple(t);
  return (commutator(t.a, t.b) * t.c).trace();
}

PotentialGradient trace_potential_gradient(const MatrixTriple& t) {
  check_triple(t);
  return {commutator(t.b, t.c).transposed(), commutator(t.c, t.a).transposed(),
          commutator(t.a, t.b).transposed()};
}

}  // namespace arithdt
