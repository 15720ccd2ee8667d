#pragma once

// Degree-zero DT series of A^3: the motivic partition function, its GW(k)(alpha)
// refinement, the complex/real specializations (MacMahon and symmetric MacMahon),
// and the trace potential Tr([A,B]C) whose critical locus is Hilb^n(A^3).

#include <cstdint>
#include <vector>

#include "arithdt/series.hpp"

namespace arithdt {

using IntSeries = TruncatedSeries<std::int64_t>;
using GaussianSeries = TruncatedSeries<GaussianInteger>;
using MotivicSeries = TruncatedSeries<MotivicClass>;
using GwAlphaSeries = TruncatedSeries<GwAlphaElement>;

/// prod_{m>=1} prod_{k=0}^{m-1} (1 - L^{k+2-m/2} t^m)^-1, truncated.
MotivicSeries z_motivic(int order);

/// The refined product
///   prod_n (<1> - (b t)^{2n-1})^-1 * prod_n (<1> - (b t)^n H + <-1> (b t)^{2n})^-floor(n/2)
/// with b = alpha^-1 = <-1> alpha, the image of L^{-1/2}. This is the form that
/// agrees coefficientwise with chi_a1 applied to z_motivic.
GwAlphaSeries z_arithmetic(int order, const BaseField& field);

/// The same product written with b = alpha. It differs from chi_a1(z_motivic)
/// by the automorphism alpha -> alpha^-1 (first visible at t^1); kept for comparison.
GwAlphaSeries z_arithmetic_alpha_form(int order, const BaseField& field);

struct PartitionFunctionResult {
  MotivicSeries motivic;
  GwAlphaSeries arithmetic;
  IntSeries complex;
  GaussianSeries real;  // only meaningful over ordered fields; zero series otherwise
  bool has_real;
};

PartitionFunctionResult partition_function(int order, const BaseField& field);

/// M(q) = prod (1 - q^n)^-n.
IntSeries macmahon(int order);
/// M^sym(q) = prod (1 - q^{2n-1})^-1 (1 - q^{2n})^-floor(n/2).
IntSeries macmahon_symmetric(int order);

struct MatrixTriple {
  Matrix a, b, c;
  std::vector<Rational> v;
};

/// Tr((AB - BA) C).
Rational trace_potential(const MatrixTriple& t);

/// Partial derivatives with respect to the entries of A, B, C (v does not enter).
struct PotentialGradient {
  Matrix d_a, d_b, d_c;
  bool is_zero() const { return d_a.is_zero() && d_b.is_zero() && d_c.is_zero(); }
};

/// d/dA = [B,C]^T, d/dB = [C,A]^T, d/dC = [A,B]^T.
PotentialGradient trace_potential_gradient(const MatrixTriple& t);

}  // namespace arithdt
