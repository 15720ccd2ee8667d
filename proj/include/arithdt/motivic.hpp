#pragma once

// Ring of motivic weights restricted to Z[L^{1/2}, L^{-1/2}], with a few named
// non-Tate generators (classes of closed points Spec L), and its three Euler
// characteristic specializations.
//
// Exponents are stored as powers of u = L^{1/2}; L^{k/2} is u^k.

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "arithdt/gw.hpp"

namespace arithdt {

using LaurentU = std::map<std::int64_t, std::int64_t>;

/// A named generator together with its images under chi_C, chi_R and chi_A1.
/// The three values must be compatible: numeric_complex(chi_a1) == chi_complex
/// and, over ordered fields, numeric_real(chi_a1) == chi_real.
struct GeneratorSpec {
  std::string name;
  std::int64_t chi_complex;
  GaussianInteger chi_real;
  GwAlphaElement chi_a1;

  static std::shared_ptr<const GeneratorSpec> make(std::string name, std::int64_t chi_complex,
                                                   GaussianInteger chi_real, GwAlphaElement chi_a1);
  /// [Spec C] as a variety over R.
  static std::shared_ptr<const GeneratorSpec> spec_complex();
  /// [Spec Q(sqrt d)] as a variety over Q; chi_a1 is the trace form <2> + <2d>.
  static std::shared_ptr<const GeneratorSpec> quadratic_point(const Integer& d);

  bool same_as(const GeneratorSpec& other) const;
};

using GeneratorRef = std::shared_ptr<const GeneratorSpec>;

class MotivicClass {
 public:
  struct Extra {
    GeneratorRef spec;
    LaurentU coeffs;  // Laurent polynomial multiplying [spec]
  };
  using Extras = std::map<std::string, Extra>;

  MotivicClass() = default;
  /// The constant n.
  MotivicClass(std::int64_t n);  // NOLINT(google-explicit-constructor)

  static MotivicClass u_power(std::int64_t e, std::int64_t coeff = 1);
  static MotivicClass lefschetz() { return u_power(2); }
  static MotivicClass half_lefschetz() { return u_power(1); }
  static MotivicClass from_laurent(LaurentU coeffs);
  static MotivicClass generator(GeneratorRef spec, LaurentU coeffs = {{0, 1}});

  const LaurentU& tate() const { return tate_; }
  const Extras& extras() const { return extras_; }
  bool is_tate() const { return extras_.empty(); }
  bool is_zero() const { return tate_.empty() && extras_.empty(); }
  /// Coefficient of u^e in the Tate part.
  std::int64_t coefficient(std::int64_t e) const;

  MotivicClass& operator+=(const MotivicClass& o);
  MotivicClass& operator-=(const MotivicClass& o);
  MotivicClass& operator*=(const MotivicClass& o);
  MotivicClass operator-() const;
  friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
  friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
  friend bool operator==(const MotivicClass& a, const MotivicClass& b);

  /// Exact quotient of Tate classes; throws if the division leaves a remainder.
  MotivicClass divide_exact(const MotivicClass& divisor) const;

  /// "L^{3/2} + 2*L - 1 + (L + 1)*[Spec C]".
  std::string to_string() const;

 private:
  LaurentU tate_;
  Extras extras_;
};

MotivicClass pow(const MotivicClass& base, unsigned exponent);

/// [P^n] = 1 + L + ... + L^n.
MotivicClass projective_space_class(std::int64_t n);
/// [Gr(n,k)] as the Gaussian binomial in L, by exact division.
MotivicClass grassmannian_class(std::int64_t n, std::int64_t k);

/// u -> -1.
std::int64_t chi_complex(const MotivicClass& m);
/// u -> i, so L -> -1.
GaussianInteger chi_real(const MotivicClass& m);
/// u -> alpha, L -> <-1>.
GwAlphaElement chi_a1(const MotivicClass& m, const BaseField& field);

}  // namespace arithdt
