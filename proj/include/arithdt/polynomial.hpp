#pragma once

// Multivariate polynomials over Q with a fixed graded reverse lexicographic order.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arithdt/arith.hpp"

namespace arithdt {

using Exponents = std::vector<int>;

/// Total degree first; ties broken by the smallest exponent in the last
/// differing variable being the larger monomial (grevlex).
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);

class MultiPoly {
 public:
  /// Terms sorted from the leading (grevlex-largest) monomial down.
  using Terms = std::map<Exponents, Rational, GrevlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents e, const Rational& c = 1);
  /// The i-th variable.
  static MultiPoly variable(std::vector<std::string> variables, std::size_t i);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Exponents& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Exponents& e) const;
  int degree() const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  /// Multiplies by c * x^e.
  MultiPoly times_term(const Exponents& e, const Rational& c) const;
  MultiPoly derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Scales so the leading coefficient is 1.
  MultiPoly monic() const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  Terms terms_;
};

/// det of the Jacobian matrix (d P_i / d x_j).
MultiPoly jacobian_determinant(const std::vector<MultiPoly>& polys);

}  // namespace arithdt
