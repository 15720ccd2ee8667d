#pragma once

// Reduced Groebner bases (Buchberger, grevlex) for zero-dimensional ideals
// supported only at the origin, and arithmetic in the quotient algebra.

#include <vector>

#include "arithdt/polynomial.hpp"

namespace arithdt {

/// Reduced Groebner basis of the ideal, monic, sorted by leading monomial.
/// Works for any ideal; the zero ideal yields an empty basis.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators);

/// Full reduction of p modulo a Groebner basis.
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis);

/// A = k[x]/I for an ideal I whose only zero over the algebraic closure is 0.
class QuotientAlgebra {
 public:
  /// Throws DomainError for the unit ideal, for positive-dimensional ideals and
  /// for ideals with zeros away from the origin (some variable not nilpotent in A).
  static QuotientAlgebra of(const std::vector<MultiPoly>& ideal);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<MultiPoly>& groebner() const { return basis_; }
  /// Standard monomials in increasing grevlex order (1 first).
  const std::vector<Exponents>& standard_monomials() const { return standard_; }
  std::size_t dimension() const { return standard_.size(); }

  MultiPoly normal_form(const MultiPoly& p) const;
  /// Coordinates of the normal form in the standard monomial basis.
  std::vector<Rational> coordinates(const MultiPoly& p) const;
  /// The basis element b_i as a polynomial.
  MultiPoly basis_element(std::size_t i) const;

 private:
  std::vector<std::string> vars_;
  std::vector<MultiPoly> basis_;
  std::vector<Exponents> standard_;
};

/// Convenience wrapper matching the module vocabulary.
inline QuotientAlgebra groebner_basis(const std::vector<MultiPoly>& ideal) { return QuotientAlgebra::of(ideal); }

}  // namespace arithdt
