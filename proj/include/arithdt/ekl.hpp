#pragma once

// Local A^1-degrees via the Eisenbud-Khimshiashvili-Levine residue form,
// global degrees of univariate maps, and A^1-Milnor numbers.

#include <optional>
#include <string>
#include <vector>

#include "arithdt/groebner.hpp"
#include "arithdt/gw.hpp"
#include "arithdt/nearby.hpp"

namespace arithdt {

struct EklResult {
  GwElement gw_class;
  std::int64_t rank;
  Matrix gram;
  /// E = det J / dim A, as a normal form.
  MultiPoly distinguished_socle;
  /// phi on the standard monomial basis, normalised so phi(E) = 1.
  std::vector<Rational> functional;
  std::vector<Exponents> standard_monomials;
};

/// EKL class of a square system with an isolated zero at the origin (the only
/// zero of the ideal). phi is the dual functional of the largest standard
/// monomial occurring in E, rescaled.
EklResult ekl_class(const std::vector<MultiPoly>& p, const BaseField& field = BaseField::rationals());

/// Same, with an explicit functional (coordinates on the standard monomials).
/// Throws unless phi(E) = 1.
EklResult ekl_class_with_functional(const std::vector<MultiPoly>& p, const std::vector<Rational>& phi,
                                    const BaseField& field = BaseField::rationals());

/// <det J(x)> at a rational point where det J does not vanish.
GwElement local_degree_simple(const std::vector<MultiPoly>& p, const std::vector<Rational>& point,
                              const BaseField& field = BaseField::rationals());
/// Tr_{Q(sqrt d)/Q} <det J(x)> at one point of a conjugate pair with coordinates in Q(sqrt d).
GwElement local_degree_simple(const std::vector<MultiPoly>& p, const std::vector<QuadraticNumber>& point);

/// Sum of local degrees over the fibre P^{-1}(y) of a univariate map. The fibre
/// must be reduced, with irreducible factors of degree at most 2 over Q.
GwElement global_degree_univariate(const MultiPoly& p, const Rational& y);

/// EKL class of grad f.
EklResult milnor_number_a1(const MultiPoly& f, const BaseField& field = BaseField::rationals());

struct MilnorChiReport {
  GwAlphaElement lhs;  // chi_a1 of the local nearby class
  GwAlphaElement rhs;  // <1> + (-<1>)^{n-1} mu^{A1}(f)
  GwElement milnor;
  bool equal;
  std::string verdict;
};

/// Compares chi_a1(S_{f,0}) with <1> + (-<1>)^{n-1} mu^{A1}(f). Disagreement is
/// reported, not raised. Throws DomainError when no strata are supplied.
MilnorChiReport milnor_chi_relation(const MultiPoly& f, const std::optional<SncData>& local_strata,
                                    const BaseField& field = BaseField::rationals());

}  // namespace arithdt
