#pragma once

// Grothendieck-Witt ring GW(k) of a small family of base fields, and its
// quadratic extension GW(k)(alpha) with alpha^2 = <-1>.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithdt/arith.hpp"

namespace arithdt {

class BaseField {
 public:
  enum class Kind { Rationals, Reals, ComplexNumbers, FinitePrime };

  static BaseField rationals() { return BaseField(Kind::Rationals, 0); }
  static BaseField reals() { return BaseField(Kind::Reals, 0); }
  static BaseField complex_numbers() { return BaseField(Kind::ComplexNumbers, 0); }
  /// Finite prime field F_p; p must be an odd prime.
  static BaseField finite_prime(std::uint64_t p);
  /// "Q", "R", "C" or "F<p>" (e.g. "F7").
  static BaseField parse(std::string_view name);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_ordered() const { return kind_ == Kind::Rationals || kind_ == Kind::Reals; }
  std::string name() const;

  friend bool operator==(const BaseField&, const BaseField&) = default;

 private:
  BaseField(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Canonical representative of k^x / (k^x)^2.
///  Q: signed square-free integer;  R: +1 / -1;  C: 1;
///  F_p: 1 or the least quadratic non-residue mod p.
class SquareClass {
 public:
  static SquareClass of(const BaseField& field, const Rational& a);
  static SquareClass one(const BaseField& field) { return of(field, 1); }

  const BaseField& field() const { return field_; }
  const Integer& representative() const { return rep_; }
  /// +1 / -1 over ordered fields.
  int sign() const;
  SquareClass operator*(const SquareClass& other) const;
  std::string to_string() const;

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }

 private:
  SquareClass(BaseField field, Integer rep) : field_(field), rep_(std::move(rep)) {}
  BaseField field_;
  Integer rep_;
};

/// Key order for GW terms: by absolute value, positive before negative
/// (so <1>, <-1>, <2>, <-2>, <3>, ...).
struct SquareClassOrder {
  bool operator()(const Integer& a, const Integer& b) const;
};

/// Integer linear combination of rank-one classes <a>. Multiplicities may be
/// negative. Structural equality (==) compares stored terms; use gw_equal for
/// equality in GW(k), which identifies e.g. <2> + <-2> with H over Q.
class GwElement {
 public:
  using Terms = std::map<Integer, std::int64_t, SquareClassOrder>;

  explicit GwElement(BaseField field) : field_(field) {}

  static GwElement zero(const BaseField& field) { return GwElement(field); }
  static GwElement one(const BaseField& field) { return angle(field, 1); }
  static GwElement angle(const BaseField& field, const Rational& a, std::int64_t multiplicity = 1);
  static GwElement angle(const SquareClass& c, std::int64_t multiplicity = 1);
  static GwElement hyperbolic(const BaseField& field);
  /// Sum of <a_i> over the given diagonal entries.
  static GwElement diagonal(const BaseField& field, const std::vector<Rational>& entries);

  const BaseField& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t rank() const;
  /// Requires an ordered base field.
  std::int64_t signature() const;
  /// Requires all multiplicities nonnegative.
  SquareClass discriminant() const;

  /// Re-normalizes every representative in another field (e.g. Q -> R, Q -> F_p).
  GwElement over(const BaseField& target) const;

  GwElement& operator+=(const GwElement& other);
  GwElement& operator-=(const GwElement& other);
  GwElement& operator*=(const GwElement& other);
  GwElement& operator*=(std::int64_t scalar);
  GwElement operator-() const;

  friend GwElement operator+(GwElement a, const GwElement& b) { return a += b; }
  friend GwElement operator-(GwElement a, const GwElement& b) { return a -= b; }
  friend GwElement operator*(const GwElement& a, const GwElement& b);
  friend GwElement operator*(std::int64_t s, GwElement a) { return a *= s; }
  friend bool operator==(const GwElement& a, const GwElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Positive and negative parts: *this = first - second, both with nonnegative multiplicities.
  std::pair<GwElement, GwElement> split() const;

  /// "3*<1> + 2*<-1>", "<1> - <-1>", "0"; with contract_hyperbolic, pairs <1>+<-1> print as H.
  std::string to_string(bool contract_hyperbolic = false) const;

 private:
  void add_term(const Integer& rep, std::int64_t multiplicity);
  BaseField field_;
  Terms terms_;
};

/// Equality in GW(k) through a complete set of invariants of the difference:
/// rank (C), + signature (R), + discriminant (F_p), + signature, discriminant
/// and Hasse invariants at 2 and every prime dividing a representative (Q).
bool gw_equal(const GwElement& a, const GwElement& b);

/// Hasse invariant prod_{i<j} (a_i, a_j)_p of a form with nonnegative multiplicities.
int hasse_invariant(const GwElement& q, const Integer& p);

/// A place of Q: a prime or infinity.
class Place {
 public:
  static Place infinity() { return Place(Integer(0)); }
  static Place prime(const Integer& p);
  bool is_infinite() const { return p_ == 0; }
  const Integer& prime_number() const { return p_; }

 private:
  explicit Place(Integer p) : p_(std::move(p)) {}
  Integer p_;
};

/// Local Hilbert symbol (a, b)_v in {+1, -1}.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// Congruence-diagonalizes a nondegenerate symmetric matrix; throws on singular input.
GwElement diagonalize_symmetric(const Matrix& m, const BaseField& field = BaseField::rationals());

/// Element u + v*sqrt(d) of Q(sqrt(d)), d square-free and != 1.
struct QuadraticNumber {
  Rational u;
  Rational v;
  Integer d;

  bool is_zero() const { return u == 0 && v == 0; }
  QuadraticNumber operator+(const QuadraticNumber& o) const;
  QuadraticNumber operator-(const QuadraticNumber& o) const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;
};

/// Transfer Tr_{Q(sqrt d)/Q} <beta>: the binary form with Gram matrix
/// [[2u, 2dv], [2dv, 2du]].
GwElement trace_form(const Integer& d, const QuadraticNumber& beta,
                     const BaseField& field = BaseField::rationals());

struct GaussianInteger {
  std::int64_t re = 0;
  std::int64_t im = 0;

  GaussianInteger& operator+=(const GaussianInteger& o) { re += o.re; im += o.im; return *this; }
  GaussianInteger& operator-=(const GaussianInteger& o) { re -= o.re; im -= o.im; return *this; }
  friend GaussianInteger operator+(GaussianInteger a, const GaussianInteger& b) { return a += b; }
  friend GaussianInteger operator-(GaussianInteger a, const GaussianInteger& b) { return a -= b; }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianInteger operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
  /// i^e for any integer e.
  static GaussianInteger i_power(std::int64_t e);
  std::string to_string() const;
};

/// even + odd * alpha in GW(k)(alpha), alpha^2 = <-1>.
class GwAlphaElement {
 public:
  explicit GwAlphaElement(BaseField field) : even_(field), odd_(field) {}
  GwAlphaElement(GwElement even, GwElement odd);
  explicit GwAlphaElement(GwElement even);

  static GwAlphaElement zero(const BaseField& field) { return GwAlphaElement(field); }
  static GwAlphaElement one(const BaseField& field) { return GwAlphaElement(GwElement::one(field)); }
  static GwAlphaElement alpha(const BaseField& field);
  /// alpha^e for any integer e (alpha^4 = 1, alpha^-1 = <-1> alpha).
  static GwAlphaElement alpha_power(const BaseField& field, std::int64_t e);

  const BaseField& field() const { return even_.field(); }
  const GwElement& even() const { return even_; }
  const GwElement& odd() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  /// The automorphism alpha -> alpha^-1 = <-1> alpha.
  GwAlphaElement conjugate() const;
  /// rank(even) + rank(odd).
  std::int64_t total_rank() const;
  GwAlphaElement over(const BaseField& target) const;

  GwAlphaElement& operator+=(const GwAlphaElement& o);
  GwAlphaElement& operator-=(const GwAlphaElement& o);
  GwAlphaElement& operator*=(const GwAlphaElement& o);
  GwAlphaElement operator-() const { return GwAlphaElement(-even_, -odd_); }
  friend GwAlphaElement operator+(GwAlphaElement a, const GwAlphaElement& b) { return a += b; }
  friend GwAlphaElement operator-(GwAlphaElement a, const GwAlphaElement& b) { return a -= b; }
  friend GwAlphaElement operator*(const GwAlphaElement& a, const GwAlphaElement& b);
  friend bool operator==(const GwAlphaElement&, const GwAlphaElement&) = default;

  std::string to_string(bool contract_hyperbolic = false) const;

 private:
  GwElement even_;
  GwElement odd_;
};

bool gw_equal(const GwAlphaElement& a, const GwAlphaElement& b);

/// rank termwise, alpha -> -1.
std::int64_t numeric_complex(const GwAlphaElement& q);
/// signature termwise, alpha -> i.
GaussianInteger numeric_real(const GwAlphaElement& q);

/// Parses the textual rendering: "<2>", "3*<1> + 2*<-1>", "2*H - <3/4>", "0".
GwElement parse_gw(std::string_view text, const BaseField& field);

}  // namespace arithdt
