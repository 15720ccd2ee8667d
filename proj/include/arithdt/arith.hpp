#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arithdt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is applied outside its mathematical domain
/// (field mismatch, singular input, unsupported ideal, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "3", "-7/12", " 4 / 6 " into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Signed square-free part of a nonzero integer: n = s * m^2 with s square-free.
/// Trial division up to 10^6, then Pollard rho on the remaining cofactor.
Integer squarefree_part(const Integer& n);
/// Square-free integer in the square class of a nonzero rational p/q (that is, of p*q).
Integer squarefree_part(const Rational& q);

/// Distinct prime divisors of |n| in increasing order (n != 0).
std::vector<Integer> prime_factors(const Integer& n);

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Exponent of the prime p in the nonzero integer n; n is replaced by the cofactor.
unsigned remove_factor(Integer& n, const Integer& p);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const;
  bool is_symmetric() const;
  bool is_zero() const;
  Rational trace() const;
  Rational determinant() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace arithdt
