#include "arithdt/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace arithdt {

namespace {

constexpr unsigned long kTrialBound = 1000000;

std::string strip(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// Brent's variant of Pollard rho; n odd composite, not a perfect power of a prime found so far.
Integer rho_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && r < (1ul << 26));
    if (g == n) {
      do {
        step(ys);
        mpz_gcd(g.get_mpz_t(), Integer(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
    if (c > 64) throw DomainError("factorization of " + n.get_str() + " did not terminate");
  }
}

// Multiplies into `exponents` the prime factorization of n > 1 (no factors below the trial bound).
void factor_into(const Integer& n, std::map<Integer, unsigned>& exponents) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++exponents[n];
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned> half;
    factor_into(root, half);
    for (const auto& [p, e] : half) exponents[p] += 2 * e;
    return;
  }
  Integer d = rho_factor(n);
  factor_into(d, exponents);
  factor_into(Integer(n / d), exponents);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + i, t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(std::uint64_t n) { return is_prime(Integer(std::to_string(n))); }

unsigned remove_factor(Integer& n, const Integer& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  return static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw DomainError("square class of zero is undefined");
  Integer rest = abs(n);
  Integer result = sgn(n) < 0 ? -1 : 1;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (rest == 1) break;
    Integer pz = p;
    if (pz * pz > rest) break;
    unsigned e = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t()));
    if (e % 2 == 1) result *= pz;
  }
  if (rest == 1) return result;
  if (mpz_perfect_square_p(rest.get_mpz_t())) return result;
  Integer bound = kTrialBound;
  if (rest < bound * bound || is_prime(rest)) return result * rest;
  std::map<Integer, unsigned> exponents;
  factor_into(rest, exponents);
  for (const auto& [p, e] : exponents)
    if (e % 2 == 1) result *= p;
  return result;
}

std::vector<Integer> prime_factors(const Integer& n) {
  if (n == 0) throw DomainError("prime factors of zero are undefined");
  std::map<Integer, unsigned> exponents;
  Integer rest = abs(n);
  for (unsigned long p = 2; p <= kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
    Integer pz = p;
    if (pz * pz > rest) break;
    if (unsigned e = remove_factor(rest, pz); e > 0) exponents[pz] = e;
  }
  factor_into(rest, exponents);
  std::vector<Integer> out;
  for (const auto& [p, e] : exponents) out.push_back(p);
  return out;
}

Integer squarefree_part(const Rational& q) {
  return squarefree_part(Integer(q.get_num() * q.get_den()));
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

Rational Matrix::trace() const {
  if (!square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Rational Matrix::determinant() const {
  if (!square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace arithdt
