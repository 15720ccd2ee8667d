#pragma once

// Truncated power series in one variable t over a commutative ring R.
// Coefficients t^0 .. t^order are kept; every operation returns a series of
// the same order and never reads beyond it.
//
// A ring type plugs in through RingTraits<R>, which supplies zero/one given a
// sample element (GW elements carry their base field) and inverts units.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arithdt/gw.hpp"
#include "arithdt/motivic.hpp"

namespace arithdt {

template <typename R>
struct RingTraits;

template <>
struct RingTraits<std::int64_t> {
  static std::int64_t zero(const std::int64_t&) { return 0; }
  static std::int64_t one(const std::int64_t&) { return 1; }
  static std::optional<std::int64_t> unit_inverse(const std::int64_t& c) {
    if (c == 1 || c == -1) return c;
    return std::nullopt;
  }
};

template <>
struct RingTraits<GaussianInteger> {
  static GaussianInteger zero(const GaussianInteger&) { return {0, 0}; }
  static GaussianInteger one(const GaussianInteger&) { return {1, 0}; }
  static std::optional<GaussianInteger> unit_inverse(const GaussianInteger& c) {
    if (c.re * c.re + c.im * c.im != 1) return std::nullopt;
    return GaussianInteger{c.re, -c.im};
  }
};

template <>
struct RingTraits<MotivicClass> {
  static MotivicClass zero(const MotivicClass&) { return MotivicClass(); }
  static MotivicClass one(const MotivicClass&) { return MotivicClass(1); }
  static std::optional<MotivicClass> unit_inverse(const MotivicClass& c) {
    if (!c.is_tate() || c.tate().size() != 1) return std::nullopt;
    auto [e, k] = *c.tate().begin();
    if (k != 1 && k != -1) return std::nullopt;
    return MotivicClass::u_power(-e, k);
  }
};

template <>
struct RingTraits<GwElement> {
  static GwElement zero(const GwElement& like) { return GwElement::zero(like.field()); }
  static GwElement one(const GwElement& like) { return GwElement::one(like.field()); }
  static std::optional<GwElement> unit_inverse(const GwElement& c) {
    // +-<a> is its own inverse.
    if (c.terms().size() == 1 && (c.rank() == 1 || c.rank() == -1)) return c;
    return std::nullopt;
  }
};

template <>
struct RingTraits<GwAlphaElement> {
  static GwAlphaElement zero(const GwAlphaElement& like) { return GwAlphaElement::zero(like.field()); }
  static GwAlphaElement one(const GwAlphaElement& like) { return GwAlphaElement::one(like.field()); }
  static std::optional<GwAlphaElement> unit_inverse(const GwAlphaElement& c) {
    if (c.odd().is_zero()) {
      auto inv = RingTraits<GwElement>::unit_inverse(c.even());
      if (inv) return GwAlphaElement(*inv);
      return std::nullopt;
    }
    if (c.even().is_zero()) {
      // (x alpha)^-1 = x^-1 alpha^-1 = x^-1 <-1> alpha
      auto inv = RingTraits<GwElement>::unit_inverse(c.odd());
      if (!inv) return std::nullopt;
      return GwAlphaElement(GwElement::zero(c.field()), GwElement::angle(c.field(), -1) * *inv);
    }
    return std::nullopt;
  }
};

template <typename R>
class TruncatedSeries {
 public:
  using Traits = RingTraits<R>;

  TruncatedSeries(int order, std::vector<R> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 0) throw std::invalid_argument("series order must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(order_) + 1) {
      throw std::invalid_argument("series needs exactly order+1 coefficients");
    }
  }

  /// c * t^power (zero if power > order).
  static TruncatedSeries monomial(int order, const R& c, int power) {
    std::vector<R> v(static_cast<std::size_t>(order) + 1, Traits::zero(c));
    if (power >= 0 && power <= order) v[static_cast<std::size_t>(power)] = c;
    return TruncatedSeries(order, std::move(v));
  }
  static TruncatedSeries constant(int order, const R& c) { return monomial(order, c, 0); }
  static TruncatedSeries one(int order, const R& like) { return constant(order, Traits::one(like)); }
  static TruncatedSeries zero(int order, const R& like) { return constant(order, Traits::zero(like)); }

  int order() const { return order_; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    check_order(o);
    TruncatedSeries r = *this;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] += o.coeffs_[n];
    return r;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const {
    check_order(o);
    TruncatedSeries r = *this;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] -= o.coeffs_[n];
    return r;
  }

  /// Cauchy product truncated at order.
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    check_order(o);
    std::vector<R> out(coeffs_.size(), Traits::zero(coeffs_[0]));
    for (int i = 0; i <= order_; ++i) {
      if (is_zero_coeff(coeffs_[i])) continue;
      for (int j = 0; i + j <= order_; ++j) {
        if (is_zero_coeff(o.coeffs_[j])) continue;
        out[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return TruncatedSeries(order_, std::move(out));
  }

  /// Two-sided inverse up to order; the constant term must be a unit.
  TruncatedSeries inverse() const {
    auto c0_inv = Traits::unit_inverse(coeffs_[0]);
    if (!c0_inv) throw DomainError("series_inverse: constant term is not a unit");
    std::vector<R> b(coeffs_.size(), Traits::zero(coeffs_[0]));
    b[0] = *c0_inv;
    for (int n = 1; n <= order_; ++n) {
      R acc = Traits::zero(coeffs_[0]);
      for (int k = 1; k <= n; ++k) {
        if (is_zero_coeff(coeffs_[k])) continue;
        acc += coeffs_[k] * b[n - k];
      }
      b[n] = Traits::zero(coeffs_[0]) - *c0_inv * acc;
    }
    return TruncatedSeries(order_, std::move(b));
  }

  /// Repeated squaring; negative exponents go through inverse().
  TruncatedSeries pow(std::int64_t e) const {
    TruncatedSeries base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    TruncatedSeries result = one(order_, coeffs_[0]);
    while (k > 0) {
      if (k & 1u) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Multiplies by (1 - x t^m)^-1 = sum_j x^j t^{mj} in place (m >= 1).
  TruncatedSeries& divide_by_one_minus(const R& x, int m) {
    if (m < 1) throw std::invalid_argument("divide_by_one_minus needs m >= 1");
    for (int n = m; n <= order_; ++n) {
      if (is_zero_coeff(coeffs_[n - m])) continue;
      coeffs_[n] += x * coeffs_[n - m];
    }
    return *this;
  }

  /// Coefficientwise image under a ring morphism R -> S.
  template <typename F>
  auto map_coeffs(F&& f) const -> TruncatedSeries<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<S>(order_, std::move(out));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_order(const TruncatedSeries& o) const {
    if (o.order_ != order_) throw DomainError("series order mismatch");
  }
  static bool is_zero_coeff(const R& c) {
    if constexpr (requires { c.is_zero(); }) return c.is_zero();
    else return c == Traits::zero(c);
  }

  int order_;
  std::vector<R> coeffs_;
};

template <typename R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) { return a * b; }
template <typename R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& a) { return a.inverse(); }
template <typename R>
TruncatedSeries<R> series_int_pow(const TruncatedSeries<R>& a, std::int64_t e) { return a.pow(e); }
template <typename R, typename F>
auto map_coeffs(const TruncatedSeries<R>& a, F&& f) { return a.map_coeffs(std::forward<F>(f)); }

/// Ring morphisms that map_coeffs is used with.
namespace morphisms {

struct ChiComplex {
  std::int64_t operator()(const MotivicClass& m) const { return chi_complex(m); }
};
struct ChiReal {
  GaussianInteger operator()(const MotivicClass& m) const { return chi_real(m); }
};
struct ChiA1 {
  BaseField field;
  GwAlphaElement operator()(const MotivicClass& m) const { return chi_a1(m, field); }
};
/// rank termwise with alpha -> -1.
struct AlphaToMinusOne {
  std::int64_t operator()(const GwAlphaElement& q) const { return numeric_complex(q); }
};
/// signature termwise with alpha -> i.
struct AlphaToI {
  GaussianInteger operator()(const GwAlphaElement& q) const { return numeric_real(q); }
};
struct Rank {
  std::int64_t operator()(const GwElement& q) const { return q.rank(); }
};
struct Signature {
  std::int64_t operator()(const GwElement& q) const { return q.signature(); }
};

}  // namespace morphisms

}  // namespace arithdt
