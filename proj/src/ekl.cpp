#include "arithdt/ekl.hpp"

#include <algorithm>

namespace arithdt {

namespace {

void check_square_system(const std::vector<MultiPoly>& p) {
  if (p.empty()) throw DomainError("empty polynomial system");
  if (p.size() != p.front().nvars()) {
    throw DomainError("EKL class needs as many polynomials as variables");
  }
}

EklResult build(const QuotientAlgebra& a, const MultiPoly& e, const std::vector<Rational>& phi,
                const BaseField& field) {
  const std::size_t n = a.dimension();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::vector<Rational> c = a.coordinates(a.basis_element(i) * a.basis_element(j));
      Rational v = 0;
      for (std::size_t k = 0; k < n; ++k) v += phi[k] * c[k];
      gram(i, j) = v;
      gram(j, i) = v;
    }
  }
  if (gram.determinant() == 0) throw DomainError("residue pairing is degenerate");
  GwElement cls = diagonalize_symmetric(gram, field);
  return {cls, cls.rank(), gram, e, phi, a.standard_monomials()};
}

struct Setup {
  QuotientAlgebra algebra;
  MultiPoly socle;
};

Setup prepare(const std::vector<MultiPoly>& p) {
  check_square_system(p);
  QuotientAlgebra a = QuotientAlgebra::of(p);
  MultiPoly e = Rational(1, a.dimension()) * a.normal_form(jacobian_determinant(p));
  if (e.is_zero()) throw DomainError("Jacobian determinant vanishes in the local algebra");
  return {std::move(a), std::move(e)};
}

// ------------------------------------------------------- univariate helpers

using UPoly = std::vector<Rational>;  // coefficients, constant term first

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly to_univariate(const MultiPoly& p) {
  if (p.nvars() != 1) throw DomainError("expected a polynomial in one variable");
  UPoly f;
  for (const auto& [e, c] : p.terms()) {
    auto k = static_cast<std::size_t>(e[0]);
    if (f.size() <= k) f.resize(k + 1);
    f[k] = c;
  }
  trim(f);
  return f;
}

UPoly derivative(const UPoly& f) {
  UPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<long>(k));
  trim(d);
  return d;
}

std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::logic_error("division by zero polynomial");
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <typename T>
T horner(const UPoly& f, const T& x, const T& zero) {
  T acc = zero;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + T{*it};
  return acc;
}

Rational eval(const UPoly& f, const Rational& x) { return horner<Rational>(f, x, Rational(0)); }

QuadraticNumber eval(const UPoly& f, const QuadraticNumber& x) {
  QuadraticNumber acc{0, 0, x.d};
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + QuadraticNumber{*it, 0, x.d};
  return acc;
}

// Integer coefficients with content 1.
std::vector<Integer> primitive(const UPoly& f) {
  Integer l = 1;
  for (const auto& c : f) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> z;
  Integer g = 0;
  for (const auto& c : f) {
    Rational s = c * l;
    z.push_back(s.get_num());
    g = gcd(g, s.get_num());
  }
  for (auto& c : z) c /= g;
  return z;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  if (n == 0) throw std::logic_error("divisors of zero");
  if (n > Integer("1000000000000")) throw DomainError("coefficients too large for fibre factorisation");
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = remove_factor(n, p);
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t count = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

std::optional<Rational> find_rational_root(const UPoly& f) {
  if (f[0] == 0) return Rational(0);
  std::vector<Integer> z = primitive(f);
  for (const auto& p : positive_divisors(z.front()))
    for (const auto& q : positive_divisors(z.back()))
      for (int sign : {1, -1}) {
        Rational r(sign * p, q);
        r.canonicalize();
        if (eval(f, r) == 0) return r;
      }
  return std::nullopt;
}

// Kronecker's method restricted to quadratic factors; f has no rational roots.
std::optional<UPoly> find_quadratic_factor(const UPoly& f) {
  std::vector<Integer> z = primitive(f);
  UPoly fz;
  for (const auto& c : z) fz.emplace_back(c);
  const Integer v0 = eval(fz, Rational(0)).get_num();
  const Integer v1 = eval(fz, Rational(1)).get_num();
  const Integer vm = eval(fz, Rational(-1)).get_num();
  auto signed_divisors = [](const Integer& v) {
    std::vector<Integer> out;
    for (const auto& d : positive_divisors(v)) {
      out.push_back(d);
      out.push_back(-d);
    }
    return out;
  };
  const auto d1s = signed_divisors(v1);
  const auto dms = signed_divisors(vm);
  for (const auto& d0 : positive_divisors(v0))
    for (int s0 : {1, -1}) {
      Integer c = s0 * d0;
      for (const auto& d1 : d1s)
        for (const auto& dm : dms) {
          Integer twice_a = d1 + dm - 2 * c;
          Integer twice_b = d1 - dm;
          if (twice_a == 0 || twice_a % 2 != 0 || twice_b % 2 != 0) continue;
          UPoly q{Rational(c), Rational(twice_b / 2), Rational(twice_a / 2)};
          if (divmod(f, q).second.empty()) return q;
        }
    }
  return std::nullopt;
}

}  // namespace

EklResult ekl_class(const std::vector<MultiPoly>& p, const BaseField& field) {
  Setup s = prepare(p);
  const auto& mons = s.algebra.standard_monomials();
  std::vector<Rational> phi(mons.size());
  for (std::size_t k = mons.size(); k-- > 0;) {
    Rational c = s.socle.coefficient(mons[k]);
    if (c != 0) {
      phi[k] = 1 / c;
      break;
    }
  }
  return build(s.algebra, s.socle, phi, field);
}

EklResult ekl_class_with_functional(const std::vector<MultiPoly>& p, const std::vector<Rational>& phi,
                                    const BaseField& field) {
  Setup s = prepare(p);
  const auto& mons = s.algebra.standard_monomials();
  if (phi.size() != mons.size()) throw DomainError("functional has the wrong length");
  Rational value = 0;
  for (std::size_t k = 0; k < mons.size(); ++k) value += phi[k] * s.socle.coefficient(mons[k]);
  if (value != 1) throw DomainError("functional is not normalised: phi(E) = " + to_string(value));
  return build(s.algebra, s.socle, phi, field);
}

GwElement local_degree_simple(const std::vector<MultiPoly>& p, const std::vector<Rational>& point,
                              const BaseField& field) {
  check_square_system(p);
  Rational j = jacobian_determinant(p).evaluate(point);
  if (j == 0) throw DomainError("Jacobian determinant vanishes at the point");
  return GwElement::angle(field, j);
}

GwElement local_degree_simple(const std::vector<MultiPoly>& p, const std::vector<QuadraticNumber>& point) {
  check_square_system(p);
  if (point.size() != p.front().nvars()) throw DomainError("point has the wrong dimension");
  const Integer d = point.front().d;
  for (const auto& x : point)
    if (x.d != d) throw DomainError("point coordinates lie in different quadratic fields");
  if (d == 1 || squarefree_part(d) != d) throw DomainError("quadratic field needs a square-free d != 1");

  const MultiPoly j = jacobian_determinant(p);
  QuadraticNumber value{0, 0, d};
  for (const auto& [e, c] : j.terms()) {
    QuadraticNumber term{c, 0, d};
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * point[i];
    value = value + term;
  }
  if (value.is_zero()) throw DomainError("Jacobian determinant vanishes at the point");
  return trace_form(d, value);
}

GwElement global_degree_univariate(const MultiPoly& p, const Rational& y) {
  UPoly f = to_univariate(p);
  if (f.empty()) f.push_back(0);
  f[0] -= y;
  trim(f);
  if (deg(f) < 1) throw DomainError("constant map has no finite fibre");
  const UPoly fprime = derivative(to_univariate(p));
  if (deg(gcd(f, derivative(f))) > 0) throw DomainError("fibre has repeated roots");

  const BaseField q = BaseField::rationals();
  GwElement total(q);
  while (deg(f) >= 1) {
    if (auto r = find_rational_root(f)) {
      total += GwElement::angle(q, eval(fprime, *r));
      f = divmod(f, UPoly{-*r, 1}).first;
      continue;
    }
    UPoly quad;
    if (deg(f) == 2) {
      quad = f;
    } else if (auto found = find_quadratic_factor(f)) {
      quad = *found;
    } else {
      throw DomainError("fibre has an irreducible factor of degree >= 3 (unsupported)");
    }
    const Rational &c = quad[0], &b = quad[1], &a = quad[2];
    const Rational disc = b * b - 4 * a * c;
    const Integer sq = squarefree_part(disc);
    Rational scale = disc / sq;  // a rational square
    Integer num = sqrt(Integer(scale.get_num()));
    Integer den = sqrt(Integer(scale.get_den()));
    const Rational s(num, den);
    QuadraticNumber root{-b / (2 * a), s / (2 * a), sq};
    total += trace_form(sq, eval(fprime, root));
    f = divmod(f, quad).first;
  }
  return total;
}

EklResult milnor_number_a1(const MultiPoly& f, const BaseField& field) {
  std::vector<MultiPoly> grad;
  for (std::size_t i = 0; i < f.nvars(); ++i) grad.push_back(f.derivative(i));
  return ekl_class(grad, field);
}

MilnorChiReport milnor_chi_relation(const MultiPoly& f, const std::optional<SncData>& local_strata,
                                    const BaseField& field) {
  if (!local_strata) throw DomainError("missing strata data for the local nearby fibre");
  const GwElement mu = milnor_number_a1(f, field).gw_class;
  const std::int64_t sign = (f.nvars() % 2 == 1) ? 1 : -1;  // (-1)^{n-1}
  GwAlphaElement rhs(GwElement::one(field) + sign * mu);
  GwAlphaElement lhs = chi_a1(local_nearby_class(*local_strata), field);
  bool equal = gw_equal(lhs, rhs);
  std::string verdict = equal ? "equal" : "differ: " + lhs.to_string() + " vs " + rhs.to_string();
  return {lhs, rhs, mu, equal, verdict};
}

}  // namespace arithdt
