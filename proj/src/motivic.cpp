#include "arithdt/motivic.hpp"

#include <sstream>

namespace arithdt {

namespace {

void add_into(LaurentU& acc, const LaurentU& x, std::int64_t sign) {
  for (const auto& [e, c] : x) {
    auto& slot = acc[e];
    slot += sign * c;
    if (slot == 0) acc.erase(e);
  }
}

LaurentU multiply(const LaurentU& a, const LaurentU& b) {
  LaurentU out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& slot = out[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.erase(ea + eb);
    }
  return out;
}

std::string monomial(std::int64_t e) {
  if (e == 0) return "1";
  if (e == 2) return "L";
  if (e % 2 == 0) return "L^{" + std::to_string(e / 2) + "}";
  return "L^{" + std::to_string(e) + "/2}";
}

std::string render(const LaurentU& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    if (e == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << monomial(e);
    }
    first = false;
  }
  return os.str();
}

std::int64_t eval_at_minus_one(const LaurentU& p) {
  std::int64_t s = 0;
  for (const auto& [e, c] : p) s += (e % 2 == 0) ? c : -c;
  return s;
}

GaussianInteger eval_at_i(const LaurentU& p) {
  GaussianInteger s;
  for (const auto& [e, c] : p) s += GaussianInteger{c, 0} * GaussianInteger::i_power(e);
  return s;
}

GwAlphaElement eval_at_alpha(const LaurentU& p, const BaseField& field) {
  GwAlphaElement s(field);
  for (const auto& [e, c] : p) {
    GwAlphaElement a = GwAlphaElement::alpha_power(field, e);
    s += GwAlphaElement(c * a.even(), c * a.odd());
  }
  return s;
}

}  // namespace

// ------------------------------------------------------------ GeneratorSpec

std::shared_ptr<const GeneratorSpec> GeneratorSpec::make(std::string name, std::int64_t chi_complex,
                                                        GaussianInteger chi_real, GwAlphaElement chi_a1) {
  if (name.empty()) throw std::invalid_argument("generator needs a name");
  if (numeric_complex(chi_a1) != chi_complex) {
    throw DomainError("generator " + name + ": rank of chi_a1 disagrees with chi_complex");
  }
  if (chi_a1.field().is_ordered() && !(numeric_real(chi_a1) == chi_real)) {
    throw DomainError("generator " + name + ": signature of chi_a1 disagrees with chi_real");
  }
  return std::make_shared<const GeneratorSpec>(
      GeneratorSpec{std::move(name), chi_complex, chi_real, std::move(chi_a1)});
}

std::shared_ptr<const GeneratorSpec> GeneratorSpec::spec_complex() {
  static const auto spec =
      make("Spec C", 2, GaussianInteger{0, 0}, GwAlphaElement(GwElement::hyperbolic(BaseField::reals())));
  return spec;
}

std::shared_ptr<const GeneratorSpec> GeneratorSpec::quadratic_point(const Integer& d) {
  if (d == 0 || d == 1 || squarefree_part(d) != d) {
    throw DomainError("quadratic_point needs a square-free d != 1");
  }
  BaseField q = BaseField::rationals();
  GwElement trace = GwElement::angle(q, 2) + GwElement::angle(q, Rational(2 * d));
  return make("Spec Q(sqrt " + d.get_str() + ")", 2, GaussianInteger{d > 0 ? 2 : 0, 0},
              GwAlphaElement(trace));
}

bool GeneratorSpec::same_as(const GeneratorSpec& other) const {
  return name == other.name && chi_complex == other.chi_complex && chi_real == other.chi_real &&
         chi_a1 == other.chi_a1;
}

// ------------------------------------------------------------- MotivicClass

MotivicClass::MotivicClass(std::int64_t n) {
  if (n != 0) tate_[0] = n;
}

MotivicClass MotivicClass::u_power(std::int64_t e, std::int64_t coeff) {
  MotivicClass m;
  if (coeff != 0) m.tate_[e] = coeff;
  return m;
}

MotivicClass MotivicClass::from_laurent(LaurentU coeffs) {
  MotivicClass m;
  for (const auto& [e, c] : coeffs)
    if (c != 0) m.tate_[e] = c;
  return m;
}

MotivicClass MotivicClass::generator(GeneratorRef spec, LaurentU coeffs) {
  if (!spec) throw std::invalid_argument("null generator");
  MotivicClass m;
  LaurentU clean;
  for (const auto& [e, c] : coeffs)
    if (c != 0) clean[e] = c;
  if (!clean.empty()) {
    std::string name = spec->name;
    m.extras_.emplace(std::move(name), Extra{std::move(spec), std::move(clean)});
  }
  return m;
}

std::int64_t MotivicClass::coefficient(std::int64_t e) const {
  auto it = tate_.find(e);
  return it == tate_.end() ? 0 : it->second;
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
  add_into(tate_, o.tate_, 1);
  for (const auto& [name, extra] : o.extras_) {
    auto it = extras_.find(name);
    if (it == extras_.end()) {
      extras_.emplace(name, extra);
      continue;
    }
    if (!it->second.spec->same_as(*extra.spec)) {
      throw DomainError("two different generators share the name " + name);
    }
    add_into(it->second.coeffs, extra.coeffs, 1);
    if (it->second.coeffs.empty()) extras_.erase(it);
  }
  return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o) { return *this += -o; }

MotivicClass MotivicClass::operator-() const {
  MotivicClass m = *this;
  for (auto& [e, c] : m.tate_) c = -c;
  for (auto& [name, extra] : m.extras_)
    for (auto& [e, c] : extra.coeffs) c = -c;
  return m;
}

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
  if (!a.extras_.empty() && !b.extras_.empty()) {
    throw DomainError("product of two non-Tate generators is outside the supported subring");
  }
  MotivicClass out;
  out.tate_ = multiply(a.tate_, b.tate_);
  const MotivicClass& tate_side = a.extras_.empty() ? a : b;
  const MotivicClass& extra_side = a.extras_.empty() ? b : a;
  for (const auto& [name, extra] : extra_side.extras_) {
    LaurentU c = multiply(tate_side.tate_, extra.coeffs);
    if (!c.empty()) out.extras_.emplace(name, MotivicClass::Extra{extra.spec, std::move(c)});
  }
  return out;
}

MotivicClass& MotivicClass::operator*=(const MotivicClass& o) { return *this = *this * o; }

bool operator==(const MotivicClass& a, const MotivicClass& b) {
  if (a.tate_ != b.tate_ || a.extras_.size() != b.extras_.size()) return false;
  for (const auto& [name, extra] : a.extras_) {
    auto it = b.extras_.find(name);
    if (it == b.extras_.end() || it->second.coeffs != extra.coeffs ||
        !it->second.spec->same_as(*extra.spec))
      return false;
  }
  return true;
}

MotivicClass MotivicClass::divide_exact(const MotivicClass& divisor) const {
  if (!is_tate() || !divisor.is_tate()) throw DomainError("exact division is only defined on Tate classes");
  if (divisor.is_zero()) throw DomainError("division by zero class");
  if (is_zero()) return MotivicClass();
  // Long division from the top exponent down; the divisor's lowest exponent
  // bounds how far the quotient may reach.
  LaurentU rem = tate_;
  const auto [dtop, dlead] = *divisor.tate_.rbegin();
  const std::int64_t dlow = divisor.tate_.begin()->first;
  LaurentU quotient;
  while (!rem.empty()) {
    auto [rtop, rlead] = *rem.rbegin();
    if (rtop - dtop + dlow < rem.begin()->first || rlead % dlead != 0) break;
    std::int64_t qe = rtop - dtop;
    std::int64_t qc = rlead / dlead;
    quotient[qe] += qc;
    for (const auto& [e, c] : divisor.tate_) {
      auto& slot = rem[e + qe];
      slot -= qc * c;
      if (slot == 0) rem.erase(e + qe);
    }
  }
  if (!rem.empty()) throw DomainError("inexact division of motivic classes");
  return from_laurent(std::move(quotient));
}

std::string MotivicClass::to_string() const {
  std::string s = tate_.empty() && !extras_.empty() ? "" : render(tate_);
  for (const auto& [name, extra] : extras_) {
    bool negative = false;
    std::string term;
    if (extra.coeffs.size() == 1) {
      auto [e, c] = *extra.coeffs.begin();
      negative = c < 0;
      const std::string factor = render({{e, negative ? -c : c}});
      term = factor == "1" ? "[" + name + "]" : factor + "*[" + name + "]";
    } else {
      term = "(" + render(extra.coeffs) + ")*[" + name + "]";
    }
    if (s.empty()) s = negative ? "-" + term : term;
    else s += (negative ? " - " : " + ") + term;
  }
  return s;
}

MotivicClass pow(const MotivicClass& base, unsigned exponent) {
  MotivicClass result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

MotivicClass projective_space_class(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("projective_space_class needs n >= 0");
  LaurentU p;
  for (std::int64_t k = 0; k <= n; ++k) p[2 * k] = 1;
  return MotivicClass::from_laurent(std::move(p));
}

MotivicClass grassmannian_class(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) throw std::invalid_argument("grassmannian_class needs 0 <= k <= n");
  const MotivicClass L = MotivicClass::lefschetz();
  MotivicClass num(1), den(1);
  for (std::int64_t i = 0; i < k; ++i) {
    num *= pow(L, static_cast<unsigned>(n - i)) - 1;
    den *= pow(L, static_cast<unsigned>(i + 1)) - 1;
  }
  return num.divide_exact(den);
}

std::int64_t chi_complex(const MotivicClass& m) {
  std::int64_t s = eval_at_minus_one(m.tate());
  for (const auto& [name, extra] : m.extras()) s += extra.spec->chi_complex * eval_at_minus_one(extra.coeffs);
  return s;
}

GaussianInteger chi_real(const MotivicClass& m) {
  GaussianInteger s = eval_at_i(m.tate());
  for (const auto& [name, extra] : m.extras()) s += extra.spec->chi_real * eval_at_i(extra.coeffs);
  return s;
}

GwAlphaElement chi_a1(const MotivicClass& m, const BaseField& field) {
  GwAlphaElement s = eval_at_alpha(m.tate(), field);
  for (const auto& [name, extra] : m.extras()) {
    s += extra.spec->chi_a1.over(field) * eval_at_alpha(extra.coeffs, field);
  }
  return s;
}

}  // namespace arithdt
