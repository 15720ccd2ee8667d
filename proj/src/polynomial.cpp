#include "arithdt/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace arithdt {

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  Exponents zero(variables.size(), 0);
  return monomial(std::move(variables), std::move(zero), c);
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents e, const Rational& c) {
  if (e.size() != variables.size()) throw std::invalid_argument("exponent vector length mismatch");
  MultiPoly p(std::move(variables));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t i) {
  Exponents e(variables.size(), 0);
  e.at(i) = 1;
  return monomial(std::move(variables), std::move(e));
}

const Exponents& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw DomainError("polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly p(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  MultiPoly p(a.vars_);
  if (s == 0) return p;
  p.terms_ = a.terms_;
  for (auto& [e, c] : p.terms_) c *= s;
  return p;
}

MultiPoly MultiPoly::times_term(const Exponents& e, const Rational& c) const {
  MultiPoly p(vars_);
  if (c == 0) return p;
  for (const auto& [ea, ca] : terms_) {
    Exponents sum(e.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + e[i];
    p.terms_.emplace_hint(p.terms_.end(), std::move(sum), ca * c);
  }
  return p;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly p(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents d = e;
    --d[var];
    p.add_term(d, c * e[var]);
  }
  return p;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / leading_coefficient() * *this;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    bool constant = total_degree(e) == 0;
    if (mag != 1 || constant) os << mag.get_str() << (constant ? "" : "*");
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

namespace {

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(vars, 1);
  if (n == 1) return m[0][0];
  MultiPoly det(vars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][col] * determinant(minor, vars);
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace

MultiPoly jacobian_determinant(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) throw DomainError("empty polynomial system");
  const auto& vars = polys[0].variables();
  if (polys.size() != vars.size()) throw DomainError("Jacobian needs a square system");
  std::vector<std::vector<MultiPoly>> jac;
  for (const auto& p : polys) {
    if (p.variables() != vars) throw DomainError("polynomials over different variable lists");
    std::vector<MultiPoly> row;
    for (std::size_t j = 0; j < vars.size(); ++j) row.push_back(p.derivative(j));
    jac.push_back(std::move(row));
  }
  return determinant(jac, vars);
}

}  // namespace arithdt
