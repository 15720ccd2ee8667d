#include "arithdt/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace arithdt {

namespace {

const std::vector<std::string>& common_variables(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) throw DomainError("empty generator list");
  const auto& vars = polys.front().variables();
  for (const auto& p : polys)
    if (p.variables() != vars) throw DomainError("generators use different variable lists");
  return vars;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Exponents l = lcm(f.leading_monomial(), g.leading_monomial());
  MultiPoly a = f.times_term(quotient(l, f.leading_monomial()), Rational(1) / f.leading_coefficient());
  MultiPoly b = g.times_term(quotient(l, g.leading_monomial()), Rational(1) / g.leading_coefficient());
  return a - b;
}

}  // namespace

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
  MultiPoly remainder(p.variables());
  MultiPoly work = p;
  while (!work.is_zero()) {
    const Exponents lm = work.leading_monomial();
    const Rational lc = work.leading_coefficient();
    bool divided = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !divides(g.leading_monomial(), lm)) continue;
      work -= g.times_term(quotient(lm, g.leading_monomial()), lc / g.leading_coefficient());
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add_term(lm, lc);
      work.add_term(lm, -lc);
    }
  }
  return remainder;
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators) {
  common_variables(generators);
  std::vector<MultiPoly> g;
  for (const auto& p : generators)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return {};

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);

  while (!pairs.empty()) {
    auto [i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    MultiPoly r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].leading_monomial(), g[i].leading_monomial())) continue;
      // Equal leading monomials: keep the first occurrence only.
      redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Interreduce.
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly tail = minimal[i];
    const Exponents lm = tail.leading_monomial();
    tail.add_term(lm, -tail.leading_coefficient());
    MultiPoly r = reduce(tail, others);
    r.add_term(lm, 1);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return GrevlexGreater{}(b.leading_monomial(), a.leading_monomial());
  });
  return reduced;
}

QuotientAlgebra QuotientAlgebra::of(const std::vector<MultiPoly>& ideal) {
  QuotientAlgebra a;
  a.vars_ = common_variables(ideal);
  a.basis_ = buchberger(ideal);
  const std::size_t n = a.vars_.size();

  for (const auto& g : a.basis_)
    if (total_degree(g.leading_monomial()) == 0) throw DomainError("unit ideal: the zero set is empty");

  // Zero-dimensional iff every variable has a pure power among the leading monomials.
  std::vector<int> bound(n, 0);
  for (const auto& g : a.basis_) {
    const Exponents& lm = g.leading_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] > 0) ++support, var = i;
    if (support == 1 && (bound[var] == 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] == 0) throw DomainError("positive-dimensional ideal: " + a.vars_[i] + " has no pure power leading term");

  // Standard monomials lie in the box below the pure-power bounds.
  Exponents e(n, 0);
  while (true) {
    bool standard = true;
    for (const auto& g : a.basis_)
      if (divides(g.leading_monomial(), e)) { standard = false; break; }
    if (standard) a.standard_.push_back(e);
    std::size_t i = 0;
    while (i < n && ++e[i] >= bound[i]) e[i++] = 0;
    if (i == n) break;
  }
  std::sort(a.standard_.begin(), a.standard_.end(),
            [](const Exponents& x, const Exponents& y) { return GrevlexGreater{}(y, x); });

  // Locality: in a local Artinian algebra of dimension d the maximal ideal satisfies m^d = 0.
  const auto d = static_cast<int>(a.dimension());
  for (std::size_t i = 0; i < n; ++i) {
    Exponents power(n, 0);
    power[i] = d;
    if (!a.normal_form(MultiPoly::monomial(a.vars_, power)).is_zero()) {
      throw DomainError("zero set not supported at the origin: " + a.vars_[i] + " is not nilpotent");
    }
  }
  return a;
}

MultiPoly QuotientAlgebra::normal_form(const MultiPoly& p) const {
  if (p.variables() != vars_) throw DomainError("polynomial over a different variable list");
  return reduce(p, basis_);
}

std::vector<Rational> QuotientAlgebra::coordinates(const MultiPoly& p) const {
  MultiPoly nf = normal_form(p);
  std::vector<Rational> c(standard_.size());
  for (std::size_t i = 0; i < standard_.size(); ++i) c[i] = nf.coefficient(standard_[i]);
  return c;
}

MultiPoly QuotientAlgebra::basis_element(std::size_t i) const { return MultiPoly::monomial(vars_, standard_.at(i)); }

}  // namespace arithdt
