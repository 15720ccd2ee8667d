#include "arithdt/selftest.hpp"

#include <functional>
#include <random>

#include "arithdt/castelnuovo.hpp"
#include "arithdt/dt_hilbert.hpp"
#include "arithdt/ekl.hpp"
#include "arithdt/nearby.hpp"
#include "arithdt/oracles.hpp"

namespace arithdt {

namespace {

SelftestCheck run(const std::string& name, const std::function<bool()>& body) {
  try {
    return {name, body(), ""};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

MultiPoly poly(const std::vector<std::string>& vars, std::initializer_list<std::pair<Exponents, Rational>> terms) {
  MultiPoly p(vars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  const BaseField q = BaseField::rationals();
  std::vector<SelftestCheck> checks;

  checks.push_back(run("MacMahon specialisation against plane-partition enumeration", [] {
    const int order = 8;
    IntSeries complex = z_motivic(order).map_coeffs(morphisms::ChiComplex{});
    for (int n = 0; n <= order; ++n) {
      std::int64_t sign = n % 2 == 0 ? 1 : -1;
      if (complex[n] != sign * count_plane_partitions(n)) return false;
    }
    return true;
  }));

  checks.push_back(run("symmetric MacMahon specialisation against enumeration", [&] {
    const int order = 8;
    GaussianSeries real = z_arithmetic(order, q).map_coeffs(morphisms::AlphaToI{});
    for (int n = 0; n <= order; ++n) {
      GaussianInteger expected = GaussianInteger{count_symmetric_plane_partitions(n), 0} * GaussianInteger::i_power(-n);
      if (!(real[n] == expected)) return false;
    }
    return true;
  }));

  checks.push_back(run("refined product equals chi_a1 of the motivic series", [&] {
    const int order = 6;
    GwAlphaSeries direct = z_motivic(order).map_coeffs(morphisms::ChiA1{q});
    GwAlphaSeries product = z_arithmetic(order, q);
    for (int n = 0; n <= order; ++n)
      if (!gw_equal(direct[n], product[n])) return false;
    return true;
  }));

  checks.push_back(run("EKL golden values", [&] {
    const std::vector<std::string> x{"x"}, xy{"x", "y"};
    bool ok = gw_equal(ekl_class({poly(x, {{{2}, 1}})}).gw_class, GwElement::hyperbolic(q));
    ok = ok && gw_equal(milnor_number_a1(poly(xy, {{{2, 0}, 1}, {{0, 2}, -1}})).gw_class, GwElement::angle(q, -1));
    ok = ok && gw_equal(ekl_class({poly(x, {{{3}, 1}})}).gw_class, GwElement::one(q) + GwElement::hyperbolic(q));
    ok = ok && gw_equal(global_degree_univariate(poly(x, {{{2}, 1}}), -1), GwElement::hyperbolic(q));
    return ok;
  }));

  checks.push_back(run("hyperbola nearby fibre", [&] {
    const MotivicClass L = MotivicClass::lefschetz();
    auto rec = [](std::vector<int> i, MotivicClass c) {
      std::map<int, std::int64_t> mult;
      for (int k : i) mult[k] = 1;
      return StratumRecord::make(std::move(i), std::move(c), std::move(mult));
    };
    SncData global = SncData::make({rec({1}, L - 1), rec({2}, L - 1), rec({1, 2}, 1)}, 2, 2 * L - 1);
    SncData local = SncData::make({rec({1}, 0), rec({2}, 0), rec({1, 2}, 1)}, 2, 1);
    MotivicClass s0 = local_nearby_class(local);
    return nearby_class(global) == L - 1 && s0 == 1 - L && chi_complex(s0) == 0 &&
           chi_real(s0) == GaussianInteger{2, 0} &&
           virtual_class_critical_locus(nearby_class(global), 2 * L - 1, 2) == MotivicClass(1);
  }));

  checks.push_back(run("Castelnuovo numerator and rank", [] {
    const MotivicClass l_minus_one = MotivicClass::lefschetz() - 1;
    for (int m = 1; m <= 8; ++m) {
      if (!(gv_virtual_class_motivic(m) * l_minus_one * l_minus_one == gv_virtual_class_numerator(m))) return false;
      if (gv_compare(m).direct_rank != 5 * (CastelnuovoInput::of(m).N + 1)) return false;
    }
    return true;
  }));

  checks.push_back(run("trace potential gradient and commutators", [] {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + trial % 2;
      MatrixTriple t{random_matrix(rng, n), random_matrix(rng, n), random_matrix(rng, n),
                     std::vector<Rational>(n, Rational(0))};
      if (trial % 4 == 0) {
        t.b = t.a * t.a;
        t.c = t.a + Matrix::identity(n);
      }
      bool commute = commutator(t.a, t.b).is_zero() && commutator(t.b, t.c).is_zero() &&
                     commutator(t.c, t.a).is_zero();
      if (trace_potential_gradient(t).is_zero() != commute) return false;
      if (trace_potential(t) != (commutator(t.b, t.c) * t.a).trace()) return false;
    }
    return true;
  }));

  checks.push_back(run("Euler characteristic morphisms are compatible", [&] {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-4, 4), expo(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
      LaurentU a, b;
      for (int k = 0; k < 3; ++k) a[expo(rng)] += coeff(rng), b[expo(rng)] += coeff(rng);
      MotivicClass x = MotivicClass::from_laurent(a), y = MotivicClass::from_laurent(b);
      if (chi_complex(x * y) != chi_complex(x) * chi_complex(y)) return false;
      if (!(chi_real(x + y) == chi_real(x) + chi_real(y))) return false;
      if (!gw_equal(chi_a1(x * y, q), chi_a1(x, q) * chi_a1(y, q))) return false;
      if (numeric_complex(chi_a1(x, q)) != chi_complex(x)) return false;
    }
    return true;
  }));

  return checks;
}

}  // namespace arithdt
