#include "arithdt/json_io.hpp"

#include <regex>

namespace arithdt {

#ifndef ARITHDT_VERSION
#define ARITHDT_VERSION "unknown"
#endif

std::string artifact_version() { return ARITHDT_VERSION; }

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json terms_json(const GwElement& q) {
  Json terms = Json::array();
  for (const auto& [rep, n] : q.terms()) terms.push_back(Json::array({rep.get_str(), n}));
  return terms;
}

GwElement terms_from_json(const Json& terms, const BaseField& field) {
  GwElement q(field);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) throw FormatError("GW term must be [representative, multiplicity]");
    q += GwElement::angle(field, parse_rational(t[0].get<std::string>()), t[1].get<std::int64_t>());
  }
  return q;
}

Json laurent_json(const LaurentU& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p) a.push_back(Json::array({e, c}));
  return a;
}

LaurentU laurent_from_json(const Json& a) {
  LaurentU p;
  for (const auto& t : a) {
    if (!t.is_array() || t.size() != 2) throw FormatError("u_coeffs entries must be [exponent, coefficient]");
    p[t[0].get<std::int64_t>()] += t[1].get<std::int64_t>();
  }
  return p;
}

GeneratorRef builtin_generator(const std::string& name) {
  if (name == GeneratorSpec::spec_complex()->name) return GeneratorSpec::spec_complex();
  static const std::regex quadratic(R"(Spec Q\(sqrt (-?[0-9]+)\))");
  std::smatch m;
  if (std::regex_match(name, m, quadratic)) return GeneratorSpec::quadratic_point(Integer(m[1].str()));
  throw FormatError("generator \"" + name + "\" needs chi_complex, chi_real and chi_a1");
}

template <typename R, typename Enc>
Json series_json(const TruncatedSeries<R>& s, const char* ring, Enc enc) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(enc(c));
  return Json{{"order", s.order()}, {"ring", ring}, {"coeffs", coeffs}};
}

template <typename R, typename Dec>
TruncatedSeries<R> series_from_json(const Json& j, const char* ring, Dec dec) {
  return guarded("series", [&] {
    if (require(j, "ring").get<std::string>() != ring) {
      throw FormatError(std::string("expected a series over ") + ring);
    }
    int order = require(j, "order").get<int>();
    std::vector<R> coeffs;
    for (const auto& c : require(j, "coeffs")) coeffs.push_back(dec(c));
    return TruncatedSeries<R>(order, std::move(coeffs));
  });
}

Json rational_list(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace

// --------------------------------------------------------------------- GW

Json to_json(const GwElement& q) { return Json{{"field", q.field().name()}, {"terms", terms_json(q)}}; }

GwElement gw_from_json(const Json& j) {
  return guarded("GW element", [&] {
    BaseField field = BaseField::parse(require(j, "field").get<std::string>());
    return terms_from_json(require(j, "terms"), field);
  });
}

Json to_json(const GwAlphaElement& q) {
  return Json{{"field", q.field().name()}, {"even", terms_json(q.even())}, {"odd", terms_json(q.odd())}};
}

GwAlphaElement gw_alpha_from_json(const Json& j) {
  return guarded("GW(alpha) element", [&] {
    BaseField field = BaseField::parse(require(j, "field").get<std::string>());
    return GwAlphaElement(terms_from_json(require(j, "even"), field), terms_from_json(require(j, "odd"), field));
  });
}

Json to_json(const GaussianInteger& z) { return Json::array({z.re, z.im}); }

GaussianInteger gaussian_from_json(const Json& j) {
  return guarded("Gaussian integer", [&] {
    if (!j.is_array() || j.size() != 2) throw FormatError("Gaussian integer must be [re, im]");
    return GaussianInteger{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  });
}

// ---------------------------------------------------------------- motivic

Json to_json(const MotivicClass& m) {
  Json j{{"u_coeffs", laurent_json(m.tate())}};
  if (!m.extras().empty()) {
    Json extras = Json::object();
    for (const auto& [name, extra] : m.extras()) {
      extras[name] = Json{{"u_coeffs", laurent_json(extra.coeffs)},
                          {"chi_complex", extra.spec->chi_complex},
                          {"chi_real", to_json(extra.spec->chi_real)},
                          {"chi_a1", to_json(extra.spec->chi_a1)}};
    }
    j["extras"] = extras;
  }
  return j;
}

MotivicClass motivic_from_json(const Json& j) {
  return guarded("motivic class", [&] {
    MotivicClass m = MotivicClass::from_laurent(laurent_from_json(require(j, "u_coeffs")));
    if (j.contains("extras")) {
      for (const auto& [name, body] : j.at("extras").items()) {
        GeneratorRef spec;
        if (body.contains("chi_complex") || body.contains("chi_real") || body.contains("chi_a1")) {
          spec = GeneratorSpec::make(name, require(body, "chi_complex").get<std::int64_t>(),
                                     gaussian_from_json(require(body, "chi_real")),
                                     gw_alpha_from_json(require(body, "chi_a1")));
        } else {
          spec = builtin_generator(name);
        }
        LaurentU coeffs = body.contains("u_coeffs") ? laurent_from_json(body.at("u_coeffs")) : LaurentU{{0, 1}};
        m += MotivicClass::generator(spec, coeffs);
      }
    }
    return m;
  });
}

// ----------------------------------------------------------------- series

Json to_json(const MotivicSeries& s) {
  return series_json(s, "motivic", [](const MotivicClass& c) { return to_json(c); });
}
Json to_json(const GwAlphaSeries& s) {
  return series_json(s, "gw_alpha", [](const GwAlphaElement& c) { return to_json(c); });
}
Json to_json(const IntSeries& s) {
  return series_json(s, "integer", [](std::int64_t c) { return Json(c); });
}
Json to_json(const GaussianSeries& s) {
  return series_json(s, "gaussian", [](const GaussianInteger& c) { return to_json(c); });
}

MotivicSeries motivic_series_from_json(const Json& j) {
  return series_from_json<MotivicClass>(j, "motivic", [](const Json& c) { return motivic_from_json(c); });
}
GwAlphaSeries gw_alpha_series_from_json(const Json& j) {
  return series_from_json<GwAlphaElement>(j, "gw_alpha", [](const Json& c) { return gw_alpha_from_json(c); });
}
IntSeries int_series_from_json(const Json& j) {
  return series_from_json<std::int64_t>(j, "integer", [](const Json& c) { return c.get<std::int64_t>(); });
}
GaussianSeries gaussian_series_from_json(const Json& j) {
  return series_from_json<GaussianInteger>(j, "gaussian", [](const Json& c) { return gaussian_from_json(c); });
}

// ------------------------------------------------------------ matrices

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array()) throw FormatError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (j[i].size() != cols) throw FormatError("ragged matrix");
      for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_rational(j[i][k].get<std::string>());
    }
    return m;
  });
}

// ------------------------------------------------------------ polynomials

Json to_json(const std::vector<MultiPoly>& system) {
  Json polys = Json::array();
  for (const auto& p : system) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_string(c)}));
    polys.push_back(terms);
  }
  return Json{{"vars", system.empty() ? std::vector<std::string>{} : system.front().variables()},
              {"polys", polys}};
}

std::vector<MultiPoly> polynomial_system_from_json(const Json& j) {
  return guarded("polynomial map", [&] {
    auto vars = require(j, "vars").get<std::vector<std::string>>();
    if (vars.empty()) throw FormatError("polynomial map needs at least one variable");
    std::vector<MultiPoly> out;
    for (const auto& poly : require(j, "polys")) {
      MultiPoly p(vars);
      for (const auto& term : poly) {
        if (!term.is_array() || term.size() != 2) throw FormatError("term must be [exponents, \"coefficient\"]");
        auto e = term[0].get<Exponents>();
        if (e.size() != vars.size()) throw FormatError("exponent vector length differs from the variable count");
        for (int x : e)
          if (x < 0) throw FormatError("negative exponent");
        const Json& c = term[1];
        p.add_term(e, c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
      }
      out.push_back(std::move(p));
    }
    return out;
  });
}

// ---------------------------------------------------------------- strata

Json to_json(const SncData& data) {
  Json strata = Json::array();
  for (const auto& r : data.strata()) {
    Json mult = Json::object();
    for (const auto& [i, n] : r.multiplicities) mult[std::to_string(i)] = n;
    strata.push_back(Json{{"I", r.index_set}, {"mult", mult}, {"class", to_json(r.stratum_class)}});
  }
  return Json{{"dim", data.ambient_dimension()}, {"x0_class", to_json(data.central_fiber_class())},
              {"strata", strata}};
}

SncData snc_from_json(const Json& j) {
  return guarded("stratification data", [&] {
    std::vector<StratumRecord> records;
    for (const auto& s : require(j, "strata")) {
      std::map<int, std::int64_t> mult;
      for (const auto& [key, n] : require(s, "mult").items()) mult[std::stoi(key)] = n.get<std::int64_t>();
      records.push_back(StratumRecord::make(require(s, "I").get<std::vector<int>>(),
                                            motivic_from_json(require(s, "class")), std::move(mult)));
    }
    MotivicClass x0 = j.contains("x0_class") ? motivic_from_json(j.at("x0_class")) : MotivicClass();
    return SncData::make(std::move(records), require(j, "dim").get<std::int64_t>(), std::move(x0));
  });
}

// ---------------------------------------------------------------- reports

Json to_json(const EklResult& r) {
  Json mons = Json::array();
  for (const auto& e : r.standard_monomials) mons.push_back(e);
  Json j{{"class", r.gw_class.to_string(true)},
         {"gw", to_json(r.gw_class)},
         {"rank", r.rank}};
  if (r.gw_class.field().is_ordered()) j["signature"] = r.gw_class.signature();
  j["standard_monomials"] = mons;
  j["distinguished_socle"] = r.distinguished_socle.to_string();
  j["functional"] = rational_list(r.functional);
  j["gram"] = to_json(r.gram);
  return j;
}

Json to_json(const GvComparison& r) {
  Json j{{"m", r.input.m},          {"d", r.input.d},
         {"g", r.input.g},          {"n", r.input.n},
         {"N", r.input.N},          {"direct", r.direct.to_string(true)},
         {"direct_gw", to_json(r.direct)}, {"expected_rank", r.expected_rank},
         {"direct_rank", r.direct_rank}};
  if (r.closed) {
    j["closed"] = r.closed->to_string(true);
    j["closed_gw"] = to_json(*r.closed);
    j["closed_rank"] = *r.closed_rank;
  } else {
    j["closed_error"] = r.closed_error;
  }
  j["ranks_agree"] = r.ranks_agree;
  if (r.direct.field().is_ordered()) {
    j["direct_real"] = to_json(r.direct_real);
    if (r.closed_real) j["closed_real"] = to_json(*r.closed_real);
    j["real_agree"] = r.real_agree;
  }
  j["equal"] = r.equal;
  j["alpha_relation"] = r.alpha_relation ? Json(*r.alpha_relation) : Json(nullptr);
  j["discrepancy"] = r.discrepancy;
  return j;
}

Json to_json(const OracleReport& r) {
  return Json{{"order", r.order},
              {"agree", r.agree},
              {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)},
              {"enumerated", r.enumerated},
              {"series", r.series}};
}

Json to_json(const MilnorChiReport& r) {
  return Json{{"lhs", r.lhs.to_string(true)}, {"rhs", r.rhs.to_string(true)},
              {"milnor", r.milnor.to_string(true)}, {"equal", r.equal},
              {"verdict", r.verdict}};
}

// --------------------------------------------------------------- manifest

Json to_json(const RunManifest& m) {
  Json params = Json::object();
  for (const auto& [k, v] : m.parameters) params[k] = v;
  return Json{{"subcommand", m.subcommand},
              {"parameters", params},
              {"artifact_version", m.artifact_version},
              {"outputs", m.outputs}};
}

RunManifest manifest_from_json(const Json& j) {
  return guarded("run manifest", [&] {
    RunManifest m;
    m.subcommand = require(j, "subcommand").get<std::string>();
    for (const auto& [k, v] : require(j, "parameters").items()) m.parameters[k] = v.get<std::string>();
    m.artifact_version = require(j, "artifact_version").get<std::string>();
    m.outputs = require(j, "outputs").get<std::vector<std::string>>();
    return m;
  });
}

}  // namespace arithdt
