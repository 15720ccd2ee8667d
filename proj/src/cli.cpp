#include "arithdt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arithdt/json_io.hpp"
#include "arithdt/selftest.hpp"

namespace arithdt {

namespace {

constexpr int kDefaultMaxOrder = 30;

int max_order() {
  const char* env = std::getenv("ARITHDT_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("ARITHDT_MAX_ORDER must be a positive integer, got \"") + env + "\"");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void print_json(std::ostream& o, const Json& j) { o << j.dump(2) << "\n"; }

template <typename R, typename F>
void print_series(std::ostream& o, const TruncatedSeries<R>& s, F render) {
  for (int n = 0; n <= s.order(); ++n) o << "t^" << n << ": " << render(s[n]) << "\n";
}

struct GwArgs {
  std::string op = "show", a, b, field = "Q";
  bool hyperbolic = false, json = false;
};

void run_gw(const GwArgs& g, std::ostream& o) {
  const BaseField field = BaseField::parse(g.field);
  const GwElement a = parse_gw(g.a, field);
  auto second = [&] {
    if (g.b.empty()) throw std::invalid_argument("--b is required for --op " + g.op);
    return parse_gw(g.b, field);
  };
  auto element = [&](const GwElement& x) {
    if (g.json) {
      Json j = to_json(x);
      j["rendering"] = x.to_string(g.hyperbolic);
      print_json(o, j);
    } else {
      o << x.to_string(g.hyperbolic) << "\n";
    }
  };
  auto scalar = [&](const char* key, const Json& value, const std::string& text) {
    if (g.json) print_json(o, Json{{key, value}});
    else o << text << "\n";
  };
  if (g.op == "show") element(a);
  else if (g.op == "add") element(a + second());
  else if (g.op == "mul") element(a * second());
  else if (g.op == "equal") {
    bool eq = gw_equal(a, second());
    scalar("equal", eq, eq ? "true" : "false");
  } else if (g.op == "rank") scalar("rank", a.rank(), std::to_string(a.rank()));
  else if (g.op == "signature") scalar("signature", a.signature(), std::to_string(a.signature()));
  else if (g.op == "discriminant") {
    std::string d = a.discriminant().to_string();
    scalar("discriminant", d, d);
  }
}

struct DtArgs {
  int order = 6;
  std::string output = "motivic", field = "Q";
  bool json = false;
};

void run_dt(const DtArgs& d, std::ostream& o) {
  const int cap = max_order();
  if (d.order < 1) throw std::invalid_argument("--order must be at least 1");
  if (d.order > cap) {
    throw DomainError("order " + std::to_string(d.order) + " exceeds ARITHDT_MAX_ORDER = " + std::to_string(cap));
  }
  const BaseField field = BaseField::parse(d.field);
  if (d.output == "motivic") {
    MotivicSeries s = z_motivic(d.order);
    if (d.json) print_json(o, to_json(s));
    else print_series(o, s, [](const MotivicClass& c) { return c.to_string(); });
    return;
  }
  GwAlphaSeries arithmetic = z_arithmetic(d.order, field);
  if (d.output == "arithmetic") {
    if (d.json) print_json(o, to_json(arithmetic));
    else print_series(o, arithmetic, [](const GwAlphaElement& c) { return c.to_string(true); });
  } else if (d.output == "complex") {
    IntSeries s = arithmetic.map_coeffs(morphisms::AlphaToMinusOne{});
    if (d.json) print_json(o, to_json(s));
    else print_series(o, s, [](std::int64_t c) { return std::to_string(c); });
  } else {
    if (!field.is_ordered()) throw DomainError("the real specialisation needs an ordered base field");
    GaussianSeries s = arithmetic.map_coeffs(morphisms::AlphaToI{});
    if (d.json) print_json(o, to_json(s));
    else print_series(o, s, [](const GaussianInteger& c) { return c.to_string(); });
  }
}

struct EklArgs {
  std::string map, strata, field = "Q";
  bool milnor = false, json = false;
};

void run_ekl(const EklArgs& e, std::ostream& o) {
  const BaseField field = BaseField::parse(e.field);
  std::vector<MultiPoly> system = polynomial_system_from_json(read_json_file(e.map));
  if (!e.strata.empty() && !e.milnor) throw std::invalid_argument("--strata requires --milnor");
  EklResult r = [&] {
    if (!e.milnor) return ekl_class(system, field);
    if (system.size() != 1) throw DomainError("--milnor expects a single function in \"polys\"");
    return milnor_number_a1(system.front(), field);
  }();
  std::optional<MilnorChiReport> relation;
  if (!e.strata.empty()) relation = milnor_chi_relation(system.front(), snc_from_json(read_json_file(e.strata)), field);

  if (e.json) {
    Json j = to_json(r);
    if (relation) j["milnor_relation"] = to_json(*relation);
    print_json(o, j);
    return;
  }
  o << "class: " << r.gw_class.to_string(true) << "\n";
  o << "rank: " << r.rank << "\n";
  if (field.is_ordered()) o << "signature: " << r.gw_class.signature() << "\n";
  if (relation) {
    o << "chi_a1(S_f,0): " << relation->lhs.to_string(true) << "\n";
    o << "<1> + (-<1>)^(n-1) mu: " << relation->rhs.to_string(true) << "\n";
    o << "relation: " << relation->verdict << "\n";
  }
}

struct NearbyArgs {
  std::string data, field = "Q";
  bool local = false, json = false;
};

void run_nearby(const NearbyArgs& n, std::ostream& o) {
  const BaseField field = BaseField::parse(n.field);
  SncData data = snc_from_json(read_json_file(n.data));
  MotivicClass s = n.local ? local_nearby_class(data) : nearby_class(data);
  const GaussianInteger real = chi_real(s);
  const GwAlphaElement a1 = chi_a1(s, field);
  std::optional<MotivicClass> virt;
  if (!n.local) virt = virtual_class_critical_locus(s, data.central_fiber_class(), data.ambient_dimension());
  if (n.json) {
    Json j{{"class", to_json(s)},
           {"rendering", s.to_string()},
           {"chi_complex", chi_complex(s)},
           {"chi_real", to_json(real)},
           {"chi_a1", to_json(a1)},
           {"chi_a1_rendering", a1.to_string(true)}};
    if (virt) j["virtual_class"] = to_json(*virt);
    print_json(o, j);
    return;
  }
  o << (n.local ? "S_f,x: " : "S_f: ") << s.to_string() << "\n";
  o << "chi_complex: " << chi_complex(s) << "\n";
  o << "chi_real: " << real.to_string() << "\n";
  o << "chi_a1: " << a1.to_string(true) << "\n";
  if (virt) o << "virtual class: " << virt->to_string() << "\n";
}

struct GvArgs {
  std::int64_t m = 1;
  std::string field = "Q";
  bool compare = false, json = false;
};

void run_gv(const GvArgs& g, std::ostream& o) {
  const BaseField field = BaseField::parse(g.field);
  if (g.compare) {
    GvComparison r = gv_compare(g.m, field);
    if (g.json) {
      print_json(o, to_json(r));
      return;
    }
    o << "m=" << r.input.m << " d=" << r.input.d << " g=" << r.input.g << " N=" << r.input.N << "\n";
    o << "direct: " << r.direct.to_string(true) << "\n";
    o << "closed form: " << (r.closed ? r.closed->to_string(true) : "error: " + r.closed_error) << "\n";
    o << "expected rank 5(N+1): " << r.expected_rank << "\n";
    o << "ranks agree: " << (r.ranks_agree ? "yes" : "no") << "\n";
    if (field.is_ordered() && r.closed) o << "signatures agree: " << (r.real_agree ? "yes" : "no") << "\n";
    o << "equal: " << (r.equal ? "yes" : "no") << "\n";
    if (!r.discrepancy.empty()) o << "discrepancy: " << r.discrepancy << "\n";
    return;
  }
  const auto in = CastelnuovoInput::of(g.m);
  MotivicClass mot = gv_virtual_class_motivic(g.m);
  GwAlphaElement arith = gv_arithmetic_direct(g.m, field);
  if (g.json) {
    print_json(o, Json{{"m", in.m}, {"d", in.d}, {"g", in.g}, {"n", in.n}, {"N", in.N},
                       {"motivic", to_json(mot)}, {"arithmetic", to_json(arith)},
                       {"rank", arith.total_rank()}});
    return;
  }
  o << "m=" << in.m << " d=" << in.d << " g=" << in.g << " n=" << in.n << " N=" << in.N << "\n";
  o << "motivic: " << mot.to_string() << "\n";
  o << "arithmetic: " << arith.to_string(true) << "\n";
  o << "rank: " << arith.total_rank() << "\n";
}

struct OracleArgs {
  std::string kind;
  int n = 0;
  bool verify = false, json = false;
};

void run_oracle(const OracleArgs& a, std::ostream& o) {
  const bool pp = a.kind == "pp";
  if (a.verify) {
    OracleReport r = pp ? verify_macmahon(a.n) : verify_symmetric(a.n);
    if (a.json) print_json(o, to_json(r));
    else {
      o << (r.agree ? "agree" : "mismatch") << " up to order " << r.order << "\n";
      if (r.first_mismatch) o << "first mismatch at n=" << *r.first_mismatch << "\n";
    }
    return;
  }
  std::int64_t c = pp ? count_plane_partitions(a.n) : count_symmetric_plane_partitions(a.n);
  if (a.json) print_json(o, Json{{"kind", a.kind}, {"n", a.n}, {"count", c}});
  else o << c << "\n";
}

bool run_selftest_command(std::ostream& o) {
  bool ok = true;
  for (const auto& c : run_selftest()) {
    o << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) o << " (" << c.detail << ")";
    o << "\n";
    ok = ok && c.passed;
  }
  return ok;
}

std::map<std::string, std::string> collect_parameters(const CLI::App* sub) {
  std::map<std::string, std::string> params;
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string joined;
    for (const auto& r : opt->results()) joined += (joined.empty() ? "" : " ") + r;
    std::string key = opt->get_name();
    key.erase(0, key.find_first_not_of('-'));
    params[key] = joined;
  }
  return params;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact motivic, quadratic and enumerative computations", "arithdt"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the result to this file (plus <file>.manifest.json)");


  GwArgs gw;
  CLI::App* gw_cmd = app.add_subcommand("gw", "Grothendieck-Witt arithmetic");
  gw_cmd->add_option("--op", gw.op, "Operation")
      ->check(CLI::IsMember({"add", "mul", "equal", "rank", "signature", "discriminant", "show"}));
  gw_cmd->add_option("--a", gw.a, "First form, e.g. \"<2> + 3*<-1>\" or \"2*H\"")->required();
  gw_cmd->add_option("--b", gw.b, "Second form");
  gw_cmd->add_option("--field", gw.field, "Base field: Q, R, C or F<p>");
  gw_cmd->add_flag("--hyperbolic", gw.hyperbolic, "Contract <1> + <-1> pairs to H in the output");
  gw_cmd->add_flag("--json", gw.json, "JSON output");

  DtArgs dt;
  CLI::App* dt_cmd = app.add_subcommand("dt-a3", "Degree-zero DT series of A^3");
  dt_cmd->add_option("--order", dt.order, "Truncation order")->required();
  dt_cmd->add_option("--output", dt.output, "Which series")
      ->check(CLI::IsMember({"motivic", "arithmetic", "complex", "real"}));
  dt_cmd->add_option("--field", dt.field, "Base field for the arithmetic series");
  dt_cmd->add_flag("--json", dt.json, "JSON output");

  EklArgs ekl;
  CLI::App* ekl_cmd = app.add_subcommand("ekl", "Local A^1-degree of a polynomial map");
  ekl_cmd->add_option("--map", ekl.map, "JSON file with vars and polys")->required();
  ekl_cmd->add_option("--field", ekl.field, "Base field");
  ekl_cmd->add_flag("--milnor", ekl.milnor, "Treat the single polynomial as f and use grad f");
  ekl_cmd->add_option("--strata", ekl.strata, "Local SNC data; checks the Milnor relation (needs --milnor)");
  ekl_cmd->add_flag("--json", ekl.json, "JSON output");

  NearbyArgs nb;
  CLI::App* nb_cmd = app.add_subcommand("nearby", "Motivic nearby fibre from SNC data");
  nb_cmd->add_option("--data", nb.data, "JSON file with dim, x0_class and strata")->required();
  nb_cmd->add_flag("--local", nb.local, "Data describes the fibres over a point");
  nb_cmd->add_option("--field", nb.field, "Base field for chi_a1");
  nb_cmd->add_flag("--json", nb.json, "JSON output");

  GvArgs gv;
  CLI::App* gv_cmd = app.add_subcommand("gv", "Quintic GV moduli at the Castelnuovo bound");
  gv_cmd->add_option("--m", gv.m, "Degree d = 5m")->required();
  gv_cmd->add_flag("--compare", gv.compare, "Compare direct evaluation with the closed form");
  gv_cmd->add_option("--field", gv.field, "Base field");
  gv_cmd->add_flag("--json", gv.json, "JSON output");

  OracleArgs oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Plane-partition enumerators");
  oracle_cmd->add_option("kind", oracle.kind, "pp or spp")->required()->check(CLI::IsMember({"pp", "spp"}));
  oracle_cmd->add_option("--n", oracle.n, "Size (count) or order (with --verify)")->required();
  oracle_cmd->add_flag("--verify", oracle.verify, "Compare the generating series with the enumerator up to n");
  oracle_cmd->add_flag("--json", oracle.json, "JSON output");

  CLI::App* self_cmd = app.add_subcommand("selftest", "Run the built-in invariant suite");

  std::vector<std::string> argv_storage{"arithdt"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::ostringstream result;
  int code = kExitOk;
  try {
    if (sub == gw_cmd) run_gw(gw, result);
    else if (sub == dt_cmd) run_dt(dt, result);
    else if (sub == ekl_cmd) run_ekl(ekl, result);
    else if (sub == nb_cmd) run_nearby(nb, result);
    else if (sub == gv_cmd) run_gv(gv, result);
    else if (sub == oracle_cmd) run_oracle(oracle, result);
    else if (sub == self_cmd) code = run_selftest_command(result) ? kExitOk : kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n" << sub->help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }

  if (out_path.empty()) {
    out << result.str();
    return code;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot write " << out_path << "\n";
    return kExitDomainError;
  }
  file << result.str();
  RunManifest manifest{sub->get_name(), collect_parameters(sub), artifact_version(), {out_path}};
  std::ofstream mf(out_path + ".manifest.json");
  mf << to_json(manifest).dump(2) << "\n";
  if (!mf) {
    err << "error: cannot write manifest for " << out_path << "\n";
    return kExitDomainError;
  }
  return code;
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace arithdt
