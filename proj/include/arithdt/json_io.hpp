#pragma once

// JSON codecs. Exact rationals travel as strings ("-3/7"), never as floats.
//
//   GwElement       {"field": "Q", "terms": [["-1", 3], ["2", 1]]}   representative, multiplicity
//   GwAlphaElement  {"field": "Q", "even": [...terms], "odd": [...terms]}
//   MotivicClass    {"u_coeffs": [[3, 1], [0, -1]],                   exponent of L^{1/2}, coefficient
//                    "extras": {"<name>": {"u_coeffs": [...], "chi_complex": 2,
//                                          "chi_real": [0, 0], "chi_a1": GwAlphaElement}}}
//                   An extra named "Spec C" or "Spec Q(sqrt d)" may omit the chi_* fields.
//   Series          {"order": N, "ring": "motivic" | "gw_alpha" | "integer" | "gaussian", "coeffs": [...]}
//   Polynomial map  {"vars": ["x", "y"], "polys": [[[[1, 0], "2"]], [[[0, 1], "-2"]]]}
//   SNC data        {"dim": 2, "x0_class": MotivicClass,
//                    "strata": [{"I": [1, 2], "mult": {"1": 1, "2": 1}, "class": MotivicClass}]}

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "arithdt/castelnuovo.hpp"
#include "arithdt/dt_hilbert.hpp"
#include "arithdt/ekl.hpp"
#include "arithdt/nearby.hpp"
#include "arithdt/oracles.hpp"

namespace arithdt {

using Json = nlohmann::ordered_json;

/// Raised for structurally invalid JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const GwElement& q);
GwElement gw_from_json(const Json& j);

Json to_json(const GwAlphaElement& q);
GwAlphaElement gw_alpha_from_json(const Json& j);

Json to_json(const GaussianInteger& z);
GaussianInteger gaussian_from_json(const Json& j);

Json to_json(const MotivicClass& m);
MotivicClass motivic_from_json(const Json& j);

Json to_json(const MotivicSeries& s);
Json to_json(const GwAlphaSeries& s);
Json to_json(const IntSeries& s);
Json to_json(const GaussianSeries& s);
MotivicSeries motivic_series_from_json(const Json& j);
GwAlphaSeries gw_alpha_series_from_json(const Json& j);
IntSeries int_series_from_json(const Json& j);
GaussianSeries gaussian_series_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const std::vector<MultiPoly>& system);
std::vector<MultiPoly> polynomial_system_from_json(const Json& j);

Json to_json(const SncData& data);
SncData snc_from_json(const Json& j);

Json to_json(const EklResult& r);
Json to_json(const GvComparison& r);
Json to_json(const OracleReport& r);
Json to_json(const MilnorChiReport& r);

struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::string artifact_version;
  std::vector<std::string> outputs;
};

Json to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

/// The version string compiled into the library.
std::string artifact_version();

}  // namespace arithdt
