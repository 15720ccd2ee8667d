#pragma once

// Motivic nearby fibres from simple-normal-crossing data supplied by the caller,
// and virtual classes of critical loci.

#include <cstdint>
#include <map>
#include <vector>

#include "arithdt/motivic.hpp"

namespace arithdt {

/// One open stratum E_I° of the resolved central fibre, with the class of its
/// unramified cover (supplied directly) and the multiplicities N_i, i in I.
struct StratumRecord {
  std::vector<int> index_set;
  MotivicClass stratum_class;
  std::map<int, std::int64_t> multiplicities;
  /// gcd of the multiplicities; recorded, not acted upon.
  std::int64_t m_i = 1;

  /// Validates (nonempty I, one positive multiplicity per index) and computes m_I.
  static StratumRecord make(std::vector<int> index_set, MotivicClass stratum_class,
                            std::map<int, std::int64_t> multiplicities);
};

class SncData {
 public:
  /// Records sharing an index set are merged by adding their classes; their
  /// multiplicities must agree.
  static SncData make(std::vector<StratumRecord> strata, std::int64_t ambient_dimension,
                      MotivicClass central_fiber_class);

  const std::vector<StratumRecord>& strata() const { return strata_; }
  std::int64_t ambient_dimension() const { return dim_; }
  const MotivicClass& central_fiber_class() const { return x0_; }

 private:
  std::vector<StratumRecord> strata_;
  std::int64_t dim_ = 1;
  MotivicClass x0_;
};

/// S_f = sum over strata of (1 - L)^{|I|-1} [E~_I°].
MotivicClass nearby_class(const SncData& data);
/// S_{f,x}: the same sum, for data whose classes are the fibres over x.
MotivicClass local_nearby_class(const SncData& data);

/// -L^{-dim/2} (S_f - [X_0]).
MotivicClass virtual_class_critical_locus(const MotivicClass& s_f, const MotivicClass& x0, std::int64_t dim_x);
/// -L^{-dim/2} ([X_1] - [X_0]) for a circle-compact action.
MotivicClass virtual_class_torus(const MotivicClass& x0, const MotivicClass& x1, std::int64_t dim_x);

}  // namespace arithdt
