#include "arithdt/nearby.hpp"

#include <algorithm>
#include <numeric>

namespace arithdt {

StratumRecord StratumRecord::make(std::vector<int> index_set, MotivicClass stratum_class,
                                  std::map<int, std::int64_t> multiplicities) {
  std::sort(index_set.begin(), index_set.end());
  if (index_set.empty()) throw DomainError("stratum needs a nonempty index set");
  if (std::adjacent_find(index_set.begin(), index_set.end()) != index_set.end()) {
    throw DomainError("stratum index set has repeated entries");
  }
  if (multiplicities.size() != index_set.size()) {
    throw DomainError("stratum needs exactly one multiplicity per index");
  }
  std::int64_t g = 0;
  for (int i : index_set) {
    auto it = multiplicities.find(i);
    if (it == multiplicities.end()) throw DomainError("missing multiplicity for component " + std::to_string(i));
    if (it->second <= 0) throw DomainError("multiplicities must be positive");
    g = std::gcd(g, it->second);
  }
  return {std::move(index_set), std::move(stratum_class), std::move(multiplicities), g};
}

SncData SncData::make(std::vector<StratumRecord> strata, std::int64_t ambient_dimension,
                      MotivicClass central_fiber_class) {
  if (ambient_dimension < 1) throw DomainError("ambient dimension must be at least 1");
  SncData data;
  data.dim_ = ambient_dimension;
  data.x0_ = std::move(central_fiber_class);
  std::map<std::vector<int>, std::size_t> seen;
  for (auto& record : strata) {
    auto [it, fresh] = seen.try_emplace(record.index_set, data.strata_.size());
    if (fresh) {
      data.strata_.push_back(std::move(record));
      continue;
    }
    StratumRecord& existing = data.strata_[it->second];
    if (existing.multiplicities != record.multiplicities) {
      throw DomainError("records for the same index set disagree on multiplicities");
    }
    existing.stratum_class += record.stratum_class;
  }
  return data;
}

MotivicClass nearby_class(const SncData& data) {
  const MotivicClass one_minus_l = MotivicClass(1) - MotivicClass::lefschetz();
  MotivicClass s;
  for (const auto& r : data.strata()) {
    s += pow(one_minus_l, static_cast<unsigned>(r.index_set.size() - 1)) * r.stratum_class;
  }
  return s;
}

MotivicClass local_nearby_class(const SncData& data) { return nearby_class(data); }

MotivicClass virtual_class_critical_locus(const MotivicClass& s_f, const MotivicClass& x0, std::int64_t dim_x) {
  return MotivicClass::u_power(-dim_x, -1) * (s_f - x0);
}

MotivicClass virtual_class_torus(const MotivicClass& x0, const MotivicClass& x1, std::int64_t dim_x) {
  return MotivicClass::u_power(-dim_x, -1) * (x1 - x0);
}

}  // namespace arithdt
