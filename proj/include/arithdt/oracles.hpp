#pragma once

// Brute-force plane-partition enumerators, used as independent ground truth
// for the MacMahon-type generating functions.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace arithdt {

/// Rows of positive integers, weakly decreasing along rows and down columns.
using PlanePartition = std::vector<std::vector<int>>;

constexpr int kMaxOracleSize = 14;

/// Calls visit on every plane partition of n (n <= kMaxOracleSize).
void enumerate_plane_partitions(int n, const std::function<void(const PlanePartition&)>& visit);

bool is_plane_partition(const PlanePartition& p);
/// Invariant under transposing the two base axes: p[i][j] == p[j][i].
bool is_symmetric(const PlanePartition& p);

std::int64_t count_plane_partitions(int n);
std::int64_t count_symmetric_plane_partitions(int n);

struct OracleReport {
  int order;
  bool agree;
  std::optional<int> first_mismatch;
  std::vector<std::int64_t> enumerated;
  std::vector<std::int64_t> series;
};

/// macmahon(order) against count_plane_partitions, order <= 12.
OracleReport verify_macmahon(int order);
/// macmahon_symmetric(order) against count_symmetric_plane_partitions, order <= 12.
OracleReport verify_symmetric(int order);

}  // namespace arithdt
