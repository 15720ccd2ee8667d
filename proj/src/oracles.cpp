#include "arithdt/oracles.hpp"

#include <string>

#include "arithdt/dt_hilbert.hpp"

namespace arithdt {

namespace {

void check_size(int n) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  if (n > kMaxOracleSize) {
    throw DomainError("enumeration is limited to n <= " + std::to_string(kMaxOracleSize));
  }
}

// Appends rows below `rows`, each entrywise at most the row above.
void extend(PlanePartition& rows, int remaining, const std::function<void(const PlanePartition&)>& visit) {
  if (remaining == 0) {
    visit(rows);
    return;
  }
  const bool bounded = !rows.empty();
  const std::vector<int> above = bounded ? rows.back() : std::vector<int>{};
  std::vector<int> row;
  // Builds the next row entry by entry; every nonempty prefix is a valid row.
  std::function<void(int)> grow = [&](int left) {
    const std::size_t j = row.size();
    int cap = left;
    if (bounded) {
      if (j >= above.size()) return;
      cap = std::min(cap, above[j]);
    }
    if (j > 0) cap = std::min(cap, row[j - 1]);
    for (int v = cap; v >= 1; --v) {
      row.push_back(v);
      rows.push_back(row);
      extend(rows, left - v, visit);
      rows.pop_back();
      grow(left - v);
      row.pop_back();
    }
  };
  grow(remaining);
}

OracleReport compare(int order, const IntSeries& series, std::int64_t (*count)(int)) {
  if (order < 0 || order > 12) throw DomainError("verification order must lie in 0..12");
  OracleReport r{order, true, std::nullopt, {}, {}};
  for (int n = 0; n <= order; ++n) {
    r.enumerated.push_back(count(n));
    r.series.push_back(series[n]);
    if (r.agree && r.enumerated.back() != r.series.back()) {
      r.agree = false;
      r.first_mismatch = n;
    }
  }
  return r;
}

}  // namespace

void enumerate_plane_partitions(int n, const std::function<void(const PlanePartition&)>& visit) {
  check_size(n);
  PlanePartition rows;
  extend(rows, n, visit);
}

bool is_plane_partition(const PlanePartition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) return false;
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (p[i][j] < 1) return false;
      if (j > 0 && p[i][j] > p[i][j - 1]) return false;
      if (i > 0 && (j >= p[i - 1].size() || p[i][j] > p[i - 1][j])) return false;
    }
  }
  return true;
}

bool is_symmetric(const PlanePartition& p) {
  auto at = [&](std::size_t i, std::size_t j) { return i < p.size() && j < p[i].size() ? p[i][j] : 0; };
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (at(j, i) != p[i][j]) return false;
  return true;
}

std::int64_t count_plane_partitions(int n) {
  std::int64_t count = 0;
  enumerate_plane_partitions(n, [&](const PlanePartition&) { ++count; });
  return count;
}

std::int64_t count_symmetric_plane_partitions(int n) {
  std::int64_t count = 0;
  enumerate_plane_partitions(n, [&](const PlanePartition& p) { count += is_symmetric(p) ? 1 : 0; });
  return count;
}

OracleReport verify_macmahon(int order) {
  return compare(order, macmahon(std::max(order, 0)), &count_plane_partitions);
}

OracleReport verify_symmetric(int order) {
  return compare(order, macmahon_symmetric(std::max(order, 0)), &count_symmetric_plane_partitions);
}

}  // namespace arithdt
