#include "doctest.h"

#include <algorithm>
#include <set>

#include "arithdt/dt_hilbert.hpp"
#include "arithdt/oracles.hpp"

using namespace arithdt;

namespace {

// Integer partitions of n, via the classical pentagonal-free recurrence p(n, k).
std::int64_t partitions(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return partitions(n - max_part, max_part) + partitions(n, max_part - 1);
}

}  // namespace

TEST_SUITE("enumerative_oracles") {

TEST_CASE("small counts") {
  CHECK(count_plane_partitions(0) == 1);
  CHECK(count_plane_partitions(1) == 1);
  CHECK(count_plane_partitions(2) == 3);
  CHECK(count_plane_partitions(3) == 6);
  CHECK(count_symmetric_plane_partitions(0) == 1);
  CHECK(count_symmetric_plane_partitions(1) == 1);
  CHECK(count_symmetric_plane_partitions(2) == 1);
  CHECK(count_symmetric_plane_partitions(3) == 2);
}

TEST_CASE("the six plane partitions of 3") {
  std::set<PlanePartition> seen;
  enumerate_plane_partitions(3, [&](const PlanePartition& p) {
    CHECK(is_plane_partition(p));
    seen.insert(p);
  });
  std::set<PlanePartition> expected{{{3}}, {{2, 1}}, {{1, 1, 1}}, {{2}, {1}}, {{1}, {1}, {1}}, {{1, 1}, {1}}};
  CHECK(seen == expected);
}

TEST_CASE("shape predicates") {
  CHECK(is_plane_partition({{3, 2}, {2, 1}}));
  CHECK_FALSE(is_plane_partition({{1, 2}}));
  CHECK_FALSE(is_plane_partition({{1}, {2}}));
  CHECK_FALSE(is_plane_partition({{1}, {1, 1}}));
  CHECK_FALSE(is_plane_partition({{0}}));
  CHECK(is_symmetric({{2, 1}, {1}}));
  CHECK_FALSE(is_symmetric({{2, 1}}));
}

TEST_CASE("growth and lower bounds") {
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const auto pp = count_plane_partitions(n), spp = count_symmetric_plane_partitions(n);
    CHECK(pp >= spp);
    CHECK(pp >= partitions(n, n));
    if (n >= 1) CHECK(pp >= count_plane_partitions(n - 1));
    if (n >= 2) CHECK(pp > count_plane_partitions(n - 1));
    std::int64_t symmetric = 0;
    enumerate_plane_partitions(n, [&](const PlanePartition& p) { symmetric += is_symmetric(p) ? 1 : 0; });
    CHECK(symmetric == spp);
  }
}

TEST_CASE("generating-function identities") {
  for (int order : {0, 6, 12}) {
    auto r = verify_macmahon(order);
    CHECK(r.agree);
    CHECK_FALSE(r.first_mismatch.has_value());
    CHECK(r.enumerated == r.series);
  }
  CHECK(verify_symmetric(10).agree);
  CHECK(verify_symmetric(12).agree);
  CHECK(count_plane_partitions(14) == 4167);
}

TEST_CASE("size limits") {
  CHECK_THROWS(count_plane_partitions(kMaxOracleSize + 1));
  CHECK_THROWS(count_plane_partitions(-1));
  CHECK_THROWS(verify_macmahon(13));
}

}  // TEST_SUITE
