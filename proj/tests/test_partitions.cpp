#include "doctest.h"

#include <algorithm>
#include <set>

#include "gct/errors.hpp"
#include "gct/partitions.hpp"
#include "gct/sampling.hpp"

using namespace gct;

namespace {

DominantWeight random_weight(Rng& rng, std::size_t rank, int lo, int hi) {
  std::vector<int> parts(rank);
  for (auto& x : parts) x = rng.uniform_int(lo, hi);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return DominantWeight(parts);
}

DominantWeight zeros_then(std::size_t zeros, std::vector<int> tail) {
  std::vector<int> parts(zeros, 0);
  parts.insert(parts.end(), tail.begin(), tail.end());
  return DominantWeight(parts);
}

}  // namespace

TEST_CASE("weights reject increasing parts") {
  CHECK_THROWS(DominantWeight({1, 2}));
  CHECK_THROWS(Partition({1, -1}));
  CHECK(DominantWeight({2, 2, -1}).size() == 3);
  CHECK(DominantWeight({3, 0, 0}).key() == "3,0,0");
  CHECK(DominantWeight({1, 0}) != DominantWeight({1, 0, 0}));
}

TEST_CASE("interlacing") {
  CHECK(interlaces(DominantWeight({3, 0}), DominantWeight({4, 2, 0})));
  CHECK_FALSE(interlaces(DominantWeight({3, 0}), DominantWeight({2, 2, 0})));
  CHECK(interlaces(DominantWeight({2, 2}), DominantWeight({2, 2, 2})));
  CHECK_THROWS(interlaces(DominantWeight({3}), DominantWeight({4, 2, 0})));
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim(DominantWeight({1, 0}), 2) == 2);
  CHECK(weyl_dim(DominantWeight({2, 1, 0})) == 8);
  CHECK(weyl_dim(DominantWeight({6, 0, 0, 0, 0, 0, 0, 0, 0, 0})) == 5005);
  CHECK(weyl_dim(DominantWeight({3, 0, 0, 0, 0, 0, 0, 0, 0})) == 165);
  CHECK_THROWS(weyl_dim(DominantWeight({1, 0}), 3));
  // twisting by a power of the determinant keeps the dimension
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const DominantWeight lam = random_weight(rng, 4, -3, 3);
    std::vector<int> shifted = lam.parts();
    for (auto& x : shifted) x += 5;
    CHECK(weyl_dim(lam) == weyl_dim(DominantWeight(shifted)));
  }
}

TEST_CASE("symmetric power dimensions are binomials") {
  CHECK(sym_power_dim(6, 10) == 5005);
  CHECK(sym_power_dim(3, 9) == 165);
  CHECK(sym_power_dim(0, 4) == 1);
  for (int d = 0; d <= 6; ++d)
    for (int k = 1; k <= 6; ++k) {
      std::vector<int> parts(static_cast<std::size_t>(k), 0);
      parts[0] = d;
      CHECK(sym_power_dim(d, k) == weyl_dim(DominantWeight(parts)));
    }
}

TEST_CASE("branching") {
  const auto b = branch(DominantWeight({2, 1, 0}));
  const std::vector<DominantWeight> expected{DominantWeight({2, 1}), DominantWeight({2, 0}), DominantWeight({1, 1}),
                                             DominantWeight({1, 0})};
  CHECK(b == expected);
  CHECK(branch(DominantWeight({3, 3, 3})) == std::vector<DominantWeight>{DominantWeight({3, 3})});
  CHECK_THROWS(branch(DominantWeight({1})));
}

TEST_CASE("branching sum rule and the two enumerations agree") {
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    const auto rank = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const DominantWeight lam = random_weight(rng, rank, -4, 4);
    const auto b = branch(lam);
    Integer sum = 0;
    for (const auto& mu : b) sum += weyl_dim(mu);
    CHECK(sum == weyl_dim(lam));

    // brute force over the box [lam_k, lam_1]^(k-1)
    std::set<DominantWeight> brute;
    std::vector<int> mu(rank - 1, lam[rank - 1]);
    for (;;) {
      if (std::is_sorted(mu.begin(), mu.end(), std::greater<>()) && interlaces(DominantWeight(mu), lam))
        brute.insert(DominantWeight(mu));
      std::size_t i = 0;
      while (i < mu.size() && mu[i] == lam[0]) mu[i++] = lam[rank - 1];
      if (i == mu.size()) break;
      ++mu[i];
    }
    CHECK(std::set<DominantWeight>(b.begin(), b.end()) == brute);
    CHECK(std::is_sorted(b.begin(), b.end(), std::greater<>()));
  }
}

TEST_CASE("row Pieri rule") {
  const Partition zero(std::vector<int>(10, 0));
  const auto only = pieri_row(zero, 4, 10);
  REQUIRE(only.size() == 1);
  CHECK(only[0][0] == 4);

  std::vector<int> mu(10, 0);
  mu[0] = 3;
  const auto rows = pieri_row(Partition(mu), 3, 10);
  std::vector<std::vector<int>> heads;
  for (const auto& lam : rows) heads.push_back({lam[0], lam[1], lam[2]});
  CHECK(heads == std::vector<std::vector<int>>{{6, 0, 0}, {5, 1, 0}, {4, 2, 0}, {3, 3, 0}});

  CHECK(pieri_row(Partition(mu), 0, 10) == std::vector<Partition>{Partition(mu)});
}

TEST_CASE("Pieri dimension identity on random partitions") {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 6));
    std::vector<int> parts(n);
    for (auto& x : parts) x = rng.uniform_int(0, 4);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    const Partition mu(parts);
    const int boxes = rng.uniform_int(0, 4);
    Integer sum = 0;
    for (const auto& lam : pieri_row(mu, boxes, n)) {
      CHECK(lam.size() == mu.size() + boxes);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(lam[i] >= mu[i]);
        if (i + 1 < n) CHECK(mu[i] >= lam[i + 1]);
      }
      sum += weyl_dim(lam);
    }
    CHECK(sum == weyl_dim(mu) * sym_power_dim(boxes, static_cast<int>(n)));
  }
}

TEST_CASE("lift by leading zeros") {
  CHECK(hat_lift(DominantWeight(std::vector<int>(10, 0)), 4, 3) == DominantWeight(std::vector<int>(16, 0)));
  std::vector<int> lam(10, -1);
  lam[0] = 0;
  CHECK(hat_lift(DominantWeight(lam), 4, 3) == zeros_then(6, lam));
  std::vector<int> bad(10, 0);
  bad[0] = 1;
  CHECK_THROWS(hat_lift(DominantWeight(bad), 4, 3));
  CHECK_THROWS(hat_lift(DominantWeight({0, 0}), 4, 3));
}

TEST_CASE("dualize") {
  CHECK(dualize(DominantWeight({1, 0})) == DominantWeight({0, -1}));
  CHECK(dualize(DominantWeight({3, 0, 0, 0})) == DominantWeight({0, 0, 0, -3}));
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const DominantWeight lam = random_weight(rng, static_cast<std::size_t>(rng.uniform_int(1, 7)), -5, 5);
    CHECK(dualize(dualize(lam)) == lam);
  }
}

TEST_CASE("partitions of an integer") {
  CHECK(partitions_of(6, 10).size() == 11);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(0, 3).size() == 1);
  CHECK(partitions_of(5, 0).empty());
  for (const auto& p : partitions_of(7, 3)) CHECK(p.size() == 7);
}
