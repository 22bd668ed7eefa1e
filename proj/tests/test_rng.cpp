#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "mindsim/rng.hpp"

using namespace mindsim;

TEST_CASE("splitmix64 matches the reference output stream") {
  // First output of the reference generator seeded with 0.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  // Finalizer is a bijection-ish mix: nearby inputs decorrelate.
  CHECK(splitmix64(1) != splitmix64(0));
  CHECK(splitmix64(2) != splitmix64(1));
}

TEST_CASE("derive_seed separates streams and bases") {
  std::vector<std::uint64_t> seen;
  for (std::uint64_t base : {1ULL, 2ULL, 42ULL}) {
    for (std::uint64_t stream = 0; stream < 8; ++stream) {
      seen.push_back(derive_seed(base, stream));
    }
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("identical seeds give identical draw sequences") {
  Rng a(123), b(123), c(124);
  bool all_equal = true;
  bool any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    const double ua = a.uniform();
    const double ub = b.uniform();
    all_equal = all_equal && (ua == ub);
    any_diff = any_diff || (ua != c.uniform());
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("uniform stays in [0,1) and matches its moments") {
  Rng rng(7);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sumsq += u * u;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  // 3-sigma bands: se(mean) = sqrt(1/12/n) ~ 9.1e-4.
  CHECK(std::fabs(mean - 0.5) < 3e-3);
  CHECK(std::fabs(var - 1.0 / 12.0) < 3e-3);
}

TEST_CASE("uniform(lo, hi) respects its range") {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform(-2.5, 4.0);
    REQUIRE(u >= -2.5);
    REQUIRE(u < 4.0);
  }
}

TEST_CASE("gaussian matches standard normal moments") {
  Rng rng(11);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0, sumcube = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian();
    sum += g;
    sumsq += g * g;
    sumcube += g * g * g;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  // se(mean) = 1/sqrt(n) ~ 3.2e-3; se(var) ~ sqrt(2/n) ~ 4.5e-3;
  // se(skew proxy) = sqrt(15/n) ~ 1.2e-2.
  CHECK(std::fabs(mean) < 0.01);
  CHECK(std::fabs(var - 1.0) < 0.015);
  CHECK(std::fabs(sumcube / n) < 0.04);
}

TEST_CASE("bernoulli frequency tracks p") {
  Rng rng(13);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += rng.bernoulli(0.05) ? 1 : 0;
  const double freq = static_cast<double>(hits) / n;
  // 3 * sqrt(p(1-p)/n) ~ 2.1e-3.
  CHECK(std::fabs(freq - 0.05) < 2.5e-3);
}

TEST_CASE("discrete recovers the pmf and skips zero entries") {
  Rng rng(17);
  const std::vector<double> pmf = {0.475, 0.025, 0.0, 0.5};
  const int n = 100000;
  std::vector<int> counts(pmf.size(), 0);
  for (int i = 0; i < n; ++i) counts[static_cast<std::size_t>(rng.discrete(pmf))]++;
  CHECK(counts[2] == 0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double freq = static_cast<double>(counts[i]) / n;
    const double se = std::sqrt(pmf[i] * (1.0 - pmf[i]) / n);
    CHECK(std::fabs(freq - pmf[i]) <= 3.0 * se + 1e-9);
  }
}

TEST_CASE("discrete rejects an empty pmf") {
  Rng rng(1);
  CHECK_THROWS_AS((void)rng.discrete(std::span<const double>{}), std::invalid_argument);
}

TEST_CASE("shuffle produces a valid permutation, deterministically") {
  Rng a(21), b(21);
  std::vector<int> va{0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<int> vb = va;
  a.shuffle(va);
  b.shuffle(vb);
  CHECK(va == vb);
  std::vector<int> sorted = va;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("shuffle is roughly uniform over 3-element permutations") {
  Rng rng(23);
  std::map<std::vector<int>, int> counts;
  const int n = 60000;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v{0, 1, 2};
    rng.shuffle(v);
    counts[v]++;
  }
  CHECK(counts.size() == 6);
  for (const auto& [perm, c] : counts) {
    const double freq = static_cast<double>(c) / n;
    // Expect 1/6 each; 3*sqrt(p(1-p)/n) ~ 4.6e-3.
    CHECK(std::fabs(freq - 1.0 / 6.0) < 6e-3);
  }
}
