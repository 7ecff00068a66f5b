#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "stochuc/scenario.hpp"

using namespace stochuc;

namespace {

// 1-farm scalar-path set for reduction tests
ScenarioSet scalar_set(const std::vector<double>& vals, const std::vector<double>& probs) {
  ScenarioSet s;
  s.n_farms = 1;
  s.horizon = 1;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    s.paths.push_back({{vals[i]}});
    s.probability.push_back(probs[i]);
  }
  return s;
}

ScenarioSet random_set(std::mt19937_64& rng, int n, int hours = 3) {
  std::uniform_real_distribution<double> u(0.0, 100.0);
  ScenarioSet s;
  s.n_farms = 1;
  s.horizon = hours;
  double tot = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> path(hours);
    for (double& v : path) v = u(rng);
    s.paths.push_back({path});
    double p = 0.05 + u(rng) / 100.0;
    s.probability.push_back(p);
    tot += p;
  }
  for (double& p : s.probability) p /= tot;
  return s;
}

// exhaustive best k-subset by the same objective
double exhaustive_best(const ScenarioSet& s, int k, std::vector<int>* arg = nullptr) {
  int n = s.size();
  std::vector<int> idx(k);
  double best = kInf;
  std::vector<int> combo;
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      double obj = reduction_objective(s, idx);
      if (obj < best) {
        best = obj;
        combo = idx;
      }
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (arg) *arg = combo;
  return best;
}

ProbabilisticForecast flat_pf(int farms, int hours, double cap = 100.0) {
  // quantile grid of a uniform [10, 90] distribution
  ProbabilisticForecast pf;
  pf.tau_grid = default_tau_grid();
  for (int f = 0; f < farms; ++f) {
    pf.farms.push_back("W" + std::to_string(f + 1));
    pf.capacity.push_back(cap);
    std::vector<std::vector<double>> hoursv;
    for (int t = 0; t < hours; ++t) {
      std::vector<double> g;
      for (double tau : pf.tau_grid) g.push_back(10.0 + 80.0 * tau);
      hoursv.push_back(g);
    }
    pf.values.push_back(hoursv);
  }
  return pf;
}

}  // namespace

TEST_CASE("single scenario stays inside the quantile range") {
  auto pf = flat_pf(1, 4);
  CovarianceSpec cov{4.0, 40.0, {{0.0}}};
  auto set = sample(pf, cov, 1, 7);
  REQUIRE(set.size() == 1);
  CHECK(set.probability[0] == 1.0);
  for (int t = 0; t < 4; ++t) {
    CHECK(set.paths[0][0][t] >= pf.values[0][t].front());
    CHECK(set.paths[0][0][t] <= pf.values[0][t].back());
  }
}

TEST_CASE("identity correlation preserves the marginals") {
  auto pf = flat_pf(1, 6);
  CovarianceSpec cov{1e-9, 40.0, {{0.0}}};  // effectively independent hours
  auto set = sample(pf, cov, 10000, 99);
  for (int t = 0; t < 6; ++t) {
    std::vector<double> vals;
    for (int s = 0; s < set.size(); ++s) vals.push_back(set.paths[s][0][t]);
    std::sort(vals.begin(), vals.end());
    double emp10 = vals[static_cast<int>(0.10 * vals.size())];
    double emp90 = vals[static_cast<int>(0.90 * vals.size())];
    // within two grid steps of q(0.1)/q(0.9)
    CHECK(emp10 >= pf.quantile(0, t, 0.08));
    CHECK(emp10 <= pf.quantile(0, t, 0.12));
    CHECK(emp90 >= pf.quantile(0, t, 0.88));
    CHECK(emp90 <= pf.quantile(0, t, 0.92));
  }
}

TEST_CASE("perfect correlation gives comonotone paths") {
  auto pf = flat_pf(2, 5);
  CovarianceSpec cov{1e12, 1e12, {{0.0, 1e-6}, {1e-6, 0.0}}};
  auto set = sample(pf, cov, 5, 3);
  // all coordinates of one scenario share (nearly) one u; since the quantile
  // map is shared and increasing, cross-scenario ordering is coordinate-free
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      double d00 = set.paths[a][0][0] - set.paths[b][0][0];
      for (int f = 0; f < 2; ++f)
        for (int t = 0; t < 5; ++t) {
          double d = set.paths[a][f][t] - set.paths[b][f][t];
          CHECK(d * d00 >= -1e-6);
        }
    }
}

TEST_CASE("reduction selects the probability-weighted medoid") {
  auto set = scalar_set({0.0, 10.0, 12.0}, {0.6, 0.2, 0.2});
  auto red = reduce(set, 1);
  REQUIRE(red.size() == 1);
  CHECK(red.paths[0][0][0] == 0.0);
  CHECK_THAT(red.probability[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
  // the three candidate objectives, by hand: 4.4, 6.4, 7.6
  CHECK_THAT(reduction_objective(set, {0}), Catch::Matchers::WithinAbs(4.4, 1e-12));
  CHECK_THAT(reduction_objective(set, {1}), Catch::Matchers::WithinAbs(6.4, 1e-12));
  CHECK_THAT(reduction_objective(set, {2}), Catch::Matchers::WithinAbs(7.6, 1e-12));
}

TEST_CASE("k equal to n keeps everything untouched") {
  std::mt19937_64 rng(5);
  auto set = random_set(rng, 6);
  auto red = reduce(set, 6);
  REQUIRE(red.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(red.paths[i] == set.paths[i]);
    CHECK(red.probability[i] == set.probability[i]);
  }
  CHECK_THROWS_AS(reduce(set, 0), ValidationError);
  CHECK_THROWS_AS(reduce(set, 7), ValidationError);
}

TEST_CASE("redistribution conserves probability mass onto retained paths") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto set = random_set(rng, 10);
    auto red = reduce(set, 3);
    double tot = 0;
    for (double p : red.probability) tot += p;
    CHECK_THAT(tot, Catch::Matchers::WithinAbs(1.0, 1e-12));
    for (const auto& path : red.paths)
      CHECK(std::find(set.paths.begin(), set.paths.end(), path) != set.paths.end());
  }
}

namespace {

// scenario-shaped instances: copula samples of a diurnal quantile profile
ProbabilisticForecast diurnal_pf() {
  ProbabilisticForecast pf;
  pf.tau_grid = default_tau_grid();
  pf.farms = {"W1"};
  pf.capacity = {100.0};
  std::vector<std::vector<double>> hours;
  for (int t = 0; t < 24; ++t) {
    std::vector<double> g;
    double c = 50.0 + 25.0 * std::sin(2 * M_PI * t / 24.0);
    for (double tau : pf.tau_grid) g.push_back(std::clamp(c + 40.0 * (tau - 0.5), 0.0, 100.0));
    hours.push_back(g);
  }
  pf.values = {hours};
  return pf;
}

std::vector<int> selected_indices(const ScenarioSet& full, const ScenarioSet& red) {
  std::vector<int> sel;
  for (int i = 0; i < full.size(); ++i)
    for (int j = 0; j < red.size(); ++j)
      if (full.paths[i] == red.paths[j]) sel.push_back(i);
  return sel;
}

}  // namespace

// Greedy selection is not exact; measured against exhaustive enumeration on
// copula-sampled day paths it lands on the optimum in roughly two thirds of
// mixed k<=3 trials (always for k=1) and never exceeds it by more than 25%.
// The thresholds below pin those measured fractions under a fixed seed.
TEST_CASE("fast forward tracks the exact optimum within the documented margins") {
  auto pf = diurnal_pf();
  CovarianceSpec cov{4.0, 40.0, {{0.0}}};
  std::mt19937_64 rng(2026);

  SECTION("comparable to 200 random k-subsets on n = 12") {
    for (int trial = 0; trial < 10; ++trial) {
      auto set = sample(pf, cov, 12, 500 + trial);
      auto red = reduce(set, 4);
      double greedy = reduction_objective(set, selected_indices(set, red));
      std::vector<int> all(12);
      std::iota(all.begin(), all.end(), 0);
      double best_random = kInf, sum_random = 0;
      for (int r = 0; r < 200; ++r) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> rnd(all.begin(), all.begin() + 4);
        double obj = reduction_objective(set, rnd);
        best_random = std::min(best_random, obj);
        sum_random += obj;
      }
      CHECK(greedy <= sum_random / 200.0 + 1e-9);       // beats the typical subset
      CHECK(greedy <= 1.25 * best_random + 1e-9);       // near the best found
    }
  }

  SECTION("exhaustive enumeration on n <= 8, k <= 3") {
    int exact = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
      int n = 6 + static_cast<int>(rng() % 3);  // 6..8
      int k = 1 + static_cast<int>(rng() % 3);  // 1..3
      auto set = sample(pf, cov, n, 9000 + trial);
      auto red = reduce(set, k);
      double greedy = reduction_objective(set, selected_indices(set, red));
      double best = exhaustive_best(set, k);
      REQUIRE(greedy >= best - 1e-9);
      CHECK(greedy <= 1.25 * best + 1e-9);
      if (greedy <= best + 1e-9) ++exact;
    }
    CHECK(exact >= 60);
  }
}

TEST_CASE("sampling and reduction are deterministic under a fixed seed") {
  auto pf = flat_pf(2, 6);
  auto cov = CovarianceSpec{4.0, 40.0, {{0.0, 30.0}, {30.0, 0.0}}};
  auto a = sample(pf, cov, 50, 12345);
  auto b = sample(pf, cov, 50, 12345);
  CHECK(a.paths == b.paths);
  auto ra = reduce(a, 5);
  auto rb = reduce(b, 5);
  CHECK(ra.paths == rb.paths);
  CHECK(ra.probability == rb.probability);
}
