#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <random>

#include "oracles.hpp"
#include "stochuc/ptdf.hpp"
#include "stochuc/system.hpp"

using namespace stochuc;

static const std::string kData = STOCHUC_DATA_DIR;

TEST_CASE("two-bus system loads and validates") {
  PowerSystem sys = load_system(kData + "/sys2.json");
  CHECK(sys.buses.size() == 2);
  CHECK(sys.lines.size() == 1);
  CHECK(sys.slack_bus == 0);
  CHECK(sys.buses[sys.slack_bus].id == "b1");
  LoadSeries ls = load_timeseries(kData + "/load2.csv", sys);
  CHECK(ls.horizon == 3);
  CHECK(ls.per_bus[1][0] == 50.0);
  CHECK(ls.per_bus[0][0] == 0.0);
}

TEST_CASE("six-bus fixture loads with 7 lines and a wind farm") {
  PowerSystem sys = load_system(kData + "/sys6.json");
  CHECK(sys.lines.size() == 7);
  CHECK(sys.generators.size() == 3);
  CHECK(sys.wind_farms.size() == 1);
  CHECK(sys.generators[2].quick_start);
  LoadSeries ls = load_timeseries(kData + "/load6.csv", sys);
  CHECK(ls.horizon == 24);
  CHECK_THAT(ls.bus_total(19), Catch::Matchers::WithinAbs(238.0, 1e-9));
}

TEST_CASE("validation errors name the entity") {
  nlohmann::json j;
  j["buses"] = {{{"id", "b1"}, {"slack", true}}};
  j["generators"] = {{
      {"id", "G1"}, {"bus", "b1"},
      {"p_min_mw", 10}, {"p_max_mw", 100},
      {"ramp_up_mw_per_h", 60}, {"ramp_down_mw_per_h", 60},
      {"startup_ramp_mw", 100}, {"shutdown_ramp_mw", 100},
      {"min_up_h", 1}, {"min_down_h", 1},
      {"startup_cost_usd", 0}, {"no_load_cost_usd_per_h", 0},
      {"fuel_blocks", {{{"width_mw", 45}, {"cost_usd_per_mwh", 30}},
                       {{"width_mw", 45}, {"cost_usd_per_mwh", 20}}}},
      {"initial_status_h", -1}
  }};

  SECTION("non-convex fuel curve") {
    CHECK_THROWS_WITH(system_from_json(j, "inline"),
                      Catch::Matchers::ContainsSubstring("non-convex fuel curve for gen G1"));
  }
  SECTION("dangling bus reference") {
    j["generators"][0]["bus"] = "nowhere";
    CHECK_THROWS_WITH(system_from_json(j, "inline"),
                      Catch::Matchers::ContainsSubstring("dangling bus reference"));
  }
  SECTION("missing file") {
    CHECK_THROWS_WITH(load_system(kData + "/does_not_exist.json"),
                      Catch::Matchers::ContainsSubstring("missing file"));
  }
}

TEST_CASE("saved system round-trips bit-exactly") {
  PowerSystem sys = load_system(kData + "/sys6.json");
  std::string tmp = std::string(STOCHUC_BIN_DIR) + "/roundtrip_sys6.json";
  save_system(sys, tmp);
  PowerSystem again = load_system(tmp);
  CHECK(system_to_json(sys) == system_to_json(again));
  std::string tmp2 = std::string(STOCHUC_BIN_DIR) + "/roundtrip_sys6b.json";
  save_system(again, tmp2);
  std::ifstream a(tmp), b(tmp2);
  std::string sa((std::istreambuf_iterator<char>(a)), {});
  std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
}

TEST_CASE("two-bus ptdf is the unit path") {
  PowerSystem sys = load_system(kData + "/sys2.json");
  PtdfMatrix ptdf = compute_ptdf(sys, 0);
  CHECK(ptdf.factors(0, 0) == 0.0);
  CHECK_THAT(ptdf.factors(0, 1), Catch::Matchers::WithinAbs(-1.0, 1e-12));
}

TEST_CASE("three-bus triangle splits 2/3 1/3") {
  PowerSystem sys;
  sys.buses = {{"b1", "", true}, {"b2", "", false}, {"b3", "", false}};
  sys.rebuild_lookup();
  sys.slack_bus = 0;
  sys.lines = {{"L12", 0, 1, 0.1, 100}, {"L23", 1, 2, 0.1, 100}, {"L31", 2, 0, 0.1, 100}};
  PtdfMatrix ptdf = compute_ptdf(sys, 0);
  // inject 1 MW at b2: line b1->b2 carries -2/3, b2->b3 1/3, b3->b1 1/3
  std::vector<double> inj{0.0, 1.0, 0.0};
  auto flows = evaluate_flows(ptdf, inj);
  CHECK_THAT(flows[0], Catch::Matchers::WithinAbs(-2.0 / 3.0, 1e-9));
  CHECK_THAT(flows[1], Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-9));
  CHECK_THAT(flows[2], Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-9));
}

TEST_CASE("six-bus ptdf matches the b-theta oracle") {
  PowerSystem sys = load_system(kData + "/sys6.json");
  PtdfMatrix ptdf = compute_ptdf(sys, sys.slack_bus);
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> inj(sys.buses.size());
    double sum = 0.0;
    for (std::size_t b = 0; b < sys.buses.size(); ++b) {
      inj[b] = u(rng);
      sum += inj[b];
    }
    inj[sys.slack_bus] -= sum;  // balance against the slack
    auto flows = evaluate_flows(ptdf, inj);
    auto ref = oracle::btheta_flows(sys, sys.slack_bus, inj);
    for (std::size_t l = 0; l < sys.lines.size(); ++l)
      CHECK_THAT(flows[l], Catch::Matchers::WithinAbs(ref[l], 1e-8));
  }
}

TEST_CASE("flow evaluation is linear and conserves power") {
  PowerSystem sys = load_system(kData + "/sys6.json");
  PtdfMatrix ptdf = compute_ptdf(sys, sys.slack_bus);
  for (int b = 0; b < (int)sys.buses.size(); ++b)
    CHECK(ptdf.factors(0, sys.slack_bus) == 0.0);

  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::vector<double> n1(6), n2(6);
  for (int i = 0; i < 6; ++i) {
    n1[i] = u(rng);
    n2[i] = u(rng);
  }
  auto f1 = evaluate_flows(ptdf, n1);
  auto f2 = evaluate_flows(ptdf, n2);
  std::vector<double> mix(6);
  for (int i = 0; i < 6; ++i) mix[i] = 2.0 * n1[i] - 0.5 * n2[i];
  auto fm = evaluate_flows(ptdf, mix);
  for (int l = 0; l < 7; ++l)
    CHECK_THAT(fm[l], Catch::Matchers::WithinAbs(2.0 * f1[l] - 0.5 * f2[l], 1e-9));

  // conservation at every non-slack bus for a balanced injection
  std::vector<double> inj(6, 0.0);
  for (int i = 1; i < 6; ++i) inj[i] = u(rng);
  for (int i = 1; i < 6; ++i) inj[0] -= inj[i];
  auto flows = evaluate_flows(ptdf, inj);
  for (int b = 0; b < 6; ++b) {
    if (b == sys.slack_bus) continue;
    double net = inj[b];
    for (std::size_t l = 0; l < sys.lines.size(); ++l) {
      if (sys.lines[l].from_bus == b) net -= flows[l];
      if (sys.lines[l].to_bus == b) net += flows[l];
    }
    CHECK_THAT(net, Catch::Matchers::WithinAbs(0.0, 1e-8));
  }

  SECTION("zero injections give zero flows") {
    auto zf = evaluate_flows(ptdf, std::vector<double>(6, 0.0));
    for (double f : zf) CHECK(f == 0.0);
  }
}

TEST_CASE("two-bus transfer puts the megawatts on the line") {
  PowerSystem sys = load_system(kData + "/sys2.json");
  PtdfMatrix ptdf = compute_ptdf(sys, 0);
  std::vector<double> inj{50.0, -50.0};
  auto flows = evaluate_flows(ptdf, inj);
  CHECK_THAT(flows[0], Catch::Matchers::WithinAbs(50.0, 1e-9));
}

TEST_CASE("disconnected network is rejected") {
  PowerSystem sys;
  sys.buses = {{"b1", "", true}, {"b2", "", false}, {"b3", "", false}};
  sys.rebuild_lookup();
  sys.slack_bus = 0;
  sys.lines = {{"L12", 0, 1, 0.1, 100}};
  CHECK_THROWS_WITH(compute_ptdf(sys, 0),
                    Catch::Matchers::ContainsSubstring("disconnected"));
}
