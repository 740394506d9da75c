/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "qdmi/frontend/primitives.hpp"

#include "qdmi/frontend/target.hpp"
#include "qdmi/mock/http_server.hpp"
#include "qdmi/plugin/session.hpp"
#include "support/doctest_shim.hpp"
#include "support/fake_device.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

using namespace qdmi;
using namespace qdmi::frontend;

namespace {

constexpr double kPi = std::numbers::pi;

struct DeviceHarness {
  std::function<DeviceSession&()> session;
  std::function<void()> reset; ///< fresh session state per test case
};

/// The whole adapter suite runs unmodified against any contract
/// implementation; backend-specific assertions live outside this function.
auto runAdapterSuite(DeviceHarness& harness) -> void {
  harness.reset();
  auto& session = harness.session();

  SUBCASE("build_target assembles topology and quality from queries") {
    const auto target = buildTarget(session);
    REQUIRE(target.ok());
    CHECK(target.value().qubitNames.size() == 5);
    CHECK(target.value().connectivity.size() == 4);
    CHECK(target.value().hasEdge("QB1", "QB3"));
    CHECK(target.value().hasEdge("QB3", "QB1"));
    CHECK_FALSE(target.value().hasEdge("QB1", "QB2"));
    // every declared operation instance carries quality metrics
    CHECK(target.value().operations.size() == 14);
    for (const auto& [key, quality] : target.value().operations) {
      CHECK(quality.fidelity > 0.0);
      CHECK(quality.fidelity <= 1.0);
      CHECK(quality.durationSeconds > 0.0);
    }
    CHECK(target.value().calibrationSetId == session.activeCalibrationSet());
  }

  SUBCASE("sampler returns one histogram per circuit") {
    CircuitSpec flip;
    flip.prx("QB1", kPi, 0.0).measure("QB1", "m0");
    const auto outcome = runSampler(session, {flip}, 100, {});
    REQUIRE(outcome.ok());
    REQUIRE(outcome.histograms.size() == 1);
    CHECK(outcome.histograms[0].at("1") == 100);
  }

  SUBCASE("empty circuit list is a no-op") {
    const auto outcome = runSampler(session, {}, 100, {});
    CHECK(outcome.ok());
    CHECK(outcome.histograms.empty());
  }

  SUBCASE("batch of three produces three histograms") {
    CircuitSpec a;
    a.prx("QB1", kPi, 0.0).measure("QB1", "m0");
    CircuitSpec b;
    b.measure("QB2", "m0");
    CircuitSpec c;
    c.prx("QB3", kPi / 2, kPi / 2).measure("QB3", "m0");
    const auto outcome = runSampler(session, {a, b, c}, 64, {});
    REQUIRE(outcome.ok());
    REQUIRE(outcome.histograms.size() == 3);
    CHECK(outcome.histograms[0].at("1") == 64);
    CHECK(outcome.histograms[1].at("0") == 64);
  }

  SUBCASE("first failing circuit aborts the batch, keeping prior results") {
    CircuitSpec good;
    good.prx("QB1", kPi, 0.0).measure("QB1", "m0");
    CircuitSpec bad;
    bad.cz("QB1", "QB2").measure("QB1", "m0"); // star: not an edge
    const auto outcome = runSampler(session, {good, bad, good}, 16, {});
    CHECK_FALSE(outcome.ok());
    CHECK(outcome.failedIndex == 1);
    REQUIRE(outcome.histograms.size() == 1);
    CHECK(outcome.histograms[0].at("1") == 16);
  }

  SUBCASE("estimator: prepared |1> gives exactly -1") {
    CircuitSpec flip;
    flip.prx("QB1", kPi, 0.0).measure("QB1", "m0");
    DiagonalObservable z;
    z.add(1.0, {"m0"});
    const auto estimated = runEstimator(session, flip, z, 200, {});
    REQUIRE(estimated.ok());
    CHECK(estimated.value().value == -1.0);
    CHECK(estimated.value().stderrValue == 0.0);
  }

  SUBCASE("estimator: constant term has zero spread") {
    CircuitSpec idle;
    idle.measure("QB1", "m0");
    DiagonalObservable offset;
    offset.add(0.75, {});
    const auto estimated = runEstimator(session, idle, offset, 100, {});
    REQUIRE(estimated.ok());
    CHECK(estimated.value().value == 0.75);
    CHECK(estimated.value().stderrValue == 0.0);
  }

  SUBCASE("estimator: two-qubit ground state sums the Z terms") {
    CircuitSpec idle;
    idle.measure("QB1", "m0").measure("QB2", "m1");
    DiagonalObservable sum;
    sum.add(0.5, {"m0"}).add(0.5, {"m1"});
    const auto estimated = runEstimator(session, idle, sum, 50, {});
    REQUIRE(estimated.ok());
    CHECK(estimated.value().value == 1.0);
  }

  SUBCASE("estimator rejects unmeasured support keys") {
    CircuitSpec idle;
    idle.measure("QB1", "m0");
    DiagonalObservable z;
    z.add(1.0, {"mX"});
    CHECK(runEstimator(session, idle, z, 10, {}).status() ==
          StatusCode::InvalidArgument);
  }

  SUBCASE("counts-level expectation equals the shot-level one") {
    CircuitSpec mixed;
    mixed.prx("QB1", kPi / 2, kPi / 2)
        .prx("QB2", 0.7, kPi / 2)
        .measure("QB1", "m0")
        .measure("QB2", "m1");
    DiagonalObservable obs;
    obs.add(0.8, {"m0"}).add(-0.3, {"m0", "m1"}).add(0.1, {});

    const auto estimated = runEstimator(session, mixed, obs, 300, {});
    REQUIRE(estimated.ok());

    harness.reset(); // fresh device state replays the same first jobs
    auto& fresh = harness.session();
    const auto sampled = runSampler(fresh, {mixed}, 300, {});
    REQUIRE(sampled.ok());
    const auto fromCounts = expectationFromCounts(
        sampled.histograms[0], obs, mixed.measureKeys());
    REQUIRE(fromCounts.ok());
    CHECK(fromCounts.value() ==
          doctest::Approx(estimated.value().value).epsilon(1e-12));
  }
}

} // namespace

TEST_CASE("adapter suite over the in-process fake device") {
  std::unique_ptr<test::FakeDevice> device;
  DeviceHarness harness;
  harness.reset = [&] { device = std::make_unique<test::FakeDevice>(); };
  harness.session = [&]() -> DeviceSession& { return *device; };
  runAdapterSuite(harness);
}

TEST_CASE("adapter suite over the HTTP-backed plugin") {
  std::unique_ptr<mock::MockServer> server;
  std::unique_ptr<plugin::Session> session;
  DeviceHarness harness;
  harness.reset = [&] {
    mock::ServiceConfig config;
    config.seed = 1;
    server = std::make_unique<mock::MockServer>(config);
    REQUIRE(server->start() > 0);
    plugin::PluginConfig pluginConfig;
    pluginConfig.environment = plugin::Environment{};
    session = std::make_unique<plugin::Session>(std::move(pluginConfig));
    (void)session->setParameter(SessionParameterKey::BaseUrl,
                                server->baseUrl());
    (void)session->setParameter(SessionParameterKey::Token, "test-token");
    (void)session->setParameter(SessionParameterKey::Custom2, "mock-5q");
    REQUIRE(session->init() == StatusCode::Success);
  };
  harness.session = [&]() -> DeviceSession& { return *session; };
  runAdapterSuite(harness);

  SUBCASE("target construction causes zero backend requests") {
    harness.reset();
    const auto before =
        server->service().requestCounts().body["total"].get<std::int64_t>();
    const auto target = buildTarget(*session);
    REQUIRE(target.ok());
    CHECK(server->service().requestCounts().body["total"].get<std::int64_t>() ==
          before);
  }

  SUBCASE("three circuits mean exactly three submissions") {
    harness.reset();
    CircuitSpec a;
    a.measure("QB1", "m0");
    const auto before = server->service()
                            .requestCounts()
                            .body["counts"]
                            .value("submit_circuit", 0);
    const auto outcome = runSampler(*session, {a, a, a}, 8, {});
    REQUIRE(outcome.ok());
    CHECK(server->service()
              .requestCounts()
              .body["counts"]["submit_circuit"]
              .get<int>() == before + 3);
  }
}

TEST_CASE("expectation_from_counts handles the documented examples") {
  DiagonalObservable z0;
  z0.add(1.0, {"k0"});
  CHECK(expectationFromCounts({{"0", 50}, {"1", 50}}, z0, {"k0"}).value() ==
        0.0);
  CHECK(expectationFromCounts({{"1", 100}}, z0, {"k0"}).value() == -1.0);

  DiagonalObservable zSecond;
  zSecond.add(1.0, {"k1"});
  const auto third = expectationFromCounts({{"00", 2}, {"01", 1}}, zSecond,
                                           {"k0", "k1"});
  REQUIRE(third.ok());
  CHECK(third.value() == doctest::Approx(1.0 / 3.0));

  // width mismatch
  CHECK(expectationFromCounts({{"0", 1}}, zSecond, {"k0", "k1"}).status() ==
        StatusCode::InvalidArgument);
  // unmeasured key
  CHECK(expectationFromCounts({{"0", 1}}, zSecond, {"k0"}).status() ==
        StatusCode::InvalidArgument);
}

TEST_CASE("counts aggregation matches shot-level averaging on random data") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto width = 1 + rng() % 4;
    std::vector<std::string> keys;
    for (std::size_t k = 0; k < width; ++k) {
      keys.push_back("k" + std::to_string(k));
    }
    DiagonalObservable obs;
    const auto termCount = 1 + rng() % 4;
    double coeffSum = 0.0;
    for (std::size_t t = 0; t < termCount; ++t) {
      std::set<std::string> support;
      for (const auto& key : keys) {
        if (rng() % 2 == 0) {
          support.insert(key);
        }
      }
      const auto coeff =
          std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
      coeffSum += std::abs(coeff);
      obs.add(coeff, std::move(support));
    }

    // random shot list
    std::vector<std::string> shots(1 + rng() % 200);
    for (auto& bits : shots) {
      bits.resize(width);
      for (auto& c : bits) {
        c = rng() % 2 == 0 ? '0' : '1';
      }
    }
    Histogram counts;
    double shotMean = 0.0;
    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      position[keys[i]] = i;
    }
    for (const auto& bits : shots) {
      ++counts[bits];
      for (const auto& term : obs.terms) {
        double product = term.coefficient;
        for (const auto& key : term.zSupport) {
          product *= bits[position[key]] == '1' ? -1.0 : 1.0;
        }
        shotMean += product;
      }
    }
    shotMean /= static_cast<double>(shots.size());

    const auto fromCounts = expectationFromCounts(counts, obs, keys);
    REQUIRE(fromCounts.ok());
    CHECK(fromCounts.value() == doctest::Approx(shotMean).epsilon(1e-12));
    // boundedness
    CHECK(std::abs(fromCounts.value()) <= coeffSum + 1e-12);
  }
}

TEST_CASE("circuit spec serializes into the program wire format") {
  CircuitSpec circuit;
  circuit.name = "bell-ish";
  circuit.prx("QB1", kPi / 2, kPi / 2)
      .cz("QB1", "QB3")
      .measure("QB1", "m0")
      .measure("QB3", "m1");
  const auto parsed = mock::parseCircuit(circuit.toProgramText());
  REQUIRE(parsed.ok());
  CHECK(parsed.value().name == "bell-ish");
  CHECK(parsed.value().instructions.size() == 4);
  CHECK(parsed.value().measureKeys() ==
        std::vector<std::string>{"m0", "m1"});
}
