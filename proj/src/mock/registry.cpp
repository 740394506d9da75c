/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/mock/registry.hpp"

#include "qdmi/mock/rng.hpp"

#include <algorithm>
#include <cstdio>

namespace qdmi::mock {

namespace {

constexpr std::uint64_t kRegistryStream = 0x7265676973747279ULL;
constexpr std::uint64_t kJitterStream = 0x6a69747465720000ULL;

/// UUID-format text from two seeded words (version nibble forced to 4).
auto formatUuid(const std::uint64_t hi, const std::uint64_t lo)
    -> std::string {
  char buf[37];
  std::snprintf(buf, sizeof(buf), "%08x-%04x-4%03x-%04x-%012llx",
                static_cast<unsigned>(hi >> 32),
                static_cast<unsigned>((hi >> 16) & 0xFFFF),
                static_cast<unsigned>(hi & 0xFFF),
                static_cast<unsigned>(0x8000U | ((lo >> 48) & 0x3FFF)),
                static_cast<unsigned long long>(lo & 0xFFFFFFFFFFFFULL));
  return buf;
}

auto clampCalibration(CalibrationSet& set) -> void {
  for (auto& [name, metrics] : set.perQubit) {
    metrics.t2Seconds = std::min(metrics.t2Seconds, 2.0 * metrics.t1Seconds);
  }
  for (auto& [key, metrics] : set.perOperation) {
    metrics.fidelity = std::clamp(metrics.fidelity, 0.0, 1.0);
  }
}

} // namespace

auto BackendRecord::hasQubit(const std::string& name) const -> bool {
  return std::find(qubitNames.begin(), qubitNames.end(), name) !=
         qubitNames.end();
}

auto BackendRecord::hasEdge(const std::string& a, const std::string& b) const
    -> bool {
  return std::any_of(connectivity.begin(), connectivity.end(),
                     [&](const auto& edge) {
                       return (edge.first == a && edge.second == b) ||
                              (edge.first == b && edge.second == a);
                     });
}

auto BackendRecord::supportsFormat(const std::string_view format) const
    -> bool {
  return std::find(supportedFormats.begin(), supportedFormats.end(), format) !=
         supportedFormats.end();
}

auto defaultFixtures() -> std::vector<BackendFixture> {
  BackendFixture star;
  star.alias = "mock-5q";
  star.availability = "online";
  star.supportsCalibrationJobs = true;
  star.qubitNames = {"QB1", "QB2", "QB3", "QB4", "QB5"};
  star.connectivity = {{"QB1", "QB3"}, {"QB2", "QB3"}, {"QB4", "QB3"},
                       {"QB5", "QB3"}};
  star.supportedFormats = {"IQMJSON", "CALIBRATION"};

  BackendFixture chain;
  chain.alias = "mock-6q";
  chain.availability = "maintenance";
  chain.supportsCalibrationJobs = false;
  chain.qubitNames = {"QB1", "QB2", "QB3", "QB4", "QB5", "QB6"};
  chain.connectivity = {{"QB1", "QB2"}, {"QB2", "QB3"}, {"QB3", "QB4"},
                        {"QB4", "QB5"}, {"QB5", "QB6"}};
  chain.supportedFormats = {"IQMJSON"};

  return {star, chain};
}

Registry::Registry(const ServiceConfig& config) : seed_(config.seed) {
  SeededStream ids(mixSeed(seed_, kRegistryStream));
  const auto fixtures =
      config.backends.has_value() ? *config.backends : defaultFixtures();
  for (const auto& fixture : fixtures) {
    BackendRecord record;
    record.id = formatUuid(ids.nextU64(), ids.nextU64());
    record.alias = fixture.alias;
    record.availability = fixture.availability;
    record.supportsCalibrationJobs = fixture.supportsCalibrationJobs;
    record.qubitNames = fixture.qubitNames;
    record.connectivity = fixture.connectivity;
    record.supportedFormats = fixture.supportedFormats;
    backends_.push_back(std::move(record));
    addInitialSet(backends_.back());
  }
}

auto Registry::findById(const std::string& id) -> BackendRecord* {
  for (auto& backend : backends_) {
    if (backend.id == id) {
      return &backend;
    }
  }
  return nullptr;
}

auto Registry::findByAlias(const std::string& alias) -> BackendRecord* {
  for (auto& backend : backends_) {
    if (backend.alias == alias) {
      return &backend;
    }
  }
  return nullptr;
}

auto Registry::calibrationSet(const std::string& id) const
    -> const CalibrationSet* {
  const auto it = sets_.find(id);
  return it == sets_.end() ? nullptr : &it->second;
}

auto Registry::nextSetId() -> std::string {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "cs-%016llx",
                static_cast<unsigned long long>(
                    mixSeed(seed_, 0xCA1 + setCounter_)));
  return buf;
}

auto Registry::logicalTimestamp() -> std::string {
  // Logical clock keyed to set creation order; keeps responses byte-stable.
  char buf[32];
  std::snprintf(buf, sizeof(buf), "2026-01-01T00:%02u:%02uZ",
                static_cast<unsigned>(setCounter_ / 60U),
                static_cast<unsigned>(setCounter_ % 60U));
  return buf;
}

auto Registry::addInitialSet(BackendRecord& backend) -> void {
  SeededStream stream(mixSeed(seed_, kRegistryStream + 1 + setCounter_));
  CalibrationSet set;
  set.id = nextSetId();
  set.backendId = backend.id;
  set.createdAt = logicalTimestamp();
  for (const auto& qubit : backend.qubitNames) {
    QubitMetrics metrics;
    metrics.t1Seconds = stream.nextIn(40e-6, 60e-6);
    metrics.t2Seconds = metrics.t1Seconds * stream.nextIn(0.8, 1.2);
    set.perQubit[qubit] = metrics;
    set.perOperation[{"prx", {qubit}}] = {stream.nextIn(0.9985, 0.9995),
                                          stream.nextIn(18e-9, 22e-9)};
    set.perOperation[{"measure", {qubit}}] = {stream.nextIn(0.975, 0.99),
                                              stream.nextIn(1.4e-6, 1.6e-6)};
  }
  for (const auto& edge : backend.connectivity) {
    set.perOperation[{"cz", {edge.first, edge.second}}] = {
        stream.nextIn(0.985, 0.995), stream.nextIn(36e-9, 44e-9)};
  }
  clampCalibration(set);
  backend.activeCalibrationSet = set.id;
  sets_.emplace(set.id, std::move(set));
  ++setCounter_;
}

auto Registry::createJitteredSet(BackendRecord& backend) -> std::string {
  const auto* previous = calibrationSet(backend.activeCalibrationSet);
  SeededStream stream(mixSeed(seed_, kJitterStream + setCounter_));
  CalibrationSet set;
  set.id = nextSetId();
  set.backendId = backend.id;
  set.createdAt = logicalTimestamp();
  for (const auto& [qubit, metrics] : previous->perQubit) {
    QubitMetrics jittered;
    jittered.t1Seconds = metrics.t1Seconds * stream.nextIn(0.95, 1.05);
    jittered.t2Seconds = metrics.t2Seconds * stream.nextIn(0.95, 1.05);
    set.perQubit[qubit] = jittered;
  }
  for (const auto& [key, metrics] : previous->perOperation) {
    OperationMetrics jittered;
    jittered.fidelity = metrics.fidelity * stream.nextIn(0.95, 1.05);
    jittered.durationSeconds =
        metrics.durationSeconds * stream.nextIn(0.95, 1.05);
    set.perOperation[key] = jittered;
  }
  clampCalibration(set);
  backend.activeCalibrationSet = set.id;
  const auto id = set.id;
  sets_.emplace(id, std::move(set));
  ++setCounter_;
  return id;
}

} // namespace qdmi::mock
