/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Shared session state and cache structures (internal).
 */

#pragma once

#include "qdmi/plugin/session.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qdmi::plugin::detail {

using OperationKey = std::pair<std::string, std::vector<std::string>>;

struct QubitMetricsEntry {
  double t1Seconds = 0.0;
  double t2Seconds = 0.0;
};

struct OperationMetricsEntry {
  double fidelity = 0.0;
  double durationSeconds = 0.0;
};

struct StaticCache {
  std::vector<std::string> qubitNames;
  std::vector<std::pair<std::string, std::string>> connectivity;
  std::vector<std::string> operations;
  std::vector<std::string> supportedFormats;
  bool supportsCalibrationJobs = false;
  std::string defaultCalibrationSetId;
};

struct DynamicCache {
  std::string calibrationSetId;
  std::set<std::string> availableSites;
  std::set<OperationKey> availableOperations;
};

struct MetricsCache {
  std::string id;
  std::map<std::string, QubitMetricsEntry> perQubit;
  std::map<OperationKey, OperationMetricsEntry> perOperation;
};

struct SessionState {
  enum class Phase : std::uint8_t { Configured, Initialized, Finalized };

  Phase phase = Phase::Configured;
  PluginConfig config;
  std::map<SessionParameterKey, std::string> parameters;
  RouteTable routes;
  std::optional<Transport> transport;
  TokenSource token;

  std::vector<BackendSummary> discovered;
  BackendSummary backend;
  bool calibrationSupported = false;
  std::string activeCalibrationSet;

  StaticCache staticCache;
  DynamicCache dynamicCache;
  MetricsCache metricsCache;

  std::string lastError;

  [[nodiscard]] auto initialized() const -> bool {
    return phase == Phase::Initialized;
  }

  auto fail(const StatusCode code, std::string message) -> StatusCode {
    lastError = std::move(message);
    return code;
  }

  [[nodiscard]] auto monotonicNow() const -> double;
  auto sleepFor(double seconds) const -> void;
};

/// Replaces the dynamic and metrics caches with those of another set;
/// all-or-nothing, the previous caches survive any failure.
[[nodiscard]] auto refreshCaches(SessionState& state,
                                 const std::string& calibrationSetId)
    -> StatusCode;

/// Extracts the "error" field of a JSON error body, or the fallback text.
[[nodiscard]] auto errorFromBody(const HttpResponse& response,
                                 const std::string& fallback) -> std::string;

} // namespace qdmi::plugin::detail
