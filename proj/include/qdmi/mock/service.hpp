/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief In-process core of the mock backend service.
 * @details Owns the registry, the native job table and the request counters.
 * The HTTP layer is a thin shell over these handlers, so tests can drive the
 * service without sockets. Job progress is advanced lazily from the injected
 * clock; there are no background threads.
 */

#pragma once

#include "qdmi/mock/config.hpp"
#include "qdmi/mock/registry.hpp"
#include "qdmi/mock/simulator.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace qdmi::mock {

/// Monotonic time source in seconds; injectable for deterministic tests.
using ClockFn = std::function<double()>;

[[nodiscard]] auto steadyClock() -> ClockFn;

/// Status code plus JSON body, as the HTTP layer will serialize it.
struct ApiResponse {
  int status = 200;
  nlohmann::json body;

  [[nodiscard]] auto ok() const -> bool {
    return status >= 200 && status < 300;
  }
};

/// Symbolic route identifiers; also the request-counter keys.
enum class Route : std::uint8_t {
  Discovery,
  StaticArch,
  DynamicArch,
  CalibrationSupport,
  CalibrationMetrics,
  SubmitCircuit,
  JobStatus,
  JobMeasurements,
  JobCounts,
  JobCancel,
  SubmitCalibration,
  CalibrationStatus,
  CalibrationAbort,
};

[[nodiscard]] auto routeName(Route route) -> std::string_view;

class BackendService {
public:
  explicit BackendService(ServiceConfig config, ClockFn clock = steadyClock());

  auto listBackends(const std::string& auth) -> ApiResponse;
  auto staticArchitecture(const std::string& auth,
                          const std::string& backendId) -> ApiResponse;
  auto dynamicArchitecture(const std::string& auth,
                           const std::string& backendId,
                           const std::string& setId) -> ApiResponse;
  auto calibrationSupport(const std::string& auth,
                          const std::string& backendId) -> ApiResponse;
  auto calibrationMetrics(const std::string& auth, const std::string& setId)
      -> ApiResponse;
  auto submitCircuitJob(const std::string& auth, const std::string& backendId,
                        const std::string& body) -> ApiResponse;
  auto jobStatus(const std::string& auth, const std::string& jobId)
      -> ApiResponse;
  auto jobMeasurements(const std::string& auth, const std::string& jobId)
      -> ApiResponse;
  auto jobCounts(const std::string& auth, const std::string& jobId)
      -> ApiResponse;
  auto cancelJob(const std::string& auth, const std::string& jobId)
      -> ApiResponse;
  auto submitCalibrationJob(const std::string& auth,
                            const std::string& backendId) -> ApiResponse;
  auto calibrationJobStatus(const std::string& auth, const std::string& jobId)
      -> ApiResponse;
  auto abortCalibrationJob(const std::string& auth, const std::string& jobId)
      -> ApiResponse;

  /// Test-only: per-route request counters plus the ordered request log.
  auto requestCounts() -> ApiResponse;

  /// Test-only: make the next @p count requests to @p route fail.
  auto injectFailure(Route route, int count, int httpStatus) -> void;

  /// Test-only: clears counters and the request log.
  auto resetRequestCounts() -> void;

private:
  enum class JobKind : std::uint8_t { Circuit, Calibration };

  struct NativeJob {
    std::string id;
    JobKind kind = JobKind::Circuit;
    std::string backendId;
    double createdAt = 0.0;
    std::vector<std::pair<std::string, double>> schedule;
    std::string terminalState = "ready";
    std::string errorMessage;
    std::optional<std::string> forcedTerminal;
    ShotRecord artifacts;
    std::string resultCalibrationSet;
    bool materialized = false;
  };

  auto track(Route route) -> std::optional<ApiResponse>;
  auto authorize(const std::string& auth) -> std::optional<ApiResponse>;
  [[nodiscard]] auto currentState(const NativeJob& job) const -> std::string;
  auto settleCalibrationJobs() -> void;
  auto findJob(const std::string& jobId, JobKind kind) -> NativeJob*;
  [[nodiscard]] auto makeSchedule(std::size_t stages) const
      -> std::vector<std::pair<std::string, double>>;

  ServiceConfig config_;
  ClockFn clock_;
  Registry registry_;
  std::vector<NativeJob> jobs_;
  std::uint64_t jobCounter_ = 0;

  std::map<std::string, std::int64_t> requestCounts_;
  std::vector<std::string> requestLog_;
  std::map<Route, std::pair<int, int>> pendingFailures_; // route -> (n, code)

  mutable std::mutex mutex_;
};

} // namespace qdmi::mock
