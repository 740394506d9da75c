/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief The HTTP-backed implementation of the device contract.
 * @details A session is an authenticated connection plus one resolved
 * backend and the metadata caches filled during warm-up. Queries never touch
 * the network; jobs talk to the backend through the session transport. A
 * session and its jobs form a single-owner group and are not thread-safe.
 */

#pragma once

#include "qdmi/core/device.hpp"
#include "qdmi/core/parsers.hpp"
#include "qdmi/plugin/routes.hpp"
#include "qdmi/plugin/token.hpp"
#include "qdmi/plugin/transport.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qdmi::plugin {

/// Version string reported as the device VERSION property.
inline constexpr std::string_view kPluginVersion = "1.0.0";

/**
 * @brief Plugin tunables. Defaults are production values; tests inject a
 * fake clock/sleeper and shrink the delays.
 */
struct PluginConfig {
  double backoffBaseSeconds = 0.5;
  double backoffFactor = 2.0;
  double backoffCapSeconds = 8.0;
  double calibrationRetryDelaySeconds = 120.0;
  double waitTimeoutSeconds = 300.0; ///< default for blocking helpers
  std::function<double()> now;          ///< monotonic seconds
  std::function<void(double)> sleepFor; ///< sleep for the given seconds
  std::optional<Environment> environment; ///< overrides the process env
};

/// Discovery summary of one remote backend.
struct BackendSummary {
  std::string id;
  std::string alias;
  std::string availability;
};

/// Job flavor; routes and result semantics differ between the two.
enum class JobKind : std::uint8_t { Circuit, Calibration };

namespace detail {
struct SessionState;
} // namespace detail

class Job;

class Session final : public DeviceSession {
public:
  explicit Session(PluginConfig config = {});
  ~Session() override;

  Session(const Session&) = delete;
  auto operator=(const Session&) -> Session& = delete;

  /// Stores a session parameter; only legal before initialization.
  auto setParameter(SessionParameterKey key, std::string_view value)
      -> StatusCode;

  /**
   * @brief Discovery and session warm-up.
   *
   * Performs remote backend discovery, resolves the selected target by ID,
   * alias, or first available backend, materializes the static architecture,
   * loads the dynamic architecture for the default calibration set, loads
   * calibration metrics, and probes whether calibration jobs are supported —
   * exactly five backend requests, in that order.
   */
  auto init() -> StatusCode;

  auto queryDeviceProperty(DeviceProperty key, std::size_t capacity,
                           char* destination) -> SizedRead override;
  auto querySiteProperty(std::string_view site, SiteProperty key,
                         std::size_t capacity, char* destination)
      -> SizedRead override;
  auto queryOperationProperty(std::string_view operation,
                              const std::vector<std::string>& sites,
                              OperationProperty key, std::size_t capacity,
                              char* destination) -> SizedRead override;

  [[nodiscard]] auto activeCalibrationSet() const -> std::string override;

  auto createJob() -> Result<std::unique_ptr<DeviceJob>> override;

  /// Rebinds to a remote job by id, e.g. from a separate CLI invocation.
  auto attachJob(std::string remoteId, JobKind kind)
      -> Result<std::unique_ptr<Job>>;

  /**
   * @brief Swaps the dynamic and metrics caches to another calibration set.
   *
   * All-or-nothing: on any error the previous caches remain intact.
   */
  auto refreshCalibration(const std::string& calibrationSetId) -> StatusCode;

  /// Releases the session; all jobs created from it become invalid.
  auto free() -> StatusCode;

  [[nodiscard]] auto initialized() const -> bool;
  [[nodiscard]] auto backendId() const -> std::string;
  [[nodiscard]] auto backendAlias() const -> std::string;
  [[nodiscard]] auto calibrationSupported() const -> bool;
  /// Backends seen during warm-up discovery (cached, no extra request).
  [[nodiscard]] auto discoveredBackends() const
      -> const std::vector<BackendSummary>&;
  [[nodiscard]] auto lastError() const -> std::string;

private:
  std::shared_ptr<detail::SessionState> state_;
};

class Job final : public DeviceJob {
public:
  Job(std::shared_ptr<detail::SessionState> session, JobKind kind);
  /// Attached variant: the job already exists remotely.
  Job(std::shared_ptr<detail::SessionState> session, JobKind kind,
      std::string remoteId);

  auto setParameter(JobParameterKey key, std::string_view value)
      -> StatusCode override;
  auto submit() -> StatusCode override;
  auto check() -> Result<JobStatus> override;
  auto wait(double timeoutSeconds) -> Result<JobStatus> override;
  auto cancel() -> StatusCode override;
  auto getResults(JobResultKey key, std::size_t capacity, char* destination)
      -> SizedRead override;

  [[nodiscard]] auto remoteId() const -> const std::string& {
    return remoteId_;
  }
  [[nodiscard]] auto kind() const -> JobKind { return kind_; }
  [[nodiscard]] auto submitted() const -> bool { return submitted_; }
  [[nodiscard]] auto lastError() const -> std::string { return lastError_; }

private:
  [[nodiscard]] auto sessionUsable() const -> bool;
  auto fetchShots() -> StatusCode;
  auto ensureHistogram() -> StatusCode;
  auto calibrationResult() -> Result<std::string>;

  std::shared_ptr<detail::SessionState> session_;
  JobKind kind_;
  std::map<JobParameterKey, std::string> parameters_;
  std::string remoteId_;
  bool submitted_ = false;
  JobStatus status_ = JobStatus::Submitted;
  bool statusKnown_ = false;
  bool terminalCached_ = false;
  std::string lastError_;

  std::optional<std::vector<std::string>> shotsCache_;
  std::optional<std::map<std::string, std::int64_t>> histCache_;
  std::optional<std::string> calibrationSetCache_;
};

/**
 * @brief The plugin's device handle; construction takes no arguments.
 * @details Mirrors the initialize/finalize bracket around sessions: open the
 * device, create sessions from it, and let RAII finalize everything.
 */
class Device {
public:
  [[nodiscard]] auto createSession(PluginConfig config = {}) const
      -> std::unique_ptr<Session>;
};

} // namespace qdmi::plugin
