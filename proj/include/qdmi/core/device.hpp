/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief The vendor-agnostic device contract.
 * @details Anything that can answer property queries and manage jobs through
 * these two interfaces is a valid execution target for the upper layers; the
 * HTTP-backed plugin is one implementation, in-process fakes are another.
 */

#pragma once

#include "qdmi/core/keys.hpp"
#include "qdmi/core/result.hpp"
#include "qdmi/core/status.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qdmi {

/// A job handle bound to one device session.
class DeviceJob {
public:
  virtual ~DeviceJob() = default;

  /// Stores a job parameter; rejected once the job has been submitted.
  virtual auto setParameter(JobParameterKey key, std::string_view value)
      -> StatusCode = 0;

  virtual auto submit() -> StatusCode = 0;

  /// Polls the current status once and returns the mapped state.
  virtual auto check() -> Result<JobStatus> = 0;

  /// Repeatedly checks with exponential backoff until terminal or timed out.
  virtual auto wait(double timeoutSeconds) -> Result<JobStatus> = 0;

  virtual auto cancel() -> StatusCode = 0;

  /// Two-call sized read of a result family; requires status DONE.
  virtual auto getResults(JobResultKey key, std::size_t capacity,
                          char* destination) -> SizedRead = 0;
};

/// An initialized, authenticated session bound to one resolved backend.
class DeviceSession {
public:
  virtual ~DeviceSession() = default;

  virtual auto queryDeviceProperty(DeviceProperty key, std::size_t capacity,
                                   char* destination) -> SizedRead = 0;

  virtual auto querySiteProperty(std::string_view site, SiteProperty key,
                                 std::size_t capacity, char* destination)
      -> SizedRead = 0;

  virtual auto queryOperationProperty(std::string_view operation,
                                      const std::vector<std::string>& sites,
                                      OperationProperty key,
                                      std::size_t capacity, char* destination)
      -> SizedRead = 0;

  /// Identifier of the calibration set the session caches are bound to.
  [[nodiscard]] virtual auto activeCalibrationSet() const -> std::string = 0;

  virtual auto createJob() -> Result<std::unique_ptr<DeviceJob>> = 0;
};

/// Full two-call device query returning an owned string.
[[nodiscard]] auto queryDeviceString(DeviceSession& session, DeviceProperty key)
    -> Result<std::string>;

/// Full two-call site query returning an owned string.
[[nodiscard]] auto querySiteString(DeviceSession& session,
                                   std::string_view site, SiteProperty key)
    -> Result<std::string>;

/// Full two-call operation query returning an owned string.
[[nodiscard]] auto queryOperationString(DeviceSession& session,
                                        std::string_view operation,
                                        const std::vector<std::string>& sites,
                                        OperationProperty key)
    -> Result<std::string>;

/// Full two-call result read returning an owned string.
[[nodiscard]] auto readResultString(DeviceJob& job, JobResultKey key)
    -> Result<std::string>;

} // namespace qdmi
