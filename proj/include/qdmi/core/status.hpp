/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Status codes and job states shared by every layer of the stack.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace qdmi {

/// Result code returned by every device-facing operation.
enum class StatusCode : std::uint8_t {
  Success,
  InvalidArgument,
  PermissionDenied,
  NotSupported,
  NotFound,
  Timeout,
  Protocol,
  Fatal,
};

/// Canonical interface name, e.g. "ERROR_INVALID_ARGUMENT".
[[nodiscard]] auto toString(StatusCode code) -> std::string_view;

/// Coarse job lifecycle state exposed to clients.
enum class JobStatus : std::uint8_t {
  Submitted,
  Queued,
  Running,
  Done,
  Canceled,
  Failed,
};

[[nodiscard]] auto toString(JobStatus status) -> std::string_view;

/// DONE, CANCELED and FAILED never change once observed.
[[nodiscard]] constexpr auto isTerminal(JobStatus status) -> bool {
  return status == JobStatus::Done || status == JobStatus::Canceled ||
         status == JobStatus::Failed;
}

/**
 * @brief Progress rank used to check monotonicity of observed statuses.
 * @details SUBMITTED < QUEUED < RUNNING < any terminal state. All terminal
 * states share the top rank.
 */
[[nodiscard]] constexpr auto progressRank(JobStatus status) -> int {
  switch (status) {
  case JobStatus::Submitted:
    return 0;
  case JobStatus::Queued:
    return 1;
  case JobStatus::Running:
    return 2;
  default:
    return 3;
  }
}

/// Parses the canonical display name back into a status, if it matches.
[[nodiscard]] auto jobStatusFromString(std::string_view name)
    -> std::optional<JobStatus>;

} // namespace qdmi
