/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/core/status.hpp"

namespace qdmi {

auto toString(const StatusCode code) -> std::string_view {
  switch (code) {
  case StatusCode::Success:
    return "SUCCESS";
  case StatusCode::InvalidArgument:
    return "ERROR_INVALID_ARGUMENT";
  case StatusCode::PermissionDenied:
    return "ERROR_PERMISSION_DENIED";
  case StatusCode::NotSupported:
    return "ERROR_NOT_SUPPORTED";
  case StatusCode::NotFound:
    return "ERROR_NOT_FOUND";
  case StatusCode::Timeout:
    return "ERROR_TIMEOUT";
  case StatusCode::Protocol:
    return "ERROR_PROTOCOL";
  case StatusCode::Fatal:
    return "ERROR_FATAL";
  }
  return "ERROR_FATAL";
}

auto toString(const JobStatus status) -> std::string_view {
  switch (status) {
  case JobStatus::Submitted:
    return "SUBMITTED";
  case JobStatus::Queued:
    return "QUEUED";
  case JobStatus::Running:
    return "RUNNING";
  case JobStatus::Done:
    return "DONE";
  case JobStatus::Canceled:
    return "CANCELED";
  case JobStatus::Failed:
    return "FAILED";
  }
  return "FAILED";
}

auto jobStatusFromString(const std::string_view name)
    -> std::optional<JobStatus> {
  if (name == "SUBMITTED") {
    return JobStatus::Submitted;
  }
  if (name == "QUEUED") {
    return JobStatus::Queued;
  }
  if (name == "RUNNING") {
    return JobStatus::Running;
  }
  if (name == "DONE") {
    return JobStatus::Done;
  }
  if (name == "CANCELED") {
    return JobStatus::Canceled;
  }
  if (name == "FAILED") {
    return JobStatus::Failed;
  }
  return std::nullopt;
}

} // namespace qdmi
