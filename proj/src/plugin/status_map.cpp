/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/plugin/status_map.hpp"

#include <array>
#include <utility>

namespace qdmi::plugin {

namespace {

// "pending execution" occurs both spaced and underscored; accept both.
constexpr std::array<std::pair<std::string_view, JobStatus>, 27> kStatusTable{{
    {"received", JobStatus::Submitted},
    {"queued", JobStatus::Queued},
    {"waiting", JobStatus::Queued},
    {"validation_started", JobStatus::Running},
    {"validation_ended", JobStatus::Running},
    {"fetch_calibration_started", JobStatus::Running},
    {"fetch_calibration_ended", JobStatus::Running},
    {"compilation_started", JobStatus::Running},
    {"compilation_ended", JobStatus::Running},
    {"save_sweep_metadata_started", JobStatus::Running},
    {"save_sweep_metadata_ended", JobStatus::Running},
    {"pending execution", JobStatus::Running},
    {"pending_execution", JobStatus::Running},
    {"execution_started", JobStatus::Running},
    {"execution_ended", JobStatus::Running},
    {"post_processing_pending", JobStatus::Running},
    {"post_processing_started", JobStatus::Running},
    {"post_processing_ended", JobStatus::Running},
    {"running", JobStatus::Running},
    {"processing", JobStatus::Running},
    {"accepted", JobStatus::Running},
    {"pending compilation", JobStatus::Running},
    {"compiled", JobStatus::Running},
    {"ready", JobStatus::Done},
    {"completed", JobStatus::Done},
    {"aborted", JobStatus::Canceled},
    {"cancelled", JobStatus::Canceled},
}};

} // namespace

auto mapNativeStatus(const std::string_view native) -> Result<JobStatus> {
  if (native == "failed") {
    return Result<JobStatus>::success(JobStatus::Failed);
  }
  for (const auto& [name, status] : kStatusTable) {
    if (native == name) {
      return Result<JobStatus>::success(status);
    }
  }
  return Result<JobStatus>::failure(StatusCode::Protocol,
                                    "unmapped native job state \"" +
                                        std::string{native} + "\"");
}

} // namespace qdmi::plugin
