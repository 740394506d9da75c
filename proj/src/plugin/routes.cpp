/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/plugin/routes.hpp"

namespace qdmi::plugin {

auto RouteTable::discovery() const -> std::string {
  return "/quantum-computers";
}

auto RouteTable::staticArch(const std::string& backendId) const
    -> std::string {
  return "/quantum-computers/" + backendId + "/static-architecture";
}

auto RouteTable::dynamicArch(const std::string& backendId,
                             const std::string& calibrationSetId) const
    -> std::string {
  return "/quantum-computers/" + backendId + "/dynamic-architecture/" +
         calibrationSetId;
}

auto RouteTable::calibrationMetrics(const std::string& calibrationSetId) const
    -> std::string {
  return "/calibration-sets/" + calibrationSetId + "/metrics";
}

auto RouteTable::calibrationSupport(const std::string& backendId) const
    -> std::string {
  return "/quantum-computers/" + backendId + "/calibration-support";
}

auto RouteTable::submitCircuit(const std::string& backendId) const
    -> std::string {
  return "/quantum-computers/" + backendId + "/jobs";
}

auto RouteTable::jobStatus(const std::string& jobId) const -> std::string {
  return "/jobs/" + jobId + "/status";
}

auto RouteTable::jobMeasurements(const std::string& jobId) const
    -> std::string {
  return "/jobs/" + jobId + "/measurements";
}

auto RouteTable::jobCounts(const std::string& jobId) const -> std::string {
  return "/jobs/" + jobId + "/counts";
}

auto RouteTable::jobCancel(const std::string& jobId) const -> std::string {
  return "/jobs/" + jobId + "/cancel";
}

auto RouteTable::submitCalibration(const std::string& backendId) const
    -> std::string {
  return "/quantum-computers/" + backendId + "/calibration-jobs";
}

auto RouteTable::calibrationStatus(const std::string& jobId) const
    -> std::string {
  return "/calibration-jobs/" + jobId;
}

auto RouteTable::calibrationAbort(const std::string& jobId) const
    -> std::string {
  return "/calibration-jobs/" + jobId + "/abort";
}

} // namespace qdmi::plugin
