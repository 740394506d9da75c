/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Mapping from symbolic backend operations to concrete API routes.
 */

#pragma once

#include <string>

namespace qdmi::plugin {

/**
 * @brief Route templates of the backend protocol.
 * @details Placeholders: {id} backend id, {calset} calibration-set id,
 * {job} job id.
 */
class RouteTable {
public:
  [[nodiscard]] auto discovery() const -> std::string;
  [[nodiscard]] auto staticArch(const std::string& backendId) const
      -> std::string;
  [[nodiscard]] auto dynamicArch(const std::string& backendId,
                                 const std::string& calibrationSetId) const
      -> std::string;
  [[nodiscard]] auto calibrationMetrics(
      const std::string& calibrationSetId) const -> std::string;
  [[nodiscard]] auto calibrationSupport(const std::string& backendId) const
      -> std::string;
  [[nodiscard]] auto submitCircuit(const std::string& backendId) const
      -> std::string;
  [[nodiscard]] auto jobStatus(const std::string& jobId) const -> std::string;
  [[nodiscard]] auto jobMeasurements(const std::string& jobId) const
      -> std::string;
  [[nodiscard]] auto jobCounts(const std::string& jobId) const -> std::string;
  [[nodiscard]] auto jobCancel(const std::string& jobId) const -> std::string;
  [[nodiscard]] auto submitCalibration(const std::string& backendId) const
      -> std::string;
  [[nodiscard]] auto calibrationStatus(const std::string& jobId) const
      -> std::string;
  [[nodiscard]] auto calibrationAbort(const std::string& jobId) const
      -> std::string;
};

} // namespace qdmi::plugin
