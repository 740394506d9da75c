/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "qdmi/core/device.hpp"
#include "qdmi/core/result.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qdmi::frontend {

/**
 * @brief Execution-target snapshot assembled from property queries.
 * @details Derived exclusively from query calls on one session; building a
 * target issues no job submissions and, on a warmed-up session, no backend
 * requests at all.
 */
struct ExecutionTarget {
  struct OperationQuality {
    double fidelity = 0.0;
    double durationSeconds = 0.0;
  };

  std::vector<std::string> qubitNames;
  std::vector<std::pair<std::string, std::string>> connectivity;
  std::map<std::pair<std::string, std::vector<std::string>>, OperationQuality>
      operations;
  std::string calibrationSetId;

  [[nodiscard]] auto hasEdge(const std::string& a, const std::string& b) const
      -> bool;
};

[[nodiscard]] auto buildTarget(DeviceSession& session)
    -> Result<ExecutionTarget>;

} // namespace qdmi::frontend
