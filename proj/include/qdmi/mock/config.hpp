/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "qdmi/core/result.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdmi::mock {

/// One backend entry of the registry, as configured.
struct BackendFixture {
  std::string alias;
  std::string availability = "online"; // "online" or "maintenance"
  bool supportsCalibrationJobs = false;
  std::vector<std::string> qubitNames;
  std::vector<std::pair<std::string, std::string>> connectivity;
  std::vector<std::string> supportedFormats = {"IQMJSON"};
};

/**
 * @brief Service configuration.
 * @details JSON schema: {"seed": int, "tokens": [string], "stage_duration_ms":
 * int, "fail_at_validation": bool, "backends": [...]}; every field optional.
 * Without "backends" the default two-backend registry is used.
 */
struct ServiceConfig {
  std::uint64_t seed = 0;
  std::vector<std::string> tokens = {"test-token"};
  int stageDurationMs = 0;
  bool failAtValidation = false;
  std::optional<std::vector<BackendFixture>> backends;

  [[nodiscard]] static auto fromJsonText(const std::string& text)
      -> Result<ServiceConfig>;
  [[nodiscard]] static auto fromFile(const std::string& path)
      -> Result<ServiceConfig>;
};

} // namespace qdmi::mock
