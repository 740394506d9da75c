/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Parsers for extension-parameter payloads: qubit mappings and
 * heralding modes.
 */

#pragma once

#include "qdmi/core/result.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdmi {

/// Readout-validation option carried as a job execution option.
enum class HeraldingMode : std::uint8_t {
  None,
  Zeros,
};

[[nodiscard]] auto toString(HeraldingMode mode) -> std::string_view;

/**
 * @brief Explicit logical-to-physical qubit name assignment.
 * @details Logical names are unique and physical names are unique; entry
 * order is preserved.
 */
struct QubitMapping {
  std::vector<std::pair<std::string, std::string>> entries;

  auto operator==(const QubitMapping&) const -> bool = default;
};

/**
 * @brief Parses "logical:physical,logical:physical,..." into a mapping.
 *
 * Rejects empty entries, entries without a ':' separator, and duplicate
 * logical or physical names.
 */
[[nodiscard]] auto parseQubitMapping(std::string_view text)
    -> Result<QubitMapping>;

/// Formats a mapping back into the "logical:physical,..." form.
[[nodiscard]] auto formatQubitMapping(const QubitMapping& mapping)
    -> std::string;

/**
 * @brief Validates a heralding-mode string.
 *
 * Only the exact lowercase literals "none" and "zeros" are accepted.
 */
[[nodiscard]] auto validateHeralding(std::string_view text)
    -> Result<HeraldingMode>;

} // namespace qdmi
