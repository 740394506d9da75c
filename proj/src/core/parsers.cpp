/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/core/parsers.hpp"

#include <unordered_set>

namespace qdmi {

auto toString(const HeraldingMode mode) -> std::string_view {
  return mode == HeraldingMode::Zeros ? "zeros" : "none";
}

auto parseQubitMapping(const std::string_view text) -> Result<QubitMapping> {
  QubitMapping mapping;
  std::unordered_set<std::string> logicalSeen;
  std::unordered_set<std::string> physicalSeen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto entry = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    if (entry.empty()) {
      return Result<QubitMapping>::failure(StatusCode::InvalidArgument,
                                           "empty qubit-mapping entry");
    }
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos || colon == 0 ||
        colon == entry.size() - 1) {
      return Result<QubitMapping>::failure(
          StatusCode::InvalidArgument,
          "qubit-mapping entry must be logical:physical");
    }
    std::string logical{entry.substr(0, colon)};
    std::string physical{entry.substr(colon + 1)};
    if (!logicalSeen.insert(logical).second) {
      return Result<QubitMapping>::failure(StatusCode::InvalidArgument,
                                           "duplicate logical name " +
                                               logical);
    }
    if (!physicalSeen.insert(physical).second) {
      return Result<QubitMapping>::failure(StatusCode::InvalidArgument,
                                           "duplicate physical name " +
                                               physical);
    }
    mapping.entries.emplace_back(std::move(logical), std::move(physical));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return Result<QubitMapping>::success(std::move(mapping));
}

auto formatQubitMapping(const QubitMapping& mapping) -> std::string {
  std::string out;
  for (std::size_t i = 0; i < mapping.entries.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += mapping.entries[i].first;
    out += ':';
    out += mapping.entries[i].second;
  }
  return out;
}

auto validateHeralding(const std::string_view text) -> Result<HeraldingMode> {
  if (text == "none") {
    return Result<HeraldingMode>::success(HeraldingMode::None);
  }
  if (text == "zeros") {
    return Result<HeraldingMode>::success(HeraldingMode::Zeros);
  }
  return Result<HeraldingMode>::failure(
      StatusCode::InvalidArgument,
      "heralding mode must be \"none\" or \"zeros\"");
}

} // namespace qdmi
