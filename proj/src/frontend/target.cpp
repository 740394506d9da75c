/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/frontend/target.hpp"

#include <algorithm>
#include <charconv>

namespace qdmi::frontend {

namespace {

auto splitList(const std::string& text, const char separator)
    -> std::vector<std::string> {
  std::vector<std::string> parts;
  if (text.empty()) {
    return parts;
  }
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(separator, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) {
      break;
    }
    pos = next + 1;
  }
  return parts;
}

/// Parses the "a-b;c-d" pair-list encoding into index pairs.
auto parsePairs(const std::string& text)
    -> std::vector<std::pair<std::size_t, std::size_t>> {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& entry : splitList(text, ';')) {
    const auto dash = entry.find('-');
    if (dash == std::string::npos) {
      continue;
    }
    pairs.emplace_back(std::stoul(entry.substr(0, dash)),
                       std::stoul(entry.substr(dash + 1)));
  }
  return pairs;
}

auto looksLikePairList(const std::string& text) -> bool {
  return text.find('-') != std::string::npos;
}

} // namespace

auto ExecutionTarget::hasEdge(const std::string& a, const std::string& b) const
    -> bool {
  return std::any_of(connectivity.begin(), connectivity.end(),
                     [&](const auto& edge) {
                       return (edge.first == a && edge.second == b) ||
                              (edge.first == b && edge.second == a);
                     });
}

auto buildTarget(DeviceSession& session) -> Result<ExecutionTarget> {
  using R = Result<ExecutionTarget>;
  ExecutionTarget target;

  auto sites = queryDeviceString(session, DeviceProperty::Sites);
  if (!sites.ok()) {
    return R::failure(sites.status(), "device sites query failed");
  }
  target.qubitNames = splitList(sites.value(), ',');

  auto coupling = queryDeviceString(session, DeviceProperty::CouplingMap);
  if (!coupling.ok()) {
    return R::failure(coupling.status(), "coupling-map query failed");
  }
  for (const auto& [a, b] : parsePairs(coupling.value())) {
    if (a >= target.qubitNames.size() || b >= target.qubitNames.size()) {
      return R::failure(StatusCode::Protocol, "coupling map out of range");
    }
    target.connectivity.emplace_back(target.qubitNames[a],
                                     target.qubitNames[b]);
  }

  auto operations = queryDeviceString(session, DeviceProperty::Operations);
  if (!operations.ok()) {
    return R::failure(operations.status(), "operations query failed");
  }

  for (const auto& operation : splitList(operations.value(), ',')) {
    auto supported = queryOperationString(session, operation, {},
                                          OperationProperty::SitesSupported);
    if (!supported.ok()) {
      return R::failure(supported.status(),
                        "sites-supported query failed for " + operation);
    }
    std::vector<std::vector<std::string>> tuples;
    if (looksLikePairList(supported.value())) {
      for (const auto& [a, b] : parsePairs(supported.value())) {
        tuples.push_back({target.qubitNames.at(a), target.qubitNames.at(b)});
      }
    } else {
      for (const auto& site : splitList(supported.value(), ',')) {
        tuples.push_back({site});
      }
    }
    for (const auto& tuple : tuples) {
      auto fidelity = queryOperationString(session, operation, tuple,
                                           OperationProperty::Fidelity);
      auto duration = queryOperationString(session, operation, tuple,
                                           OperationProperty::Duration);
      if (!fidelity.ok() || !duration.ok()) {
        return R::failure(StatusCode::Protocol,
                          "quality metrics missing for " + operation);
      }
      target.operations[{operation, tuple}] = {std::stod(fidelity.value()),
                                               std::stod(duration.value())};
    }
  }

  target.calibrationSetId = session.activeCalibrationSet();
  return R::success(std::move(target));
}

} // namespace qdmi::frontend
