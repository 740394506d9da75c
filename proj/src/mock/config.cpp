/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/mock/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qdmi::mock {

namespace {

using nlohmann::json;

auto parseFixture(const json& node) -> Result<BackendFixture> {
  using R = Result<BackendFixture>;
  BackendFixture fixture;
  if (!node.contains("alias") || !node["alias"].is_string()) {
    return R::failure(StatusCode::InvalidArgument,
                      "backend fixture requires a string \"alias\"");
  }
  fixture.alias = node["alias"].get<std::string>();
  if (node.contains("availability")) {
    fixture.availability = node["availability"].get<std::string>();
    if (fixture.availability != "online" &&
        fixture.availability != "maintenance") {
      return R::failure(StatusCode::InvalidArgument,
                        "availability must be online or maintenance");
    }
  }
  if (node.contains("supports_calibration_jobs")) {
    fixture.supportsCalibrationJobs =
        node["supports_calibration_jobs"].get<bool>();
  }
  if (node.contains("qubit_names")) {
    fixture.qubitNames =
        node["qubit_names"].get<std::vector<std::string>>();
  }
  if (node.contains("connectivity")) {
    for (const auto& edge : node["connectivity"]) {
      if (!edge.is_array() || edge.size() != 2) {
        return R::failure(StatusCode::InvalidArgument,
                          "connectivity entries must be two-element arrays");
      }
      fixture.connectivity.emplace_back(edge[0].get<std::string>(),
                                        edge[1].get<std::string>());
    }
  }
  if (node.contains("supported_formats")) {
    fixture.supportedFormats =
        node["supported_formats"].get<std::vector<std::string>>();
  }
  return R::success(std::move(fixture));
}

} // namespace

auto ServiceConfig::fromJsonText(const std::string& text)
    -> Result<ServiceConfig> {
  using R = Result<ServiceConfig>;
  json node;
  try {
    node = json::parse(text);
  } catch (const json::parse_error& e) {
    return R::failure(StatusCode::InvalidArgument, e.what());
  }
  try {
    ServiceConfig config;
    if (node.contains("seed")) {
      config.seed = node["seed"].get<std::uint64_t>();
    }
    if (node.contains("tokens")) {
      config.tokens = node["tokens"].get<std::vector<std::string>>();
    }
    if (node.contains("stage_duration_ms")) {
      config.stageDurationMs = node["stage_duration_ms"].get<int>();
    }
    if (node.contains("fail_at_validation")) {
      config.failAtValidation = node["fail_at_validation"].get<bool>();
    }
    if (node.contains("backends")) {
      std::vector<BackendFixture> fixtures;
      for (const auto& entry : node["backends"]) {
        auto fixture = parseFixture(entry);
        if (!fixture.ok()) {
          return R::failure(fixture.status(), fixture.message());
        }
        fixtures.push_back(std::move(fixture.value()));
      }
      config.backends = std::move(fixtures);
    }
    return R::success(std::move(config));
  } catch (const json::exception& e) {
    return R::failure(StatusCode::InvalidArgument, e.what());
  }
}

auto ServiceConfig::fromFile(const std::string& path)
    -> Result<ServiceConfig> {
  std::ifstream in(path);
  if (!in.is_open()) {
    return Result<ServiceConfig>::failure(StatusCode::NotFound,
                                          "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return fromJsonText(buffer.str());
}

} // namespace qdmi::mock
