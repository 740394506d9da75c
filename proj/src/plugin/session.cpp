/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/plugin/session.hpp"

#include "qdmi/core/property_value.hpp"
#include "session_state.hpp"

#include <algorithm>
#include <chrono>
#include <nlohmann/json.hpp>
#include <thread>

namespace qdmi::plugin {

namespace detail {

using nlohmann::json;

auto errorFromBody(const HttpResponse& response, const std::string& fallback)
    -> std::string {
  try {
    const auto body = json::parse(response.body);
    if (body.is_object() && body.contains("error")) {
      return body["error"].get<std::string>();
    }
  } catch (const json::exception&) {
  }
  return fallback;
}

namespace {

auto parseStaticArchitecture(const std::string& body, StaticCache& cache)
    -> bool {
  try {
    const auto node = json::parse(body);
    cache.qubitNames = node.at("qubit_names").get<std::vector<std::string>>();
    cache.connectivity.clear();
    for (const auto& edge : node.at("connectivity")) {
      cache.connectivity.emplace_back(edge.at(0).get<std::string>(),
                                      edge.at(1).get<std::string>());
    }
    cache.operations = node.at("operations").get<std::vector<std::string>>();
    cache.supportedFormats =
        node.at("supported_formats").get<std::vector<std::string>>();
    cache.supportsCalibrationJobs =
        node.at("supports_calibration_jobs").get<bool>();
    cache.defaultCalibrationSetId =
        node.at("default_calibration_set_id").get<std::string>();
    return true;
  } catch (const json::exception&) {
    return false;
  }
}

auto parseDynamicArchitecture(const std::string& body, DynamicCache& cache)
    -> bool {
  try {
    const auto node = json::parse(body);
    cache.calibrationSetId = node.at("calibration_set_id").get<std::string>();
    cache.availableSites.clear();
    for (const auto& site : node.at("sites")) {
      if (site.at("available").get<bool>()) {
        cache.availableSites.insert(site.at("name").get<std::string>());
      }
    }
    cache.availableOperations.clear();
    for (const auto& operation : node.at("operations")) {
      if (operation.at("available").get<bool>()) {
        cache.availableOperations.insert(
            {operation.at("name").get<std::string>(),
             operation.at("sites").get<std::vector<std::string>>()});
      }
    }
    return true;
  } catch (const json::exception&) {
    return false;
  }
}

auto parseMetrics(const std::string& body, MetricsCache& cache) -> bool {
  try {
    const auto node = json::parse(body);
    cache.id = node.at("id").get<std::string>();
    cache.perQubit.clear();
    for (const auto& [name, metrics] : node.at("qubits").items()) {
      cache.perQubit[name] = {metrics.at("t1").get<double>(),
                              metrics.at("t2").get<double>()};
    }
    cache.perOperation.clear();
    for (const auto& operation : node.at("operations")) {
      cache.perOperation[{operation.at("name").get<std::string>(),
                          operation.at("sites")
                              .get<std::vector<std::string>>()}] = {
          operation.at("fidelity").get<double>(),
          operation.at("duration").get<double>()};
    }
    return true;
  } catch (const json::exception&) {
    return false;
  }
}

} // namespace

auto SessionState::monotonicNow() const -> double {
  if (config.now) {
    return config.now();
  }
  const auto now = std::chrono::steady_clock::now().time_since_epoch();
  return std::chrono::duration<double>(now).count();
}

auto SessionState::sleepFor(const double seconds) const -> void {
  if (config.sleepFor) {
    config.sleepFor(seconds);
    return;
  }
  std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
}

auto refreshCaches(SessionState& state, const std::string& calibrationSetId)
    -> StatusCode {
  const auto dynamicResponse = state.transport->get(
      state.routes.dynamicArch(state.backend.id, calibrationSetId),
      state.token.token);
  if (!dynamicResponse.ok()) {
    return state.fail(statusFromHttp(dynamicResponse),
                      errorFromBody(dynamicResponse,
                                    "dynamic-architecture request failed"));
  }
  const auto metricsResponse = state.transport->get(
      state.routes.calibrationMetrics(calibrationSetId), state.token.token);
  if (!metricsResponse.ok()) {
    return state.fail(statusFromHttp(metricsResponse),
                      errorFromBody(metricsResponse,
                                    "calibration-metrics request failed"));
  }
  DynamicCache dynamicCache;
  MetricsCache metricsCache;
  if (!parseDynamicArchitecture(dynamicResponse.body, dynamicCache) ||
      !parseMetrics(metricsResponse.body, metricsCache)) {
    return state.fail(StatusCode::Fatal, "malformed calibration responses");
  }
  state.dynamicCache = std::move(dynamicCache);
  state.metricsCache = std::move(metricsCache);
  state.activeCalibrationSet = calibrationSetId;
  return StatusCode::Success;
}

} // namespace detail

namespace {

using detail::SessionState;
using nlohmann::json;
using Phase = SessionState::Phase;

auto lookup(const std::map<SessionParameterKey, std::string>& parameters,
            const SessionParameterKey key, const Environment& environment,
            const char* envName) -> std::string {
  if (const auto it = parameters.find(key);
      it != parameters.end() && !it->second.empty()) {
    return it->second;
  }
  if (const auto it = environment.find(envName);
      it != environment.end() && !it->second.empty()) {
    return it->second;
  }
  return {};
}

auto siteIndices(const std::vector<std::string>& qubitNames,
                 const std::vector<std::string>& sites)
    -> std::optional<std::vector<std::uint32_t>> {
  std::vector<std::uint32_t> indices;
  for (const auto& site : sites) {
    const auto it = std::find(qubitNames.begin(), qubitNames.end(), site);
    if (it == qubitNames.end()) {
      return std::nullopt;
    }
    indices.push_back(
        static_cast<std::uint32_t>(std::distance(qubitNames.begin(), it)));
  }
  return indices;
}

} // namespace

Session::Session(PluginConfig config)
    : state_(std::make_shared<SessionState>()) {
  state_->config = std::move(config);
}

Session::~Session() = default;

auto Session::setParameter(const SessionParameterKey key,
                           const std::string_view value) -> StatusCode {
  auto& s = *state_;
  if (s.phase != Phase::Configured) {
    return s.fail(StatusCode::InvalidArgument,
                  "session parameters are frozen after initialization");
  }
  if (key == SessionParameterKey::BaseUrl && value.empty()) {
    return s.fail(StatusCode::InvalidArgument, "BASEURL must not be empty");
  }
  s.parameters[key] = std::string{value};
  return StatusCode::Success;
}

auto Session::init() -> StatusCode {
  auto& s = *state_;
  if (s.phase != Phase::Configured) {
    return s.fail(StatusCode::InvalidArgument,
                  "session is already initialized or freed");
  }
  const auto environment = s.config.environment.has_value()
                               ? *s.config.environment
                               : processEnvironment();
  const auto baseUrl = lookup(s.parameters, SessionParameterKey::BaseUrl,
                              environment, "QDMI_BASE_URL");
  if (baseUrl.empty()) {
    return s.fail(StatusCode::InvalidArgument, "BASEURL is not set");
  }
  auto token = resolveToken(s.parameters, environment);
  if (!token.ok()) {
    return s.fail(token.status(), token.message());
  }
  s.token = std::move(token.value());
  s.transport.emplace(baseUrl);

  // 1/5 discovery
  const auto discovery =
      s.transport->get(s.routes.discovery(), s.token.token);
  if (!discovery.ok()) {
    return s.fail(statusFromHttp(discovery),
                  detail::errorFromBody(discovery, "discovery failed"));
  }
  s.discovered.clear();
  try {
    const auto node = json::parse(discovery.body);
    for (const auto& entry : node.at("quantum_computers")) {
      s.discovered.push_back({entry.at("id").get<std::string>(),
                              entry.at("alias").get<std::string>(),
                              entry.at("availability").get<std::string>()});
    }
  } catch (const json::exception& e) {
    return s.fail(StatusCode::Fatal,
                  std::string{"malformed discovery response: "} + e.what());
  }

  // Target resolution: ID selector, alias selector, or first available.
  const auto idSelector = lookup(s.parameters, SessionParameterKey::Custom1,
                                 environment, "QDMI_QC_ID");
  const auto aliasSelector = lookup(
      s.parameters, SessionParameterKey::Custom2, environment, "QDMI_QC_ALIAS");
  const BackendSummary* selected = nullptr;
  if (!idSelector.empty() && !aliasSelector.empty()) {
    const BackendSummary* byId = nullptr;
    const BackendSummary* byAlias = nullptr;
    for (const auto& candidate : s.discovered) {
      if (candidate.id == idSelector) {
        byId = &candidate;
      }
      if (candidate.alias == aliasSelector) {
        byAlias = &candidate;
      }
    }
    if (byId == nullptr || byAlias == nullptr) {
      return s.fail(StatusCode::NotFound, "backend selector matched nothing");
    }
    if (byId != byAlias) {
      return s.fail(StatusCode::InvalidArgument,
                    "ID and alias selectors designate different backends");
    }
    selected = byId;
  } else if (!idSelector.empty()) {
    for (const auto& candidate : s.discovered) {
      if (candidate.id == idSelector) {
        selected = &candidate;
      }
    }
  } else if (!aliasSelector.empty()) {
    for (const auto& candidate : s.discovered) {
      if (candidate.alias == aliasSelector) {
        selected = &candidate;
      }
    }
  } else if (!s.discovered.empty()) {
    selected = &s.discovered.front();
  }
  if (selected == nullptr) {
    return s.fail(StatusCode::NotFound, "no backend matches the selector");
  }
  s.backend = *selected;

  // 2/5 static architecture
  const auto staticResponse = s.transport->get(
      s.routes.staticArch(s.backend.id), s.token.token);
  if (!staticResponse.ok()) {
    return s.fail(statusFromHttp(staticResponse),
                  detail::errorFromBody(staticResponse,
                                        "static-architecture request failed"));
  }
  if (!detail::parseStaticArchitecture(staticResponse.body, s.staticCache)) {
    return s.fail(StatusCode::Fatal,
                  "malformed static-architecture response");
  }

  // 3/5 dynamic architecture, 4/5 calibration metrics
  const auto& defaultSet = s.staticCache.defaultCalibrationSetId;
  if (const auto refreshed = detail::refreshCaches(s, defaultSet);
      refreshed != StatusCode::Success) {
    return refreshed;
  }

  // 5/5 calibration-job support probe
  const auto probe = s.transport->get(
      s.routes.calibrationSupport(s.backend.id), s.token.token);
  if (!probe.ok()) {
    return s.fail(statusFromHttp(probe),
                  detail::errorFromBody(probe,
                                        "calibration-support probe failed"));
  }
  try {
    s.calibrationSupported = json::parse(probe.body)
                                 .at("supports_calibration_jobs")
                                 .get<bool>();
  } catch (const json::exception&) {
    return s.fail(StatusCode::Fatal,
                  "malformed calibration-support response");
  }

  s.phase = Phase::Initialized;
  return StatusCode::Success;
}

auto Session::queryDeviceProperty(const DeviceProperty key,
                                  const std::size_t capacity,
                                  char* destination) -> SizedRead {
  const auto& s = *state_;
  if (!s.initialized()) {
    return {0, StatusCode::InvalidArgument};
  }
  PropertyValue value;
  switch (key) {
  case DeviceProperty::Name:
    value = s.backend.alias;
    break;
  case DeviceProperty::Version:
    value = std::string{kPluginVersion};
    break;
  case DeviceProperty::QubitCount:
    value = static_cast<std::int64_t>(s.staticCache.qubitNames.size());
    break;
  case DeviceProperty::Sites:
    value = s.staticCache.qubitNames;
    break;
  case DeviceProperty::CouplingMap: {
    std::vector<SitePair> pairs;
    for (const auto& edge : s.staticCache.connectivity) {
      const auto indices = siteIndices(s.staticCache.qubitNames,
                                       {edge.first, edge.second});
      if (!indices.has_value()) {
        return {0, StatusCode::Fatal};
      }
      pairs.emplace_back((*indices)[0], (*indices)[1]);
    }
    value = std::move(pairs);
    break;
  }
  case DeviceProperty::Operations:
    value = s.staticCache.operations;
    break;
  case DeviceProperty::Status:
    value = s.backend.availability;
    break;
  }
  return sizedRead(value, capacity, destination);
}

auto Session::querySiteProperty(const std::string_view site,
                                const SiteProperty key,
                                const std::size_t capacity, char* destination)
    -> SizedRead {
  const auto& s = *state_;
  if (!s.initialized()) {
    return {0, StatusCode::InvalidArgument};
  }
  const auto& names = s.staticCache.qubitNames;
  const auto it = std::find(names.begin(), names.end(), site);
  if (it == names.end()) {
    return {0, StatusCode::NotFound};
  }
  PropertyValue value;
  switch (key) {
  case SiteProperty::Name:
    value = std::string{site};
    break;
  case SiteProperty::Index:
    value = static_cast<std::int64_t>(std::distance(names.begin(), it));
    break;
  case SiteProperty::T1:
  case SiteProperty::T2: {
    const auto metrics = s.metricsCache.perQubit.find(std::string{site});
    if (metrics == s.metricsCache.perQubit.end()) {
      return {0, StatusCode::NotFound};
    }
    value = key == SiteProperty::T1 ? metrics->second.t1Seconds
                                    : metrics->second.t2Seconds;
    break;
  }
  }
  return sizedRead(value, capacity, destination);
}

auto Session::queryOperationProperty(const std::string_view operation,
                                     const std::vector<std::string>& sites,
                                     const OperationProperty key,
                                     const std::size_t capacity,
                                     char* destination) -> SizedRead {
  const auto& s = *state_;
  if (!s.initialized()) {
    return {0, StatusCode::InvalidArgument};
  }
  const detail::OperationKey lookupKey{std::string{operation}, sites};
  PropertyValue value;
  switch (key) {
  case OperationProperty::Name:
  case OperationProperty::SitesSupported: {
    std::vector<std::string> singleSites;
    std::vector<SitePair> pairSites;
    for (const auto& [opKey, metrics] : s.metricsCache.perOperation) {
      if (opKey.first != operation) {
        continue;
      }
      if (opKey.second.size() == 1) {
        singleSites.push_back(opKey.second.front());
      } else if (opKey.second.size() == 2) {
        const auto indices =
            siteIndices(s.staticCache.qubitNames, opKey.second);
        if (indices.has_value()) {
          pairSites.emplace_back((*indices)[0], (*indices)[1]);
        }
      }
    }
    if (singleSites.empty() && pairSites.empty()) {
      return {0, StatusCode::NotFound};
    }
    if (key == OperationProperty::Name) {
      value = std::string{operation};
    } else if (!pairSites.empty()) {
      value = std::move(pairSites);
    } else {
      value = std::move(singleSites);
    }
    break;
  }
  case OperationProperty::Fidelity:
  case OperationProperty::Duration: {
    const auto metrics = s.metricsCache.perOperation.find(lookupKey);
    if (metrics == s.metricsCache.perOperation.end()) {
      return {0, StatusCode::NotFound};
    }
    value = key == OperationProperty::Fidelity
                ? metrics->second.fidelity
                : metrics->second.durationSeconds;
    break;
  }
  }
  return sizedRead(value, capacity, destination);
}

auto Session::activeCalibrationSet() const -> std::string {
  return state_->activeCalibrationSet;
}

auto Session::createJob() -> Result<std::unique_ptr<DeviceJob>> {
  using R = Result<std::unique_ptr<DeviceJob>>;
  if (!state_->initialized()) {
    return R::failure(StatusCode::InvalidArgument,
                      "session is not initialized");
  }
  return R::success(std::make_unique<Job>(state_, JobKind::Circuit));
}

auto Session::attachJob(std::string remoteId, const JobKind kind)
    -> Result<std::unique_ptr<Job>> {
  using R = Result<std::unique_ptr<Job>>;
  if (!state_->initialized()) {
    return R::failure(StatusCode::InvalidArgument,
                      "session is not initialized");
  }
  if (remoteId.empty()) {
    return R::failure(StatusCode::InvalidArgument, "job id must not be empty");
  }
  return R::success(
      std::make_unique<Job>(state_, kind, std::move(remoteId)));
}

auto Session::refreshCalibration(const std::string& calibrationSetId)
    -> StatusCode {
  if (!state_->initialized()) {
    return state_->fail(StatusCode::InvalidArgument,
                        "session is not initialized");
  }
  return detail::refreshCaches(*state_, calibrationSetId);
}

auto Session::free() -> StatusCode {
  auto& s = *state_;
  if (s.phase == Phase::Finalized) {
    return StatusCode::Success; // double free is a no-op
  }
  s.phase = Phase::Finalized;
  s.transport.reset();
  return StatusCode::Success;
}

auto Session::initialized() const -> bool { return state_->initialized(); }

auto Session::backendId() const -> std::string { return state_->backend.id; }

auto Session::backendAlias() const -> std::string {
  return state_->backend.alias;
}

auto Session::calibrationSupported() const -> bool {
  return state_->calibrationSupported;
}

auto Session::discoveredBackends() const
    -> const std::vector<BackendSummary>& {
  return state_->discovered;
}

auto Session::lastError() const -> std::string { return state_->lastError; }

auto Device::createSession(PluginConfig config) const
    -> std::unique_ptr<Session> {
  return std::make_unique<Session>(std::move(config));
}

} // namespace qdmi::plugin
