/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/mock/service.hpp"

#include "qdmi/mock/rng.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>

namespace qdmi::mock {

namespace {

using nlohmann::json;

constexpr std::string_view kBearerPrefix = "Bearer ";

auto errorBody(const std::string& message) -> json {
  return json{{"error", message}};
}

/// Circuit jobs pass through the full fine-grained pipeline.
constexpr std::array<std::string_view, 13> kCircuitStages = {
    "received",
    "queued",
    "validation_started",
    "validation_ended",
    "fetch_calibration_started",
    "fetch_calibration_ended",
    "compilation_started",
    "compilation_ended",
    "pending_execution",
    "execution_started",
    "execution_ended",
    "post_processing_started",
    "post_processing_ended",
};

constexpr std::array<std::string_view, 3> kCalibrationStages = {
    "received",
    "queued",
    "running",
};

constexpr std::array<std::string_view, 3> kFailingStages = {
    "received",
    "queued",
    "validation_started",
};

auto parseQubitMappingField(const json& node)
    -> Result<std::optional<QubitMapping>> {
  using R = Result<std::optional<QubitMapping>>;
  if (!node.contains("qubit_mapping") || node["qubit_mapping"].is_null()) {
    return R::success(std::nullopt);
  }
  const auto& field = node["qubit_mapping"];
  if (!field.is_array()) {
    return R::failure(StatusCode::InvalidArgument,
                      "qubit_mapping must be an array of pairs");
  }
  QubitMapping mapping;
  for (const auto& entry : field) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string()) {
      return R::failure(StatusCode::InvalidArgument,
                        "qubit_mapping entries must be [logical, physical]");
    }
    mapping.entries.emplace_back(entry[0].get<std::string>(),
                                 entry[1].get<std::string>());
  }
  return R::success(std::move(mapping));
}

auto metricsToJson(const CalibrationSet& set) -> json {
  json qubits = json::object();
  for (const auto& [name, metrics] : set.perQubit) {
    qubits[name] = {{"t1", metrics.t1Seconds}, {"t2", metrics.t2Seconds}};
  }
  json operations = json::array();
  for (const auto& [key, metrics] : set.perOperation) {
    operations.push_back({{"name", key.first},
                          {"sites", key.second},
                          {"fidelity", metrics.fidelity},
                          {"duration", metrics.durationSeconds}});
  }
  return json{{"id", set.id},
              {"created_at", set.createdAt},
              {"qubits", std::move(qubits)},
              {"operations", std::move(operations)}};
}

} // namespace

auto steadyClock() -> ClockFn {
  return [] {
    const auto now = std::chrono::steady_clock::now().time_since_epoch();
    return std::chrono::duration<double>(now).count();
  };
}

auto routeName(const Route route) -> std::string_view {
  switch (route) {
  case Route::Discovery:
    return "discovery";
  case Route::StaticArch:
    return "static_arch";
  case Route::DynamicArch:
    return "dynamic_arch";
  case Route::CalibrationSupport:
    return "calibration_support";
  case Route::CalibrationMetrics:
    return "calibration_metrics";
  case Route::SubmitCircuit:
    return "submit_circuit";
  case Route::JobStatus:
    return "job_status";
  case Route::JobMeasurements:
    return "job_measurements";
  case Route::JobCounts:
    return "job_counts";
  case Route::JobCancel:
    return "job_cancel";
  case Route::SubmitCalibration:
    return "submit_calibration";
  case Route::CalibrationStatus:
    return "calibration_status";
  case Route::CalibrationAbort:
    return "calibration_abort";
  }
  return "unknown";
}

BackendService::BackendService(ServiceConfig config, ClockFn clock)
    : config_(std::move(config)), clock_(std::move(clock)),
      registry_(config_) {}

auto BackendService::track(const Route route) -> std::optional<ApiResponse> {
  const auto name = std::string{routeName(route)};
  ++requestCounts_[name];
  requestLog_.push_back(name);
  const auto it = pendingFailures_.find(route);
  if (it != pendingFailures_.end() && it->second.first > 0) {
    --it->second.first;
    return ApiResponse{it->second.second, errorBody("injected failure")};
  }
  return std::nullopt;
}

auto BackendService::authorize(const std::string& auth)
    -> std::optional<ApiResponse> {
  if (auth.rfind(kBearerPrefix, 0) == 0) {
    const auto token = auth.substr(kBearerPrefix.size());
    if (std::find(config_.tokens.begin(), config_.tokens.end(), token) !=
        config_.tokens.end()) {
      return std::nullopt;
    }
  }
  return ApiResponse{401, errorBody("missing or invalid bearer token")};
}

auto BackendService::currentState(const NativeJob& job) const -> std::string {
  if (job.forcedTerminal.has_value()) {
    return *job.forcedTerminal;
  }
  const auto elapsed = clock_() - job.createdAt;
  double cumulative = 0.0;
  for (const auto& [state, duration] : job.schedule) {
    cumulative += duration;
    if (elapsed < cumulative) {
      return state;
    }
  }
  return job.terminalState;
}

auto BackendService::settleCalibrationJobs() -> void {
  for (auto& job : jobs_) {
    if (job.kind != JobKind::Calibration || job.materialized) {
      continue;
    }
    if (currentState(job) == "ready") {
      auto* backend = registry_.findById(job.backendId);
      job.resultCalibrationSet = registry_.createJitteredSet(*backend);
      job.materialized = true;
    }
  }
}

auto BackendService::findJob(const std::string& jobId, const JobKind kind)
    -> NativeJob* {
  for (auto& job : jobs_) {
    if (job.id == jobId && job.kind == kind) {
      return &job;
    }
  }
  return nullptr;
}

auto BackendService::makeSchedule(const std::size_t stages) const
    -> std::vector<std::pair<std::string, double>> {
  const auto duration = static_cast<double>(config_.stageDurationMs) / 1000.0;
  std::vector<std::pair<std::string, double>> schedule;
  schedule.reserve(stages);
  const auto* names = kCircuitStages.data();
  for (std::size_t i = 0; i < stages; ++i) {
    schedule.emplace_back(std::string{names[i]}, duration);
  }
  return schedule;
}

auto BackendService::listBackends(const std::string& auth) -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::Discovery)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  json list = json::array();
  for (const auto& backend : registry_.backends()) {
    list.push_back({{"id", backend.id},
                    {"alias", backend.alias},
                    {"availability", backend.availability}});
  }
  return {200, json{{"quantum_computers", std::move(list)}}};
}

auto BackendService::staticArchitecture(const std::string& auth,
                                        const std::string& backendId)
    -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::StaticArch)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  settleCalibrationJobs();
  auto* backend = registry_.findById(backendId);
  if (backend == nullptr) {
    return {404, errorBody("unknown backend " + backendId)};
  }
  json connectivity = json::array();
  for (const auto& edge : backend->connectivity) {
    connectivity.push_back({edge.first, edge.second});
  }
  return {200, json{{"id", backend->id},
                    {"alias", backend->alias},
                    {"qubit_names", backend->qubitNames},
                    {"connectivity", std::move(connectivity)},
                    {"operations", {"prx", "cz", "measure"}},
                    {"supported_formats", backend->supportedFormats},
                    {"supports_calibration_jobs",
                     backend->supportsCalibrationJobs},
                    {"default_calibration_set_id",
                     backend->activeCalibrationSet}}};
}

auto BackendService::dynamicArchitecture(const std::string& auth,
                                         const std::string& backendId,
                                         const std::string& setId)
    -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::DynamicArch)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  settleCalibrationJobs();
  auto* backend = registry_.findById(backendId);
  if (backend == nullptr) {
    return {404, errorBody("unknown backend " + backendId)};
  }
  const auto* set = registry_.calibrationSet(setId);
  if (set == nullptr || set->backendId != backend->id) {
    return {404, errorBody("unknown calibration set " + setId)};
  }
  json sites = json::array();
  for (const auto& qubit : backend->qubitNames) {
    sites.push_back(
        {{"name", qubit}, {"available", set->perQubit.contains(qubit)}});
  }
  json operations = json::array();
  for (const auto& [key, metrics] : set->perOperation) {
    operations.push_back(
        {{"name", key.first}, {"sites", key.second}, {"available", true}});
  }
  return {200, json{{"calibration_set_id", set->id},
                    {"sites", std::move(sites)},
                    {"operations", std::move(operations)}}};
}

auto BackendService::calibrationSupport(const std::string& auth,
                                        const std::string& backendId)
    -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::CalibrationSupport)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  auto* backend = registry_.findById(backendId);
  if (backend == nullptr) {
    return {404, errorBody("unknown backend " + backendId)};
  }
  return {200, json{{"supports_calibration_jobs",
                     backend->supportsCalibrationJobs}}};
}

auto BackendService::calibrationMetrics(const std::string& auth,
                                        const std::string& setId)
    -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::CalibrationMetrics)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  settleCalibrationJobs();
  const auto* set = registry_.calibrationSet(setId);
  if (set == nullptr) {
    return {404, errorBody("unknown calibration set " + setId)};
  }
  return {200, metricsToJson(*set)};
}

auto BackendService::submitCircuitJob(const std::string& auth,
                                      const std::string& backendId,
                                      const std::string& body) -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::SubmitCircuit)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  auto* backend = registry_.findById(backendId);
  if (backend == nullptr) {
    return {404, errorBody("unknown backend " + backendId)};
  }
  if (backend->availability == "maintenance") {
    return {409, errorBody("backend is in maintenance")};
  }

  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return {400, errorBody(e.what())};
  }
  if (!request.contains("format") || !request["format"].is_string()) {
    return {400, errorBody("request requires a string \"format\"")};
  }
  const auto formatText = request["format"].get<std::string>();
  const auto format = programFormatFromString(formatText);
  if (!format.has_value()) {
    return {400, errorBody("unknown program format " + formatText)};
  }
  if (*format == ProgramFormat::Calibration) {
    return {422, errorBody("calibration jobs use the calibration-jobs path")};
  }
  const bool executable = *format == ProgramFormat::IqmJson &&
                          backend->supportsFormat(formatText);
  if (!executable && !(config_.failAtValidation &&
                       *format == ProgramFormat::QirBaseString)) {
    return {422,
            errorBody("program format " + formatText + " is not supported")};
  }

  if (!request.contains("shots") || !request["shots"].is_number_integer()) {
    return {400, errorBody("request requires an integer \"shots\"")};
  }
  const auto shots = request["shots"].get<std::int64_t>();
  if (shots < 1) {
    return {400, errorBody("shots must be at least 1")};
  }
  const auto heralding =
      validateHeralding(request.value("heralding_mode", std::string{"none"}));
  if (!heralding.ok()) {
    return {400, errorBody(heralding.message())};
  }
  auto mapping = parseQubitMappingField(request);
  if (!mapping.ok()) {
    return {400, errorBody(mapping.message())};
  }
  if (!request.contains("program") || !request["program"].is_string()) {
    return {400, errorBody("request requires a string \"program\"")};
  }

  NativeJob job;
  job.kind = JobKind::Circuit;
  job.backendId = backend->id;
  job.createdAt = clock_();

  if (!executable) {
    // Accepted now, failed asynchronously during validation.
    job.schedule.clear();
    const auto duration =
        static_cast<double>(config_.stageDurationMs) / 1000.0;
    for (const auto stage : kFailingStages) {
      job.schedule.emplace_back(std::string{stage}, duration);
    }
    job.terminalState = "failed";
    job.errorMessage =
        "program format " + formatText + " failed validation";
  } else {
    auto circuit = parseCircuit(request["program"].get<std::string>());
    if (!circuit.ok()) {
      return {400, errorBody(circuit.message())};
    }
    auto prepared = mapping.value().has_value()
                        ? applyQubitMapping(std::move(circuit.value()),
                                            *mapping.value())
                        : std::move(circuit.value());
    if (const auto issue = validateCircuit(prepared, backend->qubitNames,
                                           backend->connectivity)) {
      return {400, errorBody(*issue)};
    }
    job.schedule = makeSchedule(kCircuitStages.size());
    job.artifacts =
        simulateCircuit(prepared, shots, mixSeed(config_.seed, jobCounter_));
  }

  char idBuf[16];
  std::snprintf(idBuf, sizeof(idBuf), "cj-%06llu",
                static_cast<unsigned long long>(++jobCounter_));
  job.id = idBuf;
  jobs_.push_back(std::move(job));
  return {201, json{{"id", jobs_.back().id}}};
}

auto BackendService::jobStatus(const std::string& auth,
                               const std::string& jobId) -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::JobStatus)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  auto* job = findJob(jobId, JobKind::Circuit);
  if (job == nullptr) {
    return {404, errorBody("unknown job " + jobId)};
  }
  const auto state = currentState(*job);
  json response{{"id", job->id}, {"kind", "circuit"}, {"native_state", state}};
  if (state == "failed" && !job->errorMessage.empty()) {
    response["error_message"] = job->errorMessage;
  }
  return {200, std::move(response)};
}

auto BackendService::jobMeasurements(const std::string& auth,
                                     const std::string& jobId) -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::JobMeasurements)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  auto* job = findJob(jobId, JobKind::Circuit);
  if (job == nullptr) {
    return {404, errorBody("unknown job " + jobId)};
  }
  if (currentState(*job) != "ready") {
    return {409, errorBody("job is not ready")};
  }
  json measurements = json::object();
  for (const auto& [key, bits] : job->artifacts.perKeyBits) {
    measurements[key] = bits;
  }
  return {200, json{{"shots", job->artifacts.shots},
                    {"keys", job->artifacts.keys},
                    {"measurements", std::move(measurements)}}};
}

auto BackendService::jobCounts(const std::string& auth,
                               const std::string& jobId) -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::JobCounts)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  auto* job = findJob(jobId, JobKind::Circuit);
  if (job == nullptr) {
    return {404, errorBody("unknown job " + jobId)};
  }
  if (currentState(*job) != "ready") {
    return {409, errorBody("job is not ready")};
  }
  json counts = json::object();
  for (const auto& [bits, count] : job->artifacts.counts) {
    counts[bits] = count;
  }
  return {200,
          json{{"shots", job->artifacts.shots}, {"counts", std::move(counts)}}};
}

auto BackendService::cancelJob(const std::string& auth,
                               const std::string& jobId) -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::JobCancel)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  auto* job = findJob(jobId, JobKind::Circuit);
  if (job == nullptr) {
    return {404, errorBody("unknown job " + jobId)};
  }
  const auto state = currentState(*job);
  if (state == "ready" || state == "failed" || state == "aborted") {
    return {409, errorBody("job is already terminal: " + state)};
  }
  job->forcedTerminal = "aborted";
  return {200, json{{"id", job->id}, {"native_state", "aborted"}}};
}

auto BackendService::submitCalibrationJob(const std::string& auth,
                                          const std::string& backendId)
    -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::SubmitCalibration)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  auto* backend = registry_.findById(backendId);
  if (backend == nullptr) {
    return {404, errorBody("unknown backend " + backendId)};
  }
  if (!backend->supportsCalibrationJobs) {
    return {422, errorBody("backend does not support calibration jobs")};
  }
  NativeJob job;
  job.kind = JobKind::Calibration;
  job.backendId = backend->id;
  job.createdAt = clock_();
  const auto duration = static_cast<double>(config_.stageDurationMs) / 1000.0;
  for (const auto stage : kCalibrationStages) {
    job.schedule.emplace_back(std::string{stage}, duration);
  }
  char idBuf[16];
  std::snprintf(idBuf, sizeof(idBuf), "cal-%06llu",
                static_cast<unsigned long long>(++jobCounter_));
  job.id = idBuf;
  jobs_.push_back(std::move(job));
  return {201, json{{"id", jobs_.back().id}}};
}

auto BackendService::calibrationJobStatus(const std::string& auth,
                                          const std::string& jobId)
    -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::CalibrationStatus)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  settleCalibrationJobs();
  auto* job = findJob(jobId, JobKind::Calibration);
  if (job == nullptr) {
    return {404, errorBody("unknown calibration job " + jobId)};
  }
  const auto state = currentState(*job);
  json response{{"id", job->id},
                {"kind", "calibration"},
                {"native_state", state}};
  if (job->materialized) {
    response["result_calibration_set"] = job->resultCalibrationSet;
  }
  return {200, std::move(response)};
}

auto BackendService::abortCalibrationJob(const std::string& auth,
                                         const std::string& jobId)
    -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  if (auto injected = track(Route::CalibrationAbort)) {
    return *injected;
  }
  if (auto denied = authorize(auth)) {
    return *denied;
  }
  settleCalibrationJobs();
  auto* job = findJob(jobId, JobKind::Calibration);
  if (job == nullptr) {
    return {404, errorBody("unknown calibration job " + jobId)};
  }
  const auto state = currentState(*job);
  if (state == "ready" || state == "failed" || state == "aborted") {
    return {409, errorBody("job is already terminal: " + state)};
  }
  job->forcedTerminal = "aborted";
  return {200, json{{"id", job->id}, {"native_state", "aborted"}}};
}

auto BackendService::requestCounts() -> ApiResponse {
  const std::scoped_lock lock(mutex_);
  json counts = json::object();
  for (const auto& [route, count] : requestCounts_) {
    counts[route] = count;
  }
  return {200, json{{"total", requestLog_.size()},
                    {"counts", std::move(counts)},
                    {"sequence", requestLog_}}};
}

auto BackendService::injectFailure(const Route route, const int count,
                                   const int httpStatus) -> void {
  const std::scoped_lock lock(mutex_);
  pendingFailures_[route] = {count, httpStatus};
}

auto BackendService::resetRequestCounts() -> void {
  const std::scoped_lock lock(mutex_);
  requestCounts_.clear();
  requestLog_.clear();
}

} // namespace qdmi::mock
