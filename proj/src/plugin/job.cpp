/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/core/property_value.hpp"
#include "qdmi/plugin/session.hpp"
#include "qdmi/plugin/status_map.hpp"
#include "session_state.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

namespace qdmi::plugin {

namespace {

using detail::SessionState;
using nlohmann::json;
using Phase = SessionState::Phase;

auto parseShotsNum(const std::string& text) -> std::optional<std::int64_t> {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](const char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  try {
    const auto value = std::stoll(text);
    return value >= 1 ? std::optional{value} : std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

} // namespace

Job::Job(std::shared_ptr<detail::SessionState> session, const JobKind kind)
    : session_(std::move(session)), kind_(kind) {}

Job::Job(std::shared_ptr<detail::SessionState> session, const JobKind kind,
         std::string remoteId)
    : session_(std::move(session)), kind_(kind),
      remoteId_(std::move(remoteId)), submitted_(true) {}

auto Job::sessionUsable() const -> bool { return session_->initialized(); }

auto Job::setParameter(const JobParameterKey key, const std::string_view value)
    -> StatusCode {
  if (!sessionUsable()) {
    lastError_ = "session is not initialized";
    return StatusCode::InvalidArgument;
  }
  if (submitted_) {
    lastError_ = "job parameters are frozen after submission";
    return StatusCode::InvalidArgument;
  }
  switch (key) {
  case JobParameterKey::ProgramFormat: {
    const auto format = programFormatFromString(value);
    if (!format.has_value()) {
      lastError_ = "unknown program format " + std::string{value};
      return StatusCode::InvalidArgument;
    }
    if (*format == ProgramFormat::Calibration &&
        !session_->calibrationSupported) {
      lastError_ = "calibration jobs are not supported by this backend";
      return StatusCode::NotSupported;
    }
    kind_ = *format == ProgramFormat::Calibration ? JobKind::Calibration
                                                  : JobKind::Circuit;
    break;
  }
  case JobParameterKey::Custom1: {
    if (const auto mode = validateHeralding(value); !mode.ok()) {
      lastError_ = mode.message();
      return mode.status();
    }
    break;
  }
  case JobParameterKey::Custom5: {
    if (const auto mapping = parseQubitMapping(value); !mapping.ok()) {
      lastError_ = mapping.message();
      return mapping.status();
    }
    break;
  }
  case JobParameterKey::ShotsNum: {
    if (!parseShotsNum(std::string{value}).has_value()) {
      lastError_ = "SHOTSNUM must be a positive integer";
      return StatusCode::InvalidArgument;
    }
    break;
  }
  case JobParameterKey::Program:
    break;
  }
  parameters_[key] = std::string{value};
  return StatusCode::Success;
}

auto Job::submit() -> StatusCode {
  auto& s = *session_;
  if (!sessionUsable()) {
    lastError_ = "session is not initialized";
    return StatusCode::InvalidArgument;
  }
  if (submitted_) {
    lastError_ = "job was already submitted";
    return StatusCode::InvalidArgument;
  }
  const auto formatIt = parameters_.find(JobParameterKey::ProgramFormat);
  if (formatIt == parameters_.end()) {
    lastError_ = "PROGRAMFORMAT must be set before submission";
    return StatusCode::InvalidArgument;
  }

  HttpResponse response;
  if (kind_ == JobKind::Calibration) {
    response = s.transport->post(s.routes.submitCalibration(s.backend.id),
                                 "{}", s.token.token);
  } else {
    const auto programIt = parameters_.find(JobParameterKey::Program);
    if (programIt == parameters_.end()) {
      lastError_ = "PROGRAM must be set before submission";
      return StatusCode::InvalidArgument;
    }
    const auto shotsIt = parameters_.find(JobParameterKey::ShotsNum);
    if (shotsIt == parameters_.end()) {
      lastError_ = "SHOTSNUM must be set before submission";
      return StatusCode::InvalidArgument;
    }
    json body;
    body["format"] = formatIt->second;
    body["program"] = programIt->second;
    body["shots"] = *parseShotsNum(shotsIt->second);
    // Extension parameters translate into backend payload fields.
    const auto heraldingIt = parameters_.find(JobParameterKey::Custom1);
    body["heralding_mode"] = heraldingIt != parameters_.end()
                                 ? heraldingIt->second
                                 : std::string{"none"};
    if (const auto mappingIt = parameters_.find(JobParameterKey::Custom5);
        mappingIt != parameters_.end()) {
      const auto mapping = parseQubitMapping(mappingIt->second);
      json entries = json::array();
      for (const auto& [logical, physical] : mapping.value().entries) {
        entries.push_back({logical, physical});
      }
      body["qubit_mapping"] = std::move(entries);
    }
    response = s.transport->post(s.routes.submitCircuit(s.backend.id),
                                 body.dump(), s.token.token);
  }

  if (!response.ok()) {
    lastError_ = detail::errorFromBody(response, "submission failed");
    return statusFromHttp(response);
  }
  try {
    remoteId_ = json::parse(response.body).at("id").get<std::string>();
  } catch (const json::exception&) {
    lastError_ = "malformed submission response";
    return StatusCode::Fatal;
  }
  submitted_ = true;
  status_ = JobStatus::Submitted;
  statusKnown_ = true;
  return StatusCode::Success;
}

auto Job::check() -> Result<JobStatus> {
  using R = Result<JobStatus>;
  auto& s = *session_;
  if (!sessionUsable()) {
    return R::failure(StatusCode::InvalidArgument,
                      "session is not initialized");
  }
  if (!submitted_) {
    return R::failure(StatusCode::InvalidArgument,
                      "job has not been submitted");
  }
  if (terminalCached_) {
    return R::success(status_); // terminal states are sticky; no request
  }
  const auto path = kind_ == JobKind::Calibration
                        ? s.routes.calibrationStatus(remoteId_)
                        : s.routes.jobStatus(remoteId_);
  const auto response = s.transport->get(path, s.token.token);
  if (response.httpStatus == 0) {
    return R::failure(StatusCode::Fatal, "status request failed");
  }
  if (!response.ok()) {
    return R::failure(statusFromHttp(response),
                      detail::errorFromBody(response,
                                            "status request failed"));
  }
  std::string native;
  std::string errorMessage;
  try {
    const auto node = json::parse(response.body);
    native = node.at("native_state").get<std::string>();
    errorMessage = node.value("error_message", std::string{});
  } catch (const json::exception&) {
    return R::failure(StatusCode::Fatal, "malformed status response");
  }
  const auto mapped = mapNativeStatus(native);
  if (!mapped.ok()) {
    return R::failure(mapped.status(), mapped.message());
  }
  status_ = mapped.value();
  statusKnown_ = true;
  if (!errorMessage.empty()) {
    lastError_ = errorMessage;
  }
  if (isTerminal(status_)) {
    terminalCached_ = true;
  }
  return R::success(status_);
}

auto Job::wait(const double timeoutSeconds) -> Result<JobStatus> {
  using R = Result<JobStatus>;
  const auto& s = *session_;
  const auto start = s.monotonicNow();
  for (int attempt = 0;; ++attempt) {
    auto checked = check();
    if (!checked.ok()) {
      return checked;
    }
    if (isTerminal(checked.value())) {
      return checked;
    }
    if (s.monotonicNow() - start >= timeoutSeconds) {
      return R::failure(StatusCode::Timeout,
                        "job did not reach a terminal state in time");
    }
    const auto delay = std::min(s.config.backoffBaseSeconds *
                                    std::pow(s.config.backoffFactor, attempt),
                                s.config.backoffCapSeconds);
    s.sleepFor(delay);
  }
}

auto Job::cancel() -> StatusCode {
  auto& s = *session_;
  if (!sessionUsable()) {
    lastError_ = "session is not initialized";
    return StatusCode::InvalidArgument;
  }
  if (!submitted_) {
    lastError_ = "job has not been submitted";
    return StatusCode::InvalidArgument;
  }
  const auto path = kind_ == JobKind::Calibration
                        ? s.routes.calibrationAbort(remoteId_)
                        : s.routes.jobCancel(remoteId_);
  const auto response = s.transport->post(path, "{}", s.token.token);
  if (response.httpStatus == 0) {
    lastError_ = "cancel request failed";
    return StatusCode::Fatal;
  }
  if (!response.ok()) {
    lastError_ = detail::errorFromBody(response, "cancel rejected");
    return statusFromHttp(response);
  }
  status_ = JobStatus::Canceled;
  statusKnown_ = true;
  terminalCached_ = true;
  return StatusCode::Success;
}

auto Job::fetchShots() -> StatusCode {
  auto& s = *session_;
  const auto response = s.transport->get(
      s.routes.jobMeasurements(remoteId_), s.token.token);
  if (response.httpStatus == 0) {
    lastError_ = "measurements request failed";
    return StatusCode::Fatal;
  }
  if (!response.ok()) {
    lastError_ = detail::errorFromBody(response, "measurements unavailable");
    return statusFromHttp(response);
  }
  try {
    const auto node = json::parse(response.body);
    const auto keys = node.at("keys").get<std::vector<std::string>>();
    const auto shots = node.at("shots").get<std::int64_t>();
    std::vector<std::string> bitstrings(
        static_cast<std::size_t>(shots),
        std::string(keys.size(), '0'));
    for (std::size_t j = 0; j < keys.size(); ++j) {
      const auto bits =
          node.at("measurements").at(keys[j]).get<std::vector<int>>();
      for (std::size_t shot = 0; shot < bitstrings.size(); ++shot) {
        bitstrings[shot][j] = bits[shot] != 0 ? '1' : '0';
      }
    }
    shotsCache_ = std::move(bitstrings);
    return StatusCode::Success;
  } catch (const json::exception&) {
    lastError_ = "malformed measurements response";
    return StatusCode::Fatal;
  }
}

auto Job::ensureHistogram() -> StatusCode {
  if (histCache_.has_value()) {
    return StatusCode::Success;
  }
  if (shotsCache_.has_value() && !shotsCache_->empty()) {
    // Shot data is already local; derive the histogram without a request.
    std::map<std::string, std::int64_t> counts;
    for (const auto& bits : *shotsCache_) {
      ++counts[bits];
    }
    histCache_ = std::move(counts);
    return StatusCode::Success;
  }
  auto& s = *session_;
  const auto response =
      s.transport->get(s.routes.jobCounts(remoteId_), s.token.token);
  if (response.httpStatus == 0) {
    lastError_ = "counts request failed";
    return StatusCode::Fatal;
  }
  if (!response.ok()) {
    lastError_ = detail::errorFromBody(response, "counts unavailable");
    return statusFromHttp(response);
  }
  try {
    const auto node = json::parse(response.body);
    std::map<std::string, std::int64_t> counts;
    for (const auto& [bits, count] : node.at("counts").items()) {
      counts[bits] = count.get<std::int64_t>();
    }
    histCache_ = std::move(counts);
    return StatusCode::Success;
  } catch (const json::exception&) {
    lastError_ = "malformed counts response";
    return StatusCode::Fatal;
  }
}

auto Job::calibrationResult() -> Result<std::string> {
  using R = Result<std::string>;
  auto& s = *session_;
  // Reread the calibration-job status to pick up the new set id.
  const auto response = s.transport->get(
      s.routes.calibrationStatus(remoteId_), s.token.token);
  if (response.httpStatus == 0) {
    return R::failure(StatusCode::Fatal, "status reread failed");
  }
  if (!response.ok()) {
    return R::failure(statusFromHttp(response),
                      detail::errorFromBody(response, "status reread failed"));
  }
  std::string setId;
  try {
    setId = json::parse(response.body)
                .at("result_calibration_set")
                .get<std::string>();
  } catch (const json::exception&) {
    return R::failure(StatusCode::Protocol,
                      "calibration job carries no result set id");
  }
  // Refresh session caches to the new set, retrying once after the
  // configured delay if the first attempt fails.
  auto refreshed = detail::refreshCaches(s, setId);
  if (refreshed != StatusCode::Success) {
    s.sleepFor(s.config.calibrationRetryDelaySeconds);
    refreshed = detail::refreshCaches(s, setId);
  }
  if (refreshed != StatusCode::Success) {
    return R::failure(StatusCode::Fatal,
                      "calibration refresh failed twice: " + s.lastError);
  }
  return R::success(std::move(setId));
}

auto Job::getResults(const JobResultKey key, const std::size_t capacity,
                     char* destination) -> SizedRead {
  if (!sessionUsable()) {
    return {0, StatusCode::InvalidArgument};
  }
  if (!submitted_ || !statusKnown_ || status_ != JobStatus::Done) {
    lastError_ = "results require a job in status DONE";
    return {0, StatusCode::InvalidArgument};
  }
  if ((key == JobResultKey::Custom1) != (kind_ == JobKind::Calibration)) {
    lastError_ = "result key does not match the job kind";
    return {0, StatusCode::InvalidArgument};
  }

  switch (key) {
  case JobResultKey::Shots: {
    if (!shotsCache_.has_value()) {
      if (const auto fetched = fetchShots(); fetched != StatusCode::Success) {
        return {0, fetched};
      }
    }
    return sizedRead(PropertyValue{*shotsCache_}, capacity, destination);
  }
  case JobResultKey::HistKeys:
  case JobResultKey::HistValues: {
    if (const auto derived = ensureHistogram();
        derived != StatusCode::Success) {
      return {0, derived};
    }
    std::vector<std::string> column;
    column.reserve(histCache_->size());
    for (const auto& [bits, count] : *histCache_) {
      column.push_back(key == JobResultKey::HistKeys ? bits
                                                     : std::to_string(count));
    }
    return sizedRead(PropertyValue{std::move(column)}, capacity, destination);
  }
  case JobResultKey::Custom1: {
    if (!calibrationSetCache_.has_value()) {
      auto result = calibrationResult();
      if (!result.ok()) {
        lastError_ = result.message();
        return {0, result.status()};
      }
      calibrationSetCache_ = std::move(result.value());
    }
    return sizedRead(PropertyValue{*calibrationSetCache_}, capacity,
                     destination);
  }
  }
  return {0, StatusCode::InvalidArgument};
}

} // namespace qdmi::plugin
