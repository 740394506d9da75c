/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/frontend/primitives.hpp"

#include <algorithm>
#include <cmath>

namespace qdmi::frontend {

namespace {

auto splitList(const std::string& text) -> std::vector<std::string> {
  std::vector<std::string> parts;
  if (text.empty()) {
    return parts;
  }
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(',', pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) {
      break;
    }
    pos = next + 1;
  }
  return parts;
}

auto runCircuitJob(DeviceSession& session, const CircuitSpec& circuit,
                   const std::int64_t shots, const RunOptions& options)
    -> Result<std::unique_ptr<DeviceJob>> {
  using R = Result<std::unique_ptr<DeviceJob>>;
  auto created = session.createJob();
  if (!created.ok()) {
    return created;
  }
  auto job = std::move(created.value());
  if (const auto set =
          job->setParameter(JobParameterKey::ProgramFormat, "IQMJSON");
      set != StatusCode::Success) {
    return R::failure(set, "cannot select the program format");
  }
  if (const auto set = job->setParameter(JobParameterKey::Program,
                                         circuit.toProgramText());
      set != StatusCode::Success) {
    return R::failure(set, "cannot attach the program");
  }
  if (const auto set = job->setParameter(JobParameterKey::ShotsNum,
                                         std::to_string(shots));
      set != StatusCode::Success) {
    return R::failure(set, "cannot set the shot count");
  }
  if (options.heraldingMode.has_value()) {
    if (const auto set = job->setParameter(JobParameterKey::Custom1,
                                           *options.heraldingMode);
        set != StatusCode::Success) {
      return R::failure(set, "invalid heralding mode");
    }
  }
  if (options.qubitMapping.has_value()) {
    if (const auto set = job->setParameter(JobParameterKey::Custom5,
                                           *options.qubitMapping);
        set != StatusCode::Success) {
      return R::failure(set, "invalid qubit mapping");
    }
  }
  if (const auto submitted = job->submit(); submitted != StatusCode::Success) {
    return R::failure(submitted, "submission rejected");
  }
  auto waited = job->wait(options.waitTimeoutSeconds);
  if (!waited.ok()) {
    return R::failure(waited.status(), waited.message());
  }
  if (waited.value() != JobStatus::Done) {
    return R::failure(StatusCode::Fatal,
                      "job ended as " +
                          std::string{toString(waited.value())});
  }
  return R::success(std::move(job));
}

auto histogramFromJob(DeviceJob& job) -> Result<Histogram> {
  using R = Result<Histogram>;
  auto keys = readResultString(job, JobResultKey::HistKeys);
  if (!keys.ok()) {
    return R::failure(keys.status(), "histogram keys unavailable");
  }
  auto values = readResultString(job, JobResultKey::HistValues);
  if (!values.ok()) {
    return R::failure(values.status(), "histogram values unavailable");
  }
  const auto keyList = splitList(keys.value());
  const auto valueList = splitList(values.value());
  if (keyList.size() != valueList.size()) {
    return R::failure(StatusCode::Protocol, "histogram columns misaligned");
  }
  Histogram histogram;
  for (std::size_t i = 0; i < keyList.size(); ++i) {
    histogram[keyList[i]] = std::stoll(valueList[i]);
  }
  return R::success(std::move(histogram));
}

} // namespace

auto runSampler(DeviceSession& session,
                const std::vector<CircuitSpec>& circuits,
                const std::int64_t shots, const RunOptions& options)
    -> SamplerOutcome {
  SamplerOutcome outcome;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    auto job = runCircuitJob(session, circuits[i], shots, options);
    if (!job.ok()) {
      outcome.status = job.status();
      outcome.message = job.message();
      outcome.failedIndex = i;
      return outcome; // results of earlier circuits stay available
    }
    auto histogram = histogramFromJob(*job.value());
    if (!histogram.ok()) {
      outcome.status = histogram.status();
      outcome.message = histogram.message();
      outcome.failedIndex = i;
      return outcome;
    }
    outcome.histograms.push_back(std::move(histogram.value()));
  }
  return outcome;
}

auto runEstimator(DeviceSession& session, const CircuitSpec& circuit,
                  const DiagonalObservable& observable,
                  const std::int64_t shots, const RunOptions& options)
    -> Result<EstimatorResult> {
  using R = Result<EstimatorResult>;

  const auto keys = circuit.measureKeys();
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    position[keys[i]] = i;
  }
  for (const auto& term : observable.terms) {
    for (const auto& key : term.zSupport) {
      if (!position.contains(key)) {
        return R::failure(StatusCode::InvalidArgument,
                          "support key " + key +
                              " is not measured by the circuit");
      }
    }
  }

  auto job = runCircuitJob(session, circuit, shots, options);
  if (!job.ok()) {
    return R::failure(job.status(), job.message());
  }
  auto shotsText = readResultString(*job.value(), JobResultKey::Shots);
  if (!shotsText.ok()) {
    return R::failure(shotsText.status(), "shot data unavailable");
  }
  const auto bitstrings = splitList(shotsText.value());
  if (bitstrings.empty()) {
    return R::failure(StatusCode::Protocol, "no shot data returned");
  }

  // Per-shot summed term values; mean and spread over the shot axis.
  std::vector<double> perShot;
  perShot.reserve(bitstrings.size());
  for (const auto& bits : bitstrings) {
    double value = 0.0;
    for (const auto& term : observable.terms) {
      double product = term.coefficient;
      for (const auto& key : term.zSupport) {
        product *= bits[position[key]] == '1' ? -1.0 : 1.0;
      }
      value += product;
    }
    perShot.push_back(value);
  }
  const auto n = static_cast<double>(perShot.size());
  double mean = 0.0;
  for (const auto value : perShot) {
    mean += value;
  }
  mean /= n;
  double variance = 0.0;
  if (perShot.size() > 1) {
    for (const auto value : perShot) {
      variance += (value - mean) * (value - mean);
    }
    variance /= n - 1.0;
  }
  return R::success({mean, std::sqrt(variance / n)});
}

} // namespace qdmi::frontend
