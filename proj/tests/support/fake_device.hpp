/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief In-process implementation of the device contract, without HTTP.
 * @details A second, independent realization of the contract used to prove
 * that the frontend adapter is backend-agnostic. Circuit semantics come from
 * the shared simulator; everything else (caches, job bookkeeping, sized
 * reads) is local state.
 */

#pragma once

#include "qdmi/core/device.hpp"
#include "qdmi/core/property_value.hpp"
#include "qdmi/mock/simulator.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdmi::test {

class FakeDevice;

class FakeJob final : public DeviceJob {
public:
  explicit FakeJob(FakeDevice& device) : device_(device) {}

  auto setParameter(JobParameterKey key, std::string_view value)
      -> StatusCode override {
    if (submitted_) {
      return StatusCode::InvalidArgument;
    }
    parameters_[key] = std::string{value};
    return StatusCode::Success;
  }

  auto submit() -> StatusCode override;

  auto check() -> Result<JobStatus> override {
    if (!submitted_) {
      return Result<JobStatus>::failure(StatusCode::InvalidArgument,
                                        "not submitted");
    }
    return Result<JobStatus>::success(status_);
  }

  auto wait(double) -> Result<JobStatus> override { return check(); }

  auto cancel() -> StatusCode override {
    // the fake executes synchronously, so jobs are always terminal
    return StatusCode::InvalidArgument;
  }

  auto getResults(JobResultKey key, std::size_t capacity, char* destination)
      -> SizedRead override {
    if (!submitted_ || status_ != JobStatus::Done) {
      return {0, StatusCode::InvalidArgument};
    }
    switch (key) {
    case JobResultKey::Shots:
      return sizedRead(PropertyValue{record_.bitstrings}, capacity,
                       destination);
    case JobResultKey::HistKeys:
    case JobResultKey::HistValues: {
      std::vector<std::string> column;
      for (const auto& [bits, count] : record_.counts) {
        column.push_back(key == JobResultKey::HistKeys
                             ? bits
                             : std::to_string(count));
      }
      return sizedRead(PropertyValue{std::move(column)}, capacity,
                       destination);
    }
    case JobResultKey::Custom1:
      return {0, StatusCode::InvalidArgument};
    }
    return {0, StatusCode::InvalidArgument};
  }

private:
  FakeDevice& device_;
  std::map<JobParameterKey, std::string> parameters_;
  bool submitted_ = false;
  JobStatus status_ = JobStatus::Submitted;
  mock::ShotRecord record_;
};

/// Five-qubit star device served entirely from process memory.
class FakeDevice final : public DeviceSession {
public:
  FakeDevice() {
    qubitNames_ = {"QB1", "QB2", "QB3", "QB4", "QB5"};
    connectivity_ = {{"QB1", "QB3"}, {"QB2", "QB3"}, {"QB4", "QB3"},
                     {"QB5", "QB3"}};
    for (const auto& qubit : qubitNames_) {
      metrics_[{"prx", {qubit}}] = {0.999, 2.0e-8};
      metrics_[{"measure", {qubit}}] = {0.98, 1.5e-6};
      t1t2_[qubit] = {4.8e-5, 5.1e-5};
    }
    for (const auto& edge : connectivity_) {
      metrics_[{"cz", {edge.first, edge.second}}] = {0.991, 4.0e-8};
    }
  }

  auto queryDeviceProperty(DeviceProperty key, std::size_t capacity,
                           char* destination) -> SizedRead override {
    PropertyValue value;
    switch (key) {
    case DeviceProperty::Name:
      value = std::string{"fake-5q"};
      break;
    case DeviceProperty::Version:
      // not every backend reports every key
      return {0, StatusCode::NotSupported};
    case DeviceProperty::QubitCount:
      value = static_cast<std::int64_t>(qubitNames_.size());
      break;
    case DeviceProperty::Sites:
      value = qubitNames_;
      break;
    case DeviceProperty::CouplingMap: {
      std::vector<SitePair> pairs;
      for (const auto& edge : connectivity_) {
        pairs.emplace_back(index(edge.first), index(edge.second));
      }
      value = std::move(pairs);
      break;
    }
    case DeviceProperty::Operations:
      value = std::vector<std::string>{"prx", "cz", "measure"};
      break;
    case DeviceProperty::Status:
      value = std::string{"online"};
      break;
    }
    return sizedRead(value, capacity, destination);
  }

  auto querySiteProperty(std::string_view site, SiteProperty key,
                         std::size_t capacity, char* destination)
      -> SizedRead override {
    const auto it = t1t2_.find(std::string{site});
    if (it == t1t2_.end()) {
      return {0, StatusCode::NotFound};
    }
    PropertyValue value;
    switch (key) {
    case SiteProperty::Name:
      value = std::string{site};
      break;
    case SiteProperty::Index:
      value = static_cast<std::int64_t>(index(std::string{site}));
      break;
    case SiteProperty::T1:
      value = it->second.first;
      break;
    case SiteProperty::T2:
      value = it->second.second;
      break;
    }
    return sizedRead(value, capacity, destination);
  }

  auto queryOperationProperty(std::string_view operation,
                              const std::vector<std::string>& sites,
                              OperationProperty key, std::size_t capacity,
                              char* destination) -> SizedRead override {
    PropertyValue value;
    switch (key) {
    case OperationProperty::Name:
      value = std::string{operation};
      break;
    case OperationProperty::SitesSupported: {
      std::vector<std::string> single;
      std::vector<SitePair> pairs;
      for (const auto& [opKey, quality] : metrics_) {
        if (opKey.first != operation) {
          continue;
        }
        if (opKey.second.size() == 1) {
          single.push_back(opKey.second.front());
        } else {
          pairs.emplace_back(index(opKey.second[0]), index(opKey.second[1]));
        }
      }
      if (single.empty() && pairs.empty()) {
        return {0, StatusCode::NotFound};
      }
      if (!pairs.empty()) {
        value = std::move(pairs);
      } else {
        value = std::move(single);
      }
      break;
    }
    case OperationProperty::Fidelity:
    case OperationProperty::Duration: {
      const auto it = metrics_.find({std::string{operation}, sites});
      if (it == metrics_.end()) {
        return {0, StatusCode::NotFound};
      }
      value = key == OperationProperty::Fidelity ? it->second.first
                                                 : it->second.second;
      break;
    }
    }
    return sizedRead(value, capacity, destination);
  }

  [[nodiscard]] auto activeCalibrationSet() const -> std::string override {
    return "cs-fake-0";
  }

  auto createJob() -> Result<std::unique_ptr<DeviceJob>> override {
    return Result<std::unique_ptr<DeviceJob>>::success(
        std::make_unique<FakeJob>(*this));
  }

  [[nodiscard]] auto qubitNames() const -> const std::vector<std::string>& {
    return qubitNames_;
  }
  [[nodiscard]] auto connectivity() const
      -> const std::vector<std::pair<std::string, std::string>>& {
    return connectivity_;
  }
  auto nextSeed() -> std::uint64_t { return seedCounter_++; }

private:
  friend class FakeJob;

  [[nodiscard]] auto index(const std::string& name) const -> std::uint32_t {
    for (std::uint32_t i = 0; i < qubitNames_.size(); ++i) {
      if (qubitNames_[i] == name) {
        return i;
      }
    }
    return 0;
  }

  std::vector<std::string> qubitNames_;
  std::vector<std::pair<std::string, std::string>> connectivity_;
  std::map<std::pair<std::string, std::vector<std::string>>,
           std::pair<double, double>>
      metrics_;
  std::map<std::string, std::pair<double, double>> t1t2_;
  std::uint64_t seedCounter_ = 1;
};

inline auto FakeJob::submit() -> StatusCode {
  if (submitted_) {
    return StatusCode::InvalidArgument;
  }
  const auto programIt = parameters_.find(JobParameterKey::Program);
  const auto shotsIt = parameters_.find(JobParameterKey::ShotsNum);
  if (!parameters_.contains(JobParameterKey::ProgramFormat) ||
      programIt == parameters_.end() || shotsIt == parameters_.end()) {
    return StatusCode::InvalidArgument;
  }
  auto circuit = mock::parseCircuit(programIt->second);
  if (!circuit.ok()) {
    return StatusCode::InvalidArgument;
  }
  if (mock::validateCircuit(circuit.value(), device_.qubitNames(),
                            device_.connectivity())
          .has_value()) {
    return StatusCode::InvalidArgument;
  }
  record_ = mock::simulateCircuit(circuit.value(),
                                  std::stoll(shotsIt->second),
                                  device_.nextSeed());
  submitted_ = true;
  status_ = JobStatus::Done; // the fake executes synchronously
  return StatusCode::Success;
}

} // namespace qdmi::test
