/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Backend registry and calibration-set bookkeeping of the mock
 * service.
 */

#pragma once

#include "qdmi/core/keys.hpp"
#include "qdmi/mock/config.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qdmi::mock {

/// Coherence metrics of a single qubit, in seconds.
struct QubitMetrics {
  double t1Seconds = 0.0;
  double t2Seconds = 0.0;
};

/// Quality metrics of one calibrated (operation, site tuple).
struct OperationMetrics {
  double fidelity = 0.0;
  double durationSeconds = 0.0;
};

/// Key addressing one calibrated operation instance.
using OperationKey = std::pair<std::string, std::vector<std::string>>;

/**
 * @brief Immutable snapshot of device quality metrics.
 * @details Every qubit carries prx and measure entries, every connectivity
 * pair a cz entry, and t2 <= 2*t1 holds for every qubit.
 */
struct CalibrationSet {
  std::string id;
  std::string backendId;
  std::string createdAt; // ISO-8601, logical clock
  std::map<std::string, QubitMetrics> perQubit;
  std::map<OperationKey, OperationMetrics> perOperation;
};

/// One registered backend.
struct BackendRecord {
  std::string id; // UUID-format, derived from the registry seed
  std::string alias;
  std::string availability; // "online" or "maintenance"
  bool supportsCalibrationJobs = false;
  std::vector<std::string> qubitNames;
  std::vector<std::pair<std::string, std::string>> connectivity;
  std::vector<std::string> supportedFormats;
  std::string activeCalibrationSet;

  [[nodiscard]] auto hasQubit(const std::string& name) const -> bool;
  [[nodiscard]] auto hasEdge(const std::string& a, const std::string& b) const
      -> bool;
  [[nodiscard]] auto supportsFormat(std::string_view format) const -> bool;
};

/**
 * @brief Registry of backends plus the append-only calibration-set store.
 * @details Calibration sets are immutable once created; only the per-backend
 * active-set pointer moves, and only when a calibration job completes.
 */
class Registry {
public:
  /// Builds the registry from a configuration, with seeded initial metrics.
  explicit Registry(const ServiceConfig& config);

  [[nodiscard]] auto backends() const -> const std::vector<BackendRecord>& {
    return backends_;
  }
  [[nodiscard]] auto findById(const std::string& id) -> BackendRecord*;
  [[nodiscard]] auto findByAlias(const std::string& alias) -> BackendRecord*;

  [[nodiscard]] auto calibrationSet(const std::string& id) const
      -> const CalibrationSet*;

  /**
   * @brief Materializes a fresh calibration set for the backend.
   *
   * Metrics are the backend's current active set perturbed by a seeded
   * multiplicative jitter in [0.95, 1.05], clamped so that fidelities stay
   * in [0,1] and t2 <= 2*t1. The new set becomes the backend's active set.
   * @return id of the new set.
   */
  auto createJitteredSet(BackendRecord& backend) -> std::string;

private:
  auto addInitialSet(BackendRecord& backend) -> void;
  auto nextSetId() -> std::string;
  auto logicalTimestamp() -> std::string;

  std::uint64_t seed_;
  std::vector<BackendRecord> backends_;
  std::map<std::string, CalibrationSet> sets_;
  std::uint64_t setCounter_ = 0;
};

/// The default two-backend registry: a 5-qubit star and a 6-qubit chain.
[[nodiscard]] auto defaultFixtures() -> std::vector<BackendFixture>;

} // namespace qdmi::mock
