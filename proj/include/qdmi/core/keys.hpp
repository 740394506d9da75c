/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Parameter, property and result key enumerations of the device
 * contract.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace qdmi {

/// Session configuration parameters set before initialization.
enum class SessionParameterKey : std::uint8_t {
  BaseUrl,  ///< Base URL of the backend service; mandatory.
  Token,    ///< Explicit bearer token.
  AuthFile, ///< Path to a token file.
  Custom1,  ///< Backend ID selector.
  Custom2,  ///< Backend alias selector.
};

/// Job configuration parameters set before submission.
enum class JobParameterKey : std::uint8_t {
  ProgramFormat, ///< One of the ProgramFormat names; mandatory.
  Program,       ///< Program payload; mandatory for circuit jobs.
  ShotsNum,      ///< Number of shots for circuit jobs.
  Custom1,       ///< Heralding mode, "none" or "zeros".
  Custom5,       ///< Qubit mapping "logical:physical,logical:physical,...".
};

/// Program payload formats accepted by the job layer.
enum class ProgramFormat : std::uint8_t {
  IqmJson,       ///< Native circuit JSON.
  QirBaseString, ///< Opaque base64 QIR payload, forwarded unmodified.
  Calibration,   ///< Calibration job; only valid when the session detected
                 ///< calibration support.
};

[[nodiscard]] auto toString(ProgramFormat format) -> std::string_view;
[[nodiscard]] auto programFormatFromString(std::string_view name)
    -> std::optional<ProgramFormat>;

/// Device-scope property keys.
enum class DeviceProperty : std::uint8_t {
  Name,
  Version,
  QubitCount,
  Sites,
  CouplingMap,
  Operations,
  Status,
};

/// Site-scope property keys. T1/T2 are expressed in seconds.
enum class SiteProperty : std::uint8_t {
  Name,
  Index,
  T1,
  T2,
};

/// Operation-scope property keys. DURATION is in seconds, FIDELITY in [0,1].
enum class OperationProperty : std::uint8_t {
  Name,
  Fidelity,
  Duration,
  SitesSupported,
};

/// Result families retrievable from a completed job.
enum class JobResultKey : std::uint8_t {
  Shots,      ///< Per-shot bitstrings in shot order.
  HistKeys,   ///< Sorted unique bitstrings of the histogram.
  HistValues, ///< Counts aligned with HistKeys.
  Custom1,    ///< New calibration-set identifier (calibration jobs only).
};

} // namespace qdmi
