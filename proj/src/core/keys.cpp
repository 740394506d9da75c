/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/core/keys.hpp"

namespace qdmi {

auto toString(const ProgramFormat format) -> std::string_view {
  switch (format) {
  case ProgramFormat::IqmJson:
    return "IQMJSON";
  case ProgramFormat::QirBaseString:
    return "QIRBASESTRING";
  case ProgramFormat::Calibration:
    return "CALIBRATION";
  }
  return "IQMJSON";
}

auto programFormatFromString(const std::string_view name)
    -> std::optional<ProgramFormat> {
  if (name == "IQMJSON") {
    return ProgramFormat::IqmJson;
  }
  if (name == "QIRBASESTRING") {
    return ProgramFormat::QirBaseString;
  }
  if (name == "CALIBRATION") {
    return ProgramFormat::Calibration;
  }
  return std::nullopt;
}

} // namespace qdmi
