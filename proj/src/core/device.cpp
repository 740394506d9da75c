/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/core/device.hpp"

namespace qdmi {

namespace {

template <typename Read>
auto twoCallRead(const Read& read) -> Result<std::string> {
  const auto sizing = read(0, nullptr);
  if (!sizing.ok()) {
    return Result<std::string>::failure(sizing.status);
  }
  std::string out(sizing.size, '\0');
  if (sizing.size == 0) {
    return Result<std::string>::success(std::move(out));
  }
  const auto filled = read(out.size(), out.data());
  if (!filled.ok()) {
    return Result<std::string>::failure(filled.status);
  }
  out.resize(filled.size);
  return Result<std::string>::success(std::move(out));
}

} // namespace

auto queryDeviceString(DeviceSession& session, const DeviceProperty key)
    -> Result<std::string> {
  return twoCallRead([&](const std::size_t capacity, char* destination) {
    return session.queryDeviceProperty(key, capacity, destination);
  });
}

auto querySiteString(DeviceSession& session, const std::string_view site,
                     const SiteProperty key) -> Result<std::string> {
  return twoCallRead([&](const std::size_t capacity, char* destination) {
    return session.querySiteProperty(site, key, capacity, destination);
  });
}

auto queryOperationString(DeviceSession& session,
                          const std::string_view operation,
                          const std::vector<std::string>& sites,
                          const OperationProperty key) -> Result<std::string> {
  return twoCallRead([&](const std::size_t capacity, char* destination) {
    return session.queryOperationProperty(operation, sites, key, capacity,
                                          destination);
  });
}

auto readResultString(DeviceJob& job, const JobResultKey key)
    -> Result<std::string> {
  return twoCallRead([&](const std::size_t capacity, char* destination) {
    return job.getResults(key, capacity, destination);
  });
}

} // namespace qdmi
