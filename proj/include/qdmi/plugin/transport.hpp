/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Thin GET/POST transport that turns HTTP responses into status
 * codes.
 */

#pragma once

#include "qdmi/core/status.hpp"

#include <memory>
#include <string>

namespace qdmi::plugin {

/// Raw HTTP outcome; httpStatus is 0 when the request never completed.
struct HttpResponse {
  int httpStatus = 0;
  std::string body;

  [[nodiscard]] auto ok() const -> bool {
    return httpStatus >= 200 && httpStatus < 300;
  }
};

/// Maps an HTTP outcome onto the device status vocabulary.
[[nodiscard]] auto statusFromHttp(const HttpResponse& response) -> StatusCode;

/**
 * @brief Reentrant HTTP client bound to one base URL.
 * @details Multiple sessions may hold independent transports in one process;
 * a single transport serializes nothing and keeps no request state.
 */
class Transport {
public:
  explicit Transport(const std::string& baseUrl);
  ~Transport();

  Transport(Transport&&) noexcept;
  auto operator=(Transport&&) noexcept -> Transport&;

  [[nodiscard]] auto get(const std::string& path,
                         const std::string& bearerToken) const -> HttpResponse;
  [[nodiscard]] auto post(const std::string& path, const std::string& body,
                          const std::string& bearerToken) const
      -> HttpResponse;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

} // namespace qdmi::plugin
