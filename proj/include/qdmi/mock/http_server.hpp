/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief HTTP/1.1 shell around the in-process backend service.
 */

#pragma once

#include "qdmi/mock/service.hpp"

#include <memory>
#include <string>
#include <thread>

namespace qdmi::mock {

/**
 * @brief Serves the backend routes over HTTP on a local port.
 * @details All bodies are JSON. Authorization is the "Bearer <token>" header
 * on every route except the /_test ones. The underlying BackendService stays
 * accessible so tests can inject failures or read counters directly.
 */
class MockServer {
public:
  /// Creates the server; call start() to bind and serve.
  MockServer(ServiceConfig config, ClockFn clock = steadyClock());
  ~MockServer();

  MockServer(const MockServer&) = delete;
  auto operator=(const MockServer&) -> MockServer& = delete;

  /**
   * @brief Binds and starts serving on a background thread.
   * @param port Fixed port, or 0 to pick a free one.
   * @return the bound port, or -1 on bind failure.
   */
  auto start(int port = 0) -> int;

  auto stop() -> void;

  [[nodiscard]] auto port() const -> int { return port_; }
  [[nodiscard]] auto baseUrl() const -> std::string;

  [[nodiscard]] auto service() -> BackendService& { return *service_; }

private:
  auto mountRoutes() -> void;

  std::unique_ptr<BackendService> service_;
  struct HttpImpl;
  std::unique_ptr<HttpImpl> http_;
  std::thread serverThread_;
  int port_ = -1;
};

} // namespace qdmi::mock
