/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/mock/http_server.hpp"

#include <httplib.h>

namespace qdmi::mock {

namespace {

auto send(httplib::Response& res, const ApiResponse& api) -> void {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

auto bearer(const httplib::Request& req) -> std::string {
  return req.get_header_value("Authorization");
}

} // namespace

struct MockServer::HttpImpl {
  httplib::Server server;
};

MockServer::MockServer(ServiceConfig config, ClockFn clock)
    : service_(std::make_unique<BackendService>(std::move(config),
                                                std::move(clock))),
      http_(std::make_unique<HttpImpl>()) {
  mountRoutes();
}

MockServer::~MockServer() { stop(); }

auto MockServer::mountRoutes() -> void {
  auto& server = http_->server;
  auto& service = *service_;

  server.Get("/quantum-computers",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.listBackends(bearer(req)));
             });
  server.Get("/quantum-computers/([^/]+)/static-architecture",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.staticArchitecture(bearer(req),
                                                    req.matches[1].str()));
             });
  server.Get("/quantum-computers/([^/]+)/dynamic-architecture/([^/]+)",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.dynamicArchitecture(bearer(req),
                                                     req.matches[1].str(),
                                                     req.matches[2].str()));
             });
  server.Get("/quantum-computers/([^/]+)/calibration-support",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.calibrationSupport(bearer(req),
                                                    req.matches[1].str()));
             });
  server.Get("/calibration-sets/([^/]+)/metrics",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.calibrationMetrics(bearer(req),
                                                    req.matches[1].str()));
             });
  server.Post("/quantum-computers/([^/]+)/jobs",
              [&service](const httplib::Request& req, httplib::Response& res) {
                send(res, service.submitCircuitJob(
                              bearer(req), req.matches[1].str(), req.body));
              });
  server.Get("/jobs/([^/]+)/status",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.jobStatus(bearer(req), req.matches[1].str()));
             });
  server.Get("/jobs/([^/]+)/measurements",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.jobMeasurements(bearer(req),
                                                 req.matches[1].str()));
             });
  server.Get("/jobs/([^/]+)/counts",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res,
                    service.jobCounts(bearer(req), req.matches[1].str()));
             });
  server.Post("/jobs/([^/]+)/cancel",
              [&service](const httplib::Request& req, httplib::Response& res) {
                send(res,
                     service.cancelJob(bearer(req), req.matches[1].str()));
              });
  server.Post("/quantum-computers/([^/]+)/calibration-jobs",
              [&service](const httplib::Request& req, httplib::Response& res) {
                send(res, service.submitCalibrationJob(bearer(req),
                                                       req.matches[1].str()));
              });
  server.Get("/calibration-jobs/([^/]+)",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.calibrationJobStatus(bearer(req),
                                                      req.matches[1].str()));
             });
  server.Post("/calibration-jobs/([^/]+)/abort",
              [&service](const httplib::Request& req, httplib::Response& res) {
                send(res, service.abortCalibrationJob(bearer(req),
                                                      req.matches[1].str()));
              });
  server.Get("/_test/request-counts",
             [&service](const httplib::Request&, httplib::Response& res) {
               send(res, service.requestCounts());
             });
}

auto MockServer::start(const int port) -> int {
  auto& server = http_->server;
  if (port == 0) {
    port_ = server.bind_to_any_port("127.0.0.1");
  } else {
    port_ = server.bind_to_port("127.0.0.1", port) ? port : -1;
  }
  if (port_ <= 0) {
    port_ = -1;
    return -1;
  }
  serverThread_ = std::thread([this] { http_->server.listen_after_bind(); });
  server.wait_until_ready();
  return port_;
}

auto MockServer::stop() -> void {
  http_->server.stop();
  if (serverThread_.joinable()) {
    serverThread_.join();
  }
}

auto MockServer::baseUrl() const -> std::string {
  return "http://127.0.0.1:" + std::to_string(port_);
}

} // namespace qdmi::mock
