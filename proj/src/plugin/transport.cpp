/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/plugin/transport.hpp"

#include <httplib.h>

namespace qdmi::plugin {

auto statusFromHttp(const HttpResponse& response) -> StatusCode {
  if (response.httpStatus == 0) {
    return StatusCode::Fatal; // transport failure, no HTTP status at all
  }
  if (response.ok()) {
    return StatusCode::Success;
  }
  switch (response.httpStatus) {
  case 400:
  case 409:
  case 422:
    return StatusCode::InvalidArgument;
  case 401:
  case 403:
    return StatusCode::PermissionDenied;
  case 404:
    return StatusCode::NotFound;
  default:
    return StatusCode::Fatal;
  }
}

struct Transport::Impl {
  explicit Impl(const std::string& baseUrl) : client(baseUrl) {
    client.set_connection_timeout(std::chrono::seconds(5));
    client.set_read_timeout(std::chrono::seconds(30));
    client.set_keep_alive(false);
  }
  mutable httplib::Client client;
};

Transport::Transport(const std::string& baseUrl)
    : impl_(std::make_unique<Impl>(baseUrl)) {}

Transport::~Transport() = default;
Transport::Transport(Transport&&) noexcept = default;
auto Transport::operator=(Transport&&) noexcept -> Transport& = default;

namespace {

auto toResponse(const httplib::Result& result) -> HttpResponse {
  if (!result) {
    return {};
  }
  return {result->status, result->body};
}

auto authHeaders(const std::string& bearerToken) -> httplib::Headers {
  return {{"Authorization", "Bearer " + bearerToken}};
}

} // namespace

auto Transport::get(const std::string& path,
                    const std::string& bearerToken) const -> HttpResponse {
  return toResponse(impl_->client.Get(path, authHeaders(bearerToken)));
}

auto Transport::post(const std::string& path, const std::string& body,
                     const std::string& bearerToken) const -> HttpResponse {
  return toResponse(impl_->client.Post(path, authHeaders(bearerToken), body,
                                       "application/json"));
}

} // namespace qdmi::plugin
