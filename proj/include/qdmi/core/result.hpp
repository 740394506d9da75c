/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "qdmi/core/status.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace qdmi {

/**
 * @brief A status code with an optional payload and diagnostic message.
 * @details Operations that produce a value on success return this instead of
 * throwing; the value is only accessible when ok().
 */
template <typename T> class Result {
public:
  [[nodiscard]] static auto success(T value) -> Result {
    Result r;
    r.value_ = std::move(value);
    return r;
  }

  [[nodiscard]] static auto failure(StatusCode code, std::string message = {})
      -> Result {
    assert(code != StatusCode::Success);
    Result r;
    r.status_ = code;
    r.message_ = std::move(message);
    return r;
  }

  [[nodiscard]] auto ok() const -> bool {
    return status_ == StatusCode::Success;
  }
  [[nodiscard]] auto status() const -> StatusCode { return status_; }
  [[nodiscard]] auto message() const -> const std::string& { return message_; }

  [[nodiscard]] auto value() const -> const T& {
    assert(ok());
    return *value_;
  }
  [[nodiscard]] auto value() -> T& {
    assert(ok());
    return *value_;
  }

private:
  Result() = default;
  StatusCode status_ = StatusCode::Success;
  std::string message_;
  std::optional<T> value_;
};

/// Outcome of a two-call sized read: the required size plus a status code.
struct SizedRead {
  std::size_t size = 0;
  StatusCode status = StatusCode::Success;

  [[nodiscard]] auto ok() const -> bool {
    return status == StatusCode::Success;
  }
};

} // namespace qdmi
