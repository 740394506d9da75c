/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <functional>
#include <memory>
#include <vector>

namespace qdmi::test {

/// Manually advanced clock handed to services and plugin configs.
class FakeClock {
public:
  FakeClock() : time_(std::make_shared<double>(0.0)) {}

  [[nodiscard]] auto fn() const -> std::function<double()> {
    auto time = time_;
    return [time] { return *time; };
  }

  auto advance(const double seconds) const -> void { *time_ += seconds; }
  auto set(const double seconds) const -> void { *time_ = seconds; }
  [[nodiscard]] auto now() const -> double { return *time_; }

  /// Sleeper that advances this clock and records each requested delay.
  [[nodiscard]] auto recordingSleeper(std::shared_ptr<std::vector<double>> log)
      const -> std::function<void(double)> {
    auto time = time_;
    return [time, log](const double seconds) {
      log->push_back(seconds);
      *time += seconds;
    };
  }

private:
  std::shared_ptr<double> time_;
};

} // namespace qdmi::test
