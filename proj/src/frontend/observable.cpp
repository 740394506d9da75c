/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/frontend/observable.hpp"

#include <algorithm>

namespace qdmi::frontend {

auto DiagonalObservable::add(const double coefficient,
                             std::set<std::string> zSupport)
    -> DiagonalObservable& {
  terms.push_back({coefficient, std::move(zSupport)});
  return *this;
}

auto expectationFromCounts(const Histogram& counts,
                           const DiagonalObservable& observable,
                           const std::vector<std::string>& keyOrder)
    -> Result<double> {
  using R = Result<double>;

  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < keyOrder.size(); ++i) {
    position[keyOrder[i]] = i;
  }
  for (const auto& term : observable.terms) {
    for (const auto& key : term.zSupport) {
      if (!position.contains(key)) {
        return R::failure(StatusCode::InvalidArgument,
                          "support key " + key + " is not measured");
      }
    }
  }

  std::int64_t total = 0;
  double weighted = 0.0;
  for (const auto& [bits, count] : counts) {
    if (bits.size() != keyOrder.size()) {
      return R::failure(StatusCode::InvalidArgument,
                        "bitstring width does not match the key order");
    }
    double value = 0.0;
    for (const auto& term : observable.terms) {
      double product = term.coefficient;
      for (const auto& key : term.zSupport) {
        product *= bits[position[key]] == '1' ? -1.0 : 1.0;
      }
      value += product;
    }
    weighted += value * static_cast<double>(count);
    total += count;
  }
  if (total == 0) {
    return R::failure(StatusCode::InvalidArgument, "empty histogram");
  }
  return R::success(weighted / static_cast<double>(total));
}

} // namespace qdmi::frontend
