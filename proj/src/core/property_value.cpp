/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/core/property_value.hpp"

#include <charconv>
#include <cstring>
#include <system_error>

namespace qdmi {

namespace {

/// Shortest text that round-trips the value; endian-free by construction.
auto canonicalDecimal(const double value) -> std::string {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    return "0";
  }
  return {buf, ptr};
}

auto canonicalDecimal(const std::int64_t value) -> std::string {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    return "0";
  }
  return {buf, ptr};
}

struct Encoder {
  auto operator()(const std::string& text) const -> std::string {
    return text;
  }
  auto operator()(const std::int64_t value) const -> std::string {
    return canonicalDecimal(value);
  }
  auto operator()(const double value) const -> std::string {
    return canonicalDecimal(value);
  }
  auto operator()(const std::vector<std::string>& list) const -> std::string {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += list[i];
    }
    return out;
  }
  auto operator()(const std::vector<SitePair>& pairs) const -> std::string {
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i > 0) {
        out += ';';
      }
      out += canonicalDecimal(static_cast<std::int64_t>(pairs[i].first));
      out += '-';
      out += canonicalDecimal(static_cast<std::int64_t>(pairs[i].second));
    }
    return out;
  }
};

} // namespace

auto encodeValue(const PropertyValue& value) -> std::string {
  return std::visit(Encoder{}, value);
}

auto sizedRead(const PropertyValue& value, const std::size_t capacity,
               char* destination) -> SizedRead {
  const auto encoded = encodeValue(value);
  const auto required = encoded.size();
  if (capacity == 0) {
    // Pure sizing call; nothing is written even if a buffer was passed.
    return {required, StatusCode::Success};
  }
  if (destination == nullptr) {
    return {required, StatusCode::InvalidArgument};
  }
  if (capacity < required) {
    return {required, StatusCode::InvalidArgument};
  }
  std::memcpy(destination, encoded.data(), required);
  return {required, StatusCode::Success};
}

auto readToString(const PropertyValue& value) -> std::string {
  const auto sizing = sizedRead(value, 0, nullptr);
  std::string out(sizing.size, '\0');
  if (sizing.size > 0) {
    (void)sizedRead(value, out.size(), out.data());
  }
  return out;
}

} // namespace qdmi
