/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief The tagged property value and the two-call sizing protocol.
 * @details Property retrieval is a two-step pattern: a first call with a null
 * destination and capacity zero reports the required buffer size, a second
 * call with a large-enough buffer receives the encoded bytes. Fixed-size
 * values can be fetched in a single call when the capacity already matches.
 */

#pragma once

#include "qdmi/core/result.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qdmi {

/// An ordered pair of site indices, e.g. one coupling-map edge.
using SitePair = std::pair<std::uint32_t, std::uint32_t>;

/**
 * @brief Tagged value carried through the query and result interfaces.
 * @details Alternatives: UTF-8 text, signed 64-bit integer, 64-bit float,
 * ordered text list, ordered list of site-index pairs.
 */
using PropertyValue = std::variant<std::string, std::int64_t, double,
                                   std::vector<std::string>,
                                   std::vector<SitePair>>;

/**
 * @brief Deterministic byte encoding of a property value.
 *
 * Text encodes as its UTF-8 bytes, text lists comma-joined without a trailing
 * comma, integers and reals as their canonical decimal text, and pair lists
 * as semicolon-joined "a-b" entries. Identical values always produce
 * byte-identical encodings.
 */
[[nodiscard]] auto encodeValue(const PropertyValue& value) -> std::string;

/**
 * @brief Serves one step of the two-call sizing protocol.
 *
 * With capacity zero the call only reports the encoded size and writes
 * nothing. With capacity at least the encoded size it writes exactly that
 * many bytes to @p destination. An undersized non-zero capacity or a null
 * destination with non-zero capacity is rejected without any partial write.
 */
[[nodiscard]] auto sizedRead(const PropertyValue& value, std::size_t capacity,
                             char* destination) -> SizedRead;

/// Convenience wrapper: full two-call read into an owned string.
[[nodiscard]] auto readToString(const PropertyValue& value) -> std::string;

} // namespace qdmi
