/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Bearer-token resolution from session parameters and the
 * environment.
 */

#pragma once

#include "qdmi/core/keys.hpp"
#include "qdmi/core/result.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace qdmi::plugin {

/// Where the active bearer token came from.
enum class TokenOrigin : std::uint8_t {
  ExplicitToken,
  AuthFile,
  EnvToken,
  EnvAuthFile,
};

struct TokenSource {
  TokenOrigin origin = TokenOrigin::ExplicitToken;
  std::string token; // never empty
};

using Environment = std::map<std::string, std::string>;

/// Snapshot of the QDMI_* variables from the process environment.
[[nodiscard]] auto processEnvironment() -> Environment;

/**
 * @brief Resolves credentials with fixed precedence.
 *
 * TOKEN parameter, then AUTHFILE parameter, then QDMI_TOKEN, then
 * QDMI_AUTH_FILE. Auth files are JSON objects with a required string field
 * "access_token"; unknown fields are ignored.
 */
[[nodiscard]] auto resolveToken(
    const std::map<SessionParameterKey, std::string>& parameters,
    const Environment& environment) -> Result<TokenSource>;

} // namespace qdmi::plugin
