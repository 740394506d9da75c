/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/plugin/token.hpp"

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qdmi::plugin {

namespace {

auto readAuthFile(const std::string& path) -> Result<std::string> {
  using R = Result<std::string>;
  std::ifstream in(path);
  if (!in.is_open()) {
    return R::failure(StatusCode::InvalidArgument,
                      "cannot read auth file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json node;
  try {
    node = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    return R::failure(StatusCode::InvalidArgument,
                      "malformed auth file " + path + ": " + e.what());
  }
  if (!node.is_object() || !node.contains("access_token") ||
      !node["access_token"].is_string()) {
    return R::failure(StatusCode::InvalidArgument,
                      "auth file requires a string \"access_token\"");
  }
  auto token = node["access_token"].get<std::string>();
  if (token.empty()) {
    return R::failure(StatusCode::InvalidArgument,
                      "auth file token is empty");
  }
  return R::success(std::move(token));
}

} // namespace

auto processEnvironment() -> Environment {
  Environment env;
  for (const auto* name : {"QDMI_BASE_URL", "QDMI_TOKEN", "QDMI_AUTH_FILE",
                           "QDMI_QC_ID", "QDMI_QC_ALIAS"}) {
    if (const char* value = std::getenv(name)) {
      env.emplace(name, value);
    }
  }
  return env;
}

auto resolveToken(const std::map<SessionParameterKey, std::string>& parameters,
                  const Environment& environment) -> Result<TokenSource> {
  using R = Result<TokenSource>;

  if (const auto it = parameters.find(SessionParameterKey::Token);
      it != parameters.end() && !it->second.empty()) {
    return R::success({TokenOrigin::ExplicitToken, it->second});
  }
  if (const auto it = parameters.find(SessionParameterKey::AuthFile);
      it != parameters.end() && !it->second.empty()) {
    auto token = readAuthFile(it->second);
    if (!token.ok()) {
      return R::failure(token.status(), token.message());
    }
    return R::success({TokenOrigin::AuthFile, std::move(token.value())});
  }
  if (const auto it = environment.find("QDMI_TOKEN");
      it != environment.end() && !it->second.empty()) {
    return R::success({TokenOrigin::EnvToken, it->second});
  }
  if (const auto it = environment.find("QDMI_AUTH_FILE");
      it != environment.end() && !it->second.empty()) {
    auto token = readAuthFile(it->second);
    if (!token.ok()) {
      return R::failure(token.status(), token.message());
    }
    return R::success({TokenOrigin::EnvAuthFile, std::move(token.value())});
  }
  return R::failure(StatusCode::InvalidArgument,
                    "no credential source: set TOKEN, AUTHFILE, QDMI_TOKEN "
                    "or QDMI_AUTH_FILE");
}

} // namespace qdmi::plugin
