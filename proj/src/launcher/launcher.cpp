/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/launcher/launcher.hpp"

#include "qdmi/plugin/routes.hpp"
#include "qdmi/plugin/token.hpp"
#include "qdmi/plugin/transport.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

extern char** environ;

namespace qdmi::launcher {

namespace {

using nlohmann::json;

auto parsePartition(const json& node, const std::string& name)
    -> Result<PartitionConfig> {
  using R = Result<PartitionConfig>;
  PartitionConfig partition;
  if (!node.contains("base_url") || !node["base_url"].is_string() ||
      node["base_url"].get<std::string>().empty()) {
    return R::failure(StatusCode::InvalidArgument,
                      "partition \"" + name +
                          "\" requires a non-empty base_url");
  }
  partition.baseUrl = node["base_url"].get<std::string>();
  if (!node.contains("auth_file") || !node["auth_file"].is_string()) {
    return R::failure(StatusCode::InvalidArgument,
                      "partition \"" + name + "\" requires an auth_file");
  }
  partition.authFile = node["auth_file"].get<std::string>();
  if (node.contains("allowed_backends")) {
    partition.allowedBackends =
        node["allowed_backends"].get<std::vector<std::string>>();
  }
  if (node.contains("default_alias")) {
    partition.defaultAlias = node["default_alias"].get<std::string>();
  }
  return R::success(std::move(partition));
}

} // namespace

auto loadSiteConfig(const std::string& path) -> Result<SiteConfig> {
  using R = Result<SiteConfig>;
  std::ifstream in(path);
  if (!in.is_open()) {
    return R::failure(StatusCode::NotFound,
                      "cannot open site config " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json node;
  try {
    node = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    return R::failure(StatusCode::InvalidArgument,
                      std::string{"site config: "} + e.what());
  }
  if (!node.is_object() || !node.contains("partitions") ||
      !node["partitions"].is_array()) {
    return R::failure(StatusCode::InvalidArgument,
                      "site config requires a \"partitions\" array");
  }
  SiteConfig config;
  for (const auto& entry : node["partitions"]) {
    if (!entry.contains("name") || !entry["name"].is_string()) {
      return R::failure(StatusCode::InvalidArgument,
                        "every partition requires a string name");
    }
    const auto name = entry["name"].get<std::string>();
    auto partition = parsePartition(entry, name);
    if (!partition.ok()) {
      return R::failure(partition.status(), partition.message());
    }
    if (!config.partitions.emplace(name, std::move(partition.value()))
             .second) {
      return R::failure(StatusCode::InvalidArgument,
                        "duplicate partition \"" + name + "\"");
    }
  }
  return R::success(std::move(config));
}

auto enforcePolicy(const SiteConfig& config, const LaunchRequest& request)
    -> Result<std::optional<std::string>> {
  using R = Result<std::optional<std::string>>;
  const auto it = config.partitions.find(request.partition);
  if (it == config.partitions.end()) {
    return R::failure(StatusCode::NotFound,
                      "unknown partition \"" + request.partition + "\"");
  }
  const auto& partition = it->second;
  if (request.requestedBackendAlias.has_value()) {
    const auto& alias = *request.requestedBackendAlias;
    if (partition.allowedBackends.has_value() &&
        std::find(partition.allowedBackends->begin(),
                  partition.allowedBackends->end(),
                  alias) == partition.allowedBackends->end()) {
      return R::failure(StatusCode::PermissionDenied,
                        "backend not permitted on partition");
    }
    return R::success(alias);
  }
  if (partition.defaultAlias.has_value()) {
    return R::success(*partition.defaultAlias);
  }
  return R::success(std::nullopt);
}

auto validateCredentials(const std::string& baseUrl,
                         const std::string& authFile) -> Result<bool> {
  using R = Result<bool>;
  std::map<SessionParameterKey, std::string> parameters{
      {SessionParameterKey::AuthFile, authFile}};
  const auto token = plugin::resolveToken(parameters, {});
  if (!token.ok()) {
    return R::failure(token.status(), token.message());
  }
  const plugin::Transport transport(baseUrl);
  const plugin::RouteTable routes;
  const auto response = transport.get(routes.discovery(),
                                      token.value().token);
  if (!response.ok()) {
    return R::failure(plugin::statusFromHttp(response),
                      response.httpStatus == 401
                          ? "token rejected by the backend"
                          : "backend discovery failed");
  }
  return R::success(true);
}

auto injectAndExec(const LaunchRequest& request,
                   const PartitionConfig& partition,
                   const std::optional<std::string>& alias) -> SpawnOutcome {
  SpawnOutcome outcome;
  if (request.command.empty()) {
    outcome.error = "empty command";
    return outcome;
  }

  auto env = request.inheritedEnv;
  env["QDMI_BASE_URL"] = partition.baseUrl;
  env["QDMI_AUTH_FILE"] = partition.authFile;
  if (alias.has_value()) {
    env["QDMI_QC_ALIAS"] = *alias;
  }

  std::vector<std::string> envStrings;
  envStrings.reserve(env.size());
  for (const auto& [key, value] : env) {
    envStrings.push_back(key + "=" + value);
  }
  std::vector<char*> envp;
  envp.reserve(envStrings.size() + 1);
  for (auto& entry : envStrings) {
    envp.push_back(entry.data());
  }
  envp.push_back(nullptr);

  std::vector<std::string> argStrings = request.command;
  std::vector<char*> argv;
  argv.reserve(argStrings.size() + 1);
  for (auto& arg : argStrings) {
    argv.push_back(arg.data());
  }
  argv.push_back(nullptr);

  // exec-failure reporting channel; closed on successful exec
  int pipeFds[2];
  if (pipe(pipeFds) != 0) {
    outcome.error = std::strerror(errno);
    return outcome;
  }

  const auto pid = fork();
  if (pid < 0) {
    close(pipeFds[0]);
    close(pipeFds[1]);
    outcome.error = std::strerror(errno);
    return outcome;
  }
  if (pid == 0) {
    close(pipeFds[0]);
    fcntl(pipeFds[1], F_SETFD, FD_CLOEXEC);
    execvpe(argv[0], argv.data(), envp.data());
    const int code = errno;
    (void)!write(pipeFds[1], &code, sizeof(code));
    _exit(127);
  }

  close(pipeFds[1]);
  int execErrno = 0;
  const auto bytes = read(pipeFds[0], &execErrno, sizeof(execErrno));
  close(pipeFds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  if (bytes > 0) {
    outcome.error = std::string{"cannot execute "} + request.command.front() +
                    ": " + std::strerror(execErrno);
    return outcome;
  }
  outcome.spawned = true;
  if (WIFEXITED(status)) {
    outcome.exitStatus = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    outcome.exitStatus = 128 + WTERMSIG(status);
  }
  return outcome;
}

auto runLaunch(const std::string& configPath, const LaunchRequest& request,
               std::string* errorOut) -> int {
  const auto report = [&](const std::string& message) {
    if (errorOut != nullptr) {
      *errorOut = message;
    }
  };
  const auto config = loadSiteConfig(configPath);
  if (!config.ok()) {
    report(config.message());
    return kExitConfigError;
  }
  const auto alias = enforcePolicy(config.value(), request);
  if (!alias.ok()) {
    report(alias.message());
    return alias.status() == StatusCode::NotFound ? kExitConfigError
                                                  : kExitPolicyRejection;
  }
  const auto& partition = config.value().partitions.at(request.partition);
  const auto credentials =
      validateCredentials(partition.baseUrl, partition.authFile);
  if (!credentials.ok()) {
    report(credentials.message());
    return kExitCredentialRejection;
  }
  const auto outcome = injectAndExec(request, partition, alias.value());
  if (!outcome.spawned) {
    report(outcome.error);
    return kExitSpawnFailure;
  }
  return outcome.exitStatus;
}

auto currentEnvironment() -> std::map<std::string, std::string> {
  std::map<std::string, std::string> env;
  for (char** entry = environ; *entry != nullptr; ++entry) {
    const std::string text{*entry};
    const auto eq = text.find('=');
    if (eq != std::string::npos) {
      env.emplace(text.substr(0, eq), text.substr(eq + 1));
    }
  }
  return env;
}

} // namespace qdmi::launcher
