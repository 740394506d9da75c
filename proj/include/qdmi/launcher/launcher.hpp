/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Scheduler-prolog style launcher: resolve, validate, inject, exec.
 * @details Reads a site-level configuration, resolves endpoint and
 * credentials for the requested partition, enforces backend access policy,
 * verifies the token against the backend before anything runs, exports the
 * QDMI_* variables and executes the user command. Any rejection happens
 * before a single user-command instruction executes.
 */

#pragma once

#include "qdmi/core/result.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qdmi::launcher {

/// Launcher exit codes (child exit codes pass through unchanged).
inline constexpr int kExitConfigError = 64;
inline constexpr int kExitPolicyRejection = 65;
inline constexpr int kExitCredentialRejection = 66;
inline constexpr int kExitSpawnFailure = 70;

struct PartitionConfig {
  std::string baseUrl;
  std::string authFile;
  std::optional<std::vector<std::string>> allowedBackends;
  std::optional<std::string> defaultAlias;
};

struct SiteConfig {
  std::map<std::string, PartitionConfig> partitions;
};

struct LaunchRequest {
  std::string partition;
  std::vector<std::string> command;
  std::optional<std::string> requestedBackendAlias;
  std::map<std::string, std::string> inheritedEnv;
};

/// Parses and validates the site configuration file.
[[nodiscard]] auto loadSiteConfig(const std::string& path)
    -> Result<SiteConfig>;

/**
 * @brief Resolves the backend alias the launch may use.
 *
 * A requested alias must be in the partition's allow list (no list means
 * allow all); without a request the partition default applies; without
 * either, no alias is injected and first-available semantics apply
 * downstream.
 * @return the resolved alias, or nullopt for "no alias"; a policy violation
 * is an error.
 */
[[nodiscard]] auto enforcePolicy(const SiteConfig& config,
                                 const LaunchRequest& request)
    -> Result<std::optional<std::string>>;

/// Reads the auth file and issues one discovery request; ok on 2xx.
[[nodiscard]] auto validateCredentials(const std::string& baseUrl,
                                       const std::string& authFile)
    -> Result<bool>;

struct SpawnOutcome {
  bool spawned = false;
  int exitStatus = 0;
  std::string error;
};

/**
 * @brief Executes the command with the injected environment.
 *
 * The child environment is exactly the inherited environment plus
 * QDMI_BASE_URL, QDMI_AUTH_FILE and, when resolved, QDMI_QC_ALIAS; nothing
 * else is added, removed or altered. The child's exit status is returned
 * unmodified; spawn failures are reported distinctly.
 */
[[nodiscard]] auto injectAndExec(const LaunchRequest& request,
                                 const PartitionConfig& partition,
                                 const std::optional<std::string>& alias)
    -> SpawnOutcome;

/// Full prolog pipeline; returns the process exit code for the launcher.
[[nodiscard]] auto runLaunch(const std::string& configPath,
                             const LaunchRequest& request,
                             std::string* errorOut = nullptr) -> int;

/// Snapshot of the calling process environment.
[[nodiscard]] auto currentEnvironment() -> std::map<std::string, std::string>;

} // namespace qdmi::launcher
