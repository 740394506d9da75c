/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/workflow/demo.hpp"

#include "qdmi/frontend/primitives.hpp"
#include "qdmi/launcher/launcher.hpp"
#include "qdmi/mock/http_server.hpp"
#include "qdmi/plugin/session.hpp"
#include "qdmi/workflow/qsci.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>

namespace qdmi::workflow {

namespace {

using nlohmann::json;

constexpr std::string_view kDemoToken = "demo-token";

auto writeFile(const std::filesystem::path& path, const std::string& content)
    -> bool {
  std::ofstream out(path);
  if (!out.is_open()) {
    return false;
  }
  out << content;
  return out.good();
}

auto chainFixture(const std::string& alias, const std::size_t nQubits)
    -> mock::BackendFixture {
  mock::BackendFixture fixture;
  fixture.alias = alias;
  fixture.availability = "online";
  fixture.supportsCalibrationJobs = false;
  for (std::size_t i = 1; i <= nQubits; ++i) {
    fixture.qubitNames.push_back("QB" + std::to_string(i));
  }
  for (std::size_t i = 0; i + 1 < nQubits; ++i) {
    fixture.connectivity.emplace_back(fixture.qubitNames[i],
                                      fixture.qubitNames[i + 1]);
  }
  fixture.supportedFormats = {"IQMJSON"};
  return fixture;
}

/// Launcher-dispatched sampling: request file in, child runs
/// submit/wait/results through the CLI, counts file out.
auto offloadSample(const frontend::CircuitSpec& circuit,
                   const DemoConfig& config,
                   const std::filesystem::path& workDir,
                   const std::string& siteConfigPath, const std::string& alias)
    -> Result<frontend::Histogram> {
  using R = Result<frontend::Histogram>;
  const auto requestPath = (workDir / "qsci-request.json").string();
  const auto responsePath = (workDir / "qsci-response.json").string();
  const auto scriptPath = (workDir / "qsci-sample.sh").string();

  if (const auto written = writeHandoffRequest(
          requestPath, circuit.toProgramText(), config.shots, config.seed);
      !written.ok()) {
    return R::failure(written.status(), written.message());
  }
  const std::string script = "#!/bin/sh\n"
                             "set -e\n"
                             "cli=\"$1\"; req=\"$2\"; resp=\"$3\"\n"
                             "jid=$(\"$cli\" submit --request \"$req\")\n"
                             "\"$cli\" wait \"$jid\" --timeout 120 "
                             ">/dev/null\n"
                             "\"$cli\" results \"$jid\" --key HIST --json "
                             "> \"$resp\"\n";
  if (!writeFile(scriptPath, script)) {
    return R::failure(StatusCode::Fatal, "cannot write the handoff script");
  }

  launcher::LaunchRequest request;
  request.partition = "quantum";
  request.requestedBackendAlias = alias;
  request.command = {"/bin/sh", scriptPath, config.cliPath, requestPath,
                     responsePath};
  request.inheritedEnv = launcher::currentEnvironment();
  // the child must see only the injected endpoint configuration
  request.inheritedEnv.erase("QDMI_BASE_URL");
  request.inheritedEnv.erase("QDMI_TOKEN");
  request.inheritedEnv.erase("QDMI_AUTH_FILE");
  request.inheritedEnv.erase("QDMI_QC_ID");
  request.inheritedEnv.erase("QDMI_QC_ALIAS");

  std::string launchError;
  const auto exitCode = launcher::runLaunch(siteConfigPath, request,
                                            &launchError);
  if (exitCode != 0) {
    return R::failure(StatusCode::Fatal,
                      "launcher exit " + std::to_string(exitCode) +
                          (launchError.empty() ? "" : ": " + launchError));
  }
  return readHandoffResponse(responsePath);
}

} // namespace

auto writeHandoffRequest(const std::string& path,
                         const std::string& circuitJsonText,
                         const std::int64_t shots, const std::uint64_t seed)
    -> Result<bool> {
  using R = Result<bool>;
  json request;
  try {
    request["circuit"] = json::parse(circuitJsonText);
  } catch (const json::parse_error& e) {
    return R::failure(StatusCode::InvalidArgument, e.what());
  }
  request["shots"] = shots;
  request["seed"] = seed;
  if (!writeFile(path, request.dump())) {
    return R::failure(StatusCode::Fatal, "cannot write " + path);
  }
  return R::success(true);
}

auto readHandoffResponse(const std::string& path)
    -> Result<frontend::Histogram> {
  using R = Result<frontend::Histogram>;
  std::ifstream in(path);
  if (!in.is_open()) {
    return R::failure(StatusCode::NotFound, "cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    const auto node = json::parse(buffer.str());
    frontend::Histogram histogram;
    for (const auto& [bits, count] : node.at("counts").items()) {
      histogram[bits] = count.get<std::int64_t>();
    }
    return R::success(std::move(histogram));
  } catch (const json::exception& e) {
    return R::failure(StatusCode::Protocol,
                      std::string{"malformed handoff response: "} + e.what());
  }
}

auto runQsciDemo(const DemoConfig& config) -> Result<DemoOutcome> {
  using R = Result<DemoOutcome>;

  auto hamiltonian = config.hamiltonian;
  if (hamiltonian.terms.empty()) {
    hamiltonian = transverseFieldIsing(3, 1.0, 0.5);
  }
  if (const auto valid = hamiltonian.validate(); !valid.ok()) {
    return R::failure(valid.status(), "problem: " + valid.message());
  }
  const auto n = hamiltonian.nQubits;

  auto grid = config.grid;
  if (grid.empty()) {
    grid = {0.0, std::numbers::pi / 4, std::numbers::pi / 2,
            3 * std::numbers::pi / 4, std::numbers::pi};
  }

  // Identical fixtures behind both aliases: the simulator toggle changes
  // the selected target, never the topology or the seeded artifacts.
  mock::ServiceConfig serviceConfig;
  serviceConfig.seed = config.seed;
  serviceConfig.tokens = {std::string{kDemoToken}};
  serviceConfig.stageDurationMs = 0;
  serviceConfig.backends = {
      chainFixture(std::string{kDemoHardwareAlias}, n),
      chainFixture(std::string{kDemoSimulatorAlias}, n)};
  mock::MockServer server(serviceConfig);
  if (server.start() <= 0) {
    return R::failure(StatusCode::Fatal, "cannot start the demo backend");
  }
  const auto alias = std::string{config.simulator ? kDemoSimulatorAlias
                                                  : kDemoHardwareAlias};

  // Scratch space for credentials, site config and the sampling handoff.
  std::error_code fsError;
  auto workDir = std::filesystem::path{config.workDir};
  bool ownWorkDir = false;
  if (workDir.empty()) {
    workDir = std::filesystem::temp_directory_path() /
              ("qsci-demo-" + std::to_string(::getpid()) + "-" +
               std::to_string(config.seed) + (config.offload ? "-o" : "-l") +
               (config.simulator ? "s" : "h") + "-k" +
               std::to_string(config.k));
    ownWorkDir = true;
  }
  std::filesystem::create_directories(workDir, fsError);
  const auto authPath = (workDir / "auth.json").string();
  if (!writeFile(authPath, R"({"access_token":")" +
                               std::string{kDemoToken} + "\"}")) {
    return R::failure(StatusCode::Fatal, "cannot write " + authPath);
  }
  json site;
  site["partitions"] = {{{"name", "quantum"},
                         {"base_url", server.baseUrl()},
                         {"auth_file", authPath},
                         {"allowed_backends",
                          {std::string{kDemoHardwareAlias},
                           std::string{kDemoSimulatorAlias}}}}};
  const auto sitePath = (workDir / "site.json").string();
  if (!writeFile(sitePath, site.dump())) {
    return R::failure(StatusCode::Fatal, "cannot write " + sitePath);
  }

  plugin::PluginConfig pluginConfig;
  pluginConfig.environment = plugin::Environment{};
  plugin::Session session(std::move(pluginConfig));
  (void)session.setParameter(SessionParameterKey::BaseUrl, server.baseUrl());
  (void)session.setParameter(SessionParameterKey::Token,
                             std::string{kDemoToken});
  (void)session.setParameter(SessionParameterKey::Custom2, alias);
  if (const auto initialized = session.init();
      initialized != StatusCode::Success) {
    return R::failure(initialized, "session: " + session.lastError());
  }

  QsciSetup setup;
  for (std::size_t i = 1; i <= n; ++i) {
    setup.qubitNames.push_back("QB" + std::to_string(i));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    setup.edges.emplace_back(setup.qubitNames[i], setup.qubitNames[i + 1]);
  }
  setup.grid = grid;
  setup.k = config.k;

  QsciStages stages;
  stages.estimate = [&](const frontend::CircuitSpec& circuit,
                        const frontend::DiagonalObservable& observable)
      -> Result<double> {
    auto estimated = frontend::runEstimator(session, circuit, observable,
                                            config.shots, {});
    if (!estimated.ok()) {
      return Result<double>::failure(estimated.status(), estimated.message());
    }
    return Result<double>::success(estimated.value().value);
  };
  if (config.offload) {
    if (config.cliPath.empty()) {
      return R::failure(StatusCode::InvalidArgument,
                        "offload mode requires the CLI executable path");
    }
    stages.sample = [&](const frontend::CircuitSpec& circuit) {
      return offloadSample(circuit, config, workDir, sitePath, alias);
    };
  } else {
    stages.sample = [&](const frontend::CircuitSpec& circuit)
        -> Result<frontend::Histogram> {
      auto outcome = frontend::runSampler(session, {circuit}, config.shots,
                                          {});
      if (!outcome.ok()) {
        return Result<frontend::Histogram>::failure(outcome.status,
                                                    outcome.message);
      }
      return Result<frontend::Histogram>::success(
          std::move(outcome.histograms.front()));
    };
  }

  auto pipeline = runQsci(hamiltonian, setup, stages);
  if (!pipeline.ok()) {
    return R::failure(pipeline.status(), pipeline.message());
  }
  DemoOutcome outcome;
  outcome.energy = pipeline.value().energy;
  outcome.basis = std::move(pipeline.value().basis);
  outcome.params = std::move(pipeline.value().params);
  outcome.histogram = std::move(pipeline.value().histogram);
  outcome.backendAlias = alias;

  (void)session.free();
  server.stop();
  if (ownWorkDir) {
    std::filesystem::remove_all(workDir, fsError);
  }
  return R::success(std::move(outcome));
}

} // namespace qdmi::workflow
