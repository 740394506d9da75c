/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "qdmi/launcher/launcher.hpp"

#include "qdmi/mock/http_server.hpp"
#include "support/doctest_shim.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qdmi;
using namespace qdmi::launcher;

namespace {

auto writeFile(const std::string& name, const std::string& content)
    -> std::string {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

auto startServer() -> std::unique_ptr<mock::MockServer> {
  mock::ServiceConfig config;
  config.seed = 3;
  auto server = std::make_unique<mock::MockServer>(config);
  REQUIRE(server->start() > 0);
  return server;
}

auto siteConfigText(const std::string& baseUrl, const std::string& authFile)
    -> std::string {
  nlohmann::json config;
  config["partitions"] = {{{"name", "q"},
                           {"base_url", baseUrl},
                           {"auth_file", authFile},
                           {"allowed_backends", {"mock-5q"}},
                           {"default_alias", "mock-5q"}}};
  return config.dump();
}

auto readWholeFile(const std::string& path) -> std::string {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace

TEST_CASE("site config parsing validates structure") {
  SUBCASE("one-partition config loads") {
    const auto path = writeFile(
        "site_ok.json",
        R"({"partitions":[{"name":"q","base_url":"http://x","auth_file":"/a"}]})");
    const auto config = loadSiteConfig(path);
    REQUIRE(config.ok());
    CHECK(config.value().partitions.size() == 1);
    CHECK(config.value().partitions.at("q").baseUrl == "http://x");
  }
  SUBCASE("duplicate partitions are rejected") {
    const auto path = writeFile(
        "site_dup.json",
        R"({"partitions":[{"name":"q","base_url":"http://x","auth_file":"/a"},
                          {"name":"q","base_url":"http://y","auth_file":"/b"}]})");
    CHECK_FALSE(loadSiteConfig(path).ok());
  }
  SUBCASE("missing base_url is rejected") {
    const auto path = writeFile(
        "site_nourl.json",
        R"({"partitions":[{"name":"q","auth_file":"/a"}]})");
    const auto config = loadSiteConfig(path);
    CHECK_FALSE(config.ok());
    CHECK(config.message().find("base_url") != std::string::npos);
  }
  SUBCASE("malformed JSON reports parse context") {
    const auto path = writeFile("site_bad.json", "{partitions: oops");
    const auto config = loadSiteConfig(path);
    CHECK_FALSE(config.ok());
    CHECK_FALSE(config.message().empty());
  }
  SUBCASE("missing file is an error") {
    CHECK_FALSE(loadSiteConfig("/nonexistent/site.json").ok());
  }
}

TEST_CASE("policy resolution follows allow lists and defaults") {
  SiteConfig config;
  PartitionConfig restricted;
  restricted.baseUrl = "http://x";
  restricted.authFile = "/a";
  restricted.allowedBackends = std::vector<std::string>{"mock-5q"};
  restricted.defaultAlias = "mock-5q";
  config.partitions["q"] = restricted;

  PartitionConfig open;
  open.baseUrl = "http://y";
  open.authFile = "/b";
  config.partitions["open"] = open;

  LaunchRequest request;
  request.partition = "q";

  SUBCASE("allowed request passes") {
    request.requestedBackendAlias = "mock-5q";
    const auto alias = enforcePolicy(config, request);
    REQUIRE(alias.ok());
    CHECK(alias.value() == std::optional<std::string>{"mock-5q"});
  }
  SUBCASE("disallowed request is rejected") {
    request.requestedBackendAlias = "mock-6q";
    const auto alias = enforcePolicy(config, request);
    CHECK_FALSE(alias.ok());
    CHECK(alias.message() == "backend not permitted on partition");
  }
  SUBCASE("no request falls back to the partition default") {
    const auto alias = enforcePolicy(config, request);
    REQUIRE(alias.ok());
    CHECK(alias.value() == std::optional<std::string>{"mock-5q"});
  }
  SUBCASE("no request and no default means no alias") {
    request.partition = "open";
    const auto alias = enforcePolicy(config, request);
    REQUIRE(alias.ok());
    CHECK_FALSE(alias.value().has_value());
  }
  SUBCASE("absent allow list allows any backend") {
    request.partition = "open";
    request.requestedBackendAlias = "anything";
    const auto alias = enforcePolicy(config, request);
    REQUIRE(alias.ok());
    CHECK(alias.value() == std::optional<std::string>{"anything"});
  }
  SUBCASE("unknown partition is an error") {
    request.partition = "nope";
    CHECK_FALSE(enforcePolicy(config, request).ok());
  }
}

TEST_CASE("credential validation performs exactly one discovery request") {
  auto server = startServer();
  const auto goodAuth = writeFile("launcher_auth_ok.json",
                                  R"({"access_token":"test-token"})");
  const auto badAuth = writeFile("launcher_auth_bad.json",
                                 R"({"access_token":"revoked"})");

  SUBCASE("valid token, one request") {
    const auto before =
        server->service().requestCounts().body["total"].get<int>();
    CHECK(validateCredentials(server->baseUrl(), goodAuth).ok());
    CHECK(server->service().requestCounts().body["total"].get<int>() ==
          before + 1);
  }
  SUBCASE("revoked token is rejected") {
    const auto result = validateCredentials(server->baseUrl(), badAuth);
    CHECK_FALSE(result.ok());
    CHECK(result.status() == StatusCode::PermissionDenied);
  }
  SUBCASE("missing auth file is rejected without any request") {
    const auto before =
        server->service().requestCounts().body["total"].get<int>();
    CHECK_FALSE(
        validateCredentials(server->baseUrl(), "/nonexistent/auth.json")
            .ok());
    CHECK(server->service().requestCounts().body["total"].get<int>() ==
          before);
  }
}

TEST_CASE("inject_and_exec adds exactly the QDMI variables") {
  PartitionConfig partition;
  partition.baseUrl = "http://127.0.0.1:9999";
  partition.authFile = "/tmp/auth.json";

  const auto outPath =
      (std::filesystem::temp_directory_path() / "launcher_env_out.txt")
          .string();
  LaunchRequest request;
  request.partition = "q";
  request.inheritedEnv = {{"KEEP_ME", "yes"}, {"PATH", "/usr/bin:/bin"}};
  request.command = {"/bin/sh", "-c", "env > " + outPath};

  const auto outcome = injectAndExec(request, partition,
                                     std::optional<std::string>{"mock-5q"});
  REQUIRE(outcome.spawned);
  CHECK(outcome.exitStatus == 0);
  const auto envDump = readWholeFile(outPath);
  CHECK(envDump.find("QDMI_BASE_URL=http://127.0.0.1:9999\n") !=
        std::string::npos);
  CHECK(envDump.find("QDMI_AUTH_FILE=/tmp/auth.json\n") != std::string::npos);
  CHECK(envDump.find("QDMI_QC_ALIAS=mock-5q\n") != std::string::npos);
  CHECK(envDump.find("KEEP_ME=yes\n") != std::string::npos);

  // symmetric difference against the inherited env is exactly the injected
  // set; /bin/sh itself adds bookkeeping (PWD, SHLVL) that the launcher
  // does not control, so those are excluded
  std::map<std::string, std::string> observed;
  std::istringstream dump(envDump);
  std::string line;
  while (std::getline(dump, line)) {
    const auto eq = line.find('=');
    const auto key = line.substr(0, eq);
    if (key == "PWD" || key == "SHLVL" || key == "OLDPWD" || key == "_") {
      continue;
    }
    observed[key] = line.substr(eq + 1);
  }
  auto expected = request.inheritedEnv;
  expected["QDMI_BASE_URL"] = partition.baseUrl;
  expected["QDMI_AUTH_FILE"] = partition.authFile;
  expected["QDMI_QC_ALIAS"] = "mock-5q";
  CHECK(observed == expected);
}

TEST_CASE("child exit status passes through unmodified") {
  PartitionConfig partition;
  partition.baseUrl = "http://x";
  partition.authFile = "/a";
  LaunchRequest request;
  request.command = {"/bin/sh", "-c", "exit 3"};
  const auto outcome = injectAndExec(request, partition, std::nullopt);
  REQUIRE(outcome.spawned);
  CHECK(outcome.exitStatus == 3);
}

TEST_CASE("spawn failure is reported distinctly from child failure") {
  PartitionConfig partition;
  partition.baseUrl = "http://x";
  partition.authFile = "/a";
  LaunchRequest request;
  request.command = {"/nonexistent/binary"};
  const auto outcome = injectAndExec(request, partition, std::nullopt);
  CHECK_FALSE(outcome.spawned);
  CHECK_FALSE(outcome.error.empty());
}

TEST_CASE("the full launch pipeline fails closed") {
  auto server = startServer();
  const auto goodAuth = writeFile("launch_auth_good.json",
                                  R"({"access_token":"test-token"})");
  const auto badAuth = writeFile("launch_auth_revoked.json",
                                 R"({"access_token":"nope"})");
  const auto marker =
      (std::filesystem::temp_directory_path() / "launcher_marker").string();
  std::filesystem::remove(marker);

  LaunchRequest request;
  request.partition = "q";
  request.command = {"/bin/sh", "-c", "touch " + marker + "; exit 0"};
  request.inheritedEnv = currentEnvironment();

  SUBCASE("happy path executes the command") {
    const auto configPath = writeFile(
        "launch_site_ok.json", siteConfigText(server->baseUrl(), goodAuth));
    CHECK(runLaunch(configPath, request) == 0);
    CHECK(std::filesystem::exists(marker));
  }
  SUBCASE("disallowed backend rejects before execution (exit 65)") {
    const auto configPath = writeFile(
        "launch_site_p.json", siteConfigText(server->baseUrl(), goodAuth));
    request.requestedBackendAlias = "mock-6q";
    CHECK(runLaunch(configPath, request) == kExitPolicyRejection);
    CHECK_FALSE(std::filesystem::exists(marker));
  }
  SUBCASE("revoked token rejects before execution (exit 66)") {
    const auto configPath = writeFile(
        "launch_site_bad.json", siteConfigText(server->baseUrl(), badAuth));
    CHECK(runLaunch(configPath, request) == kExitCredentialRejection);
    CHECK_FALSE(std::filesystem::exists(marker));
  }
  SUBCASE("config errors exit 64") {
    CHECK(runLaunch("/nonexistent/site.json", request) == kExitConfigError);
    CHECK_FALSE(std::filesystem::exists(marker));
  }
  SUBCASE("spawn failure exits 70 after all checks pass") {
    const auto configPath = writeFile(
        "launch_site_spawn.json", siteConfigText(server->baseUrl(), goodAuth));
    request.command = {"/nonexistent/binary"};
    CHECK(runLaunch(configPath, request) == kExitSpawnFailure);
  }

  std::filesystem::remove(marker);
}
