// Copyright 2026 The reslve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// reslve: command-line front end.
//
//   reslve <command> --config FILE [options]
//
// Exit codes: 0 success, 1 input error, 2 external-service error,
// 3 internal invariant violation.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reslve/commands.h"
#include "reslve/config.h"
#include "reslve/errors.h"

namespace {

int Fail(const std::string& message, reslve::ExitCode code) {
  std::cerr << "reslve: " << message << "\n";
  return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entity disambiguation ranked by a user's knowledge-base interests"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("-c,--config", config_path, "pipeline configuration (JSON)")
      ->required()
      ->check(CLI::ExistingFile);

  std::string mode_name, out;
  std::string user, platform_name, utterances;

  auto* ingest = app.add_subcommand("ingest", "collect snapshot files from the configured services");
  ingest->add_option("--mode", mode_name, "replay, record or live (overrides config)");
  ingest->add_option("-o,--out", out, "output directory");

  auto* build = app.add_subcommand("build-model", "build and store a user's interest model");
  build->add_option("-u,--user", user, "knowledge-base username, or social with --platform")
      ->required();
  build->add_option("-p,--platform", platform_name, "treat --user as a social account");
  build->add_option("-o,--out", out, "model file");

  auto* resolve = app.add_subcommand("resolve", "rank the candidates of a user's entities");
  resolve->add_option("-u,--user", user, "social username")->required();
  resolve->add_option("-p,--platform", platform_name, "twitter, youtube, flickr or generic")
      ->required();
  resolve->add_option("--utterances", utterances, "utterance corpus (default from config)");
  resolve->add_option("-o,--out", out, "ranking file (JSON lines)");

  auto* evaluate = app.add_subcommand("evaluate", "precision grid, sweep and corpus statistics");
  evaluate->add_option("-o,--out", out, "output directory");

  auto* sweep = app.add_subcommand("sweep-alpha", "P@1 for alpha = 0, 0.1, ..., 1");
  sweep->add_option("-o,--out", out, "output directory");

  auto* stats = app.add_subcommand("stats", "ambiguity and interest-coverage statistics");
  stats->add_option("-o,--out", out, "statistics file");

  auto* bridge = app.add_subcommand("bridge", "match social usernames to knowledge-base users");
  bridge->add_option("--mode", mode_name, "casefold or strict (overrides config)");
  bridge->add_option("-o,--out", out, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(reslve::ExitCode::kInputError);
  }

  try {
    reslve::PipelineConfig config = reslve::LoadConfig(config_path);
    std::string summary;
    if (*ingest) {
      reslve::IngestArgs args;
      if (!mode_name.empty()) args.mode = reslve::ParseIngestMode(mode_name);
      args.out_dir = out;
      summary = reslve::RunIngest(config, args);
    } else if (*build) {
      reslve::BuildModelArgs args;
      args.user = user;
      if (!platform_name.empty()) args.platform = reslve::ParsePlatform(platform_name);
      args.out = out;
      summary = reslve::RunBuildModel(config, args);
    } else if (*resolve) {
      reslve::ResolveArgs args;
      args.user = user;
      args.platform = reslve::ParsePlatform(platform_name);
      args.utterances = utterances;
      args.out = out;
      summary = reslve::RunResolve(config, args);
    } else if (*evaluate) {
      summary = reslve::RunEvaluate(config, {out});
    } else if (*sweep) {
      summary = reslve::RunSweepAlpha(config, {out});
    } else if (*stats) {
      summary = reslve::RunStats(config, {out});
    } else if (*bridge) {
      reslve::BridgeArgs args;
      if (!mode_name.empty()) args.mode = reslve::ParseMatchMode(mode_name);
      args.out = out;
      summary = reslve::RunBridge(config, args);
    }
    std::cout << summary;
    return 0;
  } catch (const reslve::Error& e) {
    return Fail(e.what(), e.exit_code());
  } catch (const std::filesystem::filesystem_error& e) {
    return Fail(e.what(), reslve::ExitCode::kInputError);
  } catch (const std::exception& e) {
    return Fail(std::string("internal error: ") + e.what(), reslve::ExitCode::kInternalError);
  }
}
