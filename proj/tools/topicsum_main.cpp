// Copyright 2026 The topicsum Authors.
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

#include <CLI11.hpp>
#include <cstdio>
#include <spdlog/spdlog.h>

#include "topicsum/config.hpp"
#include "topicsum/error.hpp"
#include "topicsum/io.hpp"
#include "topicsum/kernels.hpp"
#include "topicsum/pipeline.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string corpus;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::size_t> limit;
  std::string metrics;
  std::vector<std::string> overrides;
  bool verbose = false;
  bool quiet = false;
};

topicsum::PipelineConfig resolve(const Options& o) {
  topicsum::PipelineConfig c =
      o.config_path.empty() ? topicsum::PipelineConfig{} : topicsum::load_config(o.config_path);
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw topicsum::ConfigError("--set expects key=value, got '" + kv + "'");
    c.set(topicsum::trim(std::string_view(kv).substr(0, eq)), std::string_view(kv).substr(eq + 1));
  }
  if (!o.corpus.empty()) c.corpus = o.corpus;
  if (!o.output.empty()) c.output = o.output;
  if (o.seed) c.seed = *o.seed;
  if (o.workers) c.workers = *o.workers;
  if (o.limit) c.limit = *o.limit;
  if (!o.metrics.empty()) c.metrics = topicsum::parse_metrics(o.metrics);
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topic-clustered extractive summarization of how-to articles"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-c,--config", o.config_path, "INI config file")->check(CLI::ExistingFile);
  app.add_option("--corpus", o.corpus, "WikiHow-style CSV (paths.corpus)");
  app.add_option("-o,--output", o.output, "Run directory (paths.output)");
  app.add_option("--seed", o.seed, "Global seed (run.seed)");
  app.add_option("-j,--workers", o.workers, "Worker threads (run.workers)");
  app.add_option("--limit", o.limit, "Read at most N CSV rows (ingest.limit)");
  app.add_option("--metrics", o.metrics, "ROUGE metrics, e.g. r1,r2,rl (rouge.metrics)");
  app.add_option("--set", o.overrides, "Override any config key: section.key=value");
  app.add_flag("-v,--verbose", o.verbose, "Debug logging");
  app.add_flag("-q,--quiet", o.quiet, "Warnings and errors only");

  using topicsum::Stage;
  const std::pair<const char*, Stage> stages[] = {
      {"ingest", Stage::kIngest},       {"clean", Stage::kClean},
      {"train", Stage::kTrain},         {"summarize", Stage::kSummarize},
      {"evaluate", Stage::kEvaluate},   {"report", Stage::kReport},
  };
  std::optional<Stage> selected;
  for (const auto& [name, stage] : stages) {
    app.add_subcommand(name, std::string("Run the ") + name + " stage")
        ->callback([&selected, stage = stage] { selected = stage; });
  }
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage, resuming after complete ones");
  auto* show = app.add_subcommand("config", "Print the effective configuration");
  auto* info = app.add_subcommand("kernels", "List the SIMD kernel variants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  spdlog::set_level(o.verbose ? spdlog::level::debug
                              : o.quiet ? spdlog::level::warn : spdlog::level::info);

  try {
    if (info->parsed()) {
      for (auto isa : topicsum::kernels::available()) {
        std::printf("%s%s\n", std::string(topicsum::kernels::isa_name(isa)).c_str(),
                    isa == topicsum::kernels::active().isa ? " (active)" : "");
      }
      return 0;
    }
    const topicsum::PipelineConfig config = resolve(o);
    if (show->parsed()) {
      std::fputs(config.to_ini().c_str(), stdout);
      return 0;
    }
    topicsum::Pipeline p(config);
    topicsum::write_file(config.output / "config.ini", config.to_ini());
    if (pipeline->parsed()) {
      p.run_all();
      std::fputs(topicsum::read_file(config.output / "report.txt").c_str(), stdout);
    } else if (selected) {
      p.run_stage(*selected);
      if (*selected == Stage::kReport) {
        std::fputs(topicsum::read_file(config.output / "report.txt").c_str(), stdout);
      }
    }
    return 0;
  } catch (const topicsum::ConfigError& e) {
    spdlog::error("config: {}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
}
