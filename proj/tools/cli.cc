// Copyright 2026 The sinkeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

#include "sinkeq/counterexample.h"
#include "sinkeq/covering.h"
#include "sinkeq/dynamics.h"
#include "sinkeq/error.h"
#include "sinkeq/game.h"
#include "sinkeq/game_io.h"
#include "sinkeq/instance_io.h"
#include "sinkeq/monte_carlo.h"
#include "sinkeq/radio.h"
#include "sinkeq/report.h"
#include "sinkeq/sink.h"
#include "sinkeq/smoothness.h"

namespace sinkeq::cli {
namespace {

// Games up to this many profiles get per-profile slack in smoothness reports.
constexpr ProfileIndex kSlackListLimit = 4096;

struct Options {
  std::string input;
  std::string instance;
  std::string mode = "best";
  double tie_tol = 0.0;
  std::string format;  // empty: per-command default
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string save_game;

  int trials = 1000;
  int threads = 1;
  std::optional<double> lambda;
  std::optional<double> mu;
  bool common_interest = false;

  int n = 0;  // 0: generator default
  double alpha = 1.0;
  int regions = 3;
  double bias = 0.01;
  double scale = 0.01;
  int max_cover = 1;
};

int ExitCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidAction:
    case ErrorCode::kInvalidGame:
    case ErrorCode::kInvalidParameters:
    case ErrorCode::kSchema:
      return kExitInvalid;
    case ErrorCode::kDegenerateWelfare:
    case ErrorCode::kNoEquilibrium:
    case ErrorCode::kNotSmooth:
      return kExitUndefined;
    case ErrorCode::kNumericalFailure:
    case ErrorCode::kWitnessNotFound:
      return kExitNumerical;
  }
  return kExitNumerical;
}

std::string Num(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string Num(const std::optional<double>& x) { return x ? Num(*x) : ""; }

template <typename T>
std::string Joined(const std::vector<T>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ';';
    out += std::to_string(values[k]);
  }
  return out;
}

// The game under analysis plus where it came from.
struct LoadedGame {
  NormalFormGame game;
  Json source;
  std::optional<std::uint64_t> seed;
};

LoadedGame Load(const Options& o) {
  if (!o.input.empty()) {
    if (o.seed) {
      throw Error(ErrorCode::kInvalidParameters,
                  "--seed applies to --instance sources only");
    }
    return {LoadGame(o.input), Json{{"input", o.input}}, std::nullopt};
  }
  Instance instance = LoadInstance(o.instance);
  std::visit(
      [&](auto& spec) {
        if (o.seed) spec.seed = *o.seed;
      },
      instance);
  // A generated radio instance already holds its estimates, which depend on
  // the seed: regenerate when the seed was overridden.
  if (auto* radio = std::get_if<RadioInstance>(&instance); radio && o.seed) {
    radio->estimates =
        SampleRadioEstimates(radio->weights, radio->alpha, *o.seed);
  }
  const std::uint64_t seed =
      std::visit([](const auto& spec) { return spec.seed; }, instance);
  Json source;
  source["instance"] = o.instance;
  source["spec"] = InstanceToJson(instance);
  return {MakeGame(instance), std::move(source), seed};
}

Json GameSummary(const NormalFormGame& game) {
  Json j;
  j["num_players"] = game.num_players();
  j["action_counts"] = std::vector<int>(game.action_counts().begin(),
                                        game.action_counts().end());
  j["num_profiles"] = game.num_profiles();
  j["common_interest"] = game.is_common_interest();
  const SingletonCheck check = CheckSingletonBestResponse(game);
  j["singleton_best_response"] = check.singleton;
  return j;
}

Json BaseRequest(const std::string& command) {
  Json r;
  r["command"] = command;
  return r;
}

void AddGameRequest(Json& r, const Options& o, const LoadedGame& loaded) {
  r["source"] = loaded.source;
  r["mode"] = o.mode;
  r["tie_tol"] = o.tie_tol;
  r["seed"] = loaded.seed ? Json(*loaded.seed) : Json(nullptr);
}

std::string SinkCsv(const SinkingResult& result, double optimal_welfare) {
  std::string csv =
      "sink,size,expected_welfare,welfare_ratio,stationary_residual,"
      "price_of_sinking,support\n";
  for (std::size_t k = 0; k < result.equilibria.size(); ++k) {
    const SinkEquilibrium& eq = result.equilibria[k];
    csv += std::to_string(k) + ',' + std::to_string(eq.support.size()) + ',' +
           Num(eq.expected_welfare) + ',' +
           Num(eq.expected_welfare / optimal_welfare) + ',' +
           Num(eq.residual) + ',' + Num(result.ratio) + ',' +
           Joined(eq.support) + '\n';
  }
  return csv;
}

// Smoothness summary for reports; null plus the reason when no certificate
// exists.
Json SmoothnessSummary(const NormalFormGame& game, bool common_interest) {
  try {
    const SmoothnessParameters p = BestSmoothness(game, common_interest);
    return Json{{"lambda", p.lambda}, {"mu", p.mu}, {"ratio", p.ratio}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotSmooth) throw;
    return Json{{"error", std::string(ErrorCodeName(e.code()))}};
  }
}

Json BoundsOrNull(const NormalFormGame& game) {
  try {
    return BoundReportJson(game, TheoremBounds(game));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotSmooth) throw;
    return Json{{"error", std::string(ErrorCodeName(e.code()))}};
  }
}

std::string Analyze(const Options& o) {
  const LoadedGame loaded = Load(o);
  const NormalFormGame& game = loaded.game;
  if (!o.save_game.empty()) SaveGame(game, o.save_game);
  const ResponseMode mode = ParseResponseMode(o.mode);
  const SinkingResult result = PriceOfSinking(game, mode, o.tie_tol);
  if (o.format == "csv") {
    return SinkCsv(result, OptimalProfile(game).welfare);
  }

  Json report;
  Json request = BaseRequest("analyze");
  AddGameRequest(request, o, loaded);
  report["request"] = std::move(request);
  report["game"] = GameSummary(game);
  report["sink_equilibria"] = SinkReportJson(game, result);
  report["nash"] = NashReportJson(game);
  report["smoothness"] = SmoothnessSummary(game, false);
  report["bounds"] = BoundsOrNull(game);
  if (mode == ResponseMode::kBetter && report["smoothness"].contains("mu")) {
    report["better_response_witness"] = WitnessJson(
        game, BetterResponseWitness(game, report["smoothness"]["lambda"],
                                    report["smoothness"]["mu"]));
  }
  return report.dump(2) + "\n";
}

std::string Smoothness(const Options& o) {
  const LoadedGame loaded = Load(o);
  const NormalFormGame& game = loaded.game;
  if (o.lambda.has_value() != o.mu.has_value()) {
    throw Error(ErrorCode::kInvalidParameters,
                "--lambda and --mu must be given together");
  }
  Json params;
  SmoothnessCertificate cert;
  if (o.lambda) {
    cert = CheckSmoothness(game, *o.lambda, *o.mu, o.common_interest);
    params = {{"lambda", *o.lambda}, {"mu", *o.mu}, {"source", "given"}};
  } else {
    const SmoothnessParameters p = BestSmoothness(game, o.common_interest);
    cert = CheckSmoothness(game, p.lambda, p.mu, o.common_interest);
    params = {{"lambda", p.lambda},
              {"mu", p.mu},
              {"ratio", p.ratio},
              {"source", "best"}};
  }
  if (o.format == "csv") {
    std::string csv = "profile,coords,welfare,slack\n";
    for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
      csv += std::to_string(a) + ',' + Joined(IndexToJoint(game, a).coords) +
             ',' + Num(game.welfare(a)) + ',' + Num(cert.slack[a]) + '\n';
    }
    return csv;
  }
  Json report;
  Json request = BaseRequest("smoothness");
  request["source"] = loaded.source;
  request["seed"] = loaded.seed ? Json(*loaded.seed) : Json(nullptr);
  request["common_interest"] = o.common_interest;
  request["lambda"] = o.lambda ? Json(*o.lambda) : Json(nullptr);
  request["mu"] = o.mu ? Json(*o.mu) : Json(nullptr);
  report["request"] = std::move(request);
  report["game"] = GameSummary(game);
  report["parameters"] = std::move(params);
  report["certificate"] =
      CertificateJson(game, cert, game.num_profiles() <= kSlackListLimit);
  report["nash"] = NashReportJson(game);
  return report.dump(2) + "\n";
}

std::string Bounds(const Options& o) {
  const LoadedGame loaded = Load(o);
  const NormalFormGame& game = loaded.game;
  const BoundReport bounds = TheoremBounds(game);
  if (o.format == "csv") {
    const auto& m = bounds.misalignment;
    return "pos_exact,n,lambda_c,mu_c,singleton_br,beta_arith,beta_geo,"
           "bound_arith,bound_geo,bound_geo_conservative,satisfied_arith,"
           "satisfied_geo\n" +
           Num(bounds.pos_exact) + ',' + std::to_string(bounds.n) + ',' +
           Num(bounds.lambda_c) + ',' + Num(bounds.mu_c) + ',' +
           (bounds.singleton_br ? "true" : "false") + ',' +
           Num(m.arithmetic.beta) + ',' + Num(m.geometric.beta) + ',' +
           Num(bounds.bound_arith) + ',' + Num(bounds.bound_geo) + ',' +
           Num(bounds.bound_geo_conservative) + ',' +
           (bounds.bound_arith ? (bounds.satisfied_arith ? "true" : "false")
                               : "") +
           ',' +
           (bounds.bound_geo ? (bounds.satisfied_geo ? "true" : "false")
                             : "") +
           '\n';
  }
  Json report;
  Json request = BaseRequest("bounds");
  request["source"] = loaded.source;
  request["seed"] = loaded.seed ? Json(*loaded.seed) : Json(nullptr);
  report["request"] = std::move(request);
  report["game"] = GameSummary(game);
  report["bounds"] = BoundReportJson(game, bounds);
  return report.dump(2) + "\n";
}

std::string Counterexample(const Options& o) {
  if (!o.lambda || !o.mu) {
    throw Error(ErrorCode::kInvalidParameters,
                "counterexample needs --lambda and --mu");
  }
  const NormalFormGame game = MakeCounterexample(*o.lambda, *o.mu);
  if (!o.save_game.empty()) SaveGame(game, o.save_game);
  const ResponseMode mode = ParseResponseMode(o.mode);
  const SinkingResult result = PriceOfSinking(game, mode, o.tie_tol);
  if (o.format == "csv") {
    return SinkCsv(result, OptimalProfile(game).welfare);
  }
  Json report;
  Json request = BaseRequest("counterexample");
  request["lambda"] = *o.lambda;
  request["mu"] = *o.mu;
  request["mode"] = o.mode;
  request["tie_tol"] = o.tie_tol;
  request["seed"] = nullptr;
  report["request"] = std::move(request);
  report["game"] = GameToJson(game);
  Json analysis;
  analysis["certificate"] = CertificateJson(
      game, CheckSmoothness(game, *o.lambda, *o.mu, false), true);
  analysis["sink_equilibria"] = SinkReportJson(game, result);
  analysis["nash"] = NashReportJson(game);
  report["analysis"] = std::move(analysis);
  return report.dump(2) + "\n";
}

std::string MonteCarlo(const std::string& command, const Options& o) {
  TrialSpec spec;
  Json params;
  if (command == "covering-mc") {
    CoveringTrialSpec c;
    if (o.n > 0) c.num_agents = o.n;
    c.num_regions = o.regions;
    c.bias = o.bias;
    c.scale = o.scale;
    c.max_cover = o.max_cover;
    params = {{"n", c.num_agents}, {"regions", c.num_regions},
              {"bias", c.bias},    {"scale", c.scale},
              {"max_cover", c.max_cover}, {"value", c.value}};
    spec = c;
  } else {
    RadioTrialSpec r;
    if (o.n > 0) r.num_agents = o.n;
    r.alpha = o.alpha;
    params = {{"n", r.num_agents}, {"alpha", r.alpha}};
    spec = r;
  }
  const std::uint64_t seed = o.seed.value_or(0);
  const MonteCarloSummary summary =
      RunMonteCarlo(spec, o.trials, seed, o.threads);

  if (o.format == "csv") {
    std::string csv = "trial,seed,pos,bound,violation\n";
    for (std::size_t t = 0; t < summary.per_trial.size(); ++t) {
      const TrialResult& r = summary.per_trial[t];
      csv += std::to_string(t) + ',' + std::to_string(r.seed) + ',' +
             Num(r.pos) + ',' + Num(summary.bound) + ',' +
             (r.violation ? "true" : "false") + '\n';
    }
    return csv;
  }
  Json report;
  Json request = BaseRequest(command);
  request["generator"] = std::move(params);
  request["trials"] = o.trials;
  request["seed"] = seed;
  report["request"] = std::move(request);
  Json result = MonteCarloJson(summary);
  if (const auto* c = std::get_if<CoveringTrialSpec>(&spec)) {
    result["beta_phi"] =
        c->scale > 0.0 ? Json(BetaPhi(c->bias, c->scale, c->num_regions))
                       : Json(nullptr);
    result["mean_within_3se_of_bound"] =
        summary.mean_pos >= summary.bound - 3.0 * summary.std_err;
  }
  Json violating = Json::array();
  for (std::size_t t = 0; t < summary.per_trial.size(); ++t) {
    const TrialResult& r = summary.per_trial[t];
    if (r.violation) {
      violating.push_back({{"trial", t}, {"seed", r.seed}, {"pos", r.pos}});
    }
  }
  result["violating_trials"] = std::move(violating);
  report["summary"] = std::move(result);
  return report.dump(2) + "\n";
}

std::string ExportKernel(const Options& o) {
  const LoadedGame loaded = Load(o);
  const TransitionKernel kernel =
      BuildKernel(loaded.game, ParseResponseMode(o.mode), o.tie_tol);
  if (o.format == "csv") {
    std::ostringstream csv;
    WriteKernelCsv(kernel, csv);
    return csv.str();
  }
  Json report;
  Json request = BaseRequest("export-kernel");
  AddGameRequest(request, o, loaded);
  report["request"] = std::move(request);
  report["num_states"] = kernel.num_states();
  Json edges = Json::array();
  for (ProfileIndex s = 0; s < kernel.num_states(); ++s) {
    for (const Transition& t : kernel.row(s)) {
      edges.push_back({s, t.target, t.probability});
    }
  }
  report["transitions"] = std::move(edges);
  return report.dump(2) + "\n";
}

// Writes through a sibling temporary so readers never see a partial file.
void WriteAtomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kSchema, "cannot write " + temp.string());
    out << text;
    if (!out.flush()) {
      throw Error(ErrorCode::kSchema, "cannot write " + temp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw Error(ErrorCode::kSchema, "cannot write " + path);
  }
}

void AddSourceOptions(CLI::App* cmd, Options& o) {
  auto* input = cmd->add_option("--input", o.input, "game JSON file")
                    ->check(CLI::ExistingFile);
  auto* instance =
      cmd->add_option("--instance", o.instance,
                      "covering or radio instance JSON file")
          ->check(CLI::ExistingFile);
  input->excludes(instance);
  cmd->add_option("--seed", o.seed, "override the instance seed");
}

void AddModeOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "response dynamics")
      ->check(CLI::IsMember({"best", "better"}));
  cmd->add_option("--tie-tol", o.tie_tol, "best-response tie tolerance")
      ->check(CLI::NonNegativeNumber);
}

void AddOutputOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "report format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", o.output,
                  "write the report to this file instead of stdout");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Sink equilibria and price of sinking for normal-form games",
               "sinkeq"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand(
      "analyze", "sink equilibria, price of sinking, Nash equilibria, PoA");
  AddSourceOptions(analyze, o);
  AddModeOptions(analyze, o);
  analyze->add_option("--save-game", o.save_game,
                      "also write the analysed game as JSON");

  auto* smoothness = app.add_subcommand(
      "smoothness", "best or given (lambda, mu) and its certificate");
  AddSourceOptions(smoothness, o);
  smoothness->add_option("--lambda", o.lambda)->check(CLI::NonNegativeNumber);
  smoothness->add_option("--mu", o.mu)->check(CLI::NonNegativeNumber);
  smoothness->add_flag("--common-interest", o.common_interest,
                       "replace every utility by the welfare");

  auto* bounds = app.add_subcommand(
      "bounds", "misalignment and price-of-sinking lower bounds");
  AddSourceOptions(bounds, o);

  auto* counterexample = app.add_subcommand(
      "counterexample", "smooth game whose price of sinking is zero");
  counterexample->add_option("--lambda", o.lambda)->required();
  counterexample->add_option("--mu", o.mu)->required();
  AddModeOptions(counterexample, o);
  counterexample->add_option("--save-game", o.save_game,
                             "also write the game as JSON");

  auto* covering_mc = app.add_subcommand(
      "covering-mc", "Monte Carlo over noisy covering games");
  covering_mc->add_option("--n", o.n, "agents (default 2)")
      ->check(CLI::PositiveNumber);
  covering_mc->add_option("--regions", o.regions)->check(CLI::PositiveNumber);
  covering_mc->add_option("--bias", o.bias, "estimate bias c");
  covering_mc->add_option("--scale", o.scale, "relative noise scale d")
      ->check(CLI::NonNegativeNumber);
  covering_mc->add_option("--max-cover", o.max_cover,
                          "largest region set one agent may cover")
      ->check(CLI::PositiveNumber);

  auto* radio_mc = app.add_subcommand(
      "radio-mc", "Monte Carlo over two-channel radio games");
  radio_mc->add_option("--n", o.n, "agents (default 3)")
      ->check(CLI::Range(1, 24));
  radio_mc->add_option("--alpha", o.alpha, "estimate accuracy in (0, 1]");

  for (auto* mc : {covering_mc, radio_mc}) {
    mc->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
    mc->add_option("--seed", o.seed, "master seed (default 0)");
    mc->add_option("--threads", o.threads)->check(CLI::Range(1, 256));
  }

  auto* export_kernel = app.add_subcommand(
      "export-kernel", "transition kernel as an edge list");
  AddSourceOptions(export_kernel, o);
  AddModeOptions(export_kernel, o);

  for (auto* cmd : {analyze, smoothness, bounds, counterexample, covering_mc,
                    radio_mc, export_kernel}) {
    AddOutputOptions(cmd, o);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    if (o.format.empty()) o.format = name == "export-kernel" ? "csv" : "json";
    for (auto* sourced : {analyze, smoothness, bounds, export_kernel}) {
      if (cmd == sourced && o.input.empty() && o.instance.empty()) {
        throw Error(ErrorCode::kInvalidParameters,
                    "one of --input or --instance is required");
      }
    }
    std::string report;
    if (name == "analyze") {
      report = Analyze(o);
    } else if (name == "smoothness") {
      report = Smoothness(o);
    } else if (name == "bounds") {
      report = Bounds(o);
    } else if (name == "counterexample") {
      report = Counterexample(o);
    } else if (name == "covering-mc" || name == "radio-mc") {
      report = MonteCarlo(name, o);
    } else {
      report = ExportKernel(o);
    }
    if (o.output.empty()) {
      out << report << std::flush;
    } else {
      WriteAtomically(o.output, report);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "sinkeq " << name << ": " << ErrorCodeName(e.code()) << ": "
        << e.what() << '\n';
    return ExitCode(e.code());
  } catch (const std::exception& e) {
    err << "sinkeq " << name << ": " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace sinkeq::cli
