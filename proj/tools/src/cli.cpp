// Copyright 2026 The glsim Authors
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


#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "builders.hpp"
#include "glsim_cli/cli.hpp"

namespace glsim::cli {

namespace {

/// A subcommand option that, when given, overwrites one config key.
struct Override {
  CLI::Option* option;
  std::function<void(Json&)> apply;
};

class Overrides {
 public:
  explicit Overrides(CLI::App* sub) : sub_(sub) {}

  template <typename T>
  Overrides& value(const std::string& flag, const std::string& key, const std::string& help) {
    auto v = std::make_shared<T>();
    add(sub_->add_option(flag, *v, help), [v, key](Json& c) { c[key] = *v; });
    return *this;
  }

  Overrides& choice(const std::string& flag, const std::string& key, const std::vector<std::string>& options,
                    const std::string& help) {
    auto v = std::make_shared<std::string>();
    add(sub_->add_option(flag, *v, help)->check(CLI::IsMember(options)), [v, key](Json& c) { c[key] = *v; });
    return *this;
  }

  Overrides& time(const std::string& help) {
    auto v = std::make_shared<double>();
    add(sub_->add_option("--time", *v, help), [v](Json& c) {
      c.erase("times");
      c["time"] = *v;
    });
    return *this;
  }

  Overrides& flag(const std::string& flag, const std::string& key, const std::string& help) {
    add(sub_->add_flag(flag, help), [key](Json& c) { c[key] = true; });
    return *this;
  }

  Overrides& numbers(const std::string& flag, const std::string& key, const std::string& help) {
    auto v = std::make_shared<std::vector<double>>();
    add(sub_->add_option(flag, *v, help)->delimiter(','), [v, key](Json& c) { c[key] = *v; });
    return *this;
  }

  void apply(Json& config) const {
    for (const Override& o : list_) {
      if (o.option->count() > 0) {
        o.apply(config);
      }
    }
  }

 private:
  void add(CLI::Option* option, std::function<void(Json&)> apply) { list_.push_back({option, std::move(apply)}); }

  CLI::App* sub_;
  std::vector<Override> list_;
};

void write_outputs(const RunResult& r, const std::string& dir, std::ostream& out) {
  if (!dir.empty()) {
    const std::filesystem::path root(dir);
    std::filesystem::create_directories(root);
    {
      std::ofstream f(root / "report.json");
      f << r.report.dump(2) << '\n';
      require(static_cast<bool>(f), "cannot write " + (root / "report.json").string());
    }
    out << "wrote " << (root / "report.json").string() << '\n';
    for (const Series& s : r.series) {
      const std::filesystem::path path = root / (s.name + ".csv");
      std::ofstream f(path);
      write_series_csv(f, s);
      require(static_cast<bool>(f), "cannot write " + path.string());
      out << "wrote " << path.string() << '\n';
    }
    return;
  }
  if (r.series.empty()) {
    out << r.report.dump(2) << '\n';
    return;
  }
  for (const Series& s : r.series) {
    write_series_csv(out, s);
  }
  // Footer: a CSV comment line carrying the compact report.
  out << "# " << r.report.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical simulation of geometrically local dynamics"};
  app.name("glsim");
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out_dir;
  app.add_option("--config", config_path, "Scenario config (JSON)");
  CLI::Option* seed_opt = app.add_option("--seed", seed, "RNG seed (default 0xC0FFEE)");
  app.add_option("--threads", threads, "Worker cap (default: all cores)");
  app.add_option("--out", out_dir, "Directory for report.json and CSV series");

  std::vector<std::pair<CLI::App*, Overrides>> subs;
  auto sub = [&](const std::string& name, const std::string& help) -> Overrides& {
    CLI::App* s = app.add_subcommand(name, help);
    subs.emplace_back(s, Overrides(s));
    return subs.back().second;
  };
  // Reserve so references returned by `sub` stay valid.
  subs.reserve(kScenarios.size());

  sub("estimate", "Estimate v^dagger P(A) u or v^dagger e^{iAt} u")
      .time("Evolution time")
      .value<double>("--eps", "eps", "Additive error")
      .value<double>("--delta", "delta", "Failure probability")
      .value<double>("--zeta", "zeta", "Sampler perturbation of v");
  sub("sample", "Sample from |e^{At} psi|^2")
      .value<std::int64_t>("--count", "count", "Number of samples")
      .value<double>("--time", "time", "Evolution time")
      .value<double>("--eps", "eps", "Polynomial error")
      .value<double>("--delta", "delta", "Failure probability per sample")
      .value<double>("--zeta", "zeta", "Sampler perturbation of psi");
  sub("oscillator", "Estimate v^dagger psi(t) for coupled oscillators")
      .time("Evolution time")
      .value<double>("--eps", "eps", "Additive error")
      .value<double>("--delta", "delta", "Failure probability");
  sub("energy", "Estimate kinetic and potential energy fractions")
      .time("Evolution time")
      .value<double>("--eps", "eps", "Additive error")
      .value<double>("--delta", "delta", "Failure probability");
  sub("pde", "Wave, advection and Schrodinger front-ends")
      .choice("--equation", "equation", {"wave", "advection", "schrodinger"}, "Equation")
      .value<std::int64_t>("--dims", "dims", "Spatial dimension")
      .value<std::int64_t>("--sites", "n_per_axis", "Sites per axis")
      .value<double>("--spacing", "spacing", "Grid spacing")
      .numbers("--velocity", "velocity", "Advection velocity, comma separated")
      .value<double>("--wave-speed", "c", "Wave speed")
      .value<std::string>("--potential-file", "potential_file", "Potential CSV (index,value)")
      .choice("--boundary", "boundary", {"open", "periodic"}, "Boundary condition")
      .time("Evolution time")
      .value<double>("--eps", "eps", "Additive error");
  sub("embed", "Clock-Hamiltonian circuit embeddings")
      .choice("--mode", "mode", {"short", "long"}, "Construction")
      .value<std::string>("--circuit", "circuit", "Circuit file")
      .flag("--scan-readout", "scan_readout", "Scan for a readout time")
      .value<double>("--t-max", "t_max", "Scan horizon")
      .value<std::int64_t>("--grid-points", "grid_points", "Scan grid size")
      .value<std::int64_t>("--input", "input", "Input basis state")
      .value<double>("--time", "time", "Simulation time (default: t_star)");
  sub("verify", "Dense-equivalence self checks")
      .choice("--suite", "suite", {"lightcone", "oracle", "all"}, "Suite")
      .value<std::int64_t>("--instances", "instances", "Random instances")
      .value<std::int64_t>("--max-degree", "max_degree", "Largest power or degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitSchema;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Json config = Json::object();
  if (!config_path.empty()) {
    try {
      config = Json::parse(read_text_file(config_path));
    } catch (const std::exception& e) {
      err << "glsim: schema error: cannot load config: " << e.what() << '\n';
      return kExitSchema;
    }
    if (!config.is_object()) {
      err << "glsim: schema error: config must be a JSON object\n";
      return kExitSchema;
    }
    if (config.contains("scenario") && config["scenario"] != name) {
      err << "glsim: schema error: config is for scenario " << config["scenario"].dump() << ", not \"" << name
          << "\"\n";
      return kExitSchema;
    }
  }
  Json resolved{{"scenario", name}};
  for (const auto& item : config.items()) {
    if (item.key() != "scenario") {
      resolved[item.key()] = item.value();
    }
  }
  if (seed_opt->count() > 0) {
    resolved["seed"] = seed;
  }
  for (const auto& [s, overrides] : subs) {
    if (s->parsed()) {
      overrides.apply(resolved);
    }
  }

  const RunResult r = run_scenario(resolved, RunOptions{threads});
  if (r.report.contains("error")) {
    err << "glsim: " << r.report["error"]["kind"].get<std::string>()
        << " error: " << r.report["error"]["message"].get<std::string>() << '\n';
  }
  try {
    write_outputs(r, out_dir, out);
  } catch (const std::exception& e) {
    err << "glsim: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return r.exit_code;
}

}  // namespace glsim::cli
