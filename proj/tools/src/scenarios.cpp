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


#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "builders.hpp"
#include "glsim/dense.hpp"
#include "glsim/embeddings.hpp"
#include "glsim/estimate.hpp"
#include "glsim/oscillators.hpp"
#include "glsim/pde.hpp"
#include "glsim/polyapprox.hpp"
#include "glsim/sampling.hpp"
#include "glsim_cli/cli.hpp"
#include "scenarios.hpp"

namespace glsim::cli {

namespace {

struct Context {
  Context(const Json& c, std::uint64_t s, unsigned threads) : config(c), seed(s) { options.threads = threads; }

  const Json& config;
  std::uint64_t seed;
  EstimateOptions options;
  Json outputs = Json::object();
  Json cost = Json::object();
  std::vector<Series> series;
  int exit_code = kExitOk;
};

Json cost_json(const CostSnapshot& c) {
  return Json{{"queries", c.queries}, {"samples", c.samples}, {"norm_reads", c.norm_reads}};
}

Json estimate_json(double t, const EstimateReport& r, std::optional<Complex> truth) {
  Json j{{"time", t}, {"value", complex_to_json(r.value)}};
  if (truth) {
    j["truth"] = complex_to_json(*truth);
    j["abs_error"] = std::abs(r.value - *truth);
  }
  j["samples_used"] = r.samples_used;
  j["batch_size"] = r.batch_size;
  j["repetitions"] = r.repetitions;
  return j;
}

Series estimate_series(const Json& estimates) {
  Series s{"series", {"t", "re", "im", "truth_re", "truth_im"}, {}};
  for (const Json& e : estimates) {
    const Json truth = e.contains("truth") ? e["truth"] : Json::array({nullptr, nullptr});
    s.rows.push_back({e["time"], e["value"][0], e["value"][1], truth[0], truth[1]});
  }
  return s;
}

Complex dense_dot(const DenseVector& v, const DenseVector& w) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += std::conj(v[i]) * w[i];
  }
  return acc;
}

VectorOracle maybe_perturbed(const VectorOracle& v, double zeta) {
  if (zeta == 0.0) {
    return v;
  }
  require(v.dimension() <= dense_cap(), "zeta perturbations need a vector within the dense cap");
  return perturbed_sq_access(dense_from_vector(v), zeta);
}

Eigen::MatrixXcd dense_oscillator_h(const OscillatorSystem& sys) {
  const Site n = sys.sites();
  const Site ext = sys.extended_dimension();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(ext, ext);
  std::vector<MatrixEntry> row;
  for (Site i = 0; i < n; ++i) {
    sys.b_row(i, row);
    for (const MatrixEntry& e : row) {
      h(i, e.index) = e.value;
      h(e.index, i) = std::conj(e.value);
    }
  }
  return h;
}

/// psi(t) = e^{iHt} psi(0), or nullopt beyond the dense cap.
std::optional<DenseVector> dense_oscillator_state(const Context& ctx, const OscillatorSystem& sys,
                                                  const OscillatorState& state, double t) {
  if (!dense_allowed(ctx.config, sys.extended_dimension())) {
    return std::nullopt;
  }
  const DenseMatrix ih(Complex{0.0, 1.0} * dense_oscillator_h(sys));
  return dense_evolve(ih, t, psi0_dense(sys, state));
}

void run_estimate(Context& ctx) {
  const Json& c = ctx.config;
  const LocalMatrixOracle a = build_generator(c["generator"]);
  const VectorOracle u = build_vector(c["u"], a.dimension(), &a.graph());
  const VectorOracle v = maybe_perturbed(build_vector(c["v"], a.dimension(), &a.graph()), c["zeta"].get<double>());
  const double eps = c["eps"].get<double>();
  const double delta = c["delta"].get<double>();

  struct Job {
    double t;
    LocalMatrixOracle op;
    Polynomial p;
    double eps_est;
  };
  std::vector<Job> jobs;
  if (c.contains("polynomial")) {
    jobs.push_back({0.0, a, polynomial_from_json(c["polynomial"]), eps});
  } else {
    // e^{iAt} for Hermitian A, e^{At} = e^{i(-iA)t} for anti-Hermitian A.
    require(a.is_hermitian() || a.is_anti_hermitian(), "time evolution needs a Hermitian or anti-Hermitian generator");
    const LocalMatrixOracle k = a.is_hermitian() ? a : affine_transform(a, Complex{0.0, -1.0});
    for (double t : scenario_times(c)) {
      jobs.push_back({t, k, exp_poly(a.norm_bound(), t, eps / 2.0), eps / 2.0});
    }
  }
  std::vector<EstimateReport> reports;
  for (std::size_t n = 0; n < jobs.size(); ++n) {
    reports.push_back(evt_gl_estimate(jobs[n].op, jobs[n].p, u.query_only(), v, jobs[n].eps_est, delta,
                                      split_seed(ctx.seed, n), ctx.options));
  }
  ctx.cost["generator"] = cost_json(a.cost().snapshot());
  ctx.cost["u"] = cost_json(u.cost().snapshot());
  ctx.cost["v"] = cost_json(v.cost().snapshot());

  const bool dense = dense_allowed(c, a.dimension());
  std::optional<DenseMatrix> m;
  DenseVector ud;
  DenseVector vd;
  if (dense) {
    m.emplace(dense_from_oracle(a));
    ud = dense_from_vector(u);
    vd = dense_from_vector(v);
  }
  Json estimates = Json::array();
  for (std::size_t n = 0; n < jobs.size(); ++n) {
    std::optional<Complex> truth;
    if (dense) {
      DenseVector w;
      if (c.contains("polynomial")) {
        w = dense_poly_apply(*m, jobs[n].p, ud);
      } else {
        const Complex factor = a.is_hermitian() ? Complex{0.0, 1.0} : Complex{1.0};
        w = dense_evolve(DenseMatrix(factor * m->matrix()), jobs[n].t, ud);
      }
      truth = dense_dot(vd, w);
    }
    Json e = estimate_json(jobs[n].t, reports[n], truth);
    e["degree"] = jobs[n].p.degree();
    estimates.push_back(std::move(e));
  }
  ctx.outputs["dimension"] = a.dimension();
  ctx.outputs["norm_bound"] = a.norm_bound();
  ctx.outputs["estimates"] = estimates;
  if (jobs.size() > 1) {
    ctx.series.push_back(estimate_series(estimates));
  }
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    d += std::abs(p[i] - q[i]);
  }
  return 0.5 * d;
}

void run_sample(Context& ctx) {
  const Json& c = ctx.config;
  const LocalMatrixOracle a = build_generator(c["generator"]);
  const VectorOracle psi = maybe_perturbed(build_vector(c["psi"], a.dimension(), &a.graph()), c["zeta"].get<double>());
  const std::int64_t count = c["count"].get<std::int64_t>();
  require(count >= 0, "count must be nonnegative");
  EvolvedSamplerParams params;
  params.eps = c["eps"].get<double>();
  params.delta = c["delta"].get<double>();
  params.alpha_min = c["alpha_min"].get<double>();
  const double t = c["time"].get<double>();
  const EvolvedSampler sampler(a, t, psi, params);
  const auto outcomes = sampler.sample_many(static_cast<std::size_t>(count), ctx.seed, ctx.options.threads);

  Series s{"samples", {"index", "trials"}, {}};
  std::uint64_t trials = 0;
  std::int64_t failures = 0;
  std::vector<double> empirical(static_cast<std::size_t>(a.dimension()), 0.0);
  for (const RejectionOutcome& o : outcomes) {
    trials += o.trials;
    if (o.site) {
      empirical[static_cast<std::size_t>(*o.site)] += 1.0;
      s.rows.push_back({*o.site, o.trials});
    } else {
      ++failures;
      s.rows.push_back({-1, o.trials});
    }
  }
  ctx.cost["generator"] = cost_json(a.cost().snapshot());
  ctx.cost["psi"] = cost_json(psi.cost().snapshot());

  ctx.outputs["dimension"] = a.dimension();
  ctx.outputs["count"] = count;
  ctx.outputs["failures"] = failures;
  ctx.outputs["trials"] = trials;
  ctx.outputs["acceptance_rate"] = trials == 0 ? 0.0 : static_cast<double>(count - failures) / static_cast<double>(trials);
  ctx.outputs["phi"] = sampler.phi();
  ctx.outputs["degree"] = sampler.polynomial().degree();
  ctx.outputs["trial_budget"] = sampler.budget();
  ctx.outputs["tv_bound"] = sampler.tv_bound();
  if (dense_allowed(c, a.dimension()) && count > failures) {
    const DenseVector target = dense_evolve(dense_from_oracle(a), t, dense_from_vector(psi));
    std::vector<double> exact(target.size());
    double total = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      exact[i] = std::norm(target[i]);
      total += exact[i];
    }
    for (double& p : exact) {
      p /= total;
    }
    for (double& p : empirical) {
      p /= static_cast<double>(count - failures);
    }
    const DenseVector evolved = dense_from_vector(sampler.evolved());
    double evolved_sq = 0.0;
    for (const Complex& z : evolved) {
      evolved_sq += std::norm(z);
    }
    ctx.outputs["dense_check"] = Json{{"empirical_tv", tv_distance(empirical, exact)},
                                      {"expected_acceptance", evolved_sq / sampler.phi()}};
  }
  ctx.series.push_back(std::move(s));
  if (failures > 0) {
    ctx.exit_code = kExitFailure;
  }
}

void run_oscillator(Context& ctx) {
  const Json& c = ctx.config;
  const OscillatorSystem sys = build_oscillator(c["system"]);
  const OscillatorState state = build_state(c["state"], sys.sites());
  const VectorOracle v = build_vector(c["observable"], sys.extended_dimension(), nullptr);
  const double energy = total_energy(sys, state);
  const double eps = c["eps"].get<double>();
  const double delta = c["delta"].get<double>();
  Site velocity_site = -1;
  if (c["observable"].contains("basis") && c["observable"]["basis"].get<Site>() < sys.sites()) {
    velocity_site = c["observable"]["basis"].get<Site>();
  }
  DenseVector vd;
  if (dense_allowed(c, sys.extended_dimension())) {
    vd = dense_from_vector(v);
  }
  const auto times = scenario_times(c);
  Json estimates = Json::array();
  for (std::size_t n = 0; n < times.size(); ++n) {
    const EstimateReport r =
        estimate_observable(sys, state, v, times[n], eps, delta, split_seed(ctx.seed, n), ctx.options);
    std::optional<Complex> truth;
    if (auto psi_t = dense_oscillator_state(ctx, sys, state, times[n])) {
      truth = dense_dot(vd, *psi_t);
    }
    Json e = estimate_json(times[n], r, truth);
    e["degree"] = oscillator_degree(sys, times[n], eps / 2.0);
    if (velocity_site >= 0) {
      // Velocity slots hold sqrt(m_i) xdot_i / sqrt(2E).
      e["velocity"] = std::sqrt(2.0 * energy / sys.mass(velocity_site)) * r.value.real();
    }
    estimates.push_back(std::move(e));
  }
  ctx.cost["observable"] = cost_json(v.cost().snapshot());
  ctx.cost["system"] = cost_json(sys.a().cost().snapshot());
  ctx.outputs["sites"] = sys.sites();
  ctx.outputs["extended_dimension"] = sys.extended_dimension();
  ctx.outputs["energy"] = energy;
  ctx.outputs["h_norm_bound"] = sys.h_norm_bound();
  ctx.outputs["estimates"] = estimates;
  if (times.size() > 1) {
    ctx.series.push_back(estimate_series(estimates));
  }
}

void run_energy(Context& ctx) {
  const Json& c = ctx.config;
  const OscillatorSystem sys = build_oscillator(c["system"]);
  const OscillatorState state = build_state(c["state"], sys.sites());
  const std::vector<Site> masses = mass_set(c["mass_set"], sys);
  const std::vector<std::pair<Site, Site>> springs = spring_set(c["spring_set"], sys);
  const double energy = total_energy(sys, state);
  const auto times = scenario_times(c);
  Json estimates = Json::array();
  for (std::size_t n = 0; n < times.size(); ++n) {
    const EstimateReport r = estimate_energy(sys, state, masses, springs, times[n], c["eps"].get<double>(),
                                             c["delta"].get<double>(), split_seed(ctx.seed, n), ctx.options);
    std::optional<Complex> truth;
    if (auto psi_t = dense_oscillator_state(ctx, sys, state, times[n])) {
      double fraction = 0.0;
      for (Site i : masses) {
        fraction += std::norm((*psi_t)[static_cast<std::size_t>(i)]);
      }
      for (const auto& [i, j] : springs) {
        fraction += std::norm((*psi_t)[static_cast<std::size_t>(sys.spring_index(i, j))]);
      }
      truth = fraction;
    }
    Json e = estimate_json(times[n], r, truth);
    e["energy"] = r.value.real() * energy;
    estimates.push_back(std::move(e));
  }
  ctx.cost["system"] = cost_json(sys.a().cost().snapshot());
  ctx.outputs["sites"] = sys.sites();
  ctx.outputs["total_energy"] = energy;
  ctx.outputs["masses"] = masses.size();
  ctx.outputs["springs"] = springs.size();
  ctx.outputs["estimates"] = estimates;
  if (times.size() > 1) {
    ctx.series.push_back(estimate_series(estimates));
  }
}

void run_pde(Context& ctx) {
  const Json& c = ctx.config;
  const std::string eq = c["equation"].get<std::string>();
  const Site dims = c["dims"].get<Site>();
  const Site n = c["n_per_axis"].get<Site>();
  const double a = c["spacing"].get<double>();
  require(dims >= 1 && dims <= 8, "dims must be between 1 and 8");
  require(n >= 1, "n_per_axis must be positive");
  const Boundary boundary = c["boundary"].get<std::string>() == "open" ? Boundary::open : Boundary::periodic;
  const SiteGraph graph =
      dims == 1 ? SiteGraph::chain(n, boundary) : SiteGraph::grid(std::vector<Site>(static_cast<std::size_t>(dims), n), boundary);
  const VectorOracle initial = build_vector(c["initial"], graph.sites(), &graph);
  const auto times = scenario_times(c);
  const double eps = c["eps"].get<double>();
  const double delta = c["delta"].get<double>();
  ctx.outputs["equation"] = eq;
  ctx.outputs["sites"] = graph.sites();
  Json estimates = Json::array();

  if (eq == "wave") {
    const OscillatorSystem sys = wave_to_oscillators(laplacian_oracle(graph), c["c"].get<double>(), a);
    const DenseVector field = dense_from_vector(initial);
    OscillatorState state;
    state.x.resize(field.size());
    state.xdot.assign(field.size(), 0.0);
    std::size_t peak = 0;
    for (std::size_t i = 0; i < field.size(); ++i) {
      state.x[i] = field[i].real();
      if (std::abs(field[i]) > std::abs(field[peak])) {
        peak = i;
      }
    }
    const VectorOracle v = c.contains("observable") ? build_vector(c["observable"], sys.extended_dimension(), nullptr)
                                                    : build_vector(Json{{"basis", peak}}, sys.extended_dimension(), nullptr);
    DenseVector vd;
    if (dense_allowed(c, sys.extended_dimension())) {
      vd = dense_from_vector(v);
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
      const EstimateReport r = estimate_observable(sys, state, v, times[k], eps, delta, split_seed(ctx.seed, k), ctx.options);
      std::optional<Complex> truth;
      if (auto psi_t = dense_oscillator_state(ctx, sys, state, times[k])) {
        truth = dense_dot(vd, *psi_t);
      }
      estimates.push_back(estimate_json(times[k], r, truth));
    }
    ctx.outputs["norm_bound"] = sys.h_norm_bound();
    ctx.cost["system"] = cost_json(sys.a().cost().snapshot());
  } else {
    std::optional<LocalMatrixOracle> h;
    if (eq == "advection") {
      h = advection_hamiltonian(c["velocity"].get<std::vector<double>>(), a, n, boundary);
      require(static_cast<Site>(c["velocity"].size()) == dims, "velocity needs one component per axis");
    } else {
      std::vector<double> potential(static_cast<std::size_t>(graph.sites()), 0.0);
      if (c.contains("potential_file")) {
        std::istringstream in(read_text_file(c["potential_file"].get<std::string>()));
        const DenseVector values = read_vector_csv(in, graph.sites());
        for (std::size_t i = 0; i < values.size(); ++i) {
          potential[i] = values[i].real();
        }
      } else {
        std::fill(potential.begin(), potential.end(), c["potential"].get<double>());
      }
      h = schrodinger_hamiltonian(laplacian_oracle(graph), potential, a);
    }
    const VectorOracle v = c.contains("observable") ? build_vector(c["observable"], graph.sites(), &graph) : initial;
    const bool dense = dense_allowed(c, graph.sites());
    std::optional<DenseMatrix> m;
    DenseVector ud;
    DenseVector vd;
    for (std::size_t k = 0; k < times.size(); ++k) {
      // u(t) = e^{-iHt} u(0).
      const Polynomial p = exp_poly(h->norm_bound(), -times[k], eps / 2.0);
      const EstimateReport r =
          evt_gl_estimate(*h, p, initial.query_only(), v, eps / 2.0, delta, split_seed(ctx.seed, k), ctx.options);
      std::optional<Complex> truth;
      if (dense) {
        if (!m) {
          m.emplace(Complex{0.0, -1.0} * dense_from_oracle(*h).matrix());
          ud = dense_from_vector(initial);
          vd = dense_from_vector(v);
        }
        truth = dense_dot(vd, dense_evolve(*m, times[k], ud));
      }
      Json e = estimate_json(times[k], r, truth);
      e["degree"] = p.degree();
      estimates.push_back(std::move(e));
    }
    ctx.outputs["norm_bound"] = h->norm_bound();
    if (m) {
      ctx.outputs["dense_norm"] = spectral_norm(*m);
    }
  }
  ctx.outputs["estimates"] = estimates;
  if (times.size() > 1) {
    ctx.series.push_back(estimate_series(estimates));
  }
}

void run_embed(Context& ctx) {
  const Json& c = ctx.config;
  const std::string text =
      c.contains("circuit") ? read_text_file(c["circuit"].get<std::string>()) : c["circuit_text"].get<std::string>();
  const ReversibleCircuit circuit = ReversibleCircuit::parse(text);
  const bool long_mode = c["mode"].get<std::string>() == "long";
  const ClockHamiltonian h = long_mode ? fk_long_local(circuit) : fk_classical(circuit);
  const int length = static_cast<int>(h.clock_slots - 1);
  ctx.outputs["qubits"] = circuit.qubits();
  ctx.outputs["gates"] = circuit.length();
  ctx.outputs["clock_slots"] = h.clock_slots;
  ctx.outputs["clock_steps"] = h.steps.size();
  ctx.outputs["dimension"] = h.generator->dimension();
  ctx.outputs["diagonal_shift"] = h.diagonal_shift;
  ctx.outputs["dilated"] = h.dilated;

  std::optional<double> t;
  if (c.contains("time")) {
    t = c["time"].get<double>();
  }
  if (c["scan_readout"].get<bool>()) {
    const double t_max = c.contains("t_max") ? c["t_max"].get<double>() : std::max(1.0, default_readout_tmax(length));
    const ReadoutScan scan =
        find_readout_time(length, t_max, static_cast<int>(c["grid_points"].get<std::int64_t>()), ctx.options.threads,
                          h.diagonal_shift);
    ctx.outputs["readout"] = Json{{"t_max", t_max},         {"t_star", scan.t_star},   {"overlap", scan.overlap},
                                  {"threshold", scan.threshold}, {"success", scan.success}};
    Series s{"readout", {"t", "overlap"}, {}};
    for (std::size_t k = 0; k < scan.times.size(); ++k) {
      s.rows.push_back({scan.times[k], scan.overlaps[k]});
    }
    ctx.series.push_back(std::move(s));
    if (!t) {
      t = scan.t_star;
    }
  }
  const Site total = h.clock_slots * h.basis_size();
  if (t && dense_allowed(c, total)) {
    const Site input = c["input"].get<Site>();
    require(input >= 0 && input < circuit.basis_size(), "input must be a basis index of the register");
    DenseVector psi0(static_cast<std::size_t>(circuit.basis_size()));
    psi0[static_cast<std::size_t>(input)] = 1.0;
    const EmbeddedRun run = simulate_embedded_circuit(h, psi0, *t);
    const DenseVector out = simulate_circuit(circuit, psi0);
    std::vector<double> expected(out.size());
    double worst = 0.0;
    for (std::size_t z = 0; z < out.size(); ++z) {
      expected[z] = std::norm(out[z]);
      worst = std::max(worst, std::abs(expected[z] - run.last_distribution[z]));
    }
    ctx.outputs["simulation"] = Json{{"time", *t},
                                     {"input", input},
                                     {"last_slice_weight", run.slice_weights.back()},
                                     {"slice_weights", run.slice_weights},
                                     {"last_distribution", run.last_distribution},
                                     {"circuit_distribution", expected},
                                     {"max_distribution_error", worst}};
  }
  ctx.cost["generator"] = cost_json(h.generator->cost().snapshot());
}

}  // namespace

void write_series_csv(std::ostream& out, const Series& s) {
  for (std::size_t k = 0; k < s.columns.size(); ++k) {
    out << (k ? "," : "") << s.columns[k];
  }
  out << '\n';
  for (const auto& row : s.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k ? "," : "") << (row[k].is_null() ? "" : row[k].dump());
    }
    out << '\n';
  }
}

RunResult run_scenario(const Json& raw, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  Json& report = result.report;
  report["glsim"] = GLSIM_VERSION;
  report["scenario"] = raw.is_object() && raw.contains("scenario") ? raw["scenario"] : Json();
  report["status"] = "ok";
  report["config"] = raw;
  const unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  auto fail = [&](int code, const char* kind, const std::string& message) {
    result.exit_code = code;
    report["status"] = "error";
    report["error"] = Json{{"kind", kind}, {"message", message}};
  };
  try {
    const Json config = resolve_config(raw);
    report["config"] = config;
    Context ctx(config, config["seed"].get<std::uint64_t>(), threads);
    const std::string scenario = config["scenario"].get<std::string>();
    if (scenario == "estimate") {
      run_estimate(ctx);
    } else if (scenario == "sample") {
      run_sample(ctx);
    } else if (scenario == "oscillator") {
      run_oscillator(ctx);
    } else if (scenario == "energy") {
      run_energy(ctx);
    } else if (scenario == "pde") {
      run_pde(ctx);
    } else if (scenario == "embed") {
      run_embed(ctx);
    } else {
      run_verify(config, ctx.seed, threads, ctx.outputs, ctx.exit_code);
    }
    report["outputs"] = std::move(ctx.outputs);
    report["cost"] = std::move(ctx.cost);
    result.series = std::move(ctx.series);
    result.exit_code = ctx.exit_code;
    if (ctx.exit_code == kExitFailure) {
      report["status"] = "failure";
    }
  } catch (const ConfigError& e) {
    fail(kExitSchema, "schema", e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(kExitSchema, "schema", e.what());
  } catch (const PreconditionError& e) {
    fail(kExitPrecondition, "precondition", e.what());
  } catch (const CapacityError& e) {
    fail(kExitPrecondition, "capacity", e.what());
  } catch (const LocalityError& e) {
    fail(kExitPrecondition, "locality", e.what());
  } catch (const std::exception& e) {
    fail(kExitPrecondition, "runtime", e.what());
  }
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
  report["runtime"] = Json{{"threads", threads}, {"wall_time_s", wall.count()}};
  return result;
}

}  // namespace glsim::cli
