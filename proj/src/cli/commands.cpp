// Copyright 2026 The gravmediate Authors
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

#include "gravmediate/cli/commands.hpp"

#include <spdlog/spdlog.h>

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <thread>

#include "gravmediate/constants.hpp"
#include "gravmediate/feasibility.hpp"
#include "gravmediate/noisedd.hpp"

namespace gm::cli {

namespace {

constexpr double kLnTolerance = 1e-6;

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json params_json(const ModelParams& p) {
  return Json{{"omega_tilde", p.omega_tilde}, {"omega_a", p.omega_a}, {"omega_b", p.omega_b},
              {"g_a", p.g_a},                 {"g_b", p.g_b},         {"nbar0", p.nbar0},
              {"N", p.N}};
}

std::vector<Bipartition> read_cuts(const Config& cfg, const std::vector<std::string>& fallback) {
  std::vector<Bipartition> cuts{Bipartition::ab()};
  for (const auto& name : cfg.words("cuts", fallback)) {
    Bipartition c = cut_from_name(name);
    bool seen = false;
    for (const auto& have : cuts) seen = seen || have.name == c.name;
    if (!seen) cuts.push_back(c);
  }
  return cuts;
}

// Runs `work(i)` for i in [0, n) on up to `jobs` threads; rethrows the first
// failure in index order.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& work) {
  const auto workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto loop = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    loop();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct SimulatePoint {
  ModelParams params;
  TimeSeriesResult series;
  Json decoupling = Json::array();
  double worst_deviation = 0.0;
};

std::optional<double> fwhm_or_none(const TimeSeriesResult& r, double t_center) {
  try {
    return peak_fwhm(r.t, r.series("AB"), t_center);
  } catch (const std::exception& e) {
    spdlog::debug("peak width at t = {} unavailable: {}", t_center, e.what());
    return std::nullopt;
  }
}

SimulatePoint simulate_point(const ModelParams& params, int periods, int spp,
                             const std::vector<Bipartition>& cuts) {
  SimulatePoint out;
  out.params = params;
  out.series = ln_timeseries(params, period_grid(params, periods, spp), cuts);
  const double scale = params.omega_tilde / (2.0 * constants::pi);
  for (int n = 1; n <= periods; ++n) {
    const auto i = static_cast<std::size_t>(n * spp);
    const double t_n = out.series.t[i];
    const double ln_ab = out.series.series("AB")[i];
    const double formula = ln_mediated_at_tn(params, n);
    const double two_qubit =
        log_negativity(two_qubit_state(-0.5 * mediated_phase(params, n)), Bipartition::ab());
    out.worst_deviation = std::max(out.worst_deviation, std::abs(ln_ab - formula));
    Json entry{{"n", n},
               {"t", t_n},
               {"t_scaled", t_n * scale},
               {"ln_ab_formula", formula},
               {"ln_ab_two_qubit", two_qubit}};
    for (std::size_t c = 0; c < out.series.cuts.size(); ++c) {
      entry["ln"][out.series.cuts[c].name] = out.series.ln[c][i];
    }
    const auto w = fwhm_or_none(out.series, t_n);
    entry["peak_fwhm_scaled"] = w ? Json(*w * scale) : Json(nullptr);
    out.decoupling.push_back(std::move(entry));
  }
  return out;
}

void check_deviation(double deviation, const std::string& where) {
  if (deviation > kLnTolerance) {
    throw NumericalFailure(where + ": LN_AB at a decoupling time deviates from the closed form by " +
                           format_double(deviation) + " (tolerance " +
                           format_double(kLnTolerance) + ")");
  }
}

std::filesystem::path prepare_out(const RunConfig& run) {
  std::filesystem::create_directories(run.out_dir);
  return run.out_dir;
}

}  // namespace

const std::vector<std::string>& mode_names() {
  static const std::vector<std::string> names = {"simulate", "sweep",   "design",
                                                 "casimir",  "enhance", "noise-dd"};
  return names;
}

Bipartition cut_from_name(const std::string& name) {
  if (name == "ab") return Bipartition::ab();
  if (name == "ac") return Bipartition::ac();
  if (name == "c_ab") return Bipartition::c_ab();
  if (name == "a_bc") return Bipartition::a_bc();
  throw ConfigError("unknown cut '" + name + "' (known: ab, ac, c_ab, a_bc)");
}

CsvTable timeseries_table(const ModelParams& params, const TimeSeriesResult& r) {
  CsvTable table({"t_scaled", "ln_ab", "ln_ac", "ln_c_ab", "n_mean", "x_pp", "p_pp", "x_pm",
                  "p_pm", "x_mp", "p_mp", "x_mm", "p_mm", "ln_a_bc"});
  const auto column = [&](const std::string& name) -> const std::vector<double>* {
    for (std::size_t c = 0; c < r.cuts.size(); ++c) {
      if (r.cuts[c].name == name) return &r.ln[c];
    }
    return nullptr;
  };
  const auto* ab = column("AB");
  const auto* ac = column("AC");
  const auto* cab = column("C|AB");
  const auto* abc = column("A|BC");
  const double scale = params.omega_tilde / (2.0 * constants::pi);
  for (std::size_t i = 0; i < r.t.size(); ++i) {
    const auto cell = [&](const std::vector<double>* col) -> CsvTable::Cell {
      return col ? CsvTable::Cell((*col)[i]) : std::nullopt;
    };
    std::vector<CsvTable::Cell> row{r.t[i] * scale, cell(ab), cell(ac), cell(cab), r.n_mean[i]};
    for (const auto& b : r.branches[i]) {
      row.emplace_back(b.x());
      row.emplace_back(b.p());
    }
    row.push_back(cell(abc));
    table.add_row(row);
  }
  return table;
}

Json cmd_simulate(const RunConfig& run) {
  const Config& cfg = run.values;
  const ModelBlock model = read_model(cfg);
  const int periods = static_cast<int>(cfg.integer("periods", 2));
  const int spp = static_cast<int>(cfg.integer("samples_per_period", 512));
  const auto cuts = read_cuts(cfg, {"ab", "ac", "c_ab", "a_bc"});
  cfg.finish();
  if (periods < 1 || spp < 2) throw ConfigError("periods must be >= 1 and samples_per_period >= 2");

  spdlog::info("simulate: N = {}, {} periods x {} samples, {} cuts", model.params.N, periods, spp,
               cuts.size());
  const SimulatePoint pt = simulate_point(model.params, periods, spp, cuts);
  const auto dir = prepare_out(run);
  timeseries_table(model.params, pt.series).write(dir / "timeseries.csv");

  Json summary{{"mode", "simulate"},
               {"frame", "interaction"},
               {"model", params_json(model.params)},
               {"periods", periods},
               {"samples_per_period", spp},
               {"truncation_leak", pt.series.truncation_leak},
               {"decoupling_times", pt.decoupling},
               {"max_ln_ab_deviation", pt.worst_deviation}};
  if (model.derived) summary["linearization_warning"] = model.derived->linearization_warning;
  write_json(dir / "summary.json", summary);
  if (pt.series.truncation_leak) spdlog::warn("simulate: truncation leak above threshold");
  check_deviation(pt.worst_deviation, "simulate");
  return summary;
}

Json cmd_sweep(const RunConfig& run) {
  Config cfg = run.values;
  const std::string axis = cfg.text("sweep_axis");
  const std::vector<double> values = cfg.numbers("sweep_values");
  if (values.empty()) throw ConfigError("sweep_values is empty");
  if (axis != "g_b" && axis != "nbar0" && axis != "alpha") {
    throw ConfigError("sweep_axis must be one of g_b, nbar0, alpha");
  }
  const bool si = has_si_block(cfg) || axis == "alpha";
  const std::string key = axis == "g_b" ? (si ? "g_b_over_omega" : "g_b") : axis;
  cfg.set(key, format_double(values.front()));
  (void)read_model(cfg);
  const int periods = static_cast<int>(cfg.integer("periods", 2));
  const int spp = static_cast<int>(cfg.integer("samples_per_period", 512));
  const auto cuts = read_cuts(cfg, {"ab"});
  cfg.finish();
  if (periods < 1 || spp < 2) throw ConfigError("periods must be >= 1 and samples_per_period >= 2");

  std::vector<ModelParams> points;
  for (double v : values) {
    Config p = cfg;
    p.set(key, format_double(v));
    points.push_back(read_model(p).params);
  }

  std::vector<SimulatePoint> results(points.size());
  std::vector<std::string> tables(points.size());
  parallel_for(points.size(), run.jobs, [&](std::size_t i) {
    spdlog::info("sweep: point {} ({} = {}), N = {}", i, axis, values[i], points[i].N);
    results[i] = simulate_point(points[i], periods, spp, cuts);
    tables[i] = timeseries_table(points[i], results[i].series).str();
  });

  const auto dir = prepare_out(run);
  CsvTable sweep({"point", axis, "N", "ln_t1", "ln_t1_formula", "ln_t1_two_qubit",
                  "peak_fwhm_scaled", "timeseries"});
  Json summary{{"mode", "sweep"}, {"axis", axis}, {"points", Json::array()}};
  double worst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    char name[48];
    std::snprintf(name, sizeof name, "timeseries_%03zu.csv", i);
    {
      std::ofstream f(dir / name, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
      f << tables[i];
    }
    const Json& first = results[i].decoupling.at(0);
    const auto width = first["peak_fwhm_scaled"];
    sweep.add_row(std::vector<std::string>{
        std::to_string(i), format_double(values[i]), std::to_string(points[i].N),
        format_double(first["ln"]["AB"].get<double>()),
        format_double(first["ln_ab_formula"].get<double>()),
        format_double(first["ln_ab_two_qubit"].get<double>()),
        width.is_null() ? std::string{} : format_double(width.get<double>()), name});
    summary["points"].push_back(Json{{"point", i},
                                     {"value", values[i]},
                                     {"model", params_json(points[i])},
                                     {"truncation_leak", results[i].series.truncation_leak},
                                     {"decoupling_times", results[i].decoupling},
                                     {"timeseries", name}});
    worst = std::max(worst, results[i].worst_deviation);
  }
  sweep.write(dir / "sweep.csv");
  summary["max_ln_ab_deviation"] = worst;
  write_json(dir / "sweep.json", summary);
  check_deviation(worst, "sweep");
  return summary;
}

Json cmd_design(const RunConfig& run) {
  const Config& cfg = run.values;
  const ModelBlock model = read_model(cfg);
  const bool dx_given = cfg.has("bound_delta_x");
  const double dx_config = dx_given ? cfg.number("bound_delta_x") : 0.0;
  cfg.finish();

  const ModelParams& p = model.params;
  Json out{{"mode", "design"}, {"model", params_json(p)}};
  Json& q = out["quantities"];
  q["g_eff"] = quantity(2.0 * p.g_a * p.g_b / p.omega_tilde, "2 g_a g_b / omega_tilde");
  q["t_1"] = quantity(2.0 * constants::pi / p.omega_tilde, "2 pi / omega_tilde");
  q["phi_m_t1"] = quantity(mediated_phase(p, 1), "4 g_a g_b t_1 / omega_tilde");
  q["ln_ab_t1"] = quantity(ln_mediated_at_tn(p, 1), "log2(1 + |sin phi_m|)");
  q["n_mean_peak"] = quantity(mean_phonon(p, constants::pi / p.omega_tilde),
                              "nbar0 + branch average of |beta_s|^2 at t = pi / omega_tilde");
  q["suggested_N"] = quantity(double(suggest_truncation(p)),
                              "smallest N with thermal tail and top-level displaced leak < 1e-9");
  if (model.setup && model.derived) {
    const PhysicalSetup& s = *model.setup;
    const DerivedModel& d = *model.derived;
    q["m_a"] = quantity(d.m_a, "rho_a 4/3 pi r^3 (unless given)");
    q["m_c"] = quantity(d.m_c, "rho_c 4/3 pi R^3 (unless given)");
    q["d"] = quantity(d.d, "D + (R - r) - d0/2 + delta_x/2 (unless given)");
    q["omega_tilde"] =
        quantity(p.omega_tilde, "sqrt(omega^2 - 2 G m_a / d^3 + 2 V2_b / m_c)");
    q["omega_a"] = quantity(p.omega_a, "G m_a m_c d0 / (2 hbar d^2)");
    q["g_a"] = quantity(p.g_a, "-G m_a d0 / d^3 * sqrt(m_c / (2 hbar omega_tilde))");
    q["g_b"] = quantity(p.g_b, "g_b_over_omega * omega_tilde");
    q["zero_point_length"] = quantity(d.zero_point_length, "sqrt(hbar / (2 m_c omega_tilde))");
    q["delta_x"] =
        quantity(d.delta_x, "zero_point_length * sqrt(nbar0 + 4 (g_b / omega_tilde)^2)");
    const double dx = dx_given ? dx_config : d.d;
    const double bound = coupling_bound(d.m_c, p.omega_tilde, dx, s.nbar0);
    q["bound_delta_x"] = quantity(dx, dx_given ? "configured" : "d");
    q["coupling_bound"] =
        quantity(bound, "1/2 sqrt(2 m_c omega_tilde delta_x^2 / hbar - nbar0), in units of omega_tilde");
    out["g_b_within_bound"] = s.g_b_over_omega <= bound;
    out["linearization_warning"] = d.linearization_warning;
  } else if (dx_given) {
    throw ConfigError("bound_delta_x needs the SI parameter block");
  }
  const auto dir = prepare_out(run);
  write_json(dir / "design.json", out);
  return out;
}

Json cmd_casimir(const RunConfig& run) {
  const Config& cfg = run.values;
  CasimirInput in;
  in.rho_a = cfg.number("rho_a", 2400.0);
  in.rho_b = cfg.number("rho_b", in.rho_a);
  in.eps_r = cfg.number("eps_r", 4.0);
  in.beta = cfg.number("beta", 10.0);
  in.r_a = cfg.number("r_a", 70e-9);
  in.r_b = cfg.number("r_b", in.r_a);
  in.validity_ratio = cfg.number("validity_ratio", 0.1);
  cfg.finish();

  const double closed = min_separation(in.rho_a, in.rho_b, in.eps_r, in.beta);
  const double exact = min_separation_exact(in);
  CasimirInput at = in;
  at.d_s = closed;
  const CasimirResult vc = casimir_potential(at);
  const double m_a = sphere_mass(in.rho_a, in.r_a);
  const double m_b = sphere_mass(in.rho_b, in.r_b);
  Json out{{"mode", "casimir"},
           {"inputs",
            {{"rho_a", in.rho_a}, {"rho_b", in.rho_b}, {"eps_r", in.eps_r}, {"beta", in.beta},
             {"r_a", in.r_a}, {"r_b", in.r_b}}}};
  Json& q = out["quantities"];
  q["min_separation"] = quantity(
      closed, "(207 hbar c beta ((eps_r-1)/(eps_r+2))^2 / ((4 pi)^3 G rho_a rho_b))^(1/6)");
  q["min_separation_exact"] =
      quantity(exact, "root of |V_g(d_s; centre distance d_s + r_a + r_b)| / V_c(d_s) = beta");
  q["casimir_energy"] =
      quantity(vc.energy, "23 hbar c r_a^3 r_b^3 / (4 pi d_s^7) ((eps_r-1)/(eps_r+2))^2");
  q["gravitational_energy"] =
      quantity(gravitational_energy(m_a, m_b, closed, 0.0, 0.0), "-G m_a m_b / d_s");
  q["ratio_point"] = quantity(casimir_ratio(at, true), "|V_g| / V_c with point masses at d_s");
  q["ratio_finite_size"] =
      quantity(casimir_ratio(at, false), "|V_g| / V_c with centre distance d_s + r_a + r_b");
  out["casimir_formula_valid"] = vc.valid;
  const auto dir = prepare_out(run);
  write_json(dir / "casimir.json", out);
  return out;
}

Json cmd_enhance(const RunConfig& run) {
  const Config& cfg = run.values;
  PhysicalSetup setup = has_si_block(cfg) ? read_setup(cfg) : PhysicalSetup::silica_example();
  if (!has_si_block(cfg) && cfg.has("nbar0")) setup.nbar0 = cfg.number("nbar0");
  const std::vector<double> alphas =
      cfg.has("alphas") ? cfg.numbers("alphas") : std::vector<double>{1.0, 10.0, 100.0};
  const bool dx_given = cfg.has("bound_delta_x");
  const double dx_config = dx_given ? cfg.number("bound_delta_x") : 0.0;
  cfg.finish();
  if (alphas.empty()) throw ConfigError("alphas is empty");

  const auto rows = enhancement_vs_alpha(setup, alphas);
  const double dx = dx_given ? dx_config : setup.D;
  CsvTable table({"alpha", "parametric", "derived", "derived_over_parametric", "coupling_bound"});
  Json out{{"mode", "enhance"},
           {"formulas",
            {{"parametric", "alpha^(3/2) / (1 + (alpha - 1) 4e-4)^3 * 1e-3 * g_b / omega_tilde"},
             {"derived", "2 m_c delta_x / (m_a d0) / (1 + (R - r) / D)^3"},
             {"coupling_bound", "1/2 sqrt(2 m_c omega_tilde delta_x^2 / hbar - nbar0)"}}},
           {"bound_delta_x", dx},
           {"rows", Json::array()}};
  for (const auto& r : rows) {
    PhysicalSetup s = setup;
    s.R = r.alpha * setup.r;
    s.m_c = 0.0;
    const double bound = coupling_bound(s, dx, s.nbar0);
    table.add_row(std::vector<CsvTable::Cell>{r.alpha, r.parametric, r.derived, r.ratio, bound});
    out["rows"].push_back(Json{{"alpha", r.alpha},
                               {"parametric", r.parametric},
                               {"derived", r.derived},
                               {"derived_over_parametric", r.ratio},
                               {"coupling_bound", bound}});
  }
  const auto dir = prepare_out(run);
  table.write(dir / "enhance.csv");
  write_json(dir / "enhance.json", out);
  return out;
}

Json cmd_noise_dd(const RunConfig& run) {
  const Config& cfg = run.values;
  const ModelBlock model = read_model(cfg);
  const ModelParams& p = model.params;
  NoiseSpec spec;
  spec.kind = noise_kind_from_string(cfg.text("noise_kind", "ou"));
  spec.sigma = cfg.number("sigma", 0.0);
  spec.tau_c = cfg.number("tau_c", 10.0 * 2.0 * constants::pi / p.omega_tilde);
  spec.hold = cfg.number("hold", 0.5 * constants::pi / p.omega_tilde);
  spec.dt = cfg.number("noise_dt", 1e-2 * 2.0 * constants::pi / p.omega_tilde);
  spec.seed = run.seed;
  FactorSet channels;
  for (const auto& c : cfg.words("channels", {"a", "b", "c"})) {
    if (c == "a") channels = channels | FactorSet{Subsystem::A};
    else if (c == "b") channels = channels | FactorSet{Subsystem::B};
    else if (c == "c") channels = channels | FactorSet{Subsystem::C};
    else throw ConfigError("unknown noise channel '" + c + "' (known: a, b, c)");
  }
  spec.channels = channels;
  const int n = static_cast<int>(cfg.integer("n", 1));
  const DDStyle style = dd_style_from_string(cfg.text("style", "period-locked"));
  const int pulses = static_cast<int>(cfg.integer("pulses", 4L * n));
  const int realizations = static_cast<int>(cfg.integer("realizations", 1000));
  const int n_boot = static_cast<int>(cfg.integer("bootstrap", 1000));
  const double quantile = cfg.number("confidence_quantile", 0.05);
  cfg.finish();
  if (n < 1) throw ConfigError("n must be >= 1");
  if (realizations < 1) throw ConfigError("realizations must be >= 1");
  if (!(quantile > 0.0 && quantile < 1.0)) throw ConfigError("confidence_quantile must be in (0, 1)");

  const double t_n = 2.0 * constants::pi * n / p.omega_tilde;
  const PulseSequence dd = dd_sequence(pulses, t_n, style, p.omega_tilde);
  const PulseSequence bare = PulseSequence::none(t_n);
  const quad::Options qopt = default_quadrature(p.omega_tilde);
  MonteCarloOptions mc;
  mc.seed = run.seed;
  mc.jobs = run.jobs;
  mc.quadrature = qopt;

  spdlog::info("noise-dd: {} realizations, {} pulses ({}), N = {}", realizations, pulses,
               to_string(style), p.N);
  const MonteCarloResult with_dd = dephasing_monte_carlo(p, spec, dd, dd, realizations, t_n, mc);
  const MonteCarloResult without = dephasing_monte_carlo(p, spec, bare, bare, realizations, t_n, mc);
  const double lower = bootstrap_ln_difference(with_dd, without, n_boot, quantile,
                                               derive_seed(run.seed, 0xB007));

  NoiseSpec first = spec;
  first.seed = derive_seed(spec.seed, 0);
  const NoiseRealization noise0 = sample_noise(first, t_n);
  const auto filters = [&](const PulseSequence& seq) {
    const FilterIntegrals f = dd_filter_integrals(seq, seq, noise0, p.omega_tilde, t_n, qopt);
    return Json{{"chi_a", complex_json(f.chi_a)},
                {"chi_b", complex_json(f.chi_b)},
                {"xi", complex_json(f.xi)},
                {"F_bar_a", complex_json(f.F_bar_a)},
                {"F_bar_b", complex_json(f.F_bar_b)}};
  };
  const auto stats = [](const MonteCarloResult& r) {
    return Json{{"ln", r.ln},
                {"ln_noiseless_same_pulses", r.ln_noiseless},
                {"theta_a", {{"mean", r.theta_a.mean}, {"variance", r.theta_a.variance}}},
                {"theta_b", {{"mean", r.theta_b.mean}, {"variance", r.theta_b.variance}}},
                {"theta_ab", {{"mean", r.theta_ab.mean}, {"variance", r.theta_ab.variance}}}};
  };

  Json out{{"mode", "noise-dd"},
           {"model", params_json(p)},
           {"noise",
            {{"kind", to_string(spec.kind)},
             {"sigma", spec.sigma},
             {"tau_c", spec.tau_c},
             {"hold", spec.hold},
             {"dt", spec.dt},
             {"channels", channels.to_string()},
             {"seed", spec.seed}}},
           {"n", n},
           {"t_n", t_n},
           {"pulses", {{"style", to_string(style)}, {"count", pulses}, {"flip_times", dd.flip_times}}},
           {"realizations", realizations},
           {"ln_noiseless", ln_mediated_at_tn(p, n)},
           {"with_dd", stats(with_dd)},
           {"without_dd", stats(without)},
           {"bootstrap",
            {{"resamples", n_boot},
             {"quantile", quantile},
             {"ln_dd_minus_no_dd_lower", lower},
             {"dd_better", lower > 0.0}}},
           {"filter_integrals_realization_0", {{"with_dd", filters(dd)}, {"without_dd", filters(bare)}}}};
  const auto dir = prepare_out(run);
  write_json(dir / "noise_dd.json", out);
  return out;
}

Json run_mode(const RunConfig& run) {
  if (run.mode == "simulate") return cmd_simulate(run);
  if (run.mode == "sweep") return cmd_sweep(run);
  if (run.mode == "design") return cmd_design(run);
  if (run.mode == "casimir") return cmd_casimir(run);
  if (run.mode == "enhance") return cmd_enhance(run);
  if (run.mode == "noise-dd") return cmd_noise_dd(run);
  throw ConfigError("unknown mode '" + run.mode + "'");
}

}  // namespace gm::cli
