// Command-line front end: instance generation, single reconstructions, and
// the seeded Monte-Carlo sweeps, all emitting deterministic CSV.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scr/bench.hpp"
#include "scr/csv.hpp"
#include "scr/errors.hpp"
#include "scr/instance_io.hpp"
#include "scr/metrics.hpp"
#include "scr/solvers.hpp"

namespace {

using scr::Index;

// "start:stop:step" (inclusive) or a comma list or a single value.
std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double start = 0.0, stop = 0.0, step = 0.0;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(text);
    in >> start >> colon1 >> stop >> colon2 >> step;
    if (!in || colon1 != ':' || colon2 != ':' || !(step > 0.0) || stop < start) {
      throw scr::InvalidParameterError("bad range '" + text +
                                       "' (expected start:stop:step with step > 0)");
    }
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9));
    for (int i = 0; i <= count; ++i) out.push_back(start + i * step);
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) {
      throw scr::InvalidParameterError("bad numeric value '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw scr::InvalidParameterError("empty value list '" + text + "'");
  }
  return out;
}

std::vector<Index> parse_index_list(const std::string& text) {
  std::vector<Index> out;
  for (const double v : parse_value_list(text)) {
    const auto i = static_cast<Index>(std::llround(v));
    if (static_cast<double>(i) != v || i < 1) {
      throw scr::InvalidParameterError("expected positive integers in '" + text + "'");
    }
    out.push_back(i);
  }
  return out;
}

scr::Algorithm algorithm_of(const std::string& name, int& scr_order) {
  if (name == "biht-l1") return scr::Algorithm::BihtL1;
  if (name == "biht-l2") return scr::Algorithm::BihtL2;
  if (name.rfind("scr-", 0) == 0) {
    const std::string suffix = name.substr(4);
    try {
      std::size_t used = 0;
      scr_order = std::stoi(suffix, &used);
      if (used == suffix.size() && scr_order >= 1) return scr::Algorithm::Scr;
    } catch (const std::exception&) {
    }
  }
  throw scr::InvalidParameterError("unknown algorithm '" + name +
                                   "' (expected biht-l1, biht-l2 or scr-<p>)");
}

struct AlgorithmOptions {
  std::string names = "biht-l1,biht-l2,scr-1,scr-2,scr-4";
  std::string tuned_path = "config/tuned_a.json";
  std::optional<double> fixed_steepness;
  std::optional<double> tau;
  int max_iters = 200;
  double stall_tolerance = 1e-7;
};

std::vector<scr::AlgorithmSpec> build_algorithms(const AlgorithmOptions& opts,
                                                 Index k) {
  std::optional<scr::TunedSteepness> tuned;

  std::vector<scr::AlgorithmSpec> out;
  std::stringstream in(opts.names);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    int order = 0;
    scr::AlgorithmSpec algo;
    algo.config.algorithm = algorithm_of(name, order);
    algo.config.sparsity = scr::HardK{k};
    algo.config.max_iters = opts.max_iters;
    algo.config.stall_tolerance = opts.stall_tolerance;
    if (opts.tau) {
      algo.config.step_size = *opts.tau;
      algo.auto_step_size = false;
    }
    switch (algo.config.algorithm) {
      case scr::Algorithm::BihtL1:
        algo.label = "BIHT-L1";
        break;
      case scr::Algorithm::BihtL2:
        algo.label = "BIHT-L2";
        break;
      case scr::Algorithm::Scr: {
        algo.label = "SCR-" + std::to_string(order);
        algo.config.soft.order = order;
        if (opts.fixed_steepness) {
          algo.config.soft.steepness = *opts.fixed_steepness;
        } else {
          if (!tuned) tuned = scr::load_tuned_steepness(opts.tuned_path);
          if (!tuned->has(order)) {
            throw scr::InvalidParameterError(
                "no tuned steepness for " + algo.label + " in '" + opts.tuned_path +
                "' (run tune-a first, or pass --a)");
          }
          for (const auto& [p, sigma2, steepness] : tuned->entries) {
            if (p == order) algo.steepness_by_sigma2.emplace_back(sigma2, steepness);
          }
        }
        break;
      }
    }
    out.push_back(std::move(algo));
  }
  if (out.empty()) {
    throw scr::InvalidParameterError("algorithm list is empty");
  }
  return out;
}

void add_algorithm_flags(CLI::App* cmd, AlgorithmOptions& opts) {
  cmd->add_option("--algos", opts.names,
                  "comma list of algorithms (biht-l1, biht-l2, scr-<p>)")
      ->capture_default_str();
  cmd->add_option("--tuned-a", opts.tuned_path,
                  "JSON cache of tuned SCR steepness values")
      ->envname("SCR_TUNED_A")
      ->capture_default_str();
  cmd->add_option("--a", opts.fixed_steepness,
                  "explicit SCR steepness, bypassing the tuned cache");
  cmd->add_option("--tau", opts.tau,
                  "step size override; default 2/M");
  cmd->add_option("--max-iters", opts.max_iters, "iteration cap l_max")
      ->capture_default_str();
  cmd->add_option("--stall-tol", opts.stall_tolerance,
                  "early-exit threshold on the iterate movement")
      ->capture_default_str();
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& emit) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw scr::Error("cannot open '" + path.string() + "' for writing");
  }
  emit(out);
  if (!out) {
    throw scr::Error("write to '" + path.string() + "' failed");
  }
  std::cout << "wrote " << path.string() << "\n";
}

void write_sweep_outputs(const std::filesystem::path& dir, const std::string& stem,
                         const scr::SweepResult& result, scr::SweepAxis axis) {
  std::filesystem::create_directories(dir);
  write_file(dir / (stem + "_trials.csv"),
             [&](std::ostream& out) { scr::write_trials_csv(out, result); });
  write_file(dir / (stem + "_aggregate.csv"),
             [&](std::ostream& out) { scr::write_aggregate_csv(out, result); });
  write_file(dir / (stem + "_plot_angular.csv"), [&](std::ostream& out) {
    scr::write_plot_csv(out, result, axis, scr::Metric::Angular);
  });
  write_file(dir / (stem + "_plot_hamming.csv"), [&](std::ostream& out) {
    scr::write_plot_csv(out, result, axis, scr::Metric::Hamming);
  });

  int flagged = 0;
  for (const auto& [key, cell] : result.cells) flagged += cell.excluded;
  std::cout << "cells=" << result.cells.size() << " trials_per_cell_flagged=" << flagged
            << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{
      "1-bit compressive sensing toolkit: SCR and BIHT reconstruction with a "
      "seeded Monte-Carlo benchmark harness"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::string out_dir = ".";
  app.add_option("--out-dir", out_dir, "directory for output files")
      ->envname("SCR_OUT_DIR")
      ->capture_default_str();
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for sweeps (0 = all cores)")
      ->capture_default_str();

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a problem instance file");
  Index gen_n = 128, gen_k = 16, gen_m = 160;
  double gen_sigma2 = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "instance.json";
  gen->add_option("--n", gen_n, "signal length")->capture_default_str();
  gen->add_option("--k", gen_k, "sparsity")->capture_default_str();
  gen->add_option("--m", gen_m, "measurement count")->capture_default_str();
  gen->add_option("--sigma2", gen_sigma2, "noise variance")->capture_default_str();
  gen->add_option("--seed", gen_seed, "instance seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output instance path")->capture_default_str();
  gen->callback([&]() {
    const auto inst = scr::make_instance(gen_n, gen_k, gen_m, gen_sigma2, gen_seed);
    const auto path = std::filesystem::path(out_dir) / gen_out;
    std::filesystem::create_directories(path.parent_path().empty()
                                            ? std::filesystem::path(".")
                                            : path.parent_path());
    scr::save_instance(inst, path.string());
    std::cout << "wrote " << path.string() << " (n=" << inst.n << " k=" << inst.k
              << " m=" << inst.m << " sigma2=" << scr::format_double(inst.sigma2)
              << ")\n";
  });

  // ---- solve --------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "reconstruct one saved instance");
  std::string solve_instance;
  std::string solve_algo = "scr-2";
  double solve_a = 1.0;
  std::optional<Index> solve_k;
  std::optional<double> solve_lambda;
  std::optional<double> solve_tau;
  int solve_iters = 200;
  double solve_stall = 1e-7;
  std::string solve_out = "solution.csv";
  solve->add_option("--instance", solve_instance, "instance JSON path")->required();
  solve->add_option("--algo", solve_algo, "biht-l1, biht-l2 or scr-<p>")
      ->capture_default_str();
  solve->add_option("--a", solve_a, "SCR steepness")->capture_default_str();
  solve->add_option("--k", solve_k, "hard sparsity level (default: instance k)");
  solve->add_option("--lambda", solve_lambda,
                    "soft-threshold weight; replaces the hard-K projection");
  solve->add_option("--tau", solve_tau, "step size; default 2/M");
  solve->add_option("--max-iters", solve_iters, "iteration cap l_max")
      ->capture_default_str();
  solve->add_option("--stall-tol", solve_stall, "early-exit threshold")
      ->capture_default_str();
  solve->add_option("--out", solve_out, "estimate CSV path")->capture_default_str();
  solve->callback([&]() {
    const auto inst = scr::load_instance(solve_instance);
    int order = 0;
    scr::SolverConfig config;
    config.algorithm = algorithm_of(solve_algo, order);
    if (config.algorithm == scr::Algorithm::Scr) {
      config.soft = scr::SoftParams{solve_a, order};
    }
    config.sparsity = solve_lambda
                          ? scr::SparsityMode{scr::SoftLambda{*solve_lambda}}
                          : scr::SparsityMode{scr::HardK{solve_k.value_or(inst.k)}};
    config.step_size = solve_tau.value_or(
        scr::default_step_size(config.algorithm, inst.m));
    config.max_iters = solve_iters;
    config.stall_tolerance = solve_stall;

    scr::Vector estimate;
    int iterations = 0;
    bool stalled = false;
    bool flagged = false;
    try {
      const auto result = scr::reconstruct(inst.y, inst.phi, config);
      estimate = result.estimate;
      iterations = result.iterations_run;
      stalled = result.converged_by_stall;
    } catch (const scr::DegenerateIterateError& e) {
      estimate = e.last_estimate();
      iterations = e.iterations_completed();
      flagged = true;
    }

    const auto path = std::filesystem::path(out_dir) / solve_out;
    write_file(path, [&](std::ostream& out) {
      scr::CsvWriter csv(out);
      csv.row({"index", "value"});
      for (Index i = 0; i < estimate.size(); ++i) {
        csv.row({scr::format_int(i), scr::format_double(estimate[i])});
      }
    });

    const auto [precision, recall] = scr::support_metrics(estimate, inst.x);
    std::cout << "angular_error=" << scr::format_double(scr::angular_error(
                     estimate, inst.x.values))
              << " hamming_error=" << scr::format_double(scr::hamming_error(
                     estimate, inst.phi, inst.y))
              << " support_precision=" << scr::format_double(precision)
              << " support_recall=" << scr::format_double(recall)
              << " iterations=" << iterations << " converged_by_stall=" << stalled
              << " flagged=" << flagged << "\n";
  });

  // ---- sweep-m ------------------------------------------------------
  auto* sweep_m = app.add_subcommand(
      "sweep-m", "angular/Hamming error versus measurement count");
  Index sm_n = 128, sm_k = 16;
  std::string sm_m = "16,32,64,96,128,160,192,256,320";
  double sm_sigma2 = 0.0;
  int sm_trials = 200;
  std::uint64_t sm_seed = 0;
  std::string sm_config;
  AlgorithmOptions sm_algos;
  sweep_m->add_option("--n", sm_n, "signal length")->capture_default_str();
  sweep_m->add_option("--k", sm_k, "sparsity")->capture_default_str();
  sweep_m->add_option("--m", sm_m, "measurement counts (list or start:stop:step)")
      ->capture_default_str();
  sweep_m->add_option("--sigma2", sm_sigma2, "noise variance")->capture_default_str();
  sweep_m->add_option("--trials", sm_trials, "Monte-Carlo trials per cell")
      ->capture_default_str();
  sweep_m->add_option("--seed", sm_seed, "base seed")->capture_default_str();
  sweep_m->add_option("--config", sm_config,
                      "experiment JSON; replaces the flags above");
  add_algorithm_flags(sweep_m, sm_algos);
  sweep_m->callback([&]() {
    scr::ExperimentSpec spec;
    if (!sm_config.empty()) {
      spec = scr::load_experiment_spec(sm_config);
    } else {
      spec.n = sm_n;
      spec.k = sm_k;
      spec.m_values = parse_index_list(sm_m);
      spec.noise_values = {sm_sigma2};
      spec.trials = sm_trials;
      spec.base_seed = sm_seed;
      spec.algorithms = build_algorithms(sm_algos, sm_k);
    }
    spec.jobs = jobs;
    const auto result = scr::sweep_measurements(spec);
    write_sweep_outputs(out_dir, "sweep_m", result, scr::SweepAxis::Measurements);
  });

  // ---- sweep-noise --------------------------------------------------
  auto* sweep_noise = app.add_subcommand(
      "sweep-noise", "angular/Hamming error versus noise variance at fixed M");
  Index sn_n = 128, sn_k = 16, sn_m = 160;
  std::string sn_sigma2 = "0:5:0.5";
  int sn_trials = 200;
  std::uint64_t sn_seed = 0;
  std::string sn_config;
  AlgorithmOptions sn_algos;
  sweep_noise->add_option("--n", sn_n, "signal length")->capture_default_str();
  sweep_noise->add_option("--k", sn_k, "sparsity")->capture_default_str();
  sweep_noise->add_option("--m", sn_m, "measurement count")->capture_default_str();
  sweep_noise
      ->add_option("--sigma2", sn_sigma2, "noise variances (list or start:stop:step)")
      ->capture_default_str();
  sweep_noise->add_option("--trials", sn_trials, "Monte-Carlo trials per cell")
      ->capture_default_str();
  sweep_noise->add_option("--seed", sn_seed, "base seed")->capture_default_str();
  sweep_noise->add_option("--config", sn_config,
                          "experiment JSON; replaces the flags above");
  add_algorithm_flags(sweep_noise, sn_algos);
  sweep_noise->callback([&]() {
    scr::ExperimentSpec spec;
    if (!sn_config.empty()) {
      spec = scr::load_experiment_spec(sn_config);
    } else {
      spec.n = sn_n;
      spec.k = sn_k;
      spec.m_values = {sn_m};
      spec.noise_values = parse_value_list(sn_sigma2);
      spec.trials = sn_trials;
      spec.base_seed = sn_seed;
      spec.algorithms = build_algorithms(sn_algos, sn_k);
    }
    spec.jobs = jobs;
    const auto result = scr::sweep_noise(spec);
    write_sweep_outputs(out_dir, "sweep_noise", result, scr::SweepAxis::Noise);
  });

  // ---- tune-a -------------------------------------------------------
  auto* tune = app.add_subcommand(
      "tune-a", "grid-search the SCR steepness at one (M, sigma2) cell");
  Index tn_n = 128, tn_k = 16, tn_m = 160;
  double tn_sigma2 = 0.0;
  int tn_p = 2;
  std::string tn_grid = "0.25,0.3,0.35,0.4,0.45,0.5,0.7,1,1.4,2,2.8,4,5.6,8,11,16,22,32";
  int tn_trials = 200;
  std::uint64_t tn_seed = 0;
  std::string tn_save;
  tune->add_option("--n", tn_n, "signal length")->capture_default_str();
  tune->add_option("--k", tn_k, "sparsity")->capture_default_str();
  tune->add_option("--m", tn_m, "measurement count")->capture_default_str();
  tune->add_option("--sigma2", tn_sigma2, "noise variance")->capture_default_str();
  tune->add_option("--p", tn_p, "SCR order to tune")->capture_default_str();
  tune->add_option("--a-grid", tn_grid, "steepness grid (list or start:stop:step)")
      ->capture_default_str();
  tune->add_option("--trials", tn_trials, "Monte-Carlo trials per grid point")
      ->capture_default_str();
  tune->add_option("--seed", tn_seed, "base seed")->capture_default_str();
  tune->add_option("--save", tn_save,
                   "merge the tuned value into this steepness cache file");
  tune->callback([&]() {
    scr::ExperimentSpec spec;
    spec.n = tn_n;
    spec.k = tn_k;
    spec.m_values = {tn_m};
    spec.noise_values = {tn_sigma2};
    spec.trials = tn_trials;
    spec.base_seed = tn_seed;
    spec.jobs = jobs;
    // tune_steepness installs its own single-algorithm list.
    scr::AlgorithmSpec placeholder;
    placeholder.label = "SCR-" + std::to_string(tn_p);
    placeholder.config.algorithm = scr::Algorithm::Scr;
    placeholder.config.soft.order = tn_p;
    placeholder.config.sparsity = scr::HardK{tn_k};
    spec.algorithms = {placeholder};

    const auto result = scr::tune_steepness(spec, tn_p, parse_value_list(tn_grid));

    const auto path = std::filesystem::path(out_dir) / "tune_a_curve.csv";
    std::filesystem::create_directories(out_dir);
    write_file(path, [&](std::ostream& out) {
      scr::CsvWriter csv(out);
      csv.row({"a", "mean_angular_error"});
      for (const auto& point : result.curve) {
        csv.row({scr::format_double(point.steepness),
                 scr::format_double(point.mean_angular_error)});
      }
    });
    std::cout << "best_a=" << scr::format_double(result.best_steepness)
              << " (p=" << tn_p << " m=" << tn_m
              << " sigma2=" << scr::format_double(tn_sigma2) << ")\n";

    if (!tn_save.empty()) {
      scr::TunedSteepness tuned;
      if (std::filesystem::exists(tn_save)) {
        tuned = scr::load_tuned_steepness(tn_save);
      }
      tuned.set(tn_p, tn_sigma2, result.best_steepness);
      scr::save_tuned_steepness(tuned, tn_save);
      std::cout << "updated " << tn_save << "\n";
    }
  });

  // ---- rank ---------------------------------------------------------
  auto* rank = app.add_subcommand(
      "rank", "order algorithms by mean error from an aggregate CSV");
  std::string rk_aggregate;
  std::string rk_metric = "angular";
  std::string rk_regime;
  std::optional<double> rk_sigma2;
  std::optional<Index> rk_m;
  double rk_margin = 1.0;
  std::string rk_out;
  rank->add_option("--aggregate", rk_aggregate, "aggregate CSV from a sweep")
      ->required();
  rank->add_option("--metric", rk_metric, "angular or hamming")
      ->capture_default_str();
  rank->add_option("--regime", rk_regime,
                   "low-snr (largest sigma2 in the sweep) or high-snr (smallest)");
  rank->add_option("--sigma2", rk_sigma2, "explicit noise variance to rank at");
  rank->add_option("--m", rk_m, "explicit M to rank at (required when ambiguous)");
  rank->add_option("--margin", rk_margin,
                   "ties: mean gap below margin x pooled standard error")
      ->capture_default_str();
  rank->add_option("--out", rk_out, "also write the ranking as CSV");
  rank->callback([&]() {
    std::ifstream in(rk_aggregate, std::ios::binary);
    if (!in) throw scr::Error("cannot open '" + rk_aggregate + "'");
    const auto sweep = scr::read_aggregate_csv(in);
    if (sweep.cells.empty()) throw scr::Error("aggregate CSV has no rows");

    scr::Metric metric;
    if (rk_metric == "angular") {
      metric = scr::Metric::Angular;
    } else if (rk_metric == "hamming") {
      metric = scr::Metric::Hamming;
    } else {
      throw scr::InvalidParameterError("metric must be angular or hamming");
    }

    double sigma2;
    if (rk_sigma2) {
      sigma2 = *rk_sigma2;
    } else if (rk_regime == "low-snr" || rk_regime == "high-snr") {
      sigma2 = std::get<2>(sweep.cells.begin()->first);
      for (const auto& [key, cell] : sweep.cells) {
        const double s2 = std::get<2>(key);
        if (rk_regime == "low-snr" ? s2 > sigma2 : s2 < sigma2) sigma2 = s2;
      }
    } else {
      throw scr::InvalidParameterError(
          "pass --regime low-snr|high-snr or an explicit --sigma2");
    }

    Index m;
    if (rk_m) {
      m = *rk_m;
    } else {
      m = std::get<1>(sweep.cells.begin()->first);
      for (const auto& [key, cell] : sweep.cells) {
        if (std::get<1>(key) != m) {
          throw scr::InvalidParameterError(
              "aggregate holds several M values; pass --m");
        }
      }
    }

    const auto report = scr::rank_algorithms(sweep, metric, m, sigma2, rk_margin);
    std::cout << "rank (" << rk_metric << " @ M=" << m
              << ", sigma2=" << scr::format_double(sigma2) << "): " << report.render()
              << "\n";
    const std::string numbers = report.render_numbers();
    if (!numbers.empty()) std::cout << "numbers: " << numbers << "\n";
    for (const auto& entry : report.entries) {
      std::cout << "  " << entry.label << " mean=" << scr::format_double(entry.mean)
                << " stderr=" << scr::format_double(entry.stderr_mean) << "\n";
    }

    if (!rk_out.empty()) {
      const auto path = std::filesystem::path(out_dir) / rk_out;
      write_file(path, [&](std::ostream& out) {
        scr::CsvWriter csv(out);
        csv.row({"rank", "label", "mean", "stderr", "tied_with_prev"});
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
          const auto& entry = report.entries[i];
          csv.row({scr::format_int(static_cast<long long>(i) + 1), entry.label,
                   scr::format_double(entry.mean),
                   scr::format_double(entry.stderr_mean),
                   entry.tied_with_prev ? "1" : "0"});
        }
      });
    }
  });

  // ---- scatter ------------------------------------------------------
  auto* scatter = app.add_subcommand(
      "scatter", "per-trial (Hamming, angular) pairs at one (M, sigma2) cell");
  Index sc_n = 128, sc_k = 16, sc_m = 160;
  double sc_sigma2 = 5.0;
  int sc_trials = 200;
  std::uint64_t sc_seed = 0;
  AlgorithmOptions sc_algos;
  scatter->add_option("--n", sc_n, "signal length")->capture_default_str();
  scatter->add_option("--k", sc_k, "sparsity")->capture_default_str();
  scatter->add_option("--m", sc_m, "measurement count")->capture_default_str();
  scatter->add_option("--sigma2", sc_sigma2, "noise variance")->capture_default_str();
  scatter->add_option("--trials", sc_trials, "Monte-Carlo trials per algorithm")
      ->capture_default_str();
  scatter->add_option("--seed", sc_seed, "base seed")->capture_default_str();
  add_algorithm_flags(scatter, sc_algos);
  scatter->callback([&]() {
    scr::ExperimentSpec spec;
    spec.n = sc_n;
    spec.k = sc_k;
    spec.m_values = {sc_m};
    spec.noise_values = {sc_sigma2};
    spec.trials = sc_trials;
    spec.base_seed = sc_seed;
    spec.jobs = jobs;
    spec.algorithms = build_algorithms(sc_algos, sc_k);

    const auto result = scr::sweep_measurements(spec);
    const auto points = scr::scatter_points(result);
    std::filesystem::create_directories(out_dir);
    write_file(std::filesystem::path(out_dir) / "scatter_trials.csv",
               [&](std::ostream& out) { scr::write_trials_csv(out, result); });
    write_file(std::filesystem::path(out_dir) / "scatter.csv",
               [&](std::ostream& out) { scr::write_scatter_csv(out, points); });
    std::cout << "points=" << points.size() << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const scr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
