#include "scr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "scr/csv.hpp"
#include "scr/errors.hpp"
#include "scr/instance_io.hpp"
#include "scr/metrics.hpp"
#include "scr/rng.hpp"

namespace scr {
namespace {

constexpr const char* kReferenceLabels[5] = {"BIHT-L1", "BIHT-L2", "SCR-1",
                                             "SCR-2", "SCR-4"};

CellKey key_of(const TrialRecord& rec) {
  return CellKey{rec.label, rec.m, rec.sigma2};
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.n < 1 || spec.k < 1 || spec.k > spec.n) {
    throw InvalidParameterError("ExperimentSpec: need 1 <= k <= n");
  }
  if (spec.trials < 1) {
    throw InvalidParameterError("ExperimentSpec: trials must be >= 1");
  }
  if (spec.algorithms.empty()) {
    throw InvalidParameterError("ExperimentSpec: algorithm list is empty");
  }
  if (spec.m_values.empty() || spec.noise_values.empty()) {
    throw InvalidParameterError("ExperimentSpec: m_values and noise_values must be non-empty");
  }
  for (const Index m : spec.m_values) {
    if (m < 1) throw InvalidParameterError("ExperimentSpec: every M must be >= 1");
  }
  for (const double s2 : spec.noise_values) {
    if (!(s2 >= 0.0)) {
      throw InvalidParameterError("ExperimentSpec: every noise variance must be >= 0");
    }
  }
}

// Full grid over m_values x noise_values x algorithms x trials. Trials are
// independent work items; the records vector is pre-sized and every worker
// writes only its own slots, so the result is identical for any worker
// count. Aggregation walks the records in ascending index order.
SweepResult run_grid(const ExperimentSpec& spec) {
  validate_spec(spec);

  const std::size_t num_m = spec.m_values.size();
  const std::size_t num_s = spec.noise_values.size();
  const std::size_t num_a = spec.algorithms.size();
  const std::size_t trials = static_cast<std::size_t>(spec.trials);
  const std::size_t total = num_m * num_s * num_a * trials;

  std::vector<TrialRecord> records(total);
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= total || failed.load()) return;
      std::size_t rest = i;
      const int trial = static_cast<int>(rest % trials);
      rest /= trials;
      const std::size_t ai = rest % num_a;
      rest /= num_a;
      const std::size_t si = rest % num_s;
      rest /= num_s;
      const std::size_t mi = rest;

      const Index m = spec.m_values[mi];
      const double sigma2 = spec.noise_values[si];
      try {
        const std::uint64_t seed =
            trial_instance_seed(spec.base_seed, m, sigma2, trial);
        records[i] = run_trial(spec.n, spec.k, m, sigma2, spec.algorithms[ai], seed);
        records[i].trial = trial;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  std::size_t jobs = spec.jobs <= 0 ? hw : static_cast<std::size_t>(spec.jobs);
  jobs = std::min<std::size_t>(std::max<std::size_t>(jobs, 1), total);

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  struct Acc {
    double sum_ang = 0.0;
    double sum_ham = 0.0;
    double sq_ang = 0.0;
    double sq_ham = 0.0;
    int count = 0;
    int excluded = 0;
  };
  std::map<CellKey, Acc> accs;
  for (const auto& rec : records) {
    Acc& acc = accs[key_of(rec)];
    if (rec.flagged) {
      ++acc.excluded;
    } else {
      acc.sum_ang += rec.angular_error;
      acc.sum_ham += rec.hamming_error;
      ++acc.count;
    }
  }
  for (const auto& rec : records) {
    if (rec.flagged) continue;
    Acc& acc = accs[key_of(rec)];
    const double d_ang = rec.angular_error - acc.sum_ang / acc.count;
    const double d_ham = rec.hamming_error - acc.sum_ham / acc.count;
    acc.sq_ang += d_ang * d_ang;
    acc.sq_ham += d_ham * d_ham;
  }

  SweepResult out;
  for (const auto& [key, acc] : accs) {
    CellStats cell;
    cell.count = acc.count;
    cell.excluded = acc.excluded;
    if (acc.count > 0) {
      cell.mean_ang = acc.sum_ang / acc.count;
      cell.mean_ham = acc.sum_ham / acc.count;
    } else {
      cell.mean_ang = std::numeric_limits<double>::quiet_NaN();
      cell.mean_ham = std::numeric_limits<double>::quiet_NaN();
    }
    if (acc.count > 1) {
      cell.std_ang = std::sqrt(acc.sq_ang / (acc.count - 1));
      cell.std_ham = std::sqrt(acc.sq_ham / (acc.count - 1));
    }
    out.cells.emplace(key, cell);
  }
  if (spec.keep_records) out.records = std::move(records);
  return out;
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "scr") return Algorithm::Scr;
  if (name == "biht-l1") return Algorithm::BihtL1;
  if (name == "biht-l2") return Algorithm::BihtL2;
  throw InvalidParameterError("unknown algorithm '" + name +
                              "' (expected scr, biht-l1 or biht-l2)");
}

AlgorithmSpec parse_algorithm_json(const nlohmann::json& j, Index default_k) {
  AlgorithmSpec out;
  out.config.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
  if (out.config.algorithm == Algorithm::Scr) {
    out.config.soft.order = j.value("order", 1);
    out.config.soft.steepness = j.value("steepness", 1.0);
  }
  std::string default_label;
  switch (out.config.algorithm) {
    case Algorithm::Scr:
      default_label = "SCR-" + std::to_string(out.config.soft.order);
      break;
    case Algorithm::BihtL1:
      default_label = "BIHT-L1";
      break;
    case Algorithm::BihtL2:
      default_label = "BIHT-L2";
      break;
  }
  out.label = j.value("label", default_label);

  if (j.contains("sparsity")) {
    const auto& sp = j.at("sparsity");
    const std::string mode = sp.at("mode").get<std::string>();
    if (mode == "hard-k") {
      out.config.sparsity = HardK{sp.value("k", default_k)};
    } else if (mode == "soft-lambda") {
      out.config.sparsity = SoftLambda{sp.at("lambda").get<double>()};
    } else {
      throw InvalidParameterError("sparsity mode must be hard-k or soft-lambda");
    }
  } else {
    out.config.sparsity = HardK{default_k};
  }

  if (j.contains("tau")) {
    out.config.step_size = j.at("tau").get<double>();
    out.auto_step_size = false;
  }
  out.config.max_iters = j.value("max_iters", 200);
  out.config.stall_tolerance = j.value("stall_tolerance", 1e-7);

  if (j.contains("steepness_by_sigma2")) {
    for (const auto& pair : j.at("steepness_by_sigma2")) {
      out.steepness_by_sigma2.emplace_back(pair.at(0).get<double>(),
                                           pair.at(1).get<double>());
    }
  }
  return out;
}

}  // namespace

std::uint64_t trial_instance_seed(std::uint64_t base_seed, Index m, double sigma2,
                                  int trial) {
  return derive_seed(base_seed, {static_cast<std::uint64_t>(m), seed_word(sigma2),
                                 static_cast<std::uint64_t>(trial)});
}

SolverConfig resolve_config(const AlgorithmSpec& algo, Index m, double sigma2) {
  SolverConfig cfg = algo.config;
  if (algo.auto_step_size) {
    cfg.step_size = default_step_size(cfg.algorithm, m);
  }
  if (cfg.algorithm == Algorithm::Scr && !algo.steepness_by_sigma2.empty()) {
    double best_key = 0.0;
    double best_dist = std::numeric_limits<double>::infinity();
    double chosen = cfg.soft.steepness;
    for (const auto& [key, steepness] : algo.steepness_by_sigma2) {
      const double dist = std::abs(key - sigma2);
      if (dist < best_dist || (dist == best_dist && key < best_key)) {
        best_dist = dist;
        best_key = key;
        chosen = steepness;
      }
    }
    cfg.soft.steepness = chosen;
  }
  return cfg;
}

TrialRecord run_trial(Index n, Index k, Index m, double sigma2,
                      const AlgorithmSpec& algo, std::uint64_t trial_seed) {
  TrialRecord rec;
  rec.label = algo.label;
  rec.m = m;
  rec.sigma2 = sigma2;
  rec.seed = trial_seed;

  const ProblemInstance inst = make_instance(n, k, m, sigma2, trial_seed);
  const SolverConfig cfg = resolve_config(algo, m, sigma2);

  const auto score = [&](const Vector& estimate) {
    const TrialMetrics metrics = score_estimate(estimate, inst.x, inst.phi, inst.y);
    rec.angular_error = metrics.angular_error;
    rec.hamming_error = metrics.hamming_error;
    rec.support_precision = metrics.support_precision;
    rec.support_recall = metrics.support_recall;
    rec.norm_error = std::abs(estimate.norm() - 1.0);
    rec.nonzeros = 0;
    for (Index i = 0; i < estimate.size(); ++i) {
      if (estimate[i] != 0.0) ++rec.nonzeros;
    }
  };

  try {
    const ReconResult result = reconstruct(inst.y, inst.phi, cfg);
    score(result.estimate);
    rec.iterations = result.iterations_run;
  } catch (const DegenerateIterateError& e) {
    rec.flagged = true;
    rec.iterations = e.iterations_completed();
    if (e.last_estimate().size() == n && e.last_estimate().norm() > 0.0) {
      score(e.last_estimate());
    }
  } catch (const DegenerateInitError&) {
    rec.flagged = true;  // nothing to score
  }
  return rec;
}

SweepResult sweep_measurements(const ExperimentSpec& spec) {
  if (spec.m_values.empty()) {
    throw InvalidParameterError("sweep_measurements: m_values must be non-empty");
  }
  if (spec.noise_values.size() != 1) {
    throw InvalidParameterError(
        "sweep_measurements: expected exactly one noise level");
  }
  return run_grid(spec);
}

SweepResult sweep_noise(const ExperimentSpec& spec) {
  if (spec.noise_values.empty()) {
    throw InvalidParameterError("sweep_noise: noise_values must be non-empty");
  }
  if (spec.m_values.size() != 1) {
    throw InvalidParameterError("sweep_noise: expected exactly one M");
  }
  return run_grid(spec);
}

TuneResult tune_steepness(const ExperimentSpec& spec, int order,
                          const std::vector<double>& grid) {
  if (grid.empty()) {
    throw InvalidParameterError("tune_steepness: grid must be non-empty");
  }
  for (const double a : grid) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw InvalidParameterError("tune_steepness: grid values must be finite and > 0");
    }
  }
  if (spec.m_values.size() != 1 || spec.noise_values.size() != 1) {
    throw InvalidParameterError(
        "tune_steepness: expected a single (M, sigma2) cell");
  }

  TuneResult out;
  out.curve.reserve(grid.size());
  for (const double a : grid) {
    ExperimentSpec probe = spec;
    AlgorithmSpec algo;
    algo.label = "SCR-" + std::to_string(order);
    algo.config.algorithm = Algorithm::Scr;
    algo.config.soft = SoftParams{a, order};
    algo.config.sparsity = HardK{spec.k};
    probe.algorithms = {algo};
    probe.keep_records = false;
    const SweepResult result = run_grid(probe);
    out.curve.push_back({a, result.cells.begin()->second.mean_ang});
  }

  out.best_steepness = out.curve.front().steepness;
  double best_mean = out.curve.front().mean_angular_error;
  for (const auto& point : out.curve) {
    if (point.mean_angular_error < best_mean ||
        (point.mean_angular_error == best_mean &&
         point.steepness < out.best_steepness)) {
      best_mean = point.mean_angular_error;
      out.best_steepness = point.steepness;
    }
  }
  return out;
}

std::string RankReport::render() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += entries[i].tied_with_prev ? " ~ " : " > ";
    out += entries[i].label;
  }
  return out;
}

std::string RankReport::render_numbers() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int number = reference_number(entries[i].label);
    if (number == 0) return "";
    if (i > 0) out += entries[i].tied_with_prev ? "~" : ">";
    out += "(" + std::to_string(number) + ")";
  }
  return out;
}

RankReport rank_algorithms(const SweepResult& sweep, Metric metric, Index m,
                           double sigma2, double equivalence_margin) {
  if (!(equivalence_margin >= 0.0)) {
    throw InvalidParameterError("rank_algorithms: margin must be >= 0");
  }

  RankReport report;
  report.metric = metric;
  report.m = m;
  report.sigma2 = sigma2;
  report.equivalence_margin = equivalence_margin;

  std::vector<std::pair<std::string, const CellStats*>> present;
  for (const auto& [key, cell] : sweep.cells) {
    if (std::get<1>(key) == m && std::get<2>(key) == sigma2) {
      present.emplace_back(std::get<0>(key), &cell);
    }
  }
  for (const char* label : kReferenceLabels) {
    const bool found = std::any_of(present.begin(), present.end(),
                                   [&](const auto& p) { return p.first == label; });
    if (!found) {
      throw IncompleteSweepError("rank_algorithms: sweep lacks '" +
                                 std::string(label) + "' at the requested cell");
    }
  }

  for (const auto& [label, cell] : present) {
    if (cell->count < 1) {
      throw IncompleteSweepError("rank_algorithms: '" + label +
                                 "' has no unflagged trials at the requested cell");
    }
    RankEntry entry;
    entry.label = label;
    entry.mean = metric == Metric::Angular ? cell->mean_ang : cell->mean_ham;
    const double stddev = metric == Metric::Angular ? cell->std_ang : cell->std_ham;
    entry.stderr_mean = stddev / std::sqrt(static_cast<double>(cell->count));
    report.entries.push_back(entry);
  }

  std::sort(report.entries.begin(), report.entries.end(),
            [](const RankEntry& a, const RankEntry& b) {
              if (a.mean != b.mean) return a.mean < b.mean;
              return a.label < b.label;
            });
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    const double gap = report.entries[i].mean - report.entries[i - 1].mean;
    const double pooled =
        std::sqrt(report.entries[i].stderr_mean * report.entries[i].stderr_mean +
                  report.entries[i - 1].stderr_mean * report.entries[i - 1].stderr_mean);
    report.entries[i].tied_with_prev = gap < equivalence_margin * pooled;
  }
  return report;
}

std::vector<ScatterPoint> collect_scatter(const ExperimentSpec& spec) {
  if (spec.m_values.size() != 1 || spec.noise_values.size() != 1) {
    throw InvalidParameterError("collect_scatter: expected a single (M, sigma2) cell");
  }
  ExperimentSpec full = spec;
  full.keep_records = true;
  return scatter_points(run_grid(full));
}

std::vector<ScatterPoint> scatter_points(const SweepResult& sweep) {
  std::vector<ScatterPoint> points;
  points.reserve(sweep.records.size());
  for (const auto& rec : sweep.records) {
    if (std::isfinite(rec.angular_error) && std::isfinite(rec.hamming_error)) {
      points.push_back({rec.label, rec.hamming_error, rec.angular_error});
    }
  }
  return points;
}

void write_trials_csv(std::ostream& out, const SweepResult& sweep) {
  CsvWriter csv(out);
  csv.row({"label", "M", "sigma2", "trial", "seed", "angular_error",
           "hamming_error", "iterations", "flagged"});
  for (const auto& rec : sweep.records) {
    csv.row({rec.label, format_int(rec.m), format_double(rec.sigma2),
             format_int(rec.trial), format_u64(rec.seed),
             format_double(rec.angular_error), format_double(rec.hamming_error),
             format_int(rec.iterations), rec.flagged ? "1" : "0"});
  }
}

void write_aggregate_csv(std::ostream& out, const SweepResult& sweep) {
  CsvWriter csv(out);
  csv.row({"label", "M", "sigma2", "mean_ang", "std_ang", "mean_ham", "std_ham",
           "count"});
  for (const auto& [key, cell] : sweep.cells) {
    csv.row({std::get<0>(key), format_int(std::get<1>(key)),
             format_double(std::get<2>(key)), format_double(cell.mean_ang),
             format_double(cell.std_ang), format_double(cell.mean_ham),
             format_double(cell.std_ham), format_int(cell.count)});
  }
}

void write_plot_csv(std::ostream& out, const SweepResult& sweep, SweepAxis axis,
                    Metric metric) {
  CsvWriter csv(out);
  csv.row({"label", "x", "mean", "stderr"});
  for (const auto& [key, cell] : sweep.cells) {
    const double x = axis == SweepAxis::Measurements
                         ? static_cast<double>(std::get<1>(key))
                         : std::get<2>(key);
    const double mean = metric == Metric::Angular ? cell.mean_ang : cell.mean_ham;
    const double stddev = metric == Metric::Angular ? cell.std_ang : cell.std_ham;
    const double stderr_mean =
        cell.count > 0 ? stddev / std::sqrt(static_cast<double>(cell.count))
                       : std::numeric_limits<double>::quiet_NaN();
    csv.row({std::get<0>(key), format_double(x), format_double(mean),
             format_double(stderr_mean)});
  }
}

void write_scatter_csv(std::ostream& out, const std::vector<ScatterPoint>& points) {
  CsvWriter csv(out);
  csv.row({"label", "hamming_error", "angular_error"});
  for (const auto& point : points) {
    csv.row({point.label, format_double(point.hamming), format_double(point.angular)});
  }
}

SweepResult read_aggregate_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error("read_aggregate_csv: empty input");
  }
  if (line != "label,M,sigma2,mean_ang,std_ang,mean_ham,std_ham,count") {
    throw Error("read_aggregate_csv: unexpected header '" + line + "'");
  }
  SweepResult out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 8) {
      throw Error("read_aggregate_csv: line " + std::to_string(line_no) +
                  " has " + std::to_string(cells.size()) + " columns, expected 8");
    }
    try {
      CellStats stats;
      const std::string label = cells[0];
      const Index m = static_cast<Index>(std::stoll(cells[1]));
      const double sigma2 = std::stod(cells[2]);
      stats.mean_ang = std::stod(cells[3]);
      stats.std_ang = std::stod(cells[4]);
      stats.mean_ham = std::stod(cells[5]);
      stats.std_ham = std::stod(cells[6]);
      stats.count = std::stoi(cells[7]);
      out.cells.emplace(CellKey{label, m, sigma2}, stats);
    } catch (const std::exception&) {
      throw Error("read_aggregate_csv: malformed numeric field on line " +
                  std::to_string(line_no));
    }
  }
  return out;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("load_experiment_spec: cannot open '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_experiment_spec: '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    ExperimentSpec spec;
    spec.n = j.value("n", Index{128});
    spec.k = j.value("k", Index{16});
    spec.m_values = j.at("m_values").get<std::vector<Index>>();
    spec.noise_values = j.at("noise_values").get<std::vector<double>>();
    spec.trials = j.value("trials", 200);
    spec.base_seed = j.value("base_seed", std::uint64_t{0});
    spec.jobs = j.value("jobs", 1);
    for (const auto& algo : j.at("algorithms")) {
      spec.algorithms.push_back(parse_algorithm_json(algo, spec.k));
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_experiment_spec: '" + path + "' is malformed: " + e.what());
  }
}

bool TunedSteepness::has(int order) const {
  return std::any_of(entries.begin(), entries.end(), [order](const auto& e) {
    return std::get<0>(e) == order;
  });
}

double TunedSteepness::lookup(int order, double sigma2) const {
  double best_key = 0.0;
  double best_dist = std::numeric_limits<double>::infinity();
  double chosen = 0.0;
  bool found = false;
  for (const auto& [p, key, steepness] : entries) {
    if (p != order) continue;
    const double dist = std::abs(key - sigma2);
    if (dist < best_dist || (dist == best_dist && key < best_key)) {
      best_dist = dist;
      best_key = key;
      chosen = steepness;
      found = true;
    }
  }
  if (!found) {
    throw InvalidParameterError("TunedSteepness: no entry for order " +
                                std::to_string(order));
  }
  return chosen;
}

void TunedSteepness::set(int order, double sigma2, double steepness) {
  for (auto& entry : entries) {
    if (std::get<0>(entry) == order && std::get<1>(entry) == sigma2) {
      std::get<2>(entry) = steepness;
      return;
    }
  }
  entries.emplace_back(order, sigma2, steepness);
  std::sort(entries.begin(), entries.end());
}

TunedSteepness load_tuned_steepness(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("load_tuned_steepness: cannot open '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_tuned_steepness: '" + path + "' is not valid JSON: " +
                e.what());
  }
  TunedSteepness out;
  try {
    for (const auto& entry : j.at("entries")) {
      out.set(entry.at("p").get<int>(), entry.at("sigma2").get<double>(),
              entry.at("steepness").get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_tuned_steepness: '" + path + "' is malformed: " + e.what());
  }
  return out;
}

void save_tuned_steepness(const TunedSteepness& tuned, const std::string& path) {
  nlohmann::json j;
  j["format"] = "scr-tuned-steepness";
  j["version"] = 1;
  j["entries"] = nlohmann::json::array();
  for (const auto& [p, sigma2, steepness] : tuned.entries) {
    j["entries"].push_back({{"p", p}, {"sigma2", sigma2}, {"steepness", steepness}});
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("save_tuned_steepness: cannot open '" + path + "' for writing");
  }
  out << j.dump(2) << '\n';
}

std::vector<AlgorithmSpec> reference_algorithms(Index k, const TunedSteepness& tuned) {
  std::vector<AlgorithmSpec> out;

  AlgorithmSpec l1;
  l1.label = "BIHT-L1";
  l1.config.algorithm = Algorithm::BihtL1;
  l1.config.sparsity = HardK{k};
  out.push_back(l1);

  AlgorithmSpec l2 = l1;
  l2.label = "BIHT-L2";
  l2.config.algorithm = Algorithm::BihtL2;
  out.push_back(l2);

  for (const int order : {1, 2, 4}) {
    if (!tuned.has(order)) {
      throw InvalidParameterError(
          "reference_algorithms: tuned steepness cache has no entry for SCR-" +
          std::to_string(order) + " (run tune-a, or pass an explicit steepness)");
    }
    AlgorithmSpec algo;
    algo.label = "SCR-" + std::to_string(order);
    algo.config.algorithm = Algorithm::Scr;
    algo.config.soft.order = order;
    algo.config.sparsity = HardK{k};
    for (const auto& [p, sigma2, steepness] : tuned.entries) {
      if (p == order) algo.steepness_by_sigma2.emplace_back(sigma2, steepness);
    }
    out.push_back(algo);
  }
  return out;
}

int reference_number(const std::string& label) {
  for (int i = 0; i < 5; ++i) {
    if (label == kReferenceLabels[i]) return i + 1;
  }
  return 0;
}

}  // namespace scr
