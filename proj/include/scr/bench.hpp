#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "scr/solvers.hpp"

namespace scr {

enum class Metric { Angular, Hamming };

// One benchmarked configuration. The stored SolverConfig is a template:
// per-cell values (step size for BIHT-L2, tuned SCR steepness) are
// resolved against the cell's (M, sigma^2) by resolve_config.
struct AlgorithmSpec {
  std::string label;
  SolverConfig config;
  // When true the step size falls back to default_step_size(alg, M).
  bool auto_step_size = true;
  // (sigma^2, steepness) pairs from the tuned cache; the nearest sigma^2
  // wins, ties toward the smaller key. Empty: config.soft.steepness as-is.
  std::vector<std::pair<double, double>> steepness_by_sigma2;
};

struct ExperimentSpec {
  Index n = 128;
  Index k = 16;
  std::vector<Index> m_values;
  std::vector<double> noise_values;
  std::vector<AlgorithmSpec> algorithms;
  int trials = 200;
  std::uint64_t base_seed = 0;
  int jobs = 1;  // <= 0: one worker per hardware thread
  bool keep_records = true;
};

struct TrialRecord {
  std::string label;
  Index m = 0;
  double sigma2 = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  double angular_error = std::numeric_limits<double>::quiet_NaN();
  double hamming_error = std::numeric_limits<double>::quiet_NaN();
  double support_precision = std::numeric_limits<double>::quiet_NaN();
  double support_recall = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  bool flagged = false;
  // Contract audit fields; not part of the CSV schema.
  double norm_error = std::numeric_limits<double>::quiet_NaN();
  Index nonzeros = 0;
};

struct CellStats {
  double mean_ang = 0.0;
  double std_ang = 0.0;
  double mean_ham = 0.0;
  double std_ham = 0.0;
  int count = 0;     // trials included in the means
  int excluded = 0;  // flagged trials, reported separately
};

// (label, M, sigma^2)
using CellKey = std::tuple<std::string, Index, double>;

struct SweepResult {
  // Grid-major order: M, then sigma^2, then algorithm, then trial index.
  // Aggregation consumes records in exactly this order, so parallel and
  // serial runs aggregate bit-identically.
  std::vector<TrialRecord> records;
  std::map<CellKey, CellStats> cells;
};

// Instance stream for one trial. Independent of the algorithm, so every
// algorithm at a given (M, sigma^2, trial) sees the same instance.
std::uint64_t trial_instance_seed(std::uint64_t base_seed, Index m, double sigma2,
                                  int trial);

SolverConfig resolve_config(const AlgorithmSpec& algo, Index m, double sigma2);

// Generates the instance from trial_seed, reconstructs, and scores. A
// degenerate solver abort yields a flagged record (metrics taken from the
// carried estimate when available) rather than a dropped trial.
TrialRecord run_trial(Index n, Index k, Index m, double sigma2,
                      const AlgorithmSpec& algo, std::uint64_t trial_seed);

// Grid over m_values x algorithms at the experiment's single noise level.
SweepResult sweep_measurements(const ExperimentSpec& spec);

// Grid over noise_values x algorithms at the experiment's single M.
SweepResult sweep_noise(const ExperimentSpec& spec);

struct TuneCurvePoint {
  double steepness = 0.0;
  double mean_angular_error = 0.0;
};

struct TuneResult {
  double best_steepness = 0.0;
  std::vector<TuneCurvePoint> curve;  // one point per grid value, in grid order
};

// Runs the trial protocol for an SCR of the given order at each steepness
// in the grid (single (M, sigma^2) cell) and keeps the minimizer of the
// mean angular error; ties go to the smallest steepness.
TuneResult tune_steepness(const ExperimentSpec& spec, int order,
                          const std::vector<double>& grid);

struct RankEntry {
  std::string label;
  double mean = 0.0;
  double stderr_mean = 0.0;
  // Difference to the previous (better) entry is within the equivalence
  // margin, i.e. the pair is statistically tied.
  bool tied_with_prev = false;
};

struct RankReport {
  Metric metric = Metric::Angular;
  Index m = 0;
  double sigma2 = 0.0;
  double equivalence_margin = 1.0;
  std::vector<RankEntry> entries;  // ascending mean error

  // "SCR-1 ~ SCR-2 > BIHT-L2" style chain.
  std::string render() const;
  // "(3)~(4)>(2)" using the reference-set numbering; empty when an entry
  // is not part of the reference set.
  std::string render_numbers() const;
};

// Sorts the algorithms at cell (m, sigma2) by mean error, ascending.
// Adjacent means closer than margin * pooled standard error are flagged
// as tied. All five reference algorithms must be present.
RankReport rank_algorithms(const SweepResult& sweep, Metric metric, Index m,
                           double sigma2, double equivalence_margin = 1.0);

struct ScatterPoint {
  std::string label;
  double hamming = 0.0;
  double angular = 0.0;
};

// Per-trial (Hamming, angular) pairs at a single (M, sigma^2) cell; every
// trial with computable metrics is retained, flagged or not.
std::vector<ScatterPoint> collect_scatter(const ExperimentSpec& spec);

// The same extraction from an already-run sweep's records.
std::vector<ScatterPoint> scatter_points(const SweepResult& sweep);

// CSV schemas (fixed column order, '\n' line endings):
//   trials:    label,M,sigma2,trial,seed,angular_error,hamming_error,iterations,flagged
//   aggregate: label,M,sigma2,mean_ang,std_ang,mean_ham,std_ham,count
//   plot:      label,x,mean,stderr
//   scatter:   label,hamming_error,angular_error
void write_trials_csv(std::ostream& out, const SweepResult& sweep);
void write_aggregate_csv(std::ostream& out, const SweepResult& sweep);

enum class SweepAxis { Measurements, Noise };
void write_plot_csv(std::ostream& out, const SweepResult& sweep, SweepAxis axis,
                    Metric metric);
void write_scatter_csv(std::ostream& out, const std::vector<ScatterPoint>& points);

// Reads an aggregate CSV back into cells (records stay empty).
SweepResult read_aggregate_csv(std::istream& in);

// Declarative experiment config, JSON; schema documented in the README.
ExperimentSpec load_experiment_spec(const std::string& path);

// Cache of empirically tuned SCR steepness values, keyed by (order p,
// sigma^2). Produced by tune-steepness runs, consumed when building the
// reference algorithm set.
struct TunedSteepness {
  // (order, sigma2, steepness), kept sorted by (order, sigma2).
  std::vector<std::tuple<int, double, double>> entries;

  bool has(int order) const;
  // Nearest sigma^2 among the entries for this order; ties toward the
  // smaller key. Throws InvalidParameterError when the order is absent.
  double lookup(int order, double sigma2) const;
  void set(int order, double sigma2, double steepness);
};

TunedSteepness load_tuned_steepness(const std::string& path);
void save_tuned_steepness(const TunedSteepness& tuned, const std::string& path);

// The five-algorithm reference set: BIHT-L1, BIHT-L2, SCR-1, SCR-2, SCR-4,
// all in HardK(k) mode, SCR steepness tables taken from the cache.
std::vector<AlgorithmSpec> reference_algorithms(Index k, const TunedSteepness& tuned);

// Conventional numbering of the reference set (BIHT-L1 = 1, BIHT-L2 = 2,
// SCR-1 = 3, SCR-2 = 4, SCR-4 = 5); 0 for anything else.
int reference_number(const std::string& label);

}  // namespace scr
