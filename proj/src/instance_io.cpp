#include "scr/instance_io.hpp"

#include <fstream>
#include <vector>

#include <json.hpp>

#include "scr/errors.hpp"
#include "scr/rng.hpp"

namespace scr {
namespace {

// Fixed stream keys so the three draws never alias.
constexpr std::uint64_t kSignalStream = 1;
constexpr std::uint64_t kMatrixStream = 2;
constexpr std::uint64_t kNoiseStream = 3;

}  // namespace

ProblemInstance make_instance(Index n, Index k, Index m, double sigma2,
                              std::uint64_t seed) {
  ProblemInstance inst;
  inst.n = n;
  inst.k = k;
  inst.m = m;
  inst.sigma2 = sigma2;
  inst.seed = seed;
  inst.x = gen_sparse_signal(n, k, derive_seed(seed, {kSignalStream}));
  inst.phi = gen_sensing_matrix(m, n, derive_seed(seed, {kMatrixStream}));
  inst.y = measure(inst.phi, inst.x, NoiseSpec{sigma2},
                   derive_seed(seed, {kNoiseStream}));
  return inst;
}

void save_instance(const ProblemInstance& instance, const std::string& path) {
  nlohmann::json j;
  j["format"] = "scr-instance";
  j["version"] = 1;
  j["n"] = instance.n;
  j["k"] = instance.k;
  j["m"] = instance.m;
  j["sigma2"] = instance.sigma2;
  j["seed"] = instance.seed;

  std::vector<double> phi;
  phi.reserve(static_cast<std::size_t>(instance.m * instance.n));
  for (Index i = 0; i < instance.m; ++i) {
    for (Index c = 0; c < instance.n; ++c) {
      phi.push_back(instance.phi.entries(i, c));
    }
  }
  j["phi"] = phi;

  std::vector<double> x(instance.x.values.data(),
                        instance.x.values.data() + instance.x.values.size());
  j["x"] = x;

  std::vector<double> y(instance.y.bits().data(),
                        instance.y.bits().data() + instance.y.size());
  j["y"] = y;

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("save_instance: cannot open '" + path + "' for writing");
  }
  out << j.dump(0) << '\n';
  if (!out) {
    throw Error("save_instance: write to '" + path + "' failed");
  }
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("load_instance: cannot open '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_instance: '" + path + "' is not valid JSON: " + e.what());
  }

  try {
    if (j.at("format").get<std::string>() != "scr-instance") {
      throw Error("load_instance: '" + path + "' is not an instance file");
    }
    ProblemInstance inst;
    inst.n = j.at("n").get<Index>();
    inst.k = j.at("k").get<Index>();
    inst.m = j.at("m").get<Index>();
    inst.sigma2 = j.at("sigma2").get<double>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    if (inst.n < 1 || inst.m < 1 || inst.k < 1 || inst.k > inst.n) {
      throw Error("load_instance: invalid dimensions in '" + path + "'");
    }

    const auto phi = j.at("phi").get<std::vector<double>>();
    const auto x = j.at("x").get<std::vector<double>>();
    const auto y = j.at("y").get<std::vector<double>>();
    if (phi.size() != static_cast<std::size_t>(inst.m * inst.n) ||
        x.size() != static_cast<std::size_t>(inst.n) ||
        y.size() != static_cast<std::size_t>(inst.m)) {
      throw Error("load_instance: array sizes disagree with dimensions in '" +
                  path + "'");
    }

    inst.phi.entries.resize(inst.m, inst.n);
    for (Index i = 0; i < inst.m; ++i) {
      for (Index c = 0; c < inst.n; ++c) {
        inst.phi.entries(i, c) = phi[static_cast<std::size_t>(i * inst.n + c)];
      }
    }

    inst.x.values.resize(inst.n);
    inst.x.support.clear();
    for (Index i = 0; i < inst.n; ++i) {
      inst.x.values[i] = x[static_cast<std::size_t>(i)];
      if (x[static_cast<std::size_t>(i)] != 0.0) inst.x.support.push_back(i);
    }

    Vector bits(inst.m);
    for (Index i = 0; i < inst.m; ++i) bits[i] = y[static_cast<std::size_t>(i)];
    inst.y = SignVector(bits);
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_instance: '" + path + "' is missing fields: " + e.what());
  }
}

}  // namespace scr
