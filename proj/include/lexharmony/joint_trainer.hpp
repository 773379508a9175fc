// Copyright 2026 The lexharmony Authors
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
#pragma once

// Joint training of per-corpus networks that keep a designated subset of
// layers identical: each iteration trains every corpus net by parallel
// model averaging over data shards, then averages the shared layers across
// corpora and copies the average back into every net.

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "lexharmony/error.hpp"
#include "lexharmony/nnet.hpp"

namespace lexharmony::nnet {

enum class SharingStrategy { kShareAll, kShareAllButLast, kShareAllButFirst, kShareAllButFirstAndLast };

inline const char* to_string(SharingStrategy s) {
  switch (s) {
    case SharingStrategy::kShareAll: return "SHARE_ALL";
    case SharingStrategy::kShareAllButLast: return "SHARE_ALL_BUT_LAST";
    case SharingStrategy::kShareAllButFirst: return "SHARE_ALL_BUT_FIRST";
    case SharingStrategy::kShareAllButFirstAndLast: return "SHARE_ALL_BUT_FIRST_AND_LAST";
  }
  return "?";
}

inline SharingStrategy parse_strategy(const std::string& s) {
  for (auto v : {SharingStrategy::kShareAll, SharingStrategy::kShareAllButLast,
                 SharingStrategy::kShareAllButFirst, SharingStrategy::kShareAllButFirstAndLast}) {
    if (s == to_string(v)) return v;
  }
  throw ValidationError("unknown sharing strategy '" + s + "'");
}

/// shared[i] tells whether layer i (0-based) is shared across corpora.
inline std::vector<bool> shared_mask(SharingStrategy s, std::size_t num_layers) {
  std::vector<bool> mask(num_layers, true);
  if (num_layers == 0) return mask;
  const bool keep_first = s == SharingStrategy::kShareAllButFirst || s == SharingStrategy::kShareAllButFirstAndLast;
  const bool keep_last = s == SharingStrategy::kShareAllButLast || s == SharingStrategy::kShareAllButFirstAndLast;
  if (keep_first) mask.front() = false;
  if (keep_last) mask.back() = false;
  return mask;
}

/// Deterministic split into e disjoint shards of near-equal size.
inline std::vector<Dataset> split_shards(const Dataset& data, int e, std::uint64_t seed) {
  if (e < 1) throw ValidationError("number of shards must be >= 1");
  std::vector<std::size_t> perm(data.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<Dataset> shards;
  const std::size_t n = data.size();
  for (int s = 0; s < e; ++s) {
    const std::size_t lo = n * static_cast<std::size_t>(s) / static_cast<std::size_t>(e);
    const std::size_t hi = n * static_cast<std::size_t>(s + 1) / static_cast<std::size_t>(e);
    shards.push_back(data.rows({perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                perm.begin() + static_cast<std::ptrdiff_t>(hi)}));
  }
  return shards;
}

/// Weighted average of nets with identical architecture, summed in index order.
inline LayeredNet average_nets(const std::vector<LayeredNet>& nets, const std::vector<double>& weights) {
  LayeredNet out = nets.front();
  for (std::size_t l = 0; l < out.num_layers(); ++l) {
    auto& layer = out.layers()[l];
    layer.weight = weights[0] * nets[0].layers()[l].weight;
    layer.bias = weights[0] * nets[0].layers()[l].bias;
    for (std::size_t k = 1; k < nets.size(); ++k) {
      layer.weight += weights[k] * nets[k].layers()[l].weight;
      layer.bias += weights[k] * nets[k].layers()[l].bias;
    }
  }
  return out;
}

/// Trains one copy of net per shard (concurrently) and averages them uniformly.
inline LayeredNet parallel_sgd_round(const LayeredNet& net, const std::vector<Dataset>& shards,
                                     const SgdConfig& cfg, bool threaded = true) {
  if (shards.empty()) throw ValidationError("parallel_sgd_round needs at least one shard");
  std::vector<LayeredNet> copies(shards.size());
  if (threaded && shards.size() > 1) {
    std::vector<std::thread> workers;
    for (std::size_t s = 0; s < shards.size(); ++s) {
      workers.emplace_back([&, s] { copies[s] = train_sgd(net, shards[s], cfg); });
    }
    for (auto& w : workers) w.join();
  } else {
    for (std::size_t s = 0; s < shards.size(); ++s) copies[s] = train_sgd(net, shards[s], cfg);
  }
  if (copies.size() == 1) return std::move(copies.front());
  // Sum then divide, so averaging equal copies reproduces them exactly for E = 2.
  LayeredNet out = copies.front();
  for (std::size_t l = 0; l < out.num_layers(); ++l) {
    auto& layer = out.layers()[l];
    for (std::size_t k = 1; k < copies.size(); ++k) {
      layer.weight += copies[k].layers()[l].weight;
      layer.bias += copies[k].layers()[l].bias;
    }
    layer.weight /= static_cast<double>(copies.size());
    layer.bias /= static_cast<double>(copies.size());
  }
  return out;
}

struct MultiCorpusNet {
  std::vector<LayeredNet> nets;  // one per corpus, identical architecture
  SharingStrategy strategy = SharingStrategy::kShareAllButFirstAndLast;

  std::vector<bool> mask() const { return shared_mask(strategy, nets.front().num_layers()); }

  /// True when every shared layer is bit-identical across corpus nets.
  bool shared_layers_equal() const {
    const auto m = mask();
    for (std::size_t l = 0; l < m.size(); ++l) {
      if (!m[l]) continue;
      for (std::size_t c = 1; c < nets.size(); ++c) {
        if (nets[c].layers()[l].weight != nets[0].layers()[l].weight ||
            nets[c].layers()[l].bias != nets[0].layers()[l].bias) {
          return false;
        }
      }
    }
    return true;
  }
};

/// Every corpus starts from the same initialization.
inline MultiCorpusNet make_multi_corpus_net(const NetGeometry& g, SharingStrategy s, std::size_t num_corpora,
                                            std::uint64_t seed) {
  if (num_corpora < 1) throw ValidationError("need at least one corpus");
  MultiCorpusNet mc;
  mc.strategy = s;
  mc.nets.assign(num_corpora, make_net(g, seed));
  return mc;
}

enum class CorpusWeighting { kUniform, kDataSize };

struct JointConfig {
  SgdConfig sgd;
  std::vector<double> lr_override;  // optional per-corpus learning rates
  CorpusWeighting weighting = CorpusWeighting::kUniform;
  bool threaded = true;
};

/// One joint iteration over per-corpus shard lists.
inline MultiCorpusNet joint_iteration(const MultiCorpusNet& mc, const std::vector<std::vector<Dataset>>& shards,
                                      const JointConfig& cfg) {
  if (shards.size() != mc.nets.size()) throw ValidationError("one shard list per corpus required");
  MultiCorpusNet out = mc;
  for (std::size_t c = 0; c < mc.nets.size(); ++c) {
    SgdConfig sgd = cfg.sgd;
    if (c < cfg.lr_override.size()) sgd.lr = cfg.lr_override[c];
    out.nets[c] = parallel_sgd_round(mc.nets[c], shards[c], sgd, cfg.threaded);
  }

  std::vector<double> w(mc.nets.size(), 1.0 / static_cast<double>(mc.nets.size()));
  if (cfg.weighting == CorpusWeighting::kDataSize) {
    double total = 0.0;
    for (std::size_t c = 0; c < shards.size(); ++c) {
      w[c] = 0.0;
      for (const auto& s : shards[c]) w[c] += static_cast<double>(s.size());
      total += w[c];
    }
    for (auto& x : w) x /= total;
  }
  const auto mask = out.mask();
  for (std::size_t l = 0; l < mask.size(); ++l) {
    if (!mask[l]) continue;
    Matrix weight = w[0] * out.nets[0].layers()[l].weight;
    Vector bias = w[0] * out.nets[0].layers()[l].bias;
    for (std::size_t c = 1; c < out.nets.size(); ++c) {
      weight += w[c] * out.nets[c].layers()[l].weight;
      bias += w[c] * out.nets[c].layers()[l].bias;
    }
    for (auto& net : out.nets) {
      net.layers()[l].weight = weight;
      net.layers()[l].bias = bias;
    }
  }
  return out;
}

/// Class priors as the mean posterior over the given frames.
inline Vector estimate_priors_marginal(const LayeredNet& net, const Matrix& data) {
  if (data.rows() == 0) throw ValidationError("prior estimation needs at least one frame");
  return forward(net, data).colwise().mean().transpose();
}

/// Normalized label histogram with add-smoothing per class.
inline Vector estimate_priors_alignment(const std::vector<int>& labels, int num_classes, double smoothing = 1.0) {
  if (num_classes < 1) throw ValidationError("num_classes must be >= 1");
  Vector h = Vector::Constant(num_classes, smoothing);
  for (int l : labels) {
    if (l < 0 || l >= num_classes) throw ValidationError("label out of range");
    h(l) += 1.0;
  }
  const double total = h.sum();
  if (total <= 0.0) throw ValidationError("no labels and no smoothing");
  return h / total;
}

// ---------------------------------------------------------------------------
// Capacity under a parameter budget

/// Parameters one corpus pays for: its private layers plus a 1/num_corpora
/// share of the shared layers.
inline double per_corpus_param_cost(const NetGeometry& g, SharingStrategy s, std::size_t num_corpora) {
  const auto net = make_net(g, 0);
  const auto mask = shared_mask(s, net.num_layers());
  double cost = 0.0;
  for (std::size_t l = 0; l < mask.size(); ++l) {
    const double n = static_cast<double>(net.layers()[l].num_params());
    cost += mask[l] ? n / static_cast<double>(num_corpora) : n;
  }
  return cost;
}

/// Widest hidden layer (a multiple of the p-norm group) whose per-corpus
/// cost fits the budget; 0 if none does.
inline int max_hidden_width(double budget, NetGeometry g, SharingStrategy s, std::size_t num_corpora,
                            int limit = 100000) {
  int best = 0;
  for (int h = g.group; h <= limit; h += g.group) {
    g.hidden_dim = h;
    // The per-corpus cost grows with h, so the first overflow ends the scan.
    if (per_corpus_param_cost(g, s, num_corpora) > budget) break;
    best = h;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Toy multi-corpus task

struct ToyTaskConfig {
  int num_corpora = 3;
  int samples_per_corpus = 400;
  int latent_dim = 6;
  int input_dim = 10;
  int num_classes = 5;
  double noise = 0.6;
  std::uint64_t seed = 7;
};

/// Corpora sharing latent class structure, each seen through its own
/// affine input transform and its own label permutation.
inline std::vector<Dataset> make_toy_corpora(const ToyTaskConfig& cfg) {
  Rng rng(cfg.seed);
  Matrix means(cfg.num_classes, cfg.latent_dim);
  for (Eigen::Index i = 0; i < means.size(); ++i) means(i) = 2.0 * rng.normal();
  std::vector<Dataset> out;
  for (int c = 0; c < cfg.num_corpora; ++c) {
    Matrix transform(cfg.input_dim, cfg.latent_dim);
    for (Eigen::Index i = 0; i < transform.size(); ++i) transform(i) = rng.normal() / std::sqrt(cfg.latent_dim);
    Vector offset(cfg.input_dim);
    for (Eigen::Index i = 0; i < offset.size(); ++i) offset(i) = rng.normal();
    std::vector<int> perm(static_cast<std::size_t>(cfg.num_classes));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

    Dataset d;
    d.features.resize(cfg.samples_per_corpus, cfg.input_dim);
    for (int s = 0; s < cfg.samples_per_corpus; ++s) {
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.num_classes)));
      Vector z = means.row(k).transpose();
      for (Eigen::Index i = 0; i < z.size(); ++i) z(i) += cfg.noise * rng.normal();
      d.features.row(s) = (transform * z + offset).transpose();
      d.labels.push_back(perm[static_cast<std::size_t>(k)]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Experiment driver

struct ExperimentConfig {
  NetGeometry geometry;
  SharingStrategy strategy = SharingStrategy::kShareAllButFirstAndLast;
  int shards = 2;
  int iterations = 20;
  std::uint64_t seed = 1;
  JointConfig joint;
  ToyTaskConfig toy;
};

inline nlohmann::json to_json(const ExperimentConfig& c) {
  return {{"geometry",
           {{"input_dim", c.geometry.input_dim},
            {"output_dim", c.geometry.output_dim},
            {"num_layers", c.geometry.num_layers},
            {"hidden_dim", c.geometry.hidden_dim},
            {"group", c.geometry.group},
            {"p", c.geometry.p}}},
          {"strategy", to_string(c.strategy)},
          {"shards", c.shards},
          {"iterations", c.iterations},
          {"seed", c.seed},
          {"lr", c.joint.sgd.lr},
          {"steps", c.joint.sgd.steps},
          {"minibatch", c.joint.sgd.minibatch},
          {"lr_override", c.joint.lr_override},
          {"weighting", c.joint.weighting == CorpusWeighting::kUniform ? "uniform" : "data_size"},
          {"toy",
           {{"num_corpora", c.toy.num_corpora},
            {"samples_per_corpus", c.toy.samples_per_corpus},
            {"latent_dim", c.toy.latent_dim},
            {"num_classes", c.toy.num_classes},
            {"noise", c.toy.noise},
            {"seed", c.toy.seed}}}};
}

/// Defaults give the 7-layer, 100-wide, 1:10 p-norm geometry on the toy task.
inline ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  if (!j.is_object()) throw ParseError("experiment config must be a JSON object");
  static const std::set<std::string> known{"geometry", "strategy", "shards",     "iterations",  "seed", "lr",
                                           "steps",    "minibatch", "lr_override", "weighting", "toy"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ValidationError("unknown experiment config key '" + key + "'");
  }
  try {
    if (j.contains("toy")) {
      const auto& t = j.at("toy");
      c.toy.num_corpora = t.value("num_corpora", c.toy.num_corpora);
      c.toy.samples_per_corpus = t.value("samples_per_corpus", c.toy.samples_per_corpus);
      c.toy.latent_dim = t.value("latent_dim", c.toy.latent_dim);
      c.toy.num_classes = t.value("num_classes", c.toy.num_classes);
      c.toy.noise = t.value("noise", c.toy.noise);
      c.toy.seed = t.value("seed", c.toy.seed);
    }
    c.geometry.output_dim = c.toy.num_classes;
    c.geometry.input_dim = c.toy.input_dim;
    if (j.contains("geometry")) {
      const auto& g = j.at("geometry");
      c.geometry.input_dim = g.value("input_dim", c.geometry.input_dim);
      c.geometry.num_layers = g.value("num_layers", c.geometry.num_layers);
      c.geometry.hidden_dim = g.value("hidden_dim", c.geometry.hidden_dim);
      c.geometry.group = g.value("group", c.geometry.group);
      c.geometry.p = g.value("p", c.geometry.p);
      c.geometry.output_dim = g.value("output_dim", c.geometry.output_dim);
    }
    c.toy.input_dim = c.geometry.input_dim;
    c.strategy = parse_strategy(j.value("strategy", std::string(to_string(c.strategy))));
    c.shards = j.value("shards", c.shards);
    c.iterations = j.value("iterations", c.iterations);
    c.seed = j.value("seed", c.seed);
    c.joint.sgd.lr = j.value("lr", c.joint.sgd.lr);
    c.joint.sgd.steps = j.value("steps", c.joint.sgd.steps);
    c.joint.sgd.minibatch = j.value("minibatch", c.joint.sgd.minibatch);
    c.joint.lr_override = j.value("lr_override", std::vector<double>{});
    const auto weighting = j.value("weighting", std::string("uniform"));
    if (weighting == "uniform") c.joint.weighting = CorpusWeighting::kUniform;
    else if (weighting == "data_size") c.joint.weighting = CorpusWeighting::kDataSize;
    else throw ValidationError("unknown weighting '" + weighting + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed experiment config: ") + e.what());
  }
  if (c.geometry.output_dim != c.toy.num_classes) throw ValidationError("output_dim must equal toy num_classes");
  return c;
}

/// FNV-1a over the bytes of corpus 0's shared parameters.
inline std::string shared_checksum(const MultiCorpusNet& mc) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const double* p, Eigen::Index n) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) * sizeof(double); ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
  };
  const auto mask = mc.mask();
  for (std::size_t l = 0; l < mask.size(); ++l) {
    if (!mask[l]) continue;
    const auto& layer = mc.nets[0].layers()[l];
    mix(layer.weight.data(), layer.weight.size());
    mix(layer.bias.data(), layer.bias.size());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct IterationMetrics {
  int iteration = 0;
  std::vector<double> loss;
  double mean_loss = 0.0;
  std::string shared_checksum;
  std::vector<std::vector<double>> priors;
};

inline nlohmann::json to_json(const IterationMetrics& m) {
  return {{"iteration", m.iteration},
          {"loss", m.loss},
          {"mean_loss", m.mean_loss},
          {"shared_checksum", m.shared_checksum},
          {"priors", m.priors}};
}

struct ExperimentResult {
  MultiCorpusNet net;
  std::vector<IterationMetrics> metrics;  // entry 0 is the initial state
};

inline IterationMetrics measure(const MultiCorpusNet& mc, const std::vector<Dataset>& data, int iteration) {
  IterationMetrics m;
  m.iteration = iteration;
  for (std::size_t c = 0; c < data.size(); ++c) {
    m.loss.push_back(loss(mc.nets[c], data[c].features, data[c].labels));
    const Vector pri = estimate_priors_marginal(mc.nets[c], data[c].features);
    m.priors.emplace_back(pri.data(), pri.data() + pri.size());
  }
  m.mean_loss = std::accumulate(m.loss.begin(), m.loss.end(), 0.0) / static_cast<double>(m.loss.size());
  m.shared_checksum = shared_checksum(mc);
  return m;
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                       const std::function<void(const IterationMetrics&)>& on_iteration = {}) {
  const auto data = make_toy_corpora(cfg.toy);
  std::vector<std::vector<Dataset>> shards;
  for (const auto& d : data) shards.push_back(split_shards(d, cfg.shards, cfg.seed));
  ExperimentResult r;
  r.net = make_multi_corpus_net(cfg.geometry, cfg.strategy, data.size(), cfg.seed);
  r.metrics.push_back(measure(r.net, data, 0));
  if (on_iteration) on_iteration(r.metrics.back());
  for (int it = 1; it <= cfg.iterations; ++it) {
    r.net = joint_iteration(r.net, shards, cfg.joint);
    r.metrics.push_back(measure(r.net, data, it));
    if (on_iteration) on_iteration(r.metrics.back());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Checkpoints: 8-byte magic, little-endian u64 header length, JSON header,
// then every corpus net's parameters as little-endian doubles (per layer:
// weight row-major, then bias).

inline constexpr char kCheckpointMagic[8] = {'L', 'X', 'H', 'N', 'E', 'T', '0', '1'};

inline void save_checkpoint(const std::filesystem::path& path, const MultiCorpusNet& mc, int iteration) {
  static_assert(std::endian::native == std::endian::little, "checkpoint IO assumes a little-endian host");
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& l : mc.nets.front().layers()) {
    layers.push_back({{"input_dim", l.input_dim()},
                      {"affine_dim", l.affine_dim()},
                      {"activation", to_string(l.act.kind)},
                      {"group", l.act.group},
                      {"p", l.act.p}});
  }
  const std::string header = nlohmann::json{{"strategy", to_string(mc.strategy)},
                                            {"iteration", iteration},
                                            {"num_corpora", mc.nets.size()},
                                            {"layers", layers}}
                                 .dump();
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(kCheckpointMagic, sizeof kCheckpointMagic);
  const std::uint64_t len = header.size();
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  for (const auto& net : mc.nets) {
    for (const auto& l : net.layers()) {
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> w = l.weight;
      out.write(reinterpret_cast<const char*>(w.data()), static_cast<std::streamsize>(w.size() * sizeof(double)));
      out.write(reinterpret_cast<const char*>(l.bias.data()),
                static_cast<std::streamsize>(l.bias.size() * sizeof(double)));
    }
  }
  if (!out) throw IoError("failed writing " + path.string());
}

struct Checkpoint {
  MultiCorpusNet net;
  int iteration = 0;
};

inline Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kCheckpointMagic, sizeof magic) != 0) throw ParseError("not a checkpoint file");
  std::uint64_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof len);
  std::string header(len, '\0');
  in.read(header.data(), static_cast<std::streamsize>(len));
  if (!in) throw ParseError("truncated checkpoint header");
  Checkpoint ck;
  try {
    const auto h = nlohmann::json::parse(header);
    ck.iteration = h.at("iteration").get<int>();
    ck.net.strategy = parse_strategy(h.at("strategy").get<std::string>());
    const auto num = h.at("num_corpora").get<std::size_t>();
    for (std::size_t c = 0; c < num; ++c) {
      std::vector<AffineLayer> layers;
      for (const auto& lj : h.at("layers")) {
        AffineLayer l;
        const auto act = lj.at("activation").get<std::string>();
        l.act.kind = act == "PNORM" ? ActivationKind::kPNorm
                     : act == "SOFTMAX" ? ActivationKind::kSoftmax
                                        : ActivationKind::kIdentity;
        l.act.group = lj.at("group").get<int>();
        l.act.p = lj.at("p").get<double>();
        Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> w(
            lj.at("affine_dim").get<int>(), lj.at("input_dim").get<int>());
        in.read(reinterpret_cast<char*>(w.data()), static_cast<std::streamsize>(w.size() * sizeof(double)));
        l.weight = w;
        l.bias.resize(w.rows());
        in.read(reinterpret_cast<char*>(l.bias.data()), static_cast<std::streamsize>(l.bias.size() * sizeof(double)));
        if (!in) throw ParseError("truncated checkpoint parameters");
        layers.push_back(std::move(l));
      }
      ck.net.nets.emplace_back(std::move(layers));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed checkpoint header: ") + e.what());
  }
  return ck;
}

}  // namespace lexharmony::nnet
