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

// Feedforward nets of affine layers with p-norm, softmax or identity
// activations, trained with mean cross-entropy and plain SGD.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lexharmony/error.hpp"

namespace lexharmony::nnet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Seeded generator with portable uniform draws (std distributions are
/// implementation-defined, which would break bit reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  double normal() {
    // Box-Muller on two portable uniforms.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * uniform());
  }

 private:
  std::mt19937_64 engine_;
};

enum class ActivationKind { kPNorm, kSoftmax, kIdentity };

inline const char* to_string(ActivationKind k) {
  switch (k) {
    case ActivationKind::kPNorm: return "PNORM";
    case ActivationKind::kSoftmax: return "SOFTMAX";
    case ActivationKind::kIdentity: return "IDENTITY";
  }
  return "?";
}

struct Activation {
  ActivationKind kind = ActivationKind::kIdentity;
  int group = 1;   // p-norm group size G
  double p = 2.0;  // p-norm exponent
};

struct AffineLayer {
  Matrix weight;  // output x input
  Vector bias;
  Activation act;

  int input_dim() const { return static_cast<int>(weight.cols()); }
  int affine_dim() const { return static_cast<int>(weight.rows()); }
  int output_dim() const {
    return act.kind == ActivationKind::kPNorm ? affine_dim() / act.group : affine_dim();
  }
  std::size_t num_params() const { return static_cast<std::size_t>(weight.size() + bias.size()); }
};

class LayeredNet {
 public:
  LayeredNet() = default;
  explicit LayeredNet(std::vector<AffineLayer> layers) : layers_(std::move(layers)) { validate(); }

  std::vector<AffineLayer>& layers() noexcept { return layers_; }
  const std::vector<AffineLayer>& layers() const noexcept { return layers_; }
  std::size_t num_layers() const noexcept { return layers_.size(); }
  int input_dim() const { return layers_.front().input_dim(); }
  int output_dim() const { return layers_.back().output_dim(); }

  std::size_t num_params() const {
    std::size_t n = 0;
    for (const auto& l : layers_) n += l.num_params();
    return n;
  }

  void validate() const {
    if (layers_.empty()) throw ValidationError("a net needs at least one layer");
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      const auto& l = layers_[i];
      if (l.bias.size() != l.weight.rows()) throw ValidationError("bias size mismatch");
      if (l.act.kind == ActivationKind::kPNorm) {
        if (l.act.group < 1 || l.affine_dim() % l.act.group != 0) {
          throw ValidationError("p-norm group must divide the layer dimension");
        }
        if (!(l.act.p >= 1.0)) throw ValidationError("p-norm exponent must be >= 1");
      }
      if (i > 0 && layers_[i - 1].output_dim() != l.input_dim()) {
        throw ValidationError("layer " + std::to_string(i) + " input does not match previous output");
      }
    }
  }

  friend bool operator==(const LayeredNet& a, const LayeredNet& b) {
    if (a.layers_.size() != b.layers_.size()) return false;
    for (std::size_t i = 0; i < a.layers_.size(); ++i) {
      const auto& x = a.layers_[i];
      const auto& y = b.layers_[i];
      if (x.weight.rows() != y.weight.rows() || x.weight.cols() != y.weight.cols() ||
          x.weight != y.weight || x.bias != y.bias || x.act.kind != y.act.kind ||
          x.act.group != y.act.group || x.act.p != y.act.p) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<AffineLayer> layers_;
};

/// Geometry of a p-norm classifier: num_layers affine layers; every hidden
/// layer has hidden_dim affine outputs pooled 1:group into hidden_dim/group.
struct NetGeometry {
  int input_dim = 10;
  int output_dim = 5;
  int num_layers = 7;
  int hidden_dim = 100;
  int group = 10;
  double p = 2.0;
};

inline std::size_t param_count(const NetGeometry& g) {
  const std::size_t pooled = static_cast<std::size_t>(g.hidden_dim / g.group);
  if (g.num_layers == 1) return static_cast<std::size_t>((g.input_dim + 1) * g.output_dim);
  std::size_t n = static_cast<std::size_t>(g.input_dim + 1) * g.hidden_dim;  // first
  n += static_cast<std::size_t>(g.num_layers - 2) * (pooled + 1) * g.hidden_dim;
  n += (pooled + 1) * static_cast<std::size_t>(g.output_dim);  // last
  return n;
}

inline LayeredNet make_net(const NetGeometry& g, std::uint64_t seed) {
  if (g.num_layers < 1) throw ValidationError("num_layers must be >= 1");
  if (g.group < 1 || g.hidden_dim % g.group != 0) {
    throw ValidationError("hidden_dim must be a multiple of the p-norm group");
  }
  Rng rng(seed);
  std::vector<AffineLayer> layers;
  int in = g.input_dim;
  for (int i = 0; i < g.num_layers; ++i) {
    const bool last = i + 1 == g.num_layers;
    AffineLayer l;
    const int out = last ? g.output_dim : g.hidden_dim;
    l.act = last ? Activation{ActivationKind::kSoftmax} : Activation{ActivationKind::kPNorm, g.group, g.p};
    // Scale so pooled outputs start near unit magnitude.
    const double r = last ? std::sqrt(3.0 / in) : std::sqrt(3.0 / (in * static_cast<double>(g.group)));
    l.weight.resize(out, in);
    for (int row = 0; row < out; ++row) {
      for (int col = 0; col < in; ++col) l.weight(row, col) = rng.uniform(-r, r);
    }
    l.bias = Vector::Zero(out);
    layers.push_back(std::move(l));
    in = layers.back().output_dim();
  }
  return LayeredNet(std::move(layers));
}

namespace detail {

inline Matrix activate(const Activation& act, const Matrix& z) {
  switch (act.kind) {
    case ActivationKind::kIdentity:
      return z;
    case ActivationKind::kSoftmax: {
      Matrix y(z.rows(), z.cols());
      for (Eigen::Index r = 0; r < z.rows(); ++r) {
        const double mx = z.row(r).maxCoeff();
        y.row(r) = (z.row(r).array() - mx).exp();
        y.row(r) /= y.row(r).sum();
      }
      return y;
    }
    case ActivationKind::kPNorm: {
      const int g = act.group;
      Matrix y(z.rows(), z.cols() / g);
      for (Eigen::Index r = 0; r < z.rows(); ++r) {
        for (Eigen::Index j = 0; j < y.cols(); ++j) {
          double s = 0.0;
          for (int i = 0; i < g; ++i) s += std::pow(std::abs(z(r, j * g + i)), act.p);
          y(r, j) = std::pow(s, 1.0 / act.p);
        }
      }
      return y;
    }
  }
  return z;
}

}  // namespace detail

struct ForwardTrace {
  std::vector<Matrix> inputs;  // input to each layer
  std::vector<Matrix> pre;     // affine outputs
  Matrix output;
};

inline ForwardTrace forward_trace(const LayeredNet& net, const Matrix& batch) {
  if (batch.cols() != net.input_dim()) {
    throw ValidationError("input dimension " + std::to_string(batch.cols()) + " does not match net input " +
                          std::to_string(net.input_dim()));
  }
  ForwardTrace t;
  Matrix x = batch;
  for (const auto& l : net.layers()) {
    t.inputs.push_back(x);
    Matrix z = x * l.weight.transpose();
    z.rowwise() += l.bias.transpose();
    x = detail::activate(l.act, z);
    t.pre.push_back(std::move(z));
  }
  t.output = std::move(x);
  return t;
}

/// Rows are samples; returns one output row per sample.
inline Matrix forward(const LayeredNet& net, const Matrix& batch) { return forward_trace(net, batch).output; }

struct Gradients {
  std::vector<Matrix> weight;
  std::vector<Vector> bias;
  double loss = 0.0;
};

inline double cross_entropy(const Matrix& posteriors, const std::vector<int>& labels) {
  double sum = 0.0;
  for (Eigen::Index r = 0; r < posteriors.rows(); ++r) sum -= std::log(posteriors(r, labels[r]));
  return sum / static_cast<double>(posteriors.rows());
}

inline double loss(const LayeredNet& net, const Matrix& batch, const std::vector<int>& labels) {
  return cross_entropy(forward(net, batch), labels);
}

/// Gradient of the mean cross-entropy. The final layer must be softmax. The
/// p-norm subgradient is 0 wherever a group's norm is 0.
inline Gradients backward(const LayeredNet& net, const Matrix& batch, const std::vector<int>& labels) {
  if (net.layers().back().act.kind != ActivationKind::kSoftmax) {
    throw ValidationError("backward requires a softmax output layer");
  }
  if (static_cast<Eigen::Index>(labels.size()) != batch.rows()) throw ValidationError("one label per row required");
  const auto t = forward_trace(net, batch);
  const auto n = static_cast<double>(batch.rows());
  for (int lab : labels) {
    if (lab < 0 || lab >= net.output_dim()) throw ValidationError("label out of range");
  }

  Gradients g;
  g.loss = cross_entropy(t.output, labels);
  const std::size_t L = net.num_layers();
  g.weight.resize(L);
  g.bias.resize(L);

  Matrix dz = t.output;
  for (Eigen::Index r = 0; r < dz.rows(); ++r) dz(r, labels[r]) -= 1.0;
  dz /= n;
  for (std::size_t li = L; li-- > 0;) {
    const auto& l = net.layers()[li];
    g.weight[li] = dz.transpose() * t.inputs[li];
    g.bias[li] = dz.colwise().sum().transpose();
    if (li == 0) break;
    Matrix dy = dz * l.weight;  // gradient w.r.t. this layer's input
    const auto& prev = net.layers()[li - 1];
    const Matrix& z = t.pre[li - 1];
    switch (prev.act.kind) {
      case ActivationKind::kIdentity:
        dz = std::move(dy);
        break;
      case ActivationKind::kPNorm: {
        const int gs = prev.act.group;
        const double p = prev.act.p;
        const Matrix& y = t.inputs[li];
        dz.resize(z.rows(), z.cols());
        for (Eigen::Index r = 0; r < z.rows(); ++r) {
          for (Eigen::Index j = 0; j < y.cols(); ++j) {
            const double yj = y(r, j);
            for (int i = 0; i < gs; ++i) {
              const double x = z(r, j * gs + i);
              dz(r, j * gs + i) = yj > 0.0 && x != 0.0
                                      ? dy(r, j) * std::pow(std::abs(x), p - 1.0) * (x > 0 ? 1.0 : -1.0) /
                                            std::pow(yj, p - 1.0)
                                      : 0.0;
            }
          }
        }
        break;
      }
      case ActivationKind::kSoftmax:
        throw ValidationError("softmax is only supported on the output layer");
    }
  }
  return g;
}

inline void sgd_step(LayeredNet& net, const Gradients& g, double lr) {
  for (std::size_t i = 0; i < net.num_layers(); ++i) {
    net.layers()[i].weight -= lr * g.weight[i];
    net.layers()[i].bias -= lr * g.bias[i];
  }
}

struct Dataset {
  Matrix features;  // one row per sample
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }

  Dataset rows(const std::vector<std::size_t>& idx) const {
    Dataset d;
    d.features.resize(static_cast<Eigen::Index>(idx.size()), features.cols());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      d.features.row(static_cast<Eigen::Index>(i)) = features.row(static_cast<Eigen::Index>(idx[i]));
      d.labels.push_back(labels[idx[i]]);
    }
    return d;
  }
};

struct SgdConfig {
  double lr = 0.1;
  int steps = 10;
  int minibatch = 32;  // <= 0 means full batch
};

/// steps SGD updates; minibatches are taken cyclically in row order.
inline LayeredNet train_sgd(LayeredNet net, const Dataset& data, const SgdConfig& cfg) {
  if (data.size() == 0) return net;
  const std::size_t n = data.size();
  const std::size_t b = cfg.minibatch <= 0 ? n : std::min<std::size_t>(n, static_cast<std::size_t>(cfg.minibatch));
  std::size_t cursor = 0;
  std::vector<std::size_t> idx(b);
  for (int s = 0; s < cfg.steps; ++s) {
    for (std::size_t i = 0; i < b; ++i) idx[i] = (cursor + i) % n;
    cursor = (cursor + b) % n;
    const Dataset mb = b == n ? data : data.rows(idx);
    sgd_step(net, backward(net, mb.features, mb.labels), cfg.lr);
  }
  return net;
}

}  // namespace lexharmony::nnet
