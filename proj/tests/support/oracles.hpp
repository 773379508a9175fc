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

// Reference implementations written independently of the library code paths
// they check: top-down recursion instead of table filling, sequential
// rewriting instead of compiled maps, brute-force grids instead of EM.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lexharmony/lexharmony.hpp"

namespace lexharmony::oracle {

/// Memoised recursion over (i, j) suffixes: the textbook definition.
template <class Seq>
class EditOracle {
 public:
  EditOracle(const Seq& a, const Seq& b) : a_(a), b_(b), memo_((a.size() + 1) * (b.size() + 1), -1) {}

  int distance() { return d(a_.size(), b_.size()); }

  // d(i, j): distance between the first i symbols of a and first j of b.
  int d(std::size_t i, std::size_t j) {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    int& slot = memo_[i * (b_.size() + 1) + j];
    if (slot >= 0) return slot;
    const int sub = d(i - 1, j - 1) + (a_[i - 1] == b_[j - 1] ? 0 : 1);
    const int del = d(i - 1, j) + 1;
    const int ins = d(i, j - 1) + 1;
    slot = std::min({sub, del, ins});
    return slot;
  }

  /// Op kinds of the preferred optimal path, read from the end backwards
  /// with MATCH > SUB > DEL > INS at every step.
  std::vector<EditKind> preferred_kinds() {
    std::vector<EditKind> out;
    std::size_t i = a_.size(), j = b_.size();
    while (i > 0 || j > 0) {
      const int here = d(i, j);
      if (i > 0 && j > 0 && a_[i - 1] == b_[j - 1] && d(i - 1, j - 1) == here) {
        out.push_back(EditKind::kMatch), --i, --j;
      } else if (i > 0 && j > 0 && a_[i - 1] != b_[j - 1] && d(i - 1, j - 1) + 1 == here) {
        out.push_back(EditKind::kSub), --i, --j;
      } else if (i > 0 && d(i - 1, j) + 1 == here) {
        out.push_back(EditKind::kDel), --i;
      } else {
        out.push_back(EditKind::kIns), --j;
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  const Seq& a_;
  const Seq& b_;
  std::vector<int> memo_;
};

template <class Seq>
int edit_distance(const Seq& a, const Seq& b) {
  return EditOracle<Seq>(a, b).distance();
}

/// Plain exhaustive recursion without memo (exponential, short inputs only).
template <class Seq>
int edit_distance_naive(const Seq& a, const Seq& b, std::size_t i = 0, std::size_t j = 0) {
  if (i == a.size()) return static_cast<int>(b.size() - j);
  if (j == b.size()) return static_cast<int>(a.size() - i);
  if (a[i] == b[j]) return edit_distance_naive(a, b, i + 1, j + 1);
  return 1 + std::min({edit_distance_naive(a, b, i + 1, j + 1), edit_distance_naive(a, b, i + 1, j),
                       edit_distance_naive(a, b, i, j + 1)});
}

// ---------------------------------------------------------------------------
// Rule application by sequential rewriting: each rule in turn rewrites the
// original positions it owns, which for one-pass semantics means every
// position is looked up against the original rule list exactly once.

inline std::u32string apply_sequentially(const std::u32string& w, const std::vector<EditRule>& rules) {
  std::u32string out;
  for (char32_t cp : w) {
    const EditRule* hit = nullptr;
    for (const auto& r : rules) {
      if (r.source == cp) hit = &r;
    }
    if (!hit) out.push_back(cp);
    else if (hit->kind == RuleKind::kSub) out.push_back(*hit->target);
  }
  return out;
}

inline std::map<std::u32string, std::uint64_t> apply_to_counts(const std::map<std::u32string, std::uint64_t>& counts,
                                                               const std::vector<EditRule>& rules) {
  std::map<std::u32string, std::uint64_t> out;
  for (const auto& [w, c] : counts) {
    auto r = apply_sequentially(w, rules);
    if (!r.empty()) out[r] += c;
  }
  return out;
}

/// Top-n by (count desc, word asc) and shared fraction over the longer list.
inline double overlap(const std::map<std::u32string, std::uint64_t>& a,
                      const std::map<std::u32string, std::uint64_t>& b, std::size_t n) {
  auto top = [n](const std::map<std::u32string, std::uint64_t>& m) {
    std::vector<std::pair<std::u32string, std::uint64_t>> v(m.begin(), m.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      return x.second != y.second ? x.second > y.second : x.first < y.first;
    });
    if (v.size() > n) v.resize(n);
    std::vector<std::u32string> words;
    for (auto& [w, c] : v) words.push_back(w);
    return words;
  };
  const auto ta = top(a), tb = top(b);
  const std::size_t denom = std::max(ta.size(), tb.size());
  if (denom == 0) return 0.0;
  std::size_t shared = 0;
  for (const auto& w : tb) shared += std::count(ta.begin(), ta.end(), w);
  return static_cast<double>(shared) / static_cast<double>(denom);
}

// ---------------------------------------------------------------------------
// Two-component mixture: brute-force grid over the weight of component 0.

struct GridOptimum {
  double weight = 0.0;  // weight of component 0
  double log_likelihood = -std::numeric_limits<double>::infinity();
  double perplexity = 0.0;
};

inline GridOptimum grid_search(const std::vector<double>& p0, const std::vector<double>& p1, double step = 0.001) {
  GridOptimum best;
  const int steps = static_cast<int>(std::lround(1.0 / step));
  for (int k = 0; k <= steps; ++k) {
    const double w = k * step;
    double ll = 0.0;
    for (std::size_t t = 0; t < p0.size(); ++t) ll += std::log(w * p0[t] + (1.0 - w) * p1[t]);
    if (ll > best.log_likelihood) {
      best.weight = w;
      best.log_likelihood = ll;
    }
  }
  best.perplexity = std::exp(-best.log_likelihood / static_cast<double>(p0.size()));
  return best;
}

/// Golden-section refinement of the grid optimum: the exact optimum of the
/// concave objective to ~1e-12 in weight.
inline GridOptimum refine(const std::vector<double>& p0, const std::vector<double>& p1, double lo, double hi) {
  auto ll = [&](double w) {
    double s = 0.0;
    for (std::size_t t = 0; t < p0.size(); ++t) s += std::log(w * p0[t] + (1.0 - w) * p1[t]);
    return s;
  };
  lo = std::max(0.0, lo), hi = std::min(1.0, hi);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    if (ll(x1) < ll(x2)) lo = x1;
    else hi = x2;
  }
  GridOptimum out;
  out.weight = (lo + hi) / 2.0;
  out.log_likelihood = ll(out.weight);
  out.perplexity = std::exp(-out.log_likelihood / static_cast<double>(p0.size()));
  return out;
}

// ---------------------------------------------------------------------------
// Pronunciation statistics straight from the formulas.

inline std::vector<double> pron_probs(const std::vector<std::uint64_t>& counts, double lambda, bool sum_normalize) {
  double c = 0.0;
  for (auto x : counts) c += static_cast<double>(x);
  const double k = static_cast<double>(counts.size());
  std::vector<double> p;
  for (auto x : counts) {
    p.push_back(c + lambda * k > 0.0 ? (static_cast<double>(x) + lambda) / (c + lambda * k) : 1.0 / k);
  }
  const double norm = sum_normalize ? std::accumulate(p.begin(), p.end(), 0.0) : *std::max_element(p.begin(), p.end());
  for (auto& x : p) x /= norm;
  return p;
}

}  // namespace lexharmony::oracle
