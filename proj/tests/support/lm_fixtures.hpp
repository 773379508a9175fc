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

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lexharmony/corpus.hpp"

namespace lexharmony::testing {

/// First-order Markov text source over a fixed word list. Each word has a
/// preferred successor set; bias is the probability of staying in it.
struct MarkovSource {
  std::vector<std::string> words;
  std::vector<std::vector<double>> transition;  // row i: next-word distribution after word i
  std::vector<double> initial;
  double stop = 0.15;

  static MarkovSource make(std::vector<std::string> words, std::uint32_t seed, double bias) {
    MarkovSource s;
    s.words = std::move(words);
    const std::size_t V = s.words.size();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    auto row = [&](std::size_t favoured) {
      std::vector<double> r(V);
      double fav = 0.0, rest = 0.0;
      for (std::size_t j = 0; j < V; ++j) {
        r[j] = u(rng);
        (j % 3 == favoured % 3 ? fav : rest) += r[j];
      }
      for (std::size_t j = 0; j < V; ++j) r[j] = j % 3 == favoured % 3 ? bias * r[j] / fav : (1 - bias) * r[j] / rest;
      return r;
    };
    for (std::size_t i = 0; i < V; ++i) s.transition.push_back(row(rng() % 3));
    s.initial = row(rng() % 3);
    return s;
  }

  TranscriptCorpus sample(std::size_t sentences, std::uint32_t seed, const std::string& prefix) const {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    TranscriptCorpus out(prefix);
    for (std::size_t n = 0; n < sentences; ++n) {
      std::vector<Word> toks;
      std::discrete_distribution<std::size_t> first(initial.begin(), initial.end());
      std::size_t cur = first(rng);
      toks.push_back(Word::from_utf8(words[cur]));
      while (toks.size() < 20 && u(rng) > stop) {
        std::discrete_distribution<std::size_t> next(transition[cur].begin(), transition[cur].end());
        cur = next(rng);
        toks.push_back(Word::from_utf8(words[cur]));
      }
      char id[32];
      std::snprintf(id, sizeof id, "%s%04zu", prefix.c_str(), n);
      out.add(id, std::move(toks));
    }
    return out;
  }
};

inline std::vector<std::string> lm_words() {
  return {"the", "a", "cat", "dog", "sat", "ran", "on", "mat", "rug", "big", "red", "old"};
}

/// Held-out text drawing each sentence from source a with probability w.
inline TranscriptCorpus sample_mixture(const MarkovSource& a, const MarkovSource& b, double w,
                                       std::size_t sentences, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto ta = a.sample(sentences, seed + 1, "x");
  const auto tb = b.sample(sentences, seed + 2, "y");
  TranscriptCorpus out("heldout");
  for (std::size_t n = 0; n < sentences; ++n) {
    const auto& src = u(rng) < w ? ta : tb;
    char id[32];
    std::snprintf(id, sizeof id, "h%04zu", n);
    out.add(id, src.utterances()[n].tokens);
  }
  return out;
}

}  // namespace lexharmony::testing
