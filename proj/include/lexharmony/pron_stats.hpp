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

// Pronunciation-variant and word-dependent silence probabilities from
// alignment counts, with add-lambda smoothing toward uniform / global rates.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "lexharmony/corpus.hpp"
#include "lexharmony/error.hpp"

namespace lexharmony {

struct WordAlignmentCounts {
  std::vector<std::uint64_t> pron_counts;  // indexed by pronunciation id
  std::uint64_t total = 0;
  std::uint64_t sil_after = 0;
  std::uint64_t sil_before = 0;
};

struct AlignmentCounts {
  std::map<Word, WordAlignmentCounts> words;

  std::uint64_t total_tokens() const {
    std::uint64_t n = 0;
    for (const auto& [w, c] : words) n += c.total;
    return n;
  }
  std::uint64_t total_sil_after() const {
    std::uint64_t n = 0;
    for (const auto& [w, c] : words) n += c.sil_after;
    return n;
  }
  std::uint64_t total_sil_before() const {
    std::uint64_t n = 0;
    for (const auto& [w, c] : words) n += c.sil_before;
    return n;
  }

  void validate() const {
    for (const auto& [w, c] : words) {
      if (c.pron_counts.empty()) {
        throw ValidationError("word '" + w.utf8() + "' has no pronunciations");
      }
      std::uint64_t sum = 0;
      for (auto x : c.pron_counts) sum += x;
      if (sum != c.total) {
        throw ValidationError("pronunciation counts of '" + w.utf8() + "' sum to " +
                              std::to_string(sum) + ", word total is " + std::to_string(c.total));
      }
      if (c.sil_after > c.total || c.sil_before > c.total) {
        throw ValidationError("silence counts of '" + w.utf8() + "' exceed its total");
      }
    }
  }
};

enum class PronNormalization { kMax, kSum };

struct WordPronProbs {
  std::vector<double> prons;
  double sil_after = 0.0;
  double sil_before_correction = 1.0;
};

struct PronProbTable {
  std::map<Word, WordPronProbs> words;
  PronNormalization convention = PronNormalization::kMax;
};

/// p(pron | w) = (c(w, pron) + lambda) / (c(w) + lambda * |prons(w)|), then
/// rescaled so the maximum is 1 (kMax) or the sum is 1 (kSum). A word with
/// no evidence and lambda = 0 gets the uniform distribution.
inline std::vector<double> pron_probs(const WordAlignmentCounts& c, double lambda,
                                      PronNormalization convention) {
  const std::size_t n = c.pron_counts.size();
  if (n == 0) throw ValidationError("word with zero pronunciations");
  std::vector<double> p(n);
  const double denom = static_cast<double>(c.total) + lambda * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = denom > 0.0 ? (static_cast<double>(c.pron_counts[i]) + lambda) / denom
                       : 1.0 / static_cast<double>(n);
  }
  if (convention == PronNormalization::kMax) {
    // Rescale from the smoothed counts so the ratios are single roundings.
    if (denom <= 0.0) return std::vector<double>(n, 1.0);
    const double top = static_cast<double>(*std::max_element(c.pron_counts.begin(), c.pron_counts.end())) + lambda;
    for (std::size_t i = 0; i < n; ++i) p[i] = (static_cast<double>(c.pron_counts[i]) + lambda) / top;
  } else {
    double sum = 0.0;
    for (double x : p) sum += x;
    for (auto& x : p) x /= sum;
  }
  return p;
}

/// (c_sil(w) + lambda_sil * rate) / (c(w) + lambda_sil): interpolation of the
/// word's own silence rate toward the global one.
inline double smoothed_silence(std::uint64_t sil, std::uint64_t total, double global_rate,
                               double lambda_sil) {
  return (static_cast<double>(sil) + lambda_sil * global_rate) /
         (static_cast<double>(total) + lambda_sil);
}

inline std::map<Word, double> estimate_silence_probs(const AlignmentCounts& counts, double lambda_sil) {
  if (!(lambda_sil > 0.0)) throw ValidationError("lambda_sil must be > 0");
  const auto tokens = counts.total_tokens();
  if (tokens == 0) throw ValidationError("silence estimation needs a positive token total");
  const double rate = static_cast<double>(counts.total_sil_after()) / static_cast<double>(tokens);
  std::map<Word, double> out;
  for (const auto& [w, c] : counts.words) out[w] = smoothed_silence(c.sil_after, c.total, rate, lambda_sil);
  return out;
}

struct PronStatsOptions {
  double lambda = 1.0;
  double lambda_sil = 2.0;
  PronNormalization convention = PronNormalization::kMax;
};

inline PronProbTable estimate_pron_probs(const AlignmentCounts& counts, double lambda,
                                         PronNormalization convention) {
  if (lambda < 0.0) throw ValidationError("lambda must be >= 0");
  counts.validate();
  PronProbTable t;
  t.convention = convention;
  for (const auto& [w, c] : counts.words) t.words[w].prons = pron_probs(c, lambda, convention);
  return t;
}

/// Pronunciation probabilities plus silence-after probabilities and the
/// silence-before correction (smoothed before-rate over the global rate).
inline PronProbTable estimate_pron_stats(const AlignmentCounts& counts, const PronStatsOptions& opts) {
  PronProbTable t = estimate_pron_probs(counts, opts.lambda, opts.convention);
  const auto tokens = counts.total_tokens();
  if (tokens == 0) return t;
  const auto sil = estimate_silence_probs(counts, opts.lambda_sil);
  const double before_rate =
      static_cast<double>(counts.total_sil_before()) / static_cast<double>(tokens);
  for (auto& [w, p] : t.words) {
    p.sil_after = sil.at(w);
    if (before_rate > 0.0) {
      const auto& c = counts.words.at(w);
      p.sil_before_correction =
          smoothed_silence(c.sil_before, c.total, before_rate, opts.lambda_sil) / before_rate;
    }
  }
  return t;
}

/// One table per counts snapshot; alignments between snapshots are produced
/// elsewhere.
inline std::vector<PronProbTable> reestimate(const std::vector<AlignmentCounts>& snapshots,
                                             const PronStatsOptions& opts) {
  std::vector<PronProbTable> out;
  out.reserve(snapshots.size());
  for (const auto& s : snapshots) out.push_back(estimate_pron_stats(s, opts));
  return out;
}

// ---------------------------------------------------------------------------
// IO

/// Reads "word<TAB>pron-id<TAB>count" and "word<TAB>total<TAB>sil_after<TAB>sil_before".
/// Pronunciation ids are 0-based indices into the lexicon's variants for the
/// word; every lexicon word gets a slot, so unseen variants count as 0.
inline AlignmentCounts read_alignment_counts(std::istream& pron_in, std::istream& totals_in,
                                             const Lexicon& lex) {
  AlignmentCounts counts;
  for (const auto& [w, prons] : lex.entries()) counts.words[w].pron_counts.assign(prons.size(), 0);

  auto parse_uint = [](const std::string& s, std::size_t line) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("expected a non-negative integer, got '" + s + "'", line);
    }
    return std::stoull(s);
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(pron_in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    auto f = detail::split(line, '\t');
    if (f.size() != 3) throw ParseError("expected word<TAB>pron-id<TAB>count", lineno);
    Word w = detail::parse_word(f[0], lineno);
    auto it = counts.words.find(w);
    if (it == counts.words.end()) throw ParseError("word '" + f[0] + "' not in lexicon", lineno);
    const auto id = parse_uint(f[1], lineno);
    if (id >= it->second.pron_counts.size()) throw ParseError("pronunciation id out of range", lineno);
    it->second.pron_counts[id] += parse_uint(f[2], lineno);
  }
  lineno = 0;
  while (std::getline(totals_in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    auto f = detail::split(line, '\t');
    if (f.size() != 4) throw ParseError("expected word<TAB>total<TAB>sil_after<TAB>sil_before", lineno);
    Word w = detail::parse_word(f[0], lineno);
    auto it = counts.words.find(w);
    if (it == counts.words.end()) throw ParseError("word '" + f[0] + "' not in lexicon", lineno);
    it->second.total = parse_uint(f[1], lineno);
    it->second.sil_after = parse_uint(f[2], lineno);
    it->second.sil_before = parse_uint(f[3], lineno);
  }
  counts.validate();
  return counts;
}

inline AlignmentCounts load_alignment_counts(const std::filesystem::path& pron_counts,
                                             const std::filesystem::path& totals, const Lexicon& lex) {
  auto a = detail::open_in(pron_counts);
  auto b = detail::open_in(totals);
  return read_alignment_counts(a, b, lex);
}

/// Lexicon with the estimated probabilities in its third column. Zero
/// probabilities (lambda = 0, unseen variant) are floored to min_prob so the
/// result stays loadable.
inline Lexicon to_lexicon(const PronProbTable& table, const Lexicon& lex, double min_prob = 1e-9) {
  Lexicon out(lex.name());
  for (const auto& [w, prons] : lex.entries()) {
    auto it = table.words.find(w);
    for (std::size_t i = 0; i < prons.size(); ++i) {
      Pronunciation p{prons[i].phones, std::nullopt};
      if (it != table.words.end()) p.prob = std::max(it->second.prons.at(i), min_prob);
      out.add(w, std::move(p));
    }
  }
  return out;
}

}  // namespace lexharmony
