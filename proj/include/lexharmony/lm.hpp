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

// Witten-Bell smoothed n-gram models stored in ARPA form (interpolated
// probabilities for seen n-grams, backoff weights for seen histories),
// perplexity, and EM estimation of linear interpolation weights.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "lexharmony/corpus.hpp"
#include "lexharmony/error.hpp"

namespace lexharmony {

inline constexpr const char* kSentenceStart = "<s>";
inline constexpr const char* kSentenceEnd = "</s>";
inline constexpr const char* kUnknownWord = "<unk>";

class NGramModel {
 public:
  using NGram = std::vector<int>;

  struct Entry {
    double prob = 0.0;     // p(w | h), already interpolated
    double backoff = 1.0;  // weight applied when this n-gram is used as a history
  };

  NGramModel() = default;

  int order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::vector<std::string>& vocabulary() const noexcept { return vocab_; }
  std::size_t training_tokens() const noexcept { return training_tokens_; }
  std::size_t training_sentences() const noexcept { return training_sentences_; }

  int bos() const { return id_of(kSentenceStart); }
  int eos() const { return id_of(kSentenceEnd); }
  int unk() const { return id_of(kUnknownWord); }

  /// Id of w, or the unknown-word id for words outside the vocabulary.
  int lookup(const std::string& w) const {
    auto it = ids_.find(w);
    return it == ids_.end() ? unk() : it->second;
  }

  /// Probability of word given the preceding context (oldest first); only
  /// the last order-1 ids matter.
  double prob(std::span<const int> context, int word) const {
    const std::size_t max_hist = static_cast<std::size_t>(order_ - 1);
    const std::size_t hist_len = std::min(context.size(), max_hist);
    double scale = 1.0;
    for (std::size_t len = hist_len;; --len) {
      NGram ng(context.end() - static_cast<std::ptrdiff_t>(len), context.end());
      ng.push_back(word);
      const auto& table = tables_[len];
      if (auto it = table.find(ng); it != table.end()) return scale * it->second.prob;
      if (len == 0) break;
      // Back off: the history's weight (1 if the history was never seen).
      NGram hist(context.end() - static_cast<std::ptrdiff_t>(len), context.end());
      const auto& htable = tables_[len - 1];
      if (auto it = htable.find(hist); it != htable.end()) scale *= it->second.backoff;
    }
    return 0.0;
  }

  /// Histories with at least one observed continuation, per history length.
  std::vector<NGram> seen_histories() const {
    std::vector<NGram> out;
    for (std::size_t k = 0; k + 1 < tables_.size(); ++k) {
      for (const auto& [ng, e] : tables_[k]) {
        if (e.backoff != 1.0 || has_continuation(ng)) out.push_back(ng);
      }
    }
    return out;
  }

  /// Ids that can be predicted: everything except the sentence-start symbol.
  std::vector<int> predictable_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(vocab_.size()); ++i) {
      if (i != bos()) out.push_back(i);
    }
    return out;
  }

  const std::vector<std::map<NGram, Entry>>& tables() const noexcept { return tables_; }

  friend NGramModel train_ngram(const TranscriptCorpus&, int);
  friend NGramModel read_arpa(std::istream&, std::string);

 private:
  int id_of(const std::string& w) const {
    auto it = ids_.find(w);
    if (it == ids_.end()) throw ValidationError("model lacks symbol " + w);
    return it->second;
  }

  int intern(const std::string& w) {
    auto [it, fresh] = ids_.emplace(w, static_cast<int>(vocab_.size()));
    if (fresh) vocab_.push_back(w);
    return it->second;
  }

  bool has_continuation(const NGram& h) const {
    const auto& next = tables_[h.size()];
    auto it = next.lower_bound(h);
    return it != next.end() && std::equal(h.begin(), h.end(), it->first.begin());
  }

  int order_ = 0;
  std::string name_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::map<NGram, Entry>> tables_;  // tables_[k] holds (k+1)-grams
  std::size_t training_tokens_ = 0;
  std::size_t training_sentences_ = 0;
};

/// Interpolated Witten-Bell estimation. The base distribution is uniform
/// over the vocabulary plus </s> and <unk>, so unseen words keep mass.
inline NGramModel train_ngram(const TranscriptCorpus& corpus, int order = 3) {
  if (order < 1) throw ValidationError("n-gram order must be >= 1");
  if (corpus.num_tokens() == 0) throw ValidationError("cannot train an n-gram model on an empty corpus");
  NGramModel m;
  m.order_ = order;
  m.name_ = corpus.name();
  m.intern(kSentenceStart);
  m.intern(kSentenceEnd);
  m.intern(kUnknownWord);

  using NGram = NGramModel::NGram;
  std::vector<std::map<NGram, std::size_t>> counts(order);
  for (const auto& u : corpus.utterances()) {
    std::vector<int> seq{m.bos()};
    for (const auto& w : u.tokens) seq.push_back(m.intern(w.utf8()));
    seq.push_back(m.eos());
    m.training_tokens_ += u.tokens.size();
    ++m.training_sentences_;
    for (std::size_t i = 1; i < seq.size(); ++i) {
      for (int k = 1; k <= order && static_cast<std::size_t>(k) <= i + 1; ++k) {
        NGram ng(seq.begin() + static_cast<std::ptrdiff_t>(i + 1 - k),
                 seq.begin() + static_cast<std::ptrdiff_t>(i + 1));
        ++counts[k - 1][ng];
      }
    }
  }

  // History statistics: total continuations and distinct continuation types.
  struct HistStat {
    std::size_t total = 0;
    std::size_t types = 0;
  };
  std::vector<std::map<NGram, HistStat>> hist(order);
  for (int k = 0; k < order; ++k) {
    for (const auto& [ng, c] : counts[k]) {
      NGram h(ng.begin(), ng.end() - 1);
      auto& hs = hist[k][h];
      hs.total += c;
      ++hs.types;
    }
  }

  m.tables_.assign(order, {});
  const double vocab_size = static_cast<double>(m.vocab_.size() - 1);  // excludes <s>
  const auto& uni = hist[0][NGram{}];
  const double n1 = static_cast<double>(uni.total), t1 = static_cast<double>(uni.types);
  for (int id = 0; id < static_cast<int>(m.vocab_.size()); ++id) {
    if (id == m.bos()) {
      m.tables_[0][{id}].prob = 0.0;
      continue;
    }
    auto it = counts[0].find({id});
    const double c = it == counts[0].end() ? 0.0 : static_cast<double>(it->second);
    m.tables_[0][{id}].prob = (c + t1 / vocab_size) / (n1 + t1);
  }
  for (int k = 1; k < order; ++k) {
    for (const auto& [ng, c] : counts[k]) {
      NGram h(ng.begin(), ng.end() - 1);
      const auto& hs = hist[k].at(h);
      const double lower = m.prob(std::span<const int>(h.data() + 1, h.size() - 1), ng.back());
      m.tables_[k][ng].prob = (static_cast<double>(c) + static_cast<double>(hs.types) * lower) /
                              static_cast<double>(hs.total + hs.types);
    }
    for (const auto& [h, hs] : hist[k]) {
      m.tables_[k - 1][h].backoff =
          static_cast<double>(hs.types) / static_cast<double>(hs.total + hs.types);
    }
  }
  return m;
}

/// Per-token probabilities of a text, </s> included, in reading order.
inline std::vector<double> token_probabilities(const NGramModel& m, const TranscriptCorpus& text) {
  std::vector<double> out;
  out.reserve(text.num_tokens() + text.size());
  for (const auto& u : text.utterances()) {
    std::vector<int> ctx{m.bos()};
    for (const auto& w : u.tokens) {
      const int id = m.lookup(w.utf8());
      out.push_back(m.prob(ctx, id));
      ctx.push_back(id);
    }
    out.push_back(m.prob(ctx, m.eos()));
  }
  return out;
}

inline double perplexity_from_probs(std::span<const double> probs) {
  if (probs.empty()) throw ValidationError("perplexity of an empty text");
  double sum = 0.0;
  for (double p : probs) sum += std::log(p);
  return std::exp(-sum / static_cast<double>(probs.size()));
}

inline double perplexity(const NGramModel& m, const TranscriptCorpus& text) {
  return perplexity_from_probs(token_probabilities(m, text));
}

struct MixtureWeights {
  std::vector<double> weights;
};

namespace detail {

inline std::vector<std::vector<double>> component_probs(const std::vector<const NGramModel*>& models,
                                                        const TranscriptCorpus& text) {
  std::vector<std::vector<double>> probs;
  for (const auto* m : models) probs.push_back(token_probabilities(*m, text));
  return probs;
}

inline std::vector<double> mix(const std::vector<std::vector<double>>& probs,
                               const std::vector<double>& w) {
  std::vector<double> out(probs.front().size(), 0.0);
  for (std::size_t k = 0; k < probs.size(); ++k) {
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += w[k] * probs[k][t];
  }
  return out;
}

inline double log_likelihood(std::span<const double> probs) {
  double sum = 0.0;
  for (double p : probs) sum += std::log(p);
  return sum;
}

}  // namespace detail

inline double perplexity(const std::vector<const NGramModel*>& models, const MixtureWeights& mw,
                         const TranscriptCorpus& text) {
  if (models.size() != mw.weights.size()) throw ValidationError("one weight per model required");
  return perplexity_from_probs(detail::mix(detail::component_probs(models, text), mw.weights));
}

struct MixtureFit {
  MixtureWeights weights;
  std::vector<double> log_likelihood;  // one entry per visited weight vector
  int iterations = 0;
  double perplexity = 0.0;
  std::vector<double> component_perplexity;
};

/// EM on per-token component posteriors, from uniform weights, until the
/// log-likelihood gain drops below tol or max_iter updates were made.
inline MixtureFit fit_mixture(const std::vector<const NGramModel*>& models,
                              const TranscriptCorpus& heldout, double tol = 1e-10,
                              int max_iter = 1000) {
  if (models.size() < 2) throw ValidationError("fit_mixture needs at least two models");
  if (heldout.num_tokens() + heldout.size() == 0) throw ValidationError("empty held-out text");
  const auto probs = detail::component_probs(models, heldout);
  const std::size_t K = models.size(), T = probs.front().size();

  MixtureFit fit;
  for (const auto& p : probs) fit.component_perplexity.push_back(perplexity_from_probs(p));
  std::vector<double> w(K, 1.0 / static_cast<double>(K));
  auto mixed = detail::mix(probs, w);
  double ll = detail::log_likelihood(mixed);
  fit.log_likelihood.push_back(ll);
  for (int it = 0; it < max_iter; ++it) {
    std::vector<double> acc(K, 0.0);
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t k = 0; k < K; ++k) acc[k] += w[k] * probs[k][t] / mixed[t];
    }
    for (std::size_t k = 0; k < K; ++k) w[k] = acc[k] / static_cast<double>(T);
    const double norm = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= norm;
    mixed = detail::mix(probs, w);
    const double next = detail::log_likelihood(mixed);
    fit.log_likelihood.push_back(next);
    ++fit.iterations;
    const double gain = next - ll;
    ll = next;
    if (gain < tol) break;
  }
  fit.weights.weights = w;
  fit.perplexity = std::exp(-ll / static_cast<double>(T));
  return fit;
}

inline nlohmann::json to_json(const MixtureFit& f, const std::vector<std::string>& names = {}) {
  nlohmann::json rounded = nlohmann::json::array();
  for (double w : f.weights.weights) rounded.push_back(std::round(w * 10.0) / 10.0);
  return {{"weights", f.weights.weights},
          {"weights_rounded", rounded},
          {"models", names},
          {"log_likelihood", f.log_likelihood},
          {"iterations", f.iterations},
          {"perplexity", f.perplexity},
          {"component_perplexity", f.component_perplexity}};
}

// ---------------------------------------------------------------------------
// ARPA IO

namespace detail {
inline std::string format_log10(double p) {
  if (p <= 0.0) return "-99";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::log10(p));
  return buf;
}
inline double parse_log10(const std::string& s) {
  const double v = std::stod(s);
  return v <= -99.0 ? 0.0 : std::pow(10.0, v);
}
}  // namespace detail

inline void write_arpa(std::ostream& out, const NGramModel& m) {
  const auto& tables = m.tables();
  out << "\n\\data\\\n";
  for (std::size_t k = 0; k < tables.size(); ++k) out << "ngram " << k + 1 << "=" << tables[k].size() << "\n";
  for (std::size_t k = 0; k < tables.size(); ++k) {
    out << "\n\\" << k + 1 << "-grams:\n";
    for (const auto& [ng, e] : tables[k]) {
      out << detail::format_log10(e.prob) << '\t';
      for (std::size_t i = 0; i < ng.size(); ++i) out << (i ? " " : "") << m.vocabulary()[ng[i]];
      if (k + 1 < tables.size() && e.backoff != 1.0) out << '\t' << detail::format_log10(e.backoff);
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
}

inline NGramModel read_arpa(std::istream& in, std::string name = {}) {
  NGramModel m;
  m.name_ = std::move(name);
  std::string line;
  std::size_t lineno = 0;
  int section = -1;  // 0 = data header, k = k-grams
  std::vector<std::size_t> declared;
  bool ended = false;
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    if (line == "\\data\\") {
      section = 0;
      continue;
    }
    if (line == "\\end\\") {
      ended = true;
      break;
    }
    if (line.size() > 1 && line[0] == '\\') {
      const auto dash = line.find("-grams:");
      if (dash == std::string::npos) throw ParseError("unknown ARPA section '" + line + "'", lineno);
      section = std::stoi(line.substr(1, dash - 1));
      if (section < 1 || section > static_cast<int>(declared.size())) {
        throw ParseError("undeclared n-gram order", lineno);
      }
      continue;
    }
    if (section == 0) {
      if (line.rfind("ngram ", 0) != 0) throw ParseError("expected 'ngram k=count'", lineno);
      declared.push_back(std::stoul(line.substr(line.find('=') + 1)));
      m.order_ = static_cast<int>(declared.size());
      m.tables_.resize(declared.size());
      continue;
    }
    if (section < 1) throw ParseError("content outside of a section", lineno);
    auto fields = detail::split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) throw ParseError("malformed n-gram line", lineno);
    auto words = detail::split_ws(fields[1]);
    if (static_cast<int>(words.size()) != section) throw ParseError("n-gram length mismatch", lineno);
    NGramModel::NGram ng;
    for (const auto& w : words) {
      if (section == 1) {
        ng.push_back(m.intern(w));
      } else {
        auto it = m.ids_.find(w);
        if (it == m.ids_.end()) throw ParseError("word '" + w + "' missing from unigrams", lineno);
        ng.push_back(it->second);
      }
    }
    auto& e = m.tables_[section - 1][ng];
    e.prob = detail::parse_log10(fields[0]);
    if (fields.size() == 3) e.backoff = detail::parse_log10(fields[2]);
  }
  if (!ended) throw ParseError("ARPA file lacks \\end\\ marker");
  for (std::size_t k = 0; k < declared.size(); ++k) {
    if (m.tables_[k].size() != declared[k]) throw ParseError("n-gram count does not match header");
  }
  for (const char* s : {kSentenceStart, kSentenceEnd, kUnknownWord}) {
    if (!m.ids_.count(s)) throw ParseError(std::string("ARPA model lacks ") + s);
  }
  return m;
}

inline void save_arpa(const std::filesystem::path& path, const NGramModel& m) {
  auto out = detail::open_out(path);
  write_arpa(out, m);
}

inline NGramModel load_arpa(const std::filesystem::path& path) {
  auto in = detail::open_in(path);
  return read_arpa(in, path.stem().string());
}

/// Vocabulary and metadata written next to the ARPA file.
inline nlohmann::json model_sidecar(const NGramModel& m) {
  return {{"format", "lexharmony-ngram"},
          {"name", m.name()},
          {"order", m.order()},
          {"smoothing", "witten-bell-interpolated"},
          {"vocabulary", m.vocabulary()},
          {"training_tokens", m.training_tokens()},
          {"training_sentences", m.training_sentences()}};
}

}  // namespace lexharmony
