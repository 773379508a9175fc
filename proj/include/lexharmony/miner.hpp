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

// Pairs frequent words across two corpora, turns their alignments into
// SUB/DEL rule candidates and picks a small rule set by greedy overlap gain.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lexharmony/corpus.hpp"
#include "lexharmony/distance.hpp"
#include "lexharmony/g2p.hpp"
#include "lexharmony/normalizer.hpp"
#include "lexharmony/rules.hpp"

namespace lexharmony {

enum class Metric { kChar, kPhone };

struct NearestWord {
  Word word;
  std::size_t cost = 0;
};

/// Closest candidate to query under the character or phone metric. Ties go
/// to the higher candidate frequency, then to codepoint order. With the phone
/// metric, candidates the table cannot convert are skipped.
inline NearestWord nearest_neighbor(const Word& query, const std::vector<Word>& candidates,
                                    Metric metric, const G2PTable* g2p = nullptr,
                                    std::span<const std::uint64_t> frequencies = {}) {
  if (candidates.empty()) throw ValidationError("nearest_neighbor needs at least one candidate");
  if (!frequencies.empty() && frequencies.size() != candidates.size()) {
    throw ValidationError("frequency list does not match candidate list");
  }
  std::optional<Neighbor> best;
  if (metric == Metric::kChar) {
    std::vector<const std::u32string*> ptrs;
    for (const auto& c : candidates) ptrs.push_back(&c.codepoints());
    best = nearest_candidate<std::u32string>(query.codepoints(), ptrs, frequencies);
  } else {
    if (!g2p) throw ValidationError("phone metric requires a g2p table");
    const PhoneSeq q = g2p->convert(query);
    std::vector<std::optional<PhoneSeq>> phones;
    std::vector<const PhoneSeq*> ptrs;
    phones.reserve(candidates.size());
    for (const auto& c : candidates) {
      try {
        phones.emplace_back(g2p->convert(c));
      } catch (const ConversionError&) {
        phones.emplace_back(std::nullopt);
      }
    }
    for (const auto& p : phones) ptrs.push_back(p ? &*p : nullptr);
    // Ties among phone-identical candidates fall back to codepoint order.
    std::vector<std::uint64_t> w(frequencies.begin(), frequencies.end());
    std::optional<Neighbor> found;
    for (std::size_t i = 0; i < ptrs.size(); ++i) {
      if (!ptrs[i]) continue;
      const std::size_t c = edit_distance(q, *ptrs[i]);
      const std::uint64_t wi = w.empty() ? 0 : w[i];
      if (!found || c < found->cost) {
        found = Neighbor{i, c};
      } else if (c == found->cost) {
        const std::uint64_t wb = w.empty() ? 0 : w[found->index];
        if (wi > wb || (wi == wb && candidates[i] < candidates[found->index])) found = Neighbor{i, c};
      }
    }
    best = found;
  }
  if (!best) throw ConversionError("no candidate could be converted", 0, 0);
  return {candidates[best->index], best->cost};
}

struct WordPair {
  Word a;
  Word b;
  Alignment<char32_t> alignment;
  Channel channel = Channel::kChar;
};

struct PairingResult {
  std::vector<WordPair> pairs;
  std::size_t examined = 0;      // query words absent from the other list
  std::size_t g2p_failures = 0;  // words skipped by the phone channel
};

/// For each word of a that does not occur in b, its nearest neighbour in b,
/// kept when the character distance lies in [1, max_cost]. The phone channel
/// selects the neighbour by phone distance (<= max_cost) and still requires
/// the character alignment to respect max_cost.
inline PairingResult pair_words(const std::vector<RankedWord>& a, const std::vector<RankedWord>& b,
                                Metric metric, const G2PTable* g2p, std::size_t max_cost) {
  if (a.empty() || b.empty()) throw ValidationError("pair_words needs two non-empty word lists");
  if (max_cost < 1) throw ValidationError("max_cost must be >= 1");
  if (metric == Metric::kPhone && !g2p) throw ValidationError("phone metric requires a g2p table");

  PairingResult result;
  std::unordered_set<Word, WordHash> in_b;
  std::vector<std::uint64_t> weights;
  for (const auto& rw : b) {
    in_b.insert(rw.word);
    weights.push_back(rw.count);
  }

  std::vector<const std::u32string*> b_chars;
  for (const auto& rw : b) b_chars.push_back(&rw.word.codepoints());

  std::vector<std::optional<PhoneSeq>> b_phones_store;
  std::vector<const PhoneSeq*> b_phones;
  if (metric == Metric::kPhone) {
    b_phones_store.reserve(b.size());
    for (const auto& rw : b) {
      try {
        b_phones_store.emplace_back(g2p->convert(rw.word));
      } catch (const ConversionError&) {
        b_phones_store.emplace_back(std::nullopt);
        ++result.g2p_failures;
      }
    }
    for (const auto& p : b_phones_store) b_phones.push_back(p ? &*p : nullptr);
  }

  for (const auto& rw : a) {
    if (in_b.count(rw.word)) continue;
    ++result.examined;
    std::optional<Neighbor> nn;
    if (metric == Metric::kChar) {
      nn = nearest_candidate<std::u32string>(rw.word.codepoints(), b_chars, weights, max_cost);
      if (!nn || nn->cost < 1 || nn->cost > max_cost) continue;
    } else {
      PhoneSeq q;
      try {
        q = g2p->convert(rw.word);
      } catch (const ConversionError&) {
        ++result.g2p_failures;
        continue;
      }
      nn = nearest_candidate<PhoneSeq>(q, b_phones, weights, max_cost);
      if (!nn || nn->cost > max_cost) continue;
    }
    const Word& other = b[nn->index].word;
    auto al = align(rw.word.codepoints(), other.codepoints());
    if (al.cost < 1 || al.cost > max_cost) continue;
    result.pairs.push_back({rw.word, other, std::move(al),
                            metric == Metric::kChar ? Channel::kChar : Channel::kPhone});
  }
  return result;
}

/// Union of two pair lists; a pair found by both channels appears once, as BOTH.
inline std::vector<WordPair> merge_pairs(std::vector<WordPair> first, const std::vector<WordPair>& second) {
  std::map<std::pair<Word, Word>, std::size_t> index;
  for (std::size_t i = 0; i < first.size(); ++i) index.emplace(std::make_pair(first[i].a, first[i].b), i);
  for (const auto& p : second) {
    auto it = index.find({p.a, p.b});
    if (it != index.end()) {
      first[it->second].channel = merge_channels(first[it->second].channel, p.channel);
    } else {
      index.emplace(std::make_pair(p.a, p.b), first.size());
      first.push_back(p);
    }
  }
  return first;
}

struct MineOptions {
  bool include_insertions = false;  // INS(y) becomes a DEL(y) candidate
  std::size_t max_examples = 5;
};

namespace detail {
using RuleKey = std::tuple<RuleKind, char32_t, std::optional<char32_t>>;

inline RuleKey key_of(const EditRule& r) { return {r.kind, r.source, r.target}; }

inline bool rule_order(const EditRule& x, const EditRule& y) {
  if (x.source != y.source) return x.source < y.source;
  if (x.kind != y.kind) return x.kind == RuleKind::kDel;
  return x.target.value_or(0) < y.target.value_or(0);
}
}  // namespace detail

/// Aggregates alignment ops into candidates, one per distinct rewrite, with
/// support = number of pairs whose alignment contains it. Rules keep the
/// alignment direction (source from the first corpus).
inline std::vector<EditRule> mine_rules(const std::vector<WordPair>& pairs, const MineOptions& opts = {}) {
  std::map<detail::RuleKey, EditRule> acc;
  for (const auto& p : pairs) {
    std::set<detail::RuleKey> seen;
    for (const auto& op : p.alignment.ops) {
      EditRule r;
      switch (op.kind) {
        case EditKind::kMatch: continue;
        case EditKind::kSub: r = EditRule::sub(*op.source, *op.target); break;
        case EditKind::kDel: r = EditRule::del(*op.source); break;
        case EditKind::kIns:
          if (!opts.include_insertions) continue;
          r = EditRule::del(*op.target);
          break;
      }
      const auto key = detail::key_of(r);
      if (!seen.insert(key).second) continue;
      auto [it, fresh] = acc.emplace(key, r);
      EditRule& slot = it->second;
      if (fresh) slot.channel = p.channel;
      else slot.channel = merge_channels(slot.channel, p.channel);
      ++slot.support;
      if (slot.examples.size() < opts.max_examples) slot.examples.emplace_back(p.a, p.b);
    }
  }
  std::vector<EditRule> out;
  for (auto& [k, r] : acc) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), detail::rule_order);
  return out;
}

inline std::map<char32_t, std::uint64_t> codepoint_frequencies(const FrequencyTable& a,
                                                               const FrequencyTable& b) {
  std::map<char32_t, std::uint64_t> f;
  for (const auto* t : {&a, &b}) {
    for (const auto& [w, c] : t->counts()) {
      for (char32_t cp : w.codepoints()) f[cp] += c;
    }
  }
  return f;
}

/// Points each SUB from the rarer codepoint (token-weighted over both
/// corpora) to the more frequent one; equal counts point to the smaller
/// codepoint. Rules that become identical are merged (supports add up).
inline std::vector<EditRule> orient_rules(const std::vector<EditRule>& raw, const FrequencyTable& a,
                                          const FrequencyTable& b, std::size_t max_examples = 5) {
  const auto freq = codepoint_frequencies(a, b);
  auto count = [&](char32_t cp) -> std::uint64_t {
    auto it = freq.find(cp);
    return it == freq.end() ? 0 : it->second;
  };
  std::map<detail::RuleKey, EditRule> merged;
  for (EditRule r : raw) {
    if (r.kind == RuleKind::kSub) {
      const auto cs = count(r.source), ct = count(*r.target);
      const bool flip = cs > ct || (cs == ct && *r.target > r.source);
      if (flip) {
        std::swap(r.source, *r.target);
        for (auto& [x, y] : r.examples) std::swap(x, y);
      }
    }
    auto [it, fresh] = merged.emplace(detail::key_of(r), r);
    if (!fresh) {
      it->second.support += r.support;
      it->second.channel = merge_channels(it->second.channel, r.channel);
      for (const auto& ex : r.examples) {
        if (it->second.examples.size() >= max_examples) break;
        it->second.examples.push_back(ex);
      }
    }
  }
  std::vector<EditRule> out;
  for (auto& [k, r] : merged) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), detail::rule_order);
  return out;
}

struct OverlapProjection {
  double before = 0.0;
  double after = 0.0;
  double gain() const { return after - before; }
};

inline OverlapProjection project_gain(const RuleSet& rules, const FrequencyTable& a,
                                      const FrequencyTable& b, std::size_t n) {
  const CodepointMap map(rules);
  return {overlap(a, b, n), overlap(apply_rules(a, map), apply_rules(b, map), n)};
}

inline OverlapProjection project_gain(const EditRule& rule, const FrequencyTable& a,
                                      const FrequencyTable& b, std::size_t n) {
  return project_gain(RuleSet({rule}), a, b, n);
}

namespace detail {

/// Would adding r to the selection break the RuleSet invariants?
inline bool conflicts(const std::vector<EditRule>& selected, const EditRule& r) {
  for (const auto& s : selected) {
    if (s.source == r.source) return true;
  }
  auto trial = selected;
  trial.push_back(r);
  return RuleSet::find_cycle(trial).has_value();
}

}  // namespace detail

struct SelectionStep {
  std::string rule_id;
  double overlap_after = 0.0;
  double marginal_gain = 0.0;
};

/// Greedy forward selection: repeatedly adds the candidate with the largest
/// marginal overlap gain (ties: earlier in the candidate list) until the best
/// marginal gain drops below min_gain. Candidates that would share a source
/// with, or close a cycle through, the selection are skipped.
inline RuleSet select_minimal_rules(const std::vector<EditRule>& candidates, const FrequencyTable& a,
                                    const FrequencyTable& b, std::size_t n, double min_gain,
                                    std::vector<SelectionStep>* trace = nullptr) {
  std::vector<EditRule> selected;
  std::vector<bool> used(candidates.size(), false);
  double current = overlap(a, b, n);
  while (true) {
    std::optional<std::size_t> best;
    double best_overlap = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (used[i] || detail::conflicts(selected, candidates[i])) continue;
      auto trial = selected;
      trial.push_back(candidates[i]);
      const CodepointMap map{RuleSet(trial)};
      const double o = overlap(apply_rules(a, map), apply_rules(b, map), n);
      if (!best || o > best_overlap) {
        best = i;
        best_overlap = o;
      }
    }
    if (!best || best_overlap - current < min_gain) break;
    used[*best] = true;
    selected.push_back(candidates[*best]);
    if (trace) trace->push_back({candidates[*best].id(), best_overlap, best_overlap - current});
    current = best_overlap;
  }
  return RuleSet(std::move(selected));
}

// ---------------------------------------------------------------------------
// Mining report

struct MiningParams {
  std::size_t n = 1000;
  std::size_t max_cost = 2;
  double min_gain = 0.001;
  bool use_char = true;
  bool use_phone = true;  // only when a g2p table is available
  bool include_insertions = false;
  bool rank_by_support = false;
  std::size_t max_examples = 5;
};

inline nlohmann::json to_json(const MiningParams& p) {
  return {{"n", p.n},
          {"max_cost", p.max_cost},
          {"min_gain", p.min_gain},
          {"use_char", p.use_char},
          {"use_phone", p.use_phone},
          {"include_insertions", p.include_insertions},
          {"rank_by_support", p.rank_by_support},
          {"max_examples", p.max_examples}};
}

inline MiningParams mining_params_from_json(const nlohmann::json& j) {
  MiningParams p;
  p.n = j.value("n", p.n);
  p.max_cost = j.value("max_cost", p.max_cost);
  p.min_gain = j.value("min_gain", p.min_gain);
  p.use_char = j.value("use_char", p.use_char);
  p.use_phone = j.value("use_phone", p.use_phone);
  p.include_insertions = j.value("include_insertions", p.include_insertions);
  p.rank_by_support = j.value("rank_by_support", p.rank_by_support);
  p.max_examples = j.value("max_examples", p.max_examples);
  if (p.n < 1) throw ValidationError("n must be >= 1");
  if (p.max_cost < 1) throw ValidationError("max_cost must be >= 1");
  return p;
}

struct RuleCandidate {
  EditRule rule;
  double projected_overlap = 0.0;
  double projected_gain = 0.0;
};

struct MiningReport {
  std::vector<RuleCandidate> candidates;
  std::vector<std::string> recommended;  // greedy minimal set, in selection order
  std::size_t pairs_examined = 0;
  std::size_t pairs_found = 0;
  std::size_t g2p_failures = 0;
  double overlap_before = 0.0;
  double mass_a = 0.0;
  double mass_b = 0.0;
  MiningParams params;

  const RuleCandidate* find(const std::string& id) const {
    for (const auto& c : candidates) {
      if (c.rule.id() == id) return &c;
    }
    return nullptr;
  }
};

/// Ranking: projected gain desc, support desc, codepoint asc (or support
/// first when rank_by_support is set).
inline void rank_candidates(std::vector<RuleCandidate>& cands, bool by_support) {
  std::stable_sort(cands.begin(), cands.end(), [&](const RuleCandidate& x, const RuleCandidate& y) {
    if (by_support) {
      if (x.rule.support != y.rule.support) return x.rule.support > y.rule.support;
      if (x.projected_gain != y.projected_gain) return x.projected_gain > y.projected_gain;
    } else {
      if (x.projected_gain != y.projected_gain) return x.projected_gain > y.projected_gain;
      if (x.rule.support != y.rule.support) return x.rule.support > y.rule.support;
    }
    return detail::rule_order(x.rule, y.rule);
  });
}

/// Steps 1-4 of one harmonization round: top-n lists, pairing on both
/// channels, rule statistics, projected gains and the greedy recommendation.
inline MiningReport mine_report(const FrequencyTable& a, const FrequencyTable& b,
                                const MiningParams& params, const G2PTable* g2p = nullptr) {
  MiningReport report;
  report.params = params;
  const auto ta = top_n(a, params.n), tb = top_n(b, params.n);
  report.mass_a = ta.mass_fraction;
  report.mass_b = tb.mass_fraction;
  report.overlap_before = overlap(a, b, params.n);
  if (ta.words.empty() || tb.words.empty()) return report;

  std::vector<WordPair> pairs;
  if (params.use_char) {
    auto r = pair_words(ta.words, tb.words, Metric::kChar, nullptr, params.max_cost);
    report.pairs_examined = r.examined;
    pairs = std::move(r.pairs);
  }
  if (params.use_phone && g2p) {
    auto r = pair_words(ta.words, tb.words, Metric::kPhone, g2p, params.max_cost);
    report.pairs_examined = std::max(report.pairs_examined, r.examined);
    report.g2p_failures = r.g2p_failures;
    pairs = merge_pairs(std::move(pairs), r.pairs);
  }
  report.pairs_found = pairs.size();

  MineOptions mo;
  mo.include_insertions = params.include_insertions;
  mo.max_examples = params.max_examples;
  auto rules = orient_rules(mine_rules(pairs, mo), a, b, params.max_examples);

  for (auto& r : rules) {
    const auto proj = project_gain(r, a, b, params.n);
    report.candidates.push_back({std::move(r), proj.after, proj.gain()});
  }
  rank_candidates(report.candidates, params.rank_by_support);

  std::vector<EditRule> ranked;
  for (const auto& c : report.candidates) ranked.push_back(c.rule);
  const RuleSet chosen = select_minimal_rules(ranked, a, b, params.n, params.min_gain);
  for (const auto& r : chosen.rules()) report.recommended.push_back(r.id());
  return report;
}

inline nlohmann::json to_json(const MiningReport& r) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : r.candidates) {
    auto j = to_json(c.rule);
    j["projected_overlap"] = c.projected_overlap;
    j["projected_gain"] = c.projected_gain;
    j["recommended"] =
        std::find(r.recommended.begin(), r.recommended.end(), c.rule.id()) != r.recommended.end();
    cands.push_back(std::move(j));
  }
  return {{"format", "lexharmony-mining-report"},
          {"candidates", cands},
          {"recommended", r.recommended},
          {"pairs_examined", r.pairs_examined},
          {"pairs_found", r.pairs_found},
          {"g2p_failures", r.g2p_failures},
          {"overlap_before", r.overlap_before},
          {"mass_a", r.mass_a},
          {"mass_b", r.mass_b},
          {"parameters", to_json(r.params)}};
}

inline MiningReport mining_report_from_json(const nlohmann::json& j) {
  try {
    MiningReport r;
    for (const auto& c : j.at("candidates")) {
      r.candidates.push_back({rule_from_json(c), c.value("projected_overlap", 0.0),
                              c.value("projected_gain", 0.0)});
    }
    r.recommended = j.value("recommended", std::vector<std::string>{});
    r.pairs_examined = j.value("pairs_examined", std::size_t{0});
    r.pairs_found = j.value("pairs_found", std::size_t{0});
    r.g2p_failures = j.value("g2p_failures", std::size_t{0});
    r.overlap_before = j.value("overlap_before", 0.0);
    r.mass_a = j.value("mass_a", 0.0);
    r.mass_b = j.value("mass_b", 0.0);
    if (j.contains("parameters")) r.params = mining_params_from_json(j.at("parameters"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed mining report: ") + e.what());
  }
}

}  // namespace lexharmony
