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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "lexharmony/corpus.hpp"
#include "lexharmony/rules.hpp"

namespace lexharmony {

/// One-pass codepoint rewrite compiled from a RuleSet.
class CodepointMap {
 public:
  CodepointMap() = default;
  explicit CodepointMap(const RuleSet& rules) {
    for (const auto& r : rules.rules()) map_.emplace(r.source, r.target);
  }

  bool empty() const noexcept { return map_.empty(); }

  /// Rewritten codepoints; may be empty when every codepoint was deleted.
  std::u32string rewrite(const std::u32string& in) const {
    if (map_.empty()) return in;
    std::u32string out;
    out.reserve(in.size());
    for (char32_t cp : in) {
      auto it = map_.find(cp);
      if (it == map_.end()) {
        out.push_back(cp);
      } else if (it->second) {
        out.push_back(*it->second);
      }
    }
    return out;
  }

  bool touches(const std::u32string& in) const {
    return std::any_of(in.begin(), in.end(), [&](char32_t cp) { return map_.count(cp) != 0; });
  }

  std::optional<Word> apply(const Word& w) const {
    if (!touches(w.codepoints())) return w;
    auto cps = rewrite(w.codepoints());
    if (cps.empty()) return std::nullopt;
    return Word(std::move(cps));
  }

 private:
  std::unordered_map<char32_t, std::optional<char32_t>> map_;
};

struct ApplyStats {
  std::size_t words_changed = 0;
  std::size_t words_merged = 0;   // lexicon entries folded into another entry
  std::size_t words_dropped = 0;  // entries or tokens reduced to nothing
};

inline std::optional<Word> apply_rules(const Word& w, const RuleSet& rules) {
  return CodepointMap(rules).apply(w);
}

inline Lexicon apply_rules(const Lexicon& lex, const RuleSet& rules, ApplyStats* stats = nullptr) {
  const CodepointMap map(rules);
  Lexicon out(lex.name());
  ApplyStats local;
  for (const auto& [w, prons] : lex.entries()) {
    auto mapped = map.apply(w);
    if (!mapped) {
      ++local.words_dropped;
      continue;
    }
    if (*mapped != w) ++local.words_changed;
    if (out.contains(*mapped)) ++local.words_merged;
    for (const auto& p : prons) out.add(*mapped, p);
  }
  if (stats) *stats = local;
  return out;
}

inline TranscriptCorpus apply_rules(const TranscriptCorpus& corpus, const RuleSet& rules,
                                    ApplyStats* stats = nullptr) {
  const CodepointMap map(rules);
  TranscriptCorpus out(corpus.name());
  ApplyStats local;
  for (const auto& u : corpus.utterances()) {
    std::vector<Word> tokens;
    tokens.reserve(u.tokens.size());
    for (const auto& w : u.tokens) {
      auto mapped = map.apply(w);
      if (!mapped) {
        ++local.words_dropped;
        continue;
      }
      if (*mapped != w) ++local.words_changed;
      tokens.push_back(std::move(*mapped));
    }
    out.add(u.id, std::move(tokens));
  }
  if (stats) *stats = local;
  return out;
}

inline FrequencyTable apply_rules(const FrequencyTable& freq, const CodepointMap& map) {
  if (map.empty()) return freq;
  FrequencyTable out;
  for (const auto& [w, c] : freq.counts()) {
    if (auto mapped = map.apply(w)) out.add(*mapped, c);
  }
  return out;
}

inline FrequencyTable apply_rules(const FrequencyTable& freq, const RuleSet& rules) {
  return apply_rules(freq, CodepointMap(rules));
}

/// older then newer, as a single one-pass rule set. Chains through the older
/// targets are resolved; newer rules on codepoints the older set already
/// removed can never fire and are dropped.
inline RuleSet compose_rules(const RuleSet& older, const RuleSet& newer) {
  // Any cycle in the union of both relations means the two sets contradict
  // each other (e.g. a->b followed by b->a).
  std::multimap<char32_t, char32_t> edges;
  for (const auto* rs : {&older, &newer}) {
    for (const auto& r : rs->rules()) {
      if (r.target) edges.emplace(r.source, *r.target);
    }
  }
  {
    std::map<char32_t, int> state;  // 0 new, 1 on stack, 2 done
    std::vector<char32_t> stack;
    std::function<void(char32_t)> visit = [&](char32_t v) {
      state[v] = 1;
      stack.push_back(v);
      auto [lo, hi] = edges.equal_range(v);
      for (auto it = lo; it != hi; ++it) {
        const char32_t next = it->second;
        if (state[next] == 1) {
          std::vector<char32_t> cycle(std::find(stack.begin(), stack.end(), next), stack.end());
          cycle.push_back(next);
          throw ValidationError("composition creates a cycle: " + RuleSet::describe_cycle(cycle));
        }
        if (state[next] == 0) visit(next);
      }
      stack.pop_back();
      state[v] = 2;
    };
    for (const auto& [src, tgt] : edges) {
      if (state[src] == 0) visit(src);
    }
  }

  std::vector<EditRule> out;
  std::set<char32_t> older_sources;
  for (EditRule r : older.rules()) {
    older_sources.insert(r.source);
    if (r.target) {
      if (const EditRule* next = newer.find_source(*r.target)) {
        if (next->kind == RuleKind::kDel) {
          r.kind = RuleKind::kDel;
          r.target.reset();
        } else {
          r.target = next->target;
        }
      }
    }
    out.push_back(std::move(r));
  }
  for (const auto& r : newer.rules()) {
    if (!older_sources.count(r.source)) out.push_back(r);
  }
  return RuleSet(std::move(out), std::max(older.version(), newer.version()));
}

/// Combining vowel marks stripped before measuring overlap: the harakat
/// U+064B..U+0652 and superscript alef U+0670.
inline RuleSet vowel_mark_rules() {
  std::vector<EditRule> rules;
  for (char32_t cp = 0x064B; cp <= 0x0652; ++cp) rules.push_back(EditRule::del(cp));
  rules.push_back(EditRule::del(0x0670));
  for (auto& r : rules) {
    r.status = RuleStatus::kAccepted;
    r.comment = "built-in vowel mark";
  }
  return RuleSet(std::move(rules));
}

/// Shared fraction of the two top-n lists. The denominator is the longer of
/// the two lists, which is n whenever both vocabularies have at least n words.
inline double overlap(const FrequencyTable& a, const FrequencyTable& b, std::size_t n,
                      bool strip_vowels = false) {
  if (n == 0) throw ValidationError("overlap requires n >= 1");
  const FrequencyTable* fa = &a;
  const FrequencyTable* fb = &b;
  FrequencyTable sa, sb;
  if (strip_vowels) {
    const CodepointMap vowels(vowel_mark_rules());
    sa = apply_rules(a, vowels);
    sb = apply_rules(b, vowels);
    fa = &sa;
    fb = &sb;
  }
  const auto ta = top_n(*fa, n), tb = top_n(*fb, n);
  const std::size_t denom = std::max(ta.words.size(), tb.words.size());
  if (denom == 0) return 0.0;
  std::set<Word> wa;
  for (const auto& rw : ta.words) wa.insert(rw.word);
  std::size_t shared = 0;
  for (const auto& rw : tb.words) shared += wa.count(rw.word);
  return static_cast<double>(shared) / static_cast<double>(denom);
}

inline double overlap(const Lexicon& a, const Lexicon& b, std::size_t n, bool strip_vowels = false) {
  return overlap(headword_frequencies(a), headword_frequencies(b), n, strip_vowels);
}

}  // namespace lexharmony
