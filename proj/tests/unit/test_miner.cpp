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
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lexharmony/miner.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"
#include "support/testutil.hpp"

namespace lexharmony {
namespace {

using testing::W;

std::vector<RankedWord> ranked(std::initializer_list<std::pair<std::u32string, std::uint64_t>> xs) {
  std::vector<RankedWord> out;
  for (const auto& [w, c] : xs) out.push_back({Word(w), c});
  return out;
}

WordPair pair_of(const std::u32string& a, const std::u32string& b, Channel ch = Channel::kChar) {
  return {Word(a), Word(b), align(a, b), ch};
}

TEST(PairWords, ExactMatchExcluded) {
  const auto r = pair_words(ranked({{U"ab", 1}}), ranked({{U"ab", 1}}), Metric::kChar, nullptr, 2);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_EQ(r.examined, 0u);
}

TEST(PairWords, DeletionPair) {
  const auto r = pair_words(ranked({{U"axb", 1}}), ranked({{U"ab", 1}}), Metric::kChar, nullptr, 2);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].a, W("axb"));
  EXPECT_EQ(r.pairs[0].b, W("ab"));
  EXPECT_EQ(r.pairs[0].alignment.ops[1], EditOp<char32_t>::del(U'x'));
}

TEST(PairWords, CostAboveLimitExcluded) {
  const auto r = pair_words(ranked({{U"abcd", 1}}), ranked({{U"wxyz", 1}}), Metric::kChar, nullptr, 2);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_EQ(r.examined, 1u);
  EXPECT_THROW(pair_words({}, ranked({{U"a", 1}}), Metric::kChar, nullptr, 2), ValidationError);
  EXPECT_THROW(pair_words(ranked({{U"a", 1}}), ranked({{U"a", 1}}), Metric::kChar, nullptr, 0), ValidationError);
}

// Words pairwise at distance >= 3, each containing the injected letter at
// most once, so the injected counterpart is the unique nearest neighbour.
TEST(PairWords, InjectedSubstitutionPairsEveryCounterpart) {
  std::mt19937 rng(31);
  const std::u32string letters = U"ابتدرسلمنوك";
  std::vector<std::u32string> words;
  while (words.size() < 100) {
    std::u32string w(5 + rng() % 3, 0);
    for (auto& c : w) c = letters[rng() % letters.size()];
    if (std::count(w.begin(), w.end(), U'ك') > 1) continue;
    bool far = true;
    for (const auto& v : words) far = far && oracle::edit_distance(w, v) >= 3;
    if (far) words.push_back(w);
  }
  const RuleSet inject({EditRule::sub(U'ك', U'ک')});
  std::vector<RankedWord> a, b;
  for (std::size_t i = 0; i < words.size(); ++i) {
    a.push_back({Word(words[i]), 100 - i});
    b.push_back({*apply_rules(Word(words[i]), inject), 100 - i});
  }
  const auto r = pair_words(a, b, Metric::kChar, nullptr, 2);
  std::size_t changed = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (a[i].word == b[i].word) continue;
    ++changed;
    bool found = false;
    for (const auto& p : r.pairs) found = found || (p.a == a[i].word && p.b == b[i].word);
    EXPECT_TRUE(found) << a[i].word.utf8();
  }
  EXPECT_GT(changed, 10u);
  EXPECT_EQ(r.pairs.size(), changed);
}

TEST(PairWords, PhoneChannelAndFailures) {
  G2PTable t;
  for (auto [g, p] : std::initializer_list<std::pair<std::u32string, std::string>>{
           {U"ك", "k"}, {U"ک", "k"}, {U"ا", "aa"}, {U"ر", "r"}, {U"س", "s"}}) {
    t.add_rule(g, {p});
  }
  const auto a = ranked({{U"كار", 3}, {U"زار", 1}});
  const auto b = ranked({{U"کار", 3}, {U"سار", 2}});
  const auto r = pair_words(a, b, Metric::kPhone, &t, 2);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].b, Word(U"کار"));
  EXPECT_EQ(r.pairs[0].channel, Channel::kPhone);
  EXPECT_EQ(r.g2p_failures, 1u);  // U+0632 has no rule

  const auto c = pair_words(a, b, Metric::kChar, nullptr, 2);
  const auto merged = merge_pairs(c.pairs, r.pairs);
  std::size_t both = 0;
  for (const auto& p : merged) both += p.channel == Channel::kBoth;
  EXPECT_EQ(both, 1u);
}

TEST(MineRules, SupportCountsPairs) {
  std::vector<WordPair> pairs;
  for (int i = 0; i < 12; ++i) {
    std::u32string a = U"كا";
    a.push_back(U'ب' + static_cast<char32_t>(i));
    std::u32string b = a;
    b[0] = U'ک';
    pairs.push_back(pair_of(a, b));
  }
  const auto rules = mine_rules(pairs);
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].id(), "SUB:U+0643:U+06A9");
  EXPECT_EQ(rules[0].support, 12u);
  EXPECT_EQ(rules[0].examples.size(), 5u);
  EXPECT_EQ(rules[0].status, RuleStatus::kCandidate);
}

TEST(MineRules, SingleDeletionAndEmpty) {
  const auto rules = mine_rules({pair_of(U"كِتاب", U"كتاب")});
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].id(), "DEL:U+0650");
  EXPECT_EQ(rules[0].support, 1u);
  EXPECT_TRUE(mine_rules({}).empty());
}

TEST(MineRules, RepeatedOpInOnePairCountsOnce) {
  const auto rules = mine_rules({pair_of(U"aِbِ", U"ab")});
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].support, 1u);
}

TEST(MineRules, InsertionsOnlyWithFlag) {
  const std::vector<WordPair> pairs{pair_of(U"ab", U"a‌b")};
  EXPECT_TRUE(mine_rules(pairs).empty());
  MineOptions o;
  o.include_insertions = true;
  const auto rules = mine_rules(pairs, o);
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].id(), "DEL:U+200C");
}

TEST(MineRules, SupportMatchesRecount) {
  std::mt19937 rng(90);
  for (int t = 0; t < 100; ++t) {
    std::vector<WordPair> pairs;
    for (int i = 0; i < 8; ++i) {
      std::u32string a(1 + rng() % 4, 0), b(1 + rng() % 4, 0);
      for (auto& c : a) c = U'a' + static_cast<char32_t>(rng() % 3);
      for (auto& c : b) c = U'a' + static_cast<char32_t>(rng() % 3);
      pairs.push_back(pair_of(a, b, rng() % 2 ? Channel::kChar : Channel::kPhone));
    }
    for (const auto& r : mine_rules(pairs)) {
      std::size_t recount = 0;
      std::set<Channel> channels;
      for (const auto& p : pairs) {
        bool has = false;
        for (const auto& op : p.alignment.ops) {
          has = has || (r.kind == RuleKind::kSub && op.kind == EditKind::kSub && op.source == r.source &&
                        op.target == r.target) ||
                (r.kind == RuleKind::kDel && op.kind == EditKind::kDel && op.source == r.source);
        }
        if (has) {
          ++recount;
          channels.insert(p.channel);
        }
      }
      ASSERT_EQ(r.support, recount);
      ASSERT_GE(r.support, 1u);
      ASSERT_EQ(r.channel, channels.size() == 2 ? Channel::kBoth : *channels.begin());
    }
  }
}

TEST(OrientRules, RarerCodepointBecomesSource) {
  FrequencyTable a, b;
  a.add(W(U"كار"), 2);
  b.add(W(U"کار"), 9);
  const auto raw = mine_rules({pair_of(U"كار", U"کار")});
  const auto oriented = orient_rules(raw, a, b);
  ASSERT_EQ(oriented.size(), 1u);
  EXPECT_EQ(oriented[0].id(), "SUB:U+0643:U+06A9");
  const auto flipped = orient_rules(raw, b, FrequencyTable{});  // only Keheh seen
  EXPECT_EQ(flipped[0].id(), "SUB:U+0643:U+06A9");
  FrequencyTable c;
  c.add(W(U"كار"), 9);
  const auto back = orient_rules(raw, c, FrequencyTable{});
  EXPECT_EQ(back[0].id(), "SUB:U+06A9:U+0643");
  EXPECT_EQ(back[0].examples[0].first, W(U"کار"));
}

TEST(OrientRules, OppositeDirectionsMerge) {
  FrequencyTable f;
  f.add(W("ab"), 1);
  f.add(W("bb"), 1);
  const auto raw = mine_rules({pair_of(U"xa", U"xb"), pair_of(U"yb", U"ya")});
  ASSERT_EQ(raw.size(), 2u);
  const auto oriented = orient_rules(raw, f, FrequencyTable{});
  ASSERT_EQ(oriented.size(), 1u);
  EXPECT_EQ(oriented[0].id(), "SUB:U+0061:U+0062");
  EXPECT_EQ(oriented[0].support, 2u);
}

TEST(ProjectGain, IdenticalLexicons) {
  FrequencyTable f;
  f.add(W("ab"), 3);
  f.add(W("cd"), 2);
  const auto g = project_gain(EditRule::sub('a', 'c'), f, f, 2);
  EXPECT_DOUBLE_EQ(g.before, 1.0);
  EXPECT_DOUBLE_EQ(g.after, 1.0);
}

TEST(ProjectGain, InjectedSubRestoresOverlap) {
  const auto p = testing::make_synthetic_pair(300, 4, 500.0, RuleSet({EditRule::sub(0x0643, 0x06A9)}));
  const auto fa = word_frequencies(p.text_a), fb = word_frequencies(p.text_b);
  const auto g = project_gain(EditRule::sub(0x0643, 0x06A9), fa, fb, 100);
  EXPECT_LT(g.before, 1.0);
  EXPECT_DOUBLE_EQ(g.after, 1.0);
  const auto noop = project_gain(EditRule::sub(0x05D0, 0x05D1), fa, fb, 100);  // Hebrew, absent
  EXPECT_DOUBLE_EQ(noop.after, noop.before);
  EXPECT_THROW(project_gain(RuleSet({EditRule::sub('a', 'b'), EditRule::sub('b', 'a')}), fa, fb, 10),
               ValidationError);
}

TEST(SelectMinimalRules, TwoInjectedRulesInGainOrder) {
  const RuleSet inject({EditRule::sub(0x0643, 0x06A9), EditRule::del(0x0650)});
  const auto p = testing::make_synthetic_pair(800, 12, 2000.0, inject);
  const auto fa = word_frequencies(p.text_a), fb = word_frequencies(p.text_b);
  std::vector<EditRule> cands{EditRule::sub(0x0643, 0x06A9), EditRule::del(0x0650)};
  std::vector<SelectionStep> trace;
  const RuleSet chosen = select_minimal_rules(cands, fa, fb, 200, 0.001, &trace);
  ASSERT_EQ(chosen.size(), 2u);
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_GE(trace[0].marginal_gain, trace[1].marginal_gain);
  EXPECT_DOUBLE_EQ(trace.back().overlap_after, 1.0);
  // Order is by marginal gain, independent of the candidate order.
  const RuleSet swapped = select_minimal_rules({cands[1], cands[0]}, fa, fb, 200, 0.001);
  EXPECT_EQ(swapped.rules()[0].id(), chosen.rules()[0].id());
}

TEST(SelectMinimalRules, ZeroGainExcludedAndCycleGuard) {
  FrequencyTable a, b;
  a.add(W("xa"), 5);
  b.add(W("xb"), 5);
  a.add(W("q"), 1);
  b.add(W("q"), 1);
  const RuleSet none = select_minimal_rules({EditRule::sub('z', 'y')}, a, b, 2, 0.001);
  EXPECT_TRUE(none.empty());
  const RuleSet one = select_minimal_rules({EditRule::sub('a', 'b'), EditRule::sub('b', 'a')}, a, b, 2, 0.001);
  EXPECT_EQ(one.size(), 1u);
  const RuleSet shared = select_minimal_rules({EditRule::sub('a', 'b'), EditRule::del('a')}, a, b, 2, 0.0);
  EXPECT_EQ(shared.size(), 1u);
}

TEST(SelectMinimalRules, PrefixOverlapMonotone) {
  const auto p = testing::make_synthetic_pair(600, 8, 1500.0);
  const auto fa = word_frequencies(p.text_a), fb = word_frequencies(p.text_b);
  MiningParams mp;
  mp.n = 150;
  const auto report = mine_report(fa, fb, mp);
  std::vector<EditRule> cands;
  for (const auto& c : report.candidates) cands.push_back(c.rule);
  std::vector<SelectionStep> trace;
  const RuleSet chosen = select_minimal_rules(cands, fa, fb, mp.n, mp.min_gain, &trace);
  double prev = overlap(fa, fb, mp.n);
  std::vector<EditRule> prefix;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    prefix.push_back(chosen.rules()[i]);
    const double o = project_gain(RuleSet(prefix), fa, fb, mp.n).after;
    EXPECT_DOUBLE_EQ(o, trace[i].overlap_after);
    EXPECT_GE(o, prev);
    prev = o;
  }
  EXPECT_GE(project_gain(chosen, fa, fb, mp.n).after, prev);
}

TEST(MineReport, SortedAndSerializable) {
  const auto p = testing::make_synthetic_pair(600, 3, 1500.0);
  const auto fa = word_frequencies(p.text_a), fb = word_frequencies(p.text_b);
  MiningParams mp;
  mp.n = 200;
  const auto r = mine_report(fa, fb, mp);
  ASSERT_FALSE(r.candidates.empty());
  for (std::size_t i = 1; i < r.candidates.size(); ++i) {
    const auto& x = r.candidates[i - 1];
    const auto& y = r.candidates[i];
    ASSERT_TRUE(x.projected_gain > y.projected_gain ||
                (x.projected_gain == y.projected_gain &&
                 (x.rule.support > y.rule.support ||
                  (x.rule.support == y.rule.support && x.rule.source <= y.rule.source))));
  }
  for (const auto& c : r.candidates) {
    EXPECT_GE(c.rule.support, 1u);
    EXPECT_LE(c.rule.examples.size(), 5u);
  }
  EXPECT_DOUBLE_EQ(r.overlap_before, overlap(fa, fb, 200));
  const auto j = to_json(r);
  EXPECT_EQ(j["format"], "lexharmony-mining-report");
  EXPECT_EQ(j["parameters"]["n"], 200);
  const auto back = mining_report_from_json(j);
  ASSERT_EQ(back.candidates.size(), r.candidates.size());
  EXPECT_EQ(back.recommended, r.recommended);
  EXPECT_EQ(to_json(back), j);
}

TEST(MineReport, RankBySupportFlag) {
  const auto p = testing::make_synthetic_pair(600, 3, 1500.0);
  const auto fa = word_frequencies(p.text_a), fb = word_frequencies(p.text_b);
  MiningParams mp;
  mp.n = 200;
  mp.rank_by_support = true;
  const auto r = mine_report(fa, fb, mp);
  for (std::size_t i = 1; i < r.candidates.size(); ++i) {
    ASSERT_GE(r.candidates[i - 1].rule.support, r.candidates[i].rule.support);
  }
}

TEST(MineReport, Deterministic) {
  const auto p = testing::make_synthetic_pair(500, 5, 1000.0);
  const auto fa = word_frequencies(p.text_a), fb = word_frequencies(p.text_b);
  MiningParams mp;
  mp.n = 150;
  EXPECT_EQ(to_json(mine_report(fa, fb, mp)), to_json(mine_report(fa, fb, mp)));
}

TEST(MiningParams, JsonValidation) {
  MiningParams p;
  p.n = 7;
  p.max_cost = 3;
  const auto back = mining_params_from_json(to_json(p));
  EXPECT_EQ(back.n, 7u);
  EXPECT_EQ(back.max_cost, 3u);
  EXPECT_THROW(mining_params_from_json({{"n", 0}}), ValidationError);
}

}  // namespace
}  // namespace lexharmony
