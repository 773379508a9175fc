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
#include <sstream>

#include "lexharmony/pron_stats.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

namespace lexharmony {
namespace {

using testing::data_path;
using testing::W;

WordAlignmentCounts wc(std::vector<std::uint64_t> prons, std::uint64_t sil_after = 0, std::uint64_t sil_before = 0) {
  WordAlignmentCounts c;
  c.pron_counts = std::move(prons);
  for (auto x : c.pron_counts) c.total += x;
  c.sil_after = sil_after;
  c.sil_before = sil_before;
  return c;
}

TEST(PronProbs, NineToOne) {
  const auto sum = pron_probs(wc({9, 1}), 0.0, PronNormalization::kSum);
  EXPECT_DOUBLE_EQ(sum[0], 0.9);
  EXPECT_DOUBLE_EQ(sum[1], 0.1);
  const auto mx = pron_probs(wc({9, 1}), 0.0, PronNormalization::kMax);
  EXPECT_EQ(mx[0], 1.0);
  EXPECT_DOUBLE_EQ(mx[1], 1.0 / 9.0);
}

TEST(PronProbs, UnseenWord) {
  const auto p = pron_probs(wc({0, 0}), 1.0, PronNormalization::kSum);
  EXPECT_EQ(p, (std::vector<double>{0.5, 0.5}));
  const auto q = pron_probs(wc({0, 0, 0}), 0.0, PronNormalization::kSum);
  for (double x : q) EXPECT_DOUBLE_EQ(x, 1.0 / 3.0);
  EXPECT_THROW(pron_probs(wc({}), 1.0, PronNormalization::kSum), ValidationError);
}

TEST(PronProbs, MatchesOracleOnRandomCounts) {
  std::mt19937 rng(17);
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::uint64_t> counts(1 + rng() % 5);
    for (auto& x : counts) x = rng() % 30;
    const double lambda = (rng() % 40) / 8.0;
    const auto sum = pron_probs(wc(counts), lambda, PronNormalization::kSum);
    const auto expect = oracle::pron_probs(counts, lambda, true);
    double total = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      ASSERT_NEAR(sum[i], expect[i], 1e-15);
      total += sum[i];
    }
    ASSERT_NEAR(total, 1.0, 1e-12);
    const auto mx = pron_probs(wc(counts), lambda, PronNormalization::kMax);
    const auto expect_max = oracle::pron_probs(counts, lambda, false);
    ASSERT_EQ(*std::max_element(mx.begin(), mx.end()), 1.0);
    for (std::size_t i = 0; i < counts.size(); ++i) ASSERT_NEAR(mx[i], expect_max[i], 1e-15);
  }
}

TEST(PronProbs, LambdaMovesTowardUniform) {
  std::mt19937 rng(23);
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::uint64_t> counts(2 + rng() % 4);
    for (auto& x : counts) x = rng() % 50;
    const double l1 = (rng() % 100) / 10.0, l2 = l1 + 0.1 + (rng() % 100) / 10.0;
    const double u = 1.0 / static_cast<double>(counts.size());
    const auto a = pron_probs(wc(counts), l1, PronNormalization::kSum);
    const auto b = pron_probs(wc(counts), l2, PronNormalization::kSum);
    const auto am = pron_probs(wc(counts), l1, PronNormalization::kMax);
    const auto bm = pron_probs(wc(counts), l2, PronNormalization::kMax);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      ASSERT_LE(std::abs(b[i] - u), std::abs(a[i] - u) + 1e-15);
      ASSERT_GE(bm[i], am[i] - 1e-15);
    }
  }
}

TEST(Silence, FormulaExamples) {
  EXPECT_DOUBLE_EQ(smoothed_silence(4, 10, 0.5, 2.0), 5.0 / 12.0);
  EXPECT_DOUBLE_EQ(smoothed_silence(0, 0, 0.3, 2.0), 0.3);
  EXPECT_NEAR(smoothed_silence(4, 10, 0.5, 1e12), 0.5, 1e-10);
}

TEST(Silence, EstimateFromCounts) {
  AlignmentCounts c;
  c.words[W("x")] = wc({6, 4}, 4, 1);
  c.words[W("y")] = wc({10}, 6, 2);
  const auto s = estimate_silence_probs(c, 2.0);
  // global rate 10 / 20
  EXPECT_DOUBLE_EQ(s.at(W("x")), 5.0 / 12.0);
  EXPECT_DOUBLE_EQ(s.at(W("y")), 7.0 / 12.0);
  EXPECT_THROW(estimate_silence_probs(c, 0.0), ValidationError);
  EXPECT_THROW(estimate_silence_probs(AlignmentCounts{}, 1.0), ValidationError);
}

TEST(PronStats, FullTable) {
  AlignmentCounts c;
  c.words[W("x")] = wc({6, 4}, 4, 1);
  c.words[W("y")] = wc({10}, 6, 3);
  c.words[W("z")] = wc({0, 0}, 0, 0);
  PronStatsOptions o;
  o.lambda = 0.0;
  o.convention = PronNormalization::kSum;
  const auto t = estimate_pron_stats(c, o);
  EXPECT_EQ(t.convention, PronNormalization::kSum);
  EXPECT_DOUBLE_EQ(t.words.at(W("x")).prons[0], 0.6);
  EXPECT_DOUBLE_EQ(t.words.at(W("z")).prons[1], 0.5);
  EXPECT_DOUBLE_EQ(t.words.at(W("z")).sil_after, 0.5);
  // before rate 4 / 20; x: (1 + 2 * 0.2) / 12 / 0.2
  EXPECT_DOUBLE_EQ(t.words.at(W("x")).sil_before_correction, (1.4 / 12.0) / 0.2);
  EXPECT_DOUBLE_EQ(t.words.at(W("z")).sil_before_correction, 1.0);
  for (const auto& [w, p] : t.words) {
    EXPECT_GT(p.sil_after, 0.0);
    EXPECT_LT(p.sil_after, 1.0);
  }
}

TEST(PronStats, InvalidCounts) {
  AlignmentCounts c;
  c.words[W("x")] = wc({6, 4});
  c.words[W("x")].total = 11;
  EXPECT_THROW(estimate_pron_probs(c, 1.0, PronNormalization::kMax), ValidationError);
  c.words[W("x")] = wc({6, 4}, 11);
  EXPECT_THROW(estimate_pron_probs(c, 1.0, PronNormalization::kMax), ValidationError);
  c.words[W("x")] = wc({});
  EXPECT_THROW(estimate_pron_probs(c, 1.0, PronNormalization::kMax), ValidationError);
  EXPECT_THROW(estimate_pron_probs(AlignmentCounts{}, -1.0, PronNormalization::kMax), ValidationError);
}

TEST(Reestimate, Snapshots) {
  AlignmentCounts a;
  a.words[W("x")] = wc({3, 3}, 1, 1);
  AlignmentCounts b = a;
  b.words[W("x")] = wc({5, 3}, 1, 1);
  AlignmentCounts c = a;
  c.words[W("x")] = wc({9, 3}, 1, 1);
  PronStatsOptions o;
  o.convention = PronNormalization::kSum;
  const auto same = reestimate({a, a}, o);
  EXPECT_EQ(same[0].words.at(W("x")).prons, same[1].words.at(W("x")).prons);
  const auto grow = reestimate({a, b, c}, o);
  ASSERT_EQ(grow.size(), 3u);
  EXPECT_LE(grow[0].words.at(W("x")).prons[0], grow[1].words.at(W("x")).prons[0]);
  EXPECT_LE(grow[1].words.at(W("x")).prons[0], grow[2].words.at(W("x")).prons[0]);
  EXPECT_TRUE(reestimate({}, o).empty());
}

TEST(PronStatsIo, FixtureFiles) {
  const auto lex = load_lexicon(data_path("pron.lexicon"));
  const auto counts = load_alignment_counts(data_path("pron_counts.tsv"), data_path("pron_totals.tsv"), lex);
  EXPECT_EQ(counts.words.at(W("kar")).pron_counts, (std::vector<std::uint64_t>{9, 1}));
  EXPECT_EQ(counts.total_tokens(), 16u);
  EXPECT_EQ(counts.total_sil_after(), 7u);
  PronStatsOptions o;
  o.lambda = 0.0;
  o.convention = PronNormalization::kSum;
  const auto t = estimate_pron_stats(counts, o);
  EXPECT_DOUBLE_EQ(t.words.at(W("kar")).prons[1], 0.1);
  EXPECT_DOUBLE_EQ(t.words.at(W("kar")).sil_after, (4.0 + 2.0 * 7.0 / 16.0) / 12.0);
  EXPECT_DOUBLE_EQ(t.words.at(W("min")).sil_after, 7.0 / 16.0);

  const auto out = to_lexicon(t, lex);
  ASSERT_EQ(out.find(W("kar"))->size(), 2u);
  EXPECT_DOUBLE_EQ(*out.find(W("kar"))->at(0).prob, 0.9);
  EXPECT_EQ(out.find(W("kar"))->at(0).phones, lex.find(W("kar"))->at(0).phones);

  testing::TempDir tmp;
  save_lexicon(tmp / "p.lexicon", out);
  const auto back = load_lexicon(tmp / "p.lexicon");
  EXPECT_NEAR(*back.find(W("min"))->at(2).prob, 1.0 / 3.0, 1e-12);
}

TEST(PronStatsIo, ZeroProbabilityFloored) {
  AlignmentCounts c;
  c.words[W("kar")] = wc({10, 0});
  Lexicon lex;
  lex.add(W("kar"), {{"k"}, std::nullopt});
  lex.add(W("kar"), {{"g"}, std::nullopt});
  const auto out = to_lexicon(estimate_pron_probs(c, 0.0, PronNormalization::kMax), lex);
  EXPECT_EQ(*out.find(W("kar"))->at(1).prob, 1e-9);
}

TEST(PronStatsIo, Malformed) {
  const auto lex = load_lexicon(data_path("pron.lexicon"));
  auto parse = [&](const std::string& a, const std::string& b) {
    std::istringstream x(a), y(b);
    return read_alignment_counts(x, y, lex);
  };
  EXPECT_THROW(parse("kar\t0\n", ""), ParseError);
  EXPECT_THROW(parse("kar\t5\t1\n", ""), ParseError);
  EXPECT_THROW(parse("nope\t0\t1\n", ""), ParseError);
  EXPECT_THROW(parse("kar\t0\t-1\n", ""), ParseError);
  EXPECT_THROW(parse("kar\t0\t3\n", "kar\t2\t0\t0\n"), ValidationError);
  EXPECT_NO_THROW(parse("kar\t0\t3\n", "kar\t3\t1\t0\n"));
}

}  // namespace
}  // namespace lexharmony
