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

#include <sstream>

#include "lexharmony/lm.hpp"
#include "support/lm_fixtures.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

namespace lexharmony {
namespace {

using Sentence = std::vector<std::string>;

TranscriptCorpus corpus_of(const std::vector<Sentence>& sents) {
  TranscriptCorpus c("t");
  for (std::size_t i = 0; i < sents.size(); ++i) {
    std::vector<Word> toks;
    for (const auto& w : sents[i]) toks.push_back(Word::from_utf8(w));
    c.add("u" + std::to_string(i), std::move(toks));
  }
  return c;
}

// Direct interpolated Witten-Bell over string n-grams, written from the
// recursive definition without ARPA tables or backoff weights.
class WittenBellOracle {
 public:
  WittenBellOracle(const std::vector<Sentence>& sents, int order) : order_(order) {
    std::set<std::string> vocab{"</s>", "<unk>"};
    for (const auto& s : sents) {
      Sentence seq{"<s>"};
      seq.insert(seq.end(), s.begin(), s.end());
      seq.push_back("</s>");
      for (std::size_t i = 1; i < seq.size(); ++i) {
        vocab.insert(seq[i]);
        for (int k = 0; k < order && static_cast<std::size_t>(k) <= i; ++k) {
          Sentence h(seq.begin() + static_cast<std::ptrdiff_t>(i - k), seq.begin() + static_cast<std::ptrdiff_t>(i));
          ++next_[h][seq[i]];
        }
      }
    }
    vocab_size_ = static_cast<double>(vocab.size());
  }

  double prob(const Sentence& context, const std::string& w) const {
    const std::size_t len = std::min<std::size_t>(context.size(), static_cast<std::size_t>(order_ - 1));
    return p(Sentence(context.end() - static_cast<std::ptrdiff_t>(len), context.end()), w);
  }

 private:
  double p(const Sentence& h, const std::string& w) const {
    const double lower = h.empty() ? 1.0 / vocab_size_ : p(Sentence(h.begin() + 1, h.end()), w);
    auto it = next_.find(h);
    if (it == next_.end()) return lower;
    double total = 0.0;
    for (const auto& [_, c] : it->second) total += c;
    const double types = static_cast<double>(it->second.size());
    auto c = it->second.find(w);
    const double cw = c == it->second.end() ? 0.0 : c->second;
    return (cw + types * lower) / (total + types);
  }

  int order_;
  double vocab_size_ = 0.0;
  std::map<Sentence, std::map<std::string, double>> next_;
};

double model_prob(const NGramModel& m, const Sentence& ctx, const std::string& w) {
  std::vector<int> ids;
  for (const auto& c : ctx) ids.push_back(m.lookup(c));
  return m.prob(ids, m.lookup(w));
}

TEST(NGram, TripleAUnigram) {
  const auto m = train_ngram(corpus_of({{"a", "a", "a"}}), 1);
  // counts a:3, </s>:1; N = 4, T = 2, |V| = 3 (a, </s>, <unk>)
  EXPECT_DOUBLE_EQ(model_prob(m, {}, "a"), 11.0 / 18.0);
  EXPECT_DOUBLE_EQ(model_prob(m, {}, "</s>"), 5.0 / 18.0);
  EXPECT_DOUBLE_EQ(model_prob(m, {}, "<unk>"), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(model_prob(m, {}, "zzz"), 1.0 / 9.0);
  EXPECT_GT(model_prob(m, {}, "a"), 0.5);
}

TEST(NGram, Errors) {
  EXPECT_THROW(train_ngram(TranscriptCorpus{}, 3), ValidationError);
  EXPECT_THROW(train_ngram(corpus_of({{}}), 3), ValidationError);
  EXPECT_THROW(train_ngram(corpus_of({{"a"}}), 0), ValidationError);
}

void expect_distributions_normalized(const NGramModel& m) {
  const auto ids = m.predictable_ids();
  std::vector<NGramModel::NGram> histories = m.seen_histories();
  histories.push_back({});
  histories.push_back({m.unk(), m.unk()});  // never seen
  for (const auto& h : histories) {
    double sum = 0.0;
    for (int w : ids) sum += m.prob(h, w);
    ASSERT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(NGram, DistributionsSumToOne) {
  for (int order = 1; order <= 4; ++order) {
    expect_distributions_normalized(train_ngram(corpus_of({{"a", "b", "a"}, {"b", "c"}}), order));
    expect_distributions_normalized(train_ngram(load_transcript(testing::data_path("lm_a.transcript")), order));
  }
}

TEST(NGram, MatchesOracle) {
  const std::vector<Sentence> two{{"a", "b", "a"}, {"b", "c"}};
  const auto lm_a = load_transcript(testing::data_path("lm_a.transcript"));
  const std::vector<Sentence> big = [&] {
    std::vector<Sentence> out;
    for (const auto& u : lm_a.utterances()) {
      Sentence s;
      for (const auto& w : u.tokens) s.push_back(w.utf8());
      out.push_back(s);
    }
    return out;
  }();
  for (const auto* sents : {&two, &big}) {
    for (int order = 1; order <= 3; ++order) {
      const auto m = train_ngram(corpus_of(*sents), order);
      const WittenBellOracle o(*sents, order);
      std::vector<std::string> words{"a", "b", "c", "the", "cat", "mat", "</s>", "<unk>"};
      std::vector<Sentence> contexts{{"<s>"}, {"<s>", "a"}, {"a", "b"}, {"b", "b"}, {"the", "cat"}, {"c", "zz"}};
      for (const auto& ctx : contexts) {
        for (const auto& w : words) {
          ASSERT_NEAR(model_prob(m, ctx, w), o.prob(ctx, w), 1e-15)
              << "order " << order << " word " << w;
        }
      }
    }
  }
}

TEST(Perplexity, ClosedFormUniformUnigram) {
  // Every word once and one </s>: V + 1 types with count 1, base |V| + 2.
  const int V = 9;
  Sentence s;
  for (int i = 0; i < V; ++i) s.push_back("w" + std::to_string(i));
  const auto m = train_ngram(corpus_of({s}), 1);
  const double n = V + 1, base = V + 2;
  const double p = (1.0 + n / base) / (n + n);
  EXPECT_NEAR(perplexity(m, corpus_of({s})), 1.0 / p, 1e-9);
  // V + 1 predicted tokens share all but the <unk> mass.
  EXPECT_NEAR(1.0 / p, (V + 1) / (1.0 - (n / base) / (2 * n)), 1e-9);
}

TEST(Perplexity, RepeatedTokenNearOne) {
  Sentence s(200, "x");
  const auto m = train_ngram(corpus_of({s}), 2);
  EXPECT_LT(perplexity(m, corpus_of({s})), 1.05);
}

TEST(Perplexity, MixtureOfIdenticalEqualsSingle) {
  const auto m = train_ngram(load_transcript(testing::data_path("lm_a.transcript")), 3);
  const auto h = load_transcript(testing::data_path("lm_heldout.transcript"));
  EXPECT_NEAR(perplexity({&m, &m}, MixtureWeights{{0.3, 0.7}}, h), perplexity(m, h), 1e-9);
  EXPECT_THROW(perplexity({&m, &m}, MixtureWeights{{1.0}}, h), ValidationError);
}

TEST(Arpa, RoundTrip) {
  const auto m = train_ngram(load_transcript(testing::data_path("lm_a.transcript")), 3);
  std::stringstream ss;
  write_arpa(ss, m);
  const auto back = read_arpa(ss, "x");
  EXPECT_EQ(back.order(), 3);
  const auto h = load_transcript(testing::data_path("lm_heldout.transcript"));
  const auto p0 = token_probabilities(m, h), p1 = token_probabilities(back, h);
  ASSERT_EQ(p0.size(), p1.size());
  for (std::size_t i = 0; i < p0.size(); ++i) ASSERT_NEAR(p0[i], p1[i], 1e-15 + 1e-14 * p0[i]);
  std::stringstream again;
  write_arpa(again, back);
  std::stringstream first;
  write_arpa(first, m);
  EXPECT_EQ(again.str(), first.str());
}

TEST(Arpa, Malformed) {
  std::stringstream no_end("\\data\\\nngram 1=1\n\n\\1-grams:\n-1\ta\n");
  EXPECT_THROW(read_arpa(no_end), ParseError);
  std::stringstream bad_count("\\data\\\nngram 1=2\n\\1-grams:\n-1\t<s>\n\\end\\\n");
  EXPECT_THROW(read_arpa(bad_count), ParseError);
  std::stringstream no_unk("\\data\\\nngram 1=2\n\\1-grams:\n-99\t<s>\n0\t</s>\n\\end\\\n");
  EXPECT_THROW(read_arpa(no_unk), ParseError);
}

TEST(Mixture, IdenticalModelsStayUniform) {
  const auto m = train_ngram(load_transcript(testing::data_path("lm_a.transcript")), 3);
  const auto fit = fit_mixture({&m, &m}, load_transcript(testing::data_path("lm_heldout.transcript")));
  EXPECT_DOUBLE_EQ(fit.weights.weights[0], 0.5);
  EXPECT_DOUBLE_EQ(fit.weights.weights[1], 0.5);
}

TEST(Mixture, FixtureMatchesGridAndIsMonotone) {
  const auto a = train_ngram(load_transcript(testing::data_path("lm_a.transcript")), 3);
  const auto b = train_ngram(load_transcript(testing::data_path("lm_b.transcript")), 3);
  const auto h = load_transcript(testing::data_path("lm_heldout.transcript"));
  const auto fit = fit_mixture({&a, &b}, h);
  for (std::size_t i = 1; i < fit.log_likelihood.size(); ++i) {
    ASSERT_GE(fit.log_likelihood[i], fit.log_likelihood[i - 1]);
  }
  const auto pa = token_probabilities(a, h), pb = token_probabilities(b, h);
  const auto grid = oracle::grid_search(pa, pb);
  EXPECT_GT(grid.weight, 0.0);
  EXPECT_LT(grid.weight, 1.0);
  EXPECT_NEAR(fit.weights.weights[0], grid.weight, 1e-3);
  EXPECT_NEAR(fit.perplexity, grid.perplexity, 1e-6 * grid.perplexity);
  EXPECT_LE(fit.perplexity, std::min(perplexity(a, h), perplexity(b, h)) + 1e-9);
  EXPECT_NEAR(fit.weights.weights[0] + fit.weights.weights[1], 1.0, 1e-12);
  EXPECT_NEAR(perplexity({&a, &b}, fit.weights, h), fit.perplexity, 1e-9);
}

TEST(Mixture, MatchedComponentDominates) {
  using testing::MarkovSource;
  const auto src_a = MarkovSource::make(testing::lm_words(), 5, 0.9);
  const auto src_b = MarkovSource::make(testing::lm_words(), 6, 0.9);
  const auto a = train_ngram(src_a.sample(800, 1, "a"), 2);
  const auto b = train_ngram(src_b.sample(800, 2, "b"), 2);
  const auto h = src_a.sample(200, 3, "h");
  const auto fit = fit_mixture({&a, &b}, h);
  EXPECT_GT(fit.weights.weights[0], 0.9);
  const auto grid = oracle::grid_search(token_probabilities(a, h), token_probabilities(b, h));
  EXPECT_NEAR(fit.weights.weights[0], grid.weight, 1e-3);
}

TEST(Mixture, UselessComponentVanishes) {
  using testing::MarkovSource;
  const auto src_a = MarkovSource::make(testing::lm_words(), 5, 0.8);
  const auto src_b = MarkovSource::make(testing::lm_words(), 6, 0.8);
  const auto src_t = MarkovSource::make({"q", "r", "s", "t", "u", "v"}, 7, 0.8);
  const auto a = train_ngram(src_a.sample(600, 1, "a"), 3);
  const auto b = train_ngram(src_b.sample(600, 2, "b"), 3);
  const auto t = train_ngram(src_t.sample(600, 3, "t"), 3);
  const auto h = testing::sample_mixture(src_a, src_b, 0.7, 300, 4);
  const auto fit = fit_mixture({&a, &b, &t}, h);
  EXPECT_LT(fit.weights.weights[2], 0.01);
  EXPECT_GT(fit.weights.weights[0], fit.weights.weights[1]);
  const auto j = to_json(fit, {"a", "b", "t"});
  EXPECT_EQ(j["weights_rounded"][2], 0.0);
  EXPECT_EQ(j["models"][2], "t");
  EXPECT_EQ(j["log_likelihood"].size(), fit.log_likelihood.size());
}

TEST(Mixture, Preconditions) {
  const auto m = train_ngram(corpus_of({{"a"}}), 1);
  EXPECT_THROW(fit_mixture({&m}, corpus_of({{"a"}})), ValidationError);
  EXPECT_THROW(fit_mixture({&m, &m}, TranscriptCorpus{}), ValidationError);
}

TEST(Sidecar, Fields) {
  const auto m = train_ngram(corpus_of({{"a", "b"}}), 2);
  const auto j = model_sidecar(m);
  EXPECT_EQ(j["order"], 2);
  EXPECT_EQ(j["training_tokens"], 2);
  EXPECT_EQ(j["vocabulary"].size(), 5u);
}

}  // namespace
}  // namespace lexharmony
