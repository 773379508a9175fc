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

// Acceptance suite: one PASS/FAIL line per criterion, each checked against
// its runtime budget. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lexharmony/joint_trainer.hpp"
#include "lexharmony/lexharmony.hpp"
#include "lexharmony_cli.hpp"
#include "support/lm_fixtures.hpp"
#include "support/nnet_oracle.hpp"
#include "support/oracles.hpp"
#include "support/random_fixtures.hpp"
#include "support/synthetic.hpp"
#include "support/testutil.hpp"

namespace lx = lexharmony;
using nlohmann::json;

namespace {

/// Thrown by check(); carries the first violated condition.
struct Violation {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Violation{what};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const Violation& v) {
    ok = false;
    detail = v.what;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && secs >= budget_s) {
    ok = false;
    detail += "; over the " + fmt(budget_s) + " s budget";
  }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << fmt(secs) << " s / " << fmt(budget_s) << " s) " << detail
            << std::endl;
}

// ---------------------------------------------------------------------------

std::string synthetic_rule_recovery() {
  const auto pair = lx::testing::make_synthetic_pair(5000, 11, 8000.0, lx::testing::confusable_injection());
  lx::CorpusSnapshot a{"A", pair.lex_a, pair.text_a}, b{"B", pair.lex_b, pair.text_b};
  lx::MiningParams params;
  params.n = 1000;
  auto s = lx::make_session({a, b}, params);
  const double before = s.current_overlap();
  check(before < 1.0, "injection did not degrade overlap");
  int iterations = 0;
  while (iterations < 3 && s.current_overlap() < 1.0) {
    s = lx::run_iteration(std::move(s));
    s = lx::commit_decisions(std::move(s), lx::accept_recommended(*s.pending));
    ++iterations;
  }
  for (const auto& r : pair.injected.rules()) {
    check(lx::testing::recovers(s.accepted, r), "injected rule " + r.id() + " not recovered");
  }
  const double after = s.current_overlap();
  check(after == 1.0, "overlap ended at " + fmt(after));
  std::string ids;
  for (const auto& r : s.accepted.rules()) ids += (ids.empty() ? "" : ",") + r.id();
  return "overlap " + fmt(before) + " -> " + fmt(after) + " in " + std::to_string(iterations) +
         " iteration(s); accepted " + ids;
}

std::u32string random_string(std::mt19937& rng, std::size_t max_len) {
  std::u32string s(rng() % (max_len + 1), 0);
  for (auto& c : s) c = U'a' + static_cast<char32_t>(rng() % 4);
  return s;
}

std::string edit_distance_oracle() {
  std::mt19937 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_string(rng, 8), b = random_string(rng, 8);
    lx::oracle::EditOracle<std::u32string> o(a, b);
    const auto d = lx::edit_distance(a, b);
    check(static_cast<int>(d) == o.distance(), "edit_distance differs from the oracle on pair " + std::to_string(t));
    const auto al = lx::align(a, b);
    check(al.cost == d, "align cost differs on pair " + std::to_string(t));
    std::vector<lx::EditKind> kinds;
    for (const auto& op : al.ops) kinds.push_back(op.kind);
    check(kinds == o.preferred_kinds(), "align path differs from the oracle on pair " + std::to_string(t));
    check(lx::replay(al, a) == b, "alignment does not replay on pair " + std::to_string(t));
  }
  return "1000 pairs, length <= 8";
}

std::string rule_algebra() {
  std::mt19937 rng(4242);
  int redraws = 0;
  for (int t = 0; t < 500; ++t) {
    const lx::RuleSet r1 = lx::testing::random_ruleset(rng);
    const lx::Lexicon lex = lx::testing::random_lexicon(rng);
    const lx::TranscriptCorpus tr = lx::testing::random_transcript(rng);

    const lx::RuleSet closed = r1.closed();
    const auto once = lx::apply_rules(lex, closed);
    check(lx::apply_rules(once, closed) == once, "lexicon not idempotent on fixture " + std::to_string(t));
    const auto tonce = lx::apply_rules(tr, closed);
    check(lx::apply_rules(tonce, closed) == tonce, "transcript not idempotent on fixture " + std::to_string(t));

    lx::RuleSet r2, composed;
    for (;;) {
      r2 = lx::testing::random_ruleset(rng);
      try {
        composed = lx::compose_rules(r1, r2);
        break;
      } catch (const lx::ValidationError&) {
        ++redraws;  // contradictory pair: composition is rejected by design
      }
    }
    check(lx::equivalent(lx::apply_rules(lx::apply_rules(lex, r1), r2), lx::apply_rules(lex, composed)),
          "lexicon compose-equivalence fails on fixture " + std::to_string(t));
    check(lx::apply_rules(lx::apply_rules(tr, r1), r2) == lx::apply_rules(tr, composed),
          "transcript compose-equivalence fails on fixture " + std::to_string(t));
  }
  return "500 fixtures (" + std::to_string(redraws) + " contradictory compositions redrawn)";
}

std::string lm_mixture() {
  using lx::testing::MarkovSource;
  struct Fixture {
    std::string name;
    lx::TranscriptCorpus train_a, train_b, heldout;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"bundled", lx::load_transcript(lx::testing::data_path("lm_a.transcript")),
                      lx::load_transcript(lx::testing::data_path("lm_b.transcript")),
                      lx::load_transcript(lx::testing::data_path("lm_heldout.transcript"))});
  const auto src_a = MarkovSource::make(lx::testing::lm_words(), 31, 0.8);
  const auto src_b = MarkovSource::make(lx::testing::lm_words(), 32, 0.8);
  for (double w : {0.2, 0.5, 0.85}) {
    fixtures.push_back({"mix" + fmt(w), src_a.sample(300, 1, "a"), src_b.sample(300, 2, "b"),
                        lx::testing::sample_mixture(src_a, src_b, w, 150, 3)});
  }
  double worst_w = 0.0, worst_ppl = 0.0;
  for (const auto& f : fixtures) {
    const auto ma = lx::train_ngram(f.train_a, 3), mb = lx::train_ngram(f.train_b, 3);
    const auto fit = lx::fit_mixture({&ma, &mb}, f.heldout);
    for (std::size_t i = 1; i < fit.log_likelihood.size(); ++i) {
      check(fit.log_likelihood[i] >= fit.log_likelihood[i - 1], f.name + ": log-likelihood decreased");
    }
    const auto pa = lx::token_probabilities(ma, f.heldout), pb = lx::token_probabilities(mb, f.heldout);
    const auto grid = lx::oracle::grid_search(pa, pb, 0.001);
    const double dw = std::abs(fit.weights.weights[0] - grid.weight);
    const double dp = std::abs(fit.perplexity - grid.perplexity) / grid.perplexity;
    check(dw <= 1e-3, f.name + ": weight off the grid optimum by " + fmt(dw));
    check(dp <= 1e-6, f.name + ": perplexity off the grid optimum by " + fmt(dp) + " relative");
    const double best_single = std::min(lx::perplexity(ma, f.heldout), lx::perplexity(mb, f.heldout));
    check(fit.perplexity <= best_single + 1e-9, f.name + ": mixture worse than a single component");
    worst_w = std::max(worst_w, dw);
    worst_ppl = std::max(worst_ppl, dp);
  }
  return std::to_string(fixtures.size()) + " fixtures; max |w - grid| " + fmt(worst_w) + ", max rel ppl gap " +
         fmt(worst_ppl);
}

lx::WordAlignmentCounts counts_of(std::vector<std::uint64_t> prons) {
  lx::WordAlignmentCounts c;
  c.pron_counts = std::move(prons);
  for (auto x : c.pron_counts) c.total += x;
  return c;
}

std::string pron_statistics() {
  using lx::PronNormalization;
  const auto sum = lx::pron_probs(counts_of({9, 1}), 0.0, PronNormalization::kSum);
  check(sum[0] == 0.9 && sum[1] == 0.1, "(9,1) SUM gave (" + fmt(sum[0]) + ", " + fmt(sum[1]) + ")");
  const auto mx = lx::pron_probs(counts_of({9, 1}), 0.0, PronNormalization::kMax);
  check(mx[0] == 1.0 && mx[1] == 1.0 / 9.0, "(9,1) MAX gave (" + fmt(mx[0]) + ", " + fmt(mx[1]) + ")");
  const auto unseen = lx::pron_probs(counts_of({0, 0}), 1.0, PronNormalization::kSum);
  check(unseen[0] == 0.5 && unseen[1] == 0.5, "unseen word is not uniform");
  check(lx::smoothed_silence(4, 10, 0.5, 2.0) == 5.0 / 12.0, "silence example is not (4+1)/(10+2)");
  check(lx::smoothed_silence(0, 0, 0.3, 2.0) == 0.3, "silence of an unseen word is not the global rate");

  std::mt19937 rng(99);
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::uint64_t> counts(2 + rng() % 5);
    for (auto& x : counts) x = rng() % 40;
    const double l1 = (rng() % 80) / 8.0, l2 = l1 + 0.125 + (rng() % 80) / 8.0;
    const double u = 1.0 / static_cast<double>(counts.size());
    const auto a = lx::pron_probs(counts_of(counts), l1, PronNormalization::kSum);
    const auto b = lx::pron_probs(counts_of(counts), l2, PronNormalization::kSum);
    double total = 0.0;
    for (double x : a) total += x;
    check(std::abs(total - 1.0) <= 1e-12, "SUM table " + std::to_string(t) + " sums to " + fmt(total));
    const auto am = lx::pron_probs(counts_of(counts), l1, PronNormalization::kMax);
    const auto bm = lx::pron_probs(counts_of(counts), l2, PronNormalization::kMax);
    check(*std::max_element(am.begin(), am.end()) == 1.0, "MAX table max is not 1");
    for (std::size_t i = 0; i < counts.size(); ++i) {
      check(std::abs(b[i] - u) <= std::abs(a[i] - u) + 1e-15, "lambda moved table " + std::to_string(t) + " away from uniform");
      check(bm[i] >= am[i] - 1e-15, "lambda lowered a MAX-normalized probability in table " + std::to_string(t));
    }
  }
  return "examples exact; 1000 random tables monotone in lambda";
}

std::string joint_trainer() {
  namespace nn = lx::nnet;
  // (a) shared-layer exactness for every strategy
  nn::ToyTaskConfig toy;
  toy.samples_per_corpus = 150;
  const auto data = nn::make_toy_corpora(toy);
  std::vector<std::vector<nn::Dataset>> shards;
  for (const auto& d : data) shards.push_back(nn::split_shards(d, 2, 3));
  nn::NetGeometry g;
  nn::JointConfig cfg;
  for (auto s : {nn::SharingStrategy::kShareAll, nn::SharingStrategy::kShareAllButLast,
                 nn::SharingStrategy::kShareAllButFirst, nn::SharingStrategy::kShareAllButFirstAndLast}) {
    auto mc = nn::make_multi_corpus_net(g, s, data.size(), 5);
    for (int it = 0; it < 3; ++it) {
      mc = nn::joint_iteration(mc, shards, cfg);
      check(mc.shared_layers_equal(), std::string("(a) shared layers differ under ") + nn::to_string(s));
    }
  }
  // (b) identical corpora, identical seeds
  {
    auto mc = nn::make_multi_corpus_net(g, nn::SharingStrategy::kShareAllButFirstAndLast, 2, 6);
    for (int it = 0; it < 5; ++it) {
      mc = nn::joint_iteration(mc, {shards[0], shards[0]}, cfg);
      check(mc.nets[0] == mc.nets[1], "(b) identical corpora diverged at iteration " + std::to_string(it + 1));
    }
  }
  // (c) finite differences through PNORM(G=10, p=2), IDENTITY and SOFTMAX
  double worst = 0.0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto net = lx::oracle::gradient_check_net(seed);
    nn::Rng rng(seed + 100);
    nn::Matrix x(8, 6);
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.normal();
    const auto gc = lx::oracle::finite_difference_check(net, x, {0, 1, 2, 0, 1, 2, 0, 1});
    worst = std::max(worst, gc.max_relative_error);
  }
  check(worst < 1e-4, "(c) gradient relative error " + fmt(worst));
  // (d) default seeded 3-corpus toy run
  nn::ExperimentConfig ec;
  ec.iterations = 20;
  const auto run = nn::run_experiment(ec);
  const double initial = run.metrics.front().mean_loss;
  int halved_at = -1;
  for (const auto& m : run.metrics) {
    if (m.mean_loss < 0.5 * initial) {
      halved_at = m.iteration;
      break;
    }
  }
  check(halved_at >= 0, "(d) loss " + fmt(initial) + " -> " + fmt(run.metrics.back().mean_loss) + " not halved");
  // (e) marginal priors
  nn::AffineLayer l;
  l.weight = nn::Matrix::Identity(2, 2) * 200.0;
  l.bias = nn::Vector::Zero(2);
  l.act = {nn::ActivationKind::kSoftmax};
  nn::Matrix frames(3, 2);
  frames << 1, 0, 1, 0, 0, 1;
  const nn::Vector pri = nn::estimate_priors_marginal(nn::LayeredNet({l}), frames);
  check(std::abs(pri(0) - 2.0 / 3.0) < 1e-12 && std::abs(pri(1) - 1.0 / 3.0) < 1e-12, "(e) priors of 3-frame fixture");
  for (std::size_t c = 0; c < data.size(); ++c) {
    const double s = nn::estimate_priors_marginal(run.net.nets[c], data[c].features).sum();
    check(std::abs(s - 1.0) <= 1e-9, "(e) priors of corpus " + std::to_string(c) + " sum to " + fmt(s));
  }
  return "max FD rel error " + fmt(worst) + "; loss " + fmt(initial) + " halved by iteration " +
         std::to_string(halved_at);
}

// ---------------------------------------------------------------------------

json cli_json(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lx::cli::run(args, out, err);
  std::string cmd;
  for (const auto& a : args) cmd += " " + a;
  check(code == 0, "lexharmony" + cmd + " exited " + std::to_string(code) + ": " + err.str());
  return json::parse(out.str());
}

std::string cli_parity() {
  using lx::testing::data_path;
  lx::testing::TempDir tmp;
  auto d = [](const std::string& n) { return data_path(n).string(); };
  int compared = 0;
  auto same = [&](const json& got, const json& want, const std::string& what) {
    check(got == want, what + " differs from the library call");
    ++compared;
  };

  const auto lex_a = lx::load_lexicon(data_path("a.lexicon")), lex_b = lx::load_lexicon(data_path("b.lexicon"));
  same(cli_json({"inspect", "inventory", d("a.lexicon")}), lx::cli::inventory_json(lex_a), "inspect inventory");
  same(cli_json({"inspect", "top", d("a.transcript"), "--n", "5"}),
       lx::cli::top_json(lx::word_frequencies(lx::load_transcript(data_path("a.transcript"))), 5), "inspect top");
  const double lib_overlap =
      lx::overlap(lx::headword_frequencies(lex_a), lx::headword_frequencies(lex_b), 10, true);
  same(cli_json({"overlap", "--n", "10", "--strip-vowels", d("a.lexicon"), d("b.lexicon")})["overlap"], lib_overlap,
       "overlap");
  same(cli_json({"inspect", "overlap", "--n", "10", "--strip-vowels", d("a.lexicon"), d("b.lexicon")})["overlap"],
       lib_overlap, "inspect overlap");

  // Session commands against the same transitions made in memory.
  const auto dir = (tmp / "s").string();
  std::vector<lx::CorpusSnapshot> corpora;
  for (const std::string n : {"a", "b"}) {
    corpora.push_back({n, lx::load_lexicon(data_path(n + ".lexicon")), lx::load_transcript(data_path(n + ".transcript"))});
  }
  lx::MiningParams p;
  p.n = 14;
  auto lib = lx::make_session(corpora, p);
  same(cli_json({"session", "init", dir, "--n", "14", "--no-phone", "--corpus",
                 "a=" + d("a.lexicon") + "," + d("a.transcript"), "--corpus",
                 "b=" + d("b.lexicon") + "," + d("b.transcript")}),
       [&] {
         auto q = lib;
         q.params.use_phone = false;
         lib = q;
         return lx::session_summary(q);
       }(),
       "session init");
  const json initial_summary = lx::session_summary(lib);
  lib = lx::run_iteration(std::move(lib));
  same(cli_json({"mine", dir}), lx::to_json(*lib.pending), "mine");
  const auto first = lib.pending->candidates.front().rule.id();
  same(cli_json({"review", "preview", dir, "--rules", first}), lx::preview_rules(lib, {first}), "review preview");
  lib = lx::commit_decisions(std::move(lib), lx::accept_recommended(*lib.pending));
  same(cli_json({"review", "decide", dir, "--accept-all"}), lx::session_summary(lib), "review decide");
  same(cli_json({"session", "status", dir}), lx::session_summary(lib), "session status");
  same(cli_json({"session", "history", dir})["history"][0], lx::to_json(lib.history[0]), "session history");
  same(cli_json({"session", "rollback", dir, "--to", "0"}), initial_summary, "session rollback");

  // apply
  const auto rules_path = (tmp / "rules.json").string();
  lx::save_ruleset(rules_path, lib.accepted);
  cli_json({"apply", "--rules", rules_path, "--lexicon", d("a.lexicon"), "--lexicon-out", (tmp / "a.lex").string()});
  check(lx::load_lexicon(tmp / "a.lex") == lx::apply_rules(lex_a, lib.accepted), "apply output differs");
  ++compared;

  // lm
  const auto arpa_a = (tmp / "a.arpa").string(), arpa_b = (tmp / "b.arpa").string();
  cli_json({"lm", "train", d("lm_a.transcript"), "--out", arpa_a});
  cli_json({"lm", "train", d("lm_b.transcript"), "--out", arpa_b});
  std::ostringstream arpa;
  lx::write_arpa(arpa, lx::train_ngram(lx::load_transcript(data_path("lm_a.transcript")), 3));
  check(lx::testing::read_file(arpa_a) == arpa.str(), "lm train ARPA differs");
  ++compared;
  const auto heldout = lx::load_transcript(data_path("lm_heldout.transcript"));
  const auto ma = lx::load_arpa(arpa_a), mb = lx::load_arpa(arpa_b);
  same(cli_json({"lm", "ppl", d("lm_heldout.transcript"), "--model", arpa_a})["perplexity"],
       lx::perplexity(ma, heldout), "lm ppl");
  same(cli_json({"lm", "mix", d("lm_heldout.transcript"), "--model", arpa_a, "--model", arpa_b}),
       lx::to_json(lx::fit_mixture({&ma, &mb}, heldout), {arpa_a, arpa_b}), "lm mix");

  // pronprobs
  lx::PronStatsOptions po;
  const auto pron_lex = lx::load_lexicon(data_path("pron.lexicon"));
  same(cli_json({"pronprobs", "--lexicon", d("pron.lexicon"), "--counts", d("pron_counts.tsv"), "--totals",
                 d("pron_totals.tsv")}),
       lx::cli::pron_table_json(lx::estimate_pron_stats(
           lx::load_alignment_counts(data_path("pron_counts.tsv"), data_path("pron_totals.tsv"), pron_lex), po)),
       "pronprobs");

  // train-demo
  const auto cfg = lx::nnet::experiment_config_from_json(lx::read_json_file(data_path("experiment.json")));
  const auto run = lx::nnet::run_experiment(cfg);
  const auto demo = cli_json({"train-demo", "--config", d("experiment.json")});
  same(demo["final_loss"], run.metrics.back().mean_loss, "train-demo final loss");
  same(demo["shared_checksum"], run.metrics.back().shared_checksum, "train-demo checksum");
  return std::to_string(compared) + " outputs identical";
}

}  // namespace

int main() {
  std::cout << "lexharmony acceptance suite" << std::endl;
  criterion("synthetic-rule-recovery", 30.0, synthetic_rule_recovery);
  criterion("edit-distance-oracle", 10.0, edit_distance_oracle);
  criterion("rule-application-algebra", 10.0, rule_algebra);
  criterion("lm-mixture", 20.0, lm_mixture);
  criterion("pronunciation-statistics", 5.0, pron_statistics);
  criterion("joint-trainer", 120.0, joint_trainer);
  criterion("cli-parity", 60.0, cli_parity);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures;
}
