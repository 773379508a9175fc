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

// Command-line front end. Every command is a thin wrapper over one library
// call and prints JSON on stdout (indented with --pretty). Exit status: 0 ok,
// 1 domain error, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexharmony/joint_trainer.hpp"
#include "lexharmony/lexharmony.hpp"
#ifndef LEXHARMONY_NO_REVIEW_SERVER
#include "lexharmony/review_server.hpp"
#endif

namespace lexharmony::cli {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Library-level command bodies, shared with the tests for parity checks.

inline json inventory_json(const Lexicon& lex) {
  json rows = json::array();
  for (const auto& [cp, stat] : codepoint_inventory(lex)) {
    auto j = codepoint_json(cp);
    j["count"] = stat.count;
    rows.push_back(std::move(j));
  }
  return {{"codepoints", rows}};
}

inline json top_json(const FrequencyTable& freq, std::size_t n) {
  const auto top = top_n(freq, n);
  json words = json::array();
  for (const auto& rw : top.words) words.push_back({{"word", rw.word.utf8()}, {"count", rw.count}});
  return {{"n", n}, {"words", words}, {"mass_fraction", top.mass_fraction}, {"total", freq.total()}};
}

inline FrequencyTable corpus_frequencies(const Lexicon& lex, const std::optional<fs::path>& transcript,
                                         bool headword_fallback) {
  if (!transcript) return headword_frequencies(lex);
  auto f = word_frequencies(load_transcript(*transcript));
  return headword_fallback ? with_headword_fallback(std::move(f), lex) : f;
}

inline json pron_table_json(const PronProbTable& t) {
  json words = json::array();
  for (const auto& [w, p] : t.words) {
    words.push_back({{"word", w.utf8()},
                     {"probs", p.prons},
                     {"sil_after", p.sil_after},
                     {"sil_before_correction", p.sil_before_correction}});
  }
  return {{"convention", t.convention == PronNormalization::kMax ? "MAX" : "SUM"}, {"words", words}};
}

struct CorpusSpec {
  std::string name;
  fs::path lexicon;
  std::optional<fs::path> transcript;
};

/// NAME=LEXICON[,TRANSCRIPT]
inline CorpusSpec parse_corpus_spec(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw ValidationError("corpus spec must be NAME=LEXICON[,TRANSCRIPT]");
  CorpusSpec c;
  c.name = s.substr(0, eq);
  const auto rest = s.substr(eq + 1);
  const auto comma = rest.find(',');
  c.lexicon = rest.substr(0, comma);
  if (comma != std::string::npos) c.transcript = rest.substr(comma + 1);
  return c;
}

inline CorpusSnapshot load_snapshot(const CorpusSpec& spec) {
  CorpusSnapshot s;
  s.name = spec.name;
  s.lexicon = load_lexicon(spec.lexicon);
  s.lexicon.set_name(spec.name);
  if (spec.transcript) {
    s.transcript = load_transcript(*spec.transcript);
    s.transcript->set_name(spec.name);
  }
  return s;
}

inline std::vector<double> parse_weights(const std::string& csv) {
  std::vector<double> out;
  for (const auto& item : split_ids(csv)) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ValidationError("bad weight '" + item + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lexharmony: harmonize lexicons and transcripts written with inconsistent codepoints"};
  app.name("lexharmony");
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indented, human-readable JSON");

  // The selected command stores its action here; it runs after parsing.
  std::function<json()> action;
  auto emit = [&](const json& j) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; };

  // inspect ---------------------------------------------------------------
  auto* inspect = app.add_subcommand("inspect", "Codepoint inventory, top-N lists and overlap");
  inspect->require_subcommand(1);

  std::string inv_lex;
  auto* inv = inspect->add_subcommand("inventory", "Codepoint counts with Unicode names");
  inv->add_option("lexicon", inv_lex, "Lexicon file")->required()->check(CLI::ExistingFile);
  inv->callback([&] { action = [&] { return inventory_json(load_lexicon(inv_lex)); }; });

  std::string top_file;
  std::size_t top_count = 1000;
  bool top_from_lexicon = false, top_tsv = false;
  auto* top = inspect->add_subcommand("top", "Most frequent words of a transcript (or lexicon)");
  top->add_option("file", top_file, "Transcript file (or lexicon with --from-lexicon)")
      ->required()
      ->check(CLI::ExistingFile);
  top->add_option("--n", top_count, "List length")->check(CLI::PositiveNumber);
  top->add_flag("--from-lexicon", top_from_lexicon, "Count lexicon headwords instead of transcript tokens");
  top->add_flag("--tsv", top_tsv, "Print the full word<TAB>count frequency report instead of JSON");
  top->callback([&] {
    action = [&]() -> json {
      const auto freq = top_from_lexicon ? headword_frequencies(load_lexicon(top_file))
                                         : word_frequencies(load_transcript(top_file));
      if (top_tsv) {
        write_frequency_report(out, freq);
        return nullptr;
      }
      return top_json(freq, top_count);
    };
  });

  std::string ov_a, ov_b, ov_ta, ov_tb;
  std::size_t ov_n = 1000;
  bool ov_strip = false, ov_fallback = false;
  auto overlap_action = [&]() -> json {
    const auto fa = corpus_frequencies(load_lexicon(ov_a), ov_ta.empty() ? std::nullopt : std::optional<fs::path>(ov_ta),
                                       ov_fallback);
    const auto fb = corpus_frequencies(load_lexicon(ov_b), ov_tb.empty() ? std::nullopt : std::optional<fs::path>(ov_tb),
                                       ov_fallback);
    return {{"overlap", overlap(fa, fb, ov_n, ov_strip)}, {"n", ov_n}, {"strip_vowels", ov_strip}};
  };
  auto add_overlap_options = [&](CLI::App* cmd) {
    cmd->add_option("lexicon_a", ov_a, "First lexicon")->required()->check(CLI::ExistingFile);
    cmd->add_option("lexicon_b", ov_b, "Second lexicon")->required()->check(CLI::ExistingFile);
    cmd->add_option("--n", ov_n, "Top-N list length")->check(CLI::PositiveNumber);
    cmd->add_flag("--strip-vowels", ov_strip, "Delete vowel marks before comparing");
    cmd->add_option("--transcript-a", ov_ta, "Transcript giving word frequencies for the first lexicon");
    cmd->add_option("--transcript-b", ov_tb, "Transcript giving word frequencies for the second lexicon");
    cmd->add_flag("--headword-fallback", ov_fallback, "Let unseen headwords fill the top-N tail");
    cmd->callback([&] { action = overlap_action; });
  };
  add_overlap_options(inspect->add_subcommand("overlap", "Top-N overlap of two lexicons"));
  add_overlap_options(app.add_subcommand("overlap", "Top-N overlap of two lexicons"));

  // session ---------------------------------------------------------------
  auto* session = app.add_subcommand("session", "Create and inspect harmonization sessions");
  session->require_subcommand(1);

  std::string s_dir, s_g2p;
  std::vector<std::string> s_corpora;
  MiningParams s_params;
  bool s_strip = false, s_fallback = false, s_no_phone = false;
  auto* s_init = session->add_subcommand("init", "Create a session directory");
  s_init->add_option("dir", s_dir, "Session directory")->required();
  s_init->add_option("--corpus", s_corpora, "NAME=LEXICON[,TRANSCRIPT]; the first two are mined")
      ->required()
      ->expected(2, -1);
  s_init->add_option("--g2p", s_g2p, "G2P table enabling the phone channel")->check(CLI::ExistingFile);
  s_init->add_option("--n", s_params.n, "Top-N list length")->check(CLI::PositiveNumber);
  s_init->add_option("--max-cost", s_params.max_cost, "Largest edit distance of a word pair")
      ->check(CLI::PositiveNumber);
  s_init->add_option("--min-gain", s_params.min_gain, "Stop selecting rules below this overlap gain");
  s_init->add_flag("--include-insertions", s_params.include_insertions, "Also propose DEL rules from insertions");
  s_init->add_flag("--rank-by-support", s_params.rank_by_support, "Rank candidates by support first");
  s_init->add_flag("--no-phone", s_no_phone, "Disable the phone channel");
  s_init->add_flag("--strip-vowels", s_strip, "Seed the accepted rules with the vowel-mark deletions");
  s_init->add_flag("--headword-fallback", s_fallback, "Let unseen headwords fill top-N tails");
  s_init->callback([&] {
    action = [&]() -> json {
      std::vector<CorpusSnapshot> corpora;
      for (const auto& c : s_corpora) corpora.push_back(load_snapshot(parse_corpus_spec(c)));
      std::optional<G2PTable> g2p;
      if (!s_g2p.empty()) g2p = load_g2p_table(s_g2p);
      s_params.use_phone = !s_no_phone;
      auto s = make_session(std::move(corpora), s_params, std::move(g2p), s_fallback);
      if (s_strip) s = seed_rules(std::move(s), vowel_mark_rules());
      SessionStore(s_dir).init(s);
      return session_summary(s);
    };
  });

  auto* s_status = session->add_subcommand("status", "Current iteration, overlap and pending state");
  s_status->add_option("dir", s_dir, "Session directory")->required();
  s_status->callback([&] { action = [&] { return session_summary(SessionStore(s_dir).load()); }; });

  auto* s_history = session->add_subcommand("history", "Per-iteration decisions and overlaps");
  s_history->add_option("dir", s_dir, "Session directory")->required();
  s_history->callback([&] {
    action = [&]() -> json {
      json h = json::array();
      for (const auto& r : SessionStore(s_dir).load().history) h.push_back(to_json(r));
      return {{"history", h}};
    };
  });

  int rollback_to = 0;
  auto* s_rollback = session->add_subcommand("rollback", "Point the session back at an earlier snapshot");
  s_rollback->add_option("dir", s_dir, "Session directory")->required();
  s_rollback->add_option("--to", rollback_to, "Snapshot number")->required();
  s_rollback->callback([&] { action = [&] { return session_summary(SessionStore(s_dir).rollback(rollback_to)); }; });

  // mine --------------------------------------------------------------------
  std::string m_dir;
  auto* mine = app.add_subcommand("mine", "Run one mining iteration; the report becomes pending");
  mine->add_option("dir", m_dir, "Session directory")->required();
  mine->callback([&] {
    action = [&]() -> json {
      SessionStore store(m_dir);
      auto s = run_iteration(store.load());
      store.save(s);
      return to_json(*s.pending);
    };
  });

  // review ------------------------------------------------------------------
  auto* review = app.add_subcommand("review", "Expert review of the pending report");
  review->require_subcommand(1);

  std::string r_dir, r_decisions;
  bool r_accept_all = false, r_reject_all = false;
  auto* decide = review->add_subcommand("decide", "Commit decisions without the UI");
  decide->add_option("dir", r_dir, "Session directory")->required();
  auto* o_acc = decide->add_flag("--accept-all", r_accept_all, "Accept every recommended rule, reject the rest");
  auto* o_rej = decide->add_flag("--reject-all", r_reject_all, "Reject every candidate");
  auto* o_file = decide->add_option("--decisions", r_decisions, "JSON file {\"decisions\": {rule-id: status}}")
                     ->check(CLI::ExistingFile);
  o_acc->excludes(o_rej)->excludes(o_file);
  o_rej->excludes(o_file);
  decide->callback([&] {
    if (!r_accept_all && !r_reject_all && r_decisions.empty()) {
      throw CLI::ValidationError("review decide", "one of --accept-all, --reject-all, --decisions is required");
    }
    action = [&]() -> json {
      SessionStore store(r_dir);
      auto s = store.load();
      if (!s.pending) throw StateError("no pending mining report");
      const Decisions d = r_accept_all   ? accept_recommended(*s.pending)
                          : r_reject_all ? reject_all(*s.pending)
                                         : decisions_from_json(read_json_file(r_decisions));
      s = commit_decisions(std::move(s), d);
      store.save(s);
      return session_summary(s);
    };
  });

  std::string r_rules;
  auto* preview = review->add_subcommand("preview", "Projected overlap after accepting the listed rules");
  preview->add_option("dir", r_dir, "Session directory")->required();
  preview->add_option("--rules", r_rules, "Comma-separated rule ids")->required();
  preview->callback([&] { action = [&] { return preview_rules(SessionStore(r_dir).load(), split_ids(r_rules)); }; });

#ifndef LEXHARMONY_NO_REVIEW_SERVER
  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = review->add_subcommand("serve", "Serve the review HTTP API");
  serve->add_option("dir", r_dir, "Session directory")->required();
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port");
  serve->callback([&] {
    action = [&]() -> json {
      if (!SessionStore(r_dir).exists()) throw StateError("no session in " + r_dir);
      ReviewService service(r_dir);
      httplib::Server server;
      install_review_routes(server, service);
      err << "serving " << r_dir << " on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) throw IoError("cannot listen on " + host + ":" + std::to_string(port));
      return nullptr;
    };
  });
#endif

  // apply -------------------------------------------------------------------
  std::string a_rules, a_lex, a_lex_out, a_tr, a_tr_out;
  auto* apply = app.add_subcommand("apply", "Apply a rule set to lexicon and/or transcript files");
  apply->add_option("--rules", a_rules, "Rule set JSON")->required()->check(CLI::ExistingFile);
  apply->add_option("--lexicon", a_lex, "Input lexicon")->check(CLI::ExistingFile);
  apply->add_option("--lexicon-out", a_lex_out, "Output lexicon");
  apply->add_option("--transcript", a_tr, "Input transcript")->check(CLI::ExistingFile);
  apply->add_option("--transcript-out", a_tr_out, "Output transcript");
  apply->callback([&] {
    if (a_lex.empty() && a_tr.empty()) throw CLI::ValidationError("apply", "give --lexicon and/or --transcript");
    if (!a_lex.empty() && a_lex_out.empty()) throw CLI::ValidationError("apply", "--lexicon needs --lexicon-out");
    if (!a_tr.empty() && a_tr_out.empty()) throw CLI::ValidationError("apply", "--transcript needs --transcript-out");
    action = [&]() -> json {
      const auto rules = load_ruleset(a_rules);
      json result = {{"rules", rules.size()}};
      if (!a_lex.empty()) {
        ApplyStats st;
        save_lexicon(a_lex_out, apply_rules(load_lexicon(a_lex), rules, &st));
        result["lexicon"] = {{"changed", st.words_changed}, {"merged", st.words_merged}, {"dropped", st.words_dropped}};
      }
      if (!a_tr.empty()) {
        ApplyStats st;
        save_transcript(a_tr_out, apply_rules(load_transcript(a_tr), rules, &st));
        result["transcript"] = {{"changed", st.words_changed}, {"dropped", st.words_dropped}};
      }
      return result;
    };
  });

  // lm ------------------------------------------------------------------------
  auto* lm = app.add_subcommand("lm", "N-gram models, perplexity and interpolation weights");
  lm->require_subcommand(1);

  std::string lm_text, lm_out, lm_weights, lm_report;
  std::vector<std::string> lm_models;
  int lm_order = 3;
  double lm_tol = 1e-10;
  int lm_max_iter = 1000;
  auto* lm_train = lm->add_subcommand("train", "Train a Witten-Bell model (ARPA + JSON sidecar)");
  lm_train->add_option("transcript", lm_text, "Training transcript")->required()->check(CLI::ExistingFile);
  lm_train->add_option("--order", lm_order, "N-gram order")->check(CLI::PositiveNumber);
  lm_train->add_option("--out", lm_out, "Output ARPA path")->required();
  lm_train->callback([&] {
    action = [&]() -> json {
      const auto model = train_ngram(load_transcript(lm_text), lm_order);
      save_arpa(lm_out, model);
      const auto side = model_sidecar(model);
      write_json_file(lm_out + ".json", side);
      return {{"model", lm_out},
              {"order", model.order()},
              {"vocabulary_size", model.vocabulary().size()},
              {"training_tokens", model.training_tokens()}};
    };
  });

  auto* lm_ppl = lm->add_subcommand("ppl", "Perplexity of a text under a model or a weighted mixture");
  lm_ppl->add_option("text", lm_text, "Evaluation transcript")->required()->check(CLI::ExistingFile);
  lm_ppl->add_option("--model", lm_models, "ARPA model (repeat for a mixture)")->required()->check(CLI::ExistingFile);
  lm_ppl->add_option("--weights", lm_weights, "Comma-separated mixture weights");
  lm_ppl->callback([&] {
    action = [&]() -> json {
      const auto text = load_transcript(lm_text);
      std::vector<NGramModel> models;
      for (const auto& m : lm_models) models.push_back(load_arpa(m));
      if (models.size() == 1 && lm_weights.empty()) return {{"perplexity", perplexity(models.front(), text)}};
      std::vector<const NGramModel*> ptrs;
      for (const auto& m : models) ptrs.push_back(&m);
      const MixtureWeights w{lm_weights.empty() ? std::vector<double>(models.size(), 1.0 / models.size())
                                                : parse_weights(lm_weights)};
      return {{"perplexity", perplexity(ptrs, w, text)}, {"weights", w.weights}};
    };
  });

  auto* lm_mix = lm->add_subcommand("mix", "EM interpolation weights on held-out text");
  lm_mix->add_option("heldout", lm_text, "Held-out transcript")->required()->check(CLI::ExistingFile);
  lm_mix->add_option("--model", lm_models, "ARPA model (at least two)")->required()->check(CLI::ExistingFile);
  lm_mix->add_option("--tol", lm_tol, "Stop when the log-likelihood gain is below this");
  lm_mix->add_option("--max-iter", lm_max_iter, "Maximum EM updates");
  lm_mix->add_option("--out", lm_report, "Also write the report JSON here");
  lm_mix->callback([&] {
    action = [&]() -> json {
      std::vector<NGramModel> models;
      for (const auto& m : lm_models) models.push_back(load_arpa(m));
      std::vector<const NGramModel*> ptrs;
      for (const auto& m : models) ptrs.push_back(&m);
      const auto fit = fit_mixture(ptrs, load_transcript(lm_text), lm_tol, lm_max_iter);
      auto j = to_json(fit, lm_models);
      if (!lm_report.empty()) write_json_file(lm_report, j);
      return j;
    };
  });

  // pronprobs ---------------------------------------------------------------
  std::string p_lex, p_counts, p_totals, p_out, p_conv = "MAX";
  PronStatsOptions p_opts;
  auto* pron = app.add_subcommand("pronprobs", "Pronunciation and silence probabilities from alignment counts");
  pron->add_option("--lexicon", p_lex, "Lexicon")->required()->check(CLI::ExistingFile);
  pron->add_option("--counts", p_counts, "word<TAB>pron-id<TAB>count")->required()->check(CLI::ExistingFile);
  pron->add_option("--totals", p_totals, "word<TAB>total<TAB>sil_after<TAB>sil_before")
      ->required()
      ->check(CLI::ExistingFile);
  pron->add_option("--lambda", p_opts.lambda, "Pronunciation smoothing")->check(CLI::NonNegativeNumber);
  pron->add_option("--lambda-sil", p_opts.lambda_sil, "Silence smoothing")->check(CLI::PositiveNumber);
  pron->add_option("--convention", p_conv, "MAX or SUM")->check(CLI::IsMember({"MAX", "SUM"}));
  pron->add_option("--out", p_out, "Write the lexicon with probabilities here");
  pron->callback([&] {
    action = [&]() -> json {
      p_opts.convention = p_conv == "SUM" ? PronNormalization::kSum : PronNormalization::kMax;
      const auto lex = load_lexicon(p_lex);
      const auto table = estimate_pron_stats(load_alignment_counts(p_counts, p_totals, lex), p_opts);
      if (!p_out.empty()) save_lexicon(p_out, to_lexicon(table, lex));
      return pron_table_json(table);
    };
  });

  // train-demo ------------------------------------------------------------------
  std::string t_config, t_metrics, t_checkpoint;
  auto* demo = app.add_subcommand("train-demo", "Joint multi-corpus training on the bundled toy task");
  demo->add_option("--config", t_config, "Experiment config JSON (defaults otherwise)")->check(CLI::ExistingFile);
  demo->add_option("--metrics", t_metrics, "JSON-lines metrics output");
  demo->add_option("--checkpoint", t_checkpoint, "Final checkpoint output");
  demo->callback([&] {
    action = [&]() -> json {
      const auto cfg = nnet::experiment_config_from_json(t_config.empty() ? json::object() : read_json_file(t_config));
      std::ofstream metrics;
      if (!t_metrics.empty()) metrics = detail::open_out(t_metrics);
      const auto result = nnet::run_experiment(cfg, [&](const nnet::IterationMetrics& m) {
        if (metrics.is_open()) metrics << nnet::to_json(m).dump() << '\n';
      });
      if (!t_checkpoint.empty()) nnet::save_checkpoint(t_checkpoint, result.net, cfg.iterations);
      return {{"config", nnet::to_json(cfg)},
              {"initial_loss", result.metrics.front().mean_loss},
              {"final_loss", result.metrics.back().mean_loss},
              {"iterations", cfg.iterations},
              {"shared_layers_equal", result.net.shared_layers_equal()},
              {"shared_checksum", result.metrics.back().shared_checksum}};
    };
  });

  // -------------------------------------------------------------------------
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", {{"code", "usage_error"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  }
  try {
    const json result = action();
    if (!result.is_null()) emit(result);
    return 0;
  } catch (const Error& e) {
    err << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << '\n';
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << json{{"error", {{"code", "io_error"}, {"message", e.what()}}}}.dump() << '\n';
    return 1;
  }
}

}  // namespace lexharmony::cli
