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

// The iterative harmonization loop: mine -> expert review -> apply -> repeat.
// A session lives in a directory; every commit writes a new numbered
// snapshot, and session.json points at the current one.
//
//   session.json
//   g2p.tsv                        (optional)
//   rulesets/v<k>.json
//   corpora/<name>/v<k>.lexicon
//   corpora/<name>/v<k>.transcript (when the corpus has transcripts)
//   reports/iter<k>.json

#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lexharmony/corpus.hpp"
#include "lexharmony/g2p.hpp"
#include "lexharmony/miner.hpp"
#include "lexharmony/normalizer.hpp"
#include "lexharmony/rules.hpp"

namespace lexharmony {

struct CorpusSnapshot {
  std::string name;
  Lexicon lexicon;
  std::optional<TranscriptCorpus> transcript;

  /// Transcript counts when available, else one count per headword. With
  /// headword_fallback, headwords missing from the transcripts join with count 0.
  FrequencyTable frequencies(bool headword_fallback = false) const {
    if (!transcript) return headword_frequencies(lexicon);
    auto f = word_frequencies(*transcript);
    return headword_fallback ? with_headword_fallback(std::move(f), lexicon) : f;
  }

  friend bool operator==(const CorpusSnapshot& a, const CorpusSnapshot& b) {
    return a.name == b.name && a.lexicon == b.lexicon && a.transcript == b.transcript;
  }
};

struct IterationRecord {
  int iteration = 0;
  std::size_t candidates_shown = 0;
  std::vector<std::string> accepted;
  std::vector<std::string> rejected;
  double overlap_before = 0.0;
  double overlap_after = 0.0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

using Decisions = std::map<std::string, RuleStatus>;

struct HarmonizationSession {
  int iteration = 0;
  std::vector<CorpusSnapshot> corpora;  // the first two are the mined pair
  RuleSet accepted;
  std::optional<MiningReport> pending;
  std::vector<IterationRecord> history;
  MiningParams params;
  bool headword_fallback = false;
  std::optional<G2PTable> g2p;

  double current_overlap() const {
    return overlap(corpora.at(0).frequencies(headword_fallback),
                   corpora.at(1).frequencies(headword_fallback), params.n);
  }
};

inline HarmonizationSession make_session(std::vector<CorpusSnapshot> corpora, MiningParams params,
                                         std::optional<G2PTable> g2p = std::nullopt,
                                         bool headword_fallback = false) {
  if (corpora.size() < 2) throw ValidationError("a session needs at least two corpora");
  std::set<std::string> names;
  for (const auto& c : corpora) {
    if (c.name.empty() || c.name.find('/') != std::string::npos || !names.insert(c.name).second) {
      throw ValidationError("corpus names must be unique, non-empty and contain no '/'");
    }
  }
  HarmonizationSession s;
  s.corpora = std::move(corpora);
  s.params = params;
  s.g2p = std::move(g2p);
  s.headword_fallback = headword_fallback;
  return s;
}

/// Applies a rule set to every corpus snapshot and folds it into the
/// accepted set without touching the history (used for seeding, e.g. vowel
/// stripping before the first iteration).
inline HarmonizationSession seed_rules(HarmonizationSession s, const RuleSet& rules) {
  s.accepted = compose_rules(s.accepted, rules);
  for (auto& c : s.corpora) {
    c.lexicon = apply_rules(c.lexicon, rules);
    if (c.transcript) c.transcript = apply_rules(*c.transcript, rules);
  }
  return s;
}

/// Mines the current corpus pair and stores the report as pending. The
/// corpora are not modified.
inline HarmonizationSession run_iteration(HarmonizationSession s,
                                          const std::optional<MiningParams>& params = std::nullopt) {
  if (s.pending) throw StateError("a mining report is pending review; commit decisions first");
  if (params) s.params = *params;
  s.pending = mine_report(s.corpora.at(0).frequencies(s.headword_fallback),
                          s.corpora.at(1).frequencies(s.headword_fallback), s.params,
                          s.g2p ? &*s.g2p : nullptr);
  return s;
}

/// Accepted rules of a decision set, in the pending report's ranking order.
inline RuleSet accepted_rules(const MiningReport& report, const Decisions& decisions) {
  for (const auto& [id, status] : decisions) {
    if (!report.find(id)) throw ValidationError("unknown rule id '" + id + "'");
    if (status == RuleStatus::kCandidate) {
      throw ValidationError("decision for '" + id + "' must be ACCEPTED or REJECTED");
    }
  }
  std::vector<EditRule> rules;
  for (const auto& c : report.candidates) {
    auto it = decisions.find(c.rule.id());
    if (it != decisions.end() && it->second == RuleStatus::kAccepted) {
      EditRule r = c.rule;
      r.status = RuleStatus::kAccepted;
      rules.push_back(std::move(r));
    }
  }
  return RuleSet(std::move(rules));
}

/// Applies the expert's decisions. Takes the session by value: on any error
/// the caller's session is untouched.
inline HarmonizationSession commit_decisions(HarmonizationSession s, const Decisions& decisions) {
  if (!s.pending) throw StateError("no pending mining report");
  const RuleSet newer = accepted_rules(*s.pending, decisions);
  RuleSet composed = compose_rules(s.accepted, newer);

  IterationRecord rec;
  rec.iteration = s.iteration;
  rec.candidates_shown = s.pending->candidates.size();
  for (const auto& c : s.pending->candidates) {
    auto it = decisions.find(c.rule.id());
    if (it == decisions.end()) continue;
    (it->second == RuleStatus::kAccepted ? rec.accepted : rec.rejected).push_back(c.rule.id());
  }
  rec.overlap_before = s.current_overlap();

  for (auto& c : s.corpora) {
    c.lexicon = apply_rules(c.lexicon, newer);
    if (c.transcript) c.transcript = apply_rules(*c.transcript, newer);
  }
  rec.overlap_after = s.current_overlap();

  s.iteration += 1;
  composed.set_version(s.iteration);
  s.accepted = std::move(composed);
  s.history.push_back(std::move(rec));
  s.pending.reset();
  return s;
}

/// Decision set accepting every recommended rule and rejecting the rest.
inline Decisions accept_recommended(const MiningReport& report) {
  Decisions d;
  for (const auto& c : report.candidates) d[c.rule.id()] = RuleStatus::kRejected;
  for (const auto& id : report.recommended) d[id] = RuleStatus::kAccepted;
  return d;
}

inline Decisions reject_all(const MiningReport& report) {
  Decisions d;
  for (const auto& c : report.candidates) d[c.rule.id()] = RuleStatus::kRejected;
  return d;
}

inline Decisions decisions_from_json(const nlohmann::json& j) {
  const nlohmann::json& body = j.contains("decisions") ? j.at("decisions") : j;
  if (!body.is_object()) throw ValidationError("decisions must be an object of rule-id -> status");
  Decisions d;
  for (const auto& [id, status] : body.items()) {
    if (!status.is_string()) throw ValidationError("decision for '" + id + "' must be a string");
    d[id] = parse_rule_status(status.get<std::string>());
  }
  return d;
}

inline nlohmann::json to_json(const IterationRecord& r) {
  return {{"iteration", r.iteration},
          {"candidates_shown", r.candidates_shown},
          {"accepted", r.accepted},
          {"rejected", r.rejected},
          {"overlap_before", r.overlap_before},
          {"overlap_after", r.overlap_after}};
}

inline IterationRecord iteration_record_from_json(const nlohmann::json& j) {
  IterationRecord r;
  r.iteration = j.at("iteration").get<int>();
  r.candidates_shown = j.at("candidates_shown").get<std::size_t>();
  r.accepted = j.at("accepted").get<std::vector<std::string>>();
  r.rejected = j.at("rejected").get<std::vector<std::string>>();
  r.overlap_before = j.at("overlap_before").get<double>();
  r.overlap_after = j.at("overlap_after").get<double>();
  return r;
}

/// Summary served by the CLI "session status" command and GET /api/session.
inline nlohmann::json session_summary(const HarmonizationSession& s) {
  nlohmann::json traj = nlohmann::json::array();
  if (s.history.empty()) {
    traj.push_back(s.current_overlap());
  } else {
    traj.push_back(s.history.front().overlap_before);
    for (const auto& h : s.history) traj.push_back(h.overlap_after);
  }
  nlohmann::json corpora = nlohmann::json::array();
  for (const auto& c : s.corpora) {
    corpora.push_back({{"name", c.name},
                       {"words", c.lexicon.num_words()},
                       {"utterances", c.transcript ? c.transcript->size() : 0}});
  }
  nlohmann::json accepted_ids = nlohmann::json::array();
  for (const auto& r : s.accepted.rules()) accepted_ids.push_back(r.id());
  return {{"iteration", s.iteration},
          {"overlap", s.current_overlap()},
          {"overlap_trajectory", traj},
          {"accepted_rule_count", s.accepted.size()},
          {"accepted_rules", accepted_ids},
          {"pending", s.pending.has_value()},
          {"pending_candidates", s.pending ? s.pending->candidates.size() : 0},
          {"n", s.params.n},
          {"corpora", corpora}};
}

// ---------------------------------------------------------------------------
// Persistence

class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }
  bool exists() const { return std::filesystem::exists(dir_ / "session.json"); }

  std::filesystem::path lexicon_path(const std::string& corpus, int k) const {
    return dir_ / "corpora" / corpus / ("v" + std::to_string(k) + ".lexicon");
  }
  std::filesystem::path transcript_path(const std::string& corpus, int k) const {
    return dir_ / "corpora" / corpus / ("v" + std::to_string(k) + ".transcript");
  }
  std::filesystem::path ruleset_path(int k) const {
    return dir_ / "rulesets" / ("v" + std::to_string(k) + ".json");
  }
  std::filesystem::path report_path(int k) const {
    return dir_ / "reports" / ("iter" + std::to_string(k) + ".json");
  }

  /// Creates a new session directory; refuses to overwrite an existing one.
  void init(const HarmonizationSession& s) const {
    if (exists()) throw StateError("session already exists in " + dir_.string());
    std::filesystem::create_directories(dir_);
    if (s.g2p) {
      auto out = detail::open_out(dir_ / "g2p.tsv");
      for (const auto& r : s.g2p->rules()) {
        out << encode_utf8(r.graphemes) << '\t';
        for (std::size_t i = 0; i < r.phones.size(); ++i) out << (i ? " " : "") << r.phones[i];
        out << '\n';
      }
    }
    write_snapshot(s);
    write_state(s);
  }

  /// Persists s after an in-memory transition from the stored state.
  void save(const HarmonizationSession& s) const {
    write_snapshot(s);
    if (s.pending) write_json_file(report_path(s.iteration), to_json(*s.pending));
    write_state(s);
  }

  HarmonizationSession load() const {
    if (!exists()) throw StateError("no session in " + dir_.string());
    const auto j = read_json_file(dir_ / "session.json");
    HarmonizationSession s;
    try {
      s.iteration = j.at("iteration").get<int>();
      s.params = mining_params_from_json(j.at("params"));
      s.headword_fallback = j.value("headword_fallback", false);
      for (const auto& h : j.at("history")) s.history.push_back(iteration_record_from_json(h));
      for (const auto& c : j.at("corpora")) load_corpus(s, c.at("name").get<std::string>(),
                                                        c.at("has_transcript").get<bool>());
      if (j.value("pending", false)) {
        s.pending = mining_report_from_json(read_json_file(report_path(s.iteration)));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("malformed session.json: " + std::string(e.what()));
    }
    s.accepted = load_ruleset(ruleset_path(s.iteration));
    if (std::filesystem::exists(dir_ / "g2p.tsv")) s.g2p = load_g2p_table(dir_ / "g2p.tsv");
    return s;
  }

  /// Points the session back at snapshot k; later history is discarded.
  HarmonizationSession rollback(int k) const {
    auto s = load();
    if (k < 0 || k > s.iteration) {
      throw ValidationError("cannot roll back to v" + std::to_string(k) + " (current v" +
                            std::to_string(s.iteration) + ")");
    }
    HarmonizationSession r;
    r.iteration = k;
    r.params = s.params;
    r.headword_fallback = s.headword_fallback;
    r.g2p = s.g2p;
    r.history.assign(s.history.begin(), s.history.begin() + k);
    for (const auto& c : s.corpora) load_corpus(r, c.name, c.transcript.has_value());
    r.accepted = load_ruleset(ruleset_path(k));
    write_state(r);
    return r;
  }

 private:
  void load_corpus(HarmonizationSession& s, const std::string& name, bool has_transcript) const {
    CorpusSnapshot c;
    c.name = name;
    c.lexicon = load_lexicon(lexicon_path(name, s.iteration));
    c.lexicon.set_name(name);
    if (has_transcript) {
      c.transcript = load_transcript(transcript_path(name, s.iteration));
      c.transcript->set_name(name);
    }
    s.corpora.push_back(std::move(c));
  }

  void write_snapshot(const HarmonizationSession& s) const {
    for (const auto& c : s.corpora) {
      save_lexicon(lexicon_path(c.name, s.iteration), c.lexicon);
      if (c.transcript) save_transcript(transcript_path(c.name, s.iteration), *c.transcript);
    }
    save_ruleset(ruleset_path(s.iteration), s.accepted);
  }

  void write_state(const HarmonizationSession& s) const {
    nlohmann::json corpora = nlohmann::json::array();
    for (const auto& c : s.corpora) {
      corpora.push_back({{"name", c.name}, {"has_transcript", c.transcript.has_value()}});
    }
    nlohmann::json history = nlohmann::json::array();
    for (const auto& h : s.history) history.push_back(to_json(h));
    nlohmann::json j = {{"format", "lexharmony-session"},
                        {"iteration", s.iteration},
                        {"corpora", corpora},
                        {"params", to_json(s.params)},
                        {"headword_fallback", s.headword_fallback},
                        {"pending", s.pending.has_value()},
                        {"history", history}};
    // session.json is the commit point: write aside, then rename over.
    const auto tmp = dir_ / "session.json.tmp";
    write_json_file(tmp, j);
    std::filesystem::rename(tmp, dir_ / "session.json");
  }

  std::filesystem::path dir_;
};

}  // namespace lexharmony
