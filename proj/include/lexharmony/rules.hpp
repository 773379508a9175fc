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
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lexharmony/corpus.hpp"
#include "lexharmony/error.hpp"
#include "lexharmony/unicode.hpp"

namespace lexharmony {

enum class RuleKind { kDel, kSub };
enum class Channel { kChar, kPhone, kBoth };
enum class RuleStatus { kCandidate, kAccepted, kRejected };

inline const char* to_string(RuleKind k) { return k == RuleKind::kDel ? "DEL" : "SUB"; }

inline const char* to_string(Channel c) {
  switch (c) {
    case Channel::kChar: return "CHAR";
    case Channel::kPhone: return "PHONE";
    case Channel::kBoth: return "BOTH";
  }
  return "?";
}

inline const char* to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::kCandidate: return "CANDIDATE";
    case RuleStatus::kAccepted: return "ACCEPTED";
    case RuleStatus::kRejected: return "REJECTED";
  }
  return "?";
}

inline RuleKind parse_rule_kind(const std::string& s) {
  if (s == "DEL") return RuleKind::kDel;
  if (s == "SUB") return RuleKind::kSub;
  throw ValidationError("unknown rule kind '" + s + "'");
}

inline Channel parse_channel(const std::string& s) {
  if (s == "CHAR") return Channel::kChar;
  if (s == "PHONE") return Channel::kPhone;
  if (s == "BOTH") return Channel::kBoth;
  throw ValidationError("unknown channel '" + s + "'");
}

inline RuleStatus parse_rule_status(const std::string& s) {
  if (s == "CANDIDATE") return RuleStatus::kCandidate;
  if (s == "ACCEPTED") return RuleStatus::kAccepted;
  if (s == "REJECTED") return RuleStatus::kRejected;
  throw ValidationError("unknown rule status '" + s + "'");
}

inline Channel merge_channels(Channel a, Channel b) { return a == b ? a : Channel::kBoth; }

/// A directed single-codepoint rewrite: delete source, or substitute it with target.
struct EditRule {
  RuleKind kind = RuleKind::kDel;
  char32_t source = 0;
  std::optional<char32_t> target;
  std::size_t support = 0;
  Channel channel = Channel::kChar;
  std::vector<std::pair<Word, Word>> examples;
  RuleStatus status = RuleStatus::kCandidate;
  std::string comment;

  static EditRule del(char32_t source) {
    EditRule r;
    r.source = source;
    return r;
  }
  static EditRule sub(char32_t source, char32_t target) {
    EditRule r;
    r.kind = RuleKind::kSub;
    r.source = source;
    r.target = target;
    return r;
  }

  /// Stable identifier, e.g. "SUB:U+0643:U+06A9" or "DEL:U+0650".
  std::string id() const {
    std::string s = std::string(to_string(kind)) + ":" + codepoint_label(source);
    if (target) s += ":" + codepoint_label(*target);
    return s;
  }

  void validate() const {
    if (kind == RuleKind::kSub) {
      if (!target) throw ValidationError("SUB rule " + codepoint_label(source) + " lacks a target");
      if (*target == source) throw ValidationError("SUB rule maps " + codepoint_label(source) + " to itself");
    } else if (target) {
      throw ValidationError("DEL rule " + codepoint_label(source) + " must not have a target");
    }
  }

  /// Same rewrite, ignoring provenance.
  bool same_rewrite(const EditRule& o) const {
    return kind == o.kind && source == o.source && target == o.target;
  }
};

/// Ordered, validated collection of rules: sources are unique and the
/// source -> target relation has no cycle.
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<EditRule> rules, int version = 0)
      : rules_(std::move(rules)), version_(version) {
    validate(rules_);
  }

  const std::vector<EditRule>& rules() const noexcept { return rules_; }
  int version() const noexcept { return version_; }
  void set_version(int v) { version_ = v; }
  bool empty() const noexcept { return rules_.empty(); }
  std::size_t size() const noexcept { return rules_.size(); }

  const EditRule* find_source(char32_t cp) const {
    for (const auto& r : rules_) {
      if (r.source == cp) return &r;
    }
    return nullptr;
  }

  /// Returns a cycle (as a codepoint chain) if the relation has one.
  static std::optional<std::vector<char32_t>> find_cycle(const std::vector<EditRule>& rules) {
    std::map<char32_t, char32_t> edge;
    for (const auto& r : rules) {
      if (r.target) edge[r.source] = *r.target;
    }
    for (const auto& [start, first] : edge) {
      std::vector<char32_t> path{start};
      std::set<char32_t> seen{start};
      char32_t cur = first;
      while (true) {
        if (cur == start) {
          path.push_back(start);
          return path;
        }
        if (seen.count(cur)) break;  // cycle not through start; found from its own start
        seen.insert(cur);
        path.push_back(cur);
        auto it = edge.find(cur);
        if (it == edge.end()) break;
        cur = it->second;
      }
    }
    return std::nullopt;
  }

  static std::string describe_cycle(const std::vector<char32_t>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += " -> ";
      s += codepoint_label(cycle[i]);
    }
    return s;
  }

  static void validate(const std::vector<EditRule>& rules) {
    std::set<char32_t> sources;
    for (const auto& r : rules) {
      r.validate();
      if (!sources.insert(r.source).second) {
        throw ValidationError("two rules share source " + codepoint_label(r.source));
      }
    }
    if (auto cycle = find_cycle(rules)) {
      throw ValidationError("rule set is cyclic: " + describe_cycle(*cycle));
    }
  }

  /// True when no rule target is also a rule source, i.e. one application
  /// already reaches the fixpoint.
  bool is_closed() const {
    for (const auto& r : rules_) {
      if (r.target && find_source(*r.target)) return false;
    }
    return true;
  }

  /// Resolves chains (a->b, b->c becomes a->c, b->c; a->b, DEL b becomes DEL a).
  RuleSet closed() const {
    std::vector<EditRule> out = rules_;
    for (auto& r : out) {
      while (r.target) {
        const EditRule* next = find_source(*r.target);
        if (!next) break;
        if (next->kind == RuleKind::kDel) {
          r.kind = RuleKind::kDel;
          r.target.reset();
        } else {
          r.target = next->target;
        }
      }
    }
    return RuleSet(std::move(out), version_);
  }

 private:
  std::vector<EditRule> rules_;
  int version_ = 0;
};

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json codepoint_json(char32_t cp) {
  std::string glyph;
  append_utf8(glyph, cp);
  return {{"codepoint", codepoint_label(cp)}, {"char", glyph}, {"name", std::string(unicode_name(cp))}};
}

inline nlohmann::json word_json(const Word& w) {
  nlohmann::json cps = nlohmann::json::array();
  for (char32_t cp : w.codepoints()) cps.push_back(codepoint_label(cp));
  return {{"text", w.utf8()}, {"codepoints", cps}};
}

inline Word word_from_json(const nlohmann::json& j) {
  if (j.contains("codepoints")) {
    std::u32string cps;
    for (const auto& c : j.at("codepoints")) cps.push_back(parse_codepoint_label(c.get<std::string>()));
    return Word(std::move(cps));
  }
  return Word::from_utf8(j.at("text").get<std::string>());
}

inline nlohmann::json to_json(const EditRule& r) {
  nlohmann::json j;
  j["id"] = r.id();
  j["kind"] = to_string(r.kind);
  j["source"] = codepoint_label(r.source);
  j["source_char"] = codepoint_json(r.source)["char"];
  j["source_name"] = std::string(unicode_name(r.source));
  if (r.target) {
    j["target"] = codepoint_label(*r.target);
    j["target_char"] = codepoint_json(*r.target)["char"];
    j["target_name"] = std::string(unicode_name(*r.target));
  }
  j["support"] = r.support;
  j["channel"] = to_string(r.channel);
  j["status"] = to_string(r.status);
  if (!r.comment.empty()) j["comment"] = r.comment;
  if (!r.examples.empty()) {
    auto& ex = j["examples"] = nlohmann::json::array();
    for (const auto& [a, b] : r.examples) ex.push_back({{"a", word_json(a)}, {"b", word_json(b)}});
  }
  return j;
}

inline EditRule rule_from_json(const nlohmann::json& j) {
  try {
    EditRule r;
    r.kind = parse_rule_kind(j.at("kind").get<std::string>());
    r.source = parse_codepoint_label(j.at("source").get<std::string>());
    if (j.contains("target") && !j.at("target").is_null()) {
      r.target = parse_codepoint_label(j.at("target").get<std::string>());
    }
    r.support = j.value("support", std::size_t{0});
    r.channel = parse_channel(j.value("channel", std::string("CHAR")));
    r.status = parse_rule_status(j.value("status", std::string("ACCEPTED")));
    r.comment = j.value("comment", std::string());
    if (j.contains("examples")) {
      for (const auto& e : j.at("examples")) {
        r.examples.emplace_back(word_from_json(e.at("a")), word_from_json(e.at("b")));
      }
    }
    r.validate();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed rule JSON: ") + e.what());
  }
}

inline nlohmann::json to_json(const RuleSet& rs) {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : rs.rules()) rules.push_back(to_json(r));
  return {{"format", "lexharmony-ruleset"}, {"version", rs.version()}, {"rules", rules}};
}

inline RuleSet ruleset_from_json(const nlohmann::json& j) {
  std::vector<EditRule> rules;
  try {
    for (const auto& r : j.at("rules")) rules.push_back(rule_from_json(r));
    return RuleSet(std::move(rules), j.value("version", 0));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed rule set JSON: ") + e.what());
  }
}

inline nlohmann::json read_json_file(const std::filesystem::path& path) {
  auto in = detail::open_in(path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  auto out = detail::open_out(path);
  out << j.dump(2) << '\n';
}

inline RuleSet load_ruleset(const std::filesystem::path& path) {
  return ruleset_from_json(read_json_file(path));
}

inline void save_ruleset(const std::filesystem::path& path, const RuleSet& rs) {
  write_json_file(path, to_json(rs));
}

}  // namespace lexharmony
