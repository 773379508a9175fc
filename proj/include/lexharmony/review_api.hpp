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

// Request handling for the expert review loop, independent of any HTTP
// library. Every request reloads the session from its directory, so the
// server and the headless CLI always observe the same committed state.
// Mutations are serialized; reads may run concurrently.

#include <filesystem>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lexharmony/miner.hpp"
#include "lexharmony/session.hpp"

namespace lexharmony {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

inline ApiResponse error_response(int status, const std::string& code, const std::string& message) {
  return {status, {{"error", {{"code", code}, {"message", message}}}}};
}

/// Hypothetical overlap after accepting the listed pending candidates.
inline nlohmann::json preview_rules(const HarmonizationSession& s, const std::vector<std::string>& ids) {
  if (!s.pending) throw StateError("no pending mining report");
  std::vector<EditRule> rules;
  for (const auto& id : ids) {
    const auto* c = s.pending->find(id);
    if (!c) throw ValidationError("unknown rule id '" + id + "'");
    rules.push_back(c->rule);
  }
  const RuleSet set(std::move(rules));
  const auto proj = project_gain(set, s.corpora.at(0).frequencies(s.headword_fallback),
                                 s.corpora.at(1).frequencies(s.headword_fallback), s.params.n);
  return {{"rules", ids}, {"overlap_before", proj.before}, {"overlap_after", proj.after}, {"gain", proj.gain()}};
}

inline std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class ReviewService {
 public:
  explicit ReviewService(std::filesystem::path dir) : store_(std::move(dir)) {}

  ApiResponse handle(const std::string& method, const std::string& path,
                     const std::map<std::string, std::string>& query = {}, const std::string& body = {}) {
    try {
      if (method == "GET" && path == "/api/session") return get_session();
      if (method == "GET" && path == "/api/candidates") return get_candidates();
      if (method == "GET" && path == "/api/preview") {
        auto it = query.find("rules");
        return preview(it == query.end() ? std::vector<std::string>{} : split_ids(it->second));
      }
      if (method == "POST" && path == "/api/decisions") return post_decisions(body);
      if (method == "POST" && path == "/api/iterate") return post_iterate();
      return error_response(404, "not_found", method + " " + path);
    } catch (const StateError& e) {
      return error_response(409, e.code(), e.what());
    } catch (const ValidationError& e) {
      return error_response(400, e.code(), e.what());
    } catch (const ParseError& e) {
      return error_response(400, e.code(), e.what());
    } catch (const Error& e) {
      return error_response(500, e.code(), e.what());
    } catch (const std::exception& e) {
      return error_response(500, "internal_error", e.what());
    }
  }

  ApiResponse get_session() {
    std::shared_lock lock(mu_);
    return {200, session_summary(store_.load())};
  }

  ApiResponse get_candidates() {
    std::shared_lock lock(mu_);
    const auto s = store_.load();
    if (!s.pending) throw StateError("no pending mining report; POST /api/iterate first");
    return {200, to_json(*s.pending)};
  }

  ApiResponse preview(const std::vector<std::string>& ids) {
    std::shared_lock lock(mu_);
    return {200, preview_rules(store_.load(), ids)};
  }

  ApiResponse post_decisions(const std::string& body) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("request body is not JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("decisions")) throw ValidationError("body must be {\"decisions\": {...}}");
    const auto decisions = decisions_from_json(j);
    std::unique_lock lock(mu_);
    auto next = commit_decisions(store_.load(), decisions);
    store_.save(next);
    return {200, session_summary(next)};
  }

  ApiResponse post_iterate() {
    std::unique_lock lock(mu_);
    auto next = run_iteration(store_.load());
    store_.save(next);
    return {200, to_json(*next.pending)};
  }

 private:
  SessionStore store_;
  std::shared_mutex mu_;
};

}  // namespace lexharmony
