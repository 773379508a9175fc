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
#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lexharmony/corpus.hpp"
#include "lexharmony/error.hpp"
#include "lexharmony/unicode.hpp"

namespace lexharmony {

using PhoneSeq = std::vector<std::string>;

/// Grapheme-to-phoneme rules applied by greedy longest match, left to right.
/// A rule may map to an empty phone sequence (silent letters, vowel marks).
class G2PTable {
 public:
  struct Rule {
    std::u32string graphemes;
    PhoneSeq phones;
  };

  G2PTable() = default;
  explicit G2PTable(std::string name) : name_(std::move(name)) {}

  void add_rule(std::u32string graphemes, PhoneSeq phones) {
    if (graphemes.empty()) throw ValidationError("g2p rule with empty grapheme sequence");
    if (index_.count(graphemes)) {
      throw ValidationError("duplicate g2p rule for '" + encode_utf8(graphemes) + "'");
    }
    index_.emplace(graphemes, rules_.size());
    max_key_ = std::max(max_key_, graphemes.size());
    rules_.push_back({std::move(graphemes), std::move(phones)});
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  PhoneSeq convert(const std::u32string& word) const {
    PhoneSeq out;
    std::size_t pos = 0;
    while (pos < word.size()) {
      const std::size_t longest = std::min(max_key_, word.size() - pos);
      const Rule* hit = nullptr;
      for (std::size_t len = longest; len >= 1; --len) {
        auto it = index_.find(word.substr(pos, len));
        if (it != index_.end()) {
          hit = &rules_[it->second];
          break;
        }
      }
      if (!hit) {
        throw ConversionError("no g2p rule covers " + codepoint_label(word[pos]) + " (" +
                                  std::string(unicode_name(word[pos])) + ") at offset " +
                                  std::to_string(pos) + " in '" + encode_utf8(word) + "'",
                              word[pos], pos);
      }
      out.insert(out.end(), hit->phones.begin(), hit->phones.end());
      pos += hit->graphemes.size();
    }
    return out;
  }

  PhoneSeq convert(const Word& word) const { return convert(word.codepoints()); }

  /// Codepoints that start at least one rule key.
  std::set<char32_t> leading_codepoints() const {
    std::set<char32_t> out;
    for (const auto& r : rules_) out.insert(r.graphemes.front());
    return out;
  }

 private:
  std::string name_;
  std::vector<Rule> rules_;
  std::map<std::u32string, std::size_t> index_;
  std::size_t max_key_ = 0;
};

inline PhoneSeq g2p_convert(const Word& word, const G2PTable& table) { return table.convert(word); }

/// Words of the lexicon that the table cannot convert.
inline std::vector<Word> unconvertible_words(const Lexicon& lex, const G2PTable& table) {
  std::vector<Word> out;
  for (const auto& [w, prons] : lex.entries()) {
    try {
      table.convert(w);
    } catch (const ConversionError&) {
      out.push_back(w);
    }
  }
  return out;
}

inline G2PTable read_g2p_table(std::istream& in, std::string name = {}) {
  G2PTable table(std::move(name));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("missing tab separator", lineno);
    std::u32string graphemes;
    try {
      graphemes = decode_utf8(std::string_view(line).substr(0, tab));
    } catch (const EncodingError& e) {
      throw EncodingError("line " + std::to_string(lineno) + ": " + e.what());
    }
    try {
      table.add_rule(std::move(graphemes), detail::split_ws(std::string_view(line).substr(tab + 1)));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return table;
}

inline G2PTable load_g2p_table(const std::filesystem::path& path) {
  auto in = detail::open_in(path);
  return read_g2p_table(in, path.stem().string());
}

}  // namespace lexharmony
