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
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lexharmony/error.hpp"
#include "lexharmony/unicode.hpp"

namespace lexharmony {

/// A written word, identified by its exact codepoint sequence. Two words that
/// render identically but use different codepoints are different words.
class Word {
 public:
  Word() = default;

  explicit Word(std::u32string codepoints) : cps_(std::move(codepoints)) {
    if (cps_.empty()) throw ValidationError("word must not be empty");
    for (char32_t cp : cps_) {
      if (is_whitespace(cp)) {
        throw ValidationError("word contains whitespace codepoint " + codepoint_label(cp));
      }
    }
  }

  static Word from_utf8(std::string_view text) { return Word(decode_utf8(text)); }

  const std::u32string& codepoints() const noexcept { return cps_; }
  std::size_t size() const noexcept { return cps_.size(); }
  std::string utf8() const { return encode_utf8(cps_); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.cps_ <=> b.cps_; }

 private:
  std::u32string cps_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::u32string>{}(w.codepoints());
  }
};

struct Pronunciation {
  std::vector<std::string> phones;
  std::optional<double> prob;

  /// Identity for the (word, pronunciation) uniqueness rule: phones only.
  friend bool operator==(const Pronunciation& a, const Pronunciation& b) {
    return a.phones == b.phones;
  }
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Adds a pronunciation; returns false if the (word, phones) pair already exists.
  bool add(const Word& word, Pronunciation pron) {
    if (pron.phones.empty()) {
      throw ValidationError("empty pronunciation for word '" + word.utf8() + "'");
    }
    if (pron.prob && (!(*pron.prob > 0.0) || *pron.prob > 1.0)) {
      throw ValidationError("pronunciation probability out of (0, 1] for '" + word.utf8() + "'");
    }
    auto& prons = entries_[word];
    if (std::find(prons.begin(), prons.end(), pron) != prons.end()) return false;
    prons.push_back(std::move(pron));
    return true;
  }

  const std::map<Word, std::vector<Pronunciation>>& entries() const noexcept { return entries_; }
  std::size_t num_words() const noexcept { return entries_.size(); }
  bool contains(const Word& w) const { return entries_.count(w) != 0; }
  bool empty() const noexcept { return entries_.empty(); }

  const std::vector<Pronunciation>* find(const Word& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (auto ia = a.entries_.begin(), ib = b.entries_.begin(); ia != a.entries_.end();
         ++ia, ++ib) {
      if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
      for (std::size_t k = 0; k < ia->second.size(); ++k) {
        if (ia->second[k].phones != ib->second[k].phones ||
            ia->second[k].prob != ib->second[k].prob) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  std::string name_;
  std::map<Word, std::vector<Pronunciation>> entries_;
};

/// Same words with the same pronunciation sets; pronunciation order (which
/// depends on merge order after rule application) is ignored.
inline bool equivalent(const Lexicon& a, const Lexicon& b) {
  if (a.num_words() != b.num_words()) return false;
  for (auto ia = a.entries().begin(), ib = b.entries().begin(); ia != a.entries().end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
    for (const auto& p : ia->second) {
      auto hit = std::find(ib->second.begin(), ib->second.end(), p);
      if (hit == ib->second.end() || hit->prob != p.prob) return false;
    }
  }
  return true;
}

struct Utterance {
  std::string id;
  std::vector<Word> tokens;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

class TranscriptCorpus {
 public:
  TranscriptCorpus() = default;
  explicit TranscriptCorpus(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  void add(std::string id, std::vector<Word> tokens) {
    if (!ids_.insert(id).second) throw ValidationError("duplicate utterance id '" + id + "'");
    utts_.push_back({std::move(id), std::move(tokens)});
  }

  const std::vector<Utterance>& utterances() const noexcept { return utts_; }
  std::size_t size() const noexcept { return utts_.size(); }
  bool empty() const noexcept { return utts_.empty(); }

  std::size_t num_tokens() const {
    std::size_t n = 0;
    for (const auto& u : utts_) n += u.tokens.size();
    return n;
  }

  friend bool operator==(const TranscriptCorpus& a, const TranscriptCorpus& b) {
    return a.utts_ == b.utts_;
  }

 private:
  std::string name_;
  std::vector<Utterance> utts_;
  std::unordered_set<std::string> ids_;
};

class FrequencyTable {
 public:
  void add(const Word& w, std::uint64_t count = 1) {
    counts_[w] += count;
    total_ += count;
  }

  std::uint64_t count(const Word& w) const {
    auto it = counts_.find(w);
    return it == counts_.end() ? 0 : it->second;
  }

  const std::map<Word, std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::map<Word, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

struct RankedWord {
  Word word;
  std::uint64_t count = 0;
};

struct TopN {
  std::vector<RankedWord> words;
  /// Fraction of the table's total count covered by the listed words.
  double mass_fraction = 0.0;
};

inline FrequencyTable word_frequencies(const TranscriptCorpus& corpus) {
  FrequencyTable t;
  for (const auto& u : corpus.utterances()) {
    for (const auto& w : u.tokens) t.add(w);
  }
  return t;
}

/// One count per headword; used when a corpus ships without transcripts.
inline FrequencyTable headword_frequencies(const Lexicon& lex) {
  FrequencyTable t;
  for (const auto& [w, prons] : lex.entries()) t.add(w);
  return t;
}

/// Adds lexicon headwords that never occur in the transcripts with count 0,
/// so they can fill the tail of a top-N list.
inline FrequencyTable with_headword_fallback(FrequencyTable freq, const Lexicon& lex) {
  for (const auto& [w, prons] : lex.entries()) {
    if (freq.counts().count(w) == 0) freq.add(w, 0);
  }
  return freq;
}

/// Descending count, ties broken by codepoint order.
inline std::vector<RankedWord> ranked_words(const FrequencyTable& freq) {
  std::vector<RankedWord> out;
  out.reserve(freq.size());
  for (const auto& [w, c] : freq.counts()) out.push_back({w, c});
  std::stable_sort(out.begin(), out.end(), [](const RankedWord& a, const RankedWord& b) {
    return a.count > b.count;
  });
  return out;
}

inline TopN top_n(const FrequencyTable& freq, std::size_t n) {
  if (n == 0) throw ValidationError("top_n requires n >= 1");
  TopN result;
  result.words = ranked_words(freq);
  if (result.words.size() > n) result.words.resize(n);
  std::uint64_t covered = 0;
  for (const auto& rw : result.words) covered += rw.count;
  result.mass_fraction =
      freq.total() == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(freq.total());
  return result;
}

struct CodepointStat {
  std::uint64_t count = 0;
  std::string name;
};

inline std::map<char32_t, CodepointStat> codepoint_inventory(const Lexicon& lex) {
  std::map<char32_t, CodepointStat> inv;
  for (const auto& [w, prons] : lex.entries()) {
    for (char32_t cp : w.codepoints()) ++inv[cp].count;
  }
  for (auto& [cp, stat] : inv) stat.name = std::string(unicode_name(cp));
  return inv;
}

// ---------------------------------------------------------------------------
// File IO

struct LoadStats {
  std::size_t lines = 0;
  std::size_t duplicates_collapsed = 0;
};

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline double parse_double(std::string_view s, std::size_t line) {
  std::string tmp(s);
  char* end = nullptr;
  double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
    throw ParseError("bad number '" + tmp + "'", line);
  }
  return v;
}

inline std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

inline Word parse_word(std::string_view text, std::size_t line) {
  std::u32string cps;
  try {
    cps = decode_utf8(text);
  } catch (const EncodingError& e) {
    throw EncodingError("line " + std::to_string(line) + ": " + e.what());
  }
  try {
    return Word(std::move(cps));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace detail

inline Lexicon read_lexicon(std::istream& in, std::string name = {}, LoadStats* stats = nullptr) {
  Lexicon lex(std::move(name));
  LoadStats local;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    ++local.lines;
    auto fields = detail::split(line, '\t');
    if (fields.size() < 2) throw ParseError("missing tab separator", lineno);
    if (fields.size() > 3) throw ParseError("too many fields", lineno);
    Word w = detail::parse_word(fields[0], lineno);
    decode_utf8(fields[1]);  // validates encoding of the phone field
    Pronunciation pron{detail::split_ws(fields[1]), std::nullopt};
    if (pron.phones.empty()) throw ParseError("empty pronunciation", lineno);
    if (fields.size() == 3) pron.prob = detail::parse_double(fields[2], lineno);
    try {
      if (!lex.add(w, std::move(pron))) ++local.duplicates_collapsed;
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (stats) *stats = local;
  return lex;
}

inline Lexicon load_lexicon(const std::filesystem::path& path, LoadStats* stats = nullptr) {
  auto in = detail::open_in(path);
  return read_lexicon(in, path.stem().string(), stats);
}

inline std::string format_probability(double p) {
  std::ostringstream os;
  os.precision(17);
  os << p;
  return os.str();
}

inline void write_lexicon(std::ostream& out, const Lexicon& lex) {
  for (const auto& [w, prons] : lex.entries()) {
    for (const auto& p : prons) {
      out << w.utf8() << '\t';
      for (std::size_t i = 0; i < p.phones.size(); ++i) {
        if (i) out << ' ';
        out << p.phones[i];
      }
      if (p.prob) out << '\t' << format_probability(*p.prob);
      out << '\n';
    }
  }
}

inline void save_lexicon(const std::filesystem::path& path, const Lexicon& lex) {
  auto out = detail::open_out(path);
  write_lexicon(out, lex);
}

inline TranscriptCorpus read_transcript(std::istream& in, std::string name = {}) {
  TranscriptCorpus corpus(std::move(name));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("missing tab separator", lineno);
    std::string id = line.substr(0, tab);
    if (id.empty()) throw ParseError("empty utterance id", lineno);
    std::vector<Word> tokens;
    std::string_view rest(line);
    rest.remove_prefix(tab + 1);
    if (!rest.empty()) {
      for (const auto& tok : detail::split(rest, ' ')) {
        if (tok.empty()) throw ParseError("tokens must be separated by single spaces", lineno);
        tokens.push_back(detail::parse_word(tok, lineno));
      }
    }
    try {
      corpus.add(std::move(id), std::move(tokens));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return corpus;
}

inline TranscriptCorpus load_transcript(const std::filesystem::path& path) {
  auto in = detail::open_in(path);
  return read_transcript(in, path.stem().string());
}

inline void write_transcript(std::ostream& out, const TranscriptCorpus& corpus) {
  for (const auto& u : corpus.utterances()) {
    out << u.id << '\t';
    for (std::size_t i = 0; i < u.tokens.size(); ++i) {
      if (i) out << ' ';
      out << u.tokens[i].utf8();
    }
    out << '\n';
  }
}

inline void save_transcript(const std::filesystem::path& path, const TranscriptCorpus& corpus) {
  auto out = detail::open_out(path);
  write_transcript(out, corpus);
}

/// TSV "word<TAB>count", in rank order.
inline void write_frequency_report(std::ostream& out, const FrequencyTable& freq) {
  for (const auto& rw : ranked_words(freq)) out << rw.word.utf8() << '\t' << rw.count << '\n';
}

}  // namespace lexharmony
