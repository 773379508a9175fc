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

#include "lexharmony/corpus.hpp"
#include "support/testutil.hpp"

namespace lexharmony {
namespace {

using testing::W;

TEST(Unicode, DecodesAndEncodesArabicScript) {
  const std::u32string cps = decode_utf8("کار");
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[0], 0x06A9u);
  EXPECT_EQ(cps[1], 0x0627u);
  EXPECT_EQ(cps[2], 0x0631u);
  EXPECT_EQ(encode_utf8(cps), "کار");
}

TEST(Unicode, RejectsMalformedUtf8) {
  EXPECT_THROW(decode_utf8("\xC3"), EncodingError);          // truncated
  EXPECT_THROW(decode_utf8("\xC0\xAF"), EncodingError);      // overlong
  EXPECT_THROW(decode_utf8("\xED\xA0\x80"), EncodingError);  // surrogate
  EXPECT_THROW(decode_utf8("\xF4\x90\x80\x80"), EncodingError);
  EXPECT_THROW(decode_utf8("\x80"), EncodingError);
}

TEST(Unicode, RoundTripsRandomScalars) {
  std::mt19937 rng(4);
  for (int t = 0; t < 2000; ++t) {
    char32_t cp;
    do {
      cp = static_cast<char32_t>(rng() % 0x110000);
    } while (cp >= 0xD800 && cp <= 0xDFFF);
    const std::u32string s(1, cp);
    ASSERT_EQ(decode_utf8(encode_utf8(s)), s);
  }
}

TEST(Unicode, LabelsAndNames) {
  EXPECT_EQ(codepoint_label(0x06CC), "U+06CC");
  EXPECT_EQ(codepoint_label(0x41), "U+0041");
  EXPECT_EQ(parse_codepoint_label("U+0643"), 0x0643u);
  EXPECT_THROW(parse_codepoint_label("0643"), ParseError);
  EXPECT_THROW(parse_codepoint_label("U+D800"), ParseError);
  EXPECT_EQ(unicode_name(0x06CC), "ARABIC LETTER FARSI YEH");
  EXPECT_EQ(unicode_name(0x0649), "ARABIC LETTER ALEF MAKSURA");
  EXPECT_EQ(unicode_name(0x0643), "ARABIC LETTER KAF");
  EXPECT_EQ(unicode_name(0x06A9), "ARABIC LETTER KEHEH");
  EXPECT_EQ(unicode_name(0x0650), "ARABIC KASRA");
  EXPECT_EQ(unicode_name(0x200C), "ZERO WIDTH NON-JOINER");
  EXPECT_EQ(unicode_name(0x0378), "UNKNOWN");  // unassigned
}

TEST(Word, RejectsEmptyAndWhitespace) {
  EXPECT_THROW(Word(std::u32string{}), ValidationError);
  EXPECT_THROW(W("a b"), ValidationError);
  EXPECT_THROW(W(U"a b"), ValidationError);
  EXPECT_NO_THROW(W(U"a‌b"));  // ZWNJ is a letter-level codepoint, not a space
}

TEST(Word, NoImplicitNormalization) {
  // U+00E9 versus e + U+0301 render the same but are different words.
  const Word composed = W(U"é");
  const Word decomposed = W(U"é");
  EXPECT_NE(composed, decomposed);
  EXPECT_EQ(decomposed.size(), 2u);
  EXPECT_NE(W(U"ی"), W(U"ى"));
}

TEST(Lexicon, LoadsVariantsOfOneWord) {
  std::istringstream in("کار\tk aa r\nکار\tk A r\n");
  const Lexicon lex = read_lexicon(in);
  ASSERT_EQ(lex.num_words(), 1u);
  EXPECT_EQ(lex.find(W("کار"))->size(), 2u);
}

TEST(Lexicon, EmptyFileGivesEmptyLexicon) {
  std::istringstream in("");
  EXPECT_TRUE(read_lexicon(in).empty());
}

TEST(Lexicon, MissingTabIsParseErrorWithLine) {
  std::istringstream in("ab\ta b\nکار\n");
  try {
    read_lexicon(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.code(), "parse_error");
  }
}

TEST(Lexicon, InvalidUtf8IsEncodingError) {
  std::istringstream in("a\xFF\tb\n");
  EXPECT_THROW(read_lexicon(in), EncodingError);
}

TEST(Lexicon, DuplicateLinesCollapseWithCount) {
  std::istringstream in("ab\ta b\nab\ta b\nab\ta  b\n");
  LoadStats stats;
  const Lexicon lex = read_lexicon(in, "x", &stats);
  EXPECT_EQ(lex.find(W("ab"))->size(), 1u);
  EXPECT_EQ(stats.duplicates_collapsed, 2u);
  EXPECT_EQ(stats.lines, 3u);
}

TEST(Lexicon, ProbabilityFieldValidated) {
  std::istringstream ok("ab\ta b\t0.25\n");
  EXPECT_DOUBLE_EQ(*read_lexicon(ok).find(W("ab"))->front().prob, 0.25);
  std::istringstream zero("ab\ta b\t0\n");
  EXPECT_THROW(read_lexicon(zero), ParseError);
  std::istringstream junk("ab\ta b\tx\n");
  EXPECT_THROW(read_lexicon(junk), ParseError);
  std::istringstream empty_pron("ab\t \n");
  EXPECT_THROW(read_lexicon(empty_pron), ParseError);
}

TEST(Lexicon, FixtureLoads) {
  LoadStats stats;
  const Lexicon lex = load_lexicon(testing::data_path("a.lexicon"), &stats);
  EXPECT_EQ(lex.name(), "a");
  EXPECT_EQ(lex.num_words(), 14u);
  EXPECT_EQ(stats.duplicates_collapsed, 1u);
}

Lexicon random_lexicon(std::mt19937& rng) {
  const std::u32string alphabet = U"ابكکیىِ‌ab";
  Lexicon lex("r");
  const int n = static_cast<int>(rng() % 20);
  for (int i = 0; i < n; ++i) {
    std::u32string w;
    const int len = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k) w.push_back(alphabet[rng() % alphabet.size()]);
    Pronunciation p{{"p" + std::to_string(rng() % 4), "q"}, std::nullopt};
    if (rng() % 2) p.prob = (1.0 + static_cast<double>(rng() % 1000)) / 1000.0 / 3.0;
    lex.add(Word(w), p);
  }
  return lex;
}

TEST(Lexicon, SaveLoadRoundTripIsCodepointExact) {
  testing::TempDir tmp;
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    const Lexicon lex = random_lexicon(rng);
    save_lexicon(tmp / "x.lexicon", lex);
    ASSERT_EQ(load_lexicon(tmp / "x.lexicon"), lex);
  }
}

TEST(Transcript, ParsesAndRoundTrips) {
  std::istringstream in("u1\tکار کار ab\r\nu2\t\n");
  const TranscriptCorpus c = read_transcript(in, "t");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.utterances()[0].tokens.size(), 3u);
  EXPECT_TRUE(c.utterances()[1].tokens.empty());
  std::ostringstream out;
  write_transcript(out, c);
  std::istringstream back(out.str());
  EXPECT_EQ(read_transcript(back), c);
}

TEST(Transcript, Errors) {
  std::istringstream dup("u1\ta\nu1\tb\n");
  EXPECT_THROW(read_transcript(dup), ParseError);
  std::istringstream double_space("u1\ta  b\n");
  EXPECT_THROW(read_transcript(double_space), ParseError);
  std::istringstream no_tab("u1 a b\n");
  EXPECT_THROW(read_transcript(no_tab), ParseError);
  TranscriptCorpus c;
  c.add("x", {});
  EXPECT_THROW(c.add("x", {}), ValidationError);
}

TEST(Frequencies, CountsEveryToken) {
  TranscriptCorpus c;
  c.add("u1", {W("w1"), W("w2"), W("w1")});
  const auto f = word_frequencies(c);
  EXPECT_EQ(f.count(W("w1")), 2u);
  EXPECT_EQ(f.count(W("w2")), 1u);
  EXPECT_EQ(f.total(), 3u);
  EXPECT_EQ(word_frequencies(TranscriptCorpus{}).total(), 0u);
  EXPECT_TRUE(word_frequencies(TranscriptCorpus{}).empty());
}

TEST(Frequencies, TiesBreakLexicographically) {
  TranscriptCorpus c;
  std::vector<Word> toks;
  for (const char* w : {"j", "c", "h", "a", "f", "i", "b", "e", "g", "d"}) toks.push_back(W(w));
  c.add("u", toks);
  const auto top = top_n(word_frequencies(c), 5);
  std::vector<std::string> got;
  for (const auto& rw : top.words) got.push_back(rw.word.utf8());
  EXPECT_EQ(got, (std::vector<std::string>{"a", "b", "c", "d", "e"}));
}

FrequencyTable table(std::initializer_list<std::pair<const char*, std::uint64_t>> xs) {
  FrequencyTable f;
  for (auto [w, c] : xs) f.add(W(w), c);
  return f;
}

TEST(TopN, DescendingWithMass) {
  const auto top = top_n(table({{"a", 5}, {"b", 3}, {"c", 1}}), 2);
  ASSERT_EQ(top.words.size(), 2u);
  EXPECT_EQ(top.words[0].word, W("a"));
  EXPECT_EQ(top.words[1].word, W("b"));
  EXPECT_DOUBLE_EQ(top.mass_fraction, 8.0 / 9.0);
}

TEST(TopN, LargerThanVocabularyAndTies) {
  EXPECT_EQ(top_n(table({{"a", 5}, {"b", 3}}), 10).words.size(), 2u);
  const auto tie = top_n(table({{"c", 2}, {"b", 2}, {"a", 2}}), 2);
  EXPECT_EQ(tie.words[0].word, W("a"));
  EXPECT_EQ(tie.words[1].word, W("b"));
  EXPECT_THROW(top_n(table({{"a", 1}}), 0), ValidationError);
  EXPECT_DOUBLE_EQ(top_n(FrequencyTable{}, 3).mass_fraction, 0.0);
}

TEST(TopN, PrefixStable) {
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    FrequencyTable f;
    for (int i = 0; i < 30; ++i) f.add(Word(std::u32string(1 + rng() % 3, U'a' + rng() % 4)), rng() % 5);
    for (std::size_t k = 1; k < 20; ++k) {
      const auto small = top_n(f, k).words, big = top_n(f, k + 1).words;
      ASSERT_LE(small.size(), big.size());
      for (std::size_t i = 0; i < small.size(); ++i) ASSERT_EQ(small[i].word, big[i].word);
    }
  }
}

TEST(Frequencies, HeadwordFallback) {
  Lexicon lex;
  lex.add(W("a"), {{"x"}, std::nullopt});
  lex.add(W("z"), {{"x"}, std::nullopt});
  const auto f = with_headword_fallback(table({{"a", 3}, {"b", 1}}), lex);
  EXPECT_EQ(f.count(W("a")), 3u);
  EXPECT_EQ(f.count(W("z")), 0u);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.total(), 4u);
  const auto top = top_n(f, 3);
  EXPECT_EQ(top.words.back().word, W("z"));
  EXPECT_EQ(headword_frequencies(lex).total(), 2u);
}

TEST(Inventory, CountsCodepoints) {
  Lexicon lex;
  lex.add(W("ab"), {{"x"}, std::nullopt});
  const auto inv = codepoint_inventory(lex);
  ASSERT_EQ(inv.size(), 2u);
  EXPECT_EQ(inv.at(U'a').count, 1u);
  EXPECT_EQ(inv.at(U'b').name, "LATIN SMALL LETTER B");
  EXPECT_TRUE(codepoint_inventory(Lexicon{}).empty());
}

TEST(Inventory, IdenticalGlyphsStayDistinct) {
  Lexicon lex;
  lex.add(W(U"سی"), {{"s", "i"}, std::nullopt});
  lex.add(W(U"سى"), {{"s", "a"}, std::nullopt});
  const auto inv = codepoint_inventory(lex);
  EXPECT_EQ(inv.at(0x06CC).count, 1u);
  EXPECT_EQ(inv.at(0x0649).count, 1u);
  EXPECT_EQ(inv.at(0x0633).count, 2u);
  EXPECT_EQ(inv.at(0x06CC).name, "ARABIC LETTER FARSI YEH");
  EXPECT_EQ(inv.at(0x0649).name, "ARABIC LETTER ALEF MAKSURA");
}

TEST(Frequencies, ReportIsRankOrderedTsv) {
  std::ostringstream out;
  write_frequency_report(out, table({{"b", 1}, {"a", 4}, {"c", 1}}));
  EXPECT_EQ(out.str(), "a\t4\nb\t1\nc\t1\n");
}

TEST(Io, MissingFileIsIoError) {
  EXPECT_THROW(load_lexicon("/nonexistent/dir/x.lexicon"), IoError);
}

}  // namespace
}  // namespace lexharmony
