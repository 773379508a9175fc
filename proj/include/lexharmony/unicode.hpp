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
#include <cstdio>
#include <iterator>
#include <string>
#include <string_view>

#include "lexharmony/error.hpp"
#include "lexharmony/unicode_names_data.hpp"

namespace lexharmony {

// Strict UTF-8 decoding: rejects overlong forms, surrogates and values past
// U+10FFFF. No normalization form is ever applied.
inline std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  auto fail = [&](const char* what) {
    throw EncodingError(std::string("invalid UTF-8 (") + what + ") at byte " +
                        std::to_string(i));
  };
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    std::size_t len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      fail("bad lead byte");
    }
    if (i + len > text.size()) fail("truncated sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) fail("bad continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMinForLen[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLen[len]) fail("overlong encoding");
    if (cp >= 0xD800 && cp <= 0xDFFF) fail("surrogate");
    if (cp > 0x10FFFF) fail("out of range");
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

/// "U+0643" style label; at least four hex digits.
inline std::string codepoint_label(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

inline char32_t parse_codepoint_label(std::string_view label) {
  if (label.size() < 3 || (label.substr(0, 2) != "U+" && label.substr(0, 2) != "u+")) {
    throw ParseError("expected U+XXXX codepoint, got '" + std::string(label) + "'");
  }
  char32_t cp = 0;
  for (char c : label.substr(2)) {
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else throw ParseError("bad hex digit in '" + std::string(label) + "'");
    cp = cp * 16 + static_cast<char32_t>(digit);
    if (cp > 0x10FFFF) throw ParseError("codepoint out of range: " + std::string(label));
  }
  if (cp >= 0xD800 && cp <= 0xDFFF) throw ParseError("surrogate is not a scalar value: " + std::string(label));
  return cp;
}

/// Name from the bundled table, or "UNKNOWN" for codepoints outside it.
inline std::string_view unicode_name(char32_t cp) {
  const auto* first = std::begin(detail::kUnicodeNames);
  const auto* last = std::end(detail::kUnicodeNames);
  const auto* it = std::lower_bound(
      first, last, cp,
      [](const detail::UnicodeNameEntry& e, char32_t v) { return e.codepoint < v; });
  if (it != last && it->codepoint == cp) return it->name;
  return "UNKNOWN";
}

inline bool is_whitespace(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

}  // namespace lexharmony
