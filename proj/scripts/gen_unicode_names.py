#!/usr/bin/env python3
"""Regenerates include/lexharmony/unicode_names_data.hpp from Python's unicodedata."""
import sys
import unicodedata

RANGES = [
    (0x0020, 0x024F),  # Latin
    (0x0300, 0x036F),  # combining diacritics
    (0x0600, 0x06FF),  # Arabic
    (0x0750, 0x077F),  # Arabic Supplement
    (0x08A0, 0x08FF),  # Arabic Extended-A
    (0x2000, 0x206F),  # General Punctuation (ZWNJ, ZWJ, marks)
    (0xFB50, 0xFDFF),  # Arabic Presentation Forms-A
    (0xFE70, 0xFEFF),  # Arabic Presentation Forms-B
]

HEADER = """// Copyright 2026 The lexharmony Authors
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

// Generated by scripts/gen_unicode_names.py (Unicode {ver}). Do not edit.

#pragma once

#include <cstdint>

namespace lexharmony::detail {{

struct UnicodeNameEntry {{
  char32_t codepoint;
  const char* name;
}};

// Sorted by codepoint.
inline constexpr UnicodeNameEntry kUnicodeNames[] = {{
"""

def main(out):
    rows = []
    for lo, hi in RANGES:
        for cp in range(lo, hi + 1):
            name = unicodedata.name(chr(cp), None)
            if name:
                rows.append((cp, name))
    with open(out, "w", encoding="utf-8") as f:
        f.write(HEADER.format(ver=unicodedata.unidata_version))
        for cp, name in rows:
            f.write('    {0x%04X, "%s"},\n' % (cp, name))
        f.write("};\n\n}  // namespace lexharmony::detail\n")

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/lexharmony/unicode_names_data.hpp")
