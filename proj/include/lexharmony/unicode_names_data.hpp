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

// Generated by scripts/gen_unicode_names.py (Unicode 13.0.0). Do not edit.

#pragma once

#include <cstdint>

namespace lexharmony::detail {

struct UnicodeNameEntry {
  char32_t codepoint;
  const char* name;
};

// Sorted by codepoint.
inline constexpr UnicodeNameEntry kUnicodeNames[] = {
    {0x0020, "SPACE"},
    {0x0021, "EXCLAMATION MARK"},
    {0x0022, "QUOTATION MARK"},
    {0x0023, "NUMBER SIGN"},
    {0x0024, "DOLLAR SIGN"},
    {0x0025, "PERCENT SIGN"},
    {0x0026, "AMPERSAND"},
    {0x0027, "APOSTROPHE"},
    {0x0028, "LEFT PARENTHESIS"},
    {0x0029, "RIGHT PARENTHESIS"},
    {0x002A, "ASTERISK"},
    {0x002B, "PLUS SIGN"},
    {0x002C, "COMMA"},
    {0x002D, "HYPHEN-MINUS"},
    {0x002E, "FULL STOP"},
    {0x002F, "SOLIDUS"},
    {0x0030, "DIGIT ZERO"},
    {0x0031, "DIGIT ONE"},
    {0x0032, "DIGIT TWO"},
    {0x0033, "DIGIT THREE"},
    {0x0034, "DIGIT FOUR"},
    {0x0035, "DIGIT FIVE"},
    {0x0036, "DIGIT SIX"},
    {0x0037, "DIGIT SEVEN"},
    {0x0038, "DIGIT EIGHT"},
    {0x0039, "DIGIT NINE"},
    {0x003A, "COLON"},
    {0x003B, "SEMICOLON"},
    {0x003C, "LESS-THAN SIGN"},
    {0x003D, "EQUALS SIGN"},
    {0x003E, "GREATER-THAN SIGN"},
    {0x003F, "QUESTION MARK"},
    {0x0040, "COMMERCIAL AT"},
    {0x0041, "LATIN CAPITAL LETTER A"},
    {0x0042, "LATIN CAPITAL LETTER B"},
    {0x0043, "LATIN CAPITAL LETTER C"},
    {0x0044, "LATIN CAPITAL LETTER D"},
    {0x0045, "LATIN CAPITAL LETTER E"},
    {0x0046, "LATIN CAPITAL LETTER F"},
    {0x0047, "LATIN CAPITAL LETTER G"},
    {0x0048, "LATIN CAPITAL LETTER H"},
    {0x0049, "LATIN CAPITAL LETTER I"},
    {0x004A, "LATIN CAPITAL LETTER J"},
    {0x004B, "LATIN CAPITAL LETTER K"},
    {0x004C, "LATIN CAPITAL LETTER L"},
    {0x004D, "LATIN CAPITAL LETTER M"},
    {0x004E, "LATIN CAPITAL LETTER N"},
    {0x004F, "LATIN CAPITAL LETTER O"},
    {0x0050, "LATIN CAPITAL LETTER P"},
    {0x0051, "LATIN CAPITAL LETTER Q"},
    {0x0052, "LATIN CAPITAL LETTER R"},
    {0x0053, "LATIN CAPITAL LETTER S"},
    {0x0054, "LATIN CAPITAL LETTER T"},
    {0x0055, "LATIN CAPITAL LETTER U"},
    {0x0056, "LATIN CAPITAL LETTER V"},
    {0x0057, "LATIN CAPITAL LETTER W"},
    {0x0058, "LATIN CAPITAL LETTER X"},
    {0x0059, "LATIN CAPITAL LETTER Y"},
    {0x005A, "LATIN CAPITAL LETTER Z"},
    {0x005B, "LEFT SQUARE BRACKET"},
    {0x005C, "REVERSE SOLIDUS"},
    {0x005D, "RIGHT SQUARE BRACKET"},
    {0x005E, "CIRCUMFLEX ACCENT"},
    {0x005F, "LOW LINE"},
    {0x0060, "GRAVE ACCENT"},
    {0x0061, "LATIN SMALL LETTER A"},
    {0x0062, "LATIN SMALL LETTER B"},
    {0x0063, "LATIN SMALL LETTER C"},
    {0x0064, "LATIN SMALL LETTER D"},
    {0x0065, "LATIN SMALL LETTER E"},
    {0x0066, "LATIN SMALL LETTER F"},
    {0x0067, "LATIN SMALL LETTER G"},
    {0x0068, "LATIN SMALL LETTER H"},
    {0x0069, "LATIN SMALL LETTER I"},
    {0x006A, "LATIN SMALL LETTER J"},
    {0x006B, "LATIN SMALL LETTER K"},
    {0x006C, "LATIN SMALL LETTER L"},
    {0x006D, "LATIN SMALL LETTER M"},
    {0x006E, "LATIN SMALL LETTER N"},
    {0x006F, "LATIN SMALL LETTER O"},
    {0x0070, "LATIN SMALL LETTER P"},
    {0x0071, "LATIN SMALL LETTER Q"},
    {0x0072, "LATIN SMALL LETTER R"},
    {0x0073, "LATIN SMALL LETTER S"},
    {0x0074, "LATIN SMALL LETTER T"},
    {0x0075, "LATIN SMALL LETTER U"},
    {0x0076, "LATIN SMALL LETTER V"},
    {0x0077, "LATIN SMALL LETTER W"},
    {0x0078, "LATIN SMALL LETTER X"},
    {0x0079, "LATIN SMALL LETTER Y"},
    {0x007A, "LATIN SMALL LETTER Z"},
    {0x007B, "LEFT CURLY BRACKET"},
    {0x007C, "VERTICAL LINE"},
    {0x007D, "RIGHT CURLY BRACKET"},
    {0x007E, "TILDE"},
    {0x00A0, "NO-BREAK SPACE"},
    {0x00A1, "INVERTED EXCLAMATION MARK"},
    {0x00A2, "CENT SIGN"},
    {0x00A3, "POUND SIGN"},
    {0x00A4, "CURRENCY SIGN"},
    {0x00A5, "YEN SIGN"},
    {0x00A6, "BROKEN BAR"},
    {0x00A7, "SECTION SIGN"},
    {0x00A8, "DIAERESIS"},
    {0x00A9, "COPYRIGHT SIGN"},
    {0x00AA, "FEMININE ORDINAL INDICATOR"},
    {0x00AB, "LEFT-POINTING DOUBLE ANGLE QUOTATION MARK"},
    {0x00AC, "NOT SIGN"},
    {0x00AD, "SOFT HYPHEN"},
    {0x00AE, "REGISTERED SIGN"},
    {0x00AF, "MACRON"},
    {0x00B0, "DEGREE SIGN"},
    {0x00B1, "PLUS-MINUS SIGN"},
    {0x00B2, "SUPERSCRIPT TWO"},
    {0x00B3, "SUPERSCRIPT THREE"},
    {0x00B4, "ACUTE ACCENT"},
    {0x00B5, "MICRO SIGN"},
    {0x00B6, "PILCROW SIGN"},
    {0x00B7, "MIDDLE DOT"},
    {0x00B8, "CEDILLA"},
    {0x00B9, "SUPERSCRIPT ONE"},
    {0x00BA, "MASCULINE ORDINAL INDICATOR"},
    {0x00BB, "RIGHT-POINTING DOUBLE ANGLE QUOTATION MARK"},
    {0x00BC, "VULGAR FRACTION ONE QUARTER"},
    {0x00BD, "VULGAR FRACTION ONE HALF"},
    {0x00BE, "VULGAR FRACTION THREE QUARTERS"},
    {0x00BF, "INVERTED QUESTION MARK"},
    {0x00C0, "LATIN CAPITAL LETTER A WITH GRAVE"},
    {0x00C1, "LATIN CAPITAL LETTER A WITH ACUTE"},
    {0x00C2, "LATIN CAPITAL LETTER A WITH CIRCUMFLEX"},
    {0x00C3, "LATIN CAPITAL LETTER A WITH TILDE"},
    {0x00C4, "LATIN CAPITAL LETTER A WITH DIAERESIS"},
    {0x00C5, "LATIN CAPITAL LETTER A WITH RING ABOVE"},
    {0x00C6, "LATIN CAPITAL LETTER AE"},
    {0x00C7, "LATIN CAPITAL LETTER C WITH CEDILLA"},
    {0x00C8, "LATIN CAPITAL LETTER E WITH GRAVE"},
    {0x00C9, "LATIN CAPITAL LETTER E WITH ACUTE"},
    {0x00CA, "LATIN CAPITAL LETTER E WITH CIRCUMFLEX"},
    {0x00CB, "LATIN CAPITAL LETTER E WITH DIAERESIS"},
    {0x00CC, "LATIN CAPITAL LETTER I WITH GRAVE"},
    {0x00CD, "LATIN CAPITAL LETTER I WITH ACUTE"},
    {0x00CE, "LATIN CAPITAL LETTER I WITH CIRCUMFLEX"},
    {0x00CF, "LATIN CAPITAL LETTER I WITH DIAERESIS"},
    {0x00D0, "LATIN CAPITAL LETTER ETH"},
    {0x00D1, "LATIN CAPITAL LETTER N WITH TILDE"},
    {0x00D2, "LATIN CAPITAL LETTER O WITH GRAVE"},
    {0x00D3, "LATIN CAPITAL LETTER O WITH ACUTE"},
    {0x00D4, "LATIN CAPITAL LETTER O WITH CIRCUMFLEX"},
    {0x00D5, "LATIN CAPITAL LETTER O WITH TILDE"},
    {0x00D6, "LATIN CAPITAL LETTER O WITH DIAERESIS"},
    {0x00D7, "MULTIPLICATION SIGN"},
    {0x00D8, "LATIN CAPITAL LETTER O WITH STROKE"},
    {0x00D9, "LATIN CAPITAL LETTER U WITH GRAVE"},
    {0x00DA, "LATIN CAPITAL LETTER U WITH ACUTE"},
    {0x00DB, "LATIN CAPITAL LETTER U WITH CIRCUMFLEX"},
    {0x00DC, "LATIN CAPITAL LETTER U WITH DIAERESIS"},
    {0x00DD, "LATIN CAPITAL LETTER Y WITH ACUTE"},
    {0x00DE, "LATIN CAPITAL LETTER THORN"},
    {0x00DF, "LATIN SMALL LETTER SHARP S"},
    {0x00E0, "LATIN SMALL LETTER A WITH GRAVE"},
    {0x00E1, "LATIN SMALL LETTER A WITH ACUTE"},
    {0x00E2, "LATIN SMALL LETTER A WITH CIRCUMFLEX"},
    {0x00E3, "LATIN SMALL LETTER A WITH TILDE"},
    {0x00E4, "LATIN SMALL LETTER A WITH DIAERESIS"},
    {0x00E5, "LATIN SMALL LETTER A WITH RING ABOVE"},
    {0x00E6, "LATIN SMALL LETTER AE"},
    {0x00E7, "LATIN SMALL LETTER C WITH CEDILLA"},
    {0x00E8, "LATIN SMALL LETTER E WITH GRAVE"},
    {0x00E9, "LATIN SMALL LETTER E WITH ACUTE"},
    {0x00EA, "LATIN SMALL LETTER E WITH CIRCUMFLEX"},
    {0x00EB, "LATIN SMALL LETTER E WITH DIAERESIS"},
    {0x00EC, "LATIN SMALL LETTER I WITH GRAVE"},
    {0x00ED, "LATIN SMALL LETTER I WITH ACUTE"},
    {0x00EE, "LATIN SMALL LETTER I WITH CIRCUMFLEX"},
    {0x00EF, "LATIN SMALL LETTER I WITH DIAERESIS"},
    {0x00F0, "LATIN SMALL LETTER ETH"},
    {0x00F1, "LATIN SMALL LETTER N WITH TILDE"},
    {0x00F2, "LATIN SMALL LETTER O WITH GRAVE"},
    {0x00F3, "LATIN SMALL LETTER O WITH ACUTE"},
    {0x00F4, "LATIN SMALL LETTER O WITH CIRCUMFLEX"},
    {0x00F5, "LATIN SMALL LETTER O WITH TILDE"},
    {0x00F6, "LATIN SMALL LETTER O WITH DIAERESIS"},
    {0x00F7, "DIVISION SIGN"},
    {0x00F8, "LATIN SMALL LETTER O WITH STROKE"},
    {0x00F9, "LATIN SMALL LETTER U WITH GRAVE"},
    {0x00FA, "LATIN SMALL LETTER U WITH ACUTE"},
    {0x00FB, "LATIN SMALL LETTER U WITH CIRCUMFLEX"},
    {0x00FC, "LATIN SMALL LETTER U WITH DIAERESIS"},
    {0x00FD, "LATIN SMALL LETTER Y WITH ACUTE"},
    {0x00FE, "LATIN SMALL LETTER THORN"},
    {0x00FF, "LATIN SMALL LETTER Y WITH DIAERESIS"},
    {0x0100, "LATIN CAPITAL LETTER A WITH MACRON"},
    {0x0101, "LATIN SMALL LETTER A WITH MACRON"},
    {0x0102, "LATIN CAPITAL LETTER A WITH BREVE"},
    {0x0103, "LATIN SMALL LETTER A WITH BREVE"},
    {0x0104, "LATIN CAPITAL LETTER A WITH OGONEK"},
    {0x0105, "LATIN SMALL LETTER A WITH OGONEK"},
    {0x0106, "LATIN CAPITAL LETTER C WITH ACUTE"},
    {0x0107, "LATIN SMALL LETTER C WITH ACUTE"},
    {0x0108, "LATIN CAPITAL LETTER C WITH CIRCUMFLEX"},
    {0x0109, "LATIN SMALL LETTER C WITH CIRCUMFLEX"},
    {0x010A, "LATIN CAPITAL LETTER C WITH DOT ABOVE"},
    {0x010B, "LATIN SMALL LETTER C WITH DOT ABOVE"},
    {0x010C, "LATIN CAPITAL LETTER C WITH CARON"},
    {0x010D, "LATIN SMALL LETTER C WITH CARON"},
    {0x010E, "LATIN CAPITAL LETTER D WITH CARON"},
    {0x010F, "LATIN SMALL LETTER D WITH CARON"},
    {0x0110, "LATIN CAPITAL LETTER D WITH STROKE"},
    {0x0111, "LATIN SMALL LETTER D WITH STROKE"},
    {0x0112, "LATIN CAPITAL LETTER E WITH MACRON"},
    {0x0113, "LATIN SMALL LETTER E WITH MACRON"},
    {0x0114, "LATIN CAPITAL LETTER E WITH BREVE"},
    {0x0115, "LATIN SMALL LETTER E WITH BREVE"},
    {0x0116, "LATIN CAPITAL LETTER E WITH DOT ABOVE"},
    {0x0117, "LATIN SMALL LETTER E WITH DOT ABOVE"},
    {0x0118, "LATIN CAPITAL LETTER E WITH OGONEK"},
    {0x0119, "LATIN SMALL LETTER E WITH OGONEK"},
    {0x011A, "LATIN CAPITAL LETTER E WITH CARON"},
    {0x011B, "LATIN SMALL LETTER E WITH CARON"},
    {0x011C, "LATIN CAPITAL LETTER G WITH CIRCUMFLEX"},
    {0x011D, "LATIN SMALL LETTER G WITH CIRCUMFLEX"},
    {0x011E, "LATIN CAPITAL LETTER G WITH BREVE"},
    {0x011F, "LATIN SMALL LETTER G WITH BREVE"},
    {0x0120, "LATIN CAPITAL LETTER G WITH DOT ABOVE"},
    {0x0121, "LATIN SMALL LETTER G WITH DOT ABOVE"},
    {0x0122, "LATIN CAPITAL LETTER G WITH CEDILLA"},
    {0x0123, "LATIN SMALL LETTER G WITH CEDILLA"},
    {0x0124, "LATIN CAPITAL LETTER H WITH CIRCUMFLEX"},
    {0x0125, "LATIN SMALL LETTER H WITH CIRCUMFLEX"},
    {0x0126, "LATIN CAPITAL LETTER H WITH STROKE"},
    {0x0127, "LATIN SMALL LETTER H WITH STROKE"},
    {0x0128, "LATIN CAPITAL LETTER I WITH TILDE"},
    {0x0129, "LATIN SMALL LETTER I WITH TILDE"},
    {0x012A, "LATIN CAPITAL LETTER I WITH MACRON"},
    {0x012B, "LATIN SMALL LETTER I WITH MACRON"},
    {0x012C, "LATIN CAPITAL LETTER I WITH BREVE"},
    {0x012D, "LATIN SMALL LETTER I WITH BREVE"},
    {0x012E, "LATIN CAPITAL LETTER I WITH OGONEK"},
    {0x012F, "LATIN SMALL LETTER I WITH OGONEK"},
    {0x0130, "LATIN CAPITAL LETTER I WITH DOT ABOVE"},
    {0x0131, "LATIN SMALL LETTER DOTLESS I"},
    {0x0132, "LATIN CAPITAL LIGATURE IJ"},
    {0x0133, "LATIN SMALL LIGATURE IJ"},
    {0x0134, "LATIN CAPITAL LETTER J WITH CIRCUMFLEX"},
    {0x0135, "LATIN SMALL LETTER J WITH CIRCUMFLEX"},
    {0x0136, "LATIN CAPITAL LETTER K WITH CEDILLA"},
    {0x0137, "LATIN SMALL LETTER K WITH CEDILLA"},
    {0x0138, "LATIN SMALL LETTER KRA"},
    {0x0139, "LATIN CAPITAL LETTER L WITH ACUTE"},
    {0x013A, "LATIN SMALL LETTER L WITH ACUTE"},
    {0x013B, "LATIN CAPITAL LETTER L WITH CEDILLA"},
    {0x013C, "LATIN SMALL LETTER L WITH CEDILLA"},
    {0x013D, "LATIN CAPITAL LETTER L WITH CARON"},
    {0x013E, "LATIN SMALL LETTER L WITH CARON"},
    {0x013F, "LATIN CAPITAL LETTER L WITH MIDDLE DOT"},
    {0x0140, "LATIN SMALL LETTER L WITH MIDDLE DOT"},
    {0x0141, "LATIN CAPITAL LETTER L WITH STROKE"},
    {0x0142, "LATIN SMALL LETTER L WITH STROKE"},
    {0x0143, "LATIN CAPITAL LETTER N WITH ACUTE"},
    {0x0144, "LATIN SMALL LETTER N WITH ACUTE"},
    {0x0145, "LATIN CAPITAL LETTER N WITH CEDILLA"},
    {0x0146, "LATIN SMALL LETTER N WITH CEDILLA"},
    {0x0147, "LATIN CAPITAL LETTER N WITH CARON"},
    {0x0148, "LATIN SMALL LETTER N WITH CARON"},
    {0x0149, "LATIN SMALL LETTER N PRECEDED BY APOSTROPHE"},
    {0x014A, "LATIN CAPITAL LETTER ENG"},
    {0x014B, "LATIN SMALL LETTER ENG"},
    {0x014C, "LATIN CAPITAL LETTER O WITH MACRON"},
    {0x014D, "LATIN SMALL LETTER O WITH MACRON"},
    {0x014E, "LATIN CAPITAL LETTER O WITH BREVE"},
    {0x014F, "LATIN SMALL LETTER O WITH BREVE"},
    {0x0150, "LATIN CAPITAL LETTER O WITH DOUBLE ACUTE"},
    {0x0151, "LATIN SMALL LETTER O WITH DOUBLE ACUTE"},
    {0x0152, "LATIN CAPITAL LIGATURE OE"},
    {0x0153, "LATIN SMALL LIGATURE OE"},
    {0x0154, "LATIN CAPITAL LETTER R WITH ACUTE"},
    {0x0155, "LATIN SMALL LETTER R WITH ACUTE"},
    {0x0156, "LATIN CAPITAL LETTER R WITH CEDILLA"},
    {0x0157, "LATIN SMALL LETTER R WITH CEDILLA"},
    {0x0158, "LATIN CAPITAL LETTER R WITH CARON"},
    {0x0159, "LATIN SMALL LETTER R WITH CARON"},
    {0x015A, "LATIN CAPITAL LETTER S WITH ACUTE"},
    {0x015B, "LATIN SMALL LETTER S WITH ACUTE"},
    {0x015C, "LATIN CAPITAL LETTER S WITH CIRCUMFLEX"},
    {0x015D, "LATIN SMALL LETTER S WITH CIRCUMFLEX"},
    {0x015E, "LATIN CAPITAL LETTER S WITH CEDILLA"},
    {0x015F, "LATIN SMALL LETTER S WITH CEDILLA"},
    {0x0160, "LATIN CAPITAL LETTER S WITH CARON"},
    {0x0161, "LATIN SMALL LETTER S WITH CARON"},
    {0x0162, "LATIN CAPITAL LETTER T WITH CEDILLA"},
    {0x0163, "LATIN SMALL LETTER T WITH CEDILLA"},
    {0x0164, "LATIN CAPITAL LETTER T WITH CARON"},
    {0x0165, "LATIN SMALL LETTER T WITH CARON"},
    {0x0166, "LATIN CAPITAL LETTER T WITH STROKE"},
    {0x0167, "LATIN SMALL LETTER T WITH STROKE"},
    {0x0168, "LATIN CAPITAL LETTER U WITH TILDE"},
    {0x0169, "LATIN SMALL LETTER U WITH TILDE"},
    {0x016A, "LATIN CAPITAL LETTER U WITH MACRON"},
    {0x016B, "LATIN SMALL LETTER U WITH MACRON"},
    {0x016C, "LATIN CAPITAL LETTER U WITH BREVE"},
    {0x016D, "LATIN SMALL LETTER U WITH BREVE"},
    {0x016E, "LATIN CAPITAL LETTER U WITH RING ABOVE"},
    {0x016F, "LATIN SMALL LETTER U WITH RING ABOVE"},
    {0x0170, "LATIN CAPITAL LETTER U WITH DOUBLE ACUTE"},
    {0x0171, "LATIN SMALL LETTER U WITH DOUBLE ACUTE"},
    {0x0172, "LATIN CAPITAL LETTER U WITH OGONEK"},
    {0x0173, "LATIN SMALL LETTER U WITH OGONEK"},
    {0x0174, "LATIN CAPITAL LETTER W WITH CIRCUMFLEX"},
    {0x0175, "LATIN SMALL LETTER W WITH CIRCUMFLEX"},
    {0x0176, "LATIN CAPITAL LETTER Y WITH CIRCUMFLEX"},
    {0x0177, "LATIN SMALL LETTER Y WITH CIRCUMFLEX"},
    {0x0178, "LATIN CAPITAL LETTER Y WITH DIAERESIS"},
    {0x0179, "LATIN CAPITAL LETTER Z WITH ACUTE"},
    {0x017A, "LATIN SMALL LETTER Z WITH ACUTE"},
    {0x017B, "LATIN CAPITAL LETTER Z WITH DOT ABOVE"},
    {0x017C, "LATIN SMALL LETTER Z WITH DOT ABOVE"},
    {0x017D, "LATIN CAPITAL LETTER Z WITH CARON"},
    {0x017E, "LATIN SMALL LETTER Z WITH CARON"},
    {0x017F, "LATIN SMALL LETTER LONG S"},
    {0x0180, "LATIN SMALL LETTER B WITH STROKE"},
    {0x0181, "LATIN CAPITAL LETTER B WITH HOOK"},
    {0x0182, "LATIN CAPITAL LETTER B WITH TOPBAR"},
    {0x0183, "LATIN SMALL LETTER B WITH TOPBAR"},
    {0x0184, "LATIN CAPITAL LETTER TONE SIX"},
    {0x0185, "LATIN SMALL LETTER TONE SIX"},
    {0x0186, "LATIN CAPITAL LETTER OPEN O"},
    {0x0187, "LATIN CAPITAL LETTER C WITH HOOK"},
    {0x0188, "LATIN SMALL LETTER C WITH HOOK"},
    {0x0189, "LATIN CAPITAL LETTER AFRICAN D"},
    {0x018A, "LATIN CAPITAL LETTER D WITH HOOK"},
    {0x018B, "LATIN CAPITAL LETTER D WITH TOPBAR"},
    {0x018C, "LATIN SMALL LETTER D WITH TOPBAR"},
    {0x018D, "LATIN SMALL LETTER TURNED DELTA"},
    {0x018E, "LATIN CAPITAL LETTER REVERSED E"},
    {0x018F, "LATIN CAPITAL LETTER SCHWA"},
    {0x0190, "LATIN CAPITAL LETTER OPEN E"},
    {0x0191, "LATIN CAPITAL LETTER F WITH HOOK"},
    {0x0192, "LATIN SMALL LETTER F WITH HOOK"},
    {0x0193, "LATIN CAPITAL LETTER G WITH HOOK"},
    {0x0194, "LATIN CAPITAL LETTER GAMMA"},
    {0x0195, "LATIN SMALL LETTER HV"},
    {0x0196, "LATIN CAPITAL LETTER IOTA"},
    {0x0197, "LATIN CAPITAL LETTER I WITH STROKE"},
    {0x0198, "LATIN CAPITAL LETTER K WITH HOOK"},
    {0x0199, "LATIN SMALL LETTER K WITH HOOK"},
    {0x019A, "LATIN SMALL LETTER L WITH BAR"},
    {0x019B, "LATIN SMALL LETTER LAMBDA WITH STROKE"},
    {0x019C, "LATIN CAPITAL LETTER TURNED M"},
    {0x019D, "LATIN CAPITAL LETTER N WITH LEFT HOOK"},
    {0x019E, "LATIN SMALL LETTER N WITH LONG RIGHT LEG"},
    {0x019F, "LATIN CAPITAL LETTER O WITH MIDDLE TILDE"},
    {0x01A0, "LATIN CAPITAL LETTER O WITH HORN"},
    {0x01A1, "LATIN SMALL LETTER O WITH HORN"},
    {0x01A2, "LATIN CAPITAL LETTER OI"},
    {0x01A3, "LATIN SMALL LETTER OI"},
    {0x01A4, "LATIN CAPITAL LETTER P WITH HOOK"},
    {0x01A5, "LATIN SMALL LETTER P WITH HOOK"},
    {0x01A6, "LATIN LETTER YR"},
    {0x01A7, "LATIN CAPITAL LETTER TONE TWO"},
    {0x01A8, "LATIN SMALL LETTER TONE TWO"},
    {0x01A9, "LATIN CAPITAL LETTER ESH"},
    {0x01AA, "LATIN LETTER REVERSED ESH LOOP"},
    {0x01AB, "LATIN SMALL LETTER T WITH PALATAL HOOK"},
    {0x01AC, "LATIN CAPITAL LETTER T WITH HOOK"},
    {0x01AD, "LATIN SMALL LETTER T WITH HOOK"},
    {0x01AE, "LATIN CAPITAL LETTER T WITH RETROFLEX HOOK"},
    {0x01AF, "LATIN CAPITAL LETTER U WITH HORN"},
    {0x01B0, "LATIN SMALL LETTER U WITH HORN"},
    {0x01B1, "LATIN CAPITAL LETTER UPSILON"},
    {0x01B2, "LATIN CAPITAL LETTER V WITH HOOK"},
    {0x01B3, "LATIN CAPITAL LETTER Y WITH HOOK"},
    {0x01B4, "LATIN SMALL LETTER Y WITH HOOK"},
    {0x01B5, "LATIN CAPITAL LETTER Z WITH STROKE"},
    {0x01B6, "LATIN SMALL LETTER Z WITH STROKE"},
    {0x01B7, "LATIN CAPITAL LETTER EZH"},
    {0x01B8, "LATIN CAPITAL LETTER EZH REVERSED"},
    {0x01B9, "LATIN SMALL LETTER EZH REVERSED"},
    {0x01BA, "LATIN SMALL LETTER EZH WITH TAIL"},
    {0x01BB, "LATIN LETTER TWO WITH STROKE"},
    {0x01BC, "LATIN CAPITAL LETTER TONE FIVE"},
    {0x01BD, "LATIN SMALL LETTER TONE FIVE"},
    {0x01BE, "LATIN LETTER INVERTED GLOTTAL STOP WITH STROKE"},
    {0x01BF, "LATIN LETTER WYNN"},
    {0x01C0, "LATIN LETTER DENTAL CLICK"},
    {0x01C1, "LATIN LETTER LATERAL CLICK"},
    {0x01C2, "LATIN LETTER ALVEOLAR CLICK"},
    {0x01C3, "LATIN LETTER RETROFLEX CLICK"},
    {0x01C4, "LATIN CAPITAL LETTER DZ WITH CARON"},
    {0x01C5, "LATIN CAPITAL LETTER D WITH SMALL LETTER Z WITH CARON"},
    {0x01C6, "LATIN SMALL LETTER DZ WITH CARON"},
    {0x01C7, "LATIN CAPITAL LETTER LJ"},
    {0x01C8, "LATIN CAPITAL LETTER L WITH SMALL LETTER J"},
    {0x01C9, "LATIN SMALL LETTER LJ"},
    {0x01CA, "LATIN CAPITAL LETTER NJ"},
    {0x01CB, "LATIN CAPITAL LETTER N WITH SMALL LETTER J"},
    {0x01CC, "LATIN SMALL LETTER NJ"},
    {0x01CD, "LATIN CAPITAL LETTER A WITH CARON"},
    {0x01CE, "LATIN SMALL LETTER A WITH CARON"},
    {0x01CF, "LATIN CAPITAL LETTER I WITH CARON"},
    {0x01D0, "LATIN SMALL LETTER I WITH CARON"},
    {0x01D1, "LATIN CAPITAL LETTER O WITH CARON"},
    {0x01D2, "LATIN SMALL LETTER O WITH CARON"},
    {0x01D3, "LATIN CAPITAL LETTER U WITH CARON"},
    {0x01D4, "LATIN SMALL LETTER U WITH CARON"},
    {0x01D5, "LATIN CAPITAL LETTER U WITH DIAERESIS AND MACRON"},
    {0x01D6, "LATIN SMALL LETTER U WITH DIAERESIS AND MACRON"},
    {0x01D7, "LATIN CAPITAL LETTER U WITH DIAERESIS AND ACUTE"},
    {0x01D8, "LATIN SMALL LETTER U WITH DIAERESIS AND ACUTE"},
    {0x01D9, "LATIN CAPITAL LETTER U WITH DIAERESIS AND CARON"},
    {0x01DA, "LATIN SMALL LETTER U WITH DIAERESIS AND CARON"},
    {0x01DB, "LATIN CAPITAL LETTER U WITH DIAERESIS AND GRAVE"},
    {0x01DC, "LATIN SMALL LETTER U WITH DIAERESIS AND GRAVE"},
    {0x01DD, "LATIN SMALL LETTER TURNED E"},
    {0x01DE, "LATIN CAPITAL LETTER A WITH DIAERESIS AND MACRON"},
    {0x01DF, "LATIN SMALL LETTER A WITH DIAERESIS AND MACRON"},
    {0x01E0, "LATIN CAPITAL LETTER A WITH DOT ABOVE AND MACRON"},
    {0x01E1, "LATIN SMALL LETTER A WITH DOT ABOVE AND MACRON"},
    {0x01E2, "LATIN CAPITAL LETTER AE WITH MACRON"},
    {0x01E3, "LATIN SMALL LETTER AE WITH MACRON"},
    {0x01E4, "LATIN CAPITAL LETTER G WITH STROKE"},
    {0x01E5, "LATIN SMALL LETTER G WITH STROKE"},
    {0x01E6, "LATIN CAPITAL LETTER G WITH CARON"},
    {0x01E7, "LATIN SMALL LETTER G WITH CARON"},
    {0x01E8, "LATIN CAPITAL LETTER K WITH CARON"},
    {0x01E9, "LATIN SMALL LETTER K WITH CARON"},
    {0x01EA, "LATIN CAPITAL LETTER O WITH OGONEK"},
    {0x01EB, "LATIN SMALL LETTER O WITH OGONEK"},
    {0x01EC, "LATIN CAPITAL LETTER O WITH OGONEK AND MACRON"},
    {0x01ED, "LATIN SMALL LETTER O WITH OGONEK AND MACRON"},
    {0x01EE, "LATIN CAPITAL LETTER EZH WITH CARON"},
    {0x01EF, "LATIN SMALL LETTER EZH WITH CARON"},
    {0x01F0, "LATIN SMALL LETTER J WITH CARON"},
    {0x01F1, "LATIN CAPITAL LETTER DZ"},
    {0x01F2, "LATIN CAPITAL LETTER D WITH SMALL LETTER Z"},
    {0x01F3, "LATIN SMALL LETTER DZ"},
    {0x01F4, "LATIN CAPITAL LETTER G WITH ACUTE"},
    {0x01F5, "LATIN SMALL LETTER G WITH ACUTE"},
    {0x01F6, "LATIN CAPITAL LETTER HWAIR"},
    {0x01F7, "LATIN CAPITAL LETTER WYNN"},
    {0x01F8, "LATIN CAPITAL LETTER N WITH GRAVE"},
    {0x01F9, "LATIN SMALL LETTER N WITH GRAVE"},
    {0x01FA, "LATIN CAPITAL LETTER A WITH RING ABOVE AND ACUTE"},
    {0x01FB, "LATIN SMALL LETTER A WITH RING ABOVE AND ACUTE"},
    {0x01FC, "LATIN CAPITAL LETTER AE WITH ACUTE"},
    {0x01FD, "LATIN SMALL LETTER AE WITH ACUTE"},
    {0x01FE, "LATIN CAPITAL LETTER O WITH STROKE AND ACUTE"},
    {0x01FF, "LATIN SMALL LETTER O WITH STROKE AND ACUTE"},
    {0x0200, "LATIN CAPITAL LETTER A WITH DOUBLE GRAVE"},
    {0x0201, "LATIN SMALL LETTER A WITH DOUBLE GRAVE"},
    {0x0202, "LATIN CAPITAL LETTER A WITH INVERTED BREVE"},
    {0x0203, "LATIN SMALL LETTER A WITH INVERTED BREVE"},
    {0x0204, "LATIN CAPITAL LETTER E WITH DOUBLE GRAVE"},
    {0x0205, "LATIN SMALL LETTER E WITH DOUBLE GRAVE"},
    {0x0206, "LATIN CAPITAL LETTER E WITH INVERTED BREVE"},
    {0x0207, "LATIN SMALL LETTER E WITH INVERTED BREVE"},
    {0x0208, "LATIN CAPITAL LETTER I WITH DOUBLE GRAVE"},
    {0x0209, "LATIN SMALL LETTER I WITH DOUBLE GRAVE"},
    {0x020A, "LATIN CAPITAL LETTER I WITH INVERTED BREVE"},
    {0x020B, "LATIN SMALL LETTER I WITH INVERTED BREVE"},
    {0x020C, "LATIN CAPITAL LETTER O WITH DOUBLE GRAVE"},
    {0x020D, "LATIN SMALL LETTER O WITH DOUBLE GRAVE"},
    {0x020E, "LATIN CAPITAL LETTER O WITH INVERTED BREVE"},
    {0x020F, "LATIN SMALL LETTER O WITH INVERTED BREVE"},
    {0x0210, "LATIN CAPITAL LETTER R WITH DOUBLE GRAVE"},
    {0x0211, "LATIN SMALL LETTER R WITH DOUBLE GRAVE"},
    {0x0212, "LATIN CAPITAL LETTER R WITH INVERTED BREVE"},
    {0x0213, "LATIN SMALL LETTER R WITH INVERTED BREVE"},
    {0x0214, "LATIN CAPITAL LETTER U WITH DOUBLE GRAVE"},
    {0x0215, "LATIN SMALL LETTER U WITH DOUBLE GRAVE"},
    {0x0216, "LATIN CAPITAL LETTER U WITH INVERTED BREVE"},
    {0x0217, "LATIN SMALL LETTER U WITH INVERTED BREVE"},
    {0x0218, "LATIN CAPITAL LETTER S WITH COMMA BELOW"},
    {0x0219, "LATIN SMALL LETTER S WITH COMMA BELOW"},
    {0x021A, "LATIN CAPITAL LETTER T WITH COMMA BELOW"},
    {0x021B, "LATIN SMALL LETTER T WITH COMMA BELOW"},
    {0x021C, "LATIN CAPITAL LETTER YOGH"},
    {0x021D, "LATIN SMALL LETTER YOGH"},
    {0x021E, "LATIN CAPITAL LETTER H WITH CARON"},
    {0x021F, "LATIN SMALL LETTER H WITH CARON"},
    {0x0220, "LATIN CAPITAL LETTER N WITH LONG RIGHT LEG"},
    {0x0221, "LATIN SMALL LETTER D WITH CURL"},
    {0x0222, "LATIN CAPITAL LETTER OU"},
    {0x0223, "LATIN SMALL LETTER OU"},
    {0x0224, "LATIN CAPITAL LETTER Z WITH HOOK"},
    {0x0225, "LATIN SMALL LETTER Z WITH HOOK"},
    {0x0226, "LATIN CAPITAL LETTER A WITH DOT ABOVE"},
    {0x0227, "LATIN SMALL LETTER A WITH DOT ABOVE"},
    {0x0228, "LATIN CAPITAL LETTER E WITH CEDILLA"},
    {0x0229, "LATIN SMALL LETTER E WITH CEDILLA"},
    {0x022A, "LATIN CAPITAL LETTER O WITH DIAERESIS AND MACRON"},
    {0x022B, "LATIN SMALL LETTER O WITH DIAERESIS AND MACRON"},
    {0x022C, "LATIN CAPITAL LETTER O WITH TILDE AND MACRON"},
    {0x022D, "LATIN SMALL LETTER O WITH TILDE AND MACRON"},
    {0x022E, "LATIN CAPITAL LETTER O WITH DOT ABOVE"},
    {0x022F, "LATIN SMALL LETTER O WITH DOT ABOVE"},
    {0x0230, "LATIN CAPITAL LETTER O WITH DOT ABOVE AND MACRON"},
    {0x0231, "LATIN SMALL LETTER O WITH DOT ABOVE AND MACRON"},
    {0x0232, "LATIN CAPITAL LETTER Y WITH MACRON"},
    {0x0233, "LATIN SMALL LETTER Y WITH MACRON"},
    {0x0234, "LATIN SMALL LETTER L WITH CURL"},
    {0x0235, "LATIN SMALL LETTER N WITH CURL"},
    {0x0236, "LATIN SMALL LETTER T WITH CURL"},
    {0x0237, "LATIN SMALL LETTER DOTLESS J"},
    {0x0238, "LATIN SMALL LETTER DB DIGRAPH"},
    {0x0239, "LATIN SMALL LETTER QP DIGRAPH"},
    {0x023A, "LATIN CAPITAL LETTER A WITH STROKE"},
    {0x023B, "LATIN CAPITAL LETTER C WITH STROKE"},
    {0x023C, "LATIN SMALL LETTER C WITH STROKE"},
    {0x023D, "LATIN CAPITAL LETTER L WITH BAR"},
    {0x023E, "LATIN CAPITAL LETTER T WITH DIAGONAL STROKE"},
    {0x023F, "LATIN SMALL LETTER S WITH SWASH TAIL"},
    {0x0240, "LATIN SMALL LETTER Z WITH SWASH TAIL"},
    {0x0241, "LATIN CAPITAL LETTER GLOTTAL STOP"},
    {0x0242, "LATIN SMALL LETTER GLOTTAL STOP"},
    {0x0243, "LATIN CAPITAL LETTER B WITH STROKE"},
    {0x0244, "LATIN CAPITAL LETTER U BAR"},
    {0x0245, "LATIN CAPITAL LETTER TURNED V"},
    {0x0246, "LATIN CAPITAL LETTER E WITH STROKE"},
    {0x0247, "LATIN SMALL LETTER E WITH STROKE"},
    {0x0248, "LATIN CAPITAL LETTER J WITH STROKE"},
    {0x0249, "LATIN SMALL LETTER J WITH STROKE"},
    {0x024A, "LATIN CAPITAL LETTER SMALL Q WITH HOOK TAIL"},
    {0x024B, "LATIN SMALL LETTER Q WITH HOOK TAIL"},
    {0x024C, "LATIN CAPITAL LETTER R WITH STROKE"},
    {0x024D, "LATIN SMALL LETTER R WITH STROKE"},
    {0x024E, "LATIN CAPITAL LETTER Y WITH STROKE"},
    {0x024F, "LATIN SMALL LETTER Y WITH STROKE"},
    {0x0300, "COMBINING GRAVE ACCENT"},
    {0x0301, "COMBINING ACUTE ACCENT"},
    {0x0302, "COMBINING CIRCUMFLEX ACCENT"},
    {0x0303, "COMBINING TILDE"},
    {0x0304, "COMBINING MACRON"},
    {0x0305, "COMBINING OVERLINE"},
    {0x0306, "COMBINING BREVE"},
    {0x0307, "COMBINING DOT ABOVE"},
    {0x0308, "COMBINING DIAERESIS"},
    {0x0309, "COMBINING HOOK ABOVE"},
    {0x030A, "COMBINING RING ABOVE"},
    {0x030B, "COMBINING DOUBLE ACUTE ACCENT"},
    {0x030C, "COMBINING CARON"},
    {0x030D, "COMBINING VERTICAL LINE ABOVE"},
    {0x030E, "COMBINING DOUBLE VERTICAL LINE ABOVE"},
    {0x030F, "COMBINING DOUBLE GRAVE ACCENT"},
    {0x0310, "COMBINING CANDRABINDU"},
    {0x0311, "COMBINING INVERTED BREVE"},
    {0x0312, "COMBINING TURNED COMMA ABOVE"},
    {0x0313, "COMBINING COMMA ABOVE"},
    {0x0314, "COMBINING REVERSED COMMA ABOVE"},
    {0x0315, "COMBINING COMMA ABOVE RIGHT"},
    {0x0316, "COMBINING GRAVE ACCENT BELOW"},
    {0x0317, "COMBINING ACUTE ACCENT BELOW"},
    {0x0318, "COMBINING LEFT TACK BELOW"},
    {0x0319, "COMBINING RIGHT TACK BELOW"},
    {0x031A, "COMBINING LEFT ANGLE ABOVE"},
    {0x031B, "COMBINING HORN"},
    {0x031C, "COMBINING LEFT HALF RING BELOW"},
    {0x031D, "COMBINING UP TACK BELOW"},
    {0x031E, "COMBINING DOWN TACK BELOW"},
    {0x031F, "COMBINING PLUS SIGN BELOW"},
    {0x0320, "COMBINING MINUS SIGN BELOW"},
    {0x0321, "COMBINING PALATALIZED HOOK BELOW"},
    {0x0322, "COMBINING RETROFLEX HOOK BELOW"},
    {0x0323, "COMBINING DOT BELOW"},
    {0x0324, "COMBINING DIAERESIS BELOW"},
    {0x0325, "COMBINING RING BELOW"},
    {0x0326, "COMBINING COMMA BELOW"},
    {0x0327, "COMBINING CEDILLA"},
    {0x0328, "COMBINING OGONEK"},
    {0x0329, "COMBINING VERTICAL LINE BELOW"},
    {0x032A, "COMBINING BRIDGE BELOW"},
    {0x032B, "COMBINING INVERTED DOUBLE ARCH BELOW"},
    {0x032C, "COMBINING CARON BELOW"},
    {0x032D, "COMBINING CIRCUMFLEX ACCENT BELOW"},
    {0x032E, "COMBINING BREVE BELOW"},
    {0x032F, "COMBINING INVERTED BREVE BELOW"},
    {0x0330, "COMBINING TILDE BELOW"},
    {0x0331, "COMBINING MACRON BELOW"},
    {0x0332, "COMBINING LOW LINE"},
    {0x0333, "COMBINING DOUBLE LOW LINE"},
    {0x0334, "COMBINING TILDE OVERLAY"},
    {0x0335, "COMBINING SHORT STROKE OVERLAY"},
    {0x0336, "COMBINING LONG STROKE OVERLAY"},
    {0x0337, "COMBINING SHORT SOLIDUS OVERLAY"},
    {0x0338, "COMBINING LONG SOLIDUS OVERLAY"},
    {0x0339, "COMBINING RIGHT HALF RING BELOW"},
    {0x033A, "COMBINING INVERTED BRIDGE BELOW"},
    {0x033B, "COMBINING SQUARE BELOW"},
    {0x033C, "COMBINING SEAGULL BELOW"},
    {0x033D, "COMBINING X ABOVE"},
    {0x033E, "COMBINING VERTICAL TILDE"},
    {0x033F, "COMBINING DOUBLE OVERLINE"},
    {0x0340, "COMBINING GRAVE TONE MARK"},
    {0x0341, "COMBINING ACUTE TONE MARK"},
    {0x0342, "COMBINING GREEK PERISPOMENI"},
    {0x0343, "COMBINING GREEK KORONIS"},
    {0x0344, "COMBINING GREEK DIALYTIKA TONOS"},
    {0x0345, "COMBINING GREEK YPOGEGRAMMENI"},
    {0x0346, "COMBINING BRIDGE ABOVE"},
    {0x0347, "COMBINING EQUALS SIGN BELOW"},
    {0x0348, "COMBINING DOUBLE VERTICAL LINE BELOW"},
    {0x0349, "COMBINING LEFT ANGLE BELOW"},
    {0x034A, "COMBINING NOT TILDE ABOVE"},
    {0x034B, "COMBINING HOMOTHETIC ABOVE"},
    {0x034C, "COMBINING ALMOST EQUAL TO ABOVE"},
    {0x034D, "COMBINING LEFT RIGHT ARROW BELOW"},
    {0x034E, "COMBINING UPWARDS ARROW BELOW"},
    {0x034F, "COMBINING GRAPHEME JOINER"},
    {0x0350, "COMBINING RIGHT ARROWHEAD ABOVE"},
    {0x0351, "COMBINING LEFT HALF RING ABOVE"},
    {0x0352, "COMBINING FERMATA"},
    {0x0353, "COMBINING X BELOW"},
    {0x0354, "COMBINING LEFT ARROWHEAD BELOW"},
    {0x0355, "COMBINING RIGHT ARROWHEAD BELOW"},
    {0x0356, "COMBINING RIGHT ARROWHEAD AND UP ARROWHEAD BELOW"},
    {0x0357, "COMBINING RIGHT HALF RING ABOVE"},
    {0x0358, "COMBINING DOT ABOVE RIGHT"},
    {0x0359, "COMBINING ASTERISK BELOW"},
    {0x035A, "COMBINING DOUBLE RING BELOW"},
    {0x035B, "COMBINING ZIGZAG ABOVE"},
    {0x035C, "COMBINING DOUBLE BREVE BELOW"},
    {0x035D, "COMBINING DOUBLE BREVE"},
    {0x035E, "COMBINING DOUBLE MACRON"},
    {0x035F, "COMBINING DOUBLE MACRON BELOW"},
    {0x0360, "COMBINING DOUBLE TILDE"},
    {0x0361, "COMBINING DOUBLE INVERTED BREVE"},
    {0x0362, "COMBINING DOUBLE RIGHTWARDS ARROW BELOW"},
    {0x0363, "COMBINING LATIN SMALL LETTER A"},
    {0x0364, "COMBINING LATIN SMALL LETTER E"},
    {0x0365, "COMBINING LATIN SMALL LETTER I"},
    {0x0366, "COMBINING LATIN SMALL LETTER O"},
    {0x0367, "COMBINING LATIN SMALL LETTER U"},
    {0x0368, "COMBINING LATIN SMALL LETTER C"},
    {0x0369, "COMBINING LATIN SMALL LETTER D"},
    {0x036A, "COMBINING LATIN SMALL LETTER H"},
    {0x036B, "COMBINING LATIN SMALL LETTER M"},
    {0x036C, "COMBINING LATIN SMALL LETTER R"},
    {0x036D, "COMBINING LATIN SMALL LETTER T"},
    {0x036E, "COMBINING LATIN SMALL LETTER V"},
    {0x036F, "COMBINING LATIN SMALL LETTER X"},
    {0x0600, "ARABIC NUMBER SIGN"},
    {0x0601, "ARABIC SIGN SANAH"},
    {0x0602, "ARABIC FOOTNOTE MARKER"},
    {0x0603, "ARABIC SIGN SAFHA"},
    {0x0604, "ARABIC SIGN SAMVAT"},
    {0x0605, "ARABIC NUMBER MARK ABOVE"},
    {0x0606, "ARABIC-INDIC CUBE ROOT"},
    {0x0607, "ARABIC-INDIC FOURTH ROOT"},
    {0x0608, "ARABIC RAY"},
    {0x0609, "ARABIC-INDIC PER MILLE SIGN"},
    {0x060A, "ARABIC-INDIC PER TEN THOUSAND SIGN"},
    {0x060B, "AFGHANI SIGN"},
    {0x060C, "ARABIC COMMA"},
    {0x060D, "ARABIC DATE SEPARATOR"},
    {0x060E, "ARABIC POETIC VERSE SIGN"},
    {0x060F, "ARABIC SIGN MISRA"},
    {0x0610, "ARABIC SIGN SALLALLAHOU ALAYHE WASSALLAM"},
    {0x0611, "ARABIC SIGN ALAYHE ASSALLAM"},
    {0x0612, "ARABIC SIGN RAHMATULLAH ALAYHE"},
    {0x0613, "ARABIC SIGN RADI ALLAHOU ANHU"},
    {0x0614, "ARABIC SIGN TAKHALLUS"},
    {0x0615, "ARABIC SMALL HIGH TAH"},
    {0x0616, "ARABIC SMALL HIGH LIGATURE ALEF WITH LAM WITH YEH"},
    {0x0617, "ARABIC SMALL HIGH ZAIN"},
    {0x0618, "ARABIC SMALL FATHA"},
    {0x0619, "ARABIC SMALL DAMMA"},
    {0x061A, "ARABIC SMALL KASRA"},
    {0x061B, "ARABIC SEMICOLON"},
    {0x061C, "ARABIC LETTER MARK"},
    {0x061E, "ARABIC TRIPLE DOT PUNCTUATION MARK"},
    {0x061F, "ARABIC QUESTION MARK"},
    {0x0620, "ARABIC LETTER KASHMIRI YEH"},
    {0x0621, "ARABIC LETTER HAMZA"},
    {0x0622, "ARABIC LETTER ALEF WITH MADDA ABOVE"},
    {0x0623, "ARABIC LETTER ALEF WITH HAMZA ABOVE"},
    {0x0624, "ARABIC LETTER WAW WITH HAMZA ABOVE"},
    {0x0625, "ARABIC LETTER ALEF WITH HAMZA BELOW"},
    {0x0626, "ARABIC LETTER YEH WITH HAMZA ABOVE"},
    {0x0627, "ARABIC LETTER ALEF"},
    {0x0628, "ARABIC LETTER BEH"},
    {0x0629, "ARABIC LETTER TEH MARBUTA"},
    {0x062A, "ARABIC LETTER TEH"},
    {0x062B, "ARABIC LETTER THEH"},
    {0x062C, "ARABIC LETTER JEEM"},
    {0x062D, "ARABIC LETTER HAH"},
    {0x062E, "ARABIC LETTER KHAH"},
    {0x062F, "ARABIC LETTER DAL"},
    {0x0630, "ARABIC LETTER THAL"},
    {0x0631, "ARABIC LETTER REH"},
    {0x0632, "ARABIC LETTER ZAIN"},
    {0x0633, "ARABIC LETTER SEEN"},
    {0x0634, "ARABIC LETTER SHEEN"},
    {0x0635, "ARABIC LETTER SAD"},
    {0x0636, "ARABIC LETTER DAD"},
    {0x0637, "ARABIC LETTER TAH"},
    {0x0638, "ARABIC LETTER ZAH"},
    {0x0639, "ARABIC LETTER AIN"},
    {0x063A, "ARABIC LETTER GHAIN"},
    {0x063B, "ARABIC LETTER KEHEH WITH TWO DOTS ABOVE"},
    {0x063C, "ARABIC LETTER KEHEH WITH THREE DOTS BELOW"},
    {0x063D, "ARABIC LETTER FARSI YEH WITH INVERTED V"},
    {0x063E, "ARABIC LETTER FARSI YEH WITH TWO DOTS ABOVE"},
    {0x063F, "ARABIC LETTER FARSI YEH WITH THREE DOTS ABOVE"},
    {0x0640, "ARABIC TATWEEL"},
    {0x0641, "ARABIC LETTER FEH"},
    {0x0642, "ARABIC LETTER QAF"},
    {0x0643, "ARABIC LETTER KAF"},
    {0x0644, "ARABIC LETTER LAM"},
    {0x0645, "ARABIC LETTER MEEM"},
    {0x0646, "ARABIC LETTER NOON"},
    {0x0647, "ARABIC LETTER HEH"},
    {0x0648, "ARABIC LETTER WAW"},
    {0x0649, "ARABIC LETTER ALEF MAKSURA"},
    {0x064A, "ARABIC LETTER YEH"},
    {0x064B, "ARABIC FATHATAN"},
    {0x064C, "ARABIC DAMMATAN"},
    {0x064D, "ARABIC KASRATAN"},
    {0x064E, "ARABIC FATHA"},
    {0x064F, "ARABIC DAMMA"},
    {0x0650, "ARABIC KASRA"},
    {0x0651, "ARABIC SHADDA"},
    {0x0652, "ARABIC SUKUN"},
    {0x0653, "ARABIC MADDAH ABOVE"},
    {0x0654, "ARABIC HAMZA ABOVE"},
    {0x0655, "ARABIC HAMZA BELOW"},
    {0x0656, "ARABIC SUBSCRIPT ALEF"},
    {0x0657, "ARABIC INVERTED DAMMA"},
    {0x0658, "ARABIC MARK NOON GHUNNA"},
    {0x0659, "ARABIC ZWARAKAY"},
    {0x065A, "ARABIC VOWEL SIGN SMALL V ABOVE"},
    {0x065B, "ARABIC VOWEL SIGN INVERTED SMALL V ABOVE"},
    {0x065C, "ARABIC VOWEL SIGN DOT BELOW"},
    {0x065D, "ARABIC REVERSED DAMMA"},
    {0x065E, "ARABIC FATHA WITH TWO DOTS"},
    {0x065F, "ARABIC WAVY HAMZA BELOW"},
    {0x0660, "ARABIC-INDIC DIGIT ZERO"},
    {0x0661, "ARABIC-INDIC DIGIT ONE"},
    {0x0662, "ARABIC-INDIC DIGIT TWO"},
    {0x0663, "ARABIC-INDIC DIGIT THREE"},
    {0x0664, "ARABIC-INDIC DIGIT FOUR"},
    {0x0665, "ARABIC-INDIC DIGIT FIVE"},
    {0x0666, "ARABIC-INDIC DIGIT SIX"},
    {0x0667, "ARABIC-INDIC DIGIT SEVEN"},
    {0x0668, "ARABIC-INDIC DIGIT EIGHT"},
    {0x0669, "ARABIC-INDIC DIGIT NINE"},
    {0x066A, "ARABIC PERCENT SIGN"},
    {0x066B, "ARABIC DECIMAL SEPARATOR"},
    {0x066C, "ARABIC THOUSANDS SEPARATOR"},
    {0x066D, "ARABIC FIVE POINTED STAR"},
    {0x066E, "ARABIC LETTER DOTLESS BEH"},
    {0x066F, "ARABIC LETTER DOTLESS QAF"},
    {0x0670, "ARABIC LETTER SUPERSCRIPT ALEF"},
    {0x0671, "ARABIC LETTER ALEF WASLA"},
    {0x0672, "ARABIC LETTER ALEF WITH WAVY HAMZA ABOVE"},
    {0x0673, "ARABIC LETTER ALEF WITH WAVY HAMZA BELOW"},
    {0x0674, "ARABIC LETTER HIGH HAMZA"},
    {0x0675, "ARABIC LETTER HIGH HAMZA ALEF"},
    {0x0676, "ARABIC LETTER HIGH HAMZA WAW"},
    {0x0677, "ARABIC LETTER U WITH HAMZA ABOVE"},
    {0x0678, "ARABIC LETTER HIGH HAMZA YEH"},
    {0x0679, "ARABIC LETTER TTEH"},
    {0x067A, "ARABIC LETTER TTEHEH"},
    {0x067B, "ARABIC LETTER BEEH"},
    {0x067C, "ARABIC LETTER TEH WITH RING"},
    {0x067D, "ARABIC LETTER TEH WITH THREE DOTS ABOVE DOWNWARDS"},
    {0x067E, "ARABIC LETTER PEH"},
    {0x067F, "ARABIC LETTER TEHEH"},
    {0x0680, "ARABIC LETTER BEHEH"},
    {0x0681, "ARABIC LETTER HAH WITH HAMZA ABOVE"},
    {0x0682, "ARABIC LETTER HAH WITH TWO DOTS VERTICAL ABOVE"},
    {0x0683, "ARABIC LETTER NYEH"},
    {0x0684, "ARABIC LETTER DYEH"},
    {0x0685, "ARABIC LETTER HAH WITH THREE DOTS ABOVE"},
    {0x0686, "ARABIC LETTER TCHEH"},
    {0x0687, "ARABIC LETTER TCHEHEH"},
    {0x0688, "ARABIC LETTER DDAL"},
    {0x0689, "ARABIC LETTER DAL WITH RING"},
    {0x068A, "ARABIC LETTER DAL WITH DOT BELOW"},
    {0x068B, "ARABIC LETTER DAL WITH DOT BELOW AND SMALL TAH"},
    {0x068C, "ARABIC LETTER DAHAL"},
    {0x068D, "ARABIC LETTER DDAHAL"},
    {0x068E, "ARABIC LETTER DUL"},
    {0x068F, "ARABIC LETTER DAL WITH THREE DOTS ABOVE DOWNWARDS"},
    {0x0690, "ARABIC LETTER DAL WITH FOUR DOTS ABOVE"},
    {0x0691, "ARABIC LETTER RREH"},
    {0x0692, "ARABIC LETTER REH WITH SMALL V"},
    {0x0693, "ARABIC LETTER REH WITH RING"},
    {0x0694, "ARABIC LETTER REH WITH DOT BELOW"},
    {0x0695, "ARABIC LETTER REH WITH SMALL V BELOW"},
    {0x0696, "ARABIC LETTER REH WITH DOT BELOW AND DOT ABOVE"},
    {0x0697, "ARABIC LETTER REH WITH TWO DOTS ABOVE"},
    {0x0698, "ARABIC LETTER JEH"},
    {0x0699, "ARABIC LETTER REH WITH FOUR DOTS ABOVE"},
    {0x069A, "ARABIC LETTER SEEN WITH DOT BELOW AND DOT ABOVE"},
    {0x069B, "ARABIC LETTER SEEN WITH THREE DOTS BELOW"},
    {0x069C, "ARABIC LETTER SEEN WITH THREE DOTS BELOW AND THREE DOTS ABOVE"},
    {0x069D, "ARABIC LETTER SAD WITH TWO DOTS BELOW"},
    {0x069E, "ARABIC LETTER SAD WITH THREE DOTS ABOVE"},
    {0x069F, "ARABIC LETTER TAH WITH THREE DOTS ABOVE"},
    {0x06A0, "ARABIC LETTER AIN WITH THREE DOTS ABOVE"},
    {0x06A1, "ARABIC LETTER DOTLESS FEH"},
    {0x06A2, "ARABIC LETTER FEH WITH DOT MOVED BELOW"},
    {0x06A3, "ARABIC LETTER FEH WITH DOT BELOW"},
    {0x06A4, "ARABIC LETTER VEH"},
    {0x06A5, "ARABIC LETTER FEH WITH THREE DOTS BELOW"},
    {0x06A6, "ARABIC LETTER PEHEH"},
    {0x06A7, "ARABIC LETTER QAF WITH DOT ABOVE"},
    {0x06A8, "ARABIC LETTER QAF WITH THREE DOTS ABOVE"},
    {0x06A9, "ARABIC LETTER KEHEH"},
    {0x06AA, "ARABIC LETTER SWASH KAF"},
    {0x06AB, "ARABIC LETTER KAF WITH RING"},
    {0x06AC, "ARABIC LETTER KAF WITH DOT ABOVE"},
    {0x06AD, "ARABIC LETTER NG"},
    {0x06AE, "ARABIC LETTER KAF WITH THREE DOTS BELOW"},
    {0x06AF, "ARABIC LETTER GAF"},
    {0x06B0, "ARABIC LETTER GAF WITH RING"},
    {0x06B1, "ARABIC LETTER NGOEH"},
    {0x06B2, "ARABIC LETTER GAF WITH TWO DOTS BELOW"},
    {0x06B3, "ARABIC LETTER GUEH"},
    {0x06B4, "ARABIC LETTER GAF WITH THREE DOTS ABOVE"},
    {0x06B5, "ARABIC LETTER LAM WITH SMALL V"},
    {0x06B6, "ARABIC LETTER LAM WITH DOT ABOVE"},
    {0x06B7, "ARABIC LETTER LAM WITH THREE DOTS ABOVE"},
    {0x06B8, "ARABIC LETTER LAM WITH THREE DOTS BELOW"},
    {0x06B9, "ARABIC LETTER NOON WITH DOT BELOW"},
    {0x06BA, "ARABIC LETTER NOON GHUNNA"},
    {0x06BB, "ARABIC LETTER RNOON"},
    {0x06BC, "ARABIC LETTER NOON WITH RING"},
    {0x06BD, "ARABIC LETTER NOON WITH THREE DOTS ABOVE"},
    {0x06BE, "ARABIC LETTER HEH DOACHASHMEE"},
    {0x06BF, "ARABIC LETTER TCHEH WITH DOT ABOVE"},
    {0x06C0, "ARABIC LETTER HEH WITH YEH ABOVE"},
    {0x06C1, "ARABIC LETTER HEH GOAL"},
    {0x06C2, "ARABIC LETTER HEH GOAL WITH HAMZA ABOVE"},
    {0x06C3, "ARABIC LETTER TEH MARBUTA GOAL"},
    {0x06C4, "ARABIC LETTER WAW WITH RING"},
    {0x06C5, "ARABIC LETTER KIRGHIZ OE"},
    {0x06C6, "ARABIC LETTER OE"},
    {0x06C7, "ARABIC LETTER U"},
    {0x06C8, "ARABIC LETTER YU"},
    {0x06C9, "ARABIC LETTER KIRGHIZ YU"},
    {0x06CA, "ARABIC LETTER WAW WITH TWO DOTS ABOVE"},
    {0x06CB, "ARABIC LETTER VE"},
    {0x06CC, "ARABIC LETTER FARSI YEH"},
    {0x06CD, "ARABIC LETTER YEH WITH TAIL"},
    {0x06CE, "ARABIC LETTER YEH WITH SMALL V"},
    {0x06CF, "ARABIC LETTER WAW WITH DOT ABOVE"},
    {0x06D0, "ARABIC LETTER E"},
    {0x06D1, "ARABIC LETTER YEH WITH THREE DOTS BELOW"},
    {0x06D2, "ARABIC LETTER YEH BARREE"},
    {0x06D3, "ARABIC LETTER YEH BARREE WITH HAMZA ABOVE"},
    {0x06D4, "ARABIC FULL STOP"},
    {0x06D5, "ARABIC LETTER AE"},
    {0x06D6, "ARABIC SMALL HIGH LIGATURE SAD WITH LAM WITH ALEF MAKSURA"},
    {0x06D7, "ARABIC SMALL HIGH LIGATURE QAF WITH LAM WITH ALEF MAKSURA"},
    {0x06D8, "ARABIC SMALL HIGH MEEM INITIAL FORM"},
    {0x06D9, "ARABIC SMALL HIGH LAM ALEF"},
    {0x06DA, "ARABIC SMALL HIGH JEEM"},
    {0x06DB, "ARABIC SMALL HIGH THREE DOTS"},
    {0x06DC, "ARABIC SMALL HIGH SEEN"},
    {0x06DD, "ARABIC END OF AYAH"},
    {0x06DE, "ARABIC START OF RUB EL HIZB"},
    {0x06DF, "ARABIC SMALL HIGH ROUNDED ZERO"},
    {0x06E0, "ARABIC SMALL HIGH UPRIGHT RECTANGULAR ZERO"},
    {0x06E1, "ARABIC SMALL HIGH DOTLESS HEAD OF KHAH"},
    {0x06E2, "ARABIC SMALL HIGH MEEM ISOLATED FORM"},
    {0x06E3, "ARABIC SMALL LOW SEEN"},
    {0x06E4, "ARABIC SMALL HIGH MADDA"},
    {0x06E5, "ARABIC SMALL WAW"},
    {0x06E6, "ARABIC SMALL YEH"},
    {0x06E7, "ARABIC SMALL HIGH YEH"},
    {0x06E8, "ARABIC SMALL HIGH NOON"},
    {0x06E9, "ARABIC PLACE OF SAJDAH"},
    {0x06EA, "ARABIC EMPTY CENTRE LOW STOP"},
    {0x06EB, "ARABIC EMPTY CENTRE HIGH STOP"},
    {0x06EC, "ARABIC ROUNDED HIGH STOP WITH FILLED CENTRE"},
    {0x06ED, "ARABIC SMALL LOW MEEM"},
    {0x06EE, "ARABIC LETTER DAL WITH INVERTED V"},
    {0x06EF, "ARABIC LETTER REH WITH INVERTED V"},
    {0x06F0, "EXTENDED ARABIC-INDIC DIGIT ZERO"},
    {0x06F1, "EXTENDED ARABIC-INDIC DIGIT ONE"},
    {0x06F2, "EXTENDED ARABIC-INDIC DIGIT TWO"},
    {0x06F3, "EXTENDED ARABIC-INDIC DIGIT THREE"},
    {0x06F4, "EXTENDED ARABIC-INDIC DIGIT FOUR"},
    {0x06F5, "EXTENDED ARABIC-INDIC DIGIT FIVE"},
    {0x06F6, "EXTENDED ARABIC-INDIC DIGIT SIX"},
    {0x06F7, "EXTENDED ARABIC-INDIC DIGIT SEVEN"},
    {0x06F8, "EXTENDED ARABIC-INDIC DIGIT EIGHT"},
    {0x06F9, "EXTENDED ARABIC-INDIC DIGIT NINE"},
    {0x06FA, "ARABIC LETTER SHEEN WITH DOT BELOW"},
    {0x06FB, "ARABIC LETTER DAD WITH DOT BELOW"},
    {0x06FC, "ARABIC LETTER GHAIN WITH DOT BELOW"},
    {0x06FD, "ARABIC SIGN SINDHI AMPERSAND"},
    {0x06FE, "ARABIC SIGN SINDHI POSTPOSITION MEN"},
    {0x06FF, "ARABIC LETTER HEH WITH INVERTED V"},
    {0x0750, "ARABIC LETTER BEH WITH THREE DOTS HORIZONTALLY BELOW"},
    {0x0751, "ARABIC LETTER BEH WITH DOT BELOW AND THREE DOTS ABOVE"},
    {0x0752, "ARABIC LETTER BEH WITH THREE DOTS POINTING UPWARDS BELOW"},
    {0x0753, "ARABIC LETTER BEH WITH THREE DOTS POINTING UPWARDS BELOW AND TWO DOTS ABOVE"},
    {0x0754, "ARABIC LETTER BEH WITH TWO DOTS BELOW AND DOT ABOVE"},
    {0x0755, "ARABIC LETTER BEH WITH INVERTED SMALL V BELOW"},
    {0x0756, "ARABIC LETTER BEH WITH SMALL V"},
    {0x0757, "ARABIC LETTER HAH WITH TWO DOTS ABOVE"},
    {0x0758, "ARABIC LETTER HAH WITH THREE DOTS POINTING UPWARDS BELOW"},
    {0x0759, "ARABIC LETTER DAL WITH TWO DOTS VERTICALLY BELOW AND SMALL TAH"},
    {0x075A, "ARABIC LETTER DAL WITH INVERTED SMALL V BELOW"},
    {0x075B, "ARABIC LETTER REH WITH STROKE"},
    {0x075C, "ARABIC LETTER SEEN WITH FOUR DOTS ABOVE"},
    {0x075D, "ARABIC LETTER AIN WITH TWO DOTS ABOVE"},
    {0x075E, "ARABIC LETTER AIN WITH THREE DOTS POINTING DOWNWARDS ABOVE"},
    {0x075F, "ARABIC LETTER AIN WITH TWO DOTS VERTICALLY ABOVE"},
    {0x0760, "ARABIC LETTER FEH WITH TWO DOTS BELOW"},
    {0x0761, "ARABIC LETTER FEH WITH THREE DOTS POINTING UPWARDS BELOW"},
    {0x0762, "ARABIC LETTER KEHEH WITH DOT ABOVE"},
    {0x0763, "ARABIC LETTER KEHEH WITH THREE DOTS ABOVE"},
    {0x0764, "ARABIC LETTER KEHEH WITH THREE DOTS POINTING UPWARDS BELOW"},
    {0x0765, "ARABIC LETTER MEEM WITH DOT ABOVE"},
    {0x0766, "ARABIC LETTER MEEM WITH DOT BELOW"},
    {0x0767, "ARABIC LETTER NOON WITH TWO DOTS BELOW"},
    {0x0768, "ARABIC LETTER NOON WITH SMALL TAH"},
    {0x0769, "ARABIC LETTER NOON WITH SMALL V"},
    {0x076A, "ARABIC LETTER LAM WITH BAR"},
    {0x076B, "ARABIC LETTER REH WITH TWO DOTS VERTICALLY ABOVE"},
    {0x076C, "ARABIC LETTER REH WITH HAMZA ABOVE"},
    {0x076D, "ARABIC LETTER SEEN WITH TWO DOTS VERTICALLY ABOVE"},
    {0x076E, "ARABIC LETTER HAH WITH SMALL ARABIC LETTER TAH BELOW"},
    {0x076F, "ARABIC LETTER HAH WITH SMALL ARABIC LETTER TAH AND TWO DOTS"},
    {0x0770, "ARABIC LETTER SEEN WITH SMALL ARABIC LETTER TAH AND TWO DOTS"},
    {0x0771, "ARABIC LETTER REH WITH SMALL ARABIC LETTER TAH AND TWO DOTS"},
    {0x0772, "ARABIC LETTER HAH WITH SMALL ARABIC LETTER TAH ABOVE"},
    {0x0773, "ARABIC LETTER ALEF WITH EXTENDED ARABIC-INDIC DIGIT TWO ABOVE"},
    {0x0774, "ARABIC LETTER ALEF WITH EXTENDED ARABIC-INDIC DIGIT THREE ABOVE"},
    {0x0775, "ARABIC LETTER FARSI YEH WITH EXTENDED ARABIC-INDIC DIGIT TWO ABOVE"},
    {0x0776, "ARABIC LETTER FARSI YEH WITH EXTENDED ARABIC-INDIC DIGIT THREE ABOVE"},
    {0x0777, "ARABIC LETTER FARSI YEH WITH EXTENDED ARABIC-INDIC DIGIT FOUR BELOW"},
    {0x0778, "ARABIC LETTER WAW WITH EXTENDED ARABIC-INDIC DIGIT TWO ABOVE"},
    {0x0779, "ARABIC LETTER WAW WITH EXTENDED ARABIC-INDIC DIGIT THREE ABOVE"},
    {0x077A, "ARABIC LETTER YEH BARREE WITH EXTENDED ARABIC-INDIC DIGIT TWO ABOVE"},
    {0x077B, "ARABIC LETTER YEH BARREE WITH EXTENDED ARABIC-INDIC DIGIT THREE ABOVE"},
    {0x077C, "ARABIC LETTER HAH WITH EXTENDED ARABIC-INDIC DIGIT FOUR BELOW"},
    {0x077D, "ARABIC LETTER SEEN WITH EXTENDED ARABIC-INDIC DIGIT FOUR ABOVE"},
    {0x077E, "ARABIC LETTER SEEN WITH INVERTED V"},
    {0x077F, "ARABIC LETTER KAF WITH TWO DOTS ABOVE"},
    {0x08A0, "ARABIC LETTER BEH WITH SMALL V BELOW"},
    {0x08A1, "ARABIC LETTER BEH WITH HAMZA ABOVE"},
    {0x08A2, "ARABIC LETTER JEEM WITH TWO DOTS ABOVE"},
    {0x08A3, "ARABIC LETTER TAH WITH TWO DOTS ABOVE"},
    {0x08A4, "ARABIC LETTER FEH WITH DOT BELOW AND THREE DOTS ABOVE"},
    {0x08A5, "ARABIC LETTER QAF WITH DOT BELOW"},
    {0x08A6, "ARABIC LETTER LAM WITH DOUBLE BAR"},
    {0x08A7, "ARABIC LETTER MEEM WITH THREE DOTS ABOVE"},
    {0x08A8, "ARABIC LETTER YEH WITH TWO DOTS BELOW AND HAMZA ABOVE"},
    {0x08A9, "ARABIC LETTER YEH WITH TWO DOTS BELOW AND DOT ABOVE"},
    {0x08AA, "ARABIC LETTER REH WITH LOOP"},
    {0x08AB, "ARABIC LETTER WAW WITH DOT WITHIN"},
    {0x08AC, "ARABIC LETTER ROHINGYA YEH"},
    {0x08AD, "ARABIC LETTER LOW ALEF"},
    {0x08AE, "ARABIC LETTER DAL WITH THREE DOTS BELOW"},
    {0x08AF, "ARABIC LETTER SAD WITH THREE DOTS BELOW"},
    {0x08B0, "ARABIC LETTER GAF WITH INVERTED STROKE"},
    {0x08B1, "ARABIC LETTER STRAIGHT WAW"},
    {0x08B2, "ARABIC LETTER ZAIN WITH INVERTED V ABOVE"},
    {0x08B3, "ARABIC LETTER AIN WITH THREE DOTS BELOW"},
    {0x08B4, "ARABIC LETTER KAF WITH DOT BELOW"},
    {0x08B6, "ARABIC LETTER BEH WITH SMALL MEEM ABOVE"},
    {0x08B7, "ARABIC LETTER PEH WITH SMALL MEEM ABOVE"},
    {0x08B8, "ARABIC LETTER TEH WITH SMALL TEH ABOVE"},
    {0x08B9, "ARABIC LETTER REH WITH SMALL NOON ABOVE"},
    {0x08BA, "ARABIC LETTER YEH WITH TWO DOTS BELOW AND SMALL NOON ABOVE"},
    {0x08BB, "ARABIC LETTER AFRICAN FEH"},
    {0x08BC, "ARABIC LETTER AFRICAN QAF"},
    {0x08BD, "ARABIC LETTER AFRICAN NOON"},
    {0x08BE, "ARABIC LETTER PEH WITH SMALL V"},
    {0x08BF, "ARABIC LETTER TEH WITH SMALL V"},
    {0x08C0, "ARABIC LETTER TTEH WITH SMALL V"},
    {0x08C1, "ARABIC LETTER TCHEH WITH SMALL V"},
    {0x08C2, "ARABIC LETTER KEHEH WITH SMALL V"},
    {0x08C3, "ARABIC LETTER GHAIN WITH THREE DOTS ABOVE"},
    {0x08C4, "ARABIC LETTER AFRICAN QAF WITH THREE DOTS ABOVE"},
    {0x08C5, "ARABIC LETTER JEEM WITH THREE DOTS ABOVE"},
    {0x08C6, "ARABIC LETTER JEEM WITH THREE DOTS BELOW"},
    {0x08C7, "ARABIC LETTER LAM WITH SMALL ARABIC LETTER TAH ABOVE"},
    {0x08D3, "ARABIC SMALL LOW WAW"},
    {0x08D4, "ARABIC SMALL HIGH WORD AR-RUB"},
    {0x08D5, "ARABIC SMALL HIGH SAD"},
    {0x08D6, "ARABIC SMALL HIGH AIN"},
    {0x08D7, "ARABIC SMALL HIGH QAF"},
    {0x08D8, "ARABIC SMALL HIGH NOON WITH KASRA"},
    {0x08D9, "ARABIC SMALL LOW NOON WITH KASRA"},
    {0x08DA, "ARABIC SMALL HIGH WORD ATH-THALATHA"},
    {0x08DB, "ARABIC SMALL HIGH WORD AS-SAJDA"},
    {0x08DC, "ARABIC SMALL HIGH WORD AN-NISF"},
    {0x08DD, "ARABIC SMALL HIGH WORD SAKTA"},
    {0x08DE, "ARABIC SMALL HIGH WORD QIF"},
    {0x08DF, "ARABIC SMALL HIGH WORD WAQFA"},
    {0x08E0, "ARABIC SMALL HIGH FOOTNOTE MARKER"},
    {0x08E1, "ARABIC SMALL HIGH SIGN SAFHA"},
    {0x08E2, "ARABIC DISPUTED END OF AYAH"},
    {0x08E3, "ARABIC TURNED DAMMA BELOW"},
    {0x08E4, "ARABIC CURLY FATHA"},
    {0x08E5, "ARABIC CURLY DAMMA"},
    {0x08E6, "ARABIC CURLY KASRA"},
    {0x08E7, "ARABIC CURLY FATHATAN"},
    {0x08E8, "ARABIC CURLY DAMMATAN"},
    {0x08E9, "ARABIC CURLY KASRATAN"},
    {0x08EA, "ARABIC TONE ONE DOT ABOVE"},
    {0x08EB, "ARABIC TONE TWO DOTS ABOVE"},
    {0x08EC, "ARABIC TONE LOOP ABOVE"},
    {0x08ED, "ARABIC TONE ONE DOT BELOW"},
    {0x08EE, "ARABIC TONE TWO DOTS BELOW"},
    {0x08EF, "ARABIC TONE LOOP BELOW"},
    {0x08F0, "ARABIC OPEN FATHATAN"},
    {0x08F1, "ARABIC OPEN DAMMATAN"},
    {0x08F2, "ARABIC OPEN KASRATAN"},
    {0x08F3, "ARABIC SMALL HIGH WAW"},
    {0x08F4, "ARABIC FATHA WITH RING"},
    {0x08F5, "ARABIC FATHA WITH DOT ABOVE"},
    {0x08F6, "ARABIC KASRA WITH DOT BELOW"},
    {0x08F7, "ARABIC LEFT ARROWHEAD ABOVE"},
    {0x08F8, "ARABIC RIGHT ARROWHEAD ABOVE"},
    {0x08F9, "ARABIC LEFT ARROWHEAD BELOW"},
    {0x08FA, "ARABIC RIGHT ARROWHEAD BELOW"},
    {0x08FB, "ARABIC DOUBLE RIGHT ARROWHEAD ABOVE"},
    {0x08FC, "ARABIC DOUBLE RIGHT ARROWHEAD ABOVE WITH DOT"},
    {0x08FD, "ARABIC RIGHT ARROWHEAD ABOVE WITH DOT"},
    {0x08FE, "ARABIC DAMMA WITH DOT"},
    {0x08FF, "ARABIC MARK SIDEWAYS NOON GHUNNA"},
    {0x2000, "EN QUAD"},
    {0x2001, "EM QUAD"},
    {0x2002, "EN SPACE"},
    {0x2003, "EM SPACE"},
    {0x2004, "THREE-PER-EM SPACE"},
    {0x2005, "FOUR-PER-EM SPACE"},
    {0x2006, "SIX-PER-EM SPACE"},
    {0x2007, "FIGURE SPACE"},
    {0x2008, "PUNCTUATION SPACE"},
    {0x2009, "THIN SPACE"},
    {0x200A, "HAIR SPACE"},
    {0x200B, "ZERO WIDTH SPACE"},
    {0x200C, "ZERO WIDTH NON-JOINER"},
    {0x200D, "ZERO WIDTH JOINER"},
    {0x200E, "LEFT-TO-RIGHT MARK"},
    {0x200F, "RIGHT-TO-LEFT MARK"},
    {0x2010, "HYPHEN"},
    {0x2011, "NON-BREAKING HYPHEN"},
    {0x2012, "FIGURE DASH"},
    {0x2013, "EN DASH"},
    {0x2014, "EM DASH"},
    {0x2015, "HORIZONTAL BAR"},
    {0x2016, "DOUBLE VERTICAL LINE"},
    {0x2017, "DOUBLE LOW LINE"},
    {0x2018, "LEFT SINGLE QUOTATION MARK"},
    {0x2019, "RIGHT SINGLE QUOTATION MARK"},
    {0x201A, "SINGLE LOW-9 QUOTATION MARK"},
    {0x201B, "SINGLE HIGH-REVERSED-9 QUOTATION MARK"},
    {0x201C, "LEFT DOUBLE QUOTATION MARK"},
    {0x201D, "RIGHT DOUBLE QUOTATION MARK"},
    {0x201E, "DOUBLE LOW-9 QUOTATION MARK"},
    {0x201F, "DOUBLE HIGH-REVERSED-9 QUOTATION MARK"},
    {0x2020, "DAGGER"},
    {0x2021, "DOUBLE DAGGER"},
    {0x2022, "BULLET"},
    {0x2023, "TRIANGULAR BULLET"},
    {0x2024, "ONE DOT LEADER"},
    {0x2025, "TWO DOT LEADER"},
    {0x2026, "HORIZONTAL ELLIPSIS"},
    {0x2027, "HYPHENATION POINT"},
    {0x2028, "LINE SEPARATOR"},
    {0x2029, "PARAGRAPH SEPARATOR"},
    {0x202A, "LEFT-TO-RIGHT EMBEDDING"},
    {0x202B, "RIGHT-TO-LEFT EMBEDDING"},
    {0x202C, "POP DIRECTIONAL FORMATTING"},
    {0x202D, "LEFT-TO-RIGHT OVERRIDE"},
    {0x202E, "RIGHT-TO-LEFT OVERRIDE"},
    {0x202F, "NARROW NO-BREAK SPACE"},
    {0x2030, "PER MILLE SIGN"},
    {0x2031, "PER TEN THOUSAND SIGN"},
    {0x2032, "PRIME"},
    {0x2033, "DOUBLE PRIME"},
    {0x2034, "TRIPLE PRIME"},
    {0x2035, "REVERSED PRIME"},
    {0x2036, "REVERSED DOUBLE PRIME"},
    {0x2037, "REVERSED TRIPLE PRIME"},
    {0x2038, "CARET"},
    {0x2039, "SINGLE LEFT-POINTING ANGLE QUOTATION MARK"},
    {0x203A, "SINGLE RIGHT-POINTING ANGLE QUOTATION MARK"},
    {0x203B, "REFERENCE MARK"},
    {0x203C, "DOUBLE EXCLAMATION MARK"},
    {0x203D, "INTERROBANG"},
    {0x203E, "OVERLINE"},
    {0x203F, "UNDERTIE"},
    {0x2040, "CHARACTER TIE"},
    {0x2041, "CARET INSERTION POINT"},
    {0x2042, "ASTERISM"},
    {0x2043, "HYPHEN BULLET"},
    {0x2044, "FRACTION SLASH"},
    {0x2045, "LEFT SQUARE BRACKET WITH QUILL"},
    {0x2046, "RIGHT SQUARE BRACKET WITH QUILL"},
    {0x2047, "DOUBLE QUESTION MARK"},
    {0x2048, "QUESTION EXCLAMATION MARK"},
    {0x2049, "EXCLAMATION QUESTION MARK"},
    {0x204A, "TIRONIAN SIGN ET"},
    {0x204B, "REVERSED PILCROW SIGN"},
    {0x204C, "BLACK LEFTWARDS BULLET"},
    {0x204D, "BLACK RIGHTWARDS BULLET"},
    {0x204E, "LOW ASTERISK"},
    {0x204F, "REVERSED SEMICOLON"},
    {0x2050, "CLOSE UP"},
    {0x2051, "TWO ASTERISKS ALIGNED VERTICALLY"},
    {0x2052, "COMMERCIAL MINUS SIGN"},
    {0x2053, "SWUNG DASH"},
    {0x2054, "INVERTED UNDERTIE"},
    {0x2055, "FLOWER PUNCTUATION MARK"},
    {0x2056, "THREE DOT PUNCTUATION"},
    {0x2057, "QUADRUPLE PRIME"},
    {0x2058, "FOUR DOT PUNCTUATION"},
    {0x2059, "FIVE DOT PUNCTUATION"},
    {0x205A, "TWO DOT PUNCTUATION"},
    {0x205B, "FOUR DOT MARK"},
    {0x205C, "DOTTED CROSS"},
    {0x205D, "TRICOLON"},
    {0x205E, "VERTICAL FOUR DOTS"},
    {0x205F, "MEDIUM MATHEMATICAL SPACE"},
    {0x2060, "WORD JOINER"},
    {0x2061, "FUNCTION APPLICATION"},
    {0x2062, "INVISIBLE TIMES"},
    {0x2063, "INVISIBLE SEPARATOR"},
    {0x2064, "INVISIBLE PLUS"},
    {0x2066, "LEFT-TO-RIGHT ISOLATE"},
    {0x2067, "RIGHT-TO-LEFT ISOLATE"},
    {0x2068, "FIRST STRONG ISOLATE"},
    {0x2069, "POP DIRECTIONAL ISOLATE"},
    {0x206A, "INHIBIT SYMMETRIC SWAPPING"},
    {0x206B, "ACTIVATE SYMMETRIC SWAPPING"},
    {0x206C, "INHIBIT ARABIC FORM SHAPING"},
    {0x206D, "ACTIVATE ARABIC FORM SHAPING"},
    {0x206E, "NATIONAL DIGIT SHAPES"},
    {0x206F, "NOMINAL DIGIT SHAPES"},
    {0xFB50, "ARABIC LETTER ALEF WASLA ISOLATED FORM"},
    {0xFB51, "ARABIC LETTER ALEF WASLA FINAL FORM"},
    {0xFB52, "ARABIC LETTER BEEH ISOLATED FORM"},
    {0xFB53, "ARABIC LETTER BEEH FINAL FORM"},
    {0xFB54, "ARABIC LETTER BEEH INITIAL FORM"},
    {0xFB55, "ARABIC LETTER BEEH MEDIAL FORM"},
    {0xFB56, "ARABIC LETTER PEH ISOLATED FORM"},
    {0xFB57, "ARABIC LETTER PEH FINAL FORM"},
    {0xFB58, "ARABIC LETTER PEH INITIAL FORM"},
    {0xFB59, "ARABIC LETTER PEH MEDIAL FORM"},
    {0xFB5A, "ARABIC LETTER BEHEH ISOLATED FORM"},
    {0xFB5B, "ARABIC LETTER BEHEH FINAL FORM"},
    {0xFB5C, "ARABIC LETTER BEHEH INITIAL FORM"},
    {0xFB5D, "ARABIC LETTER BEHEH MEDIAL FORM"},
    {0xFB5E, "ARABIC LETTER TTEHEH ISOLATED FORM"},
    {0xFB5F, "ARABIC LETTER TTEHEH FINAL FORM"},
    {0xFB60, "ARABIC LETTER TTEHEH INITIAL FORM"},
    {0xFB61, "ARABIC LETTER TTEHEH MEDIAL FORM"},
    {0xFB62, "ARABIC LETTER TEHEH ISOLATED FORM"},
    {0xFB63, "ARABIC LETTER TEHEH FINAL FORM"},
    {0xFB64, "ARABIC LETTER TEHEH INITIAL FORM"},
    {0xFB65, "ARABIC LETTER TEHEH MEDIAL FORM"},
    {0xFB66, "ARABIC LETTER TTEH ISOLATED FORM"},
    {0xFB67, "ARABIC LETTER TTEH FINAL FORM"},
    {0xFB68, "ARABIC LETTER TTEH INITIAL FORM"},
    {0xFB69, "ARABIC LETTER TTEH MEDIAL FORM"},
    {0xFB6A, "ARABIC LETTER VEH ISOLATED FORM"},
    {0xFB6B, "ARABIC LETTER VEH FINAL FORM"},
    {0xFB6C, "ARABIC LETTER VEH INITIAL FORM"},
    {0xFB6D, "ARABIC LETTER VEH MEDIAL FORM"},
    {0xFB6E, "ARABIC LETTER PEHEH ISOLATED FORM"},
    {0xFB6F, "ARABIC LETTER PEHEH FINAL FORM"},
    {0xFB70, "ARABIC LETTER PEHEH INITIAL FORM"},
    {0xFB71, "ARABIC LETTER PEHEH MEDIAL FORM"},
    {0xFB72, "ARABIC LETTER DYEH ISOLATED FORM"},
    {0xFB73, "ARABIC LETTER DYEH FINAL FORM"},
    {0xFB74, "ARABIC LETTER DYEH INITIAL FORM"},
    {0xFB75, "ARABIC LETTER DYEH MEDIAL FORM"},
    {0xFB76, "ARABIC LETTER NYEH ISOLATED FORM"},
    {0xFB77, "ARABIC LETTER NYEH FINAL FORM"},
    {0xFB78, "ARABIC LETTER NYEH INITIAL FORM"},
    {0xFB79, "ARABIC LETTER NYEH MEDIAL FORM"},
    {0xFB7A, "ARABIC LETTER TCHEH ISOLATED FORM"},
    {0xFB7B, "ARABIC LETTER TCHEH FINAL FORM"},
    {0xFB7C, "ARABIC LETTER TCHEH INITIAL FORM"},
    {0xFB7D, "ARABIC LETTER TCHEH MEDIAL FORM"},
    {0xFB7E, "ARABIC LETTER TCHEHEH ISOLATED FORM"},
    {0xFB7F, "ARABIC LETTER TCHEHEH FINAL FORM"},
    {0xFB80, "ARABIC LETTER TCHEHEH INITIAL FORM"},
    {0xFB81, "ARABIC LETTER TCHEHEH MEDIAL FORM"},
    {0xFB82, "ARABIC LETTER DDAHAL ISOLATED FORM"},
    {0xFB83, "ARABIC LETTER DDAHAL FINAL FORM"},
    {0xFB84, "ARABIC LETTER DAHAL ISOLATED FORM"},
    {0xFB85, "ARABIC LETTER DAHAL FINAL FORM"},
    {0xFB86, "ARABIC LETTER DUL ISOLATED FORM"},
    {0xFB87, "ARABIC LETTER DUL FINAL FORM"},
    {0xFB88, "ARABIC LETTER DDAL ISOLATED FORM"},
    {0xFB89, "ARABIC LETTER DDAL FINAL FORM"},
    {0xFB8A, "ARABIC LETTER JEH ISOLATED FORM"},
    {0xFB8B, "ARABIC LETTER JEH FINAL FORM"},
    {0xFB8C, "ARABIC LETTER RREH ISOLATED FORM"},
    {0xFB8D, "ARABIC LETTER RREH FINAL FORM"},
    {0xFB8E, "ARABIC LETTER KEHEH ISOLATED FORM"},
    {0xFB8F, "ARABIC LETTER KEHEH FINAL FORM"},
    {0xFB90, "ARABIC LETTER KEHEH INITIAL FORM"},
    {0xFB91, "ARABIC LETTER KEHEH MEDIAL FORM"},
    {0xFB92, "ARABIC LETTER GAF ISOLATED FORM"},
    {0xFB93, "ARABIC LETTER GAF FINAL FORM"},
    {0xFB94, "ARABIC LETTER GAF INITIAL FORM"},
    {0xFB95, "ARABIC LETTER GAF MEDIAL FORM"},
    {0xFB96, "ARABIC LETTER GUEH ISOLATED FORM"},
    {0xFB97, "ARABIC LETTER GUEH FINAL FORM"},
    {0xFB98, "ARABIC LETTER GUEH INITIAL FORM"},
    {0xFB99, "ARABIC LETTER GUEH MEDIAL FORM"},
    {0xFB9A, "ARABIC LETTER NGOEH ISOLATED FORM"},
    {0xFB9B, "ARABIC LETTER NGOEH FINAL FORM"},
    {0xFB9C, "ARABIC LETTER NGOEH INITIAL FORM"},
    {0xFB9D, "ARABIC LETTER NGOEH MEDIAL FORM"},
    {0xFB9E, "ARABIC LETTER NOON GHUNNA ISOLATED FORM"},
    {0xFB9F, "ARABIC LETTER NOON GHUNNA FINAL FORM"},
    {0xFBA0, "ARABIC LETTER RNOON ISOLATED FORM"},
    {0xFBA1, "ARABIC LETTER RNOON FINAL FORM"},
    {0xFBA2, "ARABIC LETTER RNOON INITIAL FORM"},
    {0xFBA3, "ARABIC LETTER RNOON MEDIAL FORM"},
    {0xFBA4, "ARABIC LETTER HEH WITH YEH ABOVE ISOLATED FORM"},
    {0xFBA5, "ARABIC LETTER HEH WITH YEH ABOVE FINAL FORM"},
    {0xFBA6, "ARABIC LETTER HEH GOAL ISOLATED FORM"},
    {0xFBA7, "ARABIC LETTER HEH GOAL FINAL FORM"},
    {0xFBA8, "ARABIC LETTER HEH GOAL INITIAL FORM"},
    {0xFBA9, "ARABIC LETTER HEH GOAL MEDIAL FORM"},
    {0xFBAA, "ARABIC LETTER HEH DOACHASHMEE ISOLATED FORM"},
    {0xFBAB, "ARABIC LETTER HEH DOACHASHMEE FINAL FORM"},
    {0xFBAC, "ARABIC LETTER HEH DOACHASHMEE INITIAL FORM"},
    {0xFBAD, "ARABIC LETTER HEH DOACHASHMEE MEDIAL FORM"},
    {0xFBAE, "ARABIC LETTER YEH BARREE ISOLATED FORM"},
    {0xFBAF, "ARABIC LETTER YEH BARREE FINAL FORM"},
    {0xFBB0, "ARABIC LETTER YEH BARREE WITH HAMZA ABOVE ISOLATED FORM"},
    {0xFBB1, "ARABIC LETTER YEH BARREE WITH HAMZA ABOVE FINAL FORM"},
    {0xFBB2, "ARABIC SYMBOL DOT ABOVE"},
    {0xFBB3, "ARABIC SYMBOL DOT BELOW"},
    {0xFBB4, "ARABIC SYMBOL TWO DOTS ABOVE"},
    {0xFBB5, "ARABIC SYMBOL TWO DOTS BELOW"},
    {0xFBB6, "ARABIC SYMBOL THREE DOTS ABOVE"},
    {0xFBB7, "ARABIC SYMBOL THREE DOTS BELOW"},
    {0xFBB8, "ARABIC SYMBOL THREE DOTS POINTING DOWNWARDS ABOVE"},
    {0xFBB9, "ARABIC SYMBOL THREE DOTS POINTING DOWNWARDS BELOW"},
    {0xFBBA, "ARABIC SYMBOL FOUR DOTS ABOVE"},
    {0xFBBB, "ARABIC SYMBOL FOUR DOTS BELOW"},
    {0xFBBC, "ARABIC SYMBOL DOUBLE VERTICAL BAR BELOW"},
    {0xFBBD, "ARABIC SYMBOL TWO DOTS VERTICALLY ABOVE"},
    {0xFBBE, "ARABIC SYMBOL TWO DOTS VERTICALLY BELOW"},
    {0xFBBF, "ARABIC SYMBOL RING"},
    {0xFBC0, "ARABIC SYMBOL SMALL TAH ABOVE"},
    {0xFBC1, "ARABIC SYMBOL SMALL TAH BELOW"},
    {0xFBD3, "ARABIC LETTER NG ISOLATED FORM"},
    {0xFBD4, "ARABIC LETTER NG FINAL FORM"},
    {0xFBD5, "ARABIC LETTER NG INITIAL FORM"},
    {0xFBD6, "ARABIC LETTER NG MEDIAL FORM"},
    {0xFBD7, "ARABIC LETTER U ISOLATED FORM"},
    {0xFBD8, "ARABIC LETTER U FINAL FORM"},
    {0xFBD9, "ARABIC LETTER OE ISOLATED FORM"},
    {0xFBDA, "ARABIC LETTER OE FINAL FORM"},
    {0xFBDB, "ARABIC LETTER YU ISOLATED FORM"},
    {0xFBDC, "ARABIC LETTER YU FINAL FORM"},
    {0xFBDD, "ARABIC LETTER U WITH HAMZA ABOVE ISOLATED FORM"},
    {0xFBDE, "ARABIC LETTER VE ISOLATED FORM"},
    {0xFBDF, "ARABIC LETTER VE FINAL FORM"},
    {0xFBE0, "ARABIC LETTER KIRGHIZ OE ISOLATED FORM"},
    {0xFBE1, "ARABIC LETTER KIRGHIZ OE FINAL FORM"},
    {0xFBE2, "ARABIC LETTER KIRGHIZ YU ISOLATED FORM"},
    {0xFBE3, "ARABIC LETTER KIRGHIZ YU FINAL FORM"},
    {0xFBE4, "ARABIC LETTER E ISOLATED FORM"},
    {0xFBE5, "ARABIC LETTER E FINAL FORM"},
    {0xFBE6, "ARABIC LETTER E INITIAL FORM"},
    {0xFBE7, "ARABIC LETTER E MEDIAL FORM"},
    {0xFBE8, "ARABIC LETTER UIGHUR KAZAKH KIRGHIZ ALEF MAKSURA INITIAL FORM"},
    {0xFBE9, "ARABIC LETTER UIGHUR KAZAKH KIRGHIZ ALEF MAKSURA MEDIAL FORM"},
    {0xFBEA, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH ALEF ISOLATED FORM"},
    {0xFBEB, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH ALEF FINAL FORM"},
    {0xFBEC, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH AE ISOLATED FORM"},
    {0xFBED, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH AE FINAL FORM"},
    {0xFBEE, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH WAW ISOLATED FORM"},
    {0xFBEF, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH WAW FINAL FORM"},
    {0xFBF0, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH U ISOLATED FORM"},
    {0xFBF1, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH U FINAL FORM"},
    {0xFBF2, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH OE ISOLATED FORM"},
    {0xFBF3, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH OE FINAL FORM"},
    {0xFBF4, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH YU ISOLATED FORM"},
    {0xFBF5, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH YU FINAL FORM"},
    {0xFBF6, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH E ISOLATED FORM"},
    {0xFBF7, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH E FINAL FORM"},
    {0xFBF8, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH E INITIAL FORM"},
    {0xFBF9, "ARABIC LIGATURE UIGHUR KIRGHIZ YEH WITH HAMZA ABOVE WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFBFA, "ARABIC LIGATURE UIGHUR KIRGHIZ YEH WITH HAMZA ABOVE WITH ALEF MAKSURA FINAL FORM"},
    {0xFBFB, "ARABIC LIGATURE UIGHUR KIRGHIZ YEH WITH HAMZA ABOVE WITH ALEF MAKSURA INITIAL FORM"},
    {0xFBFC, "ARABIC LETTER FARSI YEH ISOLATED FORM"},
    {0xFBFD, "ARABIC LETTER FARSI YEH FINAL FORM"},
    {0xFBFE, "ARABIC LETTER FARSI YEH INITIAL FORM"},
    {0xFBFF, "ARABIC LETTER FARSI YEH MEDIAL FORM"},
    {0xFC00, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH JEEM ISOLATED FORM"},
    {0xFC01, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH HAH ISOLATED FORM"},
    {0xFC02, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH MEEM ISOLATED FORM"},
    {0xFC03, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC04, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH YEH ISOLATED FORM"},
    {0xFC05, "ARABIC LIGATURE BEH WITH JEEM ISOLATED FORM"},
    {0xFC06, "ARABIC LIGATURE BEH WITH HAH ISOLATED FORM"},
    {0xFC07, "ARABIC LIGATURE BEH WITH KHAH ISOLATED FORM"},
    {0xFC08, "ARABIC LIGATURE BEH WITH MEEM ISOLATED FORM"},
    {0xFC09, "ARABIC LIGATURE BEH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC0A, "ARABIC LIGATURE BEH WITH YEH ISOLATED FORM"},
    {0xFC0B, "ARABIC LIGATURE TEH WITH JEEM ISOLATED FORM"},
    {0xFC0C, "ARABIC LIGATURE TEH WITH HAH ISOLATED FORM"},
    {0xFC0D, "ARABIC LIGATURE TEH WITH KHAH ISOLATED FORM"},
    {0xFC0E, "ARABIC LIGATURE TEH WITH MEEM ISOLATED FORM"},
    {0xFC0F, "ARABIC LIGATURE TEH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC10, "ARABIC LIGATURE TEH WITH YEH ISOLATED FORM"},
    {0xFC11, "ARABIC LIGATURE THEH WITH JEEM ISOLATED FORM"},
    {0xFC12, "ARABIC LIGATURE THEH WITH MEEM ISOLATED FORM"},
    {0xFC13, "ARABIC LIGATURE THEH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC14, "ARABIC LIGATURE THEH WITH YEH ISOLATED FORM"},
    {0xFC15, "ARABIC LIGATURE JEEM WITH HAH ISOLATED FORM"},
    {0xFC16, "ARABIC LIGATURE JEEM WITH MEEM ISOLATED FORM"},
    {0xFC17, "ARABIC LIGATURE HAH WITH JEEM ISOLATED FORM"},
    {0xFC18, "ARABIC LIGATURE HAH WITH MEEM ISOLATED FORM"},
    {0xFC19, "ARABIC LIGATURE KHAH WITH JEEM ISOLATED FORM"},
    {0xFC1A, "ARABIC LIGATURE KHAH WITH HAH ISOLATED FORM"},
    {0xFC1B, "ARABIC LIGATURE KHAH WITH MEEM ISOLATED FORM"},
    {0xFC1C, "ARABIC LIGATURE SEEN WITH JEEM ISOLATED FORM"},
    {0xFC1D, "ARABIC LIGATURE SEEN WITH HAH ISOLATED FORM"},
    {0xFC1E, "ARABIC LIGATURE SEEN WITH KHAH ISOLATED FORM"},
    {0xFC1F, "ARABIC LIGATURE SEEN WITH MEEM ISOLATED FORM"},
    {0xFC20, "ARABIC LIGATURE SAD WITH HAH ISOLATED FORM"},
    {0xFC21, "ARABIC LIGATURE SAD WITH MEEM ISOLATED FORM"},
    {0xFC22, "ARABIC LIGATURE DAD WITH JEEM ISOLATED FORM"},
    {0xFC23, "ARABIC LIGATURE DAD WITH HAH ISOLATED FORM"},
    {0xFC24, "ARABIC LIGATURE DAD WITH KHAH ISOLATED FORM"},
    {0xFC25, "ARABIC LIGATURE DAD WITH MEEM ISOLATED FORM"},
    {0xFC26, "ARABIC LIGATURE TAH WITH HAH ISOLATED FORM"},
    {0xFC27, "ARABIC LIGATURE TAH WITH MEEM ISOLATED FORM"},
    {0xFC28, "ARABIC LIGATURE ZAH WITH MEEM ISOLATED FORM"},
    {0xFC29, "ARABIC LIGATURE AIN WITH JEEM ISOLATED FORM"},
    {0xFC2A, "ARABIC LIGATURE AIN WITH MEEM ISOLATED FORM"},
    {0xFC2B, "ARABIC LIGATURE GHAIN WITH JEEM ISOLATED FORM"},
    {0xFC2C, "ARABIC LIGATURE GHAIN WITH MEEM ISOLATED FORM"},
    {0xFC2D, "ARABIC LIGATURE FEH WITH JEEM ISOLATED FORM"},
    {0xFC2E, "ARABIC LIGATURE FEH WITH HAH ISOLATED FORM"},
    {0xFC2F, "ARABIC LIGATURE FEH WITH KHAH ISOLATED FORM"},
    {0xFC30, "ARABIC LIGATURE FEH WITH MEEM ISOLATED FORM"},
    {0xFC31, "ARABIC LIGATURE FEH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC32, "ARABIC LIGATURE FEH WITH YEH ISOLATED FORM"},
    {0xFC33, "ARABIC LIGATURE QAF WITH HAH ISOLATED FORM"},
    {0xFC34, "ARABIC LIGATURE QAF WITH MEEM ISOLATED FORM"},
    {0xFC35, "ARABIC LIGATURE QAF WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC36, "ARABIC LIGATURE QAF WITH YEH ISOLATED FORM"},
    {0xFC37, "ARABIC LIGATURE KAF WITH ALEF ISOLATED FORM"},
    {0xFC38, "ARABIC LIGATURE KAF WITH JEEM ISOLATED FORM"},
    {0xFC39, "ARABIC LIGATURE KAF WITH HAH ISOLATED FORM"},
    {0xFC3A, "ARABIC LIGATURE KAF WITH KHAH ISOLATED FORM"},
    {0xFC3B, "ARABIC LIGATURE KAF WITH LAM ISOLATED FORM"},
    {0xFC3C, "ARABIC LIGATURE KAF WITH MEEM ISOLATED FORM"},
    {0xFC3D, "ARABIC LIGATURE KAF WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC3E, "ARABIC LIGATURE KAF WITH YEH ISOLATED FORM"},
    {0xFC3F, "ARABIC LIGATURE LAM WITH JEEM ISOLATED FORM"},
    {0xFC40, "ARABIC LIGATURE LAM WITH HAH ISOLATED FORM"},
    {0xFC41, "ARABIC LIGATURE LAM WITH KHAH ISOLATED FORM"},
    {0xFC42, "ARABIC LIGATURE LAM WITH MEEM ISOLATED FORM"},
    {0xFC43, "ARABIC LIGATURE LAM WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC44, "ARABIC LIGATURE LAM WITH YEH ISOLATED FORM"},
    {0xFC45, "ARABIC LIGATURE MEEM WITH JEEM ISOLATED FORM"},
    {0xFC46, "ARABIC LIGATURE MEEM WITH HAH ISOLATED FORM"},
    {0xFC47, "ARABIC LIGATURE MEEM WITH KHAH ISOLATED FORM"},
    {0xFC48, "ARABIC LIGATURE MEEM WITH MEEM ISOLATED FORM"},
    {0xFC49, "ARABIC LIGATURE MEEM WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC4A, "ARABIC LIGATURE MEEM WITH YEH ISOLATED FORM"},
    {0xFC4B, "ARABIC LIGATURE NOON WITH JEEM ISOLATED FORM"},
    {0xFC4C, "ARABIC LIGATURE NOON WITH HAH ISOLATED FORM"},
    {0xFC4D, "ARABIC LIGATURE NOON WITH KHAH ISOLATED FORM"},
    {0xFC4E, "ARABIC LIGATURE NOON WITH MEEM ISOLATED FORM"},
    {0xFC4F, "ARABIC LIGATURE NOON WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC50, "ARABIC LIGATURE NOON WITH YEH ISOLATED FORM"},
    {0xFC51, "ARABIC LIGATURE HEH WITH JEEM ISOLATED FORM"},
    {0xFC52, "ARABIC LIGATURE HEH WITH MEEM ISOLATED FORM"},
    {0xFC53, "ARABIC LIGATURE HEH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC54, "ARABIC LIGATURE HEH WITH YEH ISOLATED FORM"},
    {0xFC55, "ARABIC LIGATURE YEH WITH JEEM ISOLATED FORM"},
    {0xFC56, "ARABIC LIGATURE YEH WITH HAH ISOLATED FORM"},
    {0xFC57, "ARABIC LIGATURE YEH WITH KHAH ISOLATED FORM"},
    {0xFC58, "ARABIC LIGATURE YEH WITH MEEM ISOLATED FORM"},
    {0xFC59, "ARABIC LIGATURE YEH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFC5A, "ARABIC LIGATURE YEH WITH YEH ISOLATED FORM"},
    {0xFC5B, "ARABIC LIGATURE THAL WITH SUPERSCRIPT ALEF ISOLATED FORM"},
    {0xFC5C, "ARABIC LIGATURE REH WITH SUPERSCRIPT ALEF ISOLATED FORM"},
    {0xFC5D, "ARABIC LIGATURE ALEF MAKSURA WITH SUPERSCRIPT ALEF ISOLATED FORM"},
    {0xFC5E, "ARABIC LIGATURE SHADDA WITH DAMMATAN ISOLATED FORM"},
    {0xFC5F, "ARABIC LIGATURE SHADDA WITH KASRATAN ISOLATED FORM"},
    {0xFC60, "ARABIC LIGATURE SHADDA WITH FATHA ISOLATED FORM"},
    {0xFC61, "ARABIC LIGATURE SHADDA WITH DAMMA ISOLATED FORM"},
    {0xFC62, "ARABIC LIGATURE SHADDA WITH KASRA ISOLATED FORM"},
    {0xFC63, "ARABIC LIGATURE SHADDA WITH SUPERSCRIPT ALEF ISOLATED FORM"},
    {0xFC64, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH REH FINAL FORM"},
    {0xFC65, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH ZAIN FINAL FORM"},
    {0xFC66, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH MEEM FINAL FORM"},
    {0xFC67, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH NOON FINAL FORM"},
    {0xFC68, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH ALEF MAKSURA FINAL FORM"},
    {0xFC69, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH YEH FINAL FORM"},
    {0xFC6A, "ARABIC LIGATURE BEH WITH REH FINAL FORM"},
    {0xFC6B, "ARABIC LIGATURE BEH WITH ZAIN FINAL FORM"},
    {0xFC6C, "ARABIC LIGATURE BEH WITH MEEM FINAL FORM"},
    {0xFC6D, "ARABIC LIGATURE BEH WITH NOON FINAL FORM"},
    {0xFC6E, "ARABIC LIGATURE BEH WITH ALEF MAKSURA FINAL FORM"},
    {0xFC6F, "ARABIC LIGATURE BEH WITH YEH FINAL FORM"},
    {0xFC70, "ARABIC LIGATURE TEH WITH REH FINAL FORM"},
    {0xFC71, "ARABIC LIGATURE TEH WITH ZAIN FINAL FORM"},
    {0xFC72, "ARABIC LIGATURE TEH WITH MEEM FINAL FORM"},
    {0xFC73, "ARABIC LIGATURE TEH WITH NOON FINAL FORM"},
    {0xFC74, "ARABIC LIGATURE TEH WITH ALEF MAKSURA FINAL FORM"},
    {0xFC75, "ARABIC LIGATURE TEH WITH YEH FINAL FORM"},
    {0xFC76, "ARABIC LIGATURE THEH WITH REH FINAL FORM"},
    {0xFC77, "ARABIC LIGATURE THEH WITH ZAIN FINAL FORM"},
    {0xFC78, "ARABIC LIGATURE THEH WITH MEEM FINAL FORM"},
    {0xFC79, "ARABIC LIGATURE THEH WITH NOON FINAL FORM"},
    {0xFC7A, "ARABIC LIGATURE THEH WITH ALEF MAKSURA FINAL FORM"},
    {0xFC7B, "ARABIC LIGATURE THEH WITH YEH FINAL FORM"},
    {0xFC7C, "ARABIC LIGATURE FEH WITH ALEF MAKSURA FINAL FORM"},
    {0xFC7D, "ARABIC LIGATURE FEH WITH YEH FINAL FORM"},
    {0xFC7E, "ARABIC LIGATURE QAF WITH ALEF MAKSURA FINAL FORM"},
    {0xFC7F, "ARABIC LIGATURE QAF WITH YEH FINAL FORM"},
    {0xFC80, "ARABIC LIGATURE KAF WITH ALEF FINAL FORM"},
    {0xFC81, "ARABIC LIGATURE KAF WITH LAM FINAL FORM"},
    {0xFC82, "ARABIC LIGATURE KAF WITH MEEM FINAL FORM"},
    {0xFC83, "ARABIC LIGATURE KAF WITH ALEF MAKSURA FINAL FORM"},
    {0xFC84, "ARABIC LIGATURE KAF WITH YEH FINAL FORM"},
    {0xFC85, "ARABIC LIGATURE LAM WITH MEEM FINAL FORM"},
    {0xFC86, "ARABIC LIGATURE LAM WITH ALEF MAKSURA FINAL FORM"},
    {0xFC87, "ARABIC LIGATURE LAM WITH YEH FINAL FORM"},
    {0xFC88, "ARABIC LIGATURE MEEM WITH ALEF FINAL FORM"},
    {0xFC89, "ARABIC LIGATURE MEEM WITH MEEM FINAL FORM"},
    {0xFC8A, "ARABIC LIGATURE NOON WITH REH FINAL FORM"},
    {0xFC8B, "ARABIC LIGATURE NOON WITH ZAIN FINAL FORM"},
    {0xFC8C, "ARABIC LIGATURE NOON WITH MEEM FINAL FORM"},
    {0xFC8D, "ARABIC LIGATURE NOON WITH NOON FINAL FORM"},
    {0xFC8E, "ARABIC LIGATURE NOON WITH ALEF MAKSURA FINAL FORM"},
    {0xFC8F, "ARABIC LIGATURE NOON WITH YEH FINAL FORM"},
    {0xFC90, "ARABIC LIGATURE ALEF MAKSURA WITH SUPERSCRIPT ALEF FINAL FORM"},
    {0xFC91, "ARABIC LIGATURE YEH WITH REH FINAL FORM"},
    {0xFC92, "ARABIC LIGATURE YEH WITH ZAIN FINAL FORM"},
    {0xFC93, "ARABIC LIGATURE YEH WITH MEEM FINAL FORM"},
    {0xFC94, "ARABIC LIGATURE YEH WITH NOON FINAL FORM"},
    {0xFC95, "ARABIC LIGATURE YEH WITH ALEF MAKSURA FINAL FORM"},
    {0xFC96, "ARABIC LIGATURE YEH WITH YEH FINAL FORM"},
    {0xFC97, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH JEEM INITIAL FORM"},
    {0xFC98, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH HAH INITIAL FORM"},
    {0xFC99, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH KHAH INITIAL FORM"},
    {0xFC9A, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH MEEM INITIAL FORM"},
    {0xFC9B, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH HEH INITIAL FORM"},
    {0xFC9C, "ARABIC LIGATURE BEH WITH JEEM INITIAL FORM"},
    {0xFC9D, "ARABIC LIGATURE BEH WITH HAH INITIAL FORM"},
    {0xFC9E, "ARABIC LIGATURE BEH WITH KHAH INITIAL FORM"},
    {0xFC9F, "ARABIC LIGATURE BEH WITH MEEM INITIAL FORM"},
    {0xFCA0, "ARABIC LIGATURE BEH WITH HEH INITIAL FORM"},
    {0xFCA1, "ARABIC LIGATURE TEH WITH JEEM INITIAL FORM"},
    {0xFCA2, "ARABIC LIGATURE TEH WITH HAH INITIAL FORM"},
    {0xFCA3, "ARABIC LIGATURE TEH WITH KHAH INITIAL FORM"},
    {0xFCA4, "ARABIC LIGATURE TEH WITH MEEM INITIAL FORM"},
    {0xFCA5, "ARABIC LIGATURE TEH WITH HEH INITIAL FORM"},
    {0xFCA6, "ARABIC LIGATURE THEH WITH MEEM INITIAL FORM"},
    {0xFCA7, "ARABIC LIGATURE JEEM WITH HAH INITIAL FORM"},
    {0xFCA8, "ARABIC LIGATURE JEEM WITH MEEM INITIAL FORM"},
    {0xFCA9, "ARABIC LIGATURE HAH WITH JEEM INITIAL FORM"},
    {0xFCAA, "ARABIC LIGATURE HAH WITH MEEM INITIAL FORM"},
    {0xFCAB, "ARABIC LIGATURE KHAH WITH JEEM INITIAL FORM"},
    {0xFCAC, "ARABIC LIGATURE KHAH WITH MEEM INITIAL FORM"},
    {0xFCAD, "ARABIC LIGATURE SEEN WITH JEEM INITIAL FORM"},
    {0xFCAE, "ARABIC LIGATURE SEEN WITH HAH INITIAL FORM"},
    {0xFCAF, "ARABIC LIGATURE SEEN WITH KHAH INITIAL FORM"},
    {0xFCB0, "ARABIC LIGATURE SEEN WITH MEEM INITIAL FORM"},
    {0xFCB1, "ARABIC LIGATURE SAD WITH HAH INITIAL FORM"},
    {0xFCB2, "ARABIC LIGATURE SAD WITH KHAH INITIAL FORM"},
    {0xFCB3, "ARABIC LIGATURE SAD WITH MEEM INITIAL FORM"},
    {0xFCB4, "ARABIC LIGATURE DAD WITH JEEM INITIAL FORM"},
    {0xFCB5, "ARABIC LIGATURE DAD WITH HAH INITIAL FORM"},
    {0xFCB6, "ARABIC LIGATURE DAD WITH KHAH INITIAL FORM"},
    {0xFCB7, "ARABIC LIGATURE DAD WITH MEEM INITIAL FORM"},
    {0xFCB8, "ARABIC LIGATURE TAH WITH HAH INITIAL FORM"},
    {0xFCB9, "ARABIC LIGATURE ZAH WITH MEEM INITIAL FORM"},
    {0xFCBA, "ARABIC LIGATURE AIN WITH JEEM INITIAL FORM"},
    {0xFCBB, "ARABIC LIGATURE AIN WITH MEEM INITIAL FORM"},
    {0xFCBC, "ARABIC LIGATURE GHAIN WITH JEEM INITIAL FORM"},
    {0xFCBD, "ARABIC LIGATURE GHAIN WITH MEEM INITIAL FORM"},
    {0xFCBE, "ARABIC LIGATURE FEH WITH JEEM INITIAL FORM"},
    {0xFCBF, "ARABIC LIGATURE FEH WITH HAH INITIAL FORM"},
    {0xFCC0, "ARABIC LIGATURE FEH WITH KHAH INITIAL FORM"},
    {0xFCC1, "ARABIC LIGATURE FEH WITH MEEM INITIAL FORM"},
    {0xFCC2, "ARABIC LIGATURE QAF WITH HAH INITIAL FORM"},
    {0xFCC3, "ARABIC LIGATURE QAF WITH MEEM INITIAL FORM"},
    {0xFCC4, "ARABIC LIGATURE KAF WITH JEEM INITIAL FORM"},
    {0xFCC5, "ARABIC LIGATURE KAF WITH HAH INITIAL FORM"},
    {0xFCC6, "ARABIC LIGATURE KAF WITH KHAH INITIAL FORM"},
    {0xFCC7, "ARABIC LIGATURE KAF WITH LAM INITIAL FORM"},
    {0xFCC8, "ARABIC LIGATURE KAF WITH MEEM INITIAL FORM"},
    {0xFCC9, "ARABIC LIGATURE LAM WITH JEEM INITIAL FORM"},
    {0xFCCA, "ARABIC LIGATURE LAM WITH HAH INITIAL FORM"},
    {0xFCCB, "ARABIC LIGATURE LAM WITH KHAH INITIAL FORM"},
    {0xFCCC, "ARABIC LIGATURE LAM WITH MEEM INITIAL FORM"},
    {0xFCCD, "ARABIC LIGATURE LAM WITH HEH INITIAL FORM"},
    {0xFCCE, "ARABIC LIGATURE MEEM WITH JEEM INITIAL FORM"},
    {0xFCCF, "ARABIC LIGATURE MEEM WITH HAH INITIAL FORM"},
    {0xFCD0, "ARABIC LIGATURE MEEM WITH KHAH INITIAL FORM"},
    {0xFCD1, "ARABIC LIGATURE MEEM WITH MEEM INITIAL FORM"},
    {0xFCD2, "ARABIC LIGATURE NOON WITH JEEM INITIAL FORM"},
    {0xFCD3, "ARABIC LIGATURE NOON WITH HAH INITIAL FORM"},
    {0xFCD4, "ARABIC LIGATURE NOON WITH KHAH INITIAL FORM"},
    {0xFCD5, "ARABIC LIGATURE NOON WITH MEEM INITIAL FORM"},
    {0xFCD6, "ARABIC LIGATURE NOON WITH HEH INITIAL FORM"},
    {0xFCD7, "ARABIC LIGATURE HEH WITH JEEM INITIAL FORM"},
    {0xFCD8, "ARABIC LIGATURE HEH WITH MEEM INITIAL FORM"},
    {0xFCD9, "ARABIC LIGATURE HEH WITH SUPERSCRIPT ALEF INITIAL FORM"},
    {0xFCDA, "ARABIC LIGATURE YEH WITH JEEM INITIAL FORM"},
    {0xFCDB, "ARABIC LIGATURE YEH WITH HAH INITIAL FORM"},
    {0xFCDC, "ARABIC LIGATURE YEH WITH KHAH INITIAL FORM"},
    {0xFCDD, "ARABIC LIGATURE YEH WITH MEEM INITIAL FORM"},
    {0xFCDE, "ARABIC LIGATURE YEH WITH HEH INITIAL FORM"},
    {0xFCDF, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH MEEM MEDIAL FORM"},
    {0xFCE0, "ARABIC LIGATURE YEH WITH HAMZA ABOVE WITH HEH MEDIAL FORM"},
    {0xFCE1, "ARABIC LIGATURE BEH WITH MEEM MEDIAL FORM"},
    {0xFCE2, "ARABIC LIGATURE BEH WITH HEH MEDIAL FORM"},
    {0xFCE3, "ARABIC LIGATURE TEH WITH MEEM MEDIAL FORM"},
    {0xFCE4, "ARABIC LIGATURE TEH WITH HEH MEDIAL FORM"},
    {0xFCE5, "ARABIC LIGATURE THEH WITH MEEM MEDIAL FORM"},
    {0xFCE6, "ARABIC LIGATURE THEH WITH HEH MEDIAL FORM"},
    {0xFCE7, "ARABIC LIGATURE SEEN WITH MEEM MEDIAL FORM"},
    {0xFCE8, "ARABIC LIGATURE SEEN WITH HEH MEDIAL FORM"},
    {0xFCE9, "ARABIC LIGATURE SHEEN WITH MEEM MEDIAL FORM"},
    {0xFCEA, "ARABIC LIGATURE SHEEN WITH HEH MEDIAL FORM"},
    {0xFCEB, "ARABIC LIGATURE KAF WITH LAM MEDIAL FORM"},
    {0xFCEC, "ARABIC LIGATURE KAF WITH MEEM MEDIAL FORM"},
    {0xFCED, "ARABIC LIGATURE LAM WITH MEEM MEDIAL FORM"},
    {0xFCEE, "ARABIC LIGATURE NOON WITH MEEM MEDIAL FORM"},
    {0xFCEF, "ARABIC LIGATURE NOON WITH HEH MEDIAL FORM"},
    {0xFCF0, "ARABIC LIGATURE YEH WITH MEEM MEDIAL FORM"},
    {0xFCF1, "ARABIC LIGATURE YEH WITH HEH MEDIAL FORM"},
    {0xFCF2, "ARABIC LIGATURE SHADDA WITH FATHA MEDIAL FORM"},
    {0xFCF3, "ARABIC LIGATURE SHADDA WITH DAMMA MEDIAL FORM"},
    {0xFCF4, "ARABIC LIGATURE SHADDA WITH KASRA MEDIAL FORM"},
    {0xFCF5, "ARABIC LIGATURE TAH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFCF6, "ARABIC LIGATURE TAH WITH YEH ISOLATED FORM"},
    {0xFCF7, "ARABIC LIGATURE AIN WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFCF8, "ARABIC LIGATURE AIN WITH YEH ISOLATED FORM"},
    {0xFCF9, "ARABIC LIGATURE GHAIN WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFCFA, "ARABIC LIGATURE GHAIN WITH YEH ISOLATED FORM"},
    {0xFCFB, "ARABIC LIGATURE SEEN WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFCFC, "ARABIC LIGATURE SEEN WITH YEH ISOLATED FORM"},
    {0xFCFD, "ARABIC LIGATURE SHEEN WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFCFE, "ARABIC LIGATURE SHEEN WITH YEH ISOLATED FORM"},
    {0xFCFF, "ARABIC LIGATURE HAH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFD00, "ARABIC LIGATURE HAH WITH YEH ISOLATED FORM"},
    {0xFD01, "ARABIC LIGATURE JEEM WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFD02, "ARABIC LIGATURE JEEM WITH YEH ISOLATED FORM"},
    {0xFD03, "ARABIC LIGATURE KHAH WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFD04, "ARABIC LIGATURE KHAH WITH YEH ISOLATED FORM"},
    {0xFD05, "ARABIC LIGATURE SAD WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFD06, "ARABIC LIGATURE SAD WITH YEH ISOLATED FORM"},
    {0xFD07, "ARABIC LIGATURE DAD WITH ALEF MAKSURA ISOLATED FORM"},
    {0xFD08, "ARABIC LIGATURE DAD WITH YEH ISOLATED FORM"},
    {0xFD09, "ARABIC LIGATURE SHEEN WITH JEEM ISOLATED FORM"},
    {0xFD0A, "ARABIC LIGATURE SHEEN WITH HAH ISOLATED FORM"},
    {0xFD0B, "ARABIC LIGATURE SHEEN WITH KHAH ISOLATED FORM"},
    {0xFD0C, "ARABIC LIGATURE SHEEN WITH MEEM ISOLATED FORM"},
    {0xFD0D, "ARABIC LIGATURE SHEEN WITH REH ISOLATED FORM"},
    {0xFD0E, "ARABIC LIGATURE SEEN WITH REH ISOLATED FORM"},
    {0xFD0F, "ARABIC LIGATURE SAD WITH REH ISOLATED FORM"},
    {0xFD10, "ARABIC LIGATURE DAD WITH REH ISOLATED FORM"},
    {0xFD11, "ARABIC LIGATURE TAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFD12, "ARABIC LIGATURE TAH WITH YEH FINAL FORM"},
    {0xFD13, "ARABIC LIGATURE AIN WITH ALEF MAKSURA FINAL FORM"},
    {0xFD14, "ARABIC LIGATURE AIN WITH YEH FINAL FORM"},
    {0xFD15, "ARABIC LIGATURE GHAIN WITH ALEF MAKSURA FINAL FORM"},
    {0xFD16, "ARABIC LIGATURE GHAIN WITH YEH FINAL FORM"},
    {0xFD17, "ARABIC LIGATURE SEEN WITH ALEF MAKSURA FINAL FORM"},
    {0xFD18, "ARABIC LIGATURE SEEN WITH YEH FINAL FORM"},
    {0xFD19, "ARABIC LIGATURE SHEEN WITH ALEF MAKSURA FINAL FORM"},
    {0xFD1A, "ARABIC LIGATURE SHEEN WITH YEH FINAL FORM"},
    {0xFD1B, "ARABIC LIGATURE HAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFD1C, "ARABIC LIGATURE HAH WITH YEH FINAL FORM"},
    {0xFD1D, "ARABIC LIGATURE JEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFD1E, "ARABIC LIGATURE JEEM WITH YEH FINAL FORM"},
    {0xFD1F, "ARABIC LIGATURE KHAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFD20, "ARABIC LIGATURE KHAH WITH YEH FINAL FORM"},
    {0xFD21, "ARABIC LIGATURE SAD WITH ALEF MAKSURA FINAL FORM"},
    {0xFD22, "ARABIC LIGATURE SAD WITH YEH FINAL FORM"},
    {0xFD23, "ARABIC LIGATURE DAD WITH ALEF MAKSURA FINAL FORM"},
    {0xFD24, "ARABIC LIGATURE DAD WITH YEH FINAL FORM"},
    {0xFD25, "ARABIC LIGATURE SHEEN WITH JEEM FINAL FORM"},
    {0xFD26, "ARABIC LIGATURE SHEEN WITH HAH FINAL FORM"},
    {0xFD27, "ARABIC LIGATURE SHEEN WITH KHAH FINAL FORM"},
    {0xFD28, "ARABIC LIGATURE SHEEN WITH MEEM FINAL FORM"},
    {0xFD29, "ARABIC LIGATURE SHEEN WITH REH FINAL FORM"},
    {0xFD2A, "ARABIC LIGATURE SEEN WITH REH FINAL FORM"},
    {0xFD2B, "ARABIC LIGATURE SAD WITH REH FINAL FORM"},
    {0xFD2C, "ARABIC LIGATURE DAD WITH REH FINAL FORM"},
    {0xFD2D, "ARABIC LIGATURE SHEEN WITH JEEM INITIAL FORM"},
    {0xFD2E, "ARABIC LIGATURE SHEEN WITH HAH INITIAL FORM"},
    {0xFD2F, "ARABIC LIGATURE SHEEN WITH KHAH INITIAL FORM"},
    {0xFD30, "ARABIC LIGATURE SHEEN WITH MEEM INITIAL FORM"},
    {0xFD31, "ARABIC LIGATURE SEEN WITH HEH INITIAL FORM"},
    {0xFD32, "ARABIC LIGATURE SHEEN WITH HEH INITIAL FORM"},
    {0xFD33, "ARABIC LIGATURE TAH WITH MEEM INITIAL FORM"},
    {0xFD34, "ARABIC LIGATURE SEEN WITH JEEM MEDIAL FORM"},
    {0xFD35, "ARABIC LIGATURE SEEN WITH HAH MEDIAL FORM"},
    {0xFD36, "ARABIC LIGATURE SEEN WITH KHAH MEDIAL FORM"},
    {0xFD37, "ARABIC LIGATURE SHEEN WITH JEEM MEDIAL FORM"},
    {0xFD38, "ARABIC LIGATURE SHEEN WITH HAH MEDIAL FORM"},
    {0xFD39, "ARABIC LIGATURE SHEEN WITH KHAH MEDIAL FORM"},
    {0xFD3A, "ARABIC LIGATURE TAH WITH MEEM MEDIAL FORM"},
    {0xFD3B, "ARABIC LIGATURE ZAH WITH MEEM MEDIAL FORM"},
    {0xFD3C, "ARABIC LIGATURE ALEF WITH FATHATAN FINAL FORM"},
    {0xFD3D, "ARABIC LIGATURE ALEF WITH FATHATAN ISOLATED FORM"},
    {0xFD3E, "ORNATE LEFT PARENTHESIS"},
    {0xFD3F, "ORNATE RIGHT PARENTHESIS"},
    {0xFD50, "ARABIC LIGATURE TEH WITH JEEM WITH MEEM INITIAL FORM"},
    {0xFD51, "ARABIC LIGATURE TEH WITH HAH WITH JEEM FINAL FORM"},
    {0xFD52, "ARABIC LIGATURE TEH WITH HAH WITH JEEM INITIAL FORM"},
    {0xFD53, "ARABIC LIGATURE TEH WITH HAH WITH MEEM INITIAL FORM"},
    {0xFD54, "ARABIC LIGATURE TEH WITH KHAH WITH MEEM INITIAL FORM"},
    {0xFD55, "ARABIC LIGATURE TEH WITH MEEM WITH JEEM INITIAL FORM"},
    {0xFD56, "ARABIC LIGATURE TEH WITH MEEM WITH HAH INITIAL FORM"},
    {0xFD57, "ARABIC LIGATURE TEH WITH MEEM WITH KHAH INITIAL FORM"},
    {0xFD58, "ARABIC LIGATURE JEEM WITH MEEM WITH HAH FINAL FORM"},
    {0xFD59, "ARABIC LIGATURE JEEM WITH MEEM WITH HAH INITIAL FORM"},
    {0xFD5A, "ARABIC LIGATURE HAH WITH MEEM WITH YEH FINAL FORM"},
    {0xFD5B, "ARABIC LIGATURE HAH WITH MEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFD5C, "ARABIC LIGATURE SEEN WITH HAH WITH JEEM INITIAL FORM"},
    {0xFD5D, "ARABIC LIGATURE SEEN WITH JEEM WITH HAH INITIAL FORM"},
    {0xFD5E, "ARABIC LIGATURE SEEN WITH JEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFD5F, "ARABIC LIGATURE SEEN WITH MEEM WITH HAH FINAL FORM"},
    {0xFD60, "ARABIC LIGATURE SEEN WITH MEEM WITH HAH INITIAL FORM"},
    {0xFD61, "ARABIC LIGATURE SEEN WITH MEEM WITH JEEM INITIAL FORM"},
    {0xFD62, "ARABIC LIGATURE SEEN WITH MEEM WITH MEEM FINAL FORM"},
    {0xFD63, "ARABIC LIGATURE SEEN WITH MEEM WITH MEEM INITIAL FORM"},
    {0xFD64, "ARABIC LIGATURE SAD WITH HAH WITH HAH FINAL FORM"},
    {0xFD65, "ARABIC LIGATURE SAD WITH HAH WITH HAH INITIAL FORM"},
    {0xFD66, "ARABIC LIGATURE SAD WITH MEEM WITH MEEM FINAL FORM"},
    {0xFD67, "ARABIC LIGATURE SHEEN WITH HAH WITH MEEM FINAL FORM"},
    {0xFD68, "ARABIC LIGATURE SHEEN WITH HAH WITH MEEM INITIAL FORM"},
    {0xFD69, "ARABIC LIGATURE SHEEN WITH JEEM WITH YEH FINAL FORM"},
    {0xFD6A, "ARABIC LIGATURE SHEEN WITH MEEM WITH KHAH FINAL FORM"},
    {0xFD6B, "ARABIC LIGATURE SHEEN WITH MEEM WITH KHAH INITIAL FORM"},
    {0xFD6C, "ARABIC LIGATURE SHEEN WITH MEEM WITH MEEM FINAL FORM"},
    {0xFD6D, "ARABIC LIGATURE SHEEN WITH MEEM WITH MEEM INITIAL FORM"},
    {0xFD6E, "ARABIC LIGATURE DAD WITH HAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFD6F, "ARABIC LIGATURE DAD WITH KHAH WITH MEEM FINAL FORM"},
    {0xFD70, "ARABIC LIGATURE DAD WITH KHAH WITH MEEM INITIAL FORM"},
    {0xFD71, "ARABIC LIGATURE TAH WITH MEEM WITH HAH FINAL FORM"},
    {0xFD72, "ARABIC LIGATURE TAH WITH MEEM WITH HAH INITIAL FORM"},
    {0xFD73, "ARABIC LIGATURE TAH WITH MEEM WITH MEEM INITIAL FORM"},
    {0xFD74, "ARABIC LIGATURE TAH WITH MEEM WITH YEH FINAL FORM"},
    {0xFD75, "ARABIC LIGATURE AIN WITH JEEM WITH MEEM FINAL FORM"},
    {0xFD76, "ARABIC LIGATURE AIN WITH MEEM WITH MEEM FINAL FORM"},
    {0xFD77, "ARABIC LIGATURE AIN WITH MEEM WITH MEEM INITIAL FORM"},
    {0xFD78, "ARABIC LIGATURE AIN WITH MEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFD79, "ARABIC LIGATURE GHAIN WITH MEEM WITH MEEM FINAL FORM"},
    {0xFD7A, "ARABIC LIGATURE GHAIN WITH MEEM WITH YEH FINAL FORM"},
    {0xFD7B, "ARABIC LIGATURE GHAIN WITH MEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFD7C, "ARABIC LIGATURE FEH WITH KHAH WITH MEEM FINAL FORM"},
    {0xFD7D, "ARABIC LIGATURE FEH WITH KHAH WITH MEEM INITIAL FORM"},
    {0xFD7E, "ARABIC LIGATURE QAF WITH MEEM WITH HAH FINAL FORM"},
    {0xFD7F, "ARABIC LIGATURE QAF WITH MEEM WITH MEEM FINAL FORM"},
    {0xFD80, "ARABIC LIGATURE LAM WITH HAH WITH MEEM FINAL FORM"},
    {0xFD81, "ARABIC LIGATURE LAM WITH HAH WITH YEH FINAL FORM"},
    {0xFD82, "ARABIC LIGATURE LAM WITH HAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFD83, "ARABIC LIGATURE LAM WITH JEEM WITH JEEM INITIAL FORM"},
    {0xFD84, "ARABIC LIGATURE LAM WITH JEEM WITH JEEM FINAL FORM"},
    {0xFD85, "ARABIC LIGATURE LAM WITH KHAH WITH MEEM FINAL FORM"},
    {0xFD86, "ARABIC LIGATURE LAM WITH KHAH WITH MEEM INITIAL FORM"},
    {0xFD87, "ARABIC LIGATURE LAM WITH MEEM WITH HAH FINAL FORM"},
    {0xFD88, "ARABIC LIGATURE LAM WITH MEEM WITH HAH INITIAL FORM"},
    {0xFD89, "ARABIC LIGATURE MEEM WITH HAH WITH JEEM INITIAL FORM"},
    {0xFD8A, "ARABIC LIGATURE MEEM WITH HAH WITH MEEM INITIAL FORM"},
    {0xFD8B, "ARABIC LIGATURE MEEM WITH HAH WITH YEH FINAL FORM"},
    {0xFD8C, "ARABIC LIGATURE MEEM WITH JEEM WITH HAH INITIAL FORM"},
    {0xFD8D, "ARABIC LIGATURE MEEM WITH JEEM WITH MEEM INITIAL FORM"},
    {0xFD8E, "ARABIC LIGATURE MEEM WITH KHAH WITH JEEM INITIAL FORM"},
    {0xFD8F, "ARABIC LIGATURE MEEM WITH KHAH WITH MEEM INITIAL FORM"},
    {0xFD92, "ARABIC LIGATURE MEEM WITH JEEM WITH KHAH INITIAL FORM"},
    {0xFD93, "ARABIC LIGATURE HEH WITH MEEM WITH JEEM INITIAL FORM"},
    {0xFD94, "ARABIC LIGATURE HEH WITH MEEM WITH MEEM INITIAL FORM"},
    {0xFD95, "ARABIC LIGATURE NOON WITH HAH WITH MEEM INITIAL FORM"},
    {0xFD96, "ARABIC LIGATURE NOON WITH HAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFD97, "ARABIC LIGATURE NOON WITH JEEM WITH MEEM FINAL FORM"},
    {0xFD98, "ARABIC LIGATURE NOON WITH JEEM WITH MEEM INITIAL FORM"},
    {0xFD99, "ARABIC LIGATURE NOON WITH JEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFD9A, "ARABIC LIGATURE NOON WITH MEEM WITH YEH FINAL FORM"},
    {0xFD9B, "ARABIC LIGATURE NOON WITH MEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFD9C, "ARABIC LIGATURE YEH WITH MEEM WITH MEEM FINAL FORM"},
    {0xFD9D, "ARABIC LIGATURE YEH WITH MEEM WITH MEEM INITIAL FORM"},
    {0xFD9E, "ARABIC LIGATURE BEH WITH KHAH WITH YEH FINAL FORM"},
    {0xFD9F, "ARABIC LIGATURE TEH WITH JEEM WITH YEH FINAL FORM"},
    {0xFDA0, "ARABIC LIGATURE TEH WITH JEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFDA1, "ARABIC LIGATURE TEH WITH KHAH WITH YEH FINAL FORM"},
    {0xFDA2, "ARABIC LIGATURE TEH WITH KHAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFDA3, "ARABIC LIGATURE TEH WITH MEEM WITH YEH FINAL FORM"},
    {0xFDA4, "ARABIC LIGATURE TEH WITH MEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFDA5, "ARABIC LIGATURE JEEM WITH MEEM WITH YEH FINAL FORM"},
    {0xFDA6, "ARABIC LIGATURE JEEM WITH HAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFDA7, "ARABIC LIGATURE JEEM WITH MEEM WITH ALEF MAKSURA FINAL FORM"},
    {0xFDA8, "ARABIC LIGATURE SEEN WITH KHAH WITH ALEF MAKSURA FINAL FORM"},
    {0xFDA9, "ARABIC LIGATURE SAD WITH HAH WITH YEH FINAL FORM"},
    {0xFDAA, "ARABIC LIGATURE SHEEN WITH HAH WITH YEH FINAL FORM"},
    {0xFDAB, "ARABIC LIGATURE DAD WITH HAH WITH YEH FINAL FORM"},
    {0xFDAC, "ARABIC LIGATURE LAM WITH JEEM WITH YEH FINAL FORM"},
    {0xFDAD, "ARABIC LIGATURE LAM WITH MEEM WITH YEH FINAL FORM"},
    {0xFDAE, "ARABIC LIGATURE YEH WITH HAH WITH YEH FINAL FORM"},
    {0xFDAF, "ARABIC LIGATURE YEH WITH JEEM WITH YEH FINAL FORM"},
    {0xFDB0, "ARABIC LIGATURE YEH WITH MEEM WITH YEH FINAL FORM"},
    {0xFDB1, "ARABIC LIGATURE MEEM WITH MEEM WITH YEH FINAL FORM"},
    {0xFDB2, "ARABIC LIGATURE QAF WITH MEEM WITH YEH FINAL FORM"},
    {0xFDB3, "ARABIC LIGATURE NOON WITH HAH WITH YEH FINAL FORM"},
    {0xFDB4, "ARABIC LIGATURE QAF WITH MEEM WITH HAH INITIAL FORM"},
    {0xFDB5, "ARABIC LIGATURE LAM WITH HAH WITH MEEM INITIAL FORM"},
    {0xFDB6, "ARABIC LIGATURE AIN WITH MEEM WITH YEH FINAL FORM"},
    {0xFDB7, "ARABIC LIGATURE KAF WITH MEEM WITH YEH FINAL FORM"},
    {0xFDB8, "ARABIC LIGATURE NOON WITH JEEM WITH HAH INITIAL FORM"},
    {0xFDB9, "ARABIC LIGATURE MEEM WITH KHAH WITH YEH FINAL FORM"},
    {0xFDBA, "ARABIC LIGATURE LAM WITH JEEM WITH MEEM INITIAL FORM"},
    {0xFDBB, "ARABIC LIGATURE KAF WITH MEEM WITH MEEM FINAL FORM"},
    {0xFDBC, "ARABIC LIGATURE LAM WITH JEEM WITH MEEM FINAL FORM"},
    {0xFDBD, "ARABIC LIGATURE NOON WITH JEEM WITH HAH FINAL FORM"},
    {0xFDBE, "ARABIC LIGATURE JEEM WITH HAH WITH YEH FINAL FORM"},
    {0xFDBF, "ARABIC LIGATURE HAH WITH JEEM WITH YEH FINAL FORM"},
    {0xFDC0, "ARABIC LIGATURE MEEM WITH JEEM WITH YEH FINAL FORM"},
    {0xFDC1, "ARABIC LIGATURE FEH WITH MEEM WITH YEH FINAL FORM"},
    {0xFDC2, "ARABIC LIGATURE BEH WITH HAH WITH YEH FINAL FORM"},
    {0xFDC3, "ARABIC LIGATURE KAF WITH MEEM WITH MEEM INITIAL FORM"},
    {0xFDC4, "ARABIC LIGATURE AIN WITH JEEM WITH MEEM INITIAL FORM"},
    {0xFDC5, "ARABIC LIGATURE SAD WITH MEEM WITH MEEM INITIAL FORM"},
    {0xFDC6, "ARABIC LIGATURE SEEN WITH KHAH WITH YEH FINAL FORM"},
    {0xFDC7, "ARABIC LIGATURE NOON WITH JEEM WITH YEH FINAL FORM"},
    {0xFDF0, "ARABIC LIGATURE SALLA USED AS KORANIC STOP SIGN ISOLATED FORM"},
    {0xFDF1, "ARABIC LIGATURE QALA USED AS KORANIC STOP SIGN ISOLATED FORM"},
    {0xFDF2, "ARABIC LIGATURE ALLAH ISOLATED FORM"},
    {0xFDF3, "ARABIC LIGATURE AKBAR ISOLATED FORM"},
    {0xFDF4, "ARABIC LIGATURE MOHAMMAD ISOLATED FORM"},
    {0xFDF5, "ARABIC LIGATURE SALAM ISOLATED FORM"},
    {0xFDF6, "ARABIC LIGATURE RASOUL ISOLATED FORM"},
    {0xFDF7, "ARABIC LIGATURE ALAYHE ISOLATED FORM"},
    {0xFDF8, "ARABIC LIGATURE WASALLAM ISOLATED FORM"},
    {0xFDF9, "ARABIC LIGATURE SALLA ISOLATED FORM"},
    {0xFDFA, "ARABIC LIGATURE SALLALLAHOU ALAYHE WASALLAM"},
    {0xFDFB, "ARABIC LIGATURE JALLAJALALOUHOU"},
    {0xFDFC, "RIAL SIGN"},
    {0xFDFD, "ARABIC LIGATURE BISMILLAH AR-RAHMAN AR-RAHEEM"},
    {0xFE70, "ARABIC FATHATAN ISOLATED FORM"},
    {0xFE71, "ARABIC TATWEEL WITH FATHATAN ABOVE"},
    {0xFE72, "ARABIC DAMMATAN ISOLATED FORM"},
    {0xFE73, "ARABIC TAIL FRAGMENT"},
    {0xFE74, "ARABIC KASRATAN ISOLATED FORM"},
    {0xFE76, "ARABIC FATHA ISOLATED FORM"},
    {0xFE77, "ARABIC FATHA MEDIAL FORM"},
    {0xFE78, "ARABIC DAMMA ISOLATED FORM"},
    {0xFE79, "ARABIC DAMMA MEDIAL FORM"},
    {0xFE7A, "ARABIC KASRA ISOLATED FORM"},
    {0xFE7B, "ARABIC KASRA MEDIAL FORM"},
    {0xFE7C, "ARABIC SHADDA ISOLATED FORM"},
    {0xFE7D, "ARABIC SHADDA MEDIAL FORM"},
    {0xFE7E, "ARABIC SUKUN ISOLATED FORM"},
    {0xFE7F, "ARABIC SUKUN MEDIAL FORM"},
    {0xFE80, "ARABIC LETTER HAMZA ISOLATED FORM"},
    {0xFE81, "ARABIC LETTER ALEF WITH MADDA ABOVE ISOLATED FORM"},
    {0xFE82, "ARABIC LETTER ALEF WITH MADDA ABOVE FINAL FORM"},
    {0xFE83, "ARABIC LETTER ALEF WITH HAMZA ABOVE ISOLATED FORM"},
    {0xFE84, "ARABIC LETTER ALEF WITH HAMZA ABOVE FINAL FORM"},
    {0xFE85, "ARABIC LETTER WAW WITH HAMZA ABOVE ISOLATED FORM"},
    {0xFE86, "ARABIC LETTER WAW WITH HAMZA ABOVE FINAL FORM"},
    {0xFE87, "ARABIC LETTER ALEF WITH HAMZA BELOW ISOLATED FORM"},
    {0xFE88, "ARABIC LETTER ALEF WITH HAMZA BELOW FINAL FORM"},
    {0xFE89, "ARABIC LETTER YEH WITH HAMZA ABOVE ISOLATED FORM"},
    {0xFE8A, "ARABIC LETTER YEH WITH HAMZA ABOVE FINAL FORM"},
    {0xFE8B, "ARABIC LETTER YEH WITH HAMZA ABOVE INITIAL FORM"},
    {0xFE8C, "ARABIC LETTER YEH WITH HAMZA ABOVE MEDIAL FORM"},
    {0xFE8D, "ARABIC LETTER ALEF ISOLATED FORM"},
    {0xFE8E, "ARABIC LETTER ALEF FINAL FORM"},
    {0xFE8F, "ARABIC LETTER BEH ISOLATED FORM"},
    {0xFE90, "ARABIC LETTER BEH FINAL FORM"},
    {0xFE91, "ARABIC LETTER BEH INITIAL FORM"},
    {0xFE92, "ARABIC LETTER BEH MEDIAL FORM"},
    {0xFE93, "ARABIC LETTER TEH MARBUTA ISOLATED FORM"},
    {0xFE94, "ARABIC LETTER TEH MARBUTA FINAL FORM"},
    {0xFE95, "ARABIC LETTER TEH ISOLATED FORM"},
    {0xFE96, "ARABIC LETTER TEH FINAL FORM"},
    {0xFE97, "ARABIC LETTER TEH INITIAL FORM"},
    {0xFE98, "ARABIC LETTER TEH MEDIAL FORM"},
    {0xFE99, "ARABIC LETTER THEH ISOLATED FORM"},
    {0xFE9A, "ARABIC LETTER THEH FINAL FORM"},
    {0xFE9B, "ARABIC LETTER THEH INITIAL FORM"},
    {0xFE9C, "ARABIC LETTER THEH MEDIAL FORM"},
    {0xFE9D, "ARABIC LETTER JEEM ISOLATED FORM"},
    {0xFE9E, "ARABIC LETTER JEEM FINAL FORM"},
    {0xFE9F, "ARABIC LETTER JEEM INITIAL FORM"},
    {0xFEA0, "ARABIC LETTER JEEM MEDIAL FORM"},
    {0xFEA1, "ARABIC LETTER HAH ISOLATED FORM"},
    {0xFEA2, "ARABIC LETTER HAH FINAL FORM"},
    {0xFEA3, "ARABIC LETTER HAH INITIAL FORM"},
    {0xFEA4, "ARABIC LETTER HAH MEDIAL FORM"},
    {0xFEA5, "ARABIC LETTER KHAH ISOLATED FORM"},
    {0xFEA6, "ARABIC LETTER KHAH FINAL FORM"},
    {0xFEA7, "ARABIC LETTER KHAH INITIAL FORM"},
    {0xFEA8, "ARABIC LETTER KHAH MEDIAL FORM"},
    {0xFEA9, "ARABIC LETTER DAL ISOLATED FORM"},
    {0xFEAA, "ARABIC LETTER DAL FINAL FORM"},
    {0xFEAB, "ARABIC LETTER THAL ISOLATED FORM"},
    {0xFEAC, "ARABIC LETTER THAL FINAL FORM"},
    {0xFEAD, "ARABIC LETTER REH ISOLATED FORM"},
    {0xFEAE, "ARABIC LETTER REH FINAL FORM"},
    {0xFEAF, "ARABIC LETTER ZAIN ISOLATED FORM"},
    {0xFEB0, "ARABIC LETTER ZAIN FINAL FORM"},
    {0xFEB1, "ARABIC LETTER SEEN ISOLATED FORM"},
    {0xFEB2, "ARABIC LETTER SEEN FINAL FORM"},
    {0xFEB3, "ARABIC LETTER SEEN INITIAL FORM"},
    {0xFEB4, "ARABIC LETTER SEEN MEDIAL FORM"},
    {0xFEB5, "ARABIC LETTER SHEEN ISOLATED FORM"},
    {0xFEB6, "ARABIC LETTER SHEEN FINAL FORM"},
    {0xFEB7, "ARABIC LETTER SHEEN INITIAL FORM"},
    {0xFEB8, "ARABIC LETTER SHEEN MEDIAL FORM"},
    {0xFEB9, "ARABIC LETTER SAD ISOLATED FORM"},
    {0xFEBA, "ARABIC LETTER SAD FINAL FORM"},
    {0xFEBB, "ARABIC LETTER SAD INITIAL FORM"},
    {0xFEBC, "ARABIC LETTER SAD MEDIAL FORM"},
    {0xFEBD, "ARABIC LETTER DAD ISOLATED FORM"},
    {0xFEBE, "ARABIC LETTER DAD FINAL FORM"},
    {0xFEBF, "ARABIC LETTER DAD INITIAL FORM"},
    {0xFEC0, "ARABIC LETTER DAD MEDIAL FORM"},
    {0xFEC1, "ARABIC LETTER TAH ISOLATED FORM"},
    {0xFEC2, "ARABIC LETTER TAH FINAL FORM"},
    {0xFEC3, "ARABIC LETTER TAH INITIAL FORM"},
    {0xFEC4, "ARABIC LETTER TAH MEDIAL FORM"},
    {0xFEC5, "ARABIC LETTER ZAH ISOLATED FORM"},
    {0xFEC6, "ARABIC LETTER ZAH FINAL FORM"},
    {0xFEC7, "ARABIC LETTER ZAH INITIAL FORM"},
    {0xFEC8, "ARABIC LETTER ZAH MEDIAL FORM"},
    {0xFEC9, "ARABIC LETTER AIN ISOLATED FORM"},
    {0xFECA, "ARABIC LETTER AIN FINAL FORM"},
    {0xFECB, "ARABIC LETTER AIN INITIAL FORM"},
    {0xFECC, "ARABIC LETTER AIN MEDIAL FORM"},
    {0xFECD, "ARABIC LETTER GHAIN ISOLATED FORM"},
    {0xFECE, "ARABIC LETTER GHAIN FINAL FORM"},
    {0xFECF, "ARABIC LETTER GHAIN INITIAL FORM"},
    {0xFED0, "ARABIC LETTER GHAIN MEDIAL FORM"},
    {0xFED1, "ARABIC LETTER FEH ISOLATED FORM"},
    {0xFED2, "ARABIC LETTER FEH FINAL FORM"},
    {0xFED3, "ARABIC LETTER FEH INITIAL FORM"},
    {0xFED4, "ARABIC LETTER FEH MEDIAL FORM"},
    {0xFED5, "ARABIC LETTER QAF ISOLATED FORM"},
    {0xFED6, "ARABIC LETTER QAF FINAL FORM"},
    {0xFED7, "ARABIC LETTER QAF INITIAL FORM"},
    {0xFED8, "ARABIC LETTER QAF MEDIAL FORM"},
    {0xFED9, "ARABIC LETTER KAF ISOLATED FORM"},
    {0xFEDA, "ARABIC LETTER KAF FINAL FORM"},
    {0xFEDB, "ARABIC LETTER KAF INITIAL FORM"},
    {0xFEDC, "ARABIC LETTER KAF MEDIAL FORM"},
    {0xFEDD, "ARABIC LETTER LAM ISOLATED FORM"},
    {0xFEDE, "ARABIC LETTER LAM FINAL FORM"},
    {0xFEDF, "ARABIC LETTER LAM INITIAL FORM"},
    {0xFEE0, "ARABIC LETTER LAM MEDIAL FORM"},
    {0xFEE1, "ARABIC LETTER MEEM ISOLATED FORM"},
    {0xFEE2, "ARABIC LETTER MEEM FINAL FORM"},
    {0xFEE3, "ARABIC LETTER MEEM INITIAL FORM"},
    {0xFEE4, "ARABIC LETTER MEEM MEDIAL FORM"},
    {0xFEE5, "ARABIC LETTER NOON ISOLATED FORM"},
    {0xFEE6, "ARABIC LETTER NOON FINAL FORM"},
    {0xFEE7, "ARABIC LETTER NOON INITIAL FORM"},
    {0xFEE8, "ARABIC LETTER NOON MEDIAL FORM"},
    {0xFEE9, "ARABIC LETTER HEH ISOLATED FORM"},
    {0xFEEA, "ARABIC LETTER HEH FINAL FORM"},
    {0xFEEB, "ARABIC LETTER HEH INITIAL FORM"},
    {0xFEEC, "ARABIC LETTER HEH MEDIAL FORM"},
    {0xFEED, "ARABIC LETTER WAW ISOLATED FORM"},
    {0xFEEE, "ARABIC LETTER WAW FINAL FORM"},
    {0xFEEF, "ARABIC LETTER ALEF MAKSURA ISOLATED FORM"},
    {0xFEF0, "ARABIC LETTER ALEF MAKSURA FINAL FORM"},
    {0xFEF1, "ARABIC LETTER YEH ISOLATED FORM"},
    {0xFEF2, "ARABIC LETTER YEH FINAL FORM"},
    {0xFEF3, "ARABIC LETTER YEH INITIAL FORM"},
    {0xFEF4, "ARABIC LETTER YEH MEDIAL FORM"},
    {0xFEF5, "ARABIC LIGATURE LAM WITH ALEF WITH MADDA ABOVE ISOLATED FORM"},
    {0xFEF6, "ARABIC LIGATURE LAM WITH ALEF WITH MADDA ABOVE FINAL FORM"},
    {0xFEF7, "ARABIC LIGATURE LAM WITH ALEF WITH HAMZA ABOVE ISOLATED FORM"},
    {0xFEF8, "ARABIC LIGATURE LAM WITH ALEF WITH HAMZA ABOVE FINAL FORM"},
    {0xFEF9, "ARABIC LIGATURE LAM WITH ALEF WITH HAMZA BELOW ISOLATED FORM"},
    {0xFEFA, "ARABIC LIGATURE LAM WITH ALEF WITH HAMZA BELOW FINAL FORM"},
    {0xFEFB, "ARABIC LIGATURE LAM WITH ALEF ISOLATED FORM"},
    {0xFEFC, "ARABIC LIGATURE LAM WITH ALEF FINAL FORM"},
    {0xFEFF, "ZERO WIDTH NO-BREAK SPACE"},
};

}  // namespace lexharmony::detail
