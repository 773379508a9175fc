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

// Unit-cost Levenshtein distance and alignment backtraces over arbitrary
// symbol sequences (codepoints, phones).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ranges>
#include <span>
#include <vector>

#include "lexharmony/error.hpp"

namespace lexharmony {

enum class EditKind { kMatch, kSub, kDel, kIns };

inline const char* to_string(EditKind k) {
  switch (k) {
    case EditKind::kMatch: return "MATCH";
    case EditKind::kSub: return "SUB";
    case EditKind::kDel: return "DEL";
    case EditKind::kIns: return "INS";
  }
  return "?";
}

template <class Symbol>
struct EditOp {
  EditKind kind;
  std::optional<Symbol> source;
  std::optional<Symbol> target;

  static EditOp match(Symbol s) { return {EditKind::kMatch, s, s}; }
  static EditOp sub(Symbol s, Symbol t) { return {EditKind::kSub, s, t}; }
  static EditOp del(Symbol s) { return {EditKind::kDel, s, std::nullopt}; }
  static EditOp ins(Symbol t) { return {EditKind::kIns, std::nullopt, t}; }

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

template <class Symbol>
struct Alignment {
  std::vector<EditOp<Symbol>> ops;
  std::size_t cost = 0;
};

template <class Seq>
using symbol_of = std::ranges::range_value_t<Seq>;

template <std::ranges::random_access_range Seq>
std::size_t edit_distance(const Seq& a, const Seq& b) {
  const std::size_t n = std::ranges::size(a), m = std::ranges::size(b);
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({diag, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

/// Early-exit variant: returns any value > limit once the distance is known to
/// exceed limit.
template <std::ranges::random_access_range Seq>
std::size_t edit_distance_bounded(const Seq& a, const Seq& b, std::size_t limit) {
  const std::size_t n = std::ranges::size(a), m = std::ranges::size(b);
  const std::size_t len_gap = n > m ? n - m : m - n;
  if (len_gap > limit) return limit + 1;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    std::size_t row_min = cur[0];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({diag, prev[j] + 1, cur[j - 1] + 1});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > limit) return limit + 1;
    std::swap(prev, cur);
  }
  return prev[m];
}

/// One optimal alignment of a onto b. The backtrace runs from the end and
/// prefers MATCH, then SUB, then DEL, then INS, so results are reproducible.
template <std::ranges::random_access_range Seq>
Alignment<symbol_of<Seq>> align(const Seq& a, const Seq& b) {
  using Symbol = symbol_of<Seq>;
  const std::size_t n = std::ranges::size(a), m = std::ranges::size(b);
  const std::size_t w = m + 1;
  std::vector<std::size_t> d((n + 1) * w);
  for (std::size_t j = 0; j <= m; ++j) d[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    d[i * w] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = d[(i - 1) * w + j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i * w + j] = std::min({diag, d[(i - 1) * w + j] + 1, d[i * w + j - 1] + 1});
    }
  }

  Alignment<Symbol> out;
  out.cost = d[n * w + m];
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::size_t here = d[i * w + j];
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && d[(i - 1) * w + j - 1] == here) {
      out.ops.push_back(EditOp<Symbol>::match(a[i - 1]));
      --i, --j;
    } else if (i > 0 && j > 0 && d[(i - 1) * w + j - 1] + 1 == here) {
      out.ops.push_back(EditOp<Symbol>::sub(a[i - 1], b[j - 1]));
      --i, --j;
    } else if (i > 0 && d[(i - 1) * w + j] + 1 == here) {
      out.ops.push_back(EditOp<Symbol>::del(a[i - 1]));
      --i;
    } else {
      out.ops.push_back(EditOp<Symbol>::ins(b[j - 1]));
      --j;
    }
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

/// Replays an alignment on its source sequence; yields the target sequence.
template <class Symbol, class Seq>
Seq replay(const Alignment<Symbol>& alignment, const Seq& source) {
  Seq out;
  std::size_t pos = 0;
  for (const auto& op : alignment.ops) {
    switch (op.kind) {
      case EditKind::kMatch:
      case EditKind::kSub:
        if (pos >= std::ranges::size(source) || source[pos] != *op.source) {
          throw ValidationError("alignment does not fit its source sequence");
        }
        out.push_back(*op.target);
        ++pos;
        break;
      case EditKind::kDel:
        if (pos >= std::ranges::size(source) || source[pos] != *op.source) {
          throw ValidationError("alignment does not fit its source sequence");
        }
        ++pos;
        break;
      case EditKind::kIns:
        out.push_back(*op.target);
        break;
    }
  }
  if (pos != std::ranges::size(source)) {
    throw ValidationError("alignment does not consume its source sequence");
  }
  return out;
}

struct Neighbor {
  std::size_t index = 0;
  std::size_t cost = 0;
};

/// Exhaustive nearest neighbor. Ties go to the higher weight, then to the
/// lexicographically smaller candidate. weights may be empty (all equal).
/// Candidates flagged unusable (nullptr) are skipped. Cost is O(N * |q| * |c|).
template <class Seq>
std::optional<Neighbor> nearest_candidate(const Seq& query, std::span<const Seq* const> candidates,
                                          std::span<const std::uint64_t> weights = {},
                                          std::size_t limit = static_cast<std::size_t>(-1)) {
  std::optional<Neighbor> best;
  auto weight = [&](std::size_t i) -> std::uint64_t { return weights.empty() ? 0 : weights[i]; };
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i] == nullptr) continue;
    const std::size_t bound = best ? best->cost : limit;
    const std::size_t c = edit_distance_bounded(query, *candidates[i], bound);
    if (c > bound) continue;
    if (!best || c < best->cost) {
      best = Neighbor{i, c};
    } else if (c == best->cost) {
      const auto wi = weight(i), wb = weight(best->index);
      if (wi > wb || (wi == wb && *candidates[i] < *candidates[best->index])) best = Neighbor{i, c};
    }
  }
  return best;
}

}  // namespace lexharmony
