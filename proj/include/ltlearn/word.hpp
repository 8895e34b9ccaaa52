#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ltlearn/errors.hpp"

namespace ltlearn {

/// Letters are opaque string tokens; alphabets of unbounded size are allowed.
using letter = std::string;
using word = std::vector<letter>;

inline std::string to_string(const word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += w[i];
  }
  return out;
}

/// u embeds into w at strictly increasing positions.
inline bool is_subword(const word& u, const word& w) {
  std::size_t j = 0;
  for (const letter& c : u) {
    while (j < w.size() && w[j] != c) ++j;
    if (j == w.size()) return false;
    ++j;
  }
  return true;
}

/// u embeds into w at non-decreasing positions (a position may be reused for
/// a run of equal letters).
inline bool is_weak_subword(const word& u, const word& w) {
  std::size_t cur = 0;  // 1-based position of the last matched letter, 0 = none
  for (const letter& c : u) {
    if (cur >= 1 && w[cur - 1] == c) continue;
    std::size_t j = cur;  // scan positions cur+1.. (0-based index cur..)
    while (j < w.size() && w[j] != c) ++j;
    if (j == w.size()) return false;
    cur = j + 1;
  }
  return true;
}

/// True when no two consecutive letters are equal.
inline bool is_non_repeating(const word& u) {
  for (std::size_t i = 1; i < u.size(); ++i)
    if (u[i] == u[i - 1]) return false;
  return true;
}

/// Removes runs of equal adjacent letters. The result is non-repeating and
/// weak-embeds into exactly the same words as the input.
inline word collapse_runs(const word& u) {
  word out;
  for (const letter& c : u)
    if (out.empty() || out.back() != c) out.push_back(c);
  return out;
}

/// Shortest word (ties broken lexicographically) that weak-embeds into every
/// word of `positives` but not into `avoid`; std::nullopt when none exists.
///
/// Breadth-first search over the product of leftmost-embedding cursors, one
/// per word plus one in `avoid`. State count is exponential in the number of
/// positive words; a cap guards against runaway inputs.
inline std::optional<word> common_weak_subword_avoiding(
    const std::vector<word>& positives, const word& avoid,
    std::size_t state_limit = 20'000'000) {
  if (positives.empty())
    throw precondition_error("common_weak_subword_avoiding: no positive words");

  // Only letters occurring in every positive word can appear in a solution.
  std::set<letter> candidates(positives.front().begin(), positives.front().end());
  for (std::size_t i = 1; i < positives.size(); ++i) {
    std::set<letter> keep;
    for (const letter& c : positives[i])
      if (candidates.count(c)) keep.insert(c);
    candidates.swap(keep);
  }
  const std::vector<letter> letters(candidates.begin(), candidates.end());
  if (letters.empty()) return std::nullopt;

  const std::size_t n = positives.size();
  const std::size_t failed = avoid.size() + 1;  // sticky fail cursor in `avoid`

  // cursor semantics: 1-based position of the last matched letter, 0 = start.
  auto advance = [](const word& w, std::size_t cur,
                    const letter& c) -> std::optional<std::size_t> {
    if (cur >= 1 && w[cur - 1] == c) return cur;
    for (std::size_t j = cur; j < w.size(); ++j)
      if (w[j] == c) return j + 1;
    return std::nullopt;
  };

  using state = std::vector<std::size_t>;  // n positive cursors + avoid cursor
  struct entry {
    state st;
    std::size_t parent;
    letter via;
  };

  std::deque<std::size_t> queue;
  std::vector<entry> nodes;
  std::set<state> seen;

  state init(n + 1, 0);
  nodes.push_back({init, 0, letter{}});
  seen.insert(init);
  queue.push_back(0);

  auto rebuild = [&](std::size_t idx) {
    word w;
    while (idx != 0) {
      w.push_back(nodes[idx].via);
      idx = nodes[idx].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  while (!queue.empty()) {
    const std::size_t cur_idx = queue.front();
    queue.pop_front();
    for (const letter& c : letters) {
      state next = nodes[cur_idx].st;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        auto a = advance(positives[i], next[i], c);
        if (!a) ok = false;  // must embed into every positive
        else next[i] = *a;
      }
      if (!ok) continue;
      if (next[n] != failed) {
        auto a = advance(avoid, next[n], c);
        next[n] = a ? *a : failed;
      }
      if (!seen.insert(next).second) continue;
      nodes.push_back({next, cur_idx, c});
      if (next[n] == failed) return rebuild(nodes.size() - 1);
      if (nodes.size() > state_limit)
        throw resource_limit_error("common_weak_subword_avoiding: state limit");
      queue.push_back(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

}  // namespace ltlearn
