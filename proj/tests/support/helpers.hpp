#pragma once

// Shared test utilities: compact word/sample builders, brute-force oracles
// kept independent of the library's learners, and random generators.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ltlearn/ltlearn.hpp"

namespace test_support {

using namespace ltlearn;

/// "aba" -> word of single-character letters.
inline word w(const std::string& chars) {
  word out;
  for (char c : chars) out.push_back(std::string(1, c));
  return out;
}

inline std::vector<word> ws(const std::vector<std::string>& items) {
  std::vector<word> out;
  for (const auto& s : items) out.push_back(w(s));
  return out;
}

inline sample mk_sample(const std::string& alphabet, const std::vector<std::string>& pos,
                        const std::vector<std::string>& neg) {
  std::vector<letter> a;
  for (char c : alphabet) a.push_back(std::string(1, c));
  return sample::checked(a, ws(pos), ws(neg));
}

/// All words over the alphabet with length in [1, max_len].
inline std::vector<word> all_words(const std::string& alphabet, std::size_t max_len) {
  std::vector<word> out, prev{word{}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<word> next;
    for (const word& p : prev)
      for (char c : alphabet) {
        word q = p;
        q.push_back(std::string(1, c));
        next.push_back(q);
      }
    out.insert(out.end(), next.begin(), next.end());
    prev = std::move(next);
  }
  return out;
}

/// Plain recursive enumeration of every formula of size <= max_size whose
/// operators lie in `ops` (letters as atoms; constants excluded). Independent
/// of the learners' layered enumeration.
inline std::vector<formula> enumerate_formulas(const std::string& alphabet, operator_set ops,
                                               std::size_t max_size) {
  std::vector<std::vector<formula>> by_size(max_size + 1);
  if (max_size >= 1)
    for (char c : alphabet) by_size[1].push_back(formula::atom(std::string(1, c)));
  if (max_size >= 2 && ops.has(op_neg))
    for (char c : alphabet) by_size[2].push_back(formula::neg_atom(std::string(1, c)));
  for (std::size_t k = 2; k <= max_size; ++k) {
    for (const formula& f : by_size[k - 1]) {
      if (ops.has(op_next)) by_size[k].push_back(formula::next(f));
      if (ops.has(op_eventually)) by_size[k].push_back(formula::eventually(f));
      if (ops.has(op_globally)) by_size[k].push_back(formula::globally(f));
    }
    for (std::size_t i = 1; i + 1 < k; ++i)
      for (const formula& l : by_size[i])
        for (const formula& r : by_size[k - 1 - i]) {
          if (ops.has(op_until)) by_size[k].push_back(formula::until(l, r));
          if (ops.has(op_and)) by_size[k].push_back(formula::conj(l, r));
          if (ops.has(op_or)) by_size[k].push_back(formula::disj(l, r));
        }
  }
  std::vector<formula> out;
  for (auto& layer : by_size) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

/// Brute-force minimal separating formula by scanning the enumeration in
/// (size, total order); constants are considered as whole formulas first.
inline std::optional<formula> brute_minimal(const sample& s, operator_set ops,
                                            std::size_t max_size) {
  std::vector<formula> cands{formula::truth(), formula::falsity()};
  std::string alphabet;
  for (const letter& c : s.alphabet) alphabet += c;  // single-char letters assumed
  auto rest = enumerate_formulas(alphabet, ops, max_size);
  cands.insert(cands.end(), rest.begin(), rest.end());
  std::sort(cands.begin(), cands.end(),
            [](const formula& a, const formula& b) { return compare(a, b) < 0; });
  for (const formula& f : cands)
    if (separates(f, s)) return f;
  return std::nullopt;
}

/// Exhaustive strict/weak embedding search, independent of the greedy
/// matchers in the library. prev is the 1-based position matched last.
inline bool embeds(const word& u, const word& v, bool weak, std::size_t ui = 0,
                   std::size_t prev = 0) {
  if (ui == u.size()) return true;
  if (weak && prev >= 1 && v[prev - 1] == u[ui] && embeds(u, v, weak, ui + 1, prev))
    return true;
  for (std::size_t p = prev + 1; p <= v.size(); ++p)
    if (v[p - 1] == u[ui] && embeds(u, v, weak, ui + 1, p)) return true;
  return false;
}

/// Exact minimal separating pattern via subset scan over the agreement
/// positions; nullopt when none exists. Positives must be non-empty.
inline std::optional<pattern> minimal_pattern(const sample& s) {
  if (s.positives.empty()) throw std::logic_error("minimal_pattern: positives required");
  std::size_t min_len = s.positives.front().size();
  for (const word& u : s.positives) min_len = std::min(min_len, u.size());
  std::vector<std::pair<std::size_t, letter>> agreement;
  for (std::size_t i = 1; i <= min_len; ++i) {
    const letter& c = s.positives.front()[i - 1];
    bool same = true;
    for (const word& u : s.positives) same = same && u[i - 1] == c;
    if (same) agreement.emplace_back(i, c);
  }
  std::optional<pattern> best;
  for (std::size_t mask = 1; mask < (std::size_t{1} << agreement.size()); ++mask) {
    std::vector<std::pair<std::size_t, letter>> entries;
    for (std::size_t i = 0; i < agreement.size(); ++i)
      if (mask >> i & 1) entries.push_back(agreement[i]);
    pattern p(entries);
    bool kills_all = true;
    for (const word& v : s.negatives) kills_all = kills_all && !p.matches(v);
    if (!kills_all) continue;
    if (!best || p.size() < best->size()) best = p;
  }
  return best;
}

/// Random formula of size <= budget over the operator set.
inline formula random_formula(std::mt19937_64& rng, const std::string& alphabet,
                              operator_set ops, std::size_t budget) {
  auto pick_letter = [&] {
    std::uniform_int_distribution<std::size_t> d(0, alphabet.size() - 1);
    return std::string(1, alphabet[d(rng)]);
  };
  std::vector<op_flag> unary, binary;
  if (ops.has(op_next)) unary.push_back(op_next);
  if (ops.has(op_eventually)) unary.push_back(op_eventually);
  if (ops.has(op_globally)) unary.push_back(op_globally);
  if (ops.has(op_until)) binary.push_back(op_until);
  if (ops.has(op_and)) binary.push_back(op_and);
  if (ops.has(op_or)) binary.push_back(op_or);

  std::uniform_int_distribution<int> coin(0, 99);
  if (budget >= 2 && ops.has(op_neg) && coin(rng) < 10) return formula::neg_atom(pick_letter());
  bool can_unary = budget >= 2 && !unary.empty();
  bool can_binary = budget >= 3 && !binary.empty();
  int c = coin(rng);
  if (can_binary && c < 40) {
    op_flag f = binary[std::uniform_int_distribution<std::size_t>(0, binary.size() - 1)(rng)];
    std::uniform_int_distribution<std::size_t> split(1, budget - 2);
    std::size_t ls = split(rng);
    formula l = random_formula(rng, alphabet, ops, ls);
    formula r = random_formula(rng, alphabet, ops, budget - 1 - l.size());
    if (f == op_until) return formula::until(l, r);
    if (f == op_and) return formula::conj(l, r);
    return formula::disj(l, r);
  }
  if (can_unary && c < 80) {
    op_flag f = unary[std::uniform_int_distribution<std::size_t>(0, unary.size() - 1)(rng)];
    formula ch = random_formula(rng, alphabet, ops, budget - 1);
    if (f == op_next) return formula::next(ch);
    if (f == op_eventually) return formula::eventually(ch);
    return formula::globally(ch);
  }
  return formula::atom(pick_letter());
}

inline word random_word(std::mt19937_64& rng, const std::string& alphabet, std::size_t min_len,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  word out;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, alphabet[pick(rng)]));
  return out;
}

}  // namespace test_support
