#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ltlearn/formula.hpp"
#include "ltlearn/sample.hpp"
#include "ltlearn/semantics.hpp"
#include "ltlearn/word.hpp"

namespace ltlearn {

/// Nested-F conjunction F(w1 & F(w2 & ... & F wk)) over the letters of w.
/// Satisfied by exactly the words that contain w as a weak subword. An empty
/// w yields the trivially true formula.
inline formula f_chain(const word& w) {
  if (w.empty()) return formula::truth();
  std::size_t i = w.size() - 1;
  formula acc = formula::eventually(formula::atom(w[i]));
  while (i-- > 0)
    acc = formula::eventually(formula::conj(formula::atom(w[i]), std::move(acc)));
  return acc;
}

/// Nested-F / nested-G chain over arbitrary links:
/// F(l1 & F(l2 & ... F lr)) and G(l1 | G(l2 | ... G lr)).
inline formula f_chain_of(const std::vector<formula>& links) {
  if (links.empty()) throw precondition_error("f_chain_of: empty chain");
  std::size_t i = links.size() - 1;
  formula acc = formula::eventually(links[i]);
  while (i-- > 0) acc = formula::eventually(formula::conj(links[i], std::move(acc)));
  return acc;
}
inline formula g_chain_of(const std::vector<formula>& links) {
  if (links.empty()) throw precondition_error("g_chain_of: empty chain");
  std::size_t i = links.size() - 1;
  formula acc = formula::globally(links[i]);
  while (i-- > 0) acc = formula::globally(formula::disj(links[i], std::move(acc)));
  return acc;
}

/// G-chain over the letters of v with each letter replaced by the disjunction
/// of the other alphabet letters; satisfied by exactly the words that do not
/// contain v as a weak subword.
inline formula g_chain_avoiding(const word& v, const std::vector<letter>& alphabet) {
  if (v.empty()) throw precondition_error("g_chain_avoiding: empty word");
  std::vector<letter> alpha = alphabet;
  std::sort(alpha.begin(), alpha.end());
  auto bar = [&](const letter& a) -> formula {
    std::vector<formula> others;
    for (const letter& b : alpha)
      if (b != a) others.push_back(formula::atom(b));
    if (others.empty()) return formula::falsity();
    return formula::disj_all(std::move(others));
  };
  std::vector<formula> links;
  links.reserve(v.size());
  for (const letter& a : v) links.push_back(bar(a));
  return g_chain_of(links);
}

/// A fattern: non-repeating word w, optionally grounded. Ungrounded form is
/// the nested-F chain of w (size 3|w|-1); the grounded form additionally pins
/// the first letter of w at position 1 (size 3|w|-2). An empty ungrounded
/// fattern denotes the trivially true formula.
struct fattern {
  word chain;
  bool grounded = false;

  formula to_formula() const {
    if (chain.empty()) {
      if (grounded) throw precondition_error("fattern: grounded fattern needs a word");
      return formula::truth();
    }
    if (!grounded) return f_chain(chain);
    if (chain.size() == 1) return formula::atom(chain.front());
    word rest(chain.begin() + 1, chain.end());
    return formula::conj(formula::atom(chain.front()), f_chain(rest));
  }

  std::size_t size() const {
    if (chain.empty()) return 1;
    return 3 * chain.size() - (grounded ? 2 : 1);
  }
};

/// Fattern for a non-repeating word; rejects repeating input.
inline fattern fattern_of(word w, bool grounded = false) {
  if (!is_non_repeating(w)) throw precondition_error("fattern_of: word repeats a letter");
  if (grounded && w.empty()) throw precondition_error("fattern_of: grounded fattern needs a word");
  return fattern{std::move(w), grounded};
}

/// Semantic characterisation of an LTL(F,and) formula: either unsatisfiable,
/// or "z starts with `initial` (when set) and contains every listed
/// non-repeating word as a subword".
struct fand_characterization {
  bool unsatisfiable = false;
  std::vector<word> words;
  std::optional<letter> initial;

  bool holds(const word& z) const {
    if (unsatisfiable) return false;
    if (initial && (z.empty() || z.front() != *initial)) return false;
    for (const word& w : words)
      if (!is_subword(w, z)) return false;
    return true;
  }
};

namespace detail {

/// Canonical word set: with a grounding letter, "starts with c and contains
/// c·w" is the same condition as "starts with c and contains w", so leading
/// grounding letters are stripped; then duplicates and words weakly embedded
/// in another are removed. After stripping, no kept word starts with the
/// grounding letter, which makes plain pairwise embedding the complete
/// redundancy test.
inline std::vector<word> canonical_subword_set(std::vector<word> ws,
                                               const std::optional<letter>& initial) {
  if (initial) {
    for (word& w : ws)
      if (!w.empty() && w.front() == *initial) w.erase(w.begin());
    std::erase_if(ws, [](const word& w) { return w.empty(); });
  }
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());

  // Keep only words not weakly embedded in a longer one.
  std::stable_sort(ws.begin(), ws.end(),
                   [](const word& a, const word& b) { return a.size() > b.size(); });
  std::vector<word> maximal;
  for (const word& w : ws) {
    bool implied = false;
    for (const word& k : maximal)
      if (is_weak_subword(w, k)) { implied = true; break; }
    if (!implied) maximal.push_back(w);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace detail

/// Characterisation of an LTL(F,and) formula by induction on its structure.
///
/// Over a two-letter alphabet the fragment degenerates: the only
/// non-repeating words are prefixes of abab... and baba..., so a canonical
/// characterisation holds at most two alternation prefixes and the fragment
/// can only bound alternation counts and pin the first letter.
inline fand_characterization characterize_fand(const formula& f) {
  if (!in_fragment(f, op_eventually | op_and))
    throw fragment_error("characterize_fand: formula outside LTL(F,and)");

  auto rec = [&](auto&& self, const formula& g) -> fand_characterization {
    switch (g.kind()) {
      case node_kind::truth:
        return {};
      case node_kind::falsity: {
        fand_characterization dead;
        dead.unsatisfiable = true;
        return dead;
      }
      case node_kind::atom: {
        fand_characterization first;
        first.initial = g.sym();
        return first;
      }
      case node_kind::eventually: {
        fand_characterization ch = self(self, g.child());
        if (ch.unsatisfiable || !ch.initial) return ch;
        const letter c = *ch.initial;
        fand_characterization out;
        if (ch.words.empty()) {
          out.words.push_back({c});
        } else {
          for (word w : ch.words) {
            if (w.front() != c) w.insert(w.begin(), c);
            out.words.push_back(std::move(w));
          }
        }
        return out;
      }
      case node_kind::conj: {
        fand_characterization a = self(self, g.lhs());
        fand_characterization b = self(self, g.rhs());
        fand_characterization dead;
        dead.unsatisfiable = true;
        if (a.unsatisfiable || b.unsatisfiable) return dead;
        if (a.initial && b.initial && *a.initial != *b.initial) return dead;
        fand_characterization out;
        out.initial = a.initial ? a.initial : b.initial;
        out.words = a.words;
        out.words.insert(out.words.end(), b.words.begin(), b.words.end());
        return out;
      }
      default:
        throw fragment_error("characterize_fand: unexpected node");
    }
  };

  fand_characterization ch = rec(rec, f);
  if (ch.unsatisfiable) return ch;
  ch.words = detail::canonical_subword_set(std::move(ch.words), ch.initial);
  return ch;
}

/// Prefix forest of a set of non-repeating words: nodes are prefixes, edges
/// extend by one letter, leaves are the (canonicalised) words themselves.
struct prefix_forest {
  struct tree {
    letter sym;
    std::vector<tree> children;
  };
  std::vector<tree> roots;

  static prefix_forest build(const std::vector<word>& words) {
    prefix_forest f;
    auto grow = [](auto&& self, std::vector<tree>& siblings,
                   std::vector<std::pair<const word*, std::size_t>> group) -> void {
      std::map<letter, std::vector<std::pair<const word*, std::size_t>>> by_letter;
      for (auto [w, at] : group)
        if (at < w->size()) by_letter[(*w)[at]].push_back({w, at + 1});
      for (auto& [c, sub] : by_letter) {
        siblings.push_back(tree{c, {}});
        self(self, siblings.back().children, std::move(sub));
      }
    };
    std::vector<std::pair<const word*, std::size_t>> all;
    for (const word& w : words) all.push_back({&w, 0});
    grow(grow, f.roots, std::move(all));
    return f;
  }
};

/// Minimal LTL(F,and) formula whose meaning is "starts with `initial` (when
/// given) and contains every word of `words` as a subword". Each forest tree
/// becomes a nested conjunction F(c & ...); the grounding letter becomes a
/// plain conjunct.
inline formula forest_formula(std::vector<word> words, std::optional<letter> initial) {
  for (const word& w : words)
    if (!is_non_repeating(w)) throw precondition_error("forest_formula: word repeats a letter");
  words = detail::canonical_subword_set(std::move(words), initial);

  auto tree_formula = [](auto&& self, const prefix_forest::tree& t) -> formula {
    std::vector<formula> parts{formula::atom(t.sym)};
    for (const auto& ch : t.children) parts.push_back(self(self, ch));
    return formula::eventually(formula::conj_all(std::move(parts)));
  };

  prefix_forest forest = prefix_forest::build(words);
  std::vector<formula> conjuncts;
  if (initial) conjuncts.push_back(formula::atom(*initial));
  for (const auto& t : forest.roots) conjuncts.push_back(tree_formula(tree_formula, t));
  if (conjuncts.empty()) return formula::truth();
  return formula::conj_all(std::move(conjuncts));
}

enum class chain_mode { f_mode, g_mode };

/// Shrinks a nested chain to at most |v|+1 of its links.
///
/// F mode: given links l1..lr with v not satisfying F(l1 & F(l2 & ... F lr)),
/// returns indices i1<...<ik (0-based, k <= |v|+1) such that v still falsifies
/// the subchain while every word satisfying the full chain satisfies it.
/// G mode is the dual: v satisfies the nested-G chain, the subchain is still
/// satisfied by v and implies the full chain.
///
/// Built from the decreasing suffix sequence: s_1 = v, s_{i+1} = the longest
/// suffix of s_i satisfying link i (empty when none, and the empty suffix
/// satisfies nothing); indices are taken at the end of each constant run.
inline std::vector<std::size_t> shrink_chain(const std::vector<formula>& links, const word& v,
                                             chain_mode mode) {
  if (links.empty()) throw precondition_error("shrink_chain: empty chain");
  const std::size_t r = links.size();

  const formula whole = mode == chain_mode::f_mode ? f_chain_of(links) : g_chain_of(links);
  if (mode == chain_mode::f_mode ? evaluate(whole, v, 1) : !evaluate(whole, v, 1))
    throw precondition_error("shrink_chain: chain precondition violated");

  // sat(i, p): link i holds on the suffix starting at p; in G mode the dual
  // construction runs on negated links.
  auto sat = [&](std::size_t i, std::size_t p) {
    bool t = evaluate(links[i], v, p);
    return mode == chain_mode::f_mode ? t : !t;
  };

  const std::size_t empty_pos = v.size() + 1;  // start position of the empty suffix
  std::vector<std::size_t> start(r + 2, 1);    // start[i] = suffix s_i, 1-based entries
  for (std::size_t i = 1; i <= r; ++i) {
    std::size_t p = start[i];
    while (p < empty_pos && !sat(i - 1, p)) ++p;
    start[i + 1] = p;  // empty stays empty: p == empty_pos when nothing satisfies
  }
  if (start[r + 1] != empty_pos) throw error("shrink_chain: internal suffix check failed");

  std::vector<std::size_t> picked;  // 1-based link indices
  std::size_t cur = 1;
  for (;;) {
    picked.push_back(cur);
    const std::size_t val = start[cur + 1];
    if (val == empty_pos) break;
    std::size_t m = cur + 1;
    while (m + 1 <= r && start[m + 1] == val) ++m;
    // start[m] == val and the run ends at m: link m strictly shrinks it.
    cur = m;
  }

  if (picked.size() > v.size() + 1) throw error("shrink_chain: internal length check failed");
  for (std::size_t& i : picked) --i;
  return picked;
}

/// Separating conjunction of at most |N| fatterns (plus the grounding letter
/// when the characterisation has one): per negative, one characterisation
/// word it fails to contain.
inline formula normalize_fand(const formula& f, const sample& s) {
  s.validate();
  if (s.positives.empty())
    throw precondition_error("normalize_fand: at least one positive word required");
  if (!in_fragment(f, op_eventually | op_and))
    throw fragment_error("normalize_fand: formula outside LTL(F,and)");
  if (!separates(f, s)) throw precondition_error("normalize_fand: formula does not separate");

  fand_characterization ch = characterize_fand(f);
  std::set<word> picks;
  for (const word& v : s.negatives) {
    if (ch.initial && v.front() != *ch.initial) continue;  // grounding kills it
    bool found = false;
    for (const word& w : ch.words)
      if (!is_subword(w, v)) {
        picks.insert(w);
        found = true;
        break;
      }
    if (!found) throw error("normalize_fand: internal pick failed");
  }

  std::vector<formula> conjuncts;
  if (ch.initial) conjuncts.push_back(formula::atom(*ch.initial));
  for (const word& w : picks) conjuncts.push_back(f_chain(w));
  formula out = conjuncts.empty() ? formula::truth() : formula::conj_all(std::move(conjuncts));
  if (!separates(out, s)) throw error("normalize_fand: internal check failed");
  return out;
}

/// A single separating fattern of size <= |f| for single-positive samples,
/// obtained by merging leftmost embeddings of the characterisation words into
/// the positive word.
inline fattern normalize_fand_single_positive(const formula& f, const sample& s) {
  s.validate();
  if (s.positives.size() != 1)
    throw precondition_error("normalize_fand_single_positive: exactly one positive required");
  if (!in_fragment(f, op_eventually | op_and))
    throw fragment_error("normalize_fand_single_positive: formula outside LTL(F,and)");
  if (!separates(f, s))
    throw precondition_error("normalize_fand_single_positive: formula does not separate");

  const word& u = s.positives.front();
  fand_characterization ch = characterize_fand(f);

  std::set<std::size_t> positions;
  for (const word& w : ch.words) {
    std::size_t j = 0;
    for (const letter& c : w) {
      while (j < u.size() && u[j] != c) ++j;
      if (j == u.size())
        throw error("normalize_fand_single_positive: characterisation word not in positive");
      positions.insert(j);
      ++j;
    }
  }
  word merged;
  for (std::size_t j : positions) merged.push_back(u[j]);
  merged = collapse_runs(merged);

  fattern out;
  if (ch.initial) {
    word grounded = merged;
    if (grounded.empty() || grounded.front() != *ch.initial)
      grounded.insert(grounded.begin(), *ch.initial);
    out = fattern{std::move(grounded), true};
  } else {
    out = fattern{std::move(merged), false};
  }

  if (out.size() > f.size() || !separates(out.to_formula(), s))
    throw error("normalize_fand_single_positive: internal check failed");
  return out;
}

/// LTL(F,and) learner: per negative, a common weak subword of the positives
/// avoiding it (collapsed to non-repeating form) or the shared first letter;
/// the conjunction of the resulting fatterns when every negative is handled,
/// NoSeparatorExists for this fragment otherwise.
inline learn_result learn_fand_heuristic(const sample& s) {
  s.validate();
  if (s.negatives.empty()) return learn_result::found(formula::truth());
  if (s.positives.empty()) return learn_result::found(formula::falsity());

  std::optional<letter> shared_first = s.positives.front().front();
  for (const word& u : s.positives)
    if (u.front() != *shared_first) { shared_first = std::nullopt; break; }

  std::set<word> picks;
  bool need_ground = false;
  for (const word& v : s.negatives) {
    if (shared_first && v.front() != *shared_first) {
      need_ground = true;  // a single-letter conjunct beats a subword search
    } else if (auto w = common_weak_subword_avoiding(s.positives, v)) {
      picks.insert(collapse_runs(*w));
    } else {
      return learn_result::no_separator();
    }
  }

  std::vector<formula> conjuncts;
  if (need_ground) conjuncts.push_back(formula::atom(*shared_first));
  for (const word& w : picks) conjuncts.push_back(f_chain(w));
  formula out = formula::conj_all(std::move(conjuncts));
  if (!separates(out, s) || !in_fragment(out, op_eventually | op_and))
    throw error("learn_fand_heuristic: internal check failed");
  return learn_result::found(std::move(out));
}

}  // namespace ltlearn
