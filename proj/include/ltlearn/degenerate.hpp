#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ltlearn/fattern.hpp"
#include "ltlearn/formula.hpp"
#include "ltlearn/parse.hpp"
#include "ltlearn/sample.hpp"
#include "ltlearn/semantics.hpp"

namespace ltlearn {

namespace detail {

inline learn_result checked_result(formula f, const sample& s, operator_set ops,
                                   const char* who) {
  if (!separates(f, s) || !in_fragment(f, ops))
    throw error(std::string(who) + ": internal check failed on " + format_formula(f));
  return learn_result::found(std::move(f));
}

inline std::vector<letter> sorted_alphabet(const sample& s) {
  std::vector<letter> a = s.alphabet;
  std::sort(a.begin(), a.end());
  return a;
}

/// Scan explicit candidates in (size, total order); first separating one wins.
inline learn_result scan_candidates(std::vector<formula> cands, const sample& s,
                                    operator_set ops, const char* who) {
  std::sort(cands.begin(), cands.end(),
            [](const formula& a, const formula& b) { return compare(a, b) < 0; });
  for (formula& f : cands)
    if (separates(f, s)) return checked_result(std::move(f), s, ops, who);
  return learn_result::no_separator();
}

}  // namespace detail

/// Shortest separating formula for fragments without temporal operators.
/// Semantics depends only on the first letter: the minimal separator is the
/// disjunction of the positives' first letters, a single letter, or nothing.
inline learn_result learn_bool(const sample& s, operator_set ops) {
  s.validate();
  if (!ops.subset_of(op_and | op_or))
    throw precondition_error("learn_bool: fragment must be within {and,or}");
  if (s.negatives.empty())
    return detail::checked_result(formula::truth(), s, ops, "learn_bool");
  if (s.positives.empty())
    return detail::checked_result(formula::falsity(), s, ops, "learn_bool");

  std::set<letter> first_pos, first_neg;
  for (const word& u : s.positives) first_pos.insert(u.front());
  for (const word& v : s.negatives) first_neg.insert(v.front());

  for (const letter& a : first_pos)
    if (first_neg.count(a)) return learn_result::no_separator();

  if (first_pos.size() == 1)
    return detail::checked_result(formula::atom(*first_pos.begin()), s, ops, "learn_bool");
  if (!ops.has(op_or)) return learn_result::no_separator();

  std::vector<formula> atoms;
  for (const letter& a : first_pos) atoms.push_back(formula::atom(a));
  return detail::checked_result(formula::disj_all(std::move(atoms)), s, ops, "learn_bool");
}

/// Shortest separating formula for fragments within {F,G,X}: over words of
/// length at most l every such formula is equivalent to one of
/// {true, false, X^k a, X^k F a, X^k G a, X^k F G a} with k < l.
inline learn_result learn_unary(const sample& s, operator_set ops) {
  s.validate();
  if (!ops.subset_of(op_eventually | op_globally | op_next))
    throw precondition_error("learn_unary: fragment must be within {F,G,X}");

  const std::size_t lmax = s.max_word_length();
  std::vector<formula> cands{formula::truth(), formula::falsity()};
  for (std::size_t k = 0; k < std::max<std::size_t>(lmax, 1); ++k) {
    if (k >= 1 && !ops.has(op_next)) break;
    for (const letter& a : detail::sorted_alphabet(s)) {
      cands.push_back(formula::next_pow(k, formula::atom(a)));
      if (ops.has(op_eventually))
        cands.push_back(formula::next_pow(k, formula::eventually(formula::atom(a))));
      if (ops.has(op_globally))
        cands.push_back(formula::next_pow(k, formula::globally(formula::atom(a))));
      if (ops.has(op_eventually) && ops.has(op_globally))
        cands.push_back(formula::next_pow(
            k, formula::eventually(formula::globally(formula::atom(a)))));
    }
  }
  return detail::scan_candidates(std::move(cands), s, ops, "learn_unary");
}

/// Shortest separating formula for {G,and}: every formula of the fragment is
/// equivalent over finite words to true, false, a, or G a.
inline learn_result learn_gand(const sample& s) {
  s.validate();
  std::vector<formula> cands{formula::truth(), formula::falsity()};
  for (const letter& a : detail::sorted_alphabet(s)) {
    cands.push_back(formula::atom(a));
    cands.push_back(formula::globally(formula::atom(a)));
  }
  return detail::scan_candidates(std::move(cands), s, op_globally | op_and, "learn_gand");
}

/// Shortest separating formula for {F,or} over a fixed alphabet. F commutes
/// with or, so every formula of the fragment is equivalent to
/// a1 | ... | ap | F(b1 | ... | bq); all such shapes are scanned exhaustively.
inline learn_result learn_for_fixed(const sample& s, std::size_t max_alphabet = 8) {
  s.validate();
  if (s.alphabet.size() > max_alphabet)
    throw unsupported_error("learn_for_fixed: alphabet exceeds the fixed-alphabet limit");
  if (s.negatives.empty())
    return detail::checked_result(formula::truth(), s, op_eventually | op_or, "learn_for_fixed");
  if (s.positives.empty())
    return detail::checked_result(formula::falsity(), s, op_eventually | op_or, "learn_for_fixed");

  const std::vector<letter> alpha = detail::sorted_alphabet(s);
  const std::size_t m = alpha.size();
  std::vector<formula> cands;
  for (std::size_t now = 0; now < (std::size_t{1} << m); ++now) {
    for (std::size_t fut = 0; fut < (std::size_t{1} << m); ++fut) {
      if (now == 0 && fut == 0) continue;
      std::vector<formula> parts;
      for (std::size_t i = 0; i < m; ++i)
        if (now >> i & 1) parts.push_back(formula::atom(alpha[i]));
      if (fut != 0) {
        std::vector<formula> inner;
        for (std::size_t i = 0; i < m; ++i)
          if (fut >> i & 1) inner.push_back(formula::atom(alpha[i]));
        parts.push_back(formula::eventually(formula::disj_all(std::move(inner))));
      }
      cands.push_back(formula::disj_all(std::move(parts)));
    }
  }
  return detail::scan_candidates(std::move(cands), s, op_eventually | op_or, "learn_for_fixed");
}

/// Polynomial-size separator constructions, one per fragment family. Found
/// when the construction's existence condition holds; NoSeparatorExists
/// exactly under the matching obstruction, which rules out every formula of
/// the fragment. No minimality is claimed.
inline learn_result construct_separator(const sample& s, operator_set ops) {
  s.validate();
  if (!ops.subset_of(ops_full_no_until))
    throw unsupported_error("construct_separator: fragment must be within {F,G,X,and,or}");
  if (s.negatives.empty())
    return detail::checked_result(formula::truth(), s, ops, "construct_separator");
  if (s.positives.empty())
    return detail::checked_result(formula::falsity(), s, ops, "construct_separator");

  auto dedup = [](const std::vector<word>& ws) {
    std::vector<word> out;
    std::set<word> seen;
    for (const word& w : ws)
      if (seen.insert(w).second) out.push_back(w);
    return out;
  };
  const std::vector<word> pos = dedup(s.positives);
  const std::vector<word> neg = dedup(s.negatives);

  if (ops.contains(op_globally | op_next | op_and | op_or)) {
    // phi_u pins the proper prefix with X and the last letter with G; fails
    // exactly when some negative lies in u a* (last-letter absorption).
    for (const word& u : pos)
      for (const word& v : neg) {
        bool in_tail = v.size() >= u.size();
        for (std::size_t i = 0; in_tail && i + 1 < u.size(); ++i) in_tail = v[i] == u[i];
        for (std::size_t i = u.size() - 1; in_tail && i < v.size(); ++i)
          in_tail = v[i] == u.back();
        if (in_tail) return learn_result::no_separator();
      }
    std::vector<formula> disjuncts;
    for (const word& u : pos) {
      std::vector<formula> parts;
      for (std::size_t j = 0; j + 1 < u.size(); ++j)
        parts.push_back(formula::next_pow(j, formula::atom(u[j])));
      parts.push_back(
          formula::next_pow(u.size() - 1, formula::globally(formula::atom(u.back()))));
      disjuncts.push_back(formula::conj_all(std::move(parts)));
    }
    return detail::checked_result(formula::disj_all(std::move(disjuncts)), s, ops,
                                  "construct_separator");
  }

  if (ops.contains(op_next | op_and | op_or)) {
    // G is absent here; phi_u pins every position of u. Fails exactly when a
    // positive is a prefix of a negative.
    for (const word& u : pos)
      for (const word& v : neg) {
        if (u.size() > v.size()) continue;
        bool prefix = true;
        for (std::size_t i = 0; prefix && i < u.size(); ++i) prefix = v[i] == u[i];
        if (prefix) return learn_result::no_separator();
      }
    std::vector<formula> disjuncts;
    for (const word& u : pos) {
      std::vector<formula> parts;
      for (std::size_t j = 0; j < u.size(); ++j)
        parts.push_back(formula::next_pow(j, formula::atom(u[j])));
      disjuncts.push_back(formula::conj_all(std::move(parts)));
    }
    return detail::checked_result(formula::disj_all(std::move(disjuncts)), s, ops,
                                  "construct_separator");
  }

  if (ops == operator_set(op_eventually | op_globally | op_and | op_or)) {
    // Mutual weak embedding of a positive and a negative makes them agree on
    // every formula of the fragment. Otherwise each pair is separated by the
    // F-chain of the positive, the avoiding G-chain of the negative, or both.
    for (const word& u : pos)
      for (const word& v : neg)
        if (is_weak_subword(u, v) && is_weak_subword(v, u))
          return learn_result::no_separator();
    std::vector<formula> disjuncts;
    for (const word& u : pos) {
      std::vector<formula> conjuncts;
      for (const word& v : neg) {
        const bool u_in_v = is_weak_subword(u, v);  // F-chain of u would not kill v
        const bool v_in_u = is_weak_subword(v, u);  // G-chain of v would reject u
        if (!u_in_v && !v_in_u)
          conjuncts.push_back(formula::conj(f_chain(u), g_chain_avoiding(v, s.alphabet)));
        else if (!u_in_v)
          conjuncts.push_back(f_chain(u));
        else
          conjuncts.push_back(g_chain_avoiding(v, s.alphabet));
      }
      disjuncts.push_back(formula::conj_all(std::move(conjuncts)));
    }
    return detail::checked_result(formula::disj_all(std::move(disjuncts)), s, ops,
                                  "construct_separator");
  }

  if (ops == operator_set(op_eventually | op_and | op_or)) {
    std::vector<formula> conjuncts;
    std::set<word> picked;
    std::optional<letter> shared_first = pos.front().front();
    for (const word& u : pos)
      if (u.front() != *shared_first) { shared_first = std::nullopt; break; }
    bool need_ground = false;
    for (const word& v : neg) {
      if (auto w = common_weak_subword_avoiding(pos, v)) {
        word collapsed = collapse_runs(*w);
        if (picked.insert(collapsed).second) conjuncts.push_back(f_chain(collapsed));
      } else if (shared_first && v.front() != *shared_first) {
        need_ground = true;
      } else {
        return learn_result::no_separator();
      }
    }
    if (need_ground) conjuncts.insert(conjuncts.begin(), formula::atom(*shared_first));
    return detail::checked_result(formula::conj_all(std::move(conjuncts)), s, ops,
                                  "construct_separator");
  }

  if (ops == operator_set(op_globally | op_and | op_or)) {
    // Dual of the {F,and,or} construction on the swapped sample; negated
    // letters are expanded to disjunctions over the rest of the alphabet.
    sample swapped{s.alphabet, s.negatives, s.positives};
    learn_result dual = construct_separator(swapped, op_eventually | op_and | op_or);
    if (!dual.is_found()) return dual;
    std::vector<letter> alpha = detail::sorted_alphabet(s);
    auto expand = [&](auto&& self, const formula& g) -> formula {
      switch (g.kind()) {
        case node_kind::neg_atom: {
          std::vector<formula> others;
          for (const letter& b : alpha)
            if (b != g.sym()) others.push_back(formula::atom(b));
          return others.empty() ? formula::falsity() : formula::disj_all(std::move(others));
        }
        case node_kind::eventually: return formula::eventually(self(self, g.child()));
        case node_kind::globally: return formula::globally(self(self, g.child()));
        case node_kind::conj: return formula::conj(self(self, g.lhs()), self(self, g.rhs()));
        case node_kind::disj: return formula::disj(self(self, g.lhs()), self(self, g.rhs()));
        default: return g;
      }
    };
    formula out = expand(expand, dualize(dual.found_formula()));
    return detail::checked_result(std::move(out), s, ops, "construct_separator");
  }

  throw unsupported_error("construct_separator: no construction for fragment {" +
                          ops.tokens() + "}");
}

}  // namespace ltlearn
