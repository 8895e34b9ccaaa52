#pragma once

#include "ltlearn/degenerate.hpp"
#include "ltlearn/exact.hpp"
#include "ltlearn/fattern.hpp"
#include "ltlearn/pattern.hpp"
#include "ltlearn/sample.hpp"

namespace ltlearn {

/// Minimal-size separating formula for fragments with a known decision
/// procedure: existence is settled by the fragment's constructive separator
/// (or polynomial learner), whose size then caps an exact search. For
/// fragments where only a non-constructive size bound is known this throws;
/// run learn_exact with an explicit bound instead.
inline learn_result learn_minimal(const sample& s, operator_set ops,
                                  const exact_options& opt = {}) {
  s.validate();
  if (ops.has(op_until))
    throw unsupported_error("learn_minimal: no size bound is known for fragments with U; "
                            "use learn_exact with an explicit bound");
  if (ops.has(op_neg))
    throw unsupported_error("learn_minimal: fragments with negation are not supported; "
                            "use learn_exact with an explicit bound");

  // One side empty: a constant separates and is minimal.
  if (s.negatives.empty() || s.positives.empty()) return learn_exact(s, ops, 1, opt);

  auto cap_and_search = [&](const learn_result& witness) {
    if (!witness.is_found()) return witness;
    learn_result r = learn_exact(s, ops, witness.found_size(), opt);
    if (!r.is_found()) throw error("learn_minimal: exact search missed the witness cap");
    return r;
  };

  if (ops.subset_of(op_and | op_or)) return cap_and_search(learn_bool(s, ops));
  if (ops.subset_of(op_eventually | op_globally | op_next))
    return cap_and_search(learn_unary(s, ops));
  if (ops == operator_set(op_globally | op_and)) return cap_and_search(learn_gand(s));
  if (ops == operator_set(op_eventually | op_or)) return cap_and_search(learn_for_fixed(s));

  if (ops.contains(op_globally | op_next | op_and | op_or) ||
      ops.contains(op_next | op_and | op_or) ||
      ops == operator_set(op_eventually | op_globally | op_and | op_or) ||
      ops == operator_set(op_eventually | op_and | op_or) ||
      ops == operator_set(op_globally | op_and | op_or))
    return cap_and_search(construct_separator(s, ops));

  if (ops == operator_set(op_next | op_and)) {
    auto p = greedy_xand(s);
    if (!p) return learn_result::no_separator();
    return cap_and_search(learn_result::found(p->to_formula()));
  }

  if (ops == operator_set(op_eventually | op_and))
    return cap_and_search(learn_fand_heuristic(s));

  if (ops == operator_set(op_globally | op_or)) {
    // Dual of the {F,and} learner on the swapped sample.
    sample swapped{s.alphabet, s.negatives, s.positives};
    learn_result dual = learn_fand_heuristic(swapped);
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
    formula witness = expand(expand, dualize(dual.found_formula()));
    if (!separates(witness, s) || !in_fragment(witness, ops))
      throw error("learn_minimal: internal dual check failed");
    return cap_and_search(learn_result::found(std::move(witness)));
  }

  throw unsupported_error("learn_minimal: no constructive size bound for fragment {" +
                          ops.tokens() + "}; use learn_exact with an explicit bound");
}

}  // namespace ltlearn
