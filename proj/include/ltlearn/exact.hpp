#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ltlearn/formula.hpp"
#include "ltlearn/parse.hpp"
#include "ltlearn/sample.hpp"
#include "ltlearn/semantics.hpp"

namespace ltlearn {

struct exact_options {
  /// Merge candidates with identical satisfaction tables, keeping the smaller
  /// formula. Separation is a function of the table alone, so this preserves
  /// the minimal size. false = plain enumeration (oracle mode).
  bool pruned = true;
  /// Cap on the number of formulas kept per size layer; enumeration grows
  /// exponentially with the bound, so blowups fail fast instead of thrashing.
  std::size_t layer_limit = 1'000'000;
  /// Worker threads for table evaluation within a layer. The result is
  /// independent of the worker count.
  unsigned jobs = 1;
};

/// Minimal-size separating formula over the fragment, searched by inductive
/// enumeration of all formulas of size <= max_size. Candidates are built from
/// smaller subformulas' tables, so each combination costs time linear in the
/// sample. Letters (and negated letters when enabled) are the only atoms used
/// inside larger formulas; the constants are considered as whole formulas.
/// Ties are broken by the formula total order.
inline learn_result learn_exact(const sample& s, operator_set fragment,
                                std::size_t max_size, const exact_options& opt = {}) {
  s.validate();
  if (max_size < 1) throw precondition_error("learn_exact: max_size must be >= 1");

  auto dedup = [](const std::vector<word>& ws) {
    std::vector<word> out;
    std::set<word> seen;
    for (const word& w : ws)
      if (seen.insert(w).second) out.push_back(w);
    return out;
  };
  const std::vector<word> pos = dedup(s.positives);
  const std::vector<word> neg = dedup(s.negatives);
  std::vector<word> all = pos;
  all.insert(all.end(), neg.begin(), neg.end());

  const auto layout = detail::word_layout::of(all);
  const detail::table_ops tops{layout};

  auto is_separating = [&](const detail::bitvec& b) {
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (!b.get(layout.offset[k])) return false;
    for (std::size_t k = 0; k < neg.size(); ++k)
      if (b.get(layout.offset[pos.size() + k])) return false;
    return true;
  };

  auto accept = [&](formula f) {
    if (!separates(f, s) || !in_fragment(f, fragment))
      throw error("learn_exact: internal check failed on " + format_formula(f));
    return learn_result::found(std::move(f));
  };

  std::vector<letter> alpha = s.alphabet;
  std::sort(alpha.begin(), alpha.end());

  // Size-1 formulas, in total order: true < false < letters.
  if (neg.empty()) return accept(formula::truth());
  if (pos.empty()) return accept(formula::falsity());
  for (const letter& c : alpha)
    if (is_separating(tops.atom_row(all, c, false))) return accept(formula::atom(c));
  if (max_size == 1) return learn_result::none_within_bound(max_size);

  struct item {
    formula f;
    detail::bitvec bits;
  };
  std::vector<std::vector<item>> layers(max_size + 1);
  std::unordered_set<detail::bitvec, detail::bitvec_hash> seen;

  for (const letter& c : alpha) {
    auto b = tops.atom_row(all, c, false);
    if (opt.pruned && !seen.insert(b).second) continue;
    layers[1].push_back({formula::atom(c), std::move(b)});
  }

  enum class cand { neg, next, ev, gl, until, conj, disj };
  struct block {
    cand op;
    std::size_t split;  // left layer for binary ops, unused otherwise
    std::size_t count;
  };

  const unsigned jobs = std::max(1u, opt.jobs);

  for (std::size_t k = 2; k <= max_size; ++k) {
    std::vector<block> blocks;
    if (k == 2 && fragment.has(op_neg)) blocks.push_back({cand::neg, 0, alpha.size()});
    if (fragment.has(op_next)) blocks.push_back({cand::next, 0, layers[k - 1].size()});
    if (fragment.has(op_eventually)) blocks.push_back({cand::ev, 0, layers[k - 1].size()});
    if (fragment.has(op_globally)) blocks.push_back({cand::gl, 0, layers[k - 1].size()});
    for (cand op : {cand::until, cand::conj, cand::disj}) {
      if (op == cand::until && !fragment.has(op_until)) continue;
      if (op == cand::conj && !fragment.has(op_and)) continue;
      if (op == cand::disj && !fragment.has(op_or)) continue;
      for (std::size_t i = 1; i + 1 < k; ++i)
        blocks.push_back({op, i, layers[i].size() * layers[k - 1 - i].size()});
    }

    std::size_t total = 0;
    for (const block& b : blocks) total += b.count;

    auto make = [&](std::size_t idx) -> item {
      for (const block& b : blocks) {
        if (idx >= b.count) {
          idx -= b.count;
          continue;
        }
        switch (b.op) {
          case cand::neg:
            return {formula::neg_atom(alpha[idx]), tops.atom_row(all, alpha[idx], true)};
          case cand::next: {
            const item& ch = layers[k - 1][idx];
            return {formula::next(ch.f), tops.next(ch.bits)};
          }
          case cand::ev: {
            const item& ch = layers[k - 1][idx];
            return {formula::eventually(ch.f), tops.eventually(ch.bits)};
          }
          case cand::gl: {
            const item& ch = layers[k - 1][idx];
            return {formula::globally(ch.f), tops.globally(ch.bits)};
          }
          default: {
            const auto& ls = layers[b.split];
            const auto& rs = layers[k - 1 - b.split];
            const item& l = ls[idx / rs.size()];
            const item& r = rs[idx % rs.size()];
            if (b.op == cand::until)
              return {formula::until(l.f, r.f), tops.until(l.bits, r.bits)};
            if (b.op == cand::conj)
              return {formula::conj(l.f, r.f), detail::bitvec::bit_and(l.bits, r.bits)};
            return {formula::disj(l.f, r.f), detail::bitvec::bit_or(l.bits, r.bits)};
          }
        }
      }
      throw error("learn_exact: candidate index out of range");
    };

    auto keep = [&](item&& it) -> std::optional<learn_result> {
      if (opt.pruned && !seen.insert(it.bits).second) return std::nullopt;
      if (is_separating(it.bits)) return accept(it.f);
      layers[k].push_back(std::move(it));
      if (layers[k].size() > opt.layer_limit)
        throw resource_limit_error("learn_exact: layer limit exceeded at size " +
                                   std::to_string(k));
      return std::nullopt;
    };

    if (jobs == 1) {
      for (std::size_t idx = 0; idx < total; ++idx)
        if (auto r = keep(make(idx))) return *r;
    } else {
      // Waves of candidates are evaluated in parallel, then merged in index
      // order, so pruning and tie-breaking match the serial run exactly.
      const std::size_t wave = 1 << 16;
      std::vector<std::optional<item>> buf(std::min(wave, total));
      for (std::size_t w0 = 0; w0 < total; w0 += wave) {
        const std::size_t n = std::min(wave, total - w0);
        std::vector<std::thread> threads;
        const std::size_t per = (n + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
          const std::size_t lo = t * per, hi = std::min(n, lo + per);
          if (lo >= hi) break;
          threads.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) buf[i] = make(w0 + i);
          });
        }
        for (auto& th : threads) th.join();
        for (std::size_t i = 0; i < n; ++i)
          if (auto r = keep(std::move(*buf[i]))) return *r;
      }
    }
  }
  return learn_result::none_within_bound(max_size);
}

}  // namespace ltlearn
