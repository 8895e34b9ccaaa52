#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ltlearn/formula.hpp"
#include "ltlearn/sample.hpp"
#include "ltlearn/semantics.hpp"

namespace ltlearn {

/// LTL(X,and) normal form: letters pinned at strictly increasing positions.
/// A word satisfies the pattern iff it is long enough and carries the given
/// letter at every pinned position.
class pattern {
public:
  explicit pattern(std::vector<std::pair<std::size_t, letter>> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty()) throw precondition_error("pattern: no positions");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].first < 1) throw precondition_error("pattern: positions start at 1");
      if (i > 0 && entries_[i].first <= entries_[i - 1].first)
        throw precondition_error("pattern: positions must be strictly increasing");
    }
  }

  const std::vector<std::pair<std::size_t, letter>>& entries() const { return entries_; }
  std::size_t width() const { return entries_.size(); }
  std::size_t last() const { return entries_.back().first; }
  std::size_t size() const { return last() + 2 * (width() - 1); }

  /// Nested form X^{p1-1}(c1 & X^{p2-p1}(c2 & ...)); its size equals size().
  formula to_formula() const {
    std::size_t i = entries_.size() - 1;
    formula acc = formula::atom(entries_[i].second);
    while (i-- > 0) {
      std::size_t gap = entries_[i + 1].first - entries_[i].first;
      acc = formula::conj(formula::atom(entries_[i].second),
                          formula::next_pow(gap, std::move(acc)));
    }
    return formula::next_pow(entries_.front().first - 1, std::move(acc));
  }

  bool matches(const word& w) const {
    for (const auto& [p, c] : entries_)
      if (p > w.size() || w[p - 1] != c) return false;
    return true;
  }

private:
  std::vector<std::pair<std::size_t, letter>> entries_;
};

/// Equivalent pattern of size <= |f| for f over letters, X and conjunction;
/// std::nullopt when f pins two different letters at one position (f is then
/// equivalent to false). Formulas containing true/false atoms are rejected:
/// patterns pin letters only.
inline std::optional<pattern> normalize_to_pattern(const formula& f) {
  if (!in_fragment(f, op_next | op_and))
    throw fragment_error("normalize_to_pattern: formula outside LTL(X,and)");

  std::map<std::size_t, letter> pins;
  bool conflict = false;
  auto walk = [&](auto&& self, const formula& g, std::size_t shift) -> void {
    if (conflict) return;
    switch (g.kind()) {
      case node_kind::atom: {
        auto [it, fresh] = pins.emplace(shift + 1, g.sym());
        if (!fresh && it->second != g.sym()) conflict = true;
        return;
      }
      case node_kind::next:
        self(self, g.child(), shift + 1);
        return;
      case node_kind::conj:
        self(self, g.lhs(), shift);
        self(self, g.rhs(), shift);
        return;
      default:
        throw fragment_error("normalize_to_pattern: patterns pin letters only");
    }
  };
  walk(walk, f, 0);
  if (conflict) return std::nullopt;
  return pattern({pins.begin(), pins.end()});
}

/// One step of the greedy cover, recorded for inspection.
struct greedy_step {
  std::size_t position;                     // chosen agreement position
  std::vector<std::size_t> chosen_after;    // positions chosen so far
  std::vector<std::size_t> covered_after;   // negatives covered so far
};

/// Greedy log(n)-approximation for learning LTL(X,and).
///
/// Agreement positions X (all positives carry one common letter) are the only
/// positions a separating pattern may pin. A position i kills negative j when
/// v_j is shorter than i or disagrees at i; a pattern separates iff its
/// positions kill every negative. For every candidate last position the
/// greedy cover picks the position killing the most uncovered negatives; the
/// best size over all last positions is returned, std::nullopt when no
/// separating pattern exists. When one exists the size is within a ln(n)
/// factor of the minimum.
inline std::optional<pattern> greedy_xand(const sample& s,
                                          std::vector<greedy_step>* trace = nullptr) {
  s.validate();
  const std::size_t n = s.negatives.size();

  std::vector<letter> alpha = s.alphabet;
  std::sort(alpha.begin(), alpha.end());

  if (s.positives.empty()) {
    // Any pinned letter works; the position one past the longest negative
    // always kills everything. Smallest single-position pattern, letter ties
    // broken lexicographically.
    std::size_t lmax = 0;
    for (const word& v : s.negatives) lmax = std::max(lmax, v.size());
    for (std::size_t i = 1; i <= lmax + 1; ++i)
      for (const letter& c : alpha) {
        bool kills_all = true;
        for (const word& v : s.negatives)
          if (i <= v.size() && v[i - 1] == c) { kills_all = false; break; }
        if (kills_all) return pattern({{i, c}});
      }
    throw error("greedy_xand: unreachable");
  }

  std::size_t min_pos_len = s.positives.front().size();
  for (const word& u : s.positives) min_pos_len = std::min(min_pos_len, u.size());

  struct agree_pos {
    std::size_t position;
    letter sym;
    std::vector<std::size_t> kills;  // negative indices killed by pinning here
  };
  std::vector<agree_pos> agreement;
  for (std::size_t i = 1; i <= min_pos_len; ++i) {
    const letter& c = s.positives.front()[i - 1];
    bool same = true;
    for (const word& u : s.positives)
      if (u[i - 1] != c) { same = false; break; }
    if (!same) continue;
    agree_pos ap{i, c, {}};
    for (std::size_t j = 0; j < n; ++j) {
      const word& v = s.negatives[j];
      if (v.size() < i || v[i - 1] != c) ap.kills.push_back(j);
    }
    agreement.push_back(std::move(ap));
  }
  if (agreement.empty()) return std::nullopt;

  std::optional<std::vector<std::size_t>> best;  // indices into agreement
  std::size_t best_size = 0, best_last = 0;

  for (std::size_t li = 0; li < agreement.size(); ++li) {
    const std::size_t last_pos = agreement[li].position;
    std::vector<char> covered(n, 0);
    std::vector<std::size_t> chosen{li};
    std::size_t covered_count = 0;
    auto add = [&](std::size_t idx) {
      for (std::size_t j : agreement[idx].kills)
        if (!covered[j]) { covered[j] = 1; ++covered_count; }
      if (trace) {
        greedy_step st;
        st.position = agreement[idx].position;
        for (std::size_t q : chosen) st.chosen_after.push_back(agreement[q].position);
        for (std::size_t j = 0; j < n; ++j)
          if (covered[j]) st.covered_after.push_back(j);
        trace->push_back(std::move(st));
      }
    };
    add(li);

    bool failed = false;
    while (covered_count < n) {
      std::size_t best_idx = agreement.size(), best_gain = 0;
      for (std::size_t idx = 0; idx < li; ++idx) {  // positions < last only
        if (std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
        std::size_t gain = 0;
        for (std::size_t j : agreement[idx].kills)
          if (!covered[j]) ++gain;
        if (gain > best_gain) { best_gain = gain; best_idx = idx; }
      }
      if (best_gain == 0) { failed = true; break; }
      chosen.push_back(best_idx);
      add(best_idx);
    }
    if (failed) continue;

    std::size_t size = last_pos + 2 * (chosen.size() - 1);
    if (!best || size < best_size || (size == best_size && last_pos < best_last)) {
      std::sort(chosen.begin(), chosen.end());
      best = chosen;
      best_size = size;
      best_last = last_pos;
    }
  }

  if (!best) return std::nullopt;
  std::vector<std::pair<std::size_t, letter>> entries;
  for (std::size_t idx : *best) entries.emplace_back(agreement[idx].position, agreement[idx].sym);
  return pattern(std::move(entries));
}

/// Replaces every disjunction by one of its sides, for samples with a single
/// positive word. The result separates, is no larger, and uses no `or`.
/// Accepts formulas over letters, X, and, or, and optionally F.
inline formula remove_disjunctions(const formula& f, const sample& s) {
  s.validate();
  if (s.positives.size() != 1)
    throw precondition_error("remove_disjunctions: exactly one positive word required");
  if (!in_fragment(f, op_next | op_and | op_or | op_eventually))
    throw fragment_error("remove_disjunctions: formula outside LTL(F,X,and,or)");
  if (!separates(f, s))
    throw precondition_error("remove_disjunctions: formula does not separate the sample");

  const word& u = s.positives.front();
  using suffix = std::pair<const word*, std::size_t>;  // word + 1-based start

  auto choose = [&](auto&& self, const formula& g, std::size_t upos,
                    const std::vector<suffix>& negs) -> formula {
    switch (g.kind()) {
      case node_kind::atom:
      case node_kind::truth:
      case node_kind::falsity:
        return g;
      case node_kind::conj: {
        std::vector<suffix> left, right;
        for (const suffix& v : negs)
          (!evaluate(g.lhs(), *v.first, v.second) ? left : right).push_back(v);
        return formula::conj(self(self, g.lhs(), upos, left),
                             self(self, g.rhs(), upos, right));
      }
      case node_kind::disj:
        if (evaluate(g.lhs(), u, upos)) return self(self, g.lhs(), upos, negs);
        return self(self, g.rhs(), upos, negs);
      case node_kind::next: {
        std::vector<suffix> shifted;
        for (const suffix& v : negs)
          if (v.second < v.first->size()) shifted.emplace_back(v.first, v.second + 1);
        return formula::next(self(self, g.child(), upos + 1, shifted));
      }
      case node_kind::eventually: {
        std::size_t j = upos;
        while (!evaluate(g.child(), u, j)) ++j;
        std::set<suffix> dedup;
        for (const suffix& v : negs)
          for (std::size_t p = v.second; p <= v.first->size(); ++p)
            dedup.emplace(v.first, p);
        std::vector<suffix> expanded(dedup.begin(), dedup.end());
        return formula::eventually(self(self, g.child(), j, expanded));
      }
      default:
        throw fragment_error("remove_disjunctions: unexpected operator");
    }
  };

  std::vector<suffix> negs;
  for (const word& v : s.negatives) negs.emplace_back(&v, 1);
  formula out = choose(choose, f, 1, negs);

  if (out.size() > f.size() || !separates(out, s) || !in_fragment(out, op_next | op_and | op_eventually))
    throw error("remove_disjunctions: internal check failed");
  return out;
}

}  // namespace ltlearn
