#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "ltlearn/formula.hpp"
#include "ltlearn/word.hpp"

namespace ltlearn {

/// Truth of w[pos:] |= f with 1-based pos. Top-down recursion with
/// memoisation on (subformula, position); linear in |f|*|w| per call.
inline bool evaluate(const formula& f, const word& w, std::size_t pos) {
  if (w.empty()) throw precondition_error("evaluate: empty word");
  if (pos < 1 || pos > w.size()) throw precondition_error("evaluate: position out of range");

  struct memo_t {
    std::unordered_map<const void*, std::vector<signed char>> rows;
  } memo;

  auto rec = [&](auto&& self, const formula& g, std::size_t i) -> bool {
    auto& row = memo.rows[g.id()];
    if (row.empty()) row.assign(w.size() + 1, -1);
    if (row[i] >= 0) return row[i] != 0;
    bool v = false;
    switch (g.kind()) {
      case node_kind::truth: v = true; break;
      case node_kind::falsity: v = false; break;
      case node_kind::atom: v = w[i - 1] == g.sym(); break;
      case node_kind::neg_atom: v = w[i - 1] != g.sym(); break;
      case node_kind::next:
        v = i < w.size() && self(self, g.child(), i + 1);
        break;
      case node_kind::eventually:
        for (std::size_t j = i; j <= w.size() && !v; ++j) v = self(self, g.child(), j);
        break;
      case node_kind::globally:
        v = true;
        for (std::size_t j = i; j <= w.size() && v; ++j) v = self(self, g.child(), j);
        break;
      case node_kind::until:
        for (std::size_t j = i; j <= w.size(); ++j) {
          if (self(self, g.rhs(), j)) { v = true; break; }
          if (!self(self, g.lhs(), j)) break;
        }
        break;
      case node_kind::conj:
        v = self(self, g.lhs(), i) && self(self, g.rhs(), i);
        break;
      case node_kind::disj:
        v = self(self, g.lhs(), i) || self(self, g.rhs(), i);
        break;
    }
    row[i] = v ? 1 : 0;
    return v;
  };
  return rec(rec, f, pos);
}

inline bool satisfies(const word& w, const formula& f) { return evaluate(f, w, 1); }

namespace detail {

/// Packed bit vector with block-wise boolean operations.
class bitvec {
public:
  bitvec() = default;
  explicit bitvec(std::size_t n) : n_(n), b_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (b_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) b_[i >> 6] |= m;
    else b_[i >> 6] &= ~m;
  }

  static bitvec bit_and(const bitvec& a, const bitvec& b) {
    bitvec r(a.n_);
    for (std::size_t i = 0; i < r.b_.size(); ++i) r.b_[i] = a.b_[i] & b.b_[i];
    return r;
  }
  static bitvec bit_or(const bitvec& a, const bitvec& b) {
    bitvec r(a.n_);
    for (std::size_t i = 0; i < r.b_.size(); ++i) r.b_[i] = a.b_[i] | b.b_[i];
    return r;
  }

  friend bool operator==(const bitvec& a, const bitvec& b) {
    return a.n_ == b.n_ && a.b_ == b.b_;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::uint64_t x : b_) h = h * 1099511628211ull + x;
    return h;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> b_;
};

struct bitvec_hash {
  std::size_t operator()(const bitvec& v) const { return v.hash(); }
};

/// Flat layout of several words in one bit vector: word k occupies
/// [offset[k], offset[k]+len[k]), bit j within the span = suffix position j+1.
struct word_layout {
  std::vector<std::size_t> offset, len;
  std::size_t total = 0;

  static word_layout of(std::span<const word> ws) {
    word_layout l;
    l.offset.reserve(ws.size());
    l.len.reserve(ws.size());
    for (const word& w : ws) {
      l.offset.push_back(l.total);
      l.len.push_back(w.size());
      l.total += w.size();
    }
    return l;
  }
};

/// Bottom-up evaluation over the flat layout; one call per operator node.
struct table_ops {
  const word_layout& layout;

  bitvec atom_row(std::span<const word> ws, const letter& c, bool negated) const {
    bitvec r(layout.total);
    for (std::size_t k = 0; k < ws.size(); ++k)
      for (std::size_t j = 0; j < ws[k].size(); ++j)
        r.set(layout.offset[k] + j, (ws[k][j] == c) != negated);
    return r;
  }
  bitvec constant_row(bool v) const {
    bitvec r(layout.total);
    if (v)
      for (std::size_t i = 0; i < layout.total; ++i) r.set(i, true);
    return r;
  }
  bitvec next(const bitvec& in) const {
    bitvec r(layout.total);
    for (std::size_t k = 0; k < layout.len.size(); ++k) {
      std::size_t o = layout.offset[k], n = layout.len[k];
      for (std::size_t j = 0; j + 1 < n; ++j) r.set(o + j, in.get(o + j + 1));
    }
    return r;
  }
  bitvec eventually(const bitvec& in) const {
    bitvec r(layout.total);
    for (std::size_t k = 0; k < layout.len.size(); ++k) {
      std::size_t o = layout.offset[k], n = layout.len[k];
      bool acc = false;
      for (std::size_t j = n; j-- > 0;) {
        acc = acc || in.get(o + j);
        r.set(o + j, acc);
      }
    }
    return r;
  }
  bitvec globally(const bitvec& in) const {
    bitvec r(layout.total);
    for (std::size_t k = 0; k < layout.len.size(); ++k) {
      std::size_t o = layout.offset[k], n = layout.len[k];
      bool acc = true;
      for (std::size_t j = n; j-- > 0;) {
        acc = acc && in.get(o + j);
        r.set(o + j, acc);
      }
    }
    return r;
  }
  bitvec until(const bitvec& l, const bitvec& r_in) const {
    bitvec r(layout.total);
    for (std::size_t k = 0; k < layout.len.size(); ++k) {
      std::size_t o = layout.offset[k], n = layout.len[k];
      bool acc = false;
      for (std::size_t j = n; j-- > 0;) {
        acc = r_in.get(o + j) || (l.get(o + j) && acc);
        r.set(o + j, acc);
      }
    }
    return r;
  }

  bitvec of_formula(const formula& f, std::span<const word> ws) const {
    switch (f.kind()) {
      case node_kind::truth: return constant_row(true);
      case node_kind::falsity: return constant_row(false);
      case node_kind::atom: return atom_row(ws, f.sym(), false);
      case node_kind::neg_atom: return atom_row(ws, f.sym(), true);
      case node_kind::next: return next(of_formula(f.child(), ws));
      case node_kind::eventually: return eventually(of_formula(f.child(), ws));
      case node_kind::globally: return globally(of_formula(f.child(), ws));
      case node_kind::until: return until(of_formula(f.lhs(), ws), of_formula(f.rhs(), ws));
      case node_kind::conj:
        return bitvec::bit_and(of_formula(f.lhs(), ws), of_formula(f.rhs(), ws));
      case node_kind::disj:
        return bitvec::bit_or(of_formula(f.lhs(), ws), of_formula(f.rhs(), ws));
    }
    throw error("table_ops: bad node");
  }
};

}  // namespace detail

/// Per-word, per-suffix-position satisfaction bits for one formula, computed
/// bottom-up from the subformulas' rows. bit(k, 1) decides membership of word
/// k in the language of the formula restricted to the given words.
class semantics_table {
public:
  semantics_table(const formula& f, std::span<const word> ws)
      : layout_(detail::word_layout::of(ws)) {
    for (const word& w : ws)
      if (w.empty()) throw precondition_error("semantics_table: empty word");
    bits_ = detail::table_ops{layout_}.of_formula(f, ws);
  }

  std::size_t word_count() const { return layout_.len.size(); }
  std::size_t row_length(std::size_t word_index) const { return layout_.len.at(word_index); }

  /// 1-based position within word word_index.
  bool bit(std::size_t word_index, std::size_t position) const {
    if (position < 1 || position > layout_.len.at(word_index))
      throw precondition_error("semantics_table: position out of range");
    return bits_.get(layout_.offset[word_index] + position - 1);
  }

private:
  detail::word_layout layout_;
  detail::bitvec bits_;
};

}  // namespace ltlearn
