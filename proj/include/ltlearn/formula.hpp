#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ltlearn/errors.hpp"
#include "ltlearn/word.hpp"

namespace ltlearn {

enum class node_kind : std::uint8_t {
  truth,
  falsity,
  atom,       // a single letter
  neg_atom,   // negated letter (negation normal form: negation on atoms only)
  next,
  eventually,
  globally,
  until,
  conj,
  disj,
};

/// Operator-set flags. A fragment is described by the operators it may use;
/// the atoms (letters, true, false) are available in every fragment, negated
/// letters only when op_neg is present.
enum op_flag : unsigned {
  op_until = 1u << 0,
  op_eventually = 1u << 1,
  op_globally = 1u << 2,
  op_next = 1u << 3,
  op_and = 1u << 4,
  op_or = 1u << 5,
  op_neg = 1u << 6,
};

class operator_set {
public:
  constexpr operator_set() = default;
  constexpr operator_set(unsigned bits) : bits_(bits) {}

  constexpr bool has(op_flag f) const { return (bits_ & f) != 0; }
  constexpr bool subset_of(operator_set o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool contains(operator_set o) const { return o.subset_of(*this); }
  constexpr unsigned bits() const { return bits_; }

  constexpr operator_set with(unsigned f) const { return operator_set(bits_ | f); }
  constexpr operator_set without(unsigned f) const { return operator_set(bits_ & ~f); }

  friend constexpr bool operator==(operator_set a, operator_set b) = default;

  /// Comma-separated token list from {U,F,G,X,and,or}; throws on unknown tokens.
  static operator_set parse_tokens(const std::string& text) {
    operator_set out;
    std::size_t i = 0;
    while (i <= text.size()) {
      std::size_t j = text.find(',', i);
      if (j == std::string::npos) j = text.size();
      std::string tok = text.substr(i, j - i);
      // trim
      while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.erase(tok.begin());
      while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.pop_back();
      if (!tok.empty()) {
        if (tok == "U") out = out.with(op_until);
        else if (tok == "F") out = out.with(op_eventually);
        else if (tok == "G") out = out.with(op_globally);
        else if (tok == "X") out = out.with(op_next);
        else if (tok == "and") out = out.with(op_and);
        else if (tok == "or") out = out.with(op_or);
        else throw error("unknown fragment token: '" + tok + "'");
      }
      if (j == text.size()) break;
      i = j + 1;
    }
    return out;
  }

  std::string tokens() const {
    std::string out;
    auto add = [&](const char* t) {
      if (!out.empty()) out += ',';
      out += t;
    };
    if (has(op_until)) add("U");
    if (has(op_eventually)) add("F");
    if (has(op_globally)) add("G");
    if (has(op_next)) add("X");
    if (has(op_and)) add("and");
    if (has(op_or)) add("or");
    return out;
  }

private:
  unsigned bits_ = 0;
};

inline constexpr operator_set ops_full_no_until =
    op_eventually | op_globally | op_next | op_and | op_or;
inline constexpr operator_set ops_full = ops_full_no_until.with(op_until);

/// Immutable LTL formula in negation normal form. Copies are cheap (shared
/// subtrees); all observers are const and thread-safe.
class formula {
  struct node {
    node_kind kind;
    ltlearn::letter sym;  // atom / neg_atom only
    std::shared_ptr<const node> lhs, rhs;
    std::size_t size;
  };

public:
  static formula truth() { return make(node_kind::truth, {}, nullptr, nullptr, 1); }
  static formula falsity() { return make(node_kind::falsity, {}, nullptr, nullptr, 1); }
  static formula atom(ltlearn::letter a) {
    return make(node_kind::atom, std::move(a), nullptr, nullptr, 1);
  }
  static formula neg_atom(ltlearn::letter a) {
    return make(node_kind::neg_atom, std::move(a), nullptr, nullptr, 2);
  }
  static formula next(formula f) { return unary(node_kind::next, std::move(f)); }
  static formula eventually(formula f) { return unary(node_kind::eventually, std::move(f)); }
  static formula globally(formula f) { return unary(node_kind::globally, std::move(f)); }
  static formula until(formula l, formula r) { return binary(node_kind::until, std::move(l), std::move(r)); }
  static formula conj(formula l, formula r) { return binary(node_kind::conj, std::move(l), std::move(r)); }
  static formula disj(formula l, formula r) { return binary(node_kind::disj, std::move(l), std::move(r)); }

  /// Right-nested conjunction of a non-empty list.
  static formula conj_all(std::vector<formula> fs) {
    return fold(node_kind::conj, std::move(fs));
  }
  /// Right-nested disjunction of a non-empty list.
  static formula disj_all(std::vector<formula> fs) {
    return fold(node_kind::disj, std::move(fs));
  }
  /// X^k f.
  static formula next_pow(std::size_t k, formula f) {
    while (k--) f = next(std::move(f));
    return f;
  }

  node_kind kind() const { return n_->kind; }
  bool is(node_kind k) const { return n_->kind == k; }
  const ltlearn::letter& sym() const { return n_->sym; }
  formula child() const { return formula(n_->lhs); }
  formula lhs() const { return formula(n_->lhs); }
  formula rhs() const { return formula(n_->rhs); }

  /// Node count of the syntactic tree; a negated letter counts two nodes.
  std::size_t size() const { return n_->size; }

  bool is_unary() const {
    auto k = n_->kind;
    return k == node_kind::next || k == node_kind::eventually || k == node_kind::globally;
  }
  bool is_binary() const {
    auto k = n_->kind;
    return k == node_kind::until || k == node_kind::conj || k == node_kind::disj;
  }
  bool is_leaf() const { return !is_unary() && !is_binary(); }

  const void* id() const { return n_.get(); }

  friend int compare(const formula& a, const formula& b);

private:
  explicit formula(std::shared_ptr<const node> n) : n_(std::move(n)) {}

  static formula make(node_kind k, ltlearn::letter sym, std::shared_ptr<const node> l,
                      std::shared_ptr<const node> r, std::size_t size) {
    return formula(std::make_shared<const node>(node{k, std::move(sym), std::move(l), std::move(r), size}));
  }
  static formula unary(node_kind k, formula f) {
    auto size = f.n_->size + 1;
    return make(k, {}, std::move(f.n_), nullptr, size);
  }
  static formula binary(node_kind k, formula l, formula r) {
    auto size = l.n_->size + r.n_->size + 1;
    return make(k, {}, std::move(l.n_), std::move(r.n_), size);
  }
  static formula fold(node_kind k, std::vector<formula> fs) {
    if (fs.empty()) throw precondition_error("empty connective list");
    formula acc = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;)
      acc = binary(k, fs[i], std::move(acc));
    return acc;
  }

  std::shared_ptr<const node> n_;
};

/// Rank used by the total order: true < false < letter < negated letter
/// < X < F < G < U < and < or.
inline int kind_rank(node_kind k) { return static_cast<int>(k); }

/// Total order on formulas: size first, then operator rank, then letters and
/// children lexicographically. Fixes deterministic tie-breaking wherever a
/// minimal formula is reported.
inline int compare(const formula& a, const formula& b) {
  if (a.n_ == b.n_) return 0;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.kind() != b.kind()) return kind_rank(a.kind()) < kind_rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case node_kind::truth:
    case node_kind::falsity:
      return 0;
    case node_kind::atom:
    case node_kind::neg_atom:
      return a.sym().compare(b.sym()) < 0 ? -1 : (a.sym() == b.sym() ? 0 : 1);
    case node_kind::next:
    case node_kind::eventually:
    case node_kind::globally:
      return compare(a.child(), b.child());
    default: {
      int c = compare(a.lhs(), b.lhs());
      return c != 0 ? c : compare(a.rhs(), b.rhs());
    }
  }
}

inline bool operator==(const formula& a, const formula& b) { return compare(a, b) == 0; }
inline bool operator!=(const formula& a, const formula& b) { return compare(a, b) != 0; }
inline bool operator<(const formula& a, const formula& b) { return compare(a, b) < 0; }

/// True when every operator node of f is allowed by the set. Letters and the
/// constants pass in every fragment; negated letters require op_neg.
inline bool in_fragment(const formula& f, operator_set ops) {
  switch (f.kind()) {
    case node_kind::truth:
    case node_kind::falsity:
    case node_kind::atom:
      return true;
    case node_kind::neg_atom:
      return ops.has(op_neg);
    case node_kind::next:
      return ops.has(op_next) && in_fragment(f.child(), ops);
    case node_kind::eventually:
      return ops.has(op_eventually) && in_fragment(f.child(), ops);
    case node_kind::globally:
      return ops.has(op_globally) && in_fragment(f.child(), ops);
    case node_kind::until:
      return ops.has(op_until) && in_fragment(f.lhs(), ops) && in_fragment(f.rhs(), ops);
    case node_kind::conj:
      return ops.has(op_and) && in_fragment(f.lhs(), ops) && in_fragment(f.rhs(), ops);
    case node_kind::disj:
      return ops.has(op_or) && in_fragment(f.lhs(), ops) && in_fragment(f.rhs(), ops);
  }
  return false;
}

/// Negation dual: swaps F/G and and/or, flips atoms. Valid only without X and
/// U, where a word satisfies dualize(f) iff it does not satisfy f.
inline formula dualize(const formula& f) {
  switch (f.kind()) {
    case node_kind::truth:
      return formula::falsity();
    case node_kind::falsity:
      return formula::truth();
    case node_kind::atom:
      return formula::neg_atom(f.sym());
    case node_kind::neg_atom:
      return formula::atom(f.sym());
    case node_kind::eventually:
      return formula::globally(dualize(f.child()));
    case node_kind::globally:
      return formula::eventually(dualize(f.child()));
    case node_kind::conj:
      return formula::disj(dualize(f.lhs()), dualize(f.rhs()));
    case node_kind::disj:
      return formula::conj(dualize(f.lhs()), dualize(f.rhs()));
    case node_kind::next:
    case node_kind::until:
      throw unsupported_error("dualize: X and U have no finite-trace dual");
  }
  throw error("dualize: bad node");
}

inline std::size_t count_kind(const formula& f, node_kind k) {
  std::size_t n = f.kind() == k ? 1 : 0;
  if (f.is_unary()) return n + count_kind(f.child(), k);
  if (f.is_binary()) return n + count_kind(f.lhs(), k) + count_kind(f.rhs(), k);
  return n;
}

}  // namespace ltlearn
