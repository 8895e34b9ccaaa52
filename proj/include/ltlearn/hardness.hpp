#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltlearn/fattern.hpp"
#include "ltlearn/formula.hpp"
#include "ltlearn/parse.hpp"
#include "ltlearn/pattern.hpp"
#include "ltlearn/sample.hpp"

namespace ltlearn {

/// Hitting set: subsets of [1, ground_size]; a hitting set meets every one.
struct hitting_set_instance {
  std::size_t ground_size = 0;
  std::vector<std::vector<std::size_t>> subsets;
  std::size_t budget = 0;

  void validate() const {
    for (const auto& c : subsets) {
      if (c.empty()) throw precondition_error("hitting set: empty subset");
      for (std::size_t x : c)
        if (x < 1 || x > ground_size)
          throw precondition_error("hitting set: element out of range");
    }
  }
};

/// Set cover: sets over [1, universe_size]; a cover's union is the universe.
struct set_cover_instance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t budget = 0;

  void validate() const {
    for (const auto& c : sets)
      for (std::size_t x : c)
        if (x < 1 || x > universe_size)
          throw precondition_error("set cover: element out of range");
  }
};

struct cover_solution {
  std::size_t k = 0;
  std::vector<std::size_t> chosen;  // ground elements / set indices, ascending
};

namespace detail {

/// First subset of {1..n} of each cardinality 0,1,2,... (in lexicographic
/// order) accepted by `good`; exact minimum by exhaustive scan.
template <typename Pred>
std::optional<cover_solution> minimal_subset(std::size_t n, Pred good) {
  if (n > 20) throw resource_limit_error("exact cover oracle: ground set larger than 20");
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i + 1;
    for (;;) {
      if (good(comb)) return cover_solution{k, comb};
      // next lexicographic combination
      std::size_t i = k;
      while (i-- > 0) {
        if (comb[i] < n - (k - 1 - i)) {
          ++comb[i];
          for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
          break;
        }
        if (i == 0) goto next_k;
      }
      if (k == 0) break;
    }
  next_k:;
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact minimal hitting set by increasing-cardinality subset scan.
inline cover_solution solve_hitting_set(const hitting_set_instance& inst) {
  inst.validate();
  auto hits_all = [&](const std::vector<std::size_t>& h) {
    for (const auto& c : inst.subsets) {
      bool hit = false;
      for (std::size_t x : c)
        if (std::binary_search(h.begin(), h.end(), x)) { hit = true; break; }
      if (!hit) return false;
    }
    return true;
  };
  auto sol = detail::minimal_subset(inst.ground_size, hits_all);
  if (!sol) throw error("solve_hitting_set: no hitting set (unreachable for valid instances)");
  return *sol;
}

/// Exact minimal set cover; std::nullopt when some element is uncoverable.
inline std::optional<cover_solution> solve_set_cover(const set_cover_instance& inst) {
  inst.validate();
  auto covers = [&](const std::vector<std::size_t>& picked) {
    std::vector<char> seen(inst.universe_size + 1, 0);
    for (std::size_t i : picked)
      for (std::size_t x : inst.sets[i - 1]) seen[x] = 1;
    for (std::size_t x = 1; x <= inst.universe_size; ++x)
      if (!seen[x]) return false;
    return true;
  };
  return detail::minimal_subset(inst.sets.size(), covers);
}

/// A reduction's output: sample, fragment, size threshold, optional certified
/// witness, and the provenance needed to re-verify the iff claim.
struct generated_benchmark {
  sample instance_sample;  // may break sample invariants when flagged below
  operator_set fragment;
  std::int64_t threshold = 0;  // K
  std::optional<formula> witness;
  std::string reduction;
  nlohmann::json instance;
  std::map<std::string, std::int64_t> constants;
  bool unsatisfiable_cover = false;
};

inline nlohmann::json benchmark_manifest(const generated_benchmark& b,
                                         const std::string& sample_path) {
  nlohmann::json j{
      {"reduction", b.reduction},
      {"instance", b.instance},
      {"sample", sample_path},
      {"fragment", b.fragment.tokens()},
      {"K", b.threshold},
      {"constants", b.constants},
  };
  if (b.witness) j["witness"] = format_formula(*b.witness);
  if (b.unsatisfiable_cover) j["unsatisfiable-cover"] = true;
  return j;
}

inline nlohmann::json hitting_to_json(const hitting_set_instance& i) {
  return {{"ground", i.ground_size}, {"subsets", i.subsets}, {"k", i.budget}};
}
inline hitting_set_instance hitting_from_json(const nlohmann::json& j) {
  hitting_set_instance i;
  i.ground_size = j.at("ground").get<std::size_t>();
  i.subsets = j.at("subsets").get<std::vector<std::vector<std::size_t>>>();
  i.budget = j.at("k").get<std::size_t>();
  i.validate();
  return i;
}
inline nlohmann::json setcover_to_json(const set_cover_instance& i) {
  return {{"universe", i.universe_size}, {"sets", i.sets}, {"k", i.budget}};
}
inline set_cover_instance setcover_from_json(const nlohmann::json& j) {
  set_cover_instance i;
  i.universe_size = j.at("universe").get<std::size_t>();
  i.sets = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
  i.budget = j.at("k").get<std::size_t>();
  i.validate();
  return i;
}

/// Hitting set -> LTL(F,or) learning over an alphabet of two letters per
/// ground element. Word j carries a_i at position i+1 when i is in subset j
/// and b_i otherwise; the single negative carries only b letters. A shared
/// sentinel first letter keeps position-one atoms from undercutting the
/// threshold. There is a hitting set of size <= k iff a separating formula
/// of size <= K = 2k exists; the witness F(a_{h1} | ... | a_{hk}) realises
/// the minimum 2*k_min.
inline generated_benchmark gen_hitting_for(const hitting_set_instance& inst) {
  inst.validate();
  const std::size_t l = inst.ground_size, n = inst.subsets.size();
  auto a = [](std::size_t i) { return "a" + std::to_string(i); };
  auto b = [](std::size_t i) { return "b" + std::to_string(i); };

  generated_benchmark out;
  out.reduction = "hitting-for";
  out.instance = hitting_to_json(inst);
  out.fragment = op_eventually | op_or;
  out.threshold = static_cast<std::int64_t>(2 * inst.budget);

  std::vector<letter> alpha;
  for (std::size_t i = 1; i <= l; ++i) alpha.push_back(a(i));
  for (std::size_t i = 1; i <= l; ++i) alpha.push_back(b(i));

  std::vector<word> pos;
  for (std::size_t j = 0; j < n; ++j) {
    word u{b(1)};
    for (std::size_t i = 1; i <= l; ++i) {
      bool in = std::find(inst.subsets[j].begin(), inst.subsets[j].end(), i) !=
                inst.subsets[j].end();
      u.push_back(in ? a(i) : b(i));
    }
    pos.push_back(std::move(u));
  }
  word v{b(1)};
  for (std::size_t i = 1; i <= l; ++i) v.push_back(b(i));

  out.instance_sample = sample::checked(alpha, pos, {v});

  cover_solution sol = solve_hitting_set(inst);
  out.constants = {{"k_min", static_cast<std::int64_t>(sol.k)},
                   {"K", out.threshold}};
  if (sol.k <= inst.budget && sol.k > 0) {
    std::vector<formula> atoms;
    for (std::size_t i : sol.chosen) atoms.push_back(formula::atom(a(i)));
    out.witness = formula::eventually(formula::disj_all(std::move(atoms)));
  }
  return out;
}

/// Set cover -> LTL(X,and) learning over {a,b}. The positive word is all-a;
/// negative j carries b at position i when set i covers j; an extra negative
/// a^l b forces position l+1 into every separating pattern. A cover of size
/// k exists iff a pattern of size <= K exists, where K = l + 2(k+1) - 1
/// counts the forced final position inside the pattern width.
inline generated_benchmark gen_setcover_xand(const set_cover_instance& inst) {
  inst.validate();
  const std::size_t l = inst.sets.size(), n = inst.universe_size;

  generated_benchmark out;
  out.reduction = "setcover-xand";
  out.instance = setcover_to_json(inst);
  out.fragment = op_next | op_and;
  out.threshold = static_cast<std::int64_t>(l + 2 * inst.budget + 1);

  word u(l + 1, "a");
  std::vector<word> negs;
  for (std::size_t j = 1; j <= n; ++j) {
    word v(l + 1, "a");
    for (std::size_t i = 1; i <= l; ++i) {
      bool in = std::find(inst.sets[i - 1].begin(), inst.sets[i - 1].end(), j) !=
                inst.sets[i - 1].end();
      if (in) v[i - 1] = "b";
    }
    negs.push_back(std::move(v));
  }
  word tail(l + 1, "a");
  tail[l] = "b";
  negs.push_back(std::move(tail));

  out.instance_sample = sample{{"a", "b"}, {u}, negs};

  auto sol = solve_set_cover(inst);
  if (!sol) {
    // some universe element is in no set: its negative equals the positive
    // word and no formula separates. The benchmark is still emitted, flagged.
    out.unsatisfiable_cover = true;
    out.constants = {{"K", out.threshold}};
    return out;
  }
  out.instance_sample.validate();
  out.constants = {{"k_min", static_cast<std::int64_t>(sol->k)}, {"K", out.threshold}};
  if (sol->k <= inst.budget) {
    std::vector<std::pair<std::size_t, letter>> entries;
    for (std::size_t i : sol->chosen) entries.emplace_back(i, "a");
    entries.emplace_back(l + 1, "a");
    out.witness = pattern(std::move(entries)).to_formula();
  }
  return out;
}

/// Hitting set over [1,m] -> LTL(F,and) learning over the alphabet {0..m}.
/// The positive word is 0 1 2 ... m; negative j is 0 followed by the
/// ascending complement of subset j. A hitting set of size <= k exists iff a
/// separating formula of size <= K = 3k - 1 exists; the witness is the
/// ungrounded fattern of the sorted minimal hitting set.
inline generated_benchmark gen_hitting_fand_unbounded(const hitting_set_instance& inst) {
  inst.validate();
  const std::size_t m = inst.ground_size;
  auto tok = [](std::size_t i) { return std::to_string(i); };

  generated_benchmark out;
  out.reduction = "hitting-fand";
  out.instance = hitting_to_json(inst);
  out.fragment = op_eventually | op_and;
  out.threshold = 3 * static_cast<std::int64_t>(inst.budget) - 1;

  std::vector<letter> alpha;
  word u;
  for (std::size_t i = 0; i <= m; ++i) {
    alpha.push_back(tok(i));
    u.push_back(tok(i));
  }
  std::vector<word> negs;
  for (const auto& c : inst.subsets) {
    word v{tok(0)};
    for (std::size_t i = 1; i <= m; ++i)
      if (std::find(c.begin(), c.end(), i) == c.end()) v.push_back(tok(i));
    negs.push_back(std::move(v));
  }
  out.instance_sample = sample::checked(alpha, {u}, negs);

  cover_solution sol = solve_hitting_set(inst);
  out.constants = {{"k_min", static_cast<std::int64_t>(sol.k)}, {"K", out.threshold}};
  if (sol.k <= inst.budget && sol.k > 0) {
    word w;
    for (std::size_t i : sol.chosen) w.push_back(tok(i));
    out.witness = fattern_of(w).to_formula();
  }
  return out;
}

namespace detail {

inline word ab_block(std::size_t repeats) {
  word w;
  for (std::size_t i = 0; i < repeats; ++i) {
    w.push_back("a");
    w.push_back("b");
  }
  return w;
}

struct fixed3_words {
  word u;                  // c ((ab)^{M+1} c)^m
  std::vector<word> vs;    // c w_{i,1} c ... w_{i,m} c
  std::size_t M = 0;
};

inline fixed3_words make_fixed3_words(const hitting_set_instance& inst) {
  const std::size_t m = inst.ground_size;
  fixed3_words out;
  out.M = 3 * m + 2;
  out.u.push_back("c");
  for (std::size_t j = 1; j <= m; ++j) {
    word blk = ab_block(out.M + 1);
    out.u.insert(out.u.end(), blk.begin(), blk.end());
    out.u.push_back("c");
  }
  for (const auto& t : inst.subsets) {
    word v{"c"};
    for (std::size_t j = 1; j <= m; ++j) {
      bool in = std::find(t.begin(), t.end(), j) != t.end();
      word blk = ab_block(in ? out.M : out.M + 1);
      v.insert(v.end(), blk.begin(), blk.end());
      v.push_back("c");
    }
    out.vs.push_back(std::move(v));
  }
  return out;
}

inline word fixed3_selector_word(const hitting_set_instance& inst,
                                 const std::vector<std::size_t>& hitting, std::size_t M) {
  word w{"c"};
  for (std::size_t j = 1; j <= inst.ground_size; ++j) {
    bool in = std::binary_search(hitting.begin(), hitting.end(), j);
    word blk = ab_block(in ? M + 1 : 1);
    w.insert(w.end(), blk.begin(), blk.end());
    w.push_back("c");
  }
  return w;
}

}  // namespace detail

/// Hitting set over [1,m] -> LTL(F,and) learning over the fixed alphabet
/// {a,b,c}. Words are c-delimited runs of ab; negatives shorten run j to
/// (ab)^M exactly when j is in subset i. K = 6k'M + 9m + 2 with M = 3m + 2;
/// the witness is the fattern of c z_1 c ... z_m c where z_j = (ab)^{M+1} on
/// the minimal hitting set and ab elsewhere, of size 3(2kM + 3m + 1) - 1.
inline generated_benchmark gen_hitting_fand_fixed3(const hitting_set_instance& inst) {
  inst.validate();
  const std::size_t m = inst.ground_size;
  auto words = detail::make_fixed3_words(inst);

  generated_benchmark out;
  out.reduction = "fixed3-fand";
  out.instance = hitting_to_json(inst);
  out.fragment = op_eventually | op_and;
  out.threshold = static_cast<std::int64_t>(6 * inst.budget * words.M + 9 * m + 2);
  out.instance_sample = sample::checked({"a", "b", "c"}, {words.u}, words.vs);

  cover_solution sol = solve_hitting_set(inst);
  out.constants = {{"M", static_cast<std::int64_t>(words.M)},
                   {"m", static_cast<std::int64_t>(m)},
                   {"k'", static_cast<std::int64_t>(inst.budget)},
                   {"k_min", static_cast<std::int64_t>(sol.k)},
                   {"K", out.threshold}};
  if (sol.k <= inst.budget) {
    word w = detail::fixed3_selector_word(inst, sol.chosen, words.M);
    out.witness = fattern_of(w).to_formula();
  }
  return out;
}

/// Nested-G chain over a selector word with single-letter bars (a -> b,
/// b -> a, c -> a | b), of size 3|w| - 1 + 2#c. A word falsifies it exactly
/// when the set-word ({c} for c, {a,c} for a, {b,c} for b) embeds at
/// non-decreasing positions. No link admits the letter c, so any word ending
/// in c falsifies the chain.
inline formula g_chain_letter_swapped(const word& w) {
  std::vector<formula> links;
  for (const letter& x : w) {
    if (x == "a") links.push_back(formula::atom("b"));
    else if (x == "b") links.push_back(formula::atom("a"));
    else links.push_back(formula::disj(formula::atom("a"), formula::atom("b")));
  }
  return g_chain_of(links);
}

namespace detail {

/// LTL(G,or) separator for the swapped fixed-alphabet words: an a-counting
/// chain. Its falsifying embeddings place one set per link; {a}-sets (link
/// b|c) anchor on a letters, {b,c}-sets (link a) sit between them, {c}-sets
/// (link a|b) pin the block boundaries. A selected block contributes M+1
/// anchors, one more than a shortened block can host, so every swapped
/// positive satisfies the chain while the all-long word falsifies it.
inline formula gor_counting_witness(const hitting_set_instance& inst,
                                    const std::vector<std::size_t>& hitting, std::size_t M) {
  const formula link_a = formula::disj(formula::atom("b"), formula::atom("c"));
  const formula link_gap = formula::atom("a");
  const formula link_c = formula::disj(formula::atom("a"), formula::atom("b"));

  std::vector<formula> links;
  auto gadget = [&](bool selected) {
    if (!selected) {
      links.push_back(link_a);
      return;
    }
    for (std::size_t r = 0; r < M; ++r) {
      links.push_back(link_a);
      links.push_back(link_gap);
    }
    links.push_back(link_a);
  };
  const std::size_t m = inst.ground_size;
  if (m == 1) {
    gadget(true);  // a single block needs no boundary pins
  } else {
    links.push_back(link_c);
    for (std::size_t j = 1; j <= m; ++j) {
      gadget(std::binary_search(hitting.begin(), hitting.end(), j));
      links.push_back(link_c);
    }
  }
  return g_chain_of(links);
}

}  // namespace detail

/// Dual of the fixed-alphabet reduction: the roles of the words are swapped
/// and the target fragment is LTL(G,or). K = 6k'M + 11m + 4 as stated for
/// the reduction. The letter-swapped chain over the selector word is
/// falsified by every word ending in c and never separates these samples;
/// the emitted witness is the a-counting chain instead, attached only when
/// it fits the threshold.
inline generated_benchmark gen_hitting_gor_fixed3(const hitting_set_instance& inst) {
  inst.validate();
  const std::size_t m = inst.ground_size;
  auto words = detail::make_fixed3_words(inst);

  generated_benchmark out;
  out.reduction = "fixed3-gor";
  out.instance = hitting_to_json(inst);
  out.fragment = op_globally | op_or;
  out.threshold = static_cast<std::int64_t>(6 * inst.budget * words.M + 11 * m + 4);
  out.instance_sample = sample::checked({"a", "b", "c"}, words.vs, {words.u});

  cover_solution sol = solve_hitting_set(inst);
  out.constants = {{"M", static_cast<std::int64_t>(words.M)},
                   {"m", static_cast<std::int64_t>(m)},
                   {"k'", static_cast<std::int64_t>(inst.budget)},
                   {"k_min", static_cast<std::int64_t>(sol.k)},
                   {"K", out.threshold}};
  if (sol.k <= inst.budget) {
    formula witness = inst.subsets.empty()
                          ? formula::falsity()
                          : detail::gor_counting_witness(inst, sol.chosen, words.M);
    if (static_cast<std::int64_t>(witness.size()) <= out.threshold) out.witness = witness;
  }
  return out;
}

struct pad_x_result {
  sample padded;
  std::size_t pin_formula_size = 0;  // M, the size of the full prefix pin
  std::size_t total_length = 0;      // sum of padded word lengths
  bool oversized = false;            // total_length exceeded the warn cap
};

/// Padded samples grow quadratically in the input; beyond this many letters
/// the result is flagged so front ends can warn.
inline constexpr std::size_t pad_x_warn_length = 1u << 20;

/// Padding reduction making F and G useless: for a single positive word u and
/// equal-length negatives, produces a sample on which the minimal separating
/// formula of every fragment between {X,and} and {F,G,X,and,or} has the same
/// size as the minimal LTL(X,and) separator of the original words.
/// Returns std::nullopt when some negative equals u (then nothing separates
/// the original words and the learning answer is an immediate no).
inline std::optional<pad_x_result> pad_for_x_fragments(const word& u,
                                                       const std::vector<word>& negatives) {
  if (u.empty()) throw precondition_error("pad_for_x_fragments: empty positive word");
  for (const word& v : negatives) {
    if (v.size() != u.size())
      throw precondition_error("pad_for_x_fragments: words must have equal length");
    if (v == u) return std::nullopt;
  }

  std::set<letter> sigma(u.begin(), u.end());
  for (const word& v : negatives) sigma.insert(v.begin(), v.end());
  const letter pad = *sigma.begin();

  std::vector<formula> pins;
  for (std::size_t i = 0; i < u.size(); ++i)
    pins.push_back(formula::next_pow(i, formula::atom(u[i])));
  const std::size_t M = formula::conj_all(std::move(pins)).size();

  auto padded_word = [&](const word& w) {
    word out = w;
    out.insert(out.end(), M, pad);
    return out;
  };
  const word u_pad = padded_word(u);
  std::vector<word> v_pad;
  for (const word& v : negatives) v_pad.push_back(padded_word(v));

  word block = u_pad;
  for (const word& v : v_pad) block.insert(block.end(), v.begin(), v.end());

  word big_u;
  for (std::size_t r = 0; r <= M; ++r) big_u.insert(big_u.end(), block.begin(), block.end());

  std::vector<word> big_vs;
  for (std::size_t i = 0; i < v_pad.size(); ++i) {
    word bv;
    for (std::size_t j = i; j < v_pad.size(); ++j)
      bv.insert(bv.end(), v_pad[j].begin(), v_pad[j].end());
    for (std::size_t r = 0; r < M; ++r) bv.insert(bv.end(), block.begin(), block.end());
    big_vs.push_back(std::move(bv));
  }

  pad_x_result out;
  out.pin_formula_size = M;
  out.padded = sample::checked({sigma.begin(), sigma.end()}, {big_u}, big_vs);
  out.total_length = out.padded.positives.front().size();
  for (const word& v : out.padded.negatives) out.total_length += v.size();
  out.oversized = out.total_length > pad_x_warn_length;
  return out;
}

/// Sample-level wrapper: the sample must have exactly one positive word (or,
/// with dual=true, one negative word; the roles of the words and of the two
/// sides of the output are then reversed).
inline std::optional<pad_x_result> pad_for_x_fragments(const sample& s, bool dual = false) {
  s.validate();
  const auto& singles = dual ? s.negatives : s.positives;
  const auto& others = dual ? s.positives : s.negatives;
  if (singles.size() != 1)
    throw precondition_error(dual ? "pad_for_x_fragments: exactly one negative word required"
                                  : "pad_for_x_fragments: exactly one positive word required");
  auto r = pad_for_x_fragments(singles.front(), others);
  if (!r) return r;
  if (dual) std::swap(r->padded.positives, r->padded.negatives);
  return r;
}

}  // namespace ltlearn
