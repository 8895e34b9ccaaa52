#include <catch2/catch_amalgamated.hpp>

#include "support/helpers.hpp"

using namespace ltlearn;
using test_support::mk_sample;
using test_support::w;

TEST_CASE("boolean-fragment learner") {
  {
    auto r = learn_bool(mk_sample("ab", {"ab"}, {"ba"}), op_and | op_or);
    REQUIRE(r.is_found());
    CHECK(r.found_formula() == formula::atom("a"));
  }
  {
    auto r = learn_bool(mk_sample("abc", {"ab", "bb"}, {"cb"}), op_and | op_or);
    REQUIRE(r.is_found());
    CHECK(r.found_formula() == parse_formula("(a | b)"));
    CHECK(r.found_size() == 3);
  }
  CHECK(learn_bool(mk_sample("abc", {"ab"}, {"ac"}), op_and | op_or).is_no_separator());
  // without disjunction, two distinct first letters cannot be covered
  CHECK(learn_bool(mk_sample("abc", {"ab", "bb"}, {"cb"}), op_and).is_no_separator());
  CHECK_THROWS_AS(learn_bool(mk_sample("ab", {"a"}, {"b"}), op_next), precondition_error);
}

TEST_CASE("unary-fragment learner") {
  {
    auto r = learn_unary(mk_sample("ab", {"ba"}, {"bb"}), op_eventually | op_next);
    REQUIRE(r.is_found());
    CHECK(r.found_size() == 2);
    CHECK(r.found_formula() == parse_formula("X a"));  // X precedes F in the order
  }
  {
    auto r = learn_unary(mk_sample("ab", {"aa"}, {"ab"}), op_globally);
    REQUIRE(r.is_found());
    CHECK(r.found_formula() == parse_formula("G a"));
  }
  {
    // FG a means "ends with a"
    auto r = learn_unary(mk_sample("ab", {"ba", "aba"}, {"ab", "b"}),
                         op_eventually | op_globally);
    REQUIRE(r.is_found());
    CHECK(separates(r.found_formula(), mk_sample("ab", {"ba", "aba"}, {"ab", "b"})));
  }
}

TEST_CASE("globally-and learner scans the four canonical shapes") {
  {
    auto r = learn_gand(mk_sample("ab", {"ab"}, {"bb"}));
    REQUIRE(r.is_found());
    CHECK(r.found_formula() == formula::atom("a"));
  }
  {
    auto r = learn_gand(mk_sample("ab", {"aa"}, {"ab"}));
    REQUIRE(r.is_found());
    CHECK(r.found_formula() == parse_formula("G a"));
  }
  CHECK(learn_gand(mk_sample("abc", {"ab"}, {"ac"})).is_no_separator());
}

TEST_CASE("eventually-or learner over a fixed alphabet") {
  {
    auto r = learn_for_fixed(mk_sample("ab", {"ba"}, {"bb"}));
    REQUIRE(r.is_found());
    CHECK(r.found_formula() == parse_formula("F a"));
    CHECK(r.found_size() == 2);
  }
  {
    auto r = learn_for_fixed(mk_sample("ab", {"ab", "ba"}, {"bb"}));
    REQUIRE(r.is_found());
    CHECK(r.found_formula() == parse_formula("F a"));
  }
  // expected outcome frozen from the exhaustive scan: every atom is satisfied
  // by some negative
  CHECK(learn_for_fixed(mk_sample("ab", {"ba"}, {"ab", "bb"})).is_no_separator());
  {
    sample wide = sample::checked(
        {"a", "b", "c", "d", "e", "f", "g", "h", "i"}, {w("a")}, {w("b")});
    CHECK_THROWS_AS(learn_for_fixed(wide), unsupported_error);
  }
}

TEST_CASE("constructive separators per fragment family") {
  {
    // negative inside u a*: nothing separates
    auto r = construct_separator(mk_sample("ab", {"ab"}, {"abbb"}),
                                 op_globally | op_next | op_and | op_or);
    CHECK(r.is_no_separator());
  }
  {
    // u prefix of v blocks the X,and,or construction
    auto r = construct_separator(mk_sample("ab", {"ab"}, {"aba"}), op_next | op_and | op_or);
    CHECK(r.is_no_separator());
  }
  {
    sample s = mk_sample("ab", {"ab"}, {"bb", "aa"});
    auto r = construct_separator(s, op_next | op_and | op_or);
    REQUIRE(r.is_found());
    CHECK(separates(r.found_formula(), s));
    CHECK(in_fragment(r.found_formula(), op_next | op_and | op_or));
  }
  {
    sample s = mk_sample("ab", {"ab"}, {"ba"});
    auto r = construct_separator(s, op_eventually | op_globally | op_and | op_or);
    REQUIRE(r.is_found());
    CHECK(separates(r.found_formula(), s));
    CHECK(in_fragment(r.found_formula(), op_eventually | op_globally | op_and | op_or));
  }
  {
    // one-way weak containment: the pair formula degenerates to one side
    sample s = mk_sample("ab", {"ab"}, {"b"});
    auto r = construct_separator(s, op_eventually | op_globally | op_and | op_or);
    REQUIRE(r.is_found());
    CHECK(separates(r.found_formula(), s));
  }
  {
    // mutual weak containment: no separator without X
    sample s = mk_sample("ab", {"aab"}, {"ab"});
    auto r = construct_separator(s, op_eventually | op_globally | op_and | op_or);
    CHECK(r.is_no_separator());
    CHECK_FALSE(
        test_support::brute_minimal(s, op_eventually | op_globally | op_and | op_or, 8)
            .has_value());
  }
  {
    sample s = mk_sample("abc", {"ab", "cab"}, {"ba"});
    auto r = construct_separator(s, op_eventually | op_and | op_or);
    REQUIRE(r.is_found());
    CHECK(separates(r.found_formula(), s));
  }
  {
    sample s = mk_sample("abc", {"ba"}, {"ab", "cab"});
    auto r = construct_separator(s, op_globally | op_and | op_or);
    REQUIRE(r.is_found());
    CHECK(separates(r.found_formula(), s));
    CHECK(in_fragment(r.found_formula(), op_globally | op_and | op_or));
  }
  CHECK_THROWS_AS(construct_separator(mk_sample("ab", {"a"}, {"b"}), op_next | op_and),
                  unsupported_error);
}

TEST_CASE("gxandor construction blocks exactly on the last-letter tail") {
  // last-letter absorption: u satisfying phi forces u a^k to satisfy it too
  std::mt19937_64 rng(97);
  for (int round = 0; round < 200; ++round) {
    formula f = test_support::random_formula(rng, "ab", ops_full_no_until, 6);
    word u = test_support::random_word(rng, "ab", 1, 5);
    if (!evaluate(f, u, 1)) continue;
    word ua = u;
    for (int k = 0; k < 3; ++k) {
      ua.push_back(u.back());
      CHECK(evaluate(f, ua, 1));
    }
  }
}

TEST_CASE("degenerate learners agree with brute-force minima") {
  std::mt19937_64 rng(101);
  auto words = test_support::all_words("ab", 3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int round = 0; round < 60; ++round) {
    std::set<word> pos{words[pick(rng)]};
    if (round % 2) pos.insert(words[pick(rng)]);
    std::set<word> neg;
    {
      word v = words[pick(rng)];
      if (!pos.count(v)) neg.insert(v);
      if (round % 3 == 0) {
        word v2 = words[pick(rng)];
        if (!pos.count(v2)) neg.insert(v2);
      }
    }
    if (neg.empty()) continue;
    sample s = sample::checked({"a", "b"}, {pos.begin(), pos.end()}, {neg.begin(), neg.end()});

    struct row {
      operator_set ops;
      learn_result r;
    };
    std::vector<row> rows;
    for (operator_set ops : {operator_set(op_and | op_or), operator_set(op_or),
                             operator_set(op_and), operator_set()})
      rows.push_back({ops, learn_bool(s, ops)});
    for (operator_set ops :
         {operator_set(op_eventually | op_globally | op_next),
          operator_set(op_eventually), operator_set(op_globally), operator_set(op_next),
          operator_set(op_eventually | op_next), operator_set(op_globally | op_next),
          operator_set(op_eventually | op_globally)})
      rows.push_back({ops, learn_unary(s, ops)});
    rows.push_back({op_globally | op_and, learn_gand(s)});
    rows.push_back({op_eventually | op_or, learn_for_fixed(s)});

    for (const row& t : rows) {
      auto oracle = test_support::brute_minimal(s, t.ops, 7);
      if (t.r.is_found()) {
        REQUIRE(oracle.has_value());
        CHECK(t.r.found_size() == oracle->size());
      } else {
        CHECK_FALSE(oracle.has_value());
      }
    }
  }
}

TEST_CASE("constructive separators stay within loose closed-form caps") {
  std::mt19937_64 rng(109);
  for (int round = 0; round < 60; ++round) {
    std::vector<word> pos, neg;
    std::set<word> pos_set;
    for (int i = 0; i < 2; ++i) {
      word u = test_support::random_word(rng, "ab", 1, 4);
      pos.push_back(u);
      pos_set.insert(u);
    }
    for (int i = 0; i < 2; ++i) {
      word v = test_support::random_word(rng, "ab", 1, 4);
      if (!pos_set.count(v)) neg.push_back(v);
    }
    if (neg.empty()) continue;
    sample s = sample::checked({"a", "b"}, pos, neg);
    const std::size_t n = s.positives.size(), m = s.negatives.size();
    const std::size_t l = s.max_word_length(), sig = s.alphabet.size();

    auto cap_check = [&](operator_set ops, std::size_t cap) {
      auto r = construct_separator(s, ops);
      if (r.is_found()) CHECK(r.found_size() <= cap);
    };
    // prefix pins: one formula of ~l^2 nodes per positive
    cap_check(op_globally | op_next | op_and | op_or, n * (l * l + 2 * l + 2));
    cap_check(op_next | op_and | op_or, n * (l * l + 2 * l + 2));
    // pair formulas: an F-chain plus an avoiding G-chain per pair
    cap_check(op_eventually | op_globally | op_and | op_or,
              n * m * (3 * l + 3 * l * sig + 1) + n + m + 2);
  }
}

TEST_CASE("dualization bridge between F,and,or and G,and,or") {
  std::mt19937_64 rng(103);
  auto words6 = test_support::all_words("ab", 6);
  for (int round = 0; round < 40; ++round) {
    word u = test_support::random_word(rng, "ab", 1, 3);
    word v = test_support::random_word(rng, "ab", 1, 3);
    if (u == v) continue;
    sample s = sample::checked({"a", "b"}, {u}, {v});
    sample swapped = sample::checked({"a", "b"}, {v}, {u});
    auto g_result = construct_separator(s, op_globally | op_and | op_or);
    auto f_result = construct_separator(swapped, op_eventually | op_and | op_or);
    REQUIRE(g_result.is_found() == f_result.is_found());
    if (f_result.is_found()) {
      // the dual of the F-side separator agrees with the G-side language
      formula dual = dualize(f_result.found_formula());
      for (const word& z : words6)
        CHECK(evaluate(dual, z, 1) == !evaluate(f_result.found_formula(), z, 1));
      CHECK(separates(g_result.found_formula(), s));
    }
  }
}
