#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support/helpers.hpp"

using namespace ltlearn;
using test_support::mk_sample;
using test_support::w;

namespace {
std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("sample validation") {
  CHECK_THROWS_AS(sample::checked({"a"}, {w("ab")}, {}), sample_error);    // foreign letter
  CHECK_THROWS_AS(sample::checked({"a", "b"}, {word{}}, {}), sample_error);  // empty word
  CHECK_THROWS_AS(sample::checked({"a", "b"}, {w("a")}, {w("a")}), sample_error);
  CHECK_THROWS_AS(sample::checked({"a", "a"}, {}, {}), sample_error);  // dup letter
  CHECK_NOTHROW(sample::checked({"a", "b"}, {}, {w("b")}));  // empty positive side is fine
}

TEST_CASE("separates") {
  CHECK(separates(parse_formula("F a"), mk_sample("ab", {"ba"}, {"bb"})));
  CHECK_FALSE(separates(formula::truth(), mk_sample("ab", {"a"}, {"b"})));
  CHECK(separates(parse_formula("a"), mk_sample("ab", {"ab"}, {"ba"})));
}

TEST_CASE("sample json round-trip") {
  sample s = mk_sample("ab", {"ab", "a"}, {"ba"});
  auto path = temp_file("ltlearn_sample_rt.json");
  save_sample(s, path);
  sample t = load_sample(path);
  CHECK(t.alphabet == s.alphabet);
  CHECK(t.positives == s.positives);
  CHECK(t.negatives == s.negatives);
  std::filesystem::remove(path);
}

TEST_CASE("sample json matches the documented shape") {
  auto path = temp_file("ltlearn_sample_doc.json");
  {
    std::ofstream out(path);
    out << R"({"alphabet": ["a","b"], "positive": [["a","b"],["a"]], "negative": [["b","a"]]})";
  }
  sample s = load_sample(path);
  CHECK(s.alphabet == std::vector<letter>{"a", "b"});
  CHECK(s.positives == std::vector<word>{w("ab"), w("a")});
  CHECK(s.negatives == std::vector<word>{w("ba")});
  std::filesystem::remove(path);
}

TEST_CASE("sample text format") {
  auto path = temp_file("ltlearn_sample_doc.txt");
  {
    std::ofstream out(path);
    out << "+\n";
    out << "a b\n";
    out << "a\n";
    out << "-\n";
    out << "b a\n";
  }
  sample s = load_sample(path);
  CHECK(s.alphabet == std::vector<letter>{"a", "b"});
  CHECK(s.positives == std::vector<word>{w("ab"), w("a")});
  CHECK(s.negatives == std::vector<word>{w("ba")});
  std::filesystem::remove(path);
}

TEST_CASE("sample load errors") {
  auto path = temp_file("ltlearn_sample_bad.json");
  {
    std::ofstream out(path);
    out << R"({"alphabet": ["a"], "positive": [["a","b"]], "negative": []})";
  }
  CHECK_THROWS_AS(load_sample(path), sample_error);
  {
    std::ofstream out(path);
    out << R"({"alphabet": ["a"], "positive": 3})";
  }
  CHECK_THROWS_AS(load_sample(path), sample_error);
  {
    std::ofstream out(path);
    out << R"({"alphabet": ["a"], "positive": [["a"]], "negative": [["a"]]})";
  }
  CHECK_THROWS_AS(load_sample(path), sample_error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_sample(temp_file("ltlearn_does_not_exist.json")), sample_error);
}
