#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltlearn/errors.hpp"
#include "ltlearn/formula.hpp"
#include "ltlearn/semantics.hpp"
#include "ltlearn/word.hpp"

namespace ltlearn {

/// A sample: ordered alphabet, positive words, negative words. All words are
/// non-empty, over the alphabet, and no word appears on both sides.
struct sample {
  std::vector<letter> alphabet;
  std::vector<word> positives;
  std::vector<word> negatives;

  void validate() const {
    std::set<letter> sigma(alphabet.begin(), alphabet.end());
    if (sigma.size() != alphabet.size()) throw sample_error("duplicate letter in alphabet");
    auto check_side = [&](const std::vector<word>& side, const char* name) {
      for (const word& w : side) {
        if (w.empty()) throw sample_error(std::string("empty ") + name + " word");
        for (const letter& c : w)
          if (!sigma.count(c)) throw sample_error("letter '" + c + "' not in alphabet");
      }
    };
    check_side(positives, "positive");
    check_side(negatives, "negative");
    std::set<word> pos(positives.begin(), positives.end());
    for (const word& w : negatives)
      if (pos.count(w))
        throw sample_error("word '" + to_string(w) + "' is both positive and negative");
  }

  static sample checked(std::vector<letter> alphabet, std::vector<word> positives,
                        std::vector<word> negatives) {
    sample s{std::move(alphabet), std::move(positives), std::move(negatives)};
    s.validate();
    return s;
  }

  std::size_t max_word_length() const {
    std::size_t n = 0;
    for (const word& w : positives) n = std::max(n, w.size());
    for (const word& w : negatives) n = std::max(n, w.size());
    return n;
  }
};

/// All positives satisfy f and all negatives falsify it.
inline bool separates(const formula& f, const sample& s) {
  for (const word& u : s.positives)
    if (!evaluate(f, u, 1)) return false;
  for (const word& v : s.negatives)
    if (evaluate(f, v, 1)) return false;
  return true;
}

inline nlohmann::json sample_to_json(const sample& s) {
  return nlohmann::json{
      {"alphabet", s.alphabet}, {"positive", s.positives}, {"negative", s.negatives}};
}

inline sample sample_from_json(const nlohmann::json& j) {
  try {
    sample s;
    s.alphabet = j.at("alphabet").get<std::vector<letter>>();
    s.positives = j.at("positive").get<std::vector<word>>();
    s.negatives = j.at("negative").get<std::vector<word>>();
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw sample_error(std::string("malformed sample json: ") + e.what());
  }
}

/// Text convenience format: a line "+" opens the positive section, "-" the
/// negative one; every other non-empty line is a word, letters separated by
/// spaces. The alphabet is the sorted set of letters seen.
inline sample sample_from_text(const std::string& text) {
  sample s;
  std::set<letter> sigma;
  std::istringstream in(text);
  std::string line;
  int section = 0;  // 0 none, +1 positives, -1 negatives
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<letter> toks;
    letter t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() == 1 && toks[0] == "+") { section = 1; continue; }
    if (toks.size() == 1 && toks[0] == "-") { section = -1; continue; }
    if (section == 0) throw sample_error("word before '+'/'-' section marker");
    for (const letter& c : toks) sigma.insert(c);
    (section == 1 ? s.positives : s.negatives).push_back(std::move(toks));
  }
  s.alphabet.assign(sigma.begin(), sigma.end());
  s.validate();
  return s;
}

/// Reads a sample file; JSON when the first non-space byte is '{', the text
/// convenience format otherwise.
inline sample load_sample(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw sample_error("cannot open sample file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw sample_error(std::string("malformed sample json: ") + e.what());
    }
    return sample_from_json(j);
  }
  return sample_from_text(text);
}

inline void save_sample(const sample& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw sample_error("cannot write sample file: " + path.string());
  out << sample_to_json(s).dump(2) << '\n';
}

/// Outcome of a learning call.
class learn_result {
public:
  enum class outcome { found, no_separator, none_within_bound };

  static learn_result found(formula f) {
    learn_result r;
    r.kind_ = outcome::found;
    r.formula_.push_back(std::move(f));
    return r;
  }
  static learn_result no_separator() {
    learn_result r;
    r.kind_ = outcome::no_separator;
    return r;
  }
  static learn_result none_within_bound(std::size_t bound) {
    learn_result r;
    r.kind_ = outcome::none_within_bound;
    r.bound_ = bound;
    return r;
  }

  outcome kind() const { return kind_; }
  bool is_found() const { return kind_ == outcome::found; }
  bool is_no_separator() const { return kind_ == outcome::no_separator; }
  bool is_none_within_bound() const { return kind_ == outcome::none_within_bound; }

  const formula& found_formula() const {
    if (!is_found()) throw error("learn_result: no formula");
    return formula_.front();
  }
  std::size_t found_size() const { return found_formula().size(); }
  std::size_t bound() const { return bound_; }

private:
  outcome kind_ = outcome::no_separator;
  std::vector<formula> formula_;  // empty or one element
  std::size_t bound_ = 0;
};

}  // namespace ltlearn
