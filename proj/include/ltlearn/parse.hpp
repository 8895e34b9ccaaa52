#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "ltlearn/formula.hpp"

namespace ltlearn {

// Formula grammar (UTF-8, whitespace insignificant):
//   formula := "true" | "false" | IDENT | "!" IDENT
//            | ("X"|"F"|"G") formula
//            | "(" formula ("&"|"|"|"U") formula ")"
//   IDENT   := [A-Za-z0-9_]+ excluding the reserved words true,false,X,F,G,U

namespace detail {

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool reserved_word(std::string_view s) {
  return s == "true" || s == "false" || s == "X" || s == "F" || s == "G" || s == "U";
}

class formula_parser {
public:
  explicit formula_parser(std::string_view text) : text_(text) {}

  formula parse() {
    formula f = parse_formula();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("trailing input after formula", pos_);
    return f;
  }

private:
  formula parse_formula() {
    skip_ws();
    if (pos_ == text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') return parse_binary();
    if (c == '!') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      std::string id = parse_ident();
      if (reserved_word(id))
        throw parse_error("cannot negate reserved word '" + id + "'", at);
      return formula::neg_atom(std::move(id));
    }
    std::size_t at = pos_;
    std::string id = parse_ident();
    if (id == "true") return formula::truth();
    if (id == "false") return formula::falsity();
    if (id == "X") return formula::next(parse_formula());
    if (id == "F") return formula::eventually(parse_formula());
    if (id == "G") return formula::globally(parse_formula());
    if (id == "U") throw parse_error("'U' is a binary operator", at);
    return formula::atom(std::move(id));
  }

  formula parse_binary() {
    expect('(');
    formula lhs = parse_formula();
    skip_ws();
    if (pos_ == text_.size()) throw parse_error("expected '&', '|' or 'U'", pos_);
    std::size_t at = pos_;
    char c = text_[pos_];
    node_kind k;
    if (c == '&') {
      ++pos_;
      k = node_kind::conj;
    } else if (c == '|') {
      ++pos_;
      k = node_kind::disj;
    } else if (c == 'U' && (pos_ + 1 == text_.size() || !ident_char(text_[pos_ + 1]))) {
      ++pos_;
      k = node_kind::until;
    } else {
      throw parse_error("expected '&', '|' or 'U'", at);
    }
    formula rhs = parse_formula();
    expect(')');
    switch (k) {
      case node_kind::conj: return formula::conj(std::move(lhs), std::move(rhs));
      case node_kind::disj: return formula::disj(std::move(lhs), std::move(rhs));
      default: return formula::until(std::move(lhs), std::move(rhs));
    }
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw parse_error("expected identifier", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ == text_.size() || text_[pos_] != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline formula parse_formula(std::string_view text) {
  return detail::formula_parser(text).parse();
}

/// Canonical text form; parse_formula(format_formula(f)) == f.
inline std::string format_formula(const formula& f) {
  switch (f.kind()) {
    case node_kind::truth: return "true";
    case node_kind::falsity: return "false";
    case node_kind::atom: return f.sym();
    case node_kind::neg_atom: return "!" + f.sym();
    case node_kind::next: return "X " + format_formula(f.child());
    case node_kind::eventually: return "F " + format_formula(f.child());
    case node_kind::globally: return "G " + format_formula(f.child());
    case node_kind::until:
      return "(" + format_formula(f.lhs()) + " U " + format_formula(f.rhs()) + ")";
    case node_kind::conj:
      return "(" + format_formula(f.lhs()) + " & " + format_formula(f.rhs()) + ")";
    case node_kind::disj:
      return "(" + format_formula(f.lhs()) + " | " + format_formula(f.rhs()) + ")";
  }
  throw error("format_formula: bad node");
}

inline std::ostream& operator<<(std::ostream& os, const formula& f) {
  return os << format_formula(f);
}

}  // namespace ltlearn
