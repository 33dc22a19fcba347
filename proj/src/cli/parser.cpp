#include "zagier/cli/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "zagier/errors.hpp"

namespace zagier {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ITerm iterm() {
    expect_word("I");
    expect('(');
    ITerm t;
    t.a0 = point();
    expect(';');
    skip();
    if (peek() != ';') {
      t.word.push_back(point());
      while (accept(',')) t.word.push_back(point());
    }
    expect(';');
    t.end = point();
    expect(')');
    finish();
    return t;
  }

  PPoint whole_point() {
    PPoint p = point();
    finish();
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }
  void finish() {
    if (peek() != '\0') throw ParseError("unexpected trailing input", pos_);
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  void expect_word(std::string_view w) {
    const std::size_t at = (skip(), pos_);
    if (ident() != w) throw ParseError("expected '" + std::string(w) + "'", at);
  }

  PPoint point() {
    skip();
    const std::size_t save = pos_;
    if (ident() == "inf") {
      const char next = peek();
      if (next == ',' || next == ';' || next == ')' || next == '\0') return PPoint::infinity();
      throw ParseError("inf cannot take part in arithmetic", save);
    }
    pos_ = save;
    return PPoint(expr());
  }

  FieldExpr expr() {
    FieldExpr v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  FieldExpr term() {
    FieldExpr v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const FieldExpr d = unary();
        if (d.is_zero()) throw DegenerateArgument("division by zero at position " + std::to_string(at));
        v /= d;
      } else {
        return v;
      }
    }
  }

  FieldExpr unary() {
    if (accept('-')) return -unary();
    return atom();
  }

  FieldExpr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FieldExpr v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return FieldExpr(BigRational(mpq_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      const std::string name = ident();
      if (name == "cr" && peek() == '(') {
        ++pos_;
        PPoint p[4];
        for (int i = 0; i < 4; ++i) {
          if (i > 0) expect(',');
          p[i] = point();
        }
        expect(')');
        return cross_ratio(p[0], p[1], p[2], p[3]);
      }
      if (name == "inf") throw ParseError("inf cannot take part in arithmetic", start);
      try {
        return FieldExpr::variable(name);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), start);
      }
    }
    throw ParseError(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace

PPoint parse_point(std::string_view text) { return Parser(text).whole_point(); }

ITerm parse_iterm(std::string_view text) { return Parser(text).iterm(); }

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty complex number", 0);
  auto real_of = [&](const std::string& part, std::size_t at) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    char* endp = nullptr;
    const double v = std::strtod(part.c_str(), &endp);
    if (endp != part.c_str() + part.size()) throw ParseError("bad number '" + part + "'", at);
    return v;
  };
  if (s.back() != 'i') return {real_of(s, 0), 0.0};
  s.pop_back();
  // Split before the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  if (split == std::string::npos) return {0.0, real_of(s, 0)};
  return {real_of(s.substr(0, split), 0), real_of(s.substr(split), split)};
}

}  // namespace zagier
