#include "kcert/io/sexpr.hpp"

#include <cctype>

namespace kcert::io {
namespace {

std::string where(Position p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Sexpr> all() {
    std::vector<Sexpr> out;
    skip();
    while (!done()) {
      out.push_back(read());
      skip();
    }
    return out;
  }

 private:
  [[nodiscard]] bool done() const { return i_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[i_]; }

  char advance() {
    const char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip() {
    while (!done()) {
      const char c = peek();
      if (c == ';') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else {
        break;
      }
    }
  }

  Sexpr read() {
    const Position start = pos_;
    const char c = peek();
    if (c == '(') {
      advance();
      Sexpr list{Sexpr::Kind::List, {}, {}, start};
      skip();
      while (true) {
        if (done()) throw ParseError(start, "unterminated list");
        if (peek() == ')') break;
        list.items.push_back(read());
        skip();
      }
      advance();
      return list;
    }
    if (c == ')') throw ParseError(start, "unexpected ')'");
    if (c == '"') return string(start);
    std::string sym;
    while (!done()) {
      const char d = peek();
      if (d == '(' || d == ')' || d == '"' || d == ';' || std::isspace(static_cast<unsigned char>(d)) != 0) break;
      sym.push_back(advance());
    }
    return Sexpr{Sexpr::Kind::Symbol, std::move(sym), {}, start};
  }

  Sexpr string(Position start) {
    advance();
    std::string s;
    while (true) {
      if (done()) throw ParseError(start, "unterminated string");
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (done()) throw ParseError(start, "unterminated string");
        c = advance();
        if (c == 'n') c = '\n';
      }
      s.push_back(c);
    }
    return Sexpr{Sexpr::Kind::String, std::move(s), {}, start};
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
};

}  // namespace

ParseError::ParseError(Position pos, const std::string& message)
    : std::runtime_error(where(pos) + ": " + message), pos_(pos) {}

std::vector<Sexpr> parse_sexprs(std::string_view text) { return Reader(text).all(); }

Sexpr parse_sexpr(std::string_view text) {
  auto all = parse_sexprs(text);
  if (all.empty()) throw ParseError({}, "empty input");
  if (all.size() > 1) throw ParseError(all[1].pos, "trailing input");
  return std::move(all.front());
}

}  // namespace kcert::io
