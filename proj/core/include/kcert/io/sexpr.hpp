#ifndef KCERT_IO_SEXPR_HPP
#define KCERT_IO_SEXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcert::io {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(Position pos, const std::string& message);
  [[nodiscard]] Position position() const noexcept { return pos_; }

 private:
  Position pos_;
};

struct Sexpr {
  enum class Kind { Symbol, String, List };
  Kind kind = Kind::List;
  std::string text;  // Symbol and String
  std::vector<Sexpr> items;  // List
  Position pos;

  [[nodiscard]] bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  // A list whose first element is the symbol `head`.
  [[nodiscard]] bool is_form(std::string_view head) const {
    return kind == Kind::List && !items.empty() && items.front().is_symbol(head);
  }
};

// Reads every top-level expression. `;` starts a comment running to the end
// of the line; strings are double-quoted with backslash escapes.
std::vector<Sexpr> parse_sexprs(std::string_view text);

// Exactly one top-level expression.
Sexpr parse_sexpr(std::string_view text);

}  // namespace kcert::io

#endif  // KCERT_IO_SEXPR_HPP
