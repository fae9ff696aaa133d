#ifndef KCERT_LOGIC_SYMBOL_HPP
#define KCERT_LOGIC_SYMBOL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace kcert::logic {

// Interned propositional symbol. Comparison is by interning id, which is
// stable for the lifetime of the process; use name() for display ordering.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  [[nodiscard]] const std::string& name() const;
  [[nodiscard]] std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(Symbol, Symbol) = default;
  friend auto operator<=>(Symbol, Symbol) = default;

 private:
  std::uint32_t id_ = 0;
};

}  // namespace kcert::logic

template <>
struct std::hash<kcert::logic::Symbol> {
  std::size_t operator()(kcert::logic::Symbol s) const noexcept { return s.id(); }
};

#endif  // KCERT_LOGIC_SYMBOL_HPP
