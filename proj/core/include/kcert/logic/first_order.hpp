#ifndef KCERT_LOGIC_FIRST_ORDER_HPP
#define KCERT_LOGIC_FIRST_ORDER_HPP

#include <memory>
#include <string>
#include <vector>

#include "kcert/logic/symbol.hpp"

namespace kcert::logic {

enum class FoKind : std::uint8_t { Pred, Not, And, Or, Implies, Forall, Exists, True, False };

// Unpolarized first-order formula of the correspondence language. Terms are
// variable names; constants (w0, eigenvariables) are just free variables bound
// by the evaluation environment.
class FoFormula {
 public:
  static FoFormula prop(Symbol p, std::string x);
  static FoFormula rel(std::string x, std::string y);
  static FoFormula negation(FoFormula f);
  static FoFormula conj(FoFormula l, FoFormula r);
  static FoFormula disj(FoFormula l, FoFormula r);
  static FoFormula implies(FoFormula l, FoFormula r);
  static FoFormula forall(std::string var, FoFormula body);
  static FoFormula exists(std::string var, FoFormula body);
  static FoFormula truth();
  static FoFormula falsity();

  [[nodiscard]] FoKind kind() const noexcept;
  [[nodiscard]] bool relational() const noexcept;
  [[nodiscard]] Symbol predicate() const noexcept;
  [[nodiscard]] const std::vector<std::string>& args() const noexcept;
  // Bound variable of Forall/Exists.
  [[nodiscard]] const std::string& var() const noexcept;
  [[nodiscard]] const FoFormula& left() const noexcept;
  [[nodiscard]] const FoFormula& right() const noexcept;
  [[nodiscard]] const FoFormula& body() const noexcept;

  friend bool operator==(const FoFormula& a, const FoFormula& b);

 private:
  struct Node;
  explicit FoFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FoFormula::Node {
  FoKind kind;
  bool relational = false;
  Symbol predicate;
  std::vector<std::string> args;
  std::string var;
  FoFormula left{nullptr};
  FoFormula right{nullptr};
};

inline FoKind FoFormula::kind() const noexcept { return node_->kind; }
inline bool FoFormula::relational() const noexcept { return node_->relational; }
inline Symbol FoFormula::predicate() const noexcept { return node_->predicate; }
inline const std::vector<std::string>& FoFormula::args() const noexcept { return node_->args; }
inline const std::string& FoFormula::var() const noexcept { return node_->var; }
inline const FoFormula& FoFormula::left() const noexcept { return node_->left; }
inline const FoFormula& FoFormula::right() const noexcept { return node_->right; }
inline const FoFormula& FoFormula::body() const noexcept { return node_->left; }

// Infix rendering: forall y1. (R(w0,y1) -> p(y1)), ~q(x), (a & b), (a | b).
std::string to_string(const FoFormula& f);

}  // namespace kcert::logic

#endif  // KCERT_LOGIC_FIRST_ORDER_HPP
