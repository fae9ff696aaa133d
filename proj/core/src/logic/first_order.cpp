#include "kcert/logic/first_order.hpp"

namespace kcert::logic {

FoFormula FoFormula::prop(Symbol p, std::string x) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Pred, false, p, {std::move(x)}}));
}
FoFormula FoFormula::rel(std::string x, std::string y) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Pred, true, Symbol{}, {std::move(x), std::move(y)}}));
}
FoFormula FoFormula::negation(FoFormula f) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Not, false, {}, {}, {}, std::move(f)}));
}
FoFormula FoFormula::conj(FoFormula l, FoFormula r) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::And, false, {}, {}, {}, std::move(l), std::move(r)}));
}
FoFormula FoFormula::disj(FoFormula l, FoFormula r) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Or, false, {}, {}, {}, std::move(l), std::move(r)}));
}
FoFormula FoFormula::implies(FoFormula l, FoFormula r) {
  return FoFormula(
      std::make_shared<const Node>(Node{FoKind::Implies, false, {}, {}, {}, std::move(l), std::move(r)}));
}
FoFormula FoFormula::forall(std::string var, FoFormula body) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Forall, false, {}, {}, std::move(var), std::move(body)}));
}
FoFormula FoFormula::exists(std::string var, FoFormula body) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Exists, false, {}, {}, std::move(var), std::move(body)}));
}
FoFormula FoFormula::truth() { return FoFormula(std::make_shared<const Node>(Node{FoKind::True})); }
FoFormula FoFormula::falsity() { return FoFormula(std::make_shared<const Node>(Node{FoKind::False})); }

bool operator==(const FoFormula& a, const FoFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FoKind::Pred:
      return a.relational() == b.relational() && a.predicate() == b.predicate() && a.args() == b.args();
    case FoKind::Not: return a.body() == b.body();
    case FoKind::And:
    case FoKind::Or:
    case FoKind::Implies:
      return a.left() == b.left() && a.right() == b.right();
    case FoKind::Forall:
    case FoKind::Exists:
      return a.var() == b.var() && a.body() == b.body();
    case FoKind::True:
    case FoKind::False:
      return true;
  }
  return false;
}

namespace {
void print(const FoFormula& f, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    print(f.left(), out);
    out += op;
    print(f.right(), out);
    out += ')';
  };
  switch (f.kind()) {
    case FoKind::Pred:
      if (f.relational()) {
        out += "R(" + f.args()[0] + "," + f.args()[1] + ")";
      } else {
        out += f.predicate().name() + "(" + f.args()[0] + ")";
      }
      return;
    case FoKind::Not:
      out += '~';
      print(f.body(), out);
      return;
    case FoKind::And: binary(" & "); return;
    case FoKind::Or: binary(" | "); return;
    case FoKind::Implies: binary(" -> "); return;
    case FoKind::Forall:
    case FoKind::Exists:
      out += f.kind() == FoKind::Forall ? "forall " : "exists ";
      out += f.var() + ". ";
      print(f.body(), out);
      return;
    case FoKind::True: out += "true"; return;
    case FoKind::False: out += "false"; return;
  }
}
}  // namespace

std::string to_string(const FoFormula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace kcert::logic
