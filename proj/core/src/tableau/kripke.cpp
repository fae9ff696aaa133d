#include "kcert/tableau/kripke.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcert::tableau {

using logic::FoFormula;
using logic::FoKind;
using logic::ModalFormula;
using logic::ModalKind;

World KripkeModel::add_world(std::string name) {
  const World w = names_.size();
  names_.push_back(name.empty() ? std::to_string(w) : std::move(name));
  succ_.emplace_back();
  val_.emplace_back();
  return w;
}

void KripkeModel::add_edge(World from, World to) {
  auto& s = succ_.at(from);
  if (to >= size()) throw std::out_of_range("add_edge: unknown world");
  if (std::find(s.begin(), s.end(), to) == s.end()) s.push_back(to);
}

void KripkeModel::set_true(World w, logic::Symbol p) { val_.at(w).insert(p); }

bool KripkeModel::related(World from, World to) const {
  const auto& s = succ_.at(from);
  return std::find(s.begin(), s.end(), to) != s.end();
}

bool eval_modal(const KripkeModel& m, World w, const ModalFormula& a) {
  switch (a.kind()) {
    case ModalKind::PosAtom: return m.holds(w, a.atom());
    case ModalKind::NegAtom: return !m.holds(w, a.atom());
    case ModalKind::And: return eval_modal(m, w, a.left()) && eval_modal(m, w, a.right());
    case ModalKind::Or: return eval_modal(m, w, a.left()) || eval_modal(m, w, a.right());
    case ModalKind::Box:
      return std::all_of(m.successors(w).begin(), m.successors(w).end(),
                         [&](World v) { return eval_modal(m, v, a.body()); });
    case ModalKind::Dia:
      return std::any_of(m.successors(w).begin(), m.successors(w).end(),
                         [&](World v) { return eval_modal(m, v, a.body()); });
  }
  return false;
}

namespace {

World lookup(const Environment& env, const std::string& x) {
  auto it = env.find(x);
  if (it == env.end()) throw std::invalid_argument("eval_fo: unbound variable '" + x + "'");
  return it->second;
}

bool eval(const KripkeModel& m, Environment& env, const FoFormula& f) {
  switch (f.kind()) {
    case FoKind::Pred:
      if (f.relational()) return m.related(lookup(env, f.args()[0]), lookup(env, f.args()[1]));
      return m.holds(lookup(env, f.args()[0]), f.predicate());
    case FoKind::Not: return !eval(m, env, f.body());
    case FoKind::And: return eval(m, env, f.left()) && eval(m, env, f.right());
    case FoKind::Or: return eval(m, env, f.left()) || eval(m, env, f.right());
    case FoKind::Implies: return !eval(m, env, f.left()) || eval(m, env, f.right());
    case FoKind::True: return true;
    case FoKind::False: return false;
    case FoKind::Forall:
    case FoKind::Exists: {
      const bool universal = f.kind() == FoKind::Forall;
      auto saved = env.find(f.var());
      const bool had = saved != env.end();
      const World old = had ? saved->second : 0;
      bool result = universal;
      for (World v = 0; v < m.size(); ++v) {
        env[f.var()] = v;
        if (eval(m, env, f.body()) != universal) {
          result = !universal;
          break;
        }
      }
      if (had) {
        env[f.var()] = old;
      } else {
        env.erase(f.var());
      }
      return result;
    }
  }
  return false;
}

}  // namespace

bool eval_fo(const KripkeModel& m, const Environment& env, const FoFormula& f) {
  Environment scratch = env;
  return eval(m, scratch, f);
}

std::string dump(const KripkeModel& m) {
  std::string out;
  for (World w = 0; w < m.size(); ++w) {
    std::vector<std::string> atoms;
    for (auto p : m.valuation(w)) atoms.push_back(p.name());
    std::sort(atoms.begin(), atoms.end());
    out += "world " + m.name(w) + ": {";
    for (std::size_t i = 0; i < atoms.size(); ++i) out += (i ? ", " : "") + atoms[i];
    out += "}\n";
  }
  for (World w = 0; w < m.size(); ++w) {
    for (World v : m.successors(w)) out += "edge " + m.name(w) + " " + m.name(v) + "\n";
  }
  return out;
}

}  // namespace kcert::tableau
