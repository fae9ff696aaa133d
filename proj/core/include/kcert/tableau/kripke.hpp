#ifndef KCERT_TABLEAU_KRIPKE_HPP
#define KCERT_TABLEAU_KRIPKE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kcert/logic/first_order.hpp"
#include "kcert/logic/modal.hpp"
#include "kcert/logic/symbol.hpp"

namespace kcert::tableau {

using World = std::size_t;

// Finite Kripke structure (W, R, V). Worlds are 0..size()-1 and carry a
// display name.
class KripkeModel {
 public:
  World add_world(std::string name = {});
  void add_edge(World from, World to);
  void set_true(World w, logic::Symbol p);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& name(World w) const { return names_.at(w); }
  [[nodiscard]] const std::vector<World>& successors(World w) const { return succ_.at(w); }
  [[nodiscard]] bool related(World from, World to) const;
  [[nodiscard]] bool holds(World w, logic::Symbol p) const { return val_.at(w).count(p) != 0; }
  [[nodiscard]] const std::set<logic::Symbol>& valuation(World w) const { return val_.at(w); }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<World>> succ_;
  std::vector<std::set<logic::Symbol>> val_;
};

bool eval_modal(const KripkeModel& m, World w, const logic::ModalFormula& a);

using Environment = std::map<std::string, World>;

// Quantifiers range over all worlds. Throws std::invalid_argument when a free
// variable of f is not bound by env.
bool eval_fo(const KripkeModel& m, const Environment& env, const logic::FoFormula& f);

// `world <name>: {p, q}` per world, then `edge <name> <name>` per edge.
std::string dump(const KripkeModel& m);

}  // namespace kcert::tableau

#endif  // KCERT_TABLEAU_KRIPKE_HPP
