#ifndef KCERT_TABLEAU_PROVER_HPP
#define KCERT_TABLEAU_PROVER_HPP

#include <variant>

#include "kcert/logic/modal.hpp"
#include "kcert/tableau/kripke.hpp"
#include "kcert/tableau/tableau.hpp"

namespace kcert::tableau {

struct Closed {
  Tableau tableau;
};

struct Open {
  Tableau tableau;
  // Read off the saturated open branch; world 0 is the root prefix and
  // satisfies negate_nnf(theorem).
  KripkeModel countermodel;
};

using ProofResult = std::variant<Closed, Open>;

// Systematic prefixed-tableau search for a refutation of negate_nnf(theorem).
// Per branch, repeatedly: close on the first complementary pair (earliest
// second literal, then earliest first literal); else decompose the first
// unprocessed conjunction or disjunction; else apply every pending diamond,
// each with a new prefix; else apply every box to every child prefix used on
// the branch; else the branch is saturated and open.
ProofResult prove(const logic::ModalFormula& theorem);

inline bool is_closed(const ProofResult& r) { return std::holds_alternative<Closed>(r); }

}  // namespace kcert::tableau

#endif  // KCERT_TABLEAU_PROVER_HPP
