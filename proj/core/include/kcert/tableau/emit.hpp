#ifndef KCERT_TABLEAU_EMIT_HPP
#define KCERT_TABLEAU_EMIT_HPP

#include <stdexcept>

#include "kcert/fittings/fpc.hpp"
#include "kcert/simpfit/fpc.hpp"
#include "kcert/tableau/tableau.hpp"

namespace kcert::tableau {

class EmissionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Decide tree replaying a closed ground tableau rule by rule. Each tableau
// formula is addressed by its occurrence in the theorem (the tableau root
// negated), with box instances tagged by the diamond that created their
// prefix. Throws EmissionError on open branches or violated provisos.
fittings::DecTree emit_fitcert(const Tableau& t);

// Closures and box/diamond pairings of a closed tableau. Free-variable
// tableaux are accepted: each branch's substitution resolves its meta
// prefixes. Duplicate entries are emitted once.
simpfit::Evidence emit_simpfitcert(const Tableau& t);

}  // namespace kcert::tableau

#endif  // KCERT_TABLEAU_EMIT_HPP
