#ifndef KCERT_TABLEAU_ORACLE_HPP
#define KCERT_TABLEAU_ORACLE_HPP

#include <cstddef>
#include <stdexcept>

#include "kcert/logic/modal.hpp"

namespace kcert::tableau {

class BoundExceeded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::size_t kOracleMaxConnectives = 8;

// K-validity by exhaustive search over tree models of depth md(a) whose
// worlds have at most as many successors as negate_nnf(a) has modal
// occurrences, with all valuations of a's atoms. The search is factored by
// world type (the set of subformulas true at a world), so models that agree
// on types are visited once. Independent of the tableau prover.
// Throws BoundExceeded above kOracleMaxConnectives connectives.
bool bounded_validity_oracle(const logic::ModalFormula& a);

}  // namespace kcert::tableau

#endif  // KCERT_TABLEAU_ORACLE_HPP
