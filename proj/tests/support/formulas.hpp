#ifndef KCERT_TESTS_SUPPORT_FORMULAS_HPP
#define KCERT_TESTS_SUPPORT_FORMULAS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "kcert/logic/modal.hpp"

namespace kcert::testing {

using logic::ModalFormula;

// All NNF formulas over {p, q} by connective count (a negated atom counts
// one). Levels below the largest requested are materialized; the largest is
// streamed to keep memory flat.
class FormulaEnumerator {
 public:
  template <class F>
  void for_each_up_to(std::size_t max_size, F&& visit) {
    levels_.clear();
    for (std::size_t n = 0; n <= max_size; ++n) {
      std::vector<ModalFormula> level;
      const bool keep = n < max_size;
      generate(n, [&](const ModalFormula& a) {
        if (keep) level.push_back(a);
        visit(a, n);
      });
      if (keep) levels_.push_back(std::move(level));
    }
  }

  static std::vector<ModalFormula> all_up_to(std::size_t max_size) {
    std::vector<ModalFormula> out;
    FormulaEnumerator e;
    e.for_each_up_to(max_size, [&](const ModalFormula& a, std::size_t) { out.push_back(a); });
    return out;
  }

 private:
  template <class F>
  void generate(std::size_t n, F&& emit) const {
    if (n == 0) {
      emit(ModalFormula::pos("p"));
      emit(ModalFormula::pos("q"));
      return;
    }
    if (n == 1) {
      emit(ModalFormula::neg("p"));
      emit(ModalFormula::neg("q"));
    }
    for (const auto& b : levels_[n - 1]) {
      emit(ModalFormula::box(b));
      emit(ModalFormula::dia(b));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = n - 1 - i;
      for (const auto& l : levels_[i]) {
        for (const auto& r : levels_[j]) {
          emit(ModalFormula::conj(l, r));
          emit(ModalFormula::disj(l, r));
        }
      }
    }
  }

  std::vector<std::vector<ModalFormula>> levels_;
};

// Uniform over shapes only approximately: picks a connective, then splits the
// remaining budget at random.
inline ModalFormula random_formula(std::mt19937_64& rng, std::size_t size, std::size_t atoms = 2) {
  static const char* names[] = {"p", "q", "r"};
  auto atom = [&] { return names[std::uniform_int_distribution<std::size_t>(0, atoms - 1)(rng)]; };
  if (size == 0) return ModalFormula::pos(atom());
  const int pick = std::uniform_int_distribution<int>(0, size == 1 ? 4 : 3)(rng);
  if (pick == 4) return ModalFormula::neg(atom());
  if (pick >= 2) {
    auto b = random_formula(rng, size - 1, atoms);
    return pick == 2 ? ModalFormula::box(b) : ModalFormula::dia(b);
  }
  const std::size_t left = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  auto l = random_formula(rng, left, atoms);
  auto r = random_formula(rng, size - 1 - left, atoms);
  return pick == 0 ? ModalFormula::conj(l, r) : ModalFormula::disj(l, r);
}

}  // namespace kcert::testing

#endif  // KCERT_TESTS_SUPPORT_FORMULAS_HPP
