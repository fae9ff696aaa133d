#ifndef KCERT_TESTS_SUPPORT_MODELS_HPP
#define KCERT_TESTS_SUPPORT_MODELS_HPP

#include <random>

#include "kcert/logic/symbol.hpp"
#include "kcert/tableau/kripke.hpp"

namespace kcert::testing {

inline tableau::KripkeModel random_model(std::mt19937_64& rng, std::size_t max_worlds = 4) {
  tableau::KripkeModel m;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_worlds)(rng);
  for (std::size_t i = 0; i < n; ++i) m.add_world("w" + std::to_string(i));
  std::bernoulli_distribution coin(0.4);
  for (tableau::World a = 0; a < n; ++a) {
    for (tableau::World b = 0; b < n; ++b) {
      if (coin(rng)) m.add_edge(a, b);
    }
    for (const char* p : {"p", "q", "r"}) {
      if (coin(rng)) m.set_true(a, logic::Symbol(p));
    }
  }
  return m;
}

}  // namespace kcert::testing

#endif  // KCERT_TESTS_SUPPORT_MODELS_HPP
