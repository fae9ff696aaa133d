#ifndef KCERT_IO_PROBLEM_HPP
#define KCERT_IO_PROBLEM_HPP

#include <string>
#include <string_view>
#include <variant>

#include "kcert/fittings/fpc.hpp"
#include "kcert/fittings/index.hpp"
#include "kcert/io/sexpr.hpp"
#include "kcert/logic/modal.hpp"
#include "kcert/simpfit/fpc.hpp"

namespace kcert::io {

using Certificate = std::variant<fittings::DecTree, simpfit::Evidence>;

struct Problem {
  std::string name;
  logic::ModalFormula theorem;
  Certificate certificate;
};

logic::ModalFormula parse_formula(const Sexpr& e);
logic::ModalFormula parse_formula(std::string_view text);
fittings::FitIndex parse_index(const Sexpr& e);
fittings::FitIndex parse_index(std::string_view text);
fittings::DecTree parse_dectree(const Sexpr& e);
Certificate parse_certificate(const Sexpr& e);
Problem parse_problem(std::string_view text);

std::string print_dectree(const fittings::DecTree& t, int indent = 0);
std::string print_certificate(const Certificate& c, int indent = 0);
// Canonical form; parse_problem(print_problem(p)) reproduces p.
std::string print_problem(const Problem& p);

}  // namespace kcert::io

#endif  // KCERT_IO_PROBLEM_HPP
