#include "kcert/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "kcert/fittings/fpc.hpp"
#include "kcert/io/problem.hpp"
#include "kcert/lkf/kernel.hpp"
#include "kcert/logic/translate.hpp"
#include "kcert/simpfit/fpc.hpp"
#include "kcert/tableau/emit.hpp"
#include "kcert/tableau/oracle.hpp"
#include "kcert/tableau/prover.hpp"

namespace kcert::cli {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Index>
int report(const lkf::CheckResult<Index>& r, bool trace, std::ostream& out) {
  const lkf::KernelStats& s = lkf::stats_of(r);
  if (const auto* a = std::get_if<lkf::Accept<Index>>(&r)) {
    out << "accept: " << lkf::count_events(a->trace, lkf::EventKind::Decide) << " decides, " << s.steps
        << " steps, " << s.choice_points << " choice points\n";
    if (trace) out << lkf::format_trace(a->trace);
    return kOk;
  }
  const auto& rej = std::get<lkf::Reject<Index>>(r);
  out << "reject: " << rej.reason << " (" << s.steps << " steps)\n";
  if (trace) {
    out << "deepest partial derivation:\n" << lkf::format_trace(rej.deepest);
  }
  return kNo;
}

int check(const std::string& path, bool trace, std::size_t step_limit, std::ostream& out) {
  const io::Problem p = io::parse_problem(read_file(path));
  out << p.name << "\n";
  if (const auto* t = std::get_if<fittings::DecTree>(&p.certificate)) {
    const fittings::FittingsFpc fpc;
    lkf::Kernel<fittings::FittingsFpc> k(fpc, {step_limit, nullptr});
    return report(k.check(p.theorem, fittings::initial_cert(*t)), trace, out);
  }
  const simpfit::SimpfitFpc fpc;
  lkf::Kernel<simpfit::SimpfitFpc> k(fpc, {step_limit, nullptr});
  return report(k.check(p.theorem, simpfit::initial_cert(std::get<simpfit::Evidence>(p.certificate))), trace, out);
}

int prove(const std::string& text, const std::string& emit, std::ostream& out) {
  const logic::ModalFormula a = io::parse_formula(text);
  const tableau::ProofResult r = tableau::prove(a);
  if (const auto* open = std::get_if<tableau::Open>(&r)) {
    out << "invalid: countermodel falsifies the formula at world 1\n" << tableau::dump(open->countermodel);
    return kNo;
  }
  const tableau::Tableau& t = std::get<tableau::Closed>(r).tableau;
  io::Certificate cert = emit == "simpfit" ? io::Certificate{tableau::emit_simpfitcert(t)}
                                           : io::Certificate{tableau::emit_fitcert(t)};
  out << io::print_problem(io::Problem{"tableau proof of " + logic::to_string(a), a, std::move(cert)});
  return kOk;
}

int translate(const std::string& text, std::ostream& out) {
  const logic::ModalFormula a = io::parse_formula(text);
  out << "st: " << logic::to_string(logic::standard_translation(a, "x")) << "\n";
  out << "tr: " << logic::to_string(logic::polarized_translation(a, logic::Term::world())) << "\n";
  return kOk;
}

int oracle(const std::string& text, std::ostream& out) {
  const bool valid = tableau::bounded_validity_oracle(io::parse_formula(text));
  out << (valid ? "valid" : "invalid") << "\n";
  return valid ? kOk : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proof certificate checker for modal logic K", "kcert"};
  app.require_subcommand(1);

  std::string file;
  bool trace = false;
  std::size_t step_limit = 0;
  auto* check_cmd = app.add_subcommand("check", "Check a problem file; exit 0 on accept, 1 on reject");
  check_cmd->add_option("file", file, "Problem file")->required();
  check_cmd->add_flag("--trace", trace, "Print the derivation trace");
  check_cmd->add_option("--step-limit", step_limit, "Abort after this many kernel steps (0 = unlimited)");

  std::string formula;
  std::string emit = "fittings";
  auto* prove_cmd = app.add_subcommand("prove", "Prove a formula with the tableau prover and print a problem file");
  prove_cmd->add_option("formula", formula, "Formula, e.g. \"(or (+ p) (- p))\"")->required();
  prove_cmd->add_option("--emit", emit, "Certificate kind")->check(CLI::IsMember({"fittings", "simpfit"}));

  auto* translate_cmd = app.add_subcommand("translate", "Print the standard and polarized translations");
  translate_cmd->add_option("formula", formula, "Formula")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide validity by bounded model enumeration");
  oracle_cmd->add_option("formula", formula, "Formula")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*check_cmd) return check(file, trace, step_limit, out);
    if (*prove_cmd) return prove(formula, emit, out);
    if (*translate_cmd) return translate(formula, out);
    if (*oracle_cmd) return oracle(formula, out);
  } catch (const io::ParseError& e) {
    err << (file.empty() ? std::string("formula") : file) << ":" << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace kcert::cli
