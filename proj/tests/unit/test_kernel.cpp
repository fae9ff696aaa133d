#include <doctest.h>

#include "bipole.hpp"
#include "brute_force.hpp"
#include "formulas.hpp"
#include "kcert/fittings/fpc.hpp"
#include "kcert/io/problem.hpp"
#include "kcert/lkf/kernel.hpp"
#include "kcert/lkf/negation.hpp"
#include "kcert/simpfit/fpc.hpp"
#include "kcert/tableau/emit.hpp"
#include "kcert/tableau/prover.hpp"
#include "mutations.hpp"
#include "scripted.hpp"

using namespace kcert;
using logic::Atom;
using logic::Formula;
using logic::Symbol;
using logic::Term;

namespace {

// Accepts every rule instance; only the number of decides is bounded. Lets
// the kernel rules be exercised independently of the shipped FPCs.
struct Slot {
  int n = 0;
  friend bool operator==(Slot, Slot) = default;
};
std::string to_string(Slot s) { return std::to_string(s.n); }

struct OpenCert {
  int budget = 0;
  int next = 0;
  std::vector<Term> worlds{Term::world()};
};

std::string cert_key(const OpenCert& c) {
  std::string s = std::to_string(c.budget) + "/" + std::to_string(c.next);
  for (auto t : c.worlds) s += "," + logic::to_string(t);
  return s;
}

struct OpenFpc {
  using Cert = OpenCert;
  using Index = Slot;
  static constexpr lkf::DecideOrder decide_order = lkf::DecideOrder::InsertionOrder;

  std::vector<Cert> decide_expert(const Cert& c, Slot) const {
    if (c.budget == 0) return {};
    Cert d = c;
    --d.budget;
    return {d};
  }
  std::vector<Cert> release_expert(const Cert& c) const { return {c}; }
  std::vector<std::pair<Slot, Cert>> store_clerk(const Cert& c, const Formula&) const {
    Cert d = c;
    ++d.next;
    return {{Slot{c.next}, d}};
  }
  std::vector<std::pair<Cert, Cert>> and_neg_clerk(const Cert& c) const { return {{c, c}}; }
  std::vector<Cert> or_neg_clerk(const Cert& c) const { return {c}; }
  std::vector<lkf::AllContinuation<Cert>> all_clerk(const Cert& c) const {
    return {[c](Term y) {
      Cert d = c;
      d.worlds.push_back(y);
      return d;
    }};
  }
  std::vector<std::pair<Cert, Cert>> and_pos_expert(const Cert& c) const { return {{c, c}}; }
  std::vector<std::pair<int, Cert>> or_pos_expert(const Cert& c) const { return {{1, c}, {2, c}}; }
  std::vector<std::pair<Term, Cert>> some_expert(const Cert& c) const {
    std::vector<std::pair<Term, Cert>> out;
    for (auto t : c.worlds) out.emplace_back(t, c);
    return out;
  }
  bool initial_expert(const Cert&, Slot) const { return true; }
  bool true_expert(const Cert&) const { return true; }
  std::vector<lkf::CutChoice<Cert>> cut_expert(const Cert&) const { return {}; }
};

static_assert(lkf::Fpc<OpenFpc>);

const Term w0 = Term::world();
Formula pw(const char* s) { return Formula::patom(Atom::prop(Symbol(s), w0)); }
Formula nw(const char* s) { return Formula::natom(Atom::prop(Symbol(s), w0)); }

io::Problem fixture(const char* name) { return io::parse_problem(testing::read_fixture(name)); }

template <class Index>
std::vector<std::string> lines(const lkf::ProofTrace<Index>& t) {
  std::vector<std::string> out;
  for (const auto& e : t) out.push_back(lkf::to_string(e));
  return out;
}

}  // namespace

TEST_CASE("neg flips polarity and is an involution") {
  const auto a = pw("p");
  const auto b = nw("q");
  CHECK(lkf::neg(a) == nw("p"));
  CHECK(lkf::neg(Formula::and_neg(a, b)) == Formula::or_pos(lkf::neg(a), lkf::neg(b)));
  CHECK(lkf::neg(Formula::delay_pos(Formula::and_neg(a, b))) ==
        Formula::delay_neg(lkf::neg(Formula::and_neg(a, b))));
  CHECK(lkf::neg(Formula::truth()) == Formula::falsity());
  for (const auto& m : testing::FormulaEnumerator::all_up_to(3)) {
    const auto f = logic::delp(logic::polarized_translation(m, w0));
    const auto g = lkf::neg(f);
    CHECK(lkf::neg(g) == f);
    if (!f.is_atom()) CHECK(logic::is_positive(g) != logic::is_positive(f));
  }
}

TEST_CASE("fresh eigenvariables") {
  fittings::FittingsFpc fpc;
  lkf::Kernel<fittings::FittingsFpc> k(fpc);
  const auto a = k.fresh_eigen();
  const auto b = k.fresh_eigen();
  CHECK(a == Term::eigen(1));
  CHECK(b == Term::eigen(2));
  CHECK(a != Term::world());
}

TEST_CASE("excluded middle under the fittings FPC") {
  const auto goal = io::parse_formula("(or (+ p) (- p))");
  fittings::FittingsFpc fpc;
  using fittings::FitIndex;
  const auto e = FitIndex::eind();
  auto tree = fittings::dt(e, FitIndex::none(), {fittings::dt(FitIndex::lind(e), FitIndex::rind(e))});
  auto r = lkf::check(goal, fittings::initial_cert(tree), fpc);
  REQUIRE(lkf::accepted(r));
  CHECK(lines(std::get<0>(r).trace) == std::vector<std::string>{"store eind", "decide eind", "strip", "release",
                                                                "orneg", "store (lind eind)", "store (rind eind)",
                                                                "decide (lind eind)", "init (rind eind)"});

  auto bad = fittings::dt(e, FitIndex::none(), {fittings::dt(FitIndex::lind(e), e)});
  auto rej = lkf::check(goal, fittings::initial_cert(bad), fpc);
  REQUIRE_FALSE(lkf::accepted(rej));
  CHECK_FALSE(std::get<1>(rej).deepest.empty());
}

TEST_CASE("delays are transparent and False is a dead end") {
  OpenFpc fpc;
  lkf::Kernel<OpenFpc> k(fpc);
  const auto em = Formula::or_neg(pw("p"), nw("p"));
  auto r = k.check_sequent({Formula::delay_neg(em)}, OpenCert{1});
  REQUIRE(lkf::accepted(r));
  CHECK(lines(std::get<0>(r).trace).front() == "strip");
  CHECK(lines(std::get<0>(r).trace)[1] == "orneg");

  CHECK_FALSE(lkf::accepted(k.check_sequent({Formula::falsity(), em}, OpenCert{3})));
  CHECK(lkf::accepted(k.check_sequent({em, Formula::falsity()}, OpenCert{3})) == false);
  CHECK(lkf::accepted(k.check_sequent({Formula::or_neg(em, Formula::falsity())}, OpenCert{3})) == false);
  CHECK(lkf::accepted(k.check_sequent({Formula::delay_pos(Formula::truth())}, OpenCert{1})));
}

TEST_CASE("workbench is processed left to right") {
  OpenFpc fpc;
  lkf::Kernel<OpenFpc> k(fpc);
  auto r = k.check_sequent({nw("p"), pw("p")}, OpenCert{1});
  REQUIRE(lkf::accepted(r));
  CHECK(lines(std::get<0>(r).trace) == std::vector<std::string>{"store 0", "store 1", "decide 1", "init 0"});
}

TEST_CASE("step limit aborts the search") {
  OpenFpc fpc;
  lkf::Kernel<OpenFpc>::Options opts;
  opts.step_limit = 50;
  lkf::Kernel<OpenFpc> k(fpc, opts);
  auto r = k.check(io::parse_formula("(box (dia (+ p)))"), OpenCert{100});
  REQUIRE_FALSE(lkf::accepted(r));
  CHECK(std::get<1>(r).reason == "step limit exceeded");
  CHECK(lkf::stats_of(r).steps <= 51);
}

TEST_CASE("decide order follows the FPC declaration") {
  // Two stored positives; the first candidate offered wins the trace.
  OpenFpc fpc;
  lkf::Kernel<OpenFpc> k(fpc);
  auto r = k.check_sequent({nw("p"), pw("p"), pw("q")}, OpenCert{1});
  REQUIRE(lkf::accepted(r));
  CHECK(lines(std::get<0>(r).trace)[3] == "decide 1");
}

TEST_CASE("accepted traces replay under the guide") {
  fittings::FittingsFpc ffpc;
  simpfit::SimpfitFpc sfpc;
  for (const char* name : {"ftab1.prob", "ex2-fittings.prob"}) {
    const auto p = fixture(name);
    const auto cert = fittings::initial_cert(std::get<fittings::DecTree>(p.certificate));
    auto r = lkf::check(p.theorem, cert, ffpc);
    REQUIRE(lkf::accepted(r));
    const auto trace = std::get<0>(r).trace;
    lkf::Kernel<fittings::FittingsFpc>::Options opts;
    opts.guide = &trace;
    auto again = lkf::Kernel<fittings::FittingsFpc>(ffpc, opts).check(p.theorem, cert);
    REQUIRE(lkf::accepted(again));
    CHECK(std::get<0>(again).trace == trace);

    // Any change to an indexed event breaks the replay.
    for (std::size_t i = 0; i < trace.size(); ++i) {
      if (trace[i].kind != lkf::EventKind::Decide) continue;
      auto broken = trace;
      broken[i].index = fittings::FitIndex::bind(broken[i].index, broken[i].index);
      opts.guide = &broken;
      CHECK_FALSE(lkf::accepted(lkf::Kernel<fittings::FittingsFpc>(ffpc, opts).check(p.theorem, cert)));
    }
  }
  for (const char* name : {"sftab1.prob", "ex2-simpfit.prob"}) {
    const auto p = fixture(name);
    const auto cert = simpfit::initial_cert(std::get<simpfit::Evidence>(p.certificate));
    auto r = lkf::check(p.theorem, cert, sfpc);
    REQUIRE(lkf::accepted(r));
    const auto trace = std::get<0>(r).trace;
    lkf::Kernel<simpfit::SimpfitFpc>::Options opts;
    opts.guide = &trace;
    auto again = lkf::Kernel<simpfit::SimpfitFpc>(sfpc, opts).check(p.theorem, cert);
    REQUIRE(lkf::accepted(again));
    CHECK(std::get<0>(again).trace == trace);
    CHECK(lkf::stats_of(again).backtracks == 0);
    CHECK(lkf::stats_of(again).steps <= lkf::stats_of(r).steps);
  }
}

TEST_CASE("kernel agrees with brute-force derivability: open FPC") {
  OpenFpc fpc;
  testing::BruteForce<OpenFpc> brute(fpc);
  std::size_t accepted = 0;
  for (const auto& a : testing::FormulaEnumerator::all_up_to(3)) {
    for (int budget = 1; budget <= 3; ++budget) {
      const bool k = lkf::accepted(lkf::check(a, OpenCert{budget}, fpc));
      CHECK_MESSAGE(k == brute.derivable(a, OpenCert{budget}), logic::to_string(a) << " budget " << budget);
      accepted += k;
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("kernel agrees with brute-force derivability: fixtures and mutants") {
  fittings::FittingsFpc ffpc;
  simpfit::SimpfitFpc sfpc;
  testing::BruteForce<fittings::FittingsFpc> bf(ffpc);
  testing::BruteForce<simpfit::SimpfitFpc> bs(sfpc);
  for (const char* name : {"ftab1.prob", "sftab1.prob", "ex2-fittings.prob", "ex2-simpfit.prob",
                           "excluded-middle.prob"}) {
    const auto p = fixture(name);
    auto variants = testing::single_mutations(p.certificate);
    variants.push_back({"original", p.certificate});
    for (const auto& v : variants) {
      if (const auto* t = std::get_if<fittings::DecTree>(&v.certificate)) {
        const auto c = fittings::initial_cert(*t);
        CHECK_MESSAGE(lkf::accepted(lkf::check(p.theorem, c, ffpc)) == bf.derivable(p.theorem, c),
                      name << ": " << v.description);
      } else {
        const auto c = simpfit::initial_cert(std::get<simpfit::Evidence>(v.certificate));
        CHECK_MESSAGE(lkf::accepted(lkf::check(p.theorem, c, sfpc)) == bs.derivable(p.theorem, c),
                      name << ": " << v.description);
      }
    }
  }
}

TEST_CASE("kernel agrees with brute force on emitted certificates") {
  fittings::FittingsFpc ffpc;
  simpfit::SimpfitFpc sfpc;
  testing::BruteForce<simpfit::SimpfitFpc> bs(sfpc);
  std::size_t n = 0;
  for (const auto& a : testing::FormulaEnumerator::all_up_to(3)) {
    auto r = tableau::prove(a);
    if (!tableau::is_closed(r)) continue;
    const auto& t = std::get<tableau::Closed>(r).tableau;
    const auto ev = tableau::emit_simpfitcert(t);
    const auto c = simpfit::initial_cert(ev);
    CHECK(lkf::accepted(lkf::check(a, c, sfpc)));
    CHECK(bs.derivable(a, c));
    ++n;
  }
  CHECK(n > 0);
}

TEST_CASE("phase discipline checker") {
  using lkf::EventKind;
  using Ev = lkf::Event<fittings::FitIndex>;
  const auto p = fixture("ftab1.prob");
  auto r = lkf::check(p.theorem, fittings::initial_cert(std::get<fittings::DecTree>(p.certificate)),
                      fittings::FittingsFpc{});
  REQUIRE(lkf::accepted(r));
  const auto trace = std::get<0>(r).trace;
  CHECK(testing::bipole_violations(trace) == 0);

  // A decide inside a focused phase, an async rule under focus, a dangling focus.
  const std::vector<lkf::ProofTrace<fittings::FitIndex>> bad = {
      {Ev{EventKind::Decide}, Ev{EventKind::Decide}, Ev{EventKind::Init}},
      {Ev{EventKind::Decide}, Ev{EventKind::Store}, Ev{EventKind::Release}},
      {Ev{EventKind::Decide}, Ev{EventKind::Strip}},
      {Ev{EventKind::Release}},
  };
  for (const auto& t : bad) CHECK(testing::bipole_violations(t) > 0);
  auto spliced = trace;
  spliced.erase(std::find_if(spliced.begin(), spliced.end(), [](const Ev& e) { return e.kind == EventKind::Release; }));
  CHECK(testing::bipole_violations(spliced) > 0);
}
