#include <doctest.h>

#include <algorithm>
#include <random>

#include "formulas.hpp"
#include "kcert/io/problem.hpp"
#include "kcert/lkf/kernel.hpp"
#include "kcert/simpfit/fpc.hpp"
#include "kcert/tableau/emit.hpp"
#include "kcert/tableau/prover.hpp"
#include "scripted.hpp"

using namespace kcert;
using fittings::FitIndex;
using logic::Atom;
using logic::Formula;
using logic::Symbol;
using logic::Term;
using simpfit::BoxInfo;
using simpfit::Closure;
using simpfit::Evidence;
using simpfit::SimpfitCert;

namespace {

const FitIndex E = FitIndex::eind();
const FitIndex N = FitIndex::none();
FitIndex L(const FitIndex& i) { return FitIndex::lind(i); }
FitIndex R(const FitIndex& i) { return FitIndex::rind(i); }
FitIndex B(const FitIndex& i, const FitIndex& o) { return FitIndex::bind(i, o); }

const simpfit::SimpfitFpc fpc;

SimpfitCert state(int flag, std::vector<FitIndex> pending, Evidence ev = {}) {
  SimpfitCert c = simpfit::initial_cert(ev);
  c.flag = flag;
  c.pending = std::move(pending);
  return c;
}

bool accepts(const logic::ModalFormula& a, const Evidence& ev) {
  return lkf::accepted(lkf::check(a, simpfit::initial_cert(ev), fpc));
}

io::Problem fixture(const char* name) { return io::parse_problem(testing::read_fixture(name)); }

}  // namespace

TEST_CASE("initial state") {
  auto c = simpfit::initial_cert(Evidence{{Closure{L(E), R(E)}}, {}});
  CHECK(c.flag == 1);
  CHECK(c.pending == std::vector<FitIndex>{E});
  CHECK(c.eigmap.empty());
  CHECK(c.usable.empty());
  CHECK(c.closures->size() == 1);
}

TEST_CASE("decide_e") {
  auto c = state(0, {});
  c.usable = {E};
  auto r = fpc.decide_expert(c, E);
  REQUIRE(r.size() == 1);
  CHECK(r[0].flag == 1);
  CHECK(r[0].pending == std::vector<FitIndex>{E});
  CHECK(r[0].usable.empty());
  CHECK(fpc.decide_expert(c, L(E)).empty());
  auto n = fpc.decide_expert(state(0, {}), N);
  REQUIRE(n.size() == 1);
  CHECK(n[0].pending == std::vector<FitIndex>{N});
}

TEST_CASE("token multiset: two tokens allow two decides") {
  auto c = state(0, {});
  c.usable = {E, E};
  auto once = fpc.decide_expert(c, E);
  REQUIRE(once.size() == 1);
  CHECK(once[0].usable == std::vector<FitIndex>{E});
  CHECK(fpc.decide_expert(once[0], E).size() == 1);
}

TEST_CASE("orNeg_c, andNeg_c, andPos_e, release_e") {
  auto o = fpc.or_neg_clerk(state(1, {E}));
  REQUIRE(o.size() == 1);
  CHECK(o[0].flag == 0);
  CHECK(o[0].pending == std::vector<FitIndex>{L(E), R(E)});
  CHECK(fpc.or_neg_clerk(state(1, {L(E), R(E)})).empty());
  CHECK(fpc.or_neg_clerk(state(0, {L(E)}))[0].pending == std::vector<FitIndex>{L(E)});

  auto a = fpc.and_neg_clerk(state(1, {E}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].first.pending == std::vector<FitIndex>{L(E)});
  CHECK(a[0].second.pending == std::vector<FitIndex>{R(E)});
  auto pass = fpc.and_neg_clerk(state(0, {B(E, R(E))}));
  REQUIRE(pass.size() == 1);
  CHECK(pass[0].first.pending == pass[0].second.pending);
  CHECK(fpc.and_neg_clerk(state(1, {L(E), R(E)})).empty());

  auto p = fpc.and_pos_expert(state(1, {E}));
  REQUIRE(p.size() == 1);
  CHECK(p[0].first.flag == 0);
  CHECK(p[0].second.flag == 0);
  CHECK(fpc.release_expert(state(1, {E})).size() == 1);
  CHECK_FALSE(fpc.true_expert(state(1, {E})));
  CHECK(fpc.cut_expert(state(1, {E})).empty());
}

TEST_CASE("all_c") {
  auto r = fpc.all_clerk(state(1, {R(L(E))}));
  REQUIRE(r.size() == 1);
  auto n = r[0](Term::eigen(3));
  CHECK(n.flag == 0);
  CHECK(n.pending == std::vector<FitIndex>{L(R(L(E)))});
  CHECK(n.eigmap == std::vector<fittings::EigenBinding>{{R(L(E)), Term::eigen(3)}});
  auto two = fpc.all_clerk(n)[0](Term::eigen(4));
  CHECK(two.eigmap.size() == 2);
  CHECK(two.eigmap[0].eigen != two.eigmap[1].eigen);
  CHECK(fpc.all_clerk(state(0, {L(E), R(E)})).empty());
}

TEST_CASE("some_e needs a boxinfo and an instantiated universal") {
  const FitIndex ex = L(L(E));
  const FitIndex box = R(L(E));
  auto c = state(1, {ex}, Evidence{{}, {BoxInfo{ex, box}}});
  CHECK(fpc.some_expert(c).empty());  // universal not yet decided
  c.eigmap = {{box, Term::eigen(1)}};
  auto r = fpc.some_expert(c);
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == Term::eigen(1));
  CHECK(r[0].second.pending == std::vector<FitIndex>{B(ex, box)});
  CHECK(r[0].second.boxinfos.empty());
  CHECK(r[0].second.usable == std::vector<FitIndex>{ex});
  CHECK(fpc.some_expert(r[0].second).empty());

  // Two partners for one existential.
  const FitIndex box2 = L(R(E));
  auto d = state(1, {ex}, Evidence{{}, {BoxInfo{ex, box}, BoxInfo{ex, box2}}});
  d.eigmap = {{box2, Term::eigen(2)}, {box, Term::eigen(1)}};
  auto s = fpc.some_expert(d);
  REQUIRE(s.size() == 2);
  CHECK(fpc.some_expert(state(1, {ex}, Evidence{{}, {BoxInfo{ex, box}}})).empty());
}

TEST_CASE("store_c") {
  const auto rel = Formula::natom(Atom::rel(Term::world(), Term::eigen(1)));
  auto r = fpc.store_clerk(state(1, {E}), rel);
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == N);
  CHECK(r[0].second.flag == 0);
  CHECK(r[0].second.pending == std::vector<FitIndex>{E});

  const FitIndex i = B(L(L(E)), R(L(E)));
  auto neg = fpc.store_clerk(state(0, {i}), Formula::natom(Atom::prop(Symbol("p"), Term::eigen(1))));
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].first == i);
  CHECK(neg[0].second.usable.empty());
  auto pos = fpc.store_clerk(state(0, {i}), Formula::patom(Atom::prop(Symbol("p"), Term::eigen(1))));
  CHECK(pos[0].second.usable == std::vector<FitIndex>{i});
  CHECK(fpc.store_clerk(state(0, {}), Formula::patom(Atom::prop(Symbol("p"), Term::world()))).empty());
}

TEST_CASE("initial_e") {
  const FitIndex a = L(B(R(E), R(L(E))));
  const FitIndex b = B(L(L(E)), R(L(E)));
  Evidence ev{{Closure{a, b}}, {}};
  CHECK(fpc.initial_expert(state(1, {a}, ev), b));
  CHECK(fpc.initial_expert(state(1, {b}, ev), a));
  CHECK(fpc.initial_expert(state(1, {a}, ev), N));
  CHECK_FALSE(fpc.initial_expert(state(1, {a}, ev), L(E)));
}

TEST_CASE("order freedom on the fixtures") {
  std::mt19937_64 rng(7);
  for (const char* name : {"sftab1.prob", "ex2-simpfit.prob"}) {
    const auto p = fixture(name);
    auto ev = std::get<Evidence>(p.certificate);
    REQUIRE(accepts(p.theorem, ev));
    for (int i = 0; i < 10; ++i) {
      std::shuffle(ev.closures.begin(), ev.closures.end(), rng);
      std::shuffle(ev.boxinfos.begin(), ev.boxinfos.end(), rng);
      for (auto& c : ev.closures) {
        if (rng() & 1) std::swap(c.a, c.b);
      }
      CHECK(accepts(p.theorem, ev));
    }
  }
}

TEST_CASE("minimality of sftab1") {
  const auto p = fixture("sftab1.prob");
  const auto ev = std::get<Evidence>(p.certificate);
  for (std::size_t k = 0; k < ev.closures.size(); ++k) {
    Evidence d = ev;
    d.closures.erase(d.closures.begin() + static_cast<std::ptrdiff_t>(k));
    CHECK_FALSE(accepts(p.theorem, d));
  }
  for (std::size_t k = 0; k < ev.boxinfos.size(); ++k) {
    Evidence d = ev;
    d.boxinfos.erase(d.boxinfos.begin() + static_cast<std::ptrdiff_t>(k));
    CHECK_FALSE(accepts(p.theorem, d));
  }
}

TEST_CASE("decide count stays within the token bound") {
  for (const auto& a : testing::FormulaEnumerator::all_up_to(4)) {
    auto r = tableau::prove(a);
    if (!tableau::is_closed(r)) continue;
    const auto ev = tableau::emit_simpfitcert(std::get<tableau::Closed>(r).tableau);
    auto res = lkf::check(a, simpfit::initial_cert(ev), fpc);
    REQUIRE_MESSAGE(lkf::accepted(res), logic::to_string(a));
    const auto& s = lkf::stats_of(res);
    CHECK(s.max_path_decide_surplus <= static_cast<std::ptrdiff_t>(ev.boxinfos.size()));
  }
}
