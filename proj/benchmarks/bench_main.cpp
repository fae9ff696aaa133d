#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "kcert/fittings/fpc.hpp"
#include "kcert/io/problem.hpp"
#include "kcert/lkf/kernel.hpp"
#include "kcert/simpfit/fpc.hpp"
#include "kcert/tableau/emit.hpp"
#include "kcert/tableau/oracle.hpp"
#include "kcert/tableau/prover.hpp"

using namespace kcert;

namespace {

io::Problem load(const char* name) {
  std::ifstream in(std::string(KCERT_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return io::parse_problem(ss.str());
}

void check_fixture(benchmark::State& state, const char* name) {
  const auto p = load(name);
  std::size_t steps = 0;
  for (auto _ : state) {
    if (const auto* t = std::get_if<fittings::DecTree>(&p.certificate)) {
      auto r = lkf::check(p.theorem, fittings::initial_cert(*t), fittings::FittingsFpc{});
      steps = lkf::stats_of(r).steps;
      benchmark::DoNotOptimize(r);
    } else {
      auto r = lkf::check(p.theorem, simpfit::initial_cert(std::get<simpfit::Evidence>(p.certificate)),
                          simpfit::SimpfitFpc{});
      steps = lkf::stats_of(r).steps;
      benchmark::DoNotOptimize(r);
    }
  }
  state.counters["kernel_steps"] = static_cast<double>(steps);
}

void BM_CheckFtab1(benchmark::State& s) { check_fixture(s, "ftab1.prob"); }
void BM_CheckSftab1(benchmark::State& s) { check_fixture(s, "sftab1.prob"); }
void BM_CheckEx2Fittings(benchmark::State& s) { check_fixture(s, "ex2-fittings.prob"); }
void BM_CheckEx2Simpfit(benchmark::State& s) { check_fixture(s, "ex2-simpfit.prob"); }

void BM_ProveAndEmit(benchmark::State& state) {
  const auto a = load("ftab1.prob").theorem;
  for (auto _ : state) {
    auto r = tableau::prove(a);
    const auto& t = std::get<tableau::Closed>(r).tableau;
    benchmark::DoNotOptimize(tableau::emit_fitcert(t));
    benchmark::DoNotOptimize(tableau::emit_simpfitcert(t));
  }
}

void BM_Oracle(benchmark::State& state) {
  const auto a = load("ex2-fittings.prob").theorem;
  for (auto _ : state) benchmark::DoNotOptimize(tableau::bounded_validity_oracle(a));
}

void BM_ParseProblem(benchmark::State& state) {
  std::ifstream in(std::string(KCERT_FIXTURE_DIR) + "/ftab1.prob");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  for (auto _ : state) benchmark::DoNotOptimize(io::parse_problem(text));
}

}  // namespace

BENCHMARK(BM_CheckFtab1);
BENCHMARK(BM_CheckSftab1);
BENCHMARK(BM_CheckEx2Fittings);
BENCHMARK(BM_CheckEx2Simpfit);
BENCHMARK(BM_ProveAndEmit);
BENCHMARK(BM_Oracle);
BENCHMARK(BM_ParseProblem);

BENCHMARK_MAIN();
