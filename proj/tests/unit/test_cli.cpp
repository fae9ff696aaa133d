#include <doctest.h>

#include <sstream>

#include "kcert/cli/cli.hpp"
#include "kcert/io/problem.hpp"
#include "scripted.hpp"

using namespace kcert;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check exit codes and report") {
  auto ok = run({"check", testing::fixture_path("ftab1.prob")});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("accept: 8 decides") != std::string::npos);
  CHECK(run({"check", testing::fixture_path("sftab1.prob")}).code == cli::kOk);
  auto bad = run({"check", testing::fixture_path("ftab1-mutated.prob")});
  CHECK(bad.code == cli::kNo);
  CHECK(bad.out.find("reject") != std::string::npos);
  auto malformed = run({"check", testing::fixture_path("malformed.prob")});
  CHECK(malformed.code == cli::kError);
  CHECK(malformed.err.find("5:11: 'lind' expects 1 argument") != std::string::npos);
  CHECK(run({"check", "/nonexistent/file.prob"}).code == cli::kError);
  CHECK(run({"check"}).code == cli::kError);
  CHECK(run({}).code == cli::kError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("check --trace prints one event per line") {
  auto r = run({"check", "--trace", testing::fixture_path("excluded-middle.prob")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("decide eind\n") != std::string::npos);
  CHECK(r.out.find("init (rind eind)\n") != std::string::npos);
}

TEST_CASE("prove emits checkable certificates") {
  for (const char* kind : {"fittings", "simpfit"}) {
    auto r = run({"prove", "(or (or (dia (- p)) (box (+ q))) (dia (and (+ p) (- q))))", "--emit", kind});
    REQUIRE(r.code == cli::kOk);
    const auto p = io::parse_problem(r.out);
    CHECK(p.theorem == testing::example1_theorem());
    CHECK(p.certificate.index() == (std::string(kind) == "fittings" ? 0u : 1u));
  }
  auto open = run({"prove", "(dia (+ p))"});
  CHECK(open.code == cli::kNo);
  CHECK(open.out.find("world 1: {}") != std::string::npos);
  CHECK(run({"prove", "(dia (+ p)"}).code == cli::kError);
  CHECK(run({"prove", "(or (+ p) (- p))", "--emit", "bogus"}).code == cli::kError);
}

TEST_CASE("translate and oracle") {
  auto t = run({"translate", "(box (+ q))"});
  CHECK(t.code == cli::kOk);
  CHECK(t.out.find("st: ") != std::string::npos);
  CHECK(t.out.find("tr: ") != std::string::npos);
  CHECK(run({"oracle", "(or (+ p) (- p))"}).out == "valid\n");
  CHECK(run({"oracle", "(dia (+ p))"}).code == cli::kNo);
}
