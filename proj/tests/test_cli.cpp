#include "golden.hpp"

#include "fpalg/presentation.hpp"
#include "fpalg/text.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace fpalg;
using namespace testing;

TEST_CASE("golden transcripts") {
  const bool update = std::getenv("FPALG_UPDATE_GOLDEN") != nullptr;
  const GoldenReport report = run_golden_suite(update);
  for (const auto& name : report.mismatched)
    FAIL_CHECK("golden transcript differs: ", name);
  for (const auto& verb : report.uncovered_verbs)
    FAIL_CHECK("no golden case for ", verb);
  CHECK(report.cases >= 17);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"aalpha-iso", "--alpha", "1", "--beta", "-1"}).code == kExitOk);
  CHECK(invoke({"parse", "algebra A over Q generators x relations { x* = 0; }"}).code == kExitParse);
  CHECK(invoke({"full", "--elem", "0"}).code == kExitSemantic);
  CHECK(invoke({"full", "--elem", "e11", "--maxdeg", "0"}).code == kExitUndecided);
  CHECK(invoke({"hilbert", "@DATA@/corpus/aalpha_t.alg"}).code == kExitParse);
  CHECK(invoke({"gb", "@DATA@/corpus/aalpha_t.alg", "--maxdeg", "-2"}).code == kExitParse);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"gb", "@DATA@/corpus/sklyanin_like.alg", "--maxdeg", "4"},
      {"canonicalize", "@DATA@/corpus/spread.alg"},
      {"full", "--n", "3", "--elem", "e22", "--maxdeg", "2"},
      {"aalpha-oracle", "--p", "11", "--alpha", "3", "--beta", "8"},
  };
  for (const auto& c : commands) {
    const Outcome a = invoke(c), b = invoke(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("corpus round trip through the printer") {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kData / "corpus")) {
    INFO(entry.path().filename().string());
    const Presentation p = parse_presentation(slurp(entry.path()));
    const Presentation q = parse_presentation(format_presentation(p));
    CHECK(presentations_equal(p, q));
    CHECK(format_presentation(q) == format_presentation(p));
    const Outcome printed = invoke({"print", entry.path().string()});
    CHECK(printed.code == kExitOk);
    CHECK(presentations_equal(parse_presentation(printed.out), p));
    ++files;
  }
  CHECK(files >= 8);
  CHECK(corpus_round_trip_failures().empty());
}

TEST_CASE("matrix output reparses to the same presentation") {
  const Outcome o = invoke({"matrix", "--n", "2", "--base", "@DATA@/corpus/mixed_degree.alg"});
  REQUIRE(o.code == kExitOk);
  const Presentation p = parse_presentation(o.out);
  CHECK(p.generators() == 6);
  const Outcome again = invoke({"print", "-"}, o.out);
  CHECK(again.out == o.out);
}
