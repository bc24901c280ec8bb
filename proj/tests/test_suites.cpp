#include <doctest.h>

#include "mae/errors.hpp"
#include "mae/suites.hpp"

using namespace mae;

TEST_CASE("suites other than roundtrip pass") {
  for (const auto& name : suite_names()) {
    if (name == "roundtrip") continue;
    const SuiteResult r = run_suite(name, 3, 8);
    CHECK(r.cases == 8);
    CHECK_MESSAGE(r.ok(), name << ": " << r.counterexample.value_or(""));
  }
  CHECK_THROWS_AS(run_suite("nonsense", 1, 1), Error);
  CHECK(is_suite("strong-char"));
  CHECK_FALSE(is_suite("nonsense"));
}

TEST_CASE("roundtrip failures are all degenerate and ambiguous") {
  const SuiteResult r = run_suite("roundtrip", 1, 30);
  CHECK(r.cases == 30);
  REQUIRE(r.notes.size() == 3);
  CHECK(r.notes[1] == "0 failures with RT - S^2 != 0");
  CHECK(r.notes[2] == std::to_string(r.failures) +
                          " failures where D is one of several distributions with the same equation");
  if (r.counterexample) CHECK(r.counterexample->find("RT - S^2 = 0") != std::string::npos);
}

TEST_CASE("suites are deterministic") {
  const SuiteResult a = run_suite("roundtrip", 9, 10);
  const SuiteResult b = run_suite("roundtrip", 9, 10);
  CHECK(a.failures == b.failures);
  CHECK(a.counterexample == b.counterexample);
  CHECK(a.notes == b.notes);
}

TEST_CASE("a non-equation has a non-strong characteristic line") {
  CHECK(non_strong_witness("p111 + p112^2", 1).has_value());
  CHECK_FALSE(non_strong_witness("p111*p122 - p112^2 + p222", 1).has_value());
}
