#include <algorithm>

#include "doctest.h"
#include "embound/verify.hpp"

using namespace embound;

namespace {

const OracleTables& shared_tables() {
  static const OracleTables tables = OracleTables::compute(Suite::kAll);
  return tables;
}

const CheckResult* find(const SuiteReport& r, std::string_view name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == r.checks.end() ? nullptr : &*it;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("reference formulas pass every suite") {
  const auto all = run_verification_suite(Suite::kAll, Formulas::reference(), shared_tables());
  for (const auto& c : all.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(all.checks.size() == 19);
  CHECK(all.all_passed());
  CHECK(all.failed_count() == 0);

  const auto* chain = find(all, "lemma31.induction-chain");
  REQUIRE(chain != nullptr);
  CHECK(chain->detail.find("127/127") == 0);

  const auto lemma = run_verification_suite(Suite::kLemma31);
  CHECK(lemma.all_passed());
  CHECK(lemma.checks.size() == 7);
  const auto thm = run_verification_suite(Suite::kThm43);
  CHECK(thm.all_passed());
  CHECK(thm.checks.size() == 5);
}

TEST_CASE("every mutation is caught") {
  REQUIRE(mutation_names().size() == 17);
  for (const auto& name : mutation_names()) {
    CAPTURE(name);
    const auto r = run_verification_suite(Suite::kAll, Formulas::mutated(name), shared_tables());
    CHECK_FALSE(r.all_passed());
  }
  const auto r = run_verification_suite(Suite::kAll, Formulas::mutated("darafsheh-constant"), shared_tables());
  const auto* gl = find(r, "oracles.darafsheh-vs-enumeration");
  REQUIRE(gl != nullptr);
  CHECK_FALSE(gl->passed);
  CHECK(gl->detail == "N = 4: enumeration says 6, formula says 7");
  CHECK_THROWS_AS(Formulas::mutated("nope"), LookupError);
}

TEST_CASE("out-of-range induction is a failure, not a pass") {
  SuiteOptions opt;
  opt.induction_n_max = 129;
  const auto r = run_verification_suite(Suite::kLemma31, Formulas::reference(), shared_tables(), opt);
  const auto* chain = find(r, "lemma31.induction-chain");
  REQUIRE(chain != nullptr);
  CHECK_FALSE(chain->passed);
  CHECK(chain->detail.find("error:") == 0);
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("suite names") {
  CHECK(parse_suite("thm43") == Suite::kThm43);
  CHECK(to_string(Suite::kOracles) == "oracles");
  CHECK_THROWS_AS(parse_suite("everything"), LookupError);
  // A suite run without its tables reports the gap instead of passing.
  const auto r = run_verification_suite(Suite::kOracles, Formulas::reference(), OracleTables{});
  CHECK_FALSE(r.all_passed());
}

}  // TEST_SUITE
