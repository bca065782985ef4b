// Exercises the shared library through its C interface only.

#include <cstring>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "embound/embound.h"

namespace {

std::string take(char* s) {
  std::string out(s == nullptr ? "" : s);
  embound_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("analyze and render") {
  embound_report* r = nullptr;
  REQUIRE(embound_analyze(128, "alt", "elementary,order-analytic", 0, &r) == EMBOUND_OK);
  std::uint64_t m = 0;
  CHECK(embound_report_m_final(r, &m) == EMBOUND_OK);
  CHECK(m == 67);
  CHECK(embound_report_engine_m_min(r, "elementary", &m) == EMBOUND_OK);
  CHECK(m == 67);
  CHECK(embound_report_engine_m_min(r, "order-analytic", &m) == EMBOUND_OK);
  CHECK(m == 67);
  CHECK(embound_report_engine_m_min(r, "stirling", &m) == EMBOUND_ERR_LOOKUP);
  CHECK(std::string(embound_last_error()).find("not run") != std::string::npos);
  CHECK(embound_report_any_inconclusive(r) == 0);

  char* json = nullptr;
  REQUIRE(embound_report_render(r, EMBOUND_FORMAT_JSON, &json) == EMBOUND_OK);
  const std::string j = take(json);
  CHECK(j.find("\"m_final\": 67") != std::string::npos);
  char* text = nullptr;
  REQUIRE(embound_report_render(r, EMBOUND_FORMAT_TEXT, &text) == EMBOUND_OK);
  CHECK(take(text).find("m_final:    67") != std::string::npos);
  embound_report_free(r);

  REQUIRE(embound_analyze(64, "alt", nullptr, 128, &r) == EMBOUND_OK);
  CHECK(embound_report_engine_m_min(r, "elementary", &m) == EMBOUND_OK);
  CHECK(m == 33);
  CHECK(embound_report_engine_m_min(r, "stirling", &m) == EMBOUND_OK);
  embound_report_free(r);
}

TEST_CASE("error codes and messages") {
  embound_report* r = nullptr;
  CHECK(embound_analyze(128, "cyclic", nullptr, 0, &r) == EMBOUND_ERR_LOOKUP);
  CHECK(r == nullptr);
  CHECK(std::string(embound_last_error()).find("cyclic") != std::string::npos);
  CHECK(embound_analyze(5, "alt", nullptr, 0, &r) == EMBOUND_ERR_DOMAIN);
  CHECK(embound_analyze(128, "alt", "bogus", 0, &r) == EMBOUND_ERR_LOOKUP);
  CHECK(embound_analyze(128, nullptr, nullptr, 0, &r) == EMBOUND_ERR_INVALID_ARGUMENT);
  CHECK(embound_analyze(128, "alt", nullptr, 0, nullptr) == EMBOUND_ERR_INVALID_ARGUMENT);
  CHECK(embound_oracle_gl(6, nullptr, nullptr, nullptr) == EMBOUND_ERR_CAPABILITY);
  CHECK(std::strcmp(embound_status_name(EMBOUND_ERR_INCONCLUSIVE), "inconclusive") == 0);
  CHECK(embound_report_render(nullptr, EMBOUND_FORMAT_JSON, nullptr) == EMBOUND_ERR_INVALID_ARGUMENT);
  embound_report_free(nullptr);
  embound_suite_result_free(nullptr);
}

TEST_CASE("verification through the C interface") {
  embound_suite_result* s = nullptr;
  REQUIRE(embound_verify("thm43", nullptr, 0, &s) == EMBOUND_OK);
  CHECK(embound_suite_all_passed(s) == 1);
  CHECK(embound_suite_check_count(s) == 5);
  const char* name = nullptr;
  const char* detail = nullptr;
  int passed = 0;
  CHECK(embound_suite_check(s, 0, &name, &passed, &detail) == EMBOUND_OK);
  CHECK(std::string(name) == "thm43.i");
  CHECK(passed == 1);
  CHECK(embound_suite_check(s, 99, &name, &passed, &detail) == EMBOUND_ERR_INVALID_ARGUMENT);
  embound_suite_result_free(s);

  REQUIRE(embound_verify("thm43", "dixon-mortimer-coefficient+1", 0, &s) == EMBOUND_OK);
  CHECK(embound_suite_all_passed(s) == 0);
  embound_suite_result_free(s);

  REQUIRE(embound_verify("lemma31", nullptr, 129, &s) == EMBOUND_OK);
  CHECK(embound_suite_all_passed(s) == 0);
  embound_suite_result_free(s);

  CHECK(embound_verify("everything", nullptr, 0, &s) == EMBOUND_ERR_LOOKUP);
  CHECK(embound_verify("all", "no-such-mutation", 0, &s) == EMBOUND_ERR_LOOKUP);
  CHECK(embound_mutation_count() == 17);
  CHECK(std::string(embound_mutation_name(0)) == "darafsheh-exponent+1");
  CHECK(embound_mutation_name(17) == nullptr);
}

TEST_CASE("presets and oracles") {
  unsigned bits = 0;
  const char* group = nullptr;
  const char* citation = nullptr;
  REQUIRE(embound_preset("aes", &bits, &group, &citation) == EMBOUND_OK);
  CHECK(bits == 128);
  CHECK(std::string(group) == "alt");
  CHECK(std::string(citation).find("Sparr") != std::string::npos);
  CHECK(embound_preset("unknown", &bits, &group, &citation) == EMBOUND_ERR_LOOKUP);
  char* json = nullptr;
  REQUIRE(embound_preset_render("kasumi", &json) == EMBOUND_OK);
  CHECK(take(json).find("\"block_bits\": 64") != std::string::npos);

  std::uint64_t count = 0, max_order = 0, max_even = 0;
  REQUIRE(embound_oracle_gl(4, &count, &max_order, &max_even) == EMBOUND_OK);
  CHECK(count == 20160);
  CHECK(max_even == 6);
  CHECK(max_order == 15);
  char* value = nullptr;
  REQUIRE(embound_oracle_landau(8, 1, 1, &value) == EMBOUND_OK);
  CHECK(take(value) == "6");
  CHECK(embound_oracle_landau(81, 0, 0, &value) == EMBOUND_ERR_CAPABILITY);
}
