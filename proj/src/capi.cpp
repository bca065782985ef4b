#include "embound/embound.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "embound/oracles.hpp"
#include "embound/report.hpp"
#include "embound/verify.hpp"

struct embound_report {
  embound::EmbeddingReport value;
};

struct embound_suite_result {
  embound::SuiteReport value;
};

namespace {

thread_local std::string last_error;

embound_status fail(embound_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Body>
embound_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const embound::DomainError& e) {
    return fail(EMBOUND_ERR_DOMAIN, e.what());
  } catch (const embound::CapabilityError& e) {
    return fail(EMBOUND_ERR_CAPABILITY, e.what());
  } catch (const embound::InconclusiveError& e) {
    return fail(EMBOUND_ERR_INCONCLUSIVE, e.what());
  } catch (const embound::LookupError& e) {
    return fail(EMBOUND_ERR_LOOKUP, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EMBOUND_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EMBOUND_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

embound_status null_argument(const char* what) { return fail(EMBOUND_ERR_INVALID_ARGUMENT, std::string(what) + " is null"); }

}  // namespace

extern "C" {

const char* embound_version(void) { return "1.0.0"; }

const char* embound_status_name(embound_status status) {
  switch (status) {
    case EMBOUND_OK: return "ok";
    case EMBOUND_ERR_DOMAIN: return "domain error";
    case EMBOUND_ERR_CAPABILITY: return "capability error";
    case EMBOUND_ERR_INCONCLUSIVE: return "inconclusive";
    case EMBOUND_ERR_LOOKUP: return "lookup error";
    case EMBOUND_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EMBOUND_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* embound_last_error(void) { return last_error.c_str(); }

void embound_string_free(char* s) { std::free(s); }

embound_status embound_analyze(unsigned block_bits, const char* group, const char* engines, unsigned precision,
                               embound_report** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (group == nullptr) return null_argument("group");
  return guarded([&] {
    const auto kind = embound::parse_group_kind(group);
    const auto selection = engines == nullptr ? embound::default_engines() : embound::parse_engine_list(engines);
    const unsigned p = precision == 0 ? embound::kDefaultPrecision : precision;
    *out = new embound_report{embound::analyze(block_bits, kind, selection, p)};
    return EMBOUND_OK;
  });
}

void embound_report_free(embound_report* report) { delete report; }

embound_status embound_report_render(const embound_report* report, embound_format format, char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    switch (format) {
      case EMBOUND_FORMAT_JSON: *out = copy_string(embound::to_json(report->value)); return EMBOUND_OK;
      case EMBOUND_FORMAT_TEXT: *out = copy_string(embound::to_text(report->value)); return EMBOUND_OK;
    }
    return fail(EMBOUND_ERR_INVALID_ARGUMENT, "unknown format");
  });
}

embound_status embound_report_m_final(const embound_report* report, uint64_t* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  if (!report->value.m_final) return fail(EMBOUND_ERR_LOOKUP, "no engine completed");
  *out = *report->value.m_final;
  last_error.clear();
  return EMBOUND_OK;
}

embound_status embound_report_engine_m_min(const embound_report* report, const char* engine, uint64_t* out) {
  if (report == nullptr) return null_argument("report");
  if (engine == nullptr) return null_argument("engine");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const auto kind = embound::parse_engine(engine);
    const auto* o = report->value.find(kind);
    if (o == nullptr) return fail(EMBOUND_ERR_LOOKUP, std::string("engine '") + engine + "' was not run");
    if (!o->bound) return fail(EMBOUND_ERR_LOOKUP, std::string("engine '") + engine + "' did not complete: " + o->error);
    *out = o->bound->m_min;
    return EMBOUND_OK;
  });
}

int embound_report_any_inconclusive(const embound_report* report) {
  return report != nullptr && report->value.any_inconclusive() ? 1 : 0;
}

int embound_report_any_unsupported(const embound_report* report) {
  return report != nullptr && report->value.any_unsupported() ? 1 : 0;
}

embound_status embound_verify(const char* suite, const char* mutation, unsigned induction_n_max,
                              embound_suite_result** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (suite == nullptr) return null_argument("suite");
  return guarded([&] {
    const auto s = embound::parse_suite(suite);
    const auto formulas = mutation == nullptr ? embound::Formulas::reference() : embound::Formulas::mutated(mutation);
    embound::SuiteOptions options;
    if (induction_n_max != 0) options.induction_n_max = induction_n_max;
    *out = new embound_suite_result{embound::run_verification_suite(s, formulas, options)};
    return EMBOUND_OK;
  });
}

void embound_suite_result_free(embound_suite_result* result) { delete result; }

size_t embound_suite_check_count(const embound_suite_result* result) {
  return result == nullptr ? 0 : result->value.checks.size();
}

embound_status embound_suite_check(const embound_suite_result* result, size_t index, const char** name, int* passed,
                                   const char** detail) {
  if (result == nullptr) return null_argument("result");
  if (index >= result->value.checks.size()) return fail(EMBOUND_ERR_INVALID_ARGUMENT, "check index out of range");
  const auto& c = result->value.checks[index];
  if (name != nullptr) *name = c.name.c_str();
  if (passed != nullptr) *passed = c.passed ? 1 : 0;
  if (detail != nullptr) *detail = c.detail.c_str();
  last_error.clear();
  return EMBOUND_OK;
}

int embound_suite_all_passed(const embound_suite_result* result) {
  return result != nullptr && result->value.all_passed() ? 1 : 0;
}

size_t embound_mutation_count(void) { return embound::mutation_names().size(); }

const char* embound_mutation_name(size_t index) {
  const auto& names = embound::mutation_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

embound_status embound_preset(const char* name, unsigned* block_bits, const char** group, const char** citation) {
  if (name == nullptr) return null_argument("name");
  return guarded([&] {
    const auto& p = embound::find_preset(name);
    if (block_bits != nullptr) *block_bits = p.block_bits;
    if (group != nullptr) *group = to_string(p.group).data();
    if (citation != nullptr) *citation = p.citation.c_str();
    return EMBOUND_OK;
  });
}

embound_status embound_preset_render(const char* name, char** json_out) {
  if (name == nullptr) return null_argument("name");
  if (json_out == nullptr) return null_argument("json_out");
  *json_out = nullptr;
  return guarded([&] {
    *json_out = copy_string(embound::to_json(embound::find_preset(name)));
    return EMBOUND_OK;
  });
}

embound_status embound_oracle_gl(unsigned dimension, uint64_t* invertible_count, uint64_t* max_order,
                                 uint64_t* max_even_order) {
  return guarded([&] {
    const auto s = embound::gl_enumerate(dimension);
    if (invertible_count != nullptr) *invertible_count = s.invertible_count;
    if (max_order != nullptr) *max_order = s.max_order;
    if (max_even_order != nullptr) *max_even_order = s.max_even_order;
    return EMBOUND_OK;
  });
}

embound_status embound_oracle_landau(unsigned points, int even_parity, int even_order, char** decimal_out) {
  if (decimal_out == nullptr) return null_argument("decimal_out");
  *decimal_out = nullptr;
  return guarded([&] {
    const auto v = embound::landau_constrained_exact(points, {even_parity != 0, even_order != 0});
    *decimal_out = copy_string(v.to_string());
    return EMBOUND_OK;
  });
}

}  // extern "C"
