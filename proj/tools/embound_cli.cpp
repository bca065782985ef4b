// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "embound/embound.h"

namespace {

enum ExitCode : int { kOk = 0, kInternal = 1, kVerificationFailure = 2, kInconclusive = 3, kUsage = 4 };

int exit_code_for(embound_status status) {
  switch (status) {
    case EMBOUND_OK: return kOk;
    case EMBOUND_ERR_INCONCLUSIVE: return kInconclusive;
    case EMBOUND_ERR_DOMAIN:
    case EMBOUND_ERR_CAPABILITY:
    case EMBOUND_ERR_LOOKUP:
    case EMBOUND_ERR_INVALID_ARGUMENT: return kUsage;
    case EMBOUND_ERR_INTERNAL: break;
  }
  return kInternal;
}

int report_failure(embound_status status) {
  std::fprintf(stderr, "embound: %s: %s\n", embound_status_name(status), embound_last_error());
  return exit_code_for(status);
}

struct ReportDeleter {
  void operator()(embound_report* r) const { embound_report_free(r); }
};
struct SuiteDeleter {
  void operator()(embound_suite_result* r) const { embound_suite_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { embound_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct AnalyzeArgs {
  std::optional<unsigned> block_bits;
  std::string group = "alt";
  std::optional<std::string> engines;
  unsigned precision = 128;
  std::string format = "json";
  std::optional<std::string> preset;
};

int run_analyze(const AnalyzeArgs& a) {
  unsigned block_bits = a.block_bits.value_or(0);
  std::string group = a.group;
  if (a.preset) {
    const char* preset_group = nullptr;
    if (const auto s = embound_preset(a.preset->c_str(), &block_bits, &preset_group, nullptr); s != EMBOUND_OK) {
      return report_failure(s);
    }
    group = preset_group;
  } else if (!a.block_bits) {
    std::fprintf(stderr, "embound: analyze needs --block-bits or --preset\n");
    return kUsage;
  }

  embound_report* raw = nullptr;
  const auto s = embound_analyze(block_bits, group.c_str(), a.engines ? a.engines->c_str() : nullptr, a.precision, &raw);
  if (s != EMBOUND_OK) return report_failure(s);
  std::unique_ptr<embound_report, ReportDeleter> report(raw);

  char* text = nullptr;
  const auto r = embound_report_render(report.get(), a.format == "text" ? EMBOUND_FORMAT_TEXT : EMBOUND_FORMAT_JSON, &text);
  if (r != EMBOUND_OK) return report_failure(r);
  OwnedString owned(text);
  std::fputs(text, stdout);

  if (embound_report_any_inconclusive(report.get())) return kInconclusive;
  if (embound_report_any_unsupported(report.get())) return kUsage;
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::string> mutation;
  unsigned induction_max = 0;
  bool list_mutations = false;
};

int run_verify(const VerifyArgs& a) {
  if (a.list_mutations) {
    for (std::size_t i = 0; i < embound_mutation_count(); ++i) std::printf("%s\n", embound_mutation_name(i));
    return kOk;
  }
  embound_suite_result* raw = nullptr;
  const auto s = embound_verify(a.suite.c_str(), a.mutation ? a.mutation->c_str() : nullptr, a.induction_max, &raw);
  if (s != EMBOUND_OK) return report_failure(s);
  std::unique_ptr<embound_suite_result, SuiteDeleter> result(raw);

  const std::size_t n = embound_suite_check_count(result.get());
  std::size_t failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    int passed = 0;
    embound_suite_check(result.get(), i, &name, &passed, &detail);
    if (!passed) ++failed;
    std::printf("%s %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
  }
  std::printf("suite %s%s%s: %zu/%zu checks passed\n", a.suite.c_str(), a.mutation ? " mutation " : "",
              a.mutation ? a.mutation->c_str() : "", n - failed, n);
  return embound_suite_all_passed(result.get()) ? kOk : kVerificationFailure;
}

int run_gl_oracle(unsigned dim) {
  std::uint64_t count = 0, max_order = 0, max_even = 0;
  const auto s = embound_oracle_gl(dim, &count, &max_order, &max_even);
  if (s != EMBOUND_OK) return report_failure(s);
  std::printf("{\n  \"dimension\": %u,\n  \"invertible_count\": %llu,\n  \"max_order\": %llu,\n  \"max_even_order\": %llu\n}\n",
              dim, static_cast<unsigned long long>(count), static_cast<unsigned long long>(max_order),
              static_cast<unsigned long long>(max_even));
  return kOk;
}

int run_landau_oracle(unsigned points, bool even_parity, bool even_order) {
  char* raw = nullptr;
  const auto s = embound_oracle_landau(points, even_parity ? 1 : 0, even_order ? 1 : 0, &raw);
  if (s != EMBOUND_OK) return report_failure(s);
  OwnedString value(raw);
  std::printf("{\n  \"points\": %u,\n  \"even_parity\": %s,\n  \"even_order\": %s,\n  \"max_order\": %s\n}\n", points,
              even_parity ? "true" : "false", even_order ? "true" : "false", raw);
  return kOk;
}

int run_preset(const std::string& name) {
  char* raw = nullptr;
  const auto s = embound_preset_render(name.c_str(), &raw);
  if (s != EMBOUND_OK) return report_failure(s);
  OwnedString json(raw);
  std::fputs(raw, stdout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified lower bounds on the dimension of linear embeddings of Alt/Sym(F_2^n)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", embound_version());

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the bound engines for one block size");
  analyze_cmd->add_option("--block-bits", analyze.block_bits, "Block size n; the group acts on F_2^n")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--group", analyze.group, "alt or sym")->check(CLI::IsMember({"alt", "sym"}));
  analyze_cmd->add_option("--engines", analyze.engines,
                          "Comma-separated: elementary,stirling,order-analytic,order-constructive");
  analyze_cmd->add_option("--precision", analyze.precision, "Starting fractional bits for interval arithmetic")
      ->check(CLI::Range(1, 4096));
  analyze_cmd->add_option("--format", analyze.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--preset", analyze.preset, "Take block size and group from a cipher preset")
      ->excludes("--block-bits");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify.suite, "all, lemma31, thm43 or oracles")
      ->check(CLI::IsMember({"all", "lemma31", "thm43", "oracles"}));
  verify_cmd->add_option("--mutate", verify.mutation, "Run with one engine formula perturbed");
  verify_cmd->add_option("--induction-max", verify.induction_max, "Upper end of the induction range (default 128)");
  verify_cmd->add_flag("--list-mutations", verify.list_mutations, "Print the mutation names and exit");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force oracles");
  oracle_cmd->require_subcommand(1);
  unsigned gl_dim = 0;
  auto* gl_cmd = oracle_cmd->add_subcommand("gl-max-order", "Exhaustive element orders in GL(N, 2), N <= 5");
  gl_cmd->add_option("--dim", gl_dim, "Dimension N")->required();
  unsigned landau_points = 0;
  bool even_parity = false;
  bool even_order = false;
  auto* landau_cmd = oracle_cmd->add_subcommand("landau", "Maximum permutation order over partitions, points <= 80");
  landau_cmd->add_option("--points", landau_points, "Number of points")->required();
  landau_cmd->add_flag("--even-parity", even_parity, "Only even permutations");
  landau_cmd->add_flag("--even-order", even_order, "Only permutations of even order");

  std::string preset_name;
  auto* preset_cmd = app.add_subcommand("preset", "Show a cipher preset");
  preset_cmd->add_option("name", preset_name, "aes, serpent, kasumi or gost-extension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (analyze_cmd->parsed()) return run_analyze(analyze);
  if (verify_cmd->parsed()) return run_verify(verify);
  if (gl_cmd->parsed()) return run_gl_oracle(gl_dim);
  if (landau_cmd->parsed()) return run_landau_oracle(landau_points, even_parity, even_order);
  if (preset_cmd->parsed()) return run_preset(preset_name);
  return kUsage;
}
