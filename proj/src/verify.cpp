#include "embound/verify.hpp"

#include <algorithm>

#include "embound/element_orders.hpp"
#include "embound/factorial_bounds.hpp"

namespace embound {

// ----------------------------------------------------------------- formulas

Formulas Formulas::reference() {
  Formulas f;
  f.darafsheh_max_even_order = [](unsigned N) { return embound::darafsheh_max_even_order(N); };
  f.elementary_lower = [](unsigned n) { return elementary_lower_log2_factorial_pow2(n); };
  f.elementary_upper = [](unsigned n) { return elementary_upper_log2_factorial_pow2(n); };
  f.stirling_bounds = [](const Natural& N, unsigned p) { return stirling_log2_factorial_bounds(N, p); };
  f.gl_log2_window = [](const Natural& N) { return gl_log2_order_bounds(N); };
  f.gl_order = [](unsigned N) { return gl_order_exact(N); };
  f.dixon_mortimer_lower = [](const Natural& x, unsigned p) { return dixon_mortimer_lower_log2(x, p); };
  f.witness_order = [](std::uint64_t points) { return construct_even_order_element(points).order; };
  return f;
}

namespace {

using Mutator = void (*)(Formulas&);

// Each entry moves one exponent of one formula by one.
const std::vector<std::pair<std::string, Mutator>>& mutation_table() {
  static const std::vector<std::pair<std::string, Mutator>> table{
      {"darafsheh-exponent+1",
       [](Formulas& f) { f.darafsheh_max_even_order = [](unsigned N) { return Natural::pow2(N) - Natural(2); }; }},
      {"darafsheh-exponent-1",
       [](Formulas& f) { f.darafsheh_max_even_order = [](unsigned N) { return Natural::pow2(N - 2) - Natural(2); }; }},
      {"darafsheh-constant",
       [](Formulas& f) { f.darafsheh_max_even_order = [](unsigned N) { return Natural::pow2(N - 1) - Natural(1); }; }},
      {"elementary-lower-exponent+1",
       [](Formulas& f) {
         f.elementary_lower = [](unsigned n) { return Natural(n) + Natural(n - 2) * Natural::pow2(n + 1) + Natural(2); };
       }},
      {"elementary-lower-exponent-1",
       [](Formulas& f) {
         f.elementary_lower = [](unsigned n) { return Natural(n) + Natural(n - 2) * Natural::pow2(n - 1) + Natural(2); };
       }},
      {"elementary-upper-exponent+1",
       [](Formulas& f) { f.elementary_upper = [](unsigned n) { return Natural(n) * Natural::pow2(n + 1); }; }},
      {"elementary-upper-exponent-1",
       [](Formulas& f) { f.elementary_upper = [](unsigned n) { return Natural(n) * Natural::pow2(n - 1); }; }},
      {"stirling-exponent+1",
       [](Formulas& f) {
         f.stirling_bounds = [](const Natural& N, unsigned p) {
           return stirling_log2_factorial_bounds(N, p) + (log2_of_natural(N, p + 4) - const_log2_e(p + 4));
         };
       }},
      {"stirling-exponent-1",
       [](Formulas& f) {
         f.stirling_bounds = [](const Natural& N, unsigned p) {
           return stirling_log2_factorial_bounds(N, p) - (log2_of_natural(N, p + 4) - const_log2_e(p + 4));
         };
       }},
      {"gl-window-exponent+1",
       [](Formulas& f) {
         f.gl_log2_window = [](const Natural& N) { return gl_log2_order_bounds(N) + Log2Interval::point(DyadicRational(1)); };
       }},
      {"gl-window-exponent-1",
       [](Formulas& f) {
         f.gl_log2_window = [](const Natural& N) { return gl_log2_order_bounds(N) - Log2Interval::point(DyadicRational(1)); };
       }},
      {"gl-product-exponent+1",
       [](Formulas& f) {
         f.gl_order = [](unsigned N) {
           Natural order(1);
           for (unsigned h = 0; h < N; ++h) order *= Natural::pow2(N + 1) - Natural::pow2(h);
           return order;
         };
       }},
      {"gl-product-exponent-1",
       [](Formulas& f) {
         f.gl_order = [](unsigned N) {
           Natural order(1);
           for (unsigned h = 0; h < N; ++h) {
             const Natural top = Natural::pow2(N - 1);
             const Natural sub = Natural::pow2(h);
             order *= top > sub ? top - sub : Natural(0);
           }
           return order;
         };
       }},
      {"dixon-mortimer-coefficient+1",
       [](Formulas& f) {
         f.dixon_mortimer_lower = [](const Natural& x, unsigned p) { return detail::dixon_mortimer_with_coefficient(x, p, -1); };
       }},
      {"dixon-mortimer-coefficient-1",
       [](Formulas& f) {
         f.dixon_mortimer_lower = [](const Natural& x, unsigned p) { return detail::dixon_mortimer_with_coefficient(x, p, -3); };
       }},
      {"witness-exponent+1",
       [](Formulas& f) {
         f.witness_order = [](std::uint64_t points) { return construct_even_order_element(points).order * Natural(2); };
       }},
      {"witness-exponent-1",
       [](Formulas& f) {
         f.witness_order = [](std::uint64_t points) { return construct_even_order_element(points).order / Natural(2); };
       }},
  };
  return table;
}

}  // namespace

Formulas Formulas::mutated(std::string_view mutation) {
  for (const auto& [name, apply] : mutation_table()) {
    if (name == mutation) {
      Formulas f = reference();
      apply(f);
      return f;
    }
  }
  std::string valid;
  for (const auto& name : mutation_names()) valid += (valid.empty() ? "" : ", ") + name;
  throw LookupError("unknown mutation '" + std::string(mutation) + "'; valid: " + valid);
}

const std::vector<std::string>& mutation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : mutation_table()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

// ------------------------------------------------------------------- suites

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::kAll: return "all";
    case Suite::kLemma31: return "lemma31";
    case Suite::kThm43: return "thm43";
    case Suite::kOracles: return "oracles";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (auto s : {Suite::kAll, Suite::kLemma31, Suite::kThm43, Suite::kOracles}) {
    if (to_string(s) == name) return s;
  }
  throw LookupError("unknown suite '" + std::string(name) + "'; valid: all, lemma31, thm43, oracles");
}

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t SuiteReport::failed_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

constexpr unsigned kSandwichMax = 16;
constexpr unsigned kGlEnumerationMax = 5;
constexpr unsigned kLandauMin = 7;
constexpr unsigned kTableBits = 256;

bool includes(Suite run, Suite part) { return run == Suite::kAll || run == part; }

}  // namespace

OracleTables OracleTables::compute(Suite suite) {
  OracleTables t;
  if (includes(suite, Suite::kLemma31)) {
    for (unsigned n = 2; n <= kSandwichMax; ++n) {
      t.log2_factorial_pow2.push_back(log2_of_natural(factorial_exact(std::uint64_t{1} << n), kTableBits));
    }
  }
  if (includes(suite, Suite::kOracles)) {
    for (unsigned N = 1; N <= kGlEnumerationMax; ++N) t.gl.push_back(gl_enumerate(N));
    for (unsigned points = kLandauMin; points <= kMaxLandauPoints; ++points) {
      t.landau_even_order.push_back(landau_constrained_exact(points, {true, true}));
      t.landau_even_parity.push_back(landau_constrained_exact(points, {true, false}));
    }
  }
  return t;
}

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  template <typename Body>
  void check(std::string name, Body&& body) {
    CheckResult r;
    r.name = std::move(name);
    try {
      Outcome o = body();
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  SuiteReport& report_;
};

DyadicRational dyadic(const Natural& n) { return DyadicRational(n); }

bool disjoint(const Log2Interval& a, const Log2Interval& b) { return a.hi() < b.lo() || b.hi() < a.lo(); }

const Log2Interval& table_entry(const std::vector<Log2Interval>& table, std::size_t i, std::string_view which) {
  if (i >= table.size()) throw InternalError("oracle table '" + std::string(which) + "' was not computed");
  return table[i];
}

const Natural& table_entry(const std::vector<Natural>& table, std::size_t i, std::string_view which) {
  if (i >= table.size()) throw InternalError("oracle table '" + std::string(which) + "' was not computed");
  return table[i];
}

void lemma31_checks(Recorder& rec, const Formulas& f, const OracleTables& t, const SuiteOptions& opt) {
  rec.check("lemma31.lower-exponent", [&] {
    for (auto [n, k] : {std::pair{128u, 19u}, std::pair{64u, 11u}}) {
      if (!(Natural(n).pow(k) < f.elementary_lower(n))) {
        return fail(std::to_string(n) + "^" + std::to_string(k) + " >= L(" + std::to_string(n) + ")");
      }
    }
    return pass("128^19 < 128 + 126 * 2^128 + 2 and 64^11 < 64 + 62 * 2^64 + 2, exact");
  });

  rec.check("lemma31.upper-exponent", [&] {
    for (auto [n, k] : {std::pair{128u, 20u}, std::pair{64u, 12u}}) {
      if (!(f.elementary_upper(n) <= Natural(n).pow(k))) {
        return fail(std::to_string(n) + "^" + std::to_string(k) + " < upper exponent " + f.elementary_upper(n).to_string());
      }
    }
    return pass("128 * 2^128 <= 128^20 and 64 * 2^64 <= 64^12, exact");
  });

  rec.check("lemma31.induction-chain", [&] {
    const InductionRecord r = verify_induction_chain(opt.induction_n_max);
    if (!r.base_case_passed) return fail("base case (2^2)! < 2^(2^20) failed");
    for (const auto& s : r.steps) {
      if (!s.passed) return fail("n^20 + 2^n n + 2^n < (n+1)^20 fails at n = " + std::to_string(s.n));
    }
    return pass(std::to_string(r.passed_count()) + "/" + std::to_string(r.steps.size()) +
                " steps n^20 + 2^n n + 2^n < (n+1)^20 pass, 2 <= n <= " + std::to_string(opt.induction_n_max));
  });

  rec.check("lemma31.elementary-sandwich", [&] {
    for (unsigned n = 2; n <= kSandwichMax; ++n) {
      const auto& exact = table_entry(t.log2_factorial_pow2, n - 2, "log2 factorial");
      if (!(dyadic(f.elementary_lower(n)) < exact.lo() && exact.hi() < dyadic(f.elementary_upper(n)))) {
        return fail("log2((2^" + std::to_string(n) + ")!) = " + exact.to_string() + " not strictly inside [" +
                    f.elementary_lower(n).to_string() + ", " + f.elementary_upper(n).to_string() + "]");
      }
    }
    return pass("15/15: L(n) < log2((2^n)!) < n 2^n strictly for 2 <= n <= 16");
  });

  rec.check("lemma31.elementary-slack", [&] {
    for (unsigned n = 2; n <= kSandwichMax; ++n) {
      const auto& exact = table_entry(t.log2_factorial_pow2, n - 2, "log2 factorial");
      const DyadicRational below = exact.hi() - dyadic(f.elementary_lower(n));
      const DyadicRational above = dyadic(f.elementary_upper(n)) - exact.lo();
      if (below > dyadic(Natural::pow2(n))) return fail("log2((2^n)!) - L(n) exceeds 2^n at n = " + std::to_string(n));
      if (above > dyadic(Natural(3) * Natural::pow2(n - 1))) {
        return fail("n 2^n - log2((2^n)!) exceeds 1.5 * 2^n at n = " + std::to_string(n));
      }
    }
    return pass("log2((2^n)!) - L(n) <= 2^n and n 2^n - log2((2^n)!) <= 1.5 * 2^n for 2 <= n <= 16");
  });

  rec.check("lemma31.stirling-sandwich", [&] {
    for (unsigned n = 2; n <= kSandwichMax; ++n) {
      const auto& exact = table_entry(t.log2_factorial_pow2, n - 2, "log2 factorial");
      const Log2Interval bounds = f.stirling_bounds(Natural::pow2(n), opt.precision);
      if (!(bounds.lo() < exact.lo() && exact.hi() < bounds.hi())) {
        return fail("log2((2^" + std::to_string(n) + ")!) not strictly inside Stirling enclosure " + bounds.to_string());
      }
    }
    return pass("15/15: log2((2^n)!) strictly inside the Stirling enclosure for 2 <= n <= 16");
  });

  rec.check("lemma31.gl-window", [&] {
    for (unsigned N = 1; N <= 64; ++N) {
      const Log2Interval exact = log2_of_natural(f.gl_order(N), 64);
      const Log2Interval window = f.gl_log2_window(Natural(N));
      if (!(window.lo() < exact.lo() && exact.hi() < window.hi())) {
        return fail("log2 |GL(" + std::to_string(N) + ", 2)| = " + exact.to_string() + " not strictly inside " +
                    window.to_string());
      }
    }
    return pass("N^2 - 2 < log2 |GL(N, 2)| < N^2 strictly for 1 <= N <= 64");
  });
}

void thm43_checks(Recorder& rec, const Formulas& f, const SuiteOptions& opt) {
  for (const auto& sc : verify_theorem43_side_conditions(opt.precision)) {
    rec.check(sc.name, [&] {
      std::string detail = sc.statement + "; lhs " + sc.lhs.to_string() + ", rhs " + sc.rhs.to_string();
      if (sc.points_checked > 1) detail += "; " + std::to_string(sc.points_checked) + " points";
      return Outcome{sc.passed, detail};
    });
  }

  rec.check("thm43.epsilon", [&] {
    const Log2Interval t = f.dixon_mortimer_lower(Natural::pow2(128), opt.precision);
    const Log2Interval eps(t.lo().shifted(-66), t.hi().shifted(-66));
    const Log2Interval direct = epsilon_enclosure(opt.precision);
    if (!(DyadicRational(100) * eps.lo() > DyadicRational(169) && DyadicRational(100) * eps.hi() < DyadicRational(170))) {
      return fail("eps = " + eps.to_string() + " not certified inside (1.69, 1.70)");
    }
    if (disjoint(eps, direct)) return fail("exponent route " + eps.to_string() + " disjoint from " + direct.to_string());
    return pass("1.69 < eps < 1.70 certified, eps in " + eps.to_string());
  });

  rec.check("thm43.element-beats-analytic", [&] {
    const Natural order = f.witness_order(128);
    const Log2Interval lhs = log2_of_natural(order, opt.precision);
    const Log2Interval rhs = f.dixon_mortimer_lower(Natural(128), opt.precision);
    if (order % Natural(2) != Natural(0)) return fail("element order " + order.to_string() + " is odd");
    if (!(lhs.lo() > rhs.hi())) {
      return fail("log2 " + order.to_string() + " = " + lhs.to_string() + " does not exceed " + rhs.to_string());
    }
    return pass("order " + order.to_string() + " > e^sqrt(128 ln 128 / 4), log2 " + lhs.lo().to_string() + " > " +
                rhs.hi().to_string());
  });
}

void oracle_checks(Recorder& rec, const Formulas& f, const OracleTables& t, const SuiteOptions& opt) {
  rec.check("oracles.darafsheh-vs-enumeration", [&] {
    for (unsigned N = 4; N <= kGlEnumerationMax; ++N) {
      if (N > t.gl.size()) throw InternalError("oracle table 'gl' was not computed");
      const Natural enumerated(t.gl[N - 1].max_even_order);
      const Natural formula = f.darafsheh_max_even_order(N);
      if (enumerated != formula) {
        return fail("N = " + std::to_string(N) + ": enumeration says " + enumerated.to_string() + ", formula says " +
                    formula.to_string());
      }
    }
    return pass("max even order 6 in GL(4, 2) and 14 in GL(5, 2), equal to 2^(N-1) - 2");
  });

  rec.check("oracles.darafsheh-log-form", [&] {
    for (unsigned N = 4; N <= 64; ++N) {
      const Log2Interval engine = darafsheh_max_even_order_log2(Natural(N), opt.precision);
      const Log2Interval formula = log2_of_natural(f.darafsheh_max_even_order(N), opt.precision);
      if (disjoint(engine, formula)) return fail("log form disagrees with exact form at N = " + std::to_string(N));
    }
    return pass("log2 form agrees with 2^(N-1) - 2 for 4 <= N <= 64");
  });

  rec.check("oracles.gl-order-vs-enumeration", [&] {
    for (unsigned N = 1; N <= kGlEnumerationMax; ++N) {
      if (N > t.gl.size()) throw InternalError("oracle table 'gl' was not computed");
      const Natural counted(t.gl[N - 1].invertible_count);
      if (counted != f.gl_order(N)) {
        return fail("N = " + std::to_string(N) + ": " + counted.to_string() + " invertible matrices, formula gives " +
                    f.gl_order(N).to_string());
      }
    }
    return pass("invertible-matrix counts match prod (2^N - 2^h) for 1 <= N <= 5");
  });

  rec.check("oracles.factorial-routes", [&] {
    for (std::uint64_t k : {0u, 1u, 2u, 16u, 1000u, 65536u}) {
      if (factorial_exact(k) != Natural::factorial(k)) return fail("binary splitting and GMP disagree at k = " + std::to_string(k));
    }
    return pass("binary-splitting k! equals GMP k! for k in {0, 1, 2, 16, 1000, 65536}");
  });

  rec.check("oracles.element-vs-cycle-lcm", [&] {
    for (std::uint64_t points = kLandauMin; points <= 1000; ++points) {
      const auto w = construct_even_order_element(points);
      const auto route = permutation_order_and_parity(w.structure);
      const Natural formula = f.witness_order(points);
      if (route.parity != Parity::kEven) return fail("odd permutation at " + std::to_string(points) + " points");
      if (w.structure.degree() != points) return fail("degree mismatch at " + std::to_string(points) + " points");
      if (route.order != formula) {
        return fail(std::to_string(points) + " points: lcm of cycles " + route.order.to_string() + ", formula " +
                    formula.to_string());
      }
    }
    return pass("2 prod p equals the lcm of the cycle lengths, even parity, 7 <= points <= 1000");
  });

  rec.check("oracles.element-vs-landau", [&] {
    for (unsigned points = kLandauMin; points <= kMaxLandauPoints; ++points) {
      const Natural& best = table_entry(t.landau_even_order, points - kLandauMin, "landau");
      const Natural formula = f.witness_order(points);
      if (formula > best) {
        return fail(std::to_string(points) + " points: element order " + formula.to_string() + " exceeds the maximum " +
                    best.to_string());
      }
    }
    return pass("constructed order <= exhaustive maximum even order in Alt(points), 7 <= points <= 80");
  });

  rec.check("oracles.analytic-vs-landau", [&] {
    for (unsigned points = 8; points <= kMaxLandauPoints; ++points) {
      const Natural& best = table_entry(t.landau_even_parity, points - kLandauMin, "landau");
      const Log2Interval bound = f.dixon_mortimer_lower(Natural(points), opt.precision);
      const Log2Interval actual = log2_of_natural(best, opt.precision);
      if (!(bound.hi() < actual.lo())) {
        return fail(std::to_string(points) + " points: analytic bound " + bound.to_string() +
                    " is not below log2 of the maximum order " + best.to_string() + " in Alt");
      }
    }
    return pass("e^sqrt(x ln x / 4) < maximum element order in Alt(x), 8 <= x <= 80");
  });
}

}  // namespace

SuiteReport run_verification_suite(Suite suite, const Formulas& formulas, const OracleTables& tables,
                                   const SuiteOptions& options) {
  SuiteReport report;
  report.suite = suite;
  Recorder rec(report);
  if (includes(suite, Suite::kLemma31)) lemma31_checks(rec, formulas, tables, options);
  if (includes(suite, Suite::kThm43)) thm43_checks(rec, formulas, options);
  if (includes(suite, Suite::kOracles)) oracle_checks(rec, formulas, tables, options);
  return report;
}

SuiteReport run_verification_suite(Suite suite, const Formulas& formulas, const SuiteOptions& options) {
  return run_verification_suite(suite, formulas, OracleTables::compute(suite), options);
}

}  // namespace embound
