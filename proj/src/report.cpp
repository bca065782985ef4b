#include "embound/report.hpp"

#include <algorithm>
#include <sstream>

#include "embound/element_orders.hpp"
#include "json.hpp"

namespace embound {

namespace {

constexpr EngineKind kAllEngines[] = {EngineKind::kElementary, EngineKind::kStirling, EngineKind::kOrderAnalytic,
                                      EngineKind::kOrderConstructive};

std::string valid_engine_names() {
  std::string out;
  for (auto e : kAllEngines) out += (out.empty() ? "" : ", ") + std::string(to_string(e));
  return out;
}

std::string group_name(GroupKind group, unsigned n) {
  return std::string(group == GroupKind::kAlt ? "Alt" : "Sym") + "(F_2^" + std::to_string(n) + ")";
}

std::string_view to_string(EngineStatus status) {
  switch (status) {
    case EngineStatus::kOk: return "ok";
    case EngineStatus::kInconclusive: return "inconclusive";
    case EngineStatus::kUnsupported: return "unsupported";
  }
  return "?";
}

DimensionBound run_engine(EngineKind engine, unsigned n, GroupKind group, unsigned precision) {
  switch (engine) {
    case EngineKind::kElementary:
      return counting_dimension_lower_bound(n, group, {FactorialEngineKind::kElementary, precision});
    case EngineKind::kStirling:
      return counting_dimension_lower_bound(n, group, {FactorialEngineKind::kStirling, precision});
    case EngineKind::kOrderAnalytic:
      return order_dimension_lower_bound(n, OrderMethod::kAnalytic, precision);
    case EngineKind::kOrderConstructive:
      return order_dimension_lower_bound(n, OrderMethod::kConstructive, precision);
  }
  throw InternalError("unknown engine");
}

std::string verdict_text(const EmbeddingReport& r) {
  const std::string g = group_name(r.group, r.block_bits);
  if (!r.m_final) return "no certified bound: no engine completed for " + g;
  const std::uint64_t m = *r.m_final;
  std::string out = g + " embeds in GL(F_2^(2^m)) only if m >= " + std::to_string(m) +
                    ": every linearization has dimension at least 2^" + std::to_string(m) + ".";
  if (2 * m >= 64) {
    out += " A 2^" + std::to_string(m) + " x 2^" + std::to_string(m) + " matrix over F_2 has 2^" +
           std::to_string(2 * m) + " entries, so such a linearization is infeasible to compute or apply.";
  }
  return out;
}

std::vector<std::string> report_notes(const EmbeddingReport& r) {
  std::vector<std::string> notes;
  notes.push_back("m_final is the maximum over the engines run; each engine certifies its lower bound independently.");

  const auto elementary = r.m_min(EngineKind::kElementary);
  const auto analytic = r.m_min(EngineKind::kOrderAnalytic);
  if (elementary && analytic) {
    notes.push_back(*elementary == *analytic
                        ? "counting (elementary) and element-order (analytic) engines agree on m >= " +
                              std::to_string(*elementary) + "."
                        : "counting (elementary) gives m >= " + std::to_string(*elementary) +
                              ", element-order (analytic) gives m >= " + std::to_string(*analytic) + ".");
  }

  if (r.find(EngineKind::kElementary) != nullptr) {
    const auto k = lemma_factorial_exponents(r.block_bits);
    const std::string n = std::to_string(r.block_bits);
    notes.push_back("integer exponents: 2^(" + n + "^" + std::to_string(k.lower) + ") < (2^" + n + ")! < 2^(" + n + "^" +
                    std::to_string(k.upper) + ").");
  }
  if (r.block_bits == 64) {
    notes.push_back(
        "the 64-bit sandwich (2^6)^11 < (2^64)! < (2^6)^13 holds at the exponent level only: "
        "2^(64^11) < (2^64)! < 2^(64^12) < 2^(64^13).");
  }
  const bool order_engine_run =
      r.find(EngineKind::kOrderAnalytic) != nullptr || r.find(EngineKind::kOrderConstructive) != nullptr;
  if (order_engine_run && r.group == GroupKind::kSym) {
    notes.push_back("element-order engines bound Alt(F_2^" + std::to_string(r.block_bits) +
                    "), a subgroup of Sym; a linearization of Sym restricts to one of Alt, so the bound applies.");
  }
  notes.push_back(
      "cited, not computed: Wagner (1976) determined the least degree of a faithful representation of Alt(k) "
      "over a field of characteristic 2; for k = 2^" +
      std::to_string(r.block_bits) + " points it is about 2^" + std::to_string(r.block_bits) + ".");
  return notes;
}

}  // namespace

std::string_view to_string(EngineKind engine) {
  switch (engine) {
    case EngineKind::kElementary: return "elementary";
    case EngineKind::kStirling: return "stirling";
    case EngineKind::kOrderAnalytic: return "order-analytic";
    case EngineKind::kOrderConstructive: return "order-constructive";
  }
  return "?";
}

EngineKind parse_engine(std::string_view name) {
  for (auto e : kAllEngines) {
    if (to_string(e) == name) return e;
  }
  throw LookupError("unknown engine '" + std::string(name) + "'; valid: " + valid_engine_names());
}

std::vector<EngineKind> parse_engine_list(std::string_view csv) {
  std::vector<EngineKind> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const auto engine = parse_engine(csv.substr(start, comma - start));
    if (std::find(out.begin(), out.end(), engine) == out.end()) out.push_back(engine);
    start = comma + 1;
  }
  return out;
}

const std::vector<EngineKind>& default_engines() {
  static const std::vector<EngineKind> engines{EngineKind::kElementary, EngineKind::kStirling, EngineKind::kOrderAnalytic};
  return engines;
}

const EngineOutcome* EmbeddingReport::find(EngineKind engine) const {
  const auto it = std::find_if(engines.begin(), engines.end(), [&](const EngineOutcome& o) { return o.engine == engine; });
  return it == engines.end() ? nullptr : &*it;
}

std::optional<std::uint64_t> EmbeddingReport::m_min(EngineKind engine) const {
  const auto* o = find(engine);
  if (o == nullptr || !o->bound) return std::nullopt;
  return o->bound->m_min;
}

bool EmbeddingReport::any_inconclusive() const {
  return std::any_of(engines.begin(), engines.end(), [](const EngineOutcome& o) { return o.status == EngineStatus::kInconclusive; });
}

bool EmbeddingReport::any_unsupported() const {
  return std::any_of(engines.begin(), engines.end(), [](const EngineOutcome& o) { return o.status == EngineStatus::kUnsupported; });
}

EmbeddingReport analyze(unsigned block_bits, GroupKind group, const std::vector<EngineKind>& engines, unsigned precision) {
  if (block_bits < 7) throw DomainError("analyze requires block_bits >= 7, got " + std::to_string(block_bits));
  if (precision < 1 || precision > kMaxPrecision) {
    throw DomainError("precision must lie in [1, " + std::to_string(kMaxPrecision) + "], got " + std::to_string(precision));
  }
  if (engines.empty()) throw DomainError("no engines selected");

  EmbeddingReport r;
  r.block_bits = block_bits;
  r.group = group;
  r.precision_bits = precision;
  for (auto engine : engines) {
    EngineOutcome o;
    o.engine = engine;
    try {
      o.bound = run_engine(engine, block_bits, group, precision);
      if (!r.m_final || o.bound->m_min > *r.m_final) r.m_final = o.bound->m_min;
    } catch (const InconclusiveError& e) {
      o.status = EngineStatus::kInconclusive;
      o.error = e.what();
    } catch (const CapabilityError& e) {
      o.status = EngineStatus::kUnsupported;
      o.error = e.what();
    } catch (const DomainError& e) {
      o.status = EngineStatus::kUnsupported;
      o.error = e.what();
    }
    r.engines.push_back(std::move(o));
  }
  r.verdict = verdict_text(r);
  r.notes = report_notes(r);
  return r;
}

std::string to_json(const EmbeddingReport& r) {
  using nlohmann::ordered_json;
  ordered_json engines = ordered_json::object();
  for (const auto& o : r.engines) {
    ordered_json e;
    e["status"] = std::string(to_string(o.status));
    if (o.bound) {
      e["m_min"] = o.bound->m_min;
      ordered_json evidence = ordered_json::array();
      for (const auto& c : o.bound->evidence) {
        ordered_json item;
        item["ruled_out_m"] = c.ruled_out_m;
        item["lhs_log2_lo"] = c.lhs_log2_lo.to_string();
        item["rhs_log2_hi"] = c.rhs_log2_hi.to_string();
        evidence.push_back(std::move(item));
      }
      e["evidence"] = std::move(evidence);
      e["precision_used"] = o.bound->precision_used;
    } else {
      e["m_min"] = nullptr;
      e["evidence"] = ordered_json::array();
      e["error"] = o.error;
    }
    engines[std::string(to_string(o.engine))] = std::move(e);
  }

  ordered_json j;
  j["block_bits"] = r.block_bits;
  j["group"] = std::string(to_string(r.group));
  j["engines"] = std::move(engines);
  j["m_final"] = r.m_final ? ordered_json(*r.m_final) : ordered_json(nullptr);
  j["verdict"] = r.verdict;
  j["notes"] = r.notes;
  j["precision_bits"] = r.precision_bits;
  return j.dump(2) + "\n";
}

std::string to_text(const EmbeddingReport& r) {
  std::ostringstream os;
  os << "group:      " << group_name(r.group, r.block_bits) << "\n";
  os << "precision:  " << r.precision_bits << " fractional bits\n";
  for (const auto& o : r.engines) {
    os << "engine " << to_string(o.engine) << ": ";
    if (o.bound) {
      os << "m >= " << o.bound->m_min << " (" << o.bound->evidence.size() << " values of m ruled out";
      if (!o.bound->evidence.empty()) {
        const auto& last = o.bound->evidence.back();
        os << "; decisive: m = " << last.ruled_out_m << ", log2 lhs >= " << last.lhs_log2_lo.to_string()
           << " > log2 rhs <= " << last.rhs_log2_hi.to_string();
      }
      os << ")\n";
    } else {
      os << to_string(o.status) << ": " << o.error << "\n";
    }
  }
  os << "m_final:    " << (r.m_final ? std::to_string(*r.m_final) : std::string("none")) << "\n";
  os << "verdict:    " << r.verdict << "\n";
  for (const auto& n : r.notes) os << "note:       " << n << "\n";
  return os.str();
}

// ------------------------------------------------------------------ presets

const std::vector<CipherPreset>& cipher_presets() {
  static const std::vector<CipherPreset> presets{
      {"aes", 128, GroupKind::kAlt,
       "R. Sparr, R. Wernsdorf, Group theoretic properties of Rijndael-like ciphers, Discrete Appl. Math. 156 (2008)"},
      {"serpent", 128, GroupKind::kAlt,
       "R. Wernsdorf, The round functions of SERPENT generate the alternating group (2000)"},
      {"kasumi", 64, GroupKind::kAlt,
       "R. Sparr, R. Wernsdorf, The round functions of KASUMI generate the alternating group, J. Math. Cryptol. 9 (2015)"},
      {"gost-extension", 64, GroupKind::kAlt,
       "R. Aragona, A. Caranti, M. Sala, The group generated by the round functions of a GOST-like cipher, "
       "Ann. Mat. Pura Appl. 196 (2017)"},
  };
  return presets;
}

const CipherPreset& find_preset(std::string_view name) {
  for (const auto& p : cipher_presets()) {
    if (p.name == name) return p;
  }
  std::string valid;
  for (const auto& p : cipher_presets()) valid += (valid.empty() ? "" : ", ") + p.name;
  throw LookupError("unknown preset '" + std::string(name) + "'; valid: " + valid);
}

std::string to_json(const CipherPreset& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  j["block_bits"] = p.block_bits;
  j["group"] = std::string(to_string(p.group));
  j["citation"] = p.citation;
  return j.dump(2) + "\n";
}

}  // namespace embound
