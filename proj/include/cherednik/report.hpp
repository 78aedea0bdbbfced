// Batch driver layer: job descriptions, result records with expected-table
// verdicts, table enumeration, nonvanishing-sum survey, and deterministic
// JSON/CSV serialization.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "cherednik/closedform.hpp"
#include "cherednik/ffield.hpp"
#include "cherednik/rep3.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

using json = nlohmann::ordered_json;

// --- job specification --------------------------------------------------------------

struct JobSpec {
  int64_t p = 0;
  int t = 1;
  bool c_generic = false;  // "generic" resolves to the extension generator of F_{p^2}
  int64_t c_value = 0;     // used when !c_generic; 0 <= c_value < p
  IrrepLabel tau = IrrepLabel::Triv;
  int bound = 0;  // 0 means "pick a default"
  bool filter = true;

  std::string c_string() const {
    return c_generic ? std::string("generic") : std::to_string(c_value);
  }

  // Sort key: (p, t, concrete c before generic, c value, tau).
  friend bool operator<(const JobSpec& a, const JobSpec& b) {
    return std::tuple(a.p, a.t, a.c_generic, a.c_value, static_cast<int>(a.tau)) <
           std::tuple(b.p, b.t, b.c_generic, b.c_value, static_cast<int>(b.tau));
  }
  friend bool operator==(const JobSpec& a, const JobSpec& b) = default;
};

inline void validate_job(const JobSpec& job) {
  if (job.p < 2) throw std::invalid_argument("p must be a prime >= 2");
  {
    int64_t n = job.p;
    for (int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) throw std::invalid_argument("p must be prime");
  }
  if (job.t != 0 && job.t != 1) throw std::invalid_argument("t must be 0 or 1");
  if (!job.c_generic && (job.c_value < 0 || job.c_value >= job.p))
    throw std::invalid_argument("integer c must satisfy 0 <= c < p");
  if (!label_valid(job.tau, job.p))
    throw std::invalid_argument("tau is not irreducible in this characteristic");
}

// Degree bound: explicit override, then the CHEREDNIK_BOUND environment
// variable, then a default comfortably above every table's top degree.
inline int resolve_bound(const JobSpec& job) {
  if (job.bound > 0) return job.bound;
  if (const char* env = std::getenv("CHEREDNIK_BOUND")) {
    int b = std::atoi(env);
    if (b > 0) return b;
  }
  return job.p <= 3 ? 16 : static_cast<int>(8 * job.p + 4);
}

// --- result records -----------------------------------------------------------------

struct GeneratorRecord {
  int degree = 0;
  std::string isotype;
  std::vector<std::string> terms;
  friend bool operator==(const GeneratorRecord&, const GeneratorRecord&) = default;
};

struct ResultRecord {
  JobSpec job;
  int64_t modulus = 0;  // field size actually used (p or p^2)
  std::string status;   // "terminated" | "unterminated" | "mismatch"
  std::string verdict;  // "match" | "mismatch" | "uncovered"
  bool conjectural = false;
  std::vector<int64_t> hilbert;
  std::map<std::string, std::vector<int64_t>> character;
  std::vector<GeneratorRecord> generators;
  std::vector<int64_t> expected_hilbert;  // populated only on mismatch
  double wall_ms = 0;                     // informational; never serialized

  friend bool operator<(const ResultRecord& a, const ResultRecord& b) {
    return a.job < b.job;
  }
};

inline std::string field_element_string(const FieldSpec& F, FieldElement x) {
  if (x.c1 == 0) return std::to_string(x.c0);
  std::ostringstream os;
  os << x.c0 << "+" << x.c1 << "u";
  return os.str();
}

inline std::vector<std::string> serialize_generator_terms(const FieldSpec& F,
                                                          const VermaElement& v) {
  std::vector<std::string> out;
  for (size_t slot = 0; slot < v.comp.size(); ++slot)
    for (const auto& [key, coef] : v.comp[slot].terms()) {
      std::ostringstream os;
      os << field_element_string(F, coef) << "*x1^" << key.first << "*x2^" << key.second
         << "@" << slot;
      out.push_back(os.str());
    }
  return out;
}

inline std::map<std::string, std::vector<int64_t>> character_table(
    const CharacterSeries& chi) {
  std::map<std::string, std::vector<int64_t>> out;
  int top = chi.top_degree();
  for (IrrepLabel l : {IrrepLabel::Triv, IrrepLabel::Sign, IrrepLabel::Stand}) {
    std::vector<int64_t> col(top + 1, 0);
    bool any = false;
    for (int k = 0; k <= top; ++k) {
      col[k] = chi.at(k)[l];
      any = any || col[k] != 0;
    }
    if (any) out[label_name(l)] = col;
  }
  return out;
}

inline ResultRecord run_job(const JobSpec& job) {
  validate_job(job);
  auto start = std::chrono::steady_clock::now();
  ResultRecord rec;
  rec.job = job;
  int ext = (job.c_generic || job.p == 2) ? 2 : 1;
  FieldSpec F = FieldSpec::make(job.p, ext);
  rec.modulus = ext == 2 ? job.p * job.p : job.p;
  FieldElement c = job.c_generic ? F.generic_c() : F.from_int(job.c_value);
  AlgebraParams P = AlgebraParams::make(F, F.from_int(job.t), c, job.tau);
  int bound = resolve_bound(job);
  ModuleState st = build_irreducible(P, bound, job.filter);
  ExpectedResult exp = expected_results(F, P.t, c, job.tau);
  rec.conjectural = exp.covered && exp.conjectural;
  if (!st.terminated()) {
    rec.status = "unterminated";
    rec.verdict = exp.covered ? "mismatch" : "uncovered";
    if (exp.covered) rec.expected_hilbert = exp.hilbert;
  } else {
    rec.hilbert = hilbert(st);
    CharacterSeries chi = character(st);
    rec.character = character_table(chi);
    for (const GeneratorLogEntry& g : st.generator_log())
      rec.generators.push_back(
          {g.degree, g.isotype, serialize_generator_terms(F, g.vec)});
    if (!exp.covered) {
      rec.status = "terminated";
      rec.verdict = "uncovered";
    } else if (rec.hilbert == exp.hilbert && chi.coeffs == exp.chi.coeffs) {
      rec.status = "terminated";
      rec.verdict = "match";
    } else {
      rec.status = "mismatch";
      rec.verdict = "mismatch";
      rec.expected_hilbert = exp.hilbert;
    }
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rec;
}

// Exit-code contract: 0 = all verified, 1 = mismatch, 2 = unterminated,
// 64 = usage. Conjectural rows never gate the exit code.
inline int aggregate_exit_code(const std::vector<ResultRecord>& records) {
  bool mismatch = false, unterminated = false;
  for (const ResultRecord& r : records) {
    if (r.conjectural) continue;
    if (r.verdict == "mismatch" && r.status != "unterminated") mismatch = true;
    if (r.status == "unterminated") unterminated = true;
  }
  if (mismatch) return 1;
  if (unterminated) return 2;
  return 0;
}

// --- table enumeration --------------------------------------------------------------

// p = 2 has ten distinct table cells: at t = 0 only "zero" versus "nonzero" c
// matter (rescaling), at t = 1 the cells are c = 0, c = 1 and generic c.
inline std::vector<JobSpec> jobs_p2() {
  std::vector<JobSpec> out;
  for (IrrepLabel tau : {IrrepLabel::Triv, IrrepLabel::Stand}) {
    for (int64_t cv : {0, 1}) out.push_back({2, 0, false, cv, tau});
    for (int64_t cv : {0, 1}) out.push_back({2, 1, false, cv, tau});
    out.push_back({2, 1, true, 0, tau});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<JobSpec> jobs_p3() {
  std::vector<JobSpec> out;
  for (int t : {0, 1})
    for (int64_t cv : {0, 1, 2})
      for (IrrepLabel tau : {IrrepLabel::Triv, IrrepLabel::Sign})
        out.push_back({3, t, false, cv, tau});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<JobSpec> jobs_generic(const std::vector<int64_t>& ps) {
  std::vector<JobSpec> out;
  for (int64_t p : ps)
    for (IrrepLabel tau : {IrrepLabel::Triv, IrrepLabel::Sign, IrrepLabel::Stand})
      out.push_back({p, 1, true, 0, tau});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<JobSpec> jobs_special(const std::vector<int64_t>& ps) {
  std::vector<JobSpec> out;
  for (int64_t p : ps)
    for (int64_t cv = 0; cv < p; ++cv)
      for (IrrepLabel tau : {IrrepLabel::Triv, IrrepLabel::Sign, IrrepLabel::Stand})
        out.push_back({p, 1, false, cv, tau});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<JobSpec> jobs_conjecture(const std::vector<int64_t>& ps) {
  std::vector<JobSpec> out;
  for (int64_t p : ps)
    for (int64_t cv = 1; cv < p; ++cv)
      if (p < 3 * cv && 3 * cv < 2 * p) out.push_back({p, 1, false, cv, IrrepLabel::Stand});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<JobSpec> jobs_for_tables(const std::string& which,
                                            std::vector<int64_t> ps) {
  if (ps.empty()) ps = {5, 7, 11, 13};
  if (which == "p2") return jobs_p2();
  if (which == "p3") return jobs_p3();
  if (which == "generic") return jobs_generic(ps);
  if (which == "special") return jobs_special(ps);
  if (which == "conjecture") return jobs_conjecture(ps);
  throw std::invalid_argument("unknown table selector: " + which);
}

// --- nonvanishing-sum survey --------------------------------------------------------

struct AssumptionRow {
  int64_t p = 0;
  int64_t c = 0;
  int branch = 0;
  bool holds = false;
  friend bool operator==(const AssumptionRow&, const AssumptionRow&) = default;
};

inline std::vector<AssumptionRow> assumption_survey(int64_t p_max) {
  std::vector<AssumptionRow> out;
  for (int64_t p = 5; p <= p_max; ++p) {
    bool prime = true;
    for (int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    for (int64_t c = 1; 3 * c < p; ++c) {
      AssumptionRecord rec = assumption_check(p, c);
      out.push_back({p, c, rec.branch, rec.holds});
    }
  }
  return out;
}

// --- serialization ------------------------------------------------------------------

inline json record_to_json(const ResultRecord& r) {
  json j;
  j["p"] = r.job.p;
  j["t"] = r.job.t;
  if (r.job.c_generic)
    j["c"] = "generic";
  else
    j["c"] = r.job.c_value;
  j["tau"] = label_name(r.job.tau);
  j["modulus"] = r.modulus;
  j["hilbert"] = r.hilbert;
  j["character"] = json::object();
  for (const auto& [name, col] : r.character) j["character"][name] = col;
  j["generators"] = json::array();
  for (const GeneratorRecord& g : r.generators)
    j["generators"].push_back(
        {{"degree", g.degree}, {"isotype", g.isotype}, {"terms", g.terms}});
  j["status"] = r.status;
  j["verdict"] = r.verdict;
  j["conjectural"] = r.conjectural;
  if (!r.expected_hilbert.empty()) j["expected_hilbert"] = r.expected_hilbert;
  return j;
}

inline ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  r.job.p = j.at("p").get<int64_t>();
  r.job.t = j.at("t").get<int>();
  if (j.at("c").is_string()) {
    r.job.c_generic = true;
  } else {
    r.job.c_generic = false;
    r.job.c_value = j.at("c").get<int64_t>();
  }
  std::string tau = j.at("tau").get<std::string>();
  r.job.tau = tau == "Triv"   ? IrrepLabel::Triv
              : tau == "Sign" ? IrrepLabel::Sign
                              : IrrepLabel::Stand;
  r.modulus = j.at("modulus").get<int64_t>();
  r.hilbert = j.at("hilbert").get<std::vector<int64_t>>();
  for (const auto& [name, col] : j.at("character").items())
    r.character[name] = col.get<std::vector<int64_t>>();
  for (const auto& g : j.at("generators"))
    r.generators.push_back({g.at("degree").get<int>(),
                            g.at("isotype").get<std::string>(),
                            g.at("terms").get<std::vector<std::string>>()});
  r.status = j.at("status").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.conjectural = j.at("conjectural").get<bool>();
  if (j.contains("expected_hilbert"))
    r.expected_hilbert = j.at("expected_hilbert").get<std::vector<int64_t>>();
  return r;
}

inline std::string records_to_json(std::vector<ResultRecord> records) {
  std::sort(records.begin(), records.end());
  json j = json::array();
  for (const ResultRecord& r : records) j.push_back(record_to_json(r));
  return j.dump(2) + "\n";
}

inline std::string join_int64(const std::vector<int64_t>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

inline std::string records_to_csv(std::vector<ResultRecord> records) {
  std::sort(records.begin(), records.end());
  std::ostringstream os;
  os << "p,t,c,tau,status,verdict,conjectural,hilbert\n";
  for (const ResultRecord& r : records)
    os << r.job.p << "," << r.job.t << "," << r.job.c_string() << ","
       << label_name(r.job.tau) << "," << r.status << "," << r.verdict << ","
       << (r.conjectural ? "true" : "false") << ",\"" << join_int64(r.hilbert)
       << "\"\n";
  return os.str();
}

inline std::string assumption_to_json(const std::vector<AssumptionRow>& rows) {
  json j = json::array();
  for (const AssumptionRow& r : rows)
    j.push_back({{"p", r.p}, {"c", r.c}, {"branch", r.branch}, {"holds", r.holds}});
  return j.dump(2) + "\n";
}

inline std::string assumption_to_csv(const std::vector<AssumptionRow>& rows) {
  std::ostringstream os;
  os << "p,c,branch,holds\n";
  for (const AssumptionRow& r : rows)
    os << r.p << "," << r.c << "," << r.branch << "," << (r.holds ? "true" : "false")
       << "\n";
  return os.str();
}

}  // namespace cherednik
