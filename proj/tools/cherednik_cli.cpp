// Command-line driver: builds irreducible lowest-weight modules, verifies them
// against the reference tables, surveys the nonvanishing sums, and exports
// machine-readable results.
//
// Exit codes: 0 = all verified, 1 = mismatch, 2 = unterminated, 64 = usage.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cherednik/report.hpp"

namespace {

using namespace cherednik;

constexpr int kUsageError = 64;

void write_export(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << text;
}

void export_records(const std::vector<ResultRecord>& records, const std::string& format,
                    const std::string& out_path) {
  if (format.empty()) return;
  write_export(format == "csv" ? records_to_csv(records) : records_to_json(records),
               out_path);
}

void print_record_line(const ResultRecord& r) {
  std::cerr << "p=" << r.job.p << " t=" << r.job.t << " c=" << r.job.c_string()
            << " tau=" << label_name(r.job.tau) << " status=" << r.status
            << " verdict=" << r.verdict << (r.conjectural ? " (conjectural)" : "")
            << " hilbert=[" << join_int64(r.hilbert) << "]" << " ("
            << static_cast<int64_t>(r.wall_ms) << " ms)\n";
}

int run_jobs(std::vector<JobSpec> jobs, const std::string& format,
             const std::string& out_path, bool announce_cells) {
  std::vector<ResultRecord> records;
  records.reserve(jobs.size());
  for (const JobSpec& job : jobs) {
    records.push_back(run_job(job));
    print_record_line(records.back());
  }
  export_records(records, format, out_path);
  if (announce_cells) {
    int64_t match = 0, conjectural_match = 0, mismatch = 0, unterminated = 0;
    for (const ResultRecord& r : records) {
      if (r.status == "unterminated") ++unterminated;
      else if (r.verdict != "match") ++mismatch;
      else if (r.conjectural) ++conjectural_match;
      else ++match;
    }
    std::cout << match << "/" << (records.size() - conjectural_match)
              << " table cells match";
    if (conjectural_match) std::cout << "; " << conjectural_match << " conjectural rows match";
    if (mismatch) std::cout << "; " << mismatch << " MISMATCH";
    if (unterminated) std::cout << "; " << unterminated << " unterminated";
    std::cout << "\n";
  }
  return aggregate_exit_code(records);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lowest-weight modules of the rank-two rational Cherednik algebra "
               "of the symmetric group on three letters, over finite fields"};
  app.require_subcommand(1);

  std::string format, out_path;
  int bound = 0;

  // --- build ---
  auto* build = app.add_subcommand("build", "Build one module and compare with tables");
  int64_t b_p = 0;
  int b_t = 1;
  std::string b_c = "generic", b_tau = "triv";
  bool b_nofilter = false;
  build->add_option("--p", b_p, "characteristic (prime)")->required();
  build->add_option("--t", b_t, "t parameter (0 or 1)");
  build->add_option("--c", b_c, "c parameter: zero | generic | integer");
  build->add_option("--tau", b_tau, "lowest weight: triv | sign | stand");
  build->add_option("--bound", bound, "degree bound override");
  build->add_flag("--no-filter", b_nofilter, "disable the degree filter");
  build->add_option("--format", format, "export format: json | csv");
  build->add_option("--out", out_path, "export file path (default stdout)");

  // --- verify-tables / check-conjecture ---
  auto* verify = app.add_subcommand("verify-tables", "Re-derive whole reference tables");
  std::string which;
  std::vector<int64_t> ps;
  verify->add_option("--which", which, "p2 | p3 | generic | special | conjecture")
      ->required()
      ->check(CLI::IsMember({"p2", "p3", "generic", "special", "conjecture"}));
  verify->add_option("--p", ps, "primes to cover (default 5 7 11 13)");
  verify->add_option("--bound", bound, "degree bound override");
  verify->add_option("--format", format, "export format: json | csv");
  verify->add_option("--out", out_path, "export file path (default stdout)");

  auto* conj = app.add_subcommand("check-conjecture",
                                  "Shorthand for verify-tables --which conjecture");
  conj->add_option("--p", ps, "primes to cover (default 5 7 11 13)");
  conj->add_option("--bound", bound, "degree bound override");
  conj->add_option("--format", format, "export format: json | csv");
  conj->add_option("--out", out_path, "export file path (default stdout)");

  // --- check-assumption ---
  auto* assume = app.add_subcommand("check-assumption",
                                    "Evaluate the nonvanishing sums for all p <= p-max");
  int64_t p_max = 0;
  assume->add_option("--p-max", p_max, "largest prime to test")->required();
  assume->add_option("--format", format, "export format: json | csv");
  assume->add_option("--out", out_path, "export file path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (build->parsed()) {
      JobSpec job;
      job.p = b_p;
      job.t = b_t;
      job.bound = bound;
      job.filter = !b_nofilter;
      if (b_c == "generic") {
        job.c_generic = true;
      } else if (b_c == "zero") {
        job.c_value = 0;
      } else {
        size_t pos = 0;
        job.c_value = std::stoll(b_c, &pos);
        if (pos != b_c.size()) throw std::invalid_argument("bad c value: " + b_c);
      }
      if (b_tau == "triv") job.tau = IrrepLabel::Triv;
      else if (b_tau == "sign") job.tau = IrrepLabel::Sign;
      else if (b_tau == "stand") job.tau = IrrepLabel::Stand;
      else throw std::invalid_argument("bad tau value: " + b_tau);
      return run_jobs({job}, format, out_path, false);
    }
    if (verify->parsed() || conj->parsed()) {
      if (conj->parsed()) which = "conjecture";
      std::vector<JobSpec> jobs = jobs_for_tables(which, ps);
      for (JobSpec& j : jobs) j.bound = bound;
      return run_jobs(std::move(jobs), format, out_path, true);
    }
    if (assume->parsed()) {
      std::vector<AssumptionRow> rows = assumption_survey(p_max);
      int64_t fails = 0;
      for (const AssumptionRow& r : rows) {
        std::cerr << "p=" << r.p << " c=" << r.c << " branch=" << r.branch
                  << " holds=" << (r.holds ? "true" : "false") << "\n";
        if (!r.holds) ++fails;
      }
      if (!format.empty())
        write_export(format == "csv" ? assumption_to_csv(rows) : assumption_to_json(rows),
                     out_path);
      std::cout << rows.size() << " cases, " << fails << " failures\n";
      return fails ? 1 : 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return kUsageError;
}
