// Command-line front end: generates the denominator sequence of
// E_n(x) - E_n(1), verifies the closed form 2^(v2(n+1) - g(n)) against the
// lcm-of-denominators oracle, prints exact polynomial coefficients, runs the
// classical identity sweeps, and diffs against local OEIS b-files.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eulerdenom/bfile.hpp"
#include "eulerdenom/denominator.hpp"
#include "eulerdenom/euler.hpp"
#include "eulerdenom/sweeps.hpp"

namespace {

using namespace eulerdenom;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitError = 2;

constexpr long kDefaultLimit = 4096;

// Guardrail against accidental multi-hour exact-arithmetic runs.
bool check_limit(long n, long limit) {
  if (n <= limit) return true;
  std::cerr << "error: n = " << n << " exceeds the cap of " << limit
            << "; raise it with --limit if the runtime is intended\n";
  return false;
}

void add_limit_option(CLI::App* cmd, long& limit) {
  cmd->add_option("--limit", limit,
                  "cap on n; runs above it are refused")
      ->capture_default_str();
}

int run_gen(long max_n, long limit, const std::string& format) {
  if (!check_limit(max_n, limit)) return kExitError;
  const SequenceTable table = luschny_sequence(max_n);
  if (format == "tsv") {
    std::cout << "n\tvalue\n";
    for (const auto& [n, value] : table) {
      std::cout << n << '\t' << value << '\n';
    }
  } else {
    write_bfile(table, std::cout);
  }
  return kExitOk;
}

int run_verify(long max_n, long limit, const std::string& report_format,
               const std::string& route_name) {
  if (!check_limit(max_n, limit)) return kExitError;
  const PolyRoute route = route_name == "recurrence" ? PolyRoute::recurrence
                                                     : PolyRoute::explicit_form;
  const VerificationReport report = verify_theorem(max_n, route);

  std::ostringstream summary;
  summary << "checked n = 0.." << report.max_n << " (" << route_name
          << " route): " << report.pass_count << " pass, "
          << report.fail_count << " fail ["
          << std::fixed << std::setprecision(3) << report.elapsed_seconds
          << " s]";

  if (report_format == "tsv") {
    std::cout << "n\tdirect\tclosed\texponent\tstatus\n";
    for (const DenomRecord& rec : report.records) {
      std::cout << rec.n << '\t' << rec.direct << '\t' << rec.closed << '\t'
                << rec.exponent << '\t' << (rec.pass ? "ok" : "FAIL") << '\n';
    }
    std::cerr << summary.str() << '\n';
  } else {
    std::cout << std::setw(8) << "n" << std::setw(16) << "direct"
              << std::setw(16) << "closed" << std::setw(10) << "exponent"
              << std::setw(8) << "status" << '\n';
    for (const DenomRecord& rec : report.records) {
      std::cout << std::setw(8) << rec.n << std::setw(16) << rec.direct
                << std::setw(16) << rec.closed << std::setw(10) << rec.exponent
                << std::setw(8) << (rec.pass ? "ok" : "FAIL") << '\n';
    }
    std::cout << summary.str() << '\n';
  }
  for (const DenomRecord& rec : report.records) {
    if (!rec.pass) {
      std::cerr << "mismatch at n = " << rec.n << "; coefficients:\n"
                << rec.coeff_dump;
    }
  }
  return report.fail_count == 0 ? kExitOk : kExitVerificationFailed;
}

int run_poly(long n, long limit, bool shifted) {
  if (!check_limit(n, limit)) return kExitError;
  const Polynomial p = shifted ? shifted_euler(n) : euler_poly_explicit(n);
  std::cout << format_coefficients(p);
  return kExitOk;
}

int run_identities(long max_n, long limit) {
  if (!check_limit(max_n, limit)) return kExitError;
  const auto results = run_identity_sweeps(max_n);
  std::size_t width = 0;
  for (const SweepResult& r : results) width = std::max(width, r.name.size());
  long total_checks = 0;
  long total_failures = 0;
  std::cout << std::left << std::setw(static_cast<int>(width) + 2)
            << "identity" << std::right << std::setw(18) << "range"
            << std::setw(10) << "checks" << std::setw(10) << "failures"
            << '\n';
  for (const SweepResult& r : results) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << r.name
              << std::right << std::setw(18) << r.range << std::setw(10)
              << r.checks << std::setw(10) << r.failures << '\n';
    total_checks += r.checks;
    total_failures += r.failures;
    if (!r.passed()) {
      std::cerr << "first violation of \"" << r.name << "\": "
                << r.first_failure << '\n';
    }
  }
  std::cout << total_checks << " checks, " << total_failures << " failures\n";
  return total_failures == 0 ? kExitOk : kExitVerificationFailed;
}

int run_compare(const std::string& path, long max_n, long limit) {
  if (!check_limit(max_n, limit)) return kExitError;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return kExitError;
  }
  BFile bfile;
  try {
    bfile = parse_bfile(in);
  } catch (const BFileError& e) {
    std::cerr << "error: " << path << ": " << e.what() << '\n';
    return kExitError;
  }
  const SequenceTable computed = luschny_sequence(max_n);
  const DiffReport diff = compare_sequences(bfile.to_table(), computed);
  if (diff.empty_intersection()) {
    std::cout << "warning: no shared indices between " << path
              << " and the computed range 0.." << max_n << '\n';
    return kExitOk;
  }
  std::cout << "shared range " << diff.lo << ".." << diff.hi << ": "
            << diff.compared << " compared, " << diff.mismatches.size()
            << " mismatches\n";
  for (const SequenceMismatch& m : diff.mismatches) {
    std::cout << "  n = " << m.index << ": b-file " << m.expected
              << ", computed " << m.actual << '\n';
  }
  return diff.agree() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact denominators of the shifted Euler polynomials E_n(x) - E_n(1)"};
  app.require_subcommand(1);

  long limit = kDefaultLimit;

  auto* gen = app.add_subcommand(
      "gen", "print the denominator sequence 2^(v2(n+1) - g(n))");
  long gen_max_n = 0;
  std::string gen_format = "bfile";
  gen->add_option("--max-n", gen_max_n, "largest index n")->required();
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"bfile", "tsv"}))
      ->capture_default_str();
  add_limit_option(gen, limit);

  auto* verify = app.add_subcommand(
      "verify", "check the closed form against the lcm-of-denominators oracle");
  long verify_max_n = 0;
  std::string verify_report = "text";
  std::string verify_route = "explicit";
  verify->add_option("--max-n", verify_max_n, "largest index n")->required();
  verify->add_option("--report", verify_report, "report format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();
  verify->add_option("--route", verify_route,
                     "how the polynomials are constructed")
      ->check(CLI::IsMember({"explicit", "recurrence"}))
      ->capture_default_str();
  add_limit_option(verify, limit);

  auto* poly = app.add_subcommand(
      "poly", "print exact coefficients of E_n or E*_n, ascending power");
  long poly_n = 0;
  bool poly_shifted = false;
  poly->add_option("--n", poly_n, "polynomial index")->required();
  poly->add_flag("--shifted", poly_shifted, "print E*_n = E_n(x) - E_n(1)");
  add_limit_option(poly, limit);

  auto* identities = app.add_subcommand(
      "identities", "run the classical identity and theorem-ingredient sweeps");
  long identities_max_n = 0;
  identities->add_option("--max-n", identities_max_n, "largest index n")
      ->required();
  add_limit_option(identities, limit);

  auto* compare = app.add_subcommand(
      "compare", "diff the computed sequence against a local OEIS b-file");
  std::string compare_path;
  long compare_max_n = 0;
  compare->add_option("--bfile", compare_path, "path to a b-file")->required();
  compare->add_option("--max-n", compare_max_n, "largest index n")->required();
  add_limit_option(compare, limit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_max_n, limit, gen_format);
    if (verify->parsed())
      return run_verify(verify_max_n, limit, verify_report, verify_route);
    if (poly->parsed()) return run_poly(poly_n, limit, poly_shifted);
    if (identities->parsed()) return run_identities(identities_max_n, limit);
    if (compare->parsed()) return run_compare(compare_path, compare_max_n, limit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
