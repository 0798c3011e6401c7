#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "k3tau/report.hpp"
#include "k3tau/suites.hpp"

using namespace k3tau;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::vector<std::int64_t> n_list(const std::vector<std::int64_t>& ns) {
  for (std::int64_t n : ns)
    if (n < 2) throw std::invalid_argument("n must be at least 2");
  return ns;
}

int run_check(std::int64_t d, const std::vector<std::int64_t>& ns, const std::string& format,
              const std::string& certify) {
  RecordOptions opt;
  opt.ns = n_list(ns);
  opt.construct = true;
  if (!certify.empty()) opt.certify_dir = certify;
  const Format f = parse_format(format);
  std::cout << render_check(make_record(d, opt), f);
  return kOk;
}

int run_scan(std::int64_t from, std::int64_t to, const std::vector<std::int64_t>& ns, const std::string& only,
             const std::string& format, const std::string& certify) {
  RecordOptions opt;
  opt.ns = n_list(ns);
  if (!certify.empty()) opt.certify_dir = certify;
  const Format f = parse_format(format);
  require_filter(only);
  std::cout << render_scan(scan(from, to, only, opt), opt.ns, f);
  return kOk;
}

int run_verify(const std::string& suite, std::int64_t d_max, const std::vector<std::int64_t>& d_list) {
  SuiteOptions opt;
  opt.d_max = d_max;
  if (!d_list.empty()) opt.d_list = d_list;
  const auto results = run_suite(suite, opt);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok();
    std::printf("%s %-24s checked=%zu failures=%zu %.2fs\n", r.ok() ? "PASS" : "FAIL", r.name.c_str(), r.checked,
                r.failures.size(), r.seconds);
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
    for (const auto& f : r.failures) std::cout << "  FAILED " << f << "\n";
  }
  std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
  return ok ? kOk : kFailed;
}

int run_pell(const std::vector<std::string>& dn, const std::vector<std::string>& affine, const std::string& constraint,
             const std::string& format) {
  const Format f = parse_format(format);
  if (f == Format::Csv) throw std::invalid_argument("pell supports table and json output");
  if (!affine.empty()) {
    if (affine.size() != 3) throw std::invalid_argument("--affine needs a b c");
    const Integer a(affine[0]), b(affine[1]), c(affine[2]);
    const AffineConstraints cons = AffineConstraints::parse(constraint);
    const AffineWitness w = solve_affine_any(a, b, c, cons);
    if (f == Format::Json) {
      std::cout << dump(affine_json(w));
    } else {
      std::cout << to_string(a) << "P^2 - " << to_string(b) << "Q^2 = " << to_string(c);
      if (!cons.describe().empty()) std::cout << " [" << cons.describe() << "]";
      if (w.solvable)
        std::cout << ": (P, Q) = (" << to_string(w.p) << ", " << to_string(w.q) << ")";
      else
        std::cout << ": no solution";
      std::cout << " via " << w.method << "\n";
    }
    return kOk;
  }
  if (!constraint.empty()) throw std::invalid_argument("--constraint needs --affine");
  if (dn.size() != 2) throw std::invalid_argument("pell needs D and N");
  const Integer D(dn[0]), N(dn[1]);
  const PellWitness w = pell_solve(D, N);
  if (f == Format::Json) {
    std::cout << dump(pell_json(w));
  } else {
    std::cout << "x^2 - " << to_string(D) << "y^2 = " << to_string(N);
    if (w.solvable)
      std::cout << ": (x, y) = (" << to_string(w.x) << ", " << to_string(w.y) << ")";
    else
      std::cout << ": no solution";
    std::cout << " via " << w.method << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hassett's involution tau on degree d K3 surfaces: lattices, Mukai vectors and Pell criteria"};
  app.require_subcommand(1);

  std::vector<std::int64_t> ns{2};
  std::string format = "table";
  std::string certify;

  std::int64_t d = 0;
  auto* check = app.add_subcommand("check", "Report on a single degree d");
  check->add_option("d", d, "Polarization degree")->required();
  check->add_option("--n", ns, "Comma-separated n for Hilb^n")->delimiter(',');
  check->add_option("--format", format, "table, json or csv");
  check->add_option("--certify", certify, "Write the involution certificate to this directory");

  std::int64_t from = 0, to = 0;
  std::string only = "all";
  auto* scan_cmd = app.add_subcommand("scan", "Report on every even d in a range");
  scan_cmd->add_option("from", from, "First degree")->required();
  scan_cmd->add_option("to", to, "Last degree")->required();
  scan_cmd->add_option("--n", ns, "Comma-separated n for Hilb^n")->delimiter(',');
  scan_cmd->add_option("--only", only, "all, star, twostar, threestar, tau_strict, tau_extended");
  scan_cmd->add_option("--format", format, "table, json or csv");
  scan_cmd->add_option("--certify", certify, "Write involution certificates to this directory");

  std::string suite;
  std::int64_t d_max = 10002;
  std::vector<std::int64_t> d_list;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "involution, disc-action, pell-oracle, special-cases or all")->required();
  verify->add_option("--d-max", d_max, "Largest degree for range checks");
  verify->add_option("--d-list", d_list, "Comma-separated degrees")->delimiter(',');

  std::vector<std::string> dn;
  std::vector<std::string> affine;
  std::string constraint;
  auto* pell = app.add_subcommand("pell", "Solve x^2 - D y^2 = N, or a P^2 - b Q^2 = c with --affine");
  pell->add_option("DN", dn, "D and N")->expected(0, 2);
  pell->add_option("--affine", affine, "a b c")->expected(3);
  pell->add_option("--constraint", constraint, "Comma list of p-odd, p-even, q-odd, q-even, x-div3");
  pell->add_option("--format", format, "table or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(d, ns, format, certify);
    if (*scan_cmd) return run_scan(from, to, ns, only, format, certify);
    if (*verify) return run_verify(suite, d_max, d_list);
    if (*pell) return run_pell(dn, affine, constraint, format);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
