// Acceptance criteria 1-11. Prints one line per criterion.
// Usage: acceptance [--expect-fail 9,11]   exit 0 iff the failing set is exactly the expected one.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "k3tau/conditions.hpp"
#include "k3tau/hilbert.hpp"
#include "k3tau/pell.hpp"
#include "k3tau/suites.hpp"
#include "k3tau/tau.hpp"

using namespace k3tau;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> extra;
};

struct Criterion {
  int id;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

std::string join(const std::vector<std::string>& xs, std::size_t max = 8) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < max; ++i) out += (i ? "; " : "") + xs[i];
  if (xs.size() > max) out += "; ... (" + std::to_string(xs.size() - max) + " more)";
  return out;
}

Outcome from_suite(const SuiteResult& r) {
  Outcome o;
  o.pass = r.ok();
  o.detail = "checked=" + std::to_string(r.checked) + " failures=" + std::to_string(r.failures.size());
  if (!r.ok()) o.extra.push_back(join(r.failures));
  return o;
}

Outcome c1() {
  Outcome o;
  const MukaiVector v = mukai_vector_of_tau(78);
  const HilbVerdict h = hilb_birational(78, 2);
  o.pass = tau_strict(78) && v == MukaiVector{3, 1, 13, 78} && h.birational && h.equation == "F" && h.p == 2 &&
           h.q == 1;
  o.detail = "d=78 tau_strict=" + std::string(tau_strict(78) ? "yes" : "no") + " v=" + to_string(v) +
             " F (p, q)=(" + to_string(h.p) + ", " + to_string(h.q) + ")";
  return o;
}

Outcome c2() {
  Outcome o;
  const DClassification c = classify_d(438);
  const HilbVerdict h = hilb_birational(438, 2);
  // F for d = 438 is 3p^2 - 73q^2 = -1, i.e. x^2 - 219 q^2 = -3 with x = 3p
  const PellWitness w = pell_solve(219, -3);
  const auto brute = pell_brute_force(219, -3, 10000);
  const AffineWitness f = solve_affine(3, 73, -1);
  const auto fbrute = affine_brute_force(3, 73, -1, {}, 10000);
  o.pass = c.twostar && !c.threestar.holds && !h.birational && !w.solvable && !brute && !f.solvable && !fbrute;
  o.detail = "d=438 twostar=" + std::string(c.twostar ? "yes" : "no") +
             " threestar=" + (c.threestar.holds ? "yes" : "no") + " hilb2=" + (h.birational ? "yes" : "no") +
             " solver=" + (w.solvable ? "solvable" : "unsolvable") + " brute force y<=10^4 " +
             (brute ? "found a solution" : "exhausted");
  return o;
}

Outcome c3() {
  Outcome o;
  const HilbVerdict h = hilb_birational(42, 3);
  o.pass = h.birational && h.equation == "F1" && h.p == 1 && h.q == 1;
  o.detail = "d=42 n=3 via " + h.equation + " (p, q)=(" + to_string(h.p) + ", " + to_string(h.q) + ")";
  return o;
}

Outcome c5() {
  Outcome o = from_suite(check_disc_action({42, 78, 114, 438}));
  std::vector<std::string> mults;
  for (long d : {42, 78, 114, 438}) {
    const TauReport r = verify_tau(d);
    if (r.complement_rank != 21 || r.complement_invariants != std::vector<Integer>{d}) o.pass = false;
    mults.push_back("d=" + std::to_string(d) + " alpha=" + to_string(r.multiplier));
  }
  o.detail += " " + join(mults);
  return o;
}

Outcome c7() { return from_suite(check_pell_oracle(200, 50, 10000)); }

Outcome c8() { return from_suite(check_threestar_equivalence(5000)); }

Outcome c9() {
  Outcome o;
  const ScanReport r = special_case_checks(1, 3000, SpecialCase::N5Equiv);
  o.pass = r.ok();
  o.detail = "checked=" + std::to_string(r.checked) + " disagreements=" + std::to_string(r.counterexamples.size());
  if (r.ok()) return o;
  std::size_t mod8 = 0;
  for (const auto& c : r.counterexamples)
    if ((std::stoll(c.substr(2)) / 6) % 8 == 4) ++mod8;
  o.extra.push_back(join(r.counterexamples, 20));
  o.extra.push_back(std::to_string(mod8) + " of " + std::to_string(r.counterexamples.size()) +
                    " have d/6 = 4 mod 8. There F forces p, q odd, so 12p^2 - (d/6)q^2 = -1 fails mod 2 and "
                    "3p^2 - 4(d/6)q^2 = -1 fails mod 16; the n = 5 reduction needs d/6 odd.");
  return o;
}

Outcome c10() {
  Outcome o;
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (std::int64_t d = 12; d <= 10002; d += 6, ++checked) {
    const UniqueModelReport r = hilb2_unique_model(d);
    if (!(r.conclusive && r.unique && r.candidates.empty() && r.certificate.rfind("mod 3", 0) == 0))
      bad.push_back("d=" + std::to_string(d));
  }
  const UniqueModelReport r62 = hilb2_unique_model(62);
  const bool found =
      std::find(r62.candidates.begin(), r62.candidates.end(), NSClass{1, 6, 62}) != r62.candidates.end();
  o.pass = bad.empty() && found && !r62.conclusive;
  o.detail = "3 | d: " + std::to_string(checked) + " degrees, " + std::to_string(bad.size()) +
             " without certificate; d=62: " + (found ? "(1, 6) reported" : "(1, 6) missing");
  if (!bad.empty()) o.extra.push_back(join(bad));
  return o;
}

Outcome c11() {
  Outcome o;
  o.pass = true;
  std::vector<std::string> parts;
  for (long d : {42, 78}) {
    const MultiplierAnalysis a = analyze_multipliers(d);
    const Integer minus_one = d - 1, mid = d / 3 - 1, high = 2 * d / 3 - 1;
    for (const auto& c : a.candidates) {
      std::string verdict;
      if (c.alpha == minus_one) {
        // the case analysis rules out -1 by (alpha + 1)(s, t) = 0 != (2s, 0); q(-x) = q(x) always
        if (c.order_three || c.admissible()) o.pass = false;
        verdict = std::string("excluded by the order 3 check, q ") + (c.preserves_q ? "preserved" : "not preserved");
      } else if (c.alpha == high) {
        if (c.preserves_q || c.admissible()) o.pass = false;
        verdict = std::string("q ") + (c.preserves_q ? "preserved" : "not preserved");
      } else if (c.alpha == mid) {
        if (!c.admissible()) o.pass = false;
        verdict = c.admissible() ? "admissible" : "rejected";
      }
      parts.push_back("d=" + std::to_string(d) + " alpha=" + to_string(c.alpha) + " " + verdict);
    }
    if (a.induced != mid) o.pass = false;
  }
  o.detail = join(parts);
  return o;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected = parse_list(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--expect-fail N,M,...]\n");
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, 1, c1},
      {2, 1, c2},
      {3, 1, c3},
      {4, 60, [] { return from_suite(check_u_family(10002)); }},
      {5, 30, c5},
      {6, 0, [] { return from_suite(check_mukai_identities(10002)); }},
      {7, 0, c7},
      {8, 0, c8},
      {9, 0, c9},
      {10, 0, c10},
      {11, 0, c11},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    if (!o.pass) failed.insert(c.id);
    std::printf("criterion %d: %s %.2fs %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    for (const auto& e : o.extra) std::printf("    %s\n", e.c_str());
    std::fflush(stdout);
  }

  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
  if (!expected.empty()) {
    const bool match = failed == expected;
    std::printf("expected failures %s\n", match ? "match" : "do not match");
    return match ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
