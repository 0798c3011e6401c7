#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3tau {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // violated identity and inputs
  std::vector<std::string> notes;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

// Individual checks. Each covers every applicable d (or D) in its range.

/// u^2 = 1, Gram preservation and disc multiplier d/3 - 1 for tau_extended d <= d_max.
SuiteResult check_u_family(std::int64_t d_max);
/// (v,v) = 0, (v,L^tau) = 0, (L^tau)^2 = d, v primitive, a fine moduli witness, for tau_extended d <= d_max.
SuiteResult check_mukai_identities(std::int64_t d_max);
/// build_gtilde, certificate recheck, and the partner orbit of (1, L, d/2).
SuiteResult check_glued(const std::vector<std::int64_t>& ds);
/// verify_tau on K_d^perp inside the cubic lattice.
SuiteResult check_disc_action(const std::vector<std::int64_t>& ds);
/// The three candidate multipliers: only d/3 - 1 survives, and it is the induced one.
SuiteResult check_multiplier_exclusion(const std::vector<std::int64_t>& ds);
/// pell_solve (both methods) against pell_brute_force for nonsquare D <= d_max, 0 < |N| <= n_max.
SuiteResult check_pell_oracle(std::int64_t d_max, std::int64_t n_max, std::int64_t y_bound);
/// pell_fundamental minimality, solve_affine against affine_brute_force, the empty +1 branch.
SuiteResult check_pell_auxiliary();
/// threestar(d) iff 3p^2 - (d/6)q^2 = -1 has a solution with p odd and q even.
SuiteResult check_threestar_equivalence(std::int64_t d_max);
/// hilb2_unique_model for 3 | d, and the d = 62 wall candidate.
SuiteResult check_unique_model(std::int64_t d_max);
/// hilb_birational(d, 2) iff a square 6 class aL + b delta with 3 | b exists.
SuiteResult check_square_six(std::int64_t d_max);
/// threestar implies twostar; tau_strict implies d/6 = 1 mod 3.
SuiteResult check_condition_implications(std::int64_t d_max);
SuiteResult check_special_case(const std::string& kind, std::int64_t d_from, std::int64_t d_to);

struct SuiteOptions {
  std::int64_t d_max = 10002;
  std::optional<std::vector<std::int64_t>> d_list;
};

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite name.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& options);

/// tau_extended d in [lo, hi].
std::vector<std::int64_t> tau_extended_range(std::int64_t lo, std::int64_t hi);

}  // namespace k3tau
