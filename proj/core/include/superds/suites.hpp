#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superds/serialize.hpp"

namespace superds {

/// Outcome of one verification suite; `detail` names the first offending case when !ok.
struct SuiteResult {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
  Json data = Json::object();
};

Json to_json(const SuiteResult& r);

/// Family-table label expected for |S| = r (A/B/D in super notation, ZERO/GL1, C(n) -> C_{n-2}, ...).
std::string expected_ds_label(Family family, int m, int n, int r);

/// Every family with m, n <= max_mn and every r <= defect: ds_reduce succeeds and matches the table.
SuiteResult suite_ds_table(int max_mn = 5);
/// h^v and ||rho||^2 agree with the reduced algebra whenever the reduced root system is nonempty.
SuiteResult suite_invariants(int max_mn = 5);
/// P_S(R) = P_S(R-dot) = P_S(R-bar) on appendix_pair data, n > m, at an integral and a fractional level.
SuiteResult suite_ps_denominators(int max_mn = 4, int depth = 6, int height = 8);
/// (P1)-(P3) for appendix_pair of B(m|n), D(m|n), n > m.
SuiteResult suite_appendix(int max_mn = 5);

/// DS_x(L(k Lambda0)) at the given levels: total (1|0) when the reduced algebra is degenerate, otherwise
/// the restricted supercharacter equals the Weyl-Kac character of the reduced algebra at level k.
/// S defaults to the first isotropic root of the distinguished base.
SuiteResult suite_thmABC(const std::string& algebra, const std::vector<Rational>& levels, int depth,
                         const std::vector<Weight>& S = {});
/// (II) against the oracle integrable side, verify_PSIk, and dim I(k) at r0'.k Lambda0.
SuiteResult suite_admissible(const std::string& algebra, const Rational& k, int depth,
                             const std::vector<Weight>& S = {});
/// DS_x(L(-Lambda0)) of sl(1|2) at the critical level; compared with the fixture when given.
SuiteResult suite_sl12(int depth = 3, const std::optional<std::string>& fixture = std::nullopt);
/// The table computed by suite_sl12 (exposed for fixture regeneration).
GradedTable sl12_table(int depth = 3);
/// lemtt2_check at every principal admissible level with denominator <= max_den, |numerator| <= max_num.
SuiteResult suite_lemtt2(const std::vector<std::string>& algebras, long max_den = 6, long max_num = 12, int depth = 4);

/// Randomised property suites (fixed seed), `cases` each.
SuiteResult suite_ring_laws(int cases = 1000, unsigned seed = 1);
SuiteResult suite_ps_homomorphism(int cases = 1000, unsigned seed = 2);
SuiteResult suite_euler_restriction(int cases = 1000, unsigned seed = 3);
SuiteResult suite_reflection_invariance(int cases = 1000, unsigned seed = 4);
SuiteResult suite_gram_ordering(int cases = 1000, unsigned seed = 5);

}  // namespace superds
