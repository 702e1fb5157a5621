// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any fails.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "superds/error.hpp"
#include "superds/suites.hpp"

using namespace superds;

namespace {

struct Line {
  bool ok;
  std::string detail;
  double seconds;
};

Line combine(const std::vector<SuiteResult>& rs) {
  Line l{true, "", 0};
  for (const auto& r : rs) {
    l.seconds += r.seconds;
    if (!r.ok && l.ok) {
      l.ok = false;
      l.detail = r.name + ": " + r.detail;
    }
  }
  if (l.ok) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rs.size(); ++i) os << (i ? "; " : "") << rs[i].name << " " << rs[i].detail;
    l.detail = os.str();
  }
  return l;
}

Line timed(std::vector<SuiteResult> rs, double limit) {
  Line l = combine(rs);
  if (l.ok && l.seconds > limit) {
    l.ok = false;
    std::ostringstream os;
    os << "runtime " << l.seconds << " s exceeds " << limit << " s";
    l.detail = os.str();
  }
  return l;
}

std::string fixture_dir() {
  const char* env = std::getenv("SUPERDS_FIXTURES");
  return env && *env ? env : SUPERDS_FIXTURE_DIR;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  bool heavy = false;
  std::vector<int> only;
  app.add_flag("--heavy", heavy, "extend criterion 6 beyond depth 2");
  app.add_option("--criterion", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Line()>>> criteria{
      {"DS reduction table, m,n <= 5", [] { return timed({suite_ds_table(5)}, 5); }},
      {"h^v and |rho|^2 invariant under reduction", [] { return timed({suite_invariants(5)}, 5); }},
      {"P_S(R) = P_S(R-dot) = P_S(R-bar), depth 6", [] { return timed({suite_ps_denominators(4, 6, 8)}, 60); }},
      {"appendix_pair bases satisfy (P1)-(P3), m,n <= 5", [] { return timed({suite_appendix(5)}, 30); }},
      {"sl(2|1), k = 0,1,2: DS(L(k Lambda0)) = (1|0) through depth 3",
       [] { return timed({suite_thmABC("A(1|0)", {Rational(0), Rational(1), Rational(2)}, 3)}, 600); }},
      {"sl(3|1), k = 1,2: restricted sch L(k Lambda0) = Weyl-Kac of sl(2), depth 2",
       [heavy] {
         std::vector<SuiteResult> rs{suite_thmABC("A(2|0)", {Rational(1), Rational(2)}, 2)};
         if (heavy) rs.push_back(suite_thmABC("A(2|0)", {Rational(1), Rational(2)}, 4));
         return timed(rs, 1800);
       }},
      {"sl(2|1), k = -1/2: (II) at depth 3, P_S(e^{-r0'.k Lambda0} ch I(k)) = 1, dim I(k) at r0'.k Lambda0 = 1",
       [] { return timed({suite_admissible("A(1|0)", Rational(-1, 2), 3)}, 900); }},
      {"sl(1|2), k = -1: DS(L(-Lambda0)) not one-dimensional, fixture reproduced",
       [] { return timed({suite_sl12(3, fixture_dir() + "/sl12_critical_ds.json")}, 600); }},
      {"lemtt2_check finds no admissible k Lambda0 - nu: A1, C2, denominators <= 6, depth 4", [] { return timed({suite_lemtt2({"A1", "C2"}, 6, 12, 4)}, 60); }},
      {"property suites, 1000 cases each",
       [] {
         return timed({suite_ring_laws(1000), suite_ps_homomorphism(1000), suite_euler_restriction(1000),
                       suite_reflection_invariance(1000), suite_gram_ordering(1000)},
                      120);
       }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), n) == only.end()) continue;
    Line l;
    try {
      l = criteria[i].second();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what(), 0};
    }
    if (!l.ok) ++failed;
    std::cout << (l.ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << n << ": " << criteria[i].first << " ["
              << std::fixed << std::setprecision(2) << l.seconds << " s] " << l.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
