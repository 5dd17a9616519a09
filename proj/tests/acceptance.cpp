// Acceptance gate: each criterion below is pinned to exact parameters and
// prints exactly one PASS/FAIL line; the binary exits 1 if any criterion
// fails. Criteria with a stated wall-clock budget fail when they exceed it.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hallp1/verify.hpp"

using namespace hallp1;
using verify::CheckResult;

namespace {

int g_failures = 0;

std::string first_failure(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        if (!c.pass) {
            std::string d = c.name + ": " + c.detail;
            if (d.size() > 220) d = d.substr(0, 220) + "...";
            return d;
        }
    }
    return "";
}

void run_criterion(int number, const std::string& title, double limit_sec,
                   const std::function<std::vector<CheckResult>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> checks;
    std::string error;
    try {
        checks = body();
    } catch (const std::exception& e) {
        error = std::string("exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = error.empty();
    std::string detail;
    if (!ok) {
        detail = error;
    } else {
        int failed = 0;
        for (const auto& c : checks)
            if (!c.pass) ++failed;
        if (failed > 0) {
            ok = false;
            detail = std::to_string(failed) + "/" + std::to_string(checks.size()) +
                     " checks failed; first: " + first_failure(checks);
        } else {
            detail = title + " (" + std::to_string(checks.size()) + " checks)";
        }
    }
    if (ok && limit_sec > 0 && sec >= limit_sec) {
        ok = false;
        detail = title + " exceeded the " + std::to_string(static_cast<int>(limit_sec)) +
                 "s budget";
    }
    if (!ok) ++g_failures;
    std::printf("criterion %2d: %s - %s (%.1fs)\n", number, ok ? "PASS" : "FAIL",
                detail.c_str(), sec);
    std::fflush(stdout);
}

std::vector<ClosedPoint> small_points(long q) { return closed_points_up_to(q, 2); }

}  // namespace

int main() {
    run_criterion(1, "extension-count oracle vs closed form, q in {2,3}, a+b <= 5", 10.0, [] {
        return std::vector<CheckResult>{verify::check_phi_oracle(2, 5),
                                        verify::check_phi_oracle(3, 5)};
    });

    run_criterion(2, "quadruple-count oracle vs closed form", 60.0, [] {
        return std::vector<CheckResult>{
            verify::check_quadruple_oracle(2, 2, 1), verify::check_quadruple_oracle(2, 3, 1),
            verify::check_quadruple_oracle(2, 3, 2), verify::check_quadruple_oracle(3, 2, 1)};
    });

    run_criterion(3, "line-pair product coefficients vs extension oracle, q = 2, spread <= 4",
                  0.0, [] { return std::vector<CheckResult>{verify::check_ext_oracle(2, 4)}; });

    run_criterion(4, "local hall numbers vs submodule census, q in {2,3}, weight <= 4", 300.0,
                  [] {
                      return std::vector<CheckResult>{verify::check_hall_oracle(2, 4),
                                                      verify::check_hall_oracle(3, 4)};
                  });

    run_criterion(5, "automorphism orders vs oracle, plus series aut-coefficient", 0.0, [] {
        std::vector<CheckResult> out{verify::check_aut_oracle(2, 3),
                                     verify::check_aut_oracle(3, 3)};
        for (long q : {2L, 3L})
            for (const ClosedPoint& x : small_points(q))
                out.push_back(verify::check_aut_coefficient(x, 4));
        return out;
    });

    run_criterion(6, "local/global series identities and point-count series, q in {2,3}", 0.0,
                  [] {
                      std::vector<CheckResult> out;
                      for (long q : {2L, 3L}) {
                          for (const ClosedPoint& x : small_points(q))
                              out.push_back(
                                  verify::check_series_local_point(x, 4 * x.degree()));
                          out.push_back(verify::check_series_global(q, 6));
                          out.push_back(verify::check_recursions_vs_series(q, 6));
                          out.push_back(verify::check_zeta(q, 8));
                      }
                      return out;
                  });

    run_criterion(7, "straightening: idempotence, associativity, quadratic residues, q in {2,3}",
                  0.0, [] {
                      std::vector<CheckResult> out;
                      for (long q : {2L, 3L}) {
                          out.push_back(verify::check_pbw_idempotence(q, 4, 4));
                          out.push_back(verify::check_loop_idempotence(q, 4, 4));
                          out.push_back(verify::check_associativity_sheaf(q));
                          out.push_back(verify::check_associativity_loop(q));
                          out.push_back(verify::check_relation_sheaf_quadratic(q, 2));
                          out.push_back(verify::check_relation_loop_quadratic(q, 2));
                      }
                      return out;
                  });

    run_criterion(8, "basis match between the two straightening engines to degree 6, q in {2,3}",
                  300.0, [] {
                      return std::vector<CheckResult>{verify::check_iso(2, 6),
                                                      verify::check_iso(3, 6)};
                  });

    run_criterion(9, "weighted-count identities and coproduct multiplicativity", 0.0, [] {
        std::vector<CheckResult> out;
        for (long q : {2L, 3L}) {
            out.push_back(verify::check_weighted_count_bundles(q, 4));
            out.push_back(verify::check_weighted_count_torsion(q, 2));
            out.push_back(verify::check_weighted_count_integrality(q, 4));
            out.push_back(verify::check_count_symmetry_mod(q, 4));
        }
        out.push_back(verify::check_coproduct_multiplicative(2, 2));
        return out;
    });

    run_criterion(10, "coproduct grouplike on local series, q = 2, order 4", 0.0, [] {
        std::vector<CheckResult> out;
        std::vector<ClosedPoint> pts = small_points(2);
        out.push_back(verify::check_coproduct_grouplike(pts.front(), 4));
        for (const ClosedPoint& x : pts)
            if (x.degree() == 2) {
                out.push_back(verify::check_coproduct_grouplike(x, 4));
                break;
            }
        return out;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
