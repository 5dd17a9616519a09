#pragma once

#include <string>
#include <vector>

#include "hallp1/fqpoly.hpp"

namespace hallp1::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const;
    int failed() const;
    std::string summary() const;  // "suite: N checks, M failed"
};

// --- series identities -----------------------------------------------------

// Point-count generating series against the closed form.
CheckResult check_zeta(long q, int order);

// At one point: H * E = 1 and Q * H(s/v) = H(sv), both truncated.
CheckResult check_series_local_point(const ClosedPoint& x, int order);

// The coefficient of s^(r deg x) in H(sv) / H(s/v) is the single cyclic class
// with coefficient |Aut| v^(-r deg x), which also equals (1 - qx^-1) v^(r deg x).
CheckResult check_aut_coefficient(const ClosedPoint& x, int rmax);

// Global H * E = 1, plus the product-over-points series against the direct
// census coefficients.
CheckResult check_series_global(long q, int order);

// e-hat and q-hat from the triangular recursions against the series products.
CheckResult check_recursions_vs_series(long q, int order);

// --- straightening ----------------------------------------------------------

// normal_form fixes every basis monomial (twists -2..2).
CheckResult check_pbw_idempotence(long q, int max_rank, int max_hdeg);
// Same for the loop-presentation engine.
CheckResult check_loop_idempotence(long q, int max_rank, int max_hdeg);

// (a b) c = a (b c) over the letters {g(-2..2), h(1..3)}.
CheckResult check_associativity_sheaf(long q);
CheckResult check_associativity_loop(long q);

// Residues of the quadratic relation between line letters.
CheckResult check_relation_sheaf_quadratic(long q, int window);
CheckResult check_relation_loop_quadratic(long q, int window);
// Residues of the h-past-g (resp. p-past-y) straightening identity.
CheckResult check_relation_sheaf_mixed(long q, int rmax, int window);
CheckResult check_relation_loop_mixed(long q, int rmax, int window);

// The degree-r torsion census element times a line class, computed through the
// expansion into elementary torsion letters, against the straightening formula.
CheckResult check_series_line_product(long q, int rmax);

// --- structure-constant identities ------------------------------------------

// Sum of phi * g g / g over a product of two line classes equals the expected
// power of q (the exponent is minus the Euler pairing).
CheckResult check_weighted_count_bundles(long q, int max_spread);
// Same for pairs of torsion classes, where the expected value is 1.
CheckResult check_weighted_count_torsion(long q, int max_weight);
// q^dim Hom * phi * g g / g has denominator a power of q, both factor orders.
CheckResult check_weighted_count_integrality(long q, int max_spread);
// phi is symmetric modulo q - 1 on distinct line classes.
CheckResult check_count_symmetry_mod(long q, int max_spread);

// --- coproduct ----------------------------------------------------------------

// Delta(ab) = Delta(a) Delta(b) on single-point classes at a degree-1 point.
CheckResult check_coproduct_multiplicative(long q, int max_weight);
// Delta applied to the local h-series is grouplike, order by order.
CheckResult check_coproduct_grouplike(const ClosedPoint& x, int order);

// --- brute-force oracles ------------------------------------------------------

CheckResult check_phi_oracle(long q, int max_total);
CheckResult check_quadruple_oracle(long q, int d, int a);
CheckResult check_ext_oracle(long q, int max_spread);
CheckResult check_hall_oracle(long q, int max_weight);
CheckResult check_aut_oracle(long q, int max_weight);

// --- isomorphism ---------------------------------------------------------------

CheckResult check_iso(long q, int max_degree);

// --- suites ---------------------------------------------------------------------

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, long q, int max_degree);

}  // namespace hallp1::verify
