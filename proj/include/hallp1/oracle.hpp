#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "hallp1/coeff.hpp"
#include "hallp1/fqpoly.hpp"
#include "hallp1/partition.hpp"

namespace hallp1::oracle {

// Thrown when a brute-force enumeration would exceed its work budget.
// Budgets are explicit caps on enumeration size, never silent truncation.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Mat = std::vector<std::vector<int>>;  // dense matrix over F_q

// Finite-length module over the local ring at a point: an F_q-space with a
// nilpotent operator acting as the uniformizer.
struct NilModule {
  long q = 0;
  int dim = 0;
  Mat t;  // dim x dim nilpotent

  // Jordan blocks of sizes lambda_1 >= lambda_2 >= ...
  static NilModule of_type(const Partition& lambda, long q);
};

int mat_rank(Mat m, long q);
Mat mat_mul(const Mat& a, const Mat& b, long q);
// Jordan type of a nilpotent matrix, from kernel dimensions of its powers.
Partition jordan_type(const Mat& n, long q);

// Number of coprime pairs (F, G) of nonzero binary forms over F_q of degrees
// exactly (a, b), counted by full enumeration and gcd tests.
Int phi_bruteforce(long q, int a, int b, long budget = 20'000'000);

// Number of quadruples (H, I, J, L) of univariate polynomials over F_q with
// deg H = a, deg I = d-a, deg J < a, deg L < d-a and H*I - J*L = P, where P
// is monic irreducible of degree d and 1 <= a <= d-1. The degree bounds on
// J and L are strict upper bounds (zero allowed); requiring exact degrees
// a-1 and d-a-1 instead would undercount whenever d > 2. Full enumeration
// over (H, J, L).
Int quadruple_count(const FqPoly& P, int a, long budget = 20'000'000);

// Number of short exact sequences 0 -> O(m) -> O(p) + O(p2) -> O(n) -> 0 up
// to the (q-1)^2 automorphisms of the ends, counted by enumerating the
// defining polynomial data of the maps. Zero when no such sequence exists.
Int ext_count_bundles(long q, int m, int n, int p, int p2, long budget = 20'000'000);

// Counts of submodules by (quotient type, sub type) inside a module of type
// lambda: enumerates every subspace in reduced row echelon form, keeps the
// t-invariant ones, and classifies sub and quotient by Jordan type.
std::map<std::pair<Partition, Partition>, Int> submodule_type_census(
    const Partition& lambda, long q, long budget = 5'000'000);

// Number of submodules of type nu with quotient of type mu.
Int submodule_hall_count(const Partition& lambda, const Partition& mu,
                         const Partition& nu, long q, long budget = 5'000'000);

// Order of the automorphism group of the module of type lambda, by
// enumerating all dim x dim matrices and keeping invertible ones commuting
// with t.
Int aut_count_module(const Partition& lambda, long q, long budget = 5'000'000);

}  // namespace hallp1::oracle
