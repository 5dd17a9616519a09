#pragma once

#include <string>
#include <vector>

#include "hallp1/coeff.hpp"
#include "hallp1/pbw.hpp"

namespace hallp1 {

// Straightening engine for the positive loop subalgebra given by generators
// and relations alone — independent of the sheaf-side engine. Letters reuse
// GenWord slots: g(n) carries x_n^+ and h(r) carries PT_r. Rules:
//   (V-a) pt(r) y(n)      -> sum_{s=0}^r [s+1] y(n+s) pt(r-s)
//   (V-b) pt(r) pt(r')    -> sorted freely (they commute)
//   (V-c) y(n) y(m), n>m  -> q y(m) y(n) + q y(n-1) y(m+1) - y(m+1) y(n-1),
//         with the closed swap y(m+1) y(m) -> q y(m) y(m+1) when n = m+1.
BElement v_normal_form(const std::map<GenWord, Coeff>& words, long q);
BElement v_normal_form(const GenWord& w, long q);

// Product by concatenation of representative words plus v_normal_form.
BElement v_product(const BElement& f, const BElement& g, long q);

// P_r as a polynomial in the commuting PT generators, from the recursion
// PT_r + sum_{s=1}^{r-1} PT_s P_{r-s} + P_r = 0.
BElement p_from_ptilde(int r, long q);
// psitilde_r from [r] PT_r = psitilde_r + sum_{s=1}^{r-1} v^-s PT_s psitilde_{r-s}.
BElement psitilde_from_ptilde(int r, long q);

struct IsoMismatch {
  std::string item;    // generator word or series element that disagreed
  std::string detail;  // both sides, rendered
};

struct IsoReport {
  long q = 0;
  int max_total_degree = 0;
  long checked = 0;
  std::vector<IsoMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// Computational check of the isomorphism with the sheaf-side algebra:
//  (i) every word over {g(n): |n| <= 2} u {h(r): r <= 3} of length <= 4 and
//      weight <= max_total_degree straightens to the same PBW coefficients
//      through both engines;
// (ii) ehat_r and qhat_r, taken from the global series products and expanded
//      in the h-monomial basis by exact linear solving, equal p_from_ptilde(r)
//      and (v - v^-1) psitilde_from_ptilde(r) for r <= max_total_degree.
IsoReport iso_check(long q, int max_total_degree);

}  // namespace hallp1
