#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hallp1/coeff.hpp"
#include "hallp1/pbw.hpp"
#include "hallp1/torsion.hpp"

namespace hallp1 {

// Isomorphism class of a coherent sheaf on the projective line: a bundle
// part (every bundle splits into twists) plus a torsion part.
struct SheafClass {
  std::map<int, int> bundle;  // twist -> multiplicity, multiplicities > 0
  TorsionClass torsion;

  static SheafClass zero_sheaf() { return {}; }
  static SheafClass line(int n) { return SheafClass{{{n, 1}}, {}}; }
  static SheafClass line_power(int n, int a);
  static SheafClass of_torsion(TorsionClass t) { return SheafClass{{}, std::move(t)}; }

  bool is_zero_sheaf() const { return bundle.empty() && torsion.is_trivial(); }
  bool is_bundle() const { return torsion.is_trivial(); }
  bool is_torsion() const { return bundle.empty(); }
  long rank() const;
  long degree() const;  // sum of twists + torsion degree
  SheafClass bundle_part() const { return SheafClass{bundle, {}}; }

  bool operator==(const SheafClass& o) const {
    return bundle == o.bundle && torsion == o.torsion;
  }
  bool operator!=(const SheafClass& o) const { return !(*this == o); }
  bool operator<(const SheafClass& o) const {
    if (bundle != o.bundle) return bundle < o.bundle;
    return torsion < o.torsion;
  }

  std::string to_string() const;  // "O(0)+O(2)", "O(1)^2", "O(3)+T(inf,[1])"
};

// Finite Coeff-linear combination of sheaf classes.
struct HallElement {
  long q = 0;
  std::map<SheafClass, Coeff> terms;

  static HallElement zero(long q) { return HallElement{q, {}}; }
  static HallElement unit(long q);
  static HallElement single(long q, const SheafClass& c, const Coeff& k);

  bool is_zero() const { return terms.empty(); }
  Coeff coeff(const SheafClass& c) const;
  void add_term(const SheafClass& c, const Coeff& k);

  HallElement operator+(const HallElement& o) const;
  HallElement operator-(const HallElement& o) const;
  HallElement scaled(const Coeff& k) const;
  bool operator==(const HallElement& o) const { return q == o.q && terms == o.terms; }
  bool operator!=(const HallElement& o) const { return !(*this == o); }

  std::string to_string() const;
};

// Raised when a product falls outside the derivable cases; the multiplication
// table is deliberately partial.
struct NotDerivable : std::runtime_error {
  SheafClass left, right;
  NotDerivable(SheafClass l, SheafClass r);
};

// Euler form <(r,d),(r',d')> = r r' + r d' - d r' on (rank, degree) pairs.
long euler_form(std::pair<long, long> a, std::pair<long, long> b);
long euler_form(const SheafClass& a, const SheafClass& b);

// dim Hom for the supported shapes: two line bundles, bundle -> torsion,
// torsion -> bundle, and torsion pairs with disjoint support. Throws
// std::invalid_argument otherwise.
long hom_dim(const SheafClass& a, const SheafClass& b, long q);

// Order of the automorphism group of the sheaf of class c over F_q.
Int aut_order_sheaf(const SheafClass& c, long q);

// Hall product [a] * [b]: b is the subobject type, a the quotient type.
// Derivable cases:
//   (1) powers of one twist:      [O(n)^j][O(n)^k]
//   (2) bundle x strictly-larger single-twist power
//   (3) two lines, descending:    [O(n)][O(m)], n > m
//   (4) torsion x torsion
//   (5) bundle x torsion
//   (6) single-point [T((1^r) at x)] x line
// plus everything forced by bilinearity and the unit. All other pairs throw
// NotDerivable.
HallElement hall_product(long q, const SheafClass& a, const SheafClass& b);
HallElement hall_product(const HallElement& a, const HallElement& b);

// Ringel product: the Hall product twisted by v^<a,b> per class pair.
HallElement ringel_product(long q, const SheafClass& a, const SheafClass& b);
HallElement ringel_product(const HallElement& a, const HallElement& b);

// For a bundle class b, the scalar kappa with X_c = kappa * [b], where
// X_c is the ascending Ringel product of the twists of b:
//   kappa = prod_i q^(c_i(c_i-1)/2) [c_i]! * v^(sum_{i<j} (n_j-n_i+1) c_i c_j).
// Returns (monomial with that c-part, kappa); kappa is a unit.
std::pair<PBWMonomial, Coeff> bundle_to_monomial(const SheafClass& b, long q);

// Straightening of generator words into the PBW basis (X_c * h_d). Rules:
//   (R-a) h(r) g(n)        -> sum_{s=0}^r [s+1] g(n+s) h(r-s)
//   (R-b) h(r) h(r'), r>r' -> h(r') h(r)
//   (R-c) g(n) g(m), n>m   -> Ringel expansion of [O(n)]*[O(m)] converted
//                             back to ordered words via bundle_to_monomial
//   (R-d) g(n) g(n)        -> kept (powers are allowed in X_c)
// The leftmost reducible pair is rewritten first.
BElement normal_form(const std::map<GenWord, Coeff>& words, long q);
BElement normal_form(const GenWord& w, long q);

// Product on B: concatenate representative words, then normal_form.
BElement b_product(const BElement& f, const BElement& g, long q);

}  // namespace hallp1
