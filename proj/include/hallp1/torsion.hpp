#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hallp1/coeff.hpp"
#include "hallp1/fqpoly.hpp"
#include "hallp1/partition.hpp"

namespace hallp1 {

// Isomorphism class of a torsion sheaf: finitely many closed points, each
// carrying a nonempty partition. The empty map is the zero sheaf.
struct TorsionClass {
  std::map<ClosedPoint, Partition> parts;

  static TorsionClass trivial() { return {}; }
  static TorsionClass at(const ClosedPoint& x, Partition lambda);
  // Copy extended by one more point; the point must not already be present.
  TorsionClass with(const ClosedPoint& x, Partition lambda) const;

  bool is_trivial() const { return parts.empty(); }
  // deg = sum over points of deg(x) * |lambda_x|.
  long degree() const;
  bool single_point() const { return parts.size() <= 1; }

  bool operator==(const TorsionClass& o) const { return parts == o.parts; }
  bool operator!=(const TorsionClass& o) const { return !(*this == o); }
  bool operator<(const TorsionClass& o) const { return parts < o.parts; }

  std::string to_string() const;  // "T(inf,[2,1])+T(z,[1])"; "0-sheaf" if trivial
};

// Order of Aut of the torsion sheaf: product over points of the local
// automorphism group orders at parameter qx = q^deg x.
Int aut_order_torsion_class(const TorsionClass& c);

// Finite Coeff-linear combination of torsion classes. Carries q so that the
// zero element stays well-typed.
struct TorsionElement {
  long q = 0;
  std::map<TorsionClass, Coeff> terms;

  static TorsionElement zero(long q) { return TorsionElement{q, {}}; }
  static TorsionElement unit(long q);
  static TorsionElement single(long q, const TorsionClass& c, const Coeff& k);

  bool is_zero() const { return terms.empty(); }
  Coeff coeff(const TorsionClass& c) const;
  void add_term(const TorsionClass& c, const Coeff& k);

  TorsionElement operator+(const TorsionElement& o) const;
  TorsionElement operator-(const TorsionElement& o) const;
  TorsionElement scaled(const Coeff& k) const;
  bool operator==(const TorsionElement& o) const { return q == o.q && terms == o.terms; }
  bool operator!=(const TorsionElement& o) const { return !(*this == o); }

  std::string to_string() const;
};

// Hall product. In [a]*[b] the right factor is the subobject type and the
// left factor the quotient type; the product is computed pointwise from the
// local structure constants (classes at distinct points interact trivially).
TorsionElement mult_torsion(long q, const TorsionClass& a, const TorsionClass& b);
TorsionElement mult_torsion(const TorsionElement& a, const TorsionElement& b);

// All torsion classes of degree exactly r (supported on points of degree
// <= r), in canonical order.
std::vector<TorsionClass> torsion_classes_of_degree(long q, int r);

// Power series in s truncated at s^order with torsion-element coefficients;
// coeffs[k] is the coefficient of s^k.
struct TorsionSeries {
  long q = 0;
  std::vector<TorsionElement> coeffs;

  static TorsionSeries one(long q, int order);
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const TorsionElement& at(int k) const { return coeffs.at(k); }

  bool operator==(const TorsionSeries& o) const { return q == o.q && coeffs == o.coeffs; }
};

TorsionSeries series_mul(const TorsionSeries& a, const TorsionSeries& b);
// Substitution s -> s * v^k: multiplies the s^j coefficient by v^(j k).
TorsionSeries series_shift_v(const TorsionSeries& a, long k);
// Multiplicative inverse; requires constant term 1.
TorsionSeries series_inverse(const TorsionSeries& a);

// Local series at a point x, truncated at s^order. Degrees in s are
// multiples of deg x; write d = deg x, qx = q^d.
//   H-series: sum_{r>=0} (sum_{|lambda|=r} [lambda at x]) s^(r d)
//   E-series: 1 + sum_{r>=1} (-1)^r qx^(r(r-1)/2) [(1^r) at x] s^(r d)
//   Q-series: 1 + sum_{r>=1} (1 - qx^-1) v^(r d) [(r) at x] s^(r d)
TorsionSeries hhat_series_local(const ClosedPoint& x, int order);
TorsionSeries ehat_series_local(const ClosedPoint& x, int order);
TorsionSeries qhat_series_local(const ClosedPoint& x, int order);

// Products of the local series over all points of degree <= order (points of
// larger degree only contribute above the truncation order).
TorsionSeries hhat_series_global(long q, int order);
TorsionSeries ehat_series_global(long q, int order);
TorsionSeries qhat_series_global(long q, int order);

// Degree-r coefficient of the global H-series: every torsion class of
// degree r with coefficient 1. Enumerated directly.
TorsionElement hhat_global(long q, int r);

// ehat_r and qhat_r for r = 1..rmax from hhat via the recursions
//   ehat_r = -hhat_r - sum_{s=1}^{r-1} hhat_s * ehat_{r-s}
//   qhat_r = v^-r (q^r - 1) hhat_r - sum_{s=1}^{r-1} v^-s hhat_s * qhat_{r-s}
// Index 0 of the returned vector is the unit.
std::vector<TorsionElement> ehat_by_recursion(long q, int rmax);
std::vector<TorsionElement> qhat_by_recursion(long q, int rmax);

// Element of the tensor square of the torsion Hall algebra.
struct TorsionTensor {
  long q = 0;
  std::map<std::pair<TorsionClass, TorsionClass>, Coeff> terms;

  static TorsionTensor zero(long q) { return TorsionTensor{q, {}}; }

  void add_term(const TorsionClass& a, const TorsionClass& b, const Coeff& k);
  TorsionTensor operator+(const TorsionTensor& o) const;
  TorsionTensor operator-(const TorsionTensor& o) const;
  bool operator==(const TorsionTensor& o) const { return q == o.q && terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

// a (x) b as a tensor element.
TorsionTensor tensor_of(const TorsionElement& a, const TorsionElement& b);
// Componentwise Hall product on the tensor square (the Euler form vanishes
// on torsion pairs, so no twist enters).
TorsionTensor tensor_mult(const TorsionTensor& a, const TorsionTensor& b);

// Coproduct Delta([lambda at x]) =
//   sum_{mu,nu} (g_mu g_nu / g_lambda) g^lambda_{mu nu}(qx) [mu at x] (x) [nu at x]
// extended linearly; defined for elements supported at single points only
// (throws std::invalid_argument otherwise).
TorsionTensor coproduct_local(const TorsionElement& f);

}  // namespace hallp1
