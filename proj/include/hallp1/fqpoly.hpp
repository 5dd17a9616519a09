#pragma once

#include <string>
#include <vector>

#include "hallp1/coeff.hpp"

namespace hallp1 {

// Polynomial over F_q, q prime. Coefficients lowest-degree-first, reduced
// mod q into [0, q), no trailing zeros; the zero polynomial has empty c.
struct FqPoly {
  long q = 0;
  std::vector<int> c;

  FqPoly() = default;
  FqPoly(long q_, std::vector<int> coeffs);
  static FqPoly zero(long q) { return FqPoly(q, {}); }
  static FqPoly constant(long q, int a) { return FqPoly(q, {a}); }
  static FqPoly x(long q) { return FqPoly(q, {0, 1}); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  int lead() const;
  bool is_monic() const { return !c.empty() && lead() == 1; }
  int eval(int a) const;

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  // Euclidean division; remainder degree < divisor degree.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
  FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }
  bool divides(const FqPoly& f) const { return (f % *this).is_zero(); }

  bool operator==(const FqPoly& o) const { return q == o.q && c == o.c; }
  bool operator!=(const FqPoly& o) const { return !(*this == o); }
  // Degree first, then lexicographic on the coefficient list.
  bool operator<(const FqPoly& o) const;

  std::string to_string() const;  // e.g. "z^2+z+1"

 private:
  void normalize();
};

// Monic gcd; gcd(0, 0) = 0.
FqPoly poly_gcd(FqPoly a, FqPoly b);

// Monic irreducibles of exact degree d, sorted.
std::vector<FqPoly> irreducible_polys(long q, int d);
bool is_irreducible(const FqPoly& f);

// Closed point of the projective line over F_q: either the point at
// infinity (degree 1) or a monic irreducible polynomial in the affine
// coordinate.
struct ClosedPoint {
  bool at_infinity = false;
  FqPoly minimal;  // monic irreducible; unused when at_infinity

  static ClosedPoint infinity(long q);
  static ClosedPoint finite(FqPoly f);

  long q() const { return minimal.q; }
  int degree() const { return at_infinity ? 1 : minimal.degree(); }
  long qx() const;  // q^degree

  bool operator==(const ClosedPoint& o) const;
  bool operator!=(const ClosedPoint& o) const { return !(*this == o); }
  // Infinity first, then by degree, then by coefficient list.
  bool operator<(const ClosedPoint& o) const;

  std::string to_string() const;  // "inf" or the polynomial
};

// All closed points of degree <= max_degree in canonical order.
std::vector<ClosedPoint> closed_points_up_to(long q, int max_degree);

// Coefficients 0..trunc of prod_{deg x <= trunc} (1 - s^(deg x))^-1.
std::vector<Int> point_count_series(long q, int trunc);
// Checks the series above equals sum_k (q^(k+1)-1)/(q-1) s^k up to s^trunc.
bool zeta_check(long q, int trunc);

}  // namespace hallp1
