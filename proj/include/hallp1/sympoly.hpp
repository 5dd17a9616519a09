#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallp1/coeff.hpp"
#include "hallp1/partition.hpp"

namespace hallp1 {

// Symmetric polynomial in a fixed number of variables, expanded in the
// monomial basis m_lambda. Keys have length <= nvars; no zero coefficients.
struct SymPoly {
  int nvars = 0;
  std::map<Partition, Rat> terms;

  static SymPoly zero(int m) { return SymPoly{m, {}}; }
  static SymPoly one(int m) { return SymPoly{m, {{Partition{}, Rat(1)}}}; }
  // m_lambda; identically zero when lambda has more parts than variables.
  static SymPoly monomial(const Partition& p, int m);
  // e_r = m_(1^r).
  static SymPoly elementary(int r, int m);
  // h_r = sum of all m_lambda with |lambda| = r.
  static SymPoly complete(int r, int m);

  bool is_zero() const { return terms.empty(); }
  Rat coeff(const Partition& p) const;
  void add_term(const Partition& p, const Rat& c);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly scaled(const Rat& c) const;
  bool operator==(const SymPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

// Hall-Littlewood polynomial P_lambda(x_1..x_m; t) at an exact rational t,
// computed by the one-variable branching rule. Memoized.
SymPoly hl_poly(const Partition& lambda, int m, const Rat& t);

// Writes f as sum_lambda c_lambda P_lambda(.; t). Requires f symmetric (it
// is, structurally) and throws if the triangular elimination leaves a
// remainder, which cannot happen for keys of length <= nvars.
std::map<Partition, Rat> expand_in_P(const SymPoly& f, const Rat& t);

// Writes f as sum_mu c_mu e_mu, e_mu = prod_i e_{mu_i}. Requires
// nvars >= weight of every term of f.
std::map<Partition, Rat> expand_in_e(const SymPoly& f);

// All structure constants g^lambda_{mu nu}(qx) of the classical Hall algebra
// at parameter qx: the number of submodules of type nu with quotient of type
// mu inside a fixed module of type lambda, for |lambda| = |mu| + |nu|.
// Computed as qx^(n(lambda) - n(mu) - n(nu)) * f^lambda_{mu nu}(1/qx) where
// f is the coefficient of P_lambda in P_mu P_nu at t = 1/qx. Memoized.
const std::map<Partition, Int>& hall_local_product(const Partition& mu,
                                                   const Partition& nu, long qx);

// Single structure constant: submodules of type nu, quotient type mu, inside
// a module of type lam. Zero when |lam| != |mu| + |nu|.
Int hall_number(const Partition& lam, const Partition& mu, const Partition& nu,
                long qx);

}  // namespace hallp1
