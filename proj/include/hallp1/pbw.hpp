#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallp1/coeff.hpp"

namespace hallp1 {

// Generator letter shared by the two straightening engines: on the sheaf
// side G(n) = [O(n)] and H(r) = hhat_r; on the loop-presentation side the
// same slots carry x_n^+ and PT_r.
struct GenLetter {
  bool is_h = false;  // false: bundle/loop generator with twist n; true: H/PT with r >= 1
  int index = 0;

  bool operator==(const GenLetter& o) const { return is_h == o.is_h && index == o.index; }
  bool operator!=(const GenLetter& o) const { return !(*this == o); }
  bool operator<(const GenLetter& o) const {
    if (is_h != o.is_h) return !is_h;
    return index < o.index;
  }
  std::string to_string() const {
    return (is_h ? "h" : "g") + std::to_string(index);
  }
};

inline GenLetter g_letter(int n) { return GenLetter{false, n}; }
inline GenLetter h_letter(int r) { return GenLetter{true, r}; }

using GenWord = std::vector<GenLetter>;

std::string word_to_string(const GenWord& w);
// Number of G letters plus the sum of H indices: the weight used for degree
// budgets when enumerating generator words.
long word_weight(const GenWord& w);

// Basis monomial X_c * h_d: an ascending multiset of bundle twists (c) and a
// multiset of h indices (d). Multiplicities are positive.
struct PBWMonomial {
  std::map<int, int> c;  // twist -> multiplicity
  std::map<int, int> d;  // r -> exponent

  static PBWMonomial unit() { return {}; }
  static PBWMonomial single_g(int n) { return PBWMonomial{{{n, 1}}, {}}; }
  static PBWMonomial single_h(int r) { return PBWMonomial{{}, {{r, 1}}}; }

  bool is_unit() const { return c.empty() && d.empty(); }
  long rank() const;      // total bundle multiplicity
  long h_degree() const;  // sum of r * d_r
  GenWord to_word() const;

  bool operator==(const PBWMonomial& o) const { return c == o.c && d == o.d; }
  bool operator!=(const PBWMonomial& o) const { return !(*this == o); }
  bool operator<(const PBWMonomial& o) const {
    if (c != o.c) return c < o.c;
    return d < o.d;
  }

  std::string to_string() const;  // "g0^2*h1", "1" for the unit
};

// Element in the PBW basis: finite map monomial -> coefficient.
using BElement = std::map<PBWMonomial, Coeff>;

void b_add_term(BElement& f, const PBWMonomial& m, const Coeff& k);
BElement b_add(const BElement& f, const BElement& g);
BElement b_sub(const BElement& f, const BElement& g);
BElement b_scaled(const BElement& f, const Coeff& k);
std::string b_to_string(const BElement& f);

}  // namespace hallp1
