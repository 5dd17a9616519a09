#include "hallp1/hall_global.hpp"

#include <algorithm>

namespace hallp1 {

SheafClass SheafClass::line_power(int n, int a) {
  if (a < 0) throw std::invalid_argument("line_power: negative multiplicity");
  SheafClass c;
  if (a > 0) c.bundle[n] = a;
  return c;
}

long SheafClass::rank() const {
  long r = 0;
  for (const auto& [n, m] : bundle) r += m;
  return r;
}

long SheafClass::degree() const {
  long d = torsion.degree();
  for (const auto& [n, m] : bundle) d += static_cast<long>(n) * m;
  return d;
}

std::string SheafClass::to_string() const {
  if (is_zero_sheaf()) return "0-sheaf";
  std::string s;
  for (const auto& [n, m] : bundle) {
    if (!s.empty()) s += "+";
    s += "O(" + std::to_string(n) + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  if (!torsion.is_trivial()) {
    if (!s.empty()) s += "+";
    s += torsion.to_string();
  }
  return s;
}

HallElement HallElement::unit(long q) {
  return single(q, SheafClass::zero_sheaf(), Coeff::one(q));
}

HallElement HallElement::single(long q, const SheafClass& c, const Coeff& k) {
  HallElement e{q, {}};
  e.add_term(c, k);
  return e;
}

Coeff HallElement::coeff(const SheafClass& c) const {
  auto it = terms.find(c);
  return it == terms.end() ? Coeff::zero(q) : it->second;
}

void HallElement::add_term(const SheafClass& c, const Coeff& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = terms.emplace(c, k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) terms.erase(it);
  }
}

HallElement HallElement::operator+(const HallElement& o) const {
  HallElement out = *this;
  for (const auto& [c, k] : o.terms) out.add_term(c, k);
  return out;
}

HallElement HallElement::operator-(const HallElement& o) const {
  HallElement out = *this;
  for (const auto& [c, k] : o.terms) out.add_term(c, -k);
  return out;
}

HallElement HallElement::scaled(const Coeff& k) const {
  HallElement out{q, {}};
  if (k.is_zero()) return out;
  for (const auto& [c, w] : terms) out.add_term(c, w * k);
  return out;
}

std::string HallElement::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [c, k] : terms) {
    if (!s.empty()) s += " + ";
    if (k.is_one())
      s += "[" + c.to_string() + "]";
    else
      s += "(" + k.to_string() + ")*[" + c.to_string() + "]";
  }
  return s;
}

NotDerivable::NotDerivable(SheafClass l, SheafClass r)
    : std::runtime_error("product not derivable for [" + l.to_string() + "] * [" +
                         r.to_string() + "]"),
      left(std::move(l)),
      right(std::move(r)) {}

long euler_form(std::pair<long, long> a, std::pair<long, long> b) {
  return a.first * b.first + a.first * b.second - a.second * b.first;
}

long euler_form(const SheafClass& a, const SheafClass& b) {
  return euler_form({a.rank(), a.degree()}, {b.rank(), b.degree()});
}

long hom_dim(const SheafClass& a, const SheafClass& b, long q) {
  (void)q;
  bool a_line = a.is_bundle() && a.rank() == 1;
  bool b_line = b.is_bundle() && b.rank() == 1;
  if (a_line && b_line) {
    long m = a.degree(), n = b.degree();
    return std::max(0L, n - m + 1);
  }
  if (a_line && b.is_torsion()) return b.degree();
  if (a.is_torsion() && b.is_bundle()) return 0;
  if (a.is_torsion() && b.is_torsion()) {
    bool disjoint = true;
    for (const auto& [x, lam] : a.torsion.parts)
      if (b.torsion.parts.count(x)) disjoint = false;
    if (disjoint) return 0;
    throw std::invalid_argument("hom_dim: torsion pair with shared support unsupported");
  }
  throw std::invalid_argument("hom_dim: unsupported pair [" + a.to_string() + "], [" +
                              b.to_string() + "]");
}

namespace {

Int gl_order(int c, long q) {
  Int qc = int_pow(Int(q), c);
  Int g = 1;
  for (int i = 0; i < c; ++i) g *= qc - int_pow(Int(q), i);
  return g;
}

}  // namespace

Int aut_order_sheaf(const SheafClass& c, long q) {
  Int g = 1;
  std::vector<std::pair<int, int>> tw(c.bundle.begin(), c.bundle.end());
  for (const auto& [n, m] : tw) g *= gl_order(m, q);
  long hom_exp = 0;
  for (std::size_t i = 0; i < tw.size(); ++i)
    for (std::size_t j = i + 1; j < tw.size(); ++j)
      hom_exp += static_cast<long>(tw[j].first - tw[i].first + 1) * tw[i].second *
                 tw[j].second;
  // Hom(O(n), T) contributes deg T per bundle summand; Hom(T, bundle) = 0.
  hom_exp += c.rank() * c.torsion.degree();
  g *= int_pow(Int(q), hom_exp);
  g *= aut_order_torsion_class(c.torsion);
  return g;
}

namespace {

// [O(n)^j] * [O(n)^k] -> Gaussian binomial [j+k choose j]_q times the full power.
Coeff same_twist_coeff(int j, int k, long q) {
  Rat c(1);
  for (int i = 0; i < j; ++i)
    c *= Rat(int_pow(Int(q), j + k - i) - 1) / Rat(int_pow(Int(q), j - i) - 1);
  return Coeff::from_rat(c, q);
}

bool is_single_twist_power(const SheafClass& c) {
  return c.is_bundle() && c.bundle.size() == 1;
}

bool all_ones(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x == 1; });
}

}  // namespace

HallElement hall_product(long q, const SheafClass& a, const SheafClass& b) {
  if (a.is_zero_sheaf()) return HallElement::single(q, b, Coeff::one(q));
  if (b.is_zero_sheaf()) return HallElement::single(q, a, Coeff::one(q));

  if (a.is_torsion() && b.is_torsion()) {
    TorsionElement t = mult_torsion(q, a.torsion, b.torsion);
    HallElement out = HallElement::zero(q);
    for (const auto& [c, k] : t.terms) out.add_term(SheafClass::of_torsion(c), k);
    return out;
  }

  if (a.is_bundle() && b.is_bundle()) {
    // (1) powers of one common twist.
    if (is_single_twist_power(a) && is_single_twist_power(b) &&
        a.bundle.begin()->first == b.bundle.begin()->first) {
      int n = a.bundle.begin()->first;
      int j = a.bundle.begin()->second, k = b.bundle.begin()->second;
      return HallElement::single(q, SheafClass::line_power(n, j + k),
                                 same_twist_coeff(j, k, q));
    }
    // (2) sub of one twist strictly above every twist of the quotient.
    if (is_single_twist_power(b) && b.bundle.begin()->first > a.bundle.rbegin()->first) {
      SheafClass sum = a;
      sum.bundle[b.bundle.begin()->first] = b.bundle.begin()->second;
      return HallElement::single(q, sum, Coeff::one(q));
    }
    // (3) two lines, quotient twist above sub twist.
    if (a.rank() == 1 && b.rank() == 1) {
      int n = a.bundle.begin()->first, m = b.bundle.begin()->first;
      if (n > m) {
        HallElement out = HallElement::zero(q);
        SheafClass split;
        split.bundle[m] = 1;
        split.bundle[n] += 1;
        out.add_term(split, Coeff::from_rat(rat_pow(Rat(q), n - m + 1), q));
        Coeff mid = Coeff::from_rat(Rat(q * q - 1) * rat_pow(Rat(q), n - m - 1), q);
        for (int i = 1; 2 * i <= n - m; ++i) {
          SheafClass c;
          c.bundle[m + i] = 1;
          c.bundle[n - i] += 1;
          out.add_term(c, mid);
        }
        return out;
      }
    }
    throw NotDerivable(a, b);
  }

  // (5) torsion subobject of a bundle-plus-torsion extension: always split.
  if (a.is_bundle() && b.is_torsion()) {
    SheafClass sum = a;
    sum.torsion = b.torsion;
    return HallElement::single(q, sum, Coeff::one(q));
  }

  // (6) quotient (1^r) at one point, subobject a line.
  if (a.is_torsion() && b.is_bundle() && b.rank() == 1) {
    if (a.torsion.single_point() && !a.torsion.is_trivial()) {
      const auto& [x, lam] = *a.torsion.parts.begin();
      if (all_ones(lam)) {
        int r = length(lam);
        int n = b.bundle.begin()->first;
        HallElement out = HallElement::zero(q);
        SheafClass swallowed = SheafClass::line(n + x.degree());
        swallowed.torsion = TorsionClass::at(x, Partition(r - 1, 1));
        out.add_term(swallowed, Coeff::one(q));
        SheafClass split = SheafClass::line(n);
        split.torsion = a.torsion;
        out.add_term(split, Coeff::from_rat(rat_pow(Rat(x.qx()), r), q));
        return out;
      }
    }
    throw NotDerivable(a, b);
  }

  throw NotDerivable(a, b);
}

HallElement hall_product(const HallElement& a, const HallElement& b) {
  if (a.q != b.q) throw std::invalid_argument("hall_product: mixed q");
  HallElement out = HallElement::zero(a.q);
  for (const auto& [ca, ka] : a.terms) {
    for (const auto& [cb, kb] : b.terms) {
      HallElement p = hall_product(a.q, ca, cb);
      Coeff k = ka * kb;
      for (const auto& [c, g] : p.terms) out.add_term(c, g * k);
    }
  }
  return out;
}

HallElement ringel_product(long q, const SheafClass& a, const SheafClass& b) {
  return hall_product(q, a, b).scaled(Coeff::v_pow(euler_form(a, b), q));
}

HallElement ringel_product(const HallElement& a, const HallElement& b) {
  if (a.q != b.q) throw std::invalid_argument("ringel_product: mixed q");
  HallElement out = HallElement::zero(a.q);
  for (const auto& [ca, ka] : a.terms) {
    for (const auto& [cb, kb] : b.terms) {
      HallElement p = ringel_product(a.q, ca, cb);
      Coeff k = ka * kb;
      for (const auto& [c, g] : p.terms) out.add_term(c, g * k);
    }
  }
  return out;
}

std::pair<PBWMonomial, Coeff> bundle_to_monomial(const SheafClass& b, long q) {
  if (!b.is_bundle()) throw std::invalid_argument("bundle_to_monomial: class has torsion");
  PBWMonomial mon;
  mon.c = b.bundle;
  Coeff kappa = Coeff::one(q);
  std::vector<std::pair<int, int>> tw(b.bundle.begin(), b.bundle.end());
  long vexp = 0;
  for (std::size_t i = 0; i < tw.size(); ++i) {
    int c = tw[i].second;
    kappa *= Coeff::from_rat(rat_pow(Rat(q), static_cast<long>(c) * (c - 1) / 2), q) *
             qfact(c, q);
    for (std::size_t j = i + 1; j < tw.size(); ++j)
      vexp += static_cast<long>(tw[j].first - tw[i].first + 1) * c * tw[j].second;
  }
  kappa *= Coeff::v_pow(vexp, q);
  return {mon, kappa};
}

namespace {

// Index of the leftmost reducible adjacent pair, or -1 if the word is normal.
int leftmost_reducible(const GenWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const GenLetter &l = w[i], &r = w[i + 1];
    if (l.is_h && !r.is_h) return static_cast<int>(i);
    if (l.is_h && r.is_h && l.index > r.index) return static_cast<int>(i);
    if (!l.is_h && !r.is_h && l.index > r.index) return static_cast<int>(i);
  }
  return -1;
}

GenWord splice(const GenWord& w, std::size_t i, const GenWord& mid) {
  GenWord out(w.begin(), w.begin() + i);
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), w.begin() + i + 2, w.end());
  return out;
}

void push_word(std::map<GenWord, Coeff>& pending, GenWord w, const Coeff& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = pending.emplace(std::move(w), k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) pending.erase(it);
  }
}

PBWMonomial monomial_of_normal_word(const GenWord& w) {
  PBWMonomial mon;
  for (const GenLetter& l : w) {
    if (l.is_h)
      mon.d[l.index] += 1;
    else
      mon.c[l.index] += 1;
  }
  return mon;
}

}  // namespace

BElement normal_form(const std::map<GenWord, Coeff>& words, long q) {
  std::map<GenWord, Coeff> pending = words;
  BElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const GenWord& w = node.key();
    Coeff k = node.mapped();
    if (k.is_zero()) continue;
    int i = leftmost_reducible(w);
    if (i < 0) {
      b_add_term(out, monomial_of_normal_word(w), k);
      continue;
    }
    const GenLetter &l = w[i], &r = w[i + 1];
    if (l.is_h && !r.is_h) {
      // (R-a)
      for (int s = 0; s <= l.index; ++s) {
        GenWord mid{g_letter(r.index + s)};
        if (l.index - s > 0) mid.push_back(h_letter(l.index - s));
        push_word(pending, splice(w, i, mid), k * qnum(s + 1, q));
      }
    } else if (l.is_h && r.is_h) {
      // (R-b)
      push_word(pending, splice(w, i, {r, l}), k);
    } else {
      // (R-c)
      HallElement el =
          ringel_product(q, SheafClass::line(l.index), SheafClass::line(r.index));
      for (const auto& [cls, coef] : el.terms) {
        auto [mon, kappa] = bundle_to_monomial(cls, q);
        push_word(pending, splice(w, i, mon.to_word()), k * coef * kappa.inv());
      }
    }
  }
  return out;
}

BElement normal_form(const GenWord& w, long q) {
  return normal_form(std::map<GenWord, Coeff>{{w, Coeff::one(q)}}, q);
}

BElement b_product(const BElement& f, const BElement& g, long q) {
  std::map<GenWord, Coeff> pending;
  for (const auto& [mf, kf] : f) {
    GenWord base = mf.to_word();
    for (const auto& [mg, kg] : g) {
      GenWord w = base;
      GenWord tail = mg.to_word();
      w.insert(w.end(), tail.begin(), tail.end());
      push_word(pending, std::move(w), kf * kg);
    }
  }
  return normal_form(pending, q);
}

}  // namespace hallp1
