#include "hallp1/torsion.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallp1/sympoly.hpp"

namespace hallp1 {

TorsionClass TorsionClass::at(const ClosedPoint& x, Partition lambda) {
  check_partition(lambda);
  TorsionClass c;
  if (!lambda.empty()) c.parts.emplace(x, std::move(lambda));
  return c;
}

TorsionClass TorsionClass::with(const ClosedPoint& x, Partition lambda) const {
  check_partition(lambda);
  if (parts.count(x)) throw std::invalid_argument("point already present in torsion class");
  TorsionClass c = *this;
  if (!lambda.empty()) c.parts.emplace(x, std::move(lambda));
  return c;
}

long TorsionClass::degree() const {
  long d = 0;
  for (const auto& [x, lam] : parts) d += x.degree() * weight(lam);
  return d;
}

std::string TorsionClass::to_string() const {
  if (parts.empty()) return "0-sheaf";
  std::string s;
  for (const auto& [x, lam] : parts) {
    if (!s.empty()) s += "+";
    s += "T(" + x.to_string() + ",[";
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(lam[i]);
    }
    s += "])";
  }
  return s;
}

Int aut_order_torsion_class(const TorsionClass& c) {
  Int g = 1;
  for (const auto& [x, lam] : c.parts) g *= aut_order_torsion(lam, x.qx());
  return g;
}

TorsionElement TorsionElement::unit(long q) {
  return single(q, TorsionClass::trivial(), Coeff::one(q));
}

TorsionElement TorsionElement::single(long q, const TorsionClass& c, const Coeff& k) {
  TorsionElement e{q, {}};
  e.add_term(c, k);
  return e;
}

Coeff TorsionElement::coeff(const TorsionClass& c) const {
  auto it = terms.find(c);
  return it == terms.end() ? Coeff::zero(q) : it->second;
}

void TorsionElement::add_term(const TorsionClass& c, const Coeff& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = terms.emplace(c, k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TorsionElement TorsionElement::operator+(const TorsionElement& o) const {
  TorsionElement out = *this;
  for (const auto& [c, k] : o.terms) out.add_term(c, k);
  return out;
}

TorsionElement TorsionElement::operator-(const TorsionElement& o) const {
  TorsionElement out = *this;
  for (const auto& [c, k] : o.terms) out.add_term(c, -k);
  return out;
}

TorsionElement TorsionElement::scaled(const Coeff& k) const {
  TorsionElement out{q, {}};
  if (k.is_zero()) return out;
  for (const auto& [c, w] : terms) out.add_term(c, w * k);
  return out;
}

std::string TorsionElement::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [c, k] : terms) {
    if (!s.empty()) s += " + ";
    s += "(" + k.to_string() + ")*[" + c.to_string() + "]";
  }
  return s;
}

TorsionElement mult_torsion(long q, const TorsionClass& a, const TorsionClass& b) {
  // Per-point local products; points appearing on one side only pass through.
  std::vector<std::pair<ClosedPoint, std::map<Partition, Int>>> locals;
  auto ia = a.parts.begin();
  auto ib = b.parts.begin();
  while (ia != a.parts.end() || ib != b.parts.end()) {
    if (ib == b.parts.end() || (ia != a.parts.end() && ia->first < ib->first)) {
      locals.emplace_back(ia->first, std::map<Partition, Int>{{ia->second, Int(1)}});
      ++ia;
    } else if (ia == a.parts.end() || ib->first < ia->first) {
      locals.emplace_back(ib->first, std::map<Partition, Int>{{ib->second, Int(1)}});
      ++ib;
    } else {
      locals.emplace_back(ia->first,
                          hall_local_product(ia->second, ib->second, ia->first.qx()));
      ++ia;
      ++ib;
    }
  }

  TorsionElement out = TorsionElement::unit(q);
  for (const auto& [x, local] : locals) {
    TorsionElement next{q, {}};
    for (const auto& [cls, k] : out.terms) {
      for (const auto& [lam, g] : local) {
        TorsionClass c = cls;
        if (!lam.empty()) c.parts.emplace(x, lam);
        next.add_term(c, k * Coeff::from_rat(Rat(g), q));
      }
    }
    out = std::move(next);
  }
  return out;
}

TorsionElement mult_torsion(const TorsionElement& a, const TorsionElement& b) {
  if (a.q != b.q) throw std::invalid_argument("mult_torsion: mixed q");
  TorsionElement out{a.q, {}};
  for (const auto& [ca, ka] : a.terms) {
    for (const auto& [cb, kb] : b.terms) {
      TorsionElement p = mult_torsion(a.q, ca, cb);
      Coeff k = ka * kb;
      for (const auto& [c, g] : p.terms) out.add_term(c, g * k);
    }
  }
  return out;
}

namespace {

void classes_rec(const std::vector<ClosedPoint>& pts, std::size_t i, int remaining,
                 TorsionClass& acc, std::vector<TorsionClass>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  if (i == pts.size()) return;
  int d = pts[i].degree();
  for (int w = 0; w * d <= remaining; ++w) {
    if (w == 0) {
      classes_rec(pts, i + 1, remaining, acc, out);
      continue;
    }
    for (const Partition& lam : partitions_of(w)) {
      acc.parts[pts[i]] = lam;
      classes_rec(pts, i + 1, remaining - w * d, acc, out);
      acc.parts.erase(pts[i]);
    }
  }
}

}  // namespace

std::vector<TorsionClass> torsion_classes_of_degree(long q, int r) {
  if (r < 0) throw std::invalid_argument("torsion_classes_of_degree: negative degree");
  std::vector<ClosedPoint> pts = closed_points_up_to(q, r == 0 ? 1 : r);
  std::vector<TorsionClass> out;
  TorsionClass acc;
  classes_rec(pts, 0, r, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

TorsionSeries TorsionSeries::one(long q, int order) {
  TorsionSeries s;
  s.q = q;
  s.coeffs.assign(order + 1, TorsionElement::zero(q));
  s.coeffs[0] = TorsionElement::unit(q);
  return s;
}

TorsionSeries series_mul(const TorsionSeries& a, const TorsionSeries& b) {
  if (a.q != b.q) throw std::invalid_argument("series_mul: mixed q");
  int order = std::min(a.order(), b.order());
  TorsionSeries out;
  out.q = a.q;
  out.coeffs.assign(order + 1, TorsionElement::zero(a.q));
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      out.coeffs[i + j] = out.coeffs[i + j] + mult_torsion(a.coeffs[i], b.coeffs[j]);
    }
  }
  return out;
}

TorsionSeries series_shift_v(const TorsionSeries& a, long k) {
  TorsionSeries out = a;
  for (int j = 0; j <= a.order(); ++j)
    out.coeffs[j] = a.coeffs[j].scaled(Coeff::v_pow(k * j, a.q));
  return out;
}

TorsionSeries series_inverse(const TorsionSeries& a) {
  if (a.order() < 0 || !(a.coeffs[0] == TorsionElement::unit(a.q)))
    throw std::invalid_argument("series_inverse: constant term must be 1");
  TorsionSeries out = TorsionSeries::one(a.q, a.order());
  for (int k = 1; k <= a.order(); ++k) {
    TorsionElement s = TorsionElement::zero(a.q);
    for (int j = 1; j <= k; ++j)
      s = s + mult_torsion(a.coeffs[j], out.coeffs[k - j]);
    out.coeffs[k] = TorsionElement::zero(a.q) - s;
  }
  return out;
}

TorsionSeries hhat_series_local(const ClosedPoint& x, int order) {
  long q = x.q();
  int d = x.degree();
  TorsionSeries s = TorsionSeries::one(q, order);
  for (int r = 1; r * d <= order; ++r)
    for (const Partition& lam : partitions_of(r))
      s.coeffs[r * d].add_term(TorsionClass::at(x, lam), Coeff::one(q));
  return s;
}

TorsionSeries ehat_series_local(const ClosedPoint& x, int order) {
  long q = x.q();
  int d = x.degree();
  TorsionSeries s = TorsionSeries::one(q, order);
  for (int r = 1; r * d <= order; ++r) {
    Rat c = rat_pow(Rat(x.qx()), static_cast<long>(r) * (r - 1) / 2);
    if (r % 2 == 1) c = -c;
    s.coeffs[r * d].add_term(TorsionClass::at(x, Partition(r, 1)),
                             Coeff::from_rat(c, q));
  }
  return s;
}

TorsionSeries qhat_series_local(const ClosedPoint& x, int order) {
  long q = x.q();
  int d = x.degree();
  TorsionSeries s = TorsionSeries::one(q, order);
  for (int r = 1; r * d <= order; ++r) {
    Coeff c = Coeff::from_rat(Rat(1) - Rat(1, x.qx()), q) *
              Coeff::v_pow(static_cast<long>(r) * d, q);
    s.coeffs[r * d].add_term(TorsionClass::at(x, Partition{r}), c);
  }
  return s;
}

namespace {

template <typename LocalSeries>
TorsionSeries global_product(long q, int order, LocalSeries local) {
  TorsionSeries acc = TorsionSeries::one(q, order);
  for (const ClosedPoint& x : closed_points_up_to(q, order))
    acc = series_mul(acc, local(x, order));
  return acc;
}

}  // namespace

TorsionSeries hhat_series_global(long q, int order) {
  return global_product(q, order, hhat_series_local);
}

TorsionSeries ehat_series_global(long q, int order) {
  return global_product(q, order, ehat_series_local);
}

TorsionSeries qhat_series_global(long q, int order) {
  return global_product(q, order, qhat_series_local);
}

TorsionElement hhat_global(long q, int r) {
  TorsionElement e = TorsionElement::zero(q);
  for (const TorsionClass& c : torsion_classes_of_degree(q, r))
    e.add_term(c, Coeff::one(q));
  return e;
}

std::vector<TorsionElement> ehat_by_recursion(long q, int rmax) {
  std::vector<TorsionElement> h;
  for (int r = 0; r <= rmax; ++r) h.push_back(hhat_global(q, r));
  std::vector<TorsionElement> e{TorsionElement::unit(q)};
  for (int r = 1; r <= rmax; ++r) {
    TorsionElement er = TorsionElement::zero(q) - h[r];
    for (int s = 1; s < r; ++s) er = er - mult_torsion(h[s], e[r - s]);
    e.push_back(er);
  }
  return e;
}

std::vector<TorsionElement> qhat_by_recursion(long q, int rmax) {
  std::vector<TorsionElement> h;
  for (int r = 0; r <= rmax; ++r) h.push_back(hhat_global(q, r));
  std::vector<TorsionElement> qh{TorsionElement::unit(q)};
  for (int r = 1; r <= rmax; ++r) {
    Coeff lead = Coeff::from_rat(rat_pow(Rat(q), r) - 1, q) * Coeff::v_pow(-r, q);
    TorsionElement qr = h[r].scaled(lead);
    for (int s = 1; s < r; ++s)
      qr = qr - mult_torsion(h[s], qh[r - s]).scaled(Coeff::v_pow(-s, q));
    qh.push_back(qr);
  }
  return qh;
}

void TorsionTensor::add_term(const TorsionClass& a, const TorsionClass& b, const Coeff& k) {
  if (k.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto [it, fresh] = terms.emplace(key, k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TorsionTensor TorsionTensor::operator+(const TorsionTensor& o) const {
  TorsionTensor out = *this;
  for (const auto& [key, k] : o.terms) out.add_term(key.first, key.second, k);
  return out;
}

TorsionTensor TorsionTensor::operator-(const TorsionTensor& o) const {
  TorsionTensor out = *this;
  for (const auto& [key, k] : o.terms) out.add_term(key.first, key.second, -k);
  return out;
}

TorsionTensor tensor_of(const TorsionElement& a, const TorsionElement& b) {
  TorsionTensor out = TorsionTensor::zero(a.q);
  for (const auto& [ca, ka] : a.terms)
    for (const auto& [cb, kb] : b.terms) out.add_term(ca, cb, ka * kb);
  return out;
}

TorsionTensor tensor_mult(const TorsionTensor& a, const TorsionTensor& b) {
  if (a.q != b.q) throw std::invalid_argument("tensor_mult: mixed q");
  TorsionTensor out = TorsionTensor::zero(a.q);
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      TorsionElement left = mult_torsion(a.q, ka.first, kb.first);
      TorsionElement right = mult_torsion(a.q, ka.second, kb.second);
      Coeff k = ca * cb;
      for (const auto& [lc, lk] : left.terms)
        for (const auto& [rc, rk] : right.terms)
          out.add_term(lc, rc, k * lk * rk);
    }
  }
  return out;
}

TorsionTensor coproduct_local(const TorsionElement& f) {
  TorsionTensor out = TorsionTensor::zero(f.q);
  for (const auto& [cls, k] : f.terms) {
    if (!cls.single_point())
      throw std::invalid_argument("coproduct_local: class not supported at a single point");
    if (cls.is_trivial()) {
      out.add_term(TorsionClass::trivial(), TorsionClass::trivial(), k);
      continue;
    }
    const auto& [x, lam] = *cls.parts.begin();
    long qx = x.qx();
    Rat glam(aut_order_torsion(lam, qx));
    int w = static_cast<int>(weight(lam));
    for (int i = 0; i <= w; ++i) {
      for (const Partition& mu : partitions_of(i)) {
        for (const Partition& nu : partitions_of(w - i)) {
          Int g = hall_number(lam, mu, nu, qx);
          if (g == 0) continue;
          Rat c = Rat(aut_order_torsion(mu, qx)) * Rat(aut_order_torsion(nu, qx)) *
                  Rat(g) / glam;
          out.add_term(TorsionClass::at(x, mu), TorsionClass::at(x, nu),
                       k * Coeff::from_rat(c, f.q));
        }
      }
    }
  }
  return out;
}

}  // namespace hallp1
