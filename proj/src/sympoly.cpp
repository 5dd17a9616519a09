#include "hallp1/sympoly.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hallp1 {

SymPoly SymPoly::monomial(const Partition& p, int m) {
  check_partition(p);
  if (length(p) > m) return zero(m);
  SymPoly f = zero(m);
  f.terms[p] = 1;
  return f;
}

SymPoly SymPoly::elementary(int r, int m) {
  if (r < 0) throw std::invalid_argument("elementary: negative degree");
  if (r == 0) return one(m);
  return monomial(Partition(r, 1), m);
}

SymPoly SymPoly::complete(int r, int m) {
  if (r < 0) throw std::invalid_argument("complete: negative degree");
  SymPoly f = zero(m);
  for (const Partition& p : partitions_of(r))
    if (length(p) <= m) f.terms[p] = 1;
  return f;
}

Rat SymPoly::coeff(const Partition& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? Rat(0) : it->second;
}

void SymPoly::add_term(const Partition& p, const Rat& c) {
  if (c == 0) return;
  Rat& slot = terms[p];
  slot += c;
  if (slot == 0) terms.erase(p);
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  if (nvars != o.nvars) throw std::invalid_argument("SymPoly: mixed variable counts");
  SymPoly f = *this;
  for (const auto& [p, c] : o.terms) f.add_term(p, c);
  return f;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + o.scaled(Rat(-1)); }

SymPoly SymPoly::scaled(const Rat& c) const {
  SymPoly f = zero(nvars);
  if (c == 0) return f;
  for (const auto& [p, a] : terms) f.terms[p] = a * c;
  return f;
}

namespace {
// All distinct rearrangements of p padded with zeros to m entries.
std::vector<std::vector<int>> orbit_vectors(const Partition& p, int m) {
  std::vector<int> v(m, 0);
  std::copy(p.begin(), p.end(), v.begin());
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool weakly_decreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

Partition strip_zeros(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}
}  // namespace

SymPoly SymPoly::operator*(const SymPoly& o) const {
  if (nvars != o.nvars) throw std::invalid_argument("SymPoly: mixed variable counts");
  SymPoly f = zero(nvars);
  for (const auto& [pa, ca] : terms) {
    auto oa = orbit_vectors(pa, nvars);
    for (const auto& [pb, cb] : o.terms) {
      Rat c = ca * cb;
      auto ob = orbit_vectors(pb, nvars);
      // coeff of m_nu in m_a m_b = #{(x, y) in orbits, x + y = nu}; keeping
      // only sorted sums visits each nu exactly once per such pair.
      std::vector<int> w(nvars);
      for (const auto& x : oa)
        for (const auto& y : ob) {
          for (int i = 0; i < nvars; ++i) w[i] = x[i] + y[i];
          if (weakly_decreasing(w)) f.add_term(strip_zeros(w), c);
        }
    }
  }
  return f;
}

namespace {
// Partitions mu interlacing lambda: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
// (lambda/mu a horizontal strip).
std::vector<Partition> horizontal_strip_predecessors(const Partition& lam) {
  std::vector<Partition> out;
  int l = length(lam);
  Partition mu(l, 0);
  // Depth-first over choices mu_i in [lam_{i+1}, lam_i].
  std::vector<int> lo(l), hi(l);
  for (int i = 0; i < l; ++i) {
    hi[i] = lam[i];
    lo[i] = (i + 1 < l) ? lam[i + 1] : 0;
  }
  std::vector<int> cur(l);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == l) {
      out.push_back(strip_zeros(cur));
      return;
    }
    for (int v = hi[i]; v >= lo[i]; --v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Rat branching_psi(const Partition& lam, const Partition& mu, const Rat& t) {
  Rat r(1);
  int maxpart = lam.empty() ? 0 : lam[0];
  for (int i = 1; i <= maxpart; ++i)
    if (multiplicity(mu, i) == multiplicity(lam, i) + 1)
      r *= 1 - rat_pow(t, multiplicity(mu, i));
  return r;
}

struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};
using HlKey = std::tuple<Partition, int, Rat>;
struct HlKeyLess {
  bool operator()(const HlKey& a, const HlKey& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return cmp(std::get<2>(a), std::get<2>(b)) < 0;
  }
};
}  // namespace

SymPoly hl_poly(const Partition& lambda, int m, const Rat& t) {
  check_partition(lambda);
  if (length(lambda) > m) return SymPoly::zero(m);
  if (m == 0) return SymPoly::one(0);

  static std::map<HlKey, SymPoly, HlKeyLess> cache;
  static std::mutex mtx;
  HlKey key{lambda, m, t};
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  // P_lambda(x_1..x_m) = sum_mu psi_{lambda/mu}(t) x_m^{|lambda|-|mu|}
  //                      P_mu(x_1..x_{m-1});
  // the coefficient of the sorted monomial x^nu picks out exactly the
  // branches where appending the x_m exponent keeps the vector sorted.
  SymPoly f = SymPoly::zero(m);
  long wl = weight(lambda);
  for (const Partition& mu : horizontal_strip_predecessors(lambda)) {
    Rat psi = branching_psi(lambda, mu, t);
    if (psi == 0) continue;
    int k = static_cast<int>(wl - weight(mu));
    SymPoly sub = hl_poly(mu, m - 1, t);
    for (const auto& [kappa, c] : sub.terms) {
      // The appended exponent must keep the vector weakly decreasing; with no
      // earlier variables there is nothing to respect.
      int last = std::numeric_limits<int>::max();
      if (m > 1) last = (length(kappa) == m - 1) ? kappa.back() : 0;
      if (k > last) continue;
      std::vector<int> w(kappa);
      w.push_back(k);
      f.add_term(strip_zeros(std::move(w)), psi * c);
    }
  }

  std::lock_guard<std::mutex> lk(mtx);
  return cache.emplace(std::move(key), std::move(f)).first->second;
}

std::map<Partition, Rat> expand_in_P(const SymPoly& f, const Rat& t) {
  std::map<Partition, Rat> out;
  // Group the remainder by weight; within each weight eliminate in
  // largest-part-first order, which refines dominance, so the transition is
  // triangular.
  std::map<long, SymPoly> by_weight;
  for (const auto& [p, c] : f.terms) {
    auto [it, fresh] = by_weight.try_emplace(weight(p), SymPoly::zero(f.nvars));
    it->second.terms[p] = c;
  }
  for (auto& [w, rem] : by_weight) {
    for (const Partition& lam : partitions_of(static_cast<int>(w))) {
      if (length(lam) > f.nvars) continue;
      Rat c = rem.coeff(lam);
      if (c == 0) continue;
      out[lam] = c;
      rem = rem - hl_poly(lam, f.nvars, t).scaled(c);
    }
    if (!rem.is_zero()) throw std::logic_error("expand_in_P: non-symmetric input");
  }
  return out;
}

namespace {
SymPoly elementary_product(const Partition& mu, int m) {
  SymPoly f = SymPoly::one(m);
  for (int part : mu) f = f * SymPoly::elementary(part, m);
  return f;
}
}  // namespace

std::map<Partition, Rat> expand_in_e(const SymPoly& f) {
  std::map<Partition, Rat> out;
  std::map<long, SymPoly> by_weight;
  for (const auto& [p, c] : f.terms) {
    auto [it, fresh] = by_weight.try_emplace(weight(p), SymPoly::zero(f.nvars));
    it->second.terms[p] = c;
  }
  for (auto& [w, rem] : by_weight) {
    if (w > f.nvars)
      throw std::invalid_argument("expand_in_e: need nvars >= weight");
    // e_mu = m_{mu'} + (dominance-lower monomials), so eliminating against
    // conjugates in largest-part-first order of mu' is triangular.
    for (const Partition& lamc : partitions_of(static_cast<int>(w))) {
      Rat c = rem.coeff(lamc);
      if (c == 0) continue;
      Partition mu = conjugate(lamc);
      out[mu] = c;
      rem = rem - elementary_product(mu, f.nvars).scaled(c);
    }
    if (!rem.is_zero()) throw std::logic_error("expand_in_e: elimination failed");
  }
  return out;
}

const std::map<Partition, Int>& hall_local_product(const Partition& mu,
                                                   const Partition& nu, long qx) {
  check_partition(mu);
  check_partition(nu);
  if (qx < 2) throw std::invalid_argument("hall_local_product: qx must be >= 2");

  using Key = std::tuple<Partition, Partition, long>;
  static std::map<Key, std::map<Partition, Int>> cache;
  static std::mutex mtx;
  Key key{mu, nu, qx};
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  int m = static_cast<int>(weight(mu) + weight(nu));
  Rat t(1, qx);
  SymPoly prod = hl_poly(mu, m, t) * hl_poly(nu, m, t);
  std::map<Partition, Int> out;
  long base = n_stat(mu) + n_stat(nu);
  for (const auto& [lam, fcoef] : expand_in_P(prod, t)) {
    Rat g = rat_pow(Rat(qx), n_stat(lam) - base) * fcoef;
    if (g.get_den() != 1 || g < 0)
      throw std::logic_error("hall_local_product: structure constant not a nonnegative integer");
    if (g != 0) out[lam] = g.get_num();
  }

  std::lock_guard<std::mutex> lk(mtx);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

Int hall_number(const Partition& lam, const Partition& mu, const Partition& nu,
                long qx) {
  check_partition(lam);
  if (weight(lam) != weight(mu) + weight(nu)) return 0;
  const auto& prod = hall_local_product(mu, nu, qx);
  auto it = prod.find(lam);
  return it == prod.end() ? Int(0) : it->second;
}

}  // namespace hallp1
