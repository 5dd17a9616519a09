#include "hallp1/fqpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hallp1 {

FqPoly::FqPoly(long q_, std::vector<int> coeffs) : q(q_), c(std::move(coeffs)) {
  if (!is_prime(q)) throw std::invalid_argument("FqPoly: q must be prime");
  normalize();
}

void FqPoly::normalize() {
  for (int& a : c) {
    a %= static_cast<int>(q);
    if (a < 0) a += static_cast<int>(q);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int FqPoly::lead() const {
  if (c.empty()) throw std::invalid_argument("FqPoly::lead: zero polynomial");
  return c.back();
}

int FqPoly::eval(int a) const {
  long r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = (r * a + *it) % q;
  return static_cast<int>((r + q) % q);
}

namespace {
void check_same_q(const FqPoly& a, const FqPoly& b) {
  if (a.q != b.q) throw std::invalid_argument("FqPoly: mixed ground fields");
}
}  // namespace

FqPoly FqPoly::operator+(const FqPoly& o) const {
  check_same_q(*this, o);
  std::vector<int> r(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return FqPoly(q, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  check_same_q(*this, o);
  std::vector<int> r(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return FqPoly(q, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  check_same_q(*this, o);
  if (is_zero() || o.is_zero()) return FqPoly::zero(q);
  std::vector<int> r(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long>(c[i]) * o.c[j]) % q);
  return FqPoly(q, std::move(r));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
  check_same_q(*this, d);
  if (d.is_zero()) throw std::invalid_argument("FqPoly::divmod: division by zero");
  FqPoly rem = *this;
  if (rem.degree() < d.degree()) return {FqPoly::zero(q), rem};
  // Inverse of the leading coefficient via Fermat.
  long linv = 1, base = d.lead(), e = q - 2;
  while (e) {
    if (e & 1) linv = linv * base % q;
    base = base * base % q;
    e >>= 1;
  }
  std::vector<int> quot(rem.degree() - d.degree() + 1, 0);
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int k = rem.degree() - d.degree();
    int f = static_cast<int>(rem.lead() * linv % q);
    quot[k] = f;
    for (size_t i = 0; i < d.c.size(); ++i) {
      long v = rem.c[i + k] - static_cast<long>(f) * d.c[i];
      rem.c[i + k] = static_cast<int>(((v % q) + q) % q);
    }
    while (!rem.c.empty() && rem.c.back() == 0) rem.c.pop_back();
  }
  return {FqPoly(q, std::move(quot)), rem};
}

bool FqPoly::operator<(const FqPoly& o) const {
  check_same_q(*this, o);
  if (c.size() != o.c.size()) return c.size() < o.c.size();
  return c < o.c;
}

std::string FqPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) {
      if (c[i] != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FqPoly poly_gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && !a.is_monic()) {
    long linv = 1, base = a.lead(), e = a.q - 2;
    while (e) {
      if (e & 1) linv = linv * base % a.q;
      base = base * base % a.q;
      e >>= 1;
    }
    a = a * FqPoly::constant(a.q, static_cast<int>(linv));
  }
  return a;
}

namespace {
std::vector<FqPoly> monic_of_degree(long q, int d) {
  std::vector<FqPoly> out;
  std::vector<int> c(d + 1, 0);
  c[d] = 1;
  // Counter over the d low coefficients.
  while (true) {
    out.emplace_back(q, c);
    int i = 0;
    while (i < d && ++c[i] == q) c[i++] = 0;
    if (i == d) break;
  }
  return out;
}

std::vector<FqPoly> irreducibles_cached(long q, int d);

bool is_irreducible_impl(const FqPoly& f) {
  int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int e = 1; 2 * e <= d; ++e)
    for (const FqPoly& p : irreducibles_cached(f.q, e))
      if (p.divides(f)) return false;
  return true;
}

std::vector<FqPoly> irreducibles_cached(long q, int d) {
  static std::map<std::pair<long, int>, std::vector<FqPoly>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find({q, d});
    if (it != cache.end()) return it->second;
  }
  std::vector<FqPoly> out;
  for (const FqPoly& f : monic_of_degree(q, d))
    if (is_irreducible_impl(f)) out.push_back(f);
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lk(mtx);
  return cache.emplace(std::make_pair(q, d), std::move(out)).first->second;
}
}  // namespace

std::vector<FqPoly> irreducible_polys(long q, int d) {
  if (!is_prime(q)) throw std::invalid_argument("irreducible_polys: q must be prime");
  if (d < 1) throw std::invalid_argument("irreducible_polys: degree must be >= 1");
  return irreducibles_cached(q, d);
}

bool is_irreducible(const FqPoly& f) { return is_irreducible_impl(f); }

ClosedPoint ClosedPoint::infinity(long q) {
  ClosedPoint p;
  p.at_infinity = true;
  p.minimal = FqPoly::x(q);  // placeholder carrying q
  return p;
}

ClosedPoint ClosedPoint::finite(FqPoly f) {
  if (!f.is_monic() || !is_irreducible(f))
    throw std::invalid_argument("ClosedPoint: need a monic irreducible polynomial");
  ClosedPoint p;
  p.at_infinity = false;
  p.minimal = std::move(f);
  return p;
}

long ClosedPoint::qx() const {
  long r = 1;
  for (int i = 0; i < degree(); ++i) r *= q();
  return r;
}

bool ClosedPoint::operator==(const ClosedPoint& o) const {
  if (q() != o.q()) throw std::invalid_argument("ClosedPoint: mixed ground fields");
  if (at_infinity != o.at_infinity) return false;
  return at_infinity || minimal == o.minimal;
}

bool ClosedPoint::operator<(const ClosedPoint& o) const {
  if (q() != o.q()) throw std::invalid_argument("ClosedPoint: mixed ground fields");
  if (at_infinity != o.at_infinity) return at_infinity;
  if (at_infinity) return false;
  return minimal < o.minimal;
}

std::string ClosedPoint::to_string() const {
  return at_infinity ? "inf" : minimal.to_string();
}

std::vector<ClosedPoint> closed_points_up_to(long q, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("closed_points_up_to: negative degree");
  std::vector<ClosedPoint> out;
  if (max_degree >= 1) out.push_back(ClosedPoint::infinity(q));
  for (int d = 1; d <= max_degree; ++d)
    for (const FqPoly& f : irreducible_polys(q, d)) out.push_back(ClosedPoint::finite(f));
  return out;
}

std::vector<Int> point_count_series(long q, int trunc) {
  // a = prod (1 - s^(deg x)) truncated, then invert.
  std::vector<Int> a(trunc + 1, 0);
  a[0] = 1;
  for (const ClosedPoint& x : closed_points_up_to(q, trunc)) {
    int d = x.degree();
    for (int k = trunc; k >= d; --k) a[k] -= a[k - d];
  }
  std::vector<Int> b(trunc + 1, 0);
  b[0] = 1;
  for (int k = 1; k <= trunc; ++k) {
    Int s = 0;
    for (int j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -s;
  }
  return b;
}

bool zeta_check(long q, int trunc) {
  std::vector<Int> lhs = point_count_series(q, trunc);
  for (int k = 0; k <= trunc; ++k) {
    Int expect = (int_pow(Int(q), k + 1) - 1) / (q - 1);
    if (lhs[k] != expect) return false;
  }
  return true;
}

}  // namespace hallp1
