#include "hallp1/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hallp1::oracle {

namespace {
long pow_long(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_budget(long work, long budget, const char* what) {
  if (work > budget) {
    std::ostringstream os;
    os << what << ": enumeration size " << work << " exceeds budget " << budget;
    throw BudgetExceeded(os.str());
  }
}
}  // namespace

NilModule NilModule::of_type(const Partition& lambda, long q) {
  check_partition(lambda);
  if (!is_prime(q)) throw std::invalid_argument("NilModule: q must be prime");
  NilModule m;
  m.q = q;
  m.dim = static_cast<int>(weight(lambda));
  m.t.assign(m.dim, std::vector<int>(m.dim, 0));
  int off = 0;
  for (int part : lambda) {
    for (int j = 0; j + 1 < part; ++j) m.t[off + j + 1][off + j] = 1;
    off += part;
  }
  return m;
}

int mat_rank(Mat m, long q) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % q != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    // Scale pivot row to 1.
    long inv = 1, base = ((m[rank][c] % q) + q) % q, e = q - 2;
    while (e) {
      if (e & 1) inv = inv * base % q;
      base = base * base % q;
      e >>= 1;
    }
    for (int j = 0; j < cols; ++j)
      m[rank][j] = static_cast<int>(((m[rank][j] * inv) % q + q) % q);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      int f = ((m[r][c] % q) + q) % q;
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        m[r][j] = static_cast<int>(((m[r][j] - static_cast<long>(f) * m[rank][j]) % q + q) % q);
    }
    ++rank;
  }
  return rank;
}

Mat mat_mul(const Mat& a, const Mat& b, long q) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = k ? static_cast<int>(b[0].size()) : 0;
  Mat r(n, std::vector<int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j)
        r[i][j] = static_cast<int>((r[i][j] + static_cast<long>(a[i][t]) * b[t][j]) % q);
    }
  return r;
}

Partition jordan_type(const Mat& n, long q) {
  int dim = static_cast<int>(n.size());
  if (dim == 0) return {};
  std::vector<int> kerdims{0};
  Mat p = n;
  while (true) {
    int k = dim - mat_rank(p, q);
    kerdims.push_back(k);
    if (k == dim) break;
    p = mat_mul(p, n, q);
    if (kerdims.size() > static_cast<size_t>(dim) + 1)
      throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  }
  Partition diffs;
  for (size_t i = 1; i < kerdims.size(); ++i) diffs.push_back(kerdims[i] - kerdims[i - 1]);
  while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
  return conjugate(diffs);
}

namespace {
// All polynomials over F_q of exact degree k (k >= 0), plus optionally zero.
std::vector<FqPoly> polys_of_exact_degree(long q, int k) {
  std::vector<FqPoly> out;
  std::vector<int> c(k + 1, 0);
  for (int lead = 1; lead < q; ++lead) {
    c[k] = lead;
    std::fill(c.begin(), c.end() - 1, 0);
    while (true) {
      out.emplace_back(q, c);
      int i = 0;
      while (i < k && ++c[i] == q) c[i++] = 0;
      if (i == k) break;
    }
  }
  return out;
}

// All polynomials over F_q of degree < k, zero included (q^k of them).
std::vector<FqPoly> polys_of_degree_less(long q, int k) {
  std::vector<FqPoly> out;
  std::vector<int> c(std::max(k, 1), 0);
  if (k <= 0) {
    out.emplace_back(q, c);
    return out;
  }
  while (true) {
    out.emplace_back(q, c);
    int i = 0;
    while (i < k && ++c[i] == q) c[i++] = 0;
    if (i == k) break;
  }
  return out;
}

// Nonzero binary forms of degree a over F_q as (e, f): e the multiplicity of
// the linear form vanishing at infinity, f the dehomogenization, deg f = a-e.
struct BinForm {
  int e;
  FqPoly f;
};

std::vector<BinForm> forms_of_degree(long q, int a) {
  std::vector<BinForm> out;
  std::vector<int> c(a + 1, 0);
  // Counter over all nonzero coefficient vectors.
  while (true) {
    int i = 0;
    while (i <= a && ++c[i] == q) c[i++] = 0;
    if (i > a) break;
    FqPoly f(q, c);
    out.push_back(BinForm{a - f.degree(), f});
  }
  return out;
}

bool forms_coprime(const BinForm& x, const BinForm& y) {
  if (x.e > 0 && y.e > 0) return false;
  return poly_gcd(x.f, y.f).degree() == 0;
}
}  // namespace

Int phi_bruteforce(long q, int a, int b, long budget) {
  if (!is_prime(q)) throw std::invalid_argument("phi_bruteforce: q must be prime");
  if (a < 0 || b < 0) throw std::invalid_argument("phi_bruteforce: negative degree");
  long na = pow_long(q, a + 1) - 1, nb = pow_long(q, b + 1) - 1;
  check_budget(na * nb, budget, "phi_bruteforce");
  auto fa = forms_of_degree(q, a), fb = forms_of_degree(q, b);
  Int count = 0;
  for (const auto& x : fa)
    for (const auto& y : fb)
      if (forms_coprime(x, y)) ++count;
  return count;
}

Int quadruple_count(const FqPoly& P, int a, long budget) {
  long q = P.q;
  int d = P.degree();
  if (!P.is_monic() || !is_irreducible(P))
    throw std::invalid_argument("quadruple_count: P must be monic irreducible");
  if (a < 1 || a > d - 1) throw std::invalid_argument("quadruple_count: need 1 <= a <= d-1");
  long work = pow_long(q, a) * (q - 1) * pow_long(q, a) * pow_long(q, d - a);
  check_budget(work, budget, "quadruple_count");
  auto hs = polys_of_exact_degree(q, a);
  auto js = polys_of_degree_less(q, a);
  auto ls = polys_of_degree_less(q, d - a);
  Int count = 0;
  for (const FqPoly& h : hs)
    for (const FqPoly& j : js)
      for (const FqPoly& l : ls) {
        FqPoly rhs = P + j * l;  // H*I = P + J*L
        auto [quot, rem] = rhs.divmod(h);
        if (rem.is_zero() && quot.degree() == d - a) ++count;
      }
  return count;
}

Int ext_count_bundles(long q, int m, int n, int p, int p2, long budget) {
  if (!is_prime(q)) throw std::invalid_argument("ext_count_bundles: q must be prime");
  if (p > p2) std::swap(p, p2);
  if (p + p2 != m + n || m > n) return 0;
  Int count = 0;
  if (p == m && p2 == n) {
    if (m == n) throw std::invalid_argument("ext_count_bundles: need m < n");
    // Split middle: data is (unit h, any i, unit l) with j forced.
    long ni = pow_long(q, n - m + 1);
    check_budget((q - 1) * (q - 1) * ni, budget, "ext_count_bundles");
    for (long h = 1; h < q; ++h)
      for (long l = 1; l < q; ++l)
        for (long i = 0; i < ni; ++i) ++count;
  } else if (m < p && p2 < n) {
    long nj = pow_long(q, n - p + 1) - 1, nl = pow_long(q, n - p2 + 1) - 1;
    check_budget(nj * nl, budget, "ext_count_bundles");
    auto js = forms_of_degree(q, n - p);
    auto ls = forms_of_degree(q, n - p2);
    // A coprime (J, L) determines (H, I) up to the unit E.
    for (const auto& j : js)
      for (const auto& l : ls)
        if (forms_coprime(j, l)) count += q - 1;
  } else {
    return 0;
  }
  Int denom = Int(q - 1) * Int(q - 1);
  if (count % denom != 0)
    throw std::logic_error("ext_count_bundles: count not divisible by (q-1)^2");
  return count / denom;
}

namespace {
struct SubspaceVisit {
  std::vector<std::vector<int>> basis;  // RREF rows
  std::vector<int> pivots;              // pivot column of each row
};

// Reduce v against the RREF basis in place; returns the coordinates used.
std::vector<int> reduce_vector(std::vector<int>& v, const SubspaceVisit& s, long q) {
  std::vector<int> coords(s.basis.size(), 0);
  for (size_t i = 0; i < s.basis.size(); ++i) {
    int c = v[s.pivots[i]];
    if (c == 0) continue;
    coords[i] = c;
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = static_cast<int>(((v[j] - static_cast<long>(c) * s.basis[i][j]) % q + q) % q);
  }
  return coords;
}

bool is_zero_vec(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::vector<int> apply_mat(const Mat& t, const std::vector<int>& v, long q) {
  int n = static_cast<int>(v.size());
  std::vector<int> r(n, 0);
  for (int i = 0; i < n; ++i) {
    long acc = 0;
    for (int j = 0; j < n; ++j) acc += static_cast<long>(t[i][j]) * v[j];
    r[i] = static_cast<int>(acc % q);
  }
  return r;
}

template <class Fn>
void for_each_subspace(int n, long q, long budget, Fn&& fn) {
  long visited = 0;
  for (int d = 0; d <= n; ++d) {
    // Pivot column combinations, lexicographic.
    std::vector<int> piv(d);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
      // Free positions: (row i, col j) with j > piv[i], j not a pivot.
      std::vector<std::pair<int, int>> free_pos;
      std::vector<bool> is_piv(n, false);
      for (int j : piv) is_piv[j] = true;
      for (int i = 0; i < d; ++i)
        for (int j = piv[i] + 1; j < n; ++j)
          if (!is_piv[j]) free_pos.emplace_back(i, j);
      std::vector<int> fill(free_pos.size(), 0);
      while (true) {
        if (++visited > budget)
          throw BudgetExceeded("subspace enumeration exceeds budget");
        SubspaceVisit s;
        s.pivots = piv;
        s.basis.assign(d, std::vector<int>(n, 0));
        for (int i = 0; i < d; ++i) s.basis[i][piv[i]] = 1;
        for (size_t k = 0; k < free_pos.size(); ++k)
          s.basis[free_pos[k].first][free_pos[k].second] = fill[k];
        fn(s, d);
        size_t i = 0;
        while (i < fill.size() && ++fill[i] == q) fill[i++] = 0;
        if (i == fill.size()) break;
      }
      if (d == 0) break;
      // Next combination.
      int i = d - 1;
      while (i >= 0 && piv[i] == n - d + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}
}  // namespace

std::map<std::pair<Partition, Partition>, Int> submodule_type_census(
    const Partition& lambda, long q, long budget) {
  NilModule mod = NilModule::of_type(lambda, q);
  int n = mod.dim;
  std::map<std::pair<Partition, Partition>, Int> census;
  for_each_subspace(n, q, budget, [&](const SubspaceVisit& s, int d) {
    // Invariance: t maps each basis vector back into the row space.
    Mat sub_t(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i) {
      std::vector<int> v = apply_mat(mod.t, s.basis[i], q);
      std::vector<int> coords = reduce_vector(v, s, q);
      if (!is_zero_vec(v)) return;  // not invariant
      for (int r = 0; r < d; ++r) sub_t[r][i] = coords[r];
    }
    Partition sub_type = jordan_type(sub_t, q);
    // Quotient: induced action on the non-pivot coordinates.
    std::vector<int> nonpiv;
    std::vector<bool> is_piv(n, false);
    for (int j : s.pivots) is_piv[j] = true;
    for (int j = 0; j < n; ++j)
      if (!is_piv[j]) nonpiv.push_back(j);
    int c = static_cast<int>(nonpiv.size());
    Mat quot_t(c, std::vector<int>(c, 0));
    for (int k = 0; k < c; ++k) {
      std::vector<int> e(n, 0);
      e[nonpiv[k]] = 1;
      std::vector<int> v = apply_mat(mod.t, e, q);
      reduce_vector(v, s, q);  // v now represents the class mod the subspace
      for (int r = 0; r < c; ++r) quot_t[r][k] = v[nonpiv[r]];
    }
    Partition quot_type = jordan_type(quot_t, q);
    census[{quot_type, sub_type}] += 1;
  });
  return census;
}

Int submodule_hall_count(const Partition& lambda, const Partition& mu,
                         const Partition& nu, long q, long budget) {
  check_partition(mu);
  check_partition(nu);
  auto census = submodule_type_census(lambda, q, budget);
  auto it = census.find({mu, nu});
  return it == census.end() ? Int(0) : it->second;
}

Int aut_count_module(const Partition& lambda, long q, long budget) {
  NilModule mod = NilModule::of_type(lambda, q);
  int n = mod.dim;
  if (n == 0) return 1;
  long total = 1;
  for (int i = 0; i < n * n && total <= budget; ++i) total *= q;
  check_budget(total, budget, "aut_count_module");
  std::vector<int> entries(n * n, 0);
  Mat a(n, std::vector<int>(n, 0));
  Int count = 0;
  while (true) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = entries[i * n + j];
    if (mat_mul(a, mod.t, q) == mat_mul(mod.t, a, q) && mat_rank(a, q) == n) ++count;
    int i = 0;
    while (i < n * n && ++entries[i] == q) entries[i++] = 0;
    if (i == n * n) break;
  }
  return count;
}

}  // namespace hallp1::oracle
