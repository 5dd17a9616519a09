#include "hallp1/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallp1 {

bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

void check_partition(const Partition& p) {
  if (!is_valid_partition(p))
    throw std::invalid_argument("not a partition (need weakly decreasing positive parts)");
}

long weight(const Partition& p) {
  long w = 0;
  for (int x : p) w += x;
  return w;
}

long n_stat(const Partition& p) {
  long n = 0;
  for (size_t i = 0; i < p.size(); ++i) n += static_cast<long>(i) * p[i];
  return n;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  c.resize(p[0]);
  for (int j = 0; j < p[0]; ++j) {
    int cnt = 0;
    for (int part : p)
      if (part > j) ++cnt;
    c[j] = cnt;
  }
  return c;
}

int multiplicity(const Partition& p, int i) {
  return static_cast<int>(std::count(p.begin(), p.end(), i));
}

namespace {
void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of_bounded(n, n); }

std::vector<Partition> partitions_of_bounded(int n, int max_part) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, max_part, cur, out);
  return out;
}

Rat b_poly_at(const Partition& p, const Rat& t) {
  check_partition(p);
  Rat r(1);
  int maxpart = p.empty() ? 0 : p[0];
  for (int i = 1; i <= maxpart; ++i) {
    int m = multiplicity(p, i);
    for (int j = 1; j <= m; ++j) r *= 1 - rat_pow(t, j);
  }
  return r;
}

Int aut_order_torsion(const Partition& p, long qx) {
  check_partition(p);
  if (qx < 2) throw std::invalid_argument("aut_order_torsion: qx must be >= 2");
  Rat r = rat_pow(Rat(qx), weight(p) + 2 * n_stat(p)) * b_poly_at(p, Rat(1, qx));
  if (r.get_den() != 1)
    throw std::logic_error("aut_order_torsion: non-integral result");
  return r.get_num();
}

}  // namespace hallp1
