#pragma once

#include <vector>

#include "hallp1/coeff.hpp"

namespace hallp1 {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);
void check_partition(const Partition& p);

long weight(const Partition& p);
inline int length(const Partition& p) { return static_cast<int>(p.size()); }
// n(lambda) = sum_i (i-1) lambda_i, rows indexed from 1.
long n_stat(const Partition& p);
Partition conjugate(const Partition& p);
// Number of parts equal to i.
int multiplicity(const Partition& p, int i);

// All partitions of n, largest-part-first order: (n) first, (1^n) last.
// Successive entries decrease lexicographically.
std::vector<Partition> partitions_of(int n);
// Partitions of n with every part <= max_part.
std::vector<Partition> partitions_of_bounded(int n, int max_part);

// b_lambda(t) = prod_i prod_{j=1..m_i(lambda)} (1 - t^j) as an exact rational.
Rat b_poly_at(const Partition& p, const Rat& t);

// Order of the automorphism group of the finite module of type lambda over a
// local ring with residue field of size qx:
//   qx^(|lambda| + 2 n(lambda)) * b_lambda(1/qx).
Int aut_order_torsion(const Partition& p, long qx);

}  // namespace hallp1
