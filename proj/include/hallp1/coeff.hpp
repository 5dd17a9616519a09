#pragma once

#include <gmpxx.h>

#include <string>

namespace hallp1 {

using Int = mpz_class;
using Rat = mpq_class;

// Exact integer power. exp >= 0.
Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, long exp);

// Canonicalized rational from a fraction. den != 0.
Rat make_rat(long num, long den);

bool is_prime(long n);

// True if every prime factor of den divides q, i.e. den is a power of q
// (q prime).
bool denominator_is_q_power(const Rat& x, long q);

// Element a + b*v of Q[v]/(v^2 - q), q a fixed prime. The pair (a, b) is
// the canonical form. Binary operations require both operands to share q.
class Coeff {
 public:
  Coeff() : a_(0), b_(0), q_(0) {}
  Coeff(Rat a, Rat b, long q);

  static Coeff zero(long q) { return Coeff(Rat(0), Rat(0), q); }
  static Coeff one(long q) { return Coeff(Rat(1), Rat(0), q); }
  static Coeff from_rat(const Rat& a, long q) { return Coeff(a, Rat(0), q); }
  static Coeff from_int(long a, long q) { return Coeff(Rat(a), Rat(0), q); }
  // v^k, any integer k. Negative powers use v^-1 = v/q.
  static Coeff v_pow(long k, long q);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long q() const { return q_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  // True if a and b both lie in Z[1/q], i.e. the element lies in the image
  // of Z[v, v^-1]/(v^2 - q).
  bool is_ztilde() const;
  // True if b == 0 and a is an integer.
  bool is_integer() const;
  // Requires is_integer().
  Int as_integer() const;

  Coeff operator-() const { return Coeff(-a_, -b_, q_); }
  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const { return *this * o.inv(); }
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

  // Multiplicative inverse: (a - b*v) / (a^2 - b^2 q). Throws on zero.
  Coeff inv() const;
  Coeff pow(unsigned long e) const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }
  // Lexicographic on (a, b); only used for canonical ordering in containers.
  bool operator<(const Coeff& o) const;

  // "a + b*v" with rationals printed as p or p/r; zero parts omitted.
  std::string to_string() const;

 private:
  void check_same_q(const Coeff& o) const;
  Rat a_, b_;
  long q_;
};

// Quantum integer [n] = (v^n - v^-n)/(v - v^-1) = v^(n-1) + v^(n-3) + ... ;
// [-n] = -[n].
Coeff qnum(long n, long q);
// [n]! = [1][2]...[n], n >= 0.
Coeff qfact(long n, long q);
// Gaussian binomial [n choose k] evaluated in Q[v]/(v^2 - q).
Coeff qbinom(long n, long k, long q);

}  // namespace hallp1
