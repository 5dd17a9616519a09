#include "hallp1/coeff.hpp"

#include <sstream>
#include <stdexcept>

namespace hallp1 {

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("rat_pow: 0 to negative power");
    return rat_pow(1 / base, -exp);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(exp));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(exp));
  return r;  // base was canonical, so num^e/den^e is canonical
}

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool denominator_is_q_power(const Rat& x, long q) {
  Int den = x.get_den();
  while (den % q == 0) den /= q;
  return den == 1;
}

Coeff::Coeff(Rat a, Rat b, long q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
  if (!is_prime(q)) throw std::invalid_argument("Coeff: q must be prime");
}

Coeff Coeff::v_pow(long k, long q) {
  long half = (k >= 0) ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
  Rat qh = rat_pow(Rat(q), half);
  if (k % 2 == 0) return Coeff(qh, Rat(0), q);
  return Coeff(Rat(0), qh, q);  // v^(2h+1) = q^h * v
}

bool Coeff::is_ztilde() const {
  return denominator_is_q_power(a_, q_) && denominator_is_q_power(b_, q_);
}

bool Coeff::is_integer() const { return b_ == 0 && a_.get_den() == 1; }

Int Coeff::as_integer() const {
  if (!is_integer()) throw std::invalid_argument("Coeff::as_integer: not an integer");
  return a_.get_num();
}

void Coeff::check_same_q(const Coeff& o) const {
  if (q_ != o.q_) throw std::invalid_argument("Coeff: mixed ground fields");
}

Coeff Coeff::operator+(const Coeff& o) const {
  check_same_q(o);
  return Coeff(a_ + o.a_, b_ + o.b_, q_);
}

Coeff Coeff::operator-(const Coeff& o) const {
  check_same_q(o);
  return Coeff(a_ - o.a_, b_ - o.b_, q_);
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_same_q(o);
  // (a + bv)(c + dv) = ac + bd q + (ad + bc) v
  return Coeff(a_ * o.a_ + b_ * o.b_ * q_, a_ * o.b_ + b_ * o.a_, q_);
}

Coeff Coeff::inv() const {
  Rat norm = a_ * a_ - b_ * b_ * q_;
  // norm = 0 forces a = b = 0: q prime is not a rational square.
  if (norm == 0) throw std::invalid_argument("Coeff::inv: zero element");
  return Coeff(a_ / norm, -b_ / norm, q_);
}

Coeff Coeff::pow(unsigned long e) const {
  Coeff r = Coeff::one(q_), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool Coeff::operator==(const Coeff& o) const {
  check_same_q(o);
  return a_ == o.a_ && b_ == o.b_;
}

bool Coeff::operator<(const Coeff& o) const {
  check_same_q(o);
  int c = cmp(a_, o.a_);
  if (c != 0) return c < 0;
  return cmp(b_, o.b_) < 0;
}

namespace {
std::string rat_str(const Rat& r) { return r.get_str(); }
}  // namespace

std::string Coeff::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (a_ != 0) {
    os << rat_str(a_);
    if (b_ > 0)
      os << " + " << (b_ == 1 ? std::string("v") : rat_str(b_) + "*v");
    else if (b_ < 0)
      os << " - " << (b_ == -1 ? std::string("v") : rat_str(-b_) + "*v");
  } else {
    if (b_ == 1)
      os << "v";
    else if (b_ == -1)
      os << "-v";
    else
      os << rat_str(b_) << "*v";
  }
  return os.str();
}

Coeff qnum(long n, long q) {
  if (n < 0) return -qnum(-n, q);
  Coeff r = Coeff::zero(q);
  for (long k = n - 1; k >= 1 - n; k -= 2) r += Coeff::v_pow(k, q);
  return r;
}

Coeff qfact(long n, long q) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  Coeff r = Coeff::one(q);
  for (long a = 2; a <= n; ++a) r *= qnum(a, q);
  return r;
}

Coeff qbinom(long n, long k, long q) {
  if (k < 0 || k > n) return Coeff::zero(q);
  return qfact(n, q) / (qfact(k, q) * qfact(n - k, q));
}

}  // namespace hallp1
