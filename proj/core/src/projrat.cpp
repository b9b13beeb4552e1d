#include "hbk/projrat.hpp"

#include <limits>
#include <ostream>

namespace hbk {

namespace {

Int int_abs(Int v) { return v < 0 ? -v : v; }

Int int_gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string digits;
  while (v != 0) {
    Int d = v % 10;
    if (d < 0) d = -d;
    digits.push_back(static_cast<char>('0' + static_cast<int>(d)));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

long long to_int64(Int v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw OverflowError("value does not fit in 64 bits");
  return static_cast<long long>(v);
}

ProjRat::ProjRat(Int n, Int d) {
  if (n == 0 && d == 0) throw std::domain_error("0/0 is not a projective rational");
  if (d == 0) {
    num_ = 1;
    den_ = 0;
    return;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  Int g = int_gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

bool operator<(const ProjRat& a, const ProjRat& b) {
  // Cross-multiplication; valid with den >= 0 and the single point inf.
  return checked_mul(a.num(), b.den()) < checked_mul(b.num(), a.den());
}

ProjRat operator+(const ProjRat& a, const ProjRat& b) {
  if (a.is_infinite() && b.is_infinite()) throw std::domain_error("inf + inf is indeterminate");
  if (a.is_infinite() || b.is_infinite()) return ProjRat::infinity();
  return ProjRat(checked_add(checked_mul(a.num(), b.den()), checked_mul(b.num(), a.den())),
                 checked_mul(a.den(), b.den()));
}

ProjRat operator-(const ProjRat& a, const ProjRat& b) { return a + negate(b); }

ProjRat operator*(const ProjRat& a, const ProjRat& b) {
  if ((a.is_infinite() && b.num() == 0) || (b.is_infinite() && a.num() == 0))
    throw std::domain_error("0 * inf is indeterminate");
  return ProjRat(checked_mul(a.num(), b.num()), checked_mul(a.den(), b.den()));
}

ProjRat operator/(const ProjRat& a, const ProjRat& b) { return a * invert(b); }

ProjRat invert(const ProjRat& x) { return ProjRat(x.den(), x.num()); }

ProjRat negate(const ProjRat& x) { return ProjRat(checked_neg(x.num()), x.den()); }

ProjRat add_int(const ProjRat& x, Int k) {
  return ProjRat(checked_add(x.num(), checked_mul(k, x.den())), x.den());
}

ProjRat abs(const ProjRat& x) { return x.num() < 0 ? negate(x) : x; }

ProjRat mod_one(const ProjRat& x) {
  if (x.is_infinite()) throw std::domain_error("mod_one(inf) is undefined");
  Int r = x.num() % x.den();
  if (r < 0) r += x.den();
  return ProjRat(r, x.den());
}

ProjRat cf_eval(std::span<const long long> coeffs) {
  ProjRat v = ProjRat::infinity();
  for (long long a : coeffs) v = add_int(invert(v), a);
  return v;
}

std::ostream& operator<<(std::ostream& os, const ProjRat& x) { return os << to_string(x); }

std::string to_string(const ProjRat& x) {
  if (x.is_infinite()) return "inf";
  if (x.is_integer()) return to_string(x.num());
  return to_string(x.num()) + "/" + to_string(x.den());
}

}  // namespace hbk
