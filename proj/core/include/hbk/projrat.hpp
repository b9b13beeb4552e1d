#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbk {

// 128-bit signed integers back all exact arithmetic.  Box sweeps and the
// determinant/slope products they generate stay far below 2^127, but every
// operation is still overflow-checked: a wrapped product would silently
// poison a verification run, so wrapping is never allowed.
using Int = __int128;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

std::string to_string(Int v);

// Throws OverflowError if v does not fit in int64.
long long to_int64(Int v);

// A point of the projective rational line Q ∪ {inf}, kept in canonical form:
//   gcd(|num|, den) = 1,  den >= 0,  den = 0  =>  num = 1  (the point inf).
// Equality is plain field equality on the canonical form.
class ProjRat {
 public:
  ProjRat() : num_(0), den_(1) {}
  ProjRat(Int n) : num_(n), den_(1) {}
  ProjRat(Int n, Int d);  // reduces; throws std::domain_error on 0/0

  static ProjRat infinity() { return ProjRat(1, 0); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const ProjRat& a, const ProjRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Int num_;
  Int den_;
};

// Total order used for set keys and the cross-multiplied estimate checks;
// inf compares greater than every finite value.
bool operator<(const ProjRat& a, const ProjRat& b);
inline bool operator>(const ProjRat& a, const ProjRat& b) { return b < a; }
inline bool operator<=(const ProjRat& a, const ProjRat& b) { return !(b < a); }
inline bool operator>=(const ProjRat& a, const ProjRat& b) { return !(a < b); }

// Field operations, extended projectively.  Indeterminate combinations
// (inf + inf, 0 * inf, inf / inf, 0 / 0) throw std::domain_error; they never
// arise from the slope formulas.
ProjRat operator+(const ProjRat& a, const ProjRat& b);
ProjRat operator-(const ProjRat& a, const ProjRat& b);
ProjRat operator*(const ProjRat& a, const ProjRat& b);
ProjRat operator/(const ProjRat& a, const ProjRat& b);

ProjRat invert(const ProjRat& x);  // invert(inf) = 0, invert(0) = inf
ProjRat negate(const ProjRat& x);  // -inf = inf
ProjRat add_int(const ProjRat& x, Int k);
ProjRat abs(const ProjRat& x);

// The representative of x + Z in [0, 1); rejects inf.  Slopes handled here
// are always finite, so an infinite argument indicates a bug upstream.
ProjRat mod_one(const ProjRat& x);

// Value of the continued fraction
//   [a_1, ..., a_n] = a_n + 1/(a_{n-1} + 1/(... + 1/a_1)),
// computed as the fold v_k = a_k + 1/v_{k-1} from v_0 = inf.  The empty
// sequence therefore evaluates to inf, whose inverse is 0.
ProjRat cf_eval(std::span<const long long> coeffs);
inline ProjRat cf_eval(std::initializer_list<long long> coeffs) {
  return cf_eval(std::span<const long long>(coeffs.begin(), coeffs.size()));
}

std::string to_string(const ProjRat& x);
std::ostream& operator<<(std::ostream& os, const ProjRat& x);

}  // namespace hbk
