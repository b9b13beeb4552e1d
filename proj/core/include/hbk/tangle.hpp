#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hbk/projrat.hpp"

namespace hbk {

// The rational tangle R(a_1, ..., a_n): two arcs in a ball built from
// alternating horizontal/vertical twist regions.  Tangles are classified by
// the continued fraction of their coefficient sequence, so equivalence is
// decided by fraction alone; no isotopy data is kept.
class RationalTangle {
 public:
  RationalTangle() = default;
  explicit RationalTangle(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<long long>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

 private:
  std::vector<long long> coeffs_;
};

ProjRat fraction(const RationalTangle& t);

bool equivalent(const RationalTangle& a, const RationalTangle& b);

// The twist-transfer move R(...,c,+2,d,...) = R(...,c+1,-2,d+1,...) and its
// sign-flipped twin, applied at coefficient position `index` (0-based).  The
// position must be interior and hold the coefficient 2*sign; the fraction of
// the result is unchanged.  Throws std::invalid_argument otherwise.
RationalTangle rewrite_two_twist(const RationalTangle& t, std::size_t index, int sign);

// The three tangles of the four-parameter construction:
//   A = R(l),  B = R(p,-2,m,-l),  C = R(-n,2,m-1,2,0).
struct EmTangles {
  RationalTangle a;
  RationalTangle b;
  RationalTangle c;
};

EmTangles em_tangles(long long l, long long m, long long n, long long p);

// Companion tangles entering the linking matrices of the determinant
// computation: B' = R(p,-2,m,0) and C' = R(n,-2,1-m,0).
RationalTangle em_tangle_b_prime(long long m, long long p);
RationalTangle em_tangle_c_prime(long long m, long long n);

// Parses the text form "R(a1,a2,...)"; whitespace-insensitive, negative
// coefficients allowed, "R()" is the empty tangle.  Throws
// std::invalid_argument on malformed input.
RationalTangle parse_tangle(std::string_view text);

std::string to_string(const RationalTangle& t);

}  // namespace hbk
