#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hbk/projrat.hpp"

namespace hbk {

enum class Side { Right, Left };

inline Side other_side(Side s) { return s == Side::Right ? Side::Left : Side::Right; }
const char* to_string(Side s);  // "R" / "L"

// The parameter quadruple of the knot family K(l,m,n,p); a knot requires
// n*p = 0, and admissibility additionally requires the clause list below.
struct EMParams {
  long long l = 0;
  long long m = 0;
  long long n = 0;
  long long p = 0;
  friend bool operator==(const EMParams&, const EMParams&) = default;
};

std::string to_string(const EMParams& q);

enum class Clause {
  ProductZero,  // np = 0
  LRange,       // l != 0, ±1
  MNonzero,     // m != 0                          (p = 0 branch)
  LmPair,       // (l,m) != (2,1), (-2,-1)         (p = 0 branch)
  MnPair,       // (m,n) != (1,0), (-1,1)          (p = 0 branch)
  MRange,       // m != 0, 1                       (n = 0, p != 0 branch)
  LmpTriple,    // (l,m,p) != (2,2,1), (-2,-1,0)   (n = 0, p != 0 branch)
};

const char* clause_text(Clause c);

// Admissibility per the hyperbolic/non-integral-surgery criterion.  The two
// constraint branches overlap at n = p = 0; there the p = 0 clause set
// applies (it already subsumes m != 1 through the (m,n) pair clause).
std::vector<Clause> violated_clauses(const EMParams& q);
bool is_valid(const EMParams& q);

// The clauses not involving l.  A left handlebody-knot is admissible iff
// these pass: some completing l always exists (l = 3 works).
std::vector<Clause> violated_clauses_left(long long m, long long n, long long p);

class InvalidKnotError : public std::invalid_argument {
 public:
  InvalidKnotError(const EMParams& q, std::vector<Clause> clauses);
  const std::vector<Clause>& clauses() const { return clauses_; }

 private:
  std::vector<Clause> clauses_;
};

// The integer polynomials governing every slope formula, with their one-sided
// specializations (lambda0 at n = 0; phi0, delta0 at p = 0).
struct DerivedQuantities {
  Int lambda;   // 4mn - 2m + 1
  Int phi;      // 2pm - p - m
  Int delta;    // -2lmp + lm + lp + 2p - 1
  Int lambda0;  // -2m + 1
  Int phi0;     // -m
  Int delta0;   // ml - 1
};

DerivedQuantities derived(const EMParams& q);

// A right knot is equivalent to some left knot exactly when l = ±2 or
// delta = ±2; otherwise the two exterior pieces are genuinely asymmetric.
bool admits_left_form(const EMParams& q);

// The l stored for a left knot built from (m,n,p) alone.  The isotopy type of
// a left knot does not depend on l, but tangle-level oracles need a concrete
// value: 3 unless a clause excludes it, else the smallest |l| >= 2 that fits.
long long left_placeholder(long long m, long long n, long long p);

// One of the two genus-two handlebodies cut off by the incompressible
// twice-punctured torus in the exterior of K(l,m,n,p).  For side Left the
// stored l is a non-invariant placeholder: equality and every invariant
// ignore it.
class HandlebodyKnot {
 public:
  HandlebodyKnot(Side side, const EMParams& params);  // throws InvalidKnotError
  static HandlebodyKnot left(long long m, long long n, long long p);

  Side side() const { return side_; }
  const EMParams& params() const { return params_; }

  friend bool operator==(const HandlebodyKnot& a, const HandlebodyKnot& b) {
    if (a.side_ != b.side_) return false;
    if (a.side_ == Side::Left)
      return a.params_.m == b.params_.m && a.params_.n == b.params_.n &&
             a.params_.p == b.params_.p;
    return a.params_ == b.params_;
  }

 private:
  Side side_;
  EMParams params_;
};

std::string to_string(const HandlebodyKnot& hk);

// Mirror image:  (l,m,n,0) -> (-l,-m,1-n,0)  and  (l,m,0,p) -> (-l,1-m,0,1-p);
// the first map is used when p = 0.  Side is preserved.  The composition
// mirror∘mirror is the identity on parameters except across p = 1, where it
// lands on the equivalent presentation (l,m-1,1,0) of the same knot.
EMParams mirror_params(const EMParams& q);
HandlebodyKnot mirror(const HandlebodyKnot& hk);

// (±l,±1,n,0) -> (∓l±1,±1,n,0); requires p = 0 and m = ±1.  Side preserved.
HandlebodyKnot horizontal_flip(const HandlebodyKnot& hk);

// Both mirror parameter maps where they apply: the p = 0 map always comes
// first, and at n = p = 0 both maps apply, giving two images.
std::vector<EMParams> mirror_images(const EMParams& q);

// The side-swapping identities, matched forwards or backwards:
//   (2,m,n,0)   <->  (2,1-m,0,n)
//   (-2,m,n,0)  <->  (-2,-m,0,n)
//   (3,1,n,0)   <->  (-2,-1,0,n)
//   (-3,-1,n,0) <->  (2,2,0,n)
// A left knot is free in l, so every pattern with an admissible completion
// applies to it.  `rotate` applies the first match and swaps the side;
// it throws std::invalid_argument when nothing matches.
std::vector<HandlebodyKnot> rotation_images(const HandlebodyKnot& hk);
HandlebodyKnot rotate(const HandlebodyKnot& hk);

// Images of mirror∘mirror that differ from the argument.  Nontrivial images
// exist exactly when one mirror step crosses n = p = 0, where the two mirror
// maps disagree; each such image is an equivalent presentation of the same
// knot, e.g. (l,m,1,0) ~ (l,m+1,0,1).
std::vector<HandlebodyKnot> double_mirror_images(const HandlebodyKnot& hk);

// Left knots and right knots without a left form are returned unchanged;
// every other right knot is rewritten into an equivalent left presentation.
// A failure to match is a std::logic_error: it would falsify the encoding.
HandlebodyKnot canonicalize(const HandlebodyKnot& hk);

// All admissible tuples with max(|l|,|m|,|n|,|p|) <= bound, in a fixed
// deterministic order; and the admissible left knots over the same box.
std::vector<EMParams> valid_params_in_box(int bound);
std::vector<HandlebodyKnot> left_knots_in_box(int bound);

}  // namespace hbk
