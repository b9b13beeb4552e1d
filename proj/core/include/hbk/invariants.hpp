#pragma once

#include <variant>

#include "hbk/emknot.hpp"
#include "hbk/projrat.hpp"
#include "hbk/tangle.hpp"

namespace hbk {

enum class Direction { Horizontal, Vertical };

// The mod-Z slope of a rational tangle R(a_1,...,a_n):
//   horizontal: (-1)^n [a_n,...,a_1]^{-1},  vertical: (-1)^n [a_{n-1},...,a_1]^{-1},
// reduced into [0,1).  The tangle must be nonempty, and the value before
// reduction must be finite; an infinite value indicates a degenerate input.
ProjRat slope_mod_one(const RationalTangle& t, Direction dir);

// Closed forms for the horizontal/vertical determinants of the tangles A and
// B (orders of first homology after surgery along the lifted loops):
//   dh_a = -l*lambda*phi + 4pn - 1,  dv_a = lambda*phi,
//   dh_b = 2 - 4n + l*lambda,        dv_b = lambda,
// each correct up to sign.
struct EmDeterminants {
  Int dh_a;
  Int dv_a;
  Int dh_b;
  Int dv_b;
};

EmDeterminants em_determinants(const EMParams& q);

// The 4x4 linking-matrix determinants behind dh_a, dh_b and the numerator of
// the characteristic slope r_c, evaluated exactly by cofactor expansion.
// These are the independent oracle for the closed forms above.
enum class MontesinosKind { HorizontalA, HorizontalB, RcNumerator };

Int montesinos_det(MontesinosKind kind, const EMParams& q);

// Signed horizontal slopes of A and B:
//   r_h^A = -lambda*phi - 1/l,  r_h^B = (2-4n+l*lambda)/(2p-1-l*phi).
// The sign determination needs |l| > 2 and |delta| > 2; other inputs throw.
struct HorizontalSlopes {
  ProjRat a;
  ProjRat b;
};

HorizontalSlopes horizontal_slopes(const EMParams& q);

// Signed vertical slopes, valid for every admissible tuple:
//   r_v^A = -lambda*phi,  r_v^B = -lambda/phi.
struct VerticalSlopes {
  ProjRat a;
  ProjRat b;
};

VerticalSlopes vertical_slopes(const EMParams& q);

// Slopes and magnitude data of one tangle in a single record; the d_* and
// beta_* fields hold the closed-form magnitudes the reduced slope must
// reproduce.  Signed slopes need the |l| > 2, |delta| > 2 regime.
struct TangleSlopeRecord {
  ProjRat r_h;
  ProjRat r_v;
  Int d_h;
  Int d_v;
  Int beta_h;
  Int beta_v;
};

enum class EmTangleName { A, B };

TangleSlopeRecord tangle_slope_record(EmTangleName name, const EMParams& q);

// The complete invariant: slopes of the characteristic annuli.  A knot with
// an asymmetric exterior carries the two annulus slopes (r_a, r_b); a knot
// with a left form carries the slope pair (r1, r2) of its unique
// non-separating annulus plus the characteristic slope r_c.
struct TypeMSlopes {
  ProjRat r_a;
  ProjRat r_b;
};

struct TypeKSlopes {
  ProjRat r1;
  ProjRat r2;
  ProjRat r_c;
};

using SlopeData = std::variant<TypeMSlopes, TypeKSlopes>;

// r_a, r_b come from the specialized closed forms
//   p = 0:  ( (lm*lambda - 1)/l,  ((4n-2)(lm-1) + l)/(lm-1) )
//   n = 0:  ( (l(2m-1)*phi - 1)/l,  (-2(lm-1) + l)/delta )
// and the left invariants from r1 = -lambda*phi, r2 = -lambda/phi,
// r_c = -4*phi/lambda, evaluated on the canonical left presentation.
SlopeData characteristic_slopes(const HandlebodyKnot& hk);

// Diagnostic value l/(lm-1), the fraction of R(-l,m,0); only its estimates
// enter the exterior-classification arguments.
ProjRat rb_tilde(const EMParams& q);

bool slopes_equal(const SlopeData& a, const SlopeData& b);

}  // namespace hbk
