#include "hbk/invariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hbk {

ProjRat slope_mod_one(const RationalTangle& t, Direction dir) {
  if (t.empty()) throw std::invalid_argument("mod-Z slope needs a nonempty tangle");
  std::vector<long long> seq(t.coeffs());
  if (dir == Direction::Vertical) seq.pop_back();
  std::reverse(seq.begin(), seq.end());
  ProjRat r = invert(cf_eval(seq));
  if (t.size() % 2 == 1) r = negate(r);
  if (r.is_infinite())
    throw std::domain_error("mod-Z slope of " + to_string(t) + " is infinite");
  return mod_one(r);
}

EmDeterminants em_determinants(const EMParams& q) {
  DerivedQuantities d = derived(q);
  const Int l = q.l, n = q.n, p = q.p;
  EmDeterminants out;
  out.dh_a = checked_sub(checked_add(checked_mul(checked_mul(-l, d.lambda), d.phi),
                                     checked_mul(checked_mul(4, p), n)),
                         1);
  out.dv_a = checked_mul(d.lambda, d.phi);
  out.dh_b = checked_add(checked_sub(2, checked_mul(4, n)), checked_mul(l, d.lambda));
  out.dv_b = d.lambda;
  return out;
}

namespace {

using Matrix4 = std::array<std::array<Int, 4>, 4>;

Int det3(const std::array<std::array<Int, 3>, 3>& m) {
  Int a = checked_mul(m[0][0],
                      checked_sub(checked_mul(m[1][1], m[2][2]), checked_mul(m[1][2], m[2][1])));
  Int b = checked_mul(m[0][1],
                      checked_sub(checked_mul(m[1][0], m[2][2]), checked_mul(m[1][2], m[2][0])));
  Int c = checked_mul(m[0][2],
                      checked_sub(checked_mul(m[1][0], m[2][1]), checked_mul(m[1][1], m[2][0])));
  return checked_add(checked_sub(a, b), c);
}

Int det4(const Matrix4& m) {
  Int total = 0;
  for (int col = 0; col < 4; ++col) {
    std::array<std::array<Int, 3>, 3> minor{};
    for (int i = 1; i < 4; ++i) {
      int k = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == col) continue;
        minor[i - 1][k++] = m[i][j];
      }
    }
    Int term = checked_mul(m[0][col], det3(minor));
    total = (col % 2 == 0) ? checked_add(total, term) : checked_sub(total, term);
  }
  return total;
}

}  // namespace

Int montesinos_det(MontesinosKind kind, const EMParams& q) {
  DerivedQuantities d = derived(q);
  const Int l = q.l, m = q.m, n = q.n, p = q.p;
  const Int one_minus_2n = checked_sub(1, checked_mul(2, n));
  // Denominator entry of the companion tangle fraction (1-2n)/(2mn-m-n+1).
  const Int cq = checked_add(checked_sub(checked_sub(checked_mul(checked_mul(2, m), n), m), n), 1);
  switch (kind) {
    case MontesinosKind::HorizontalA:
      return det4({{{-2, 0, 0, 1},
                    {0, d.delta, 0, d.phi},
                    {0, 0, one_minus_2n, cq},
                    {1, 1, 1, 0}}});
    case MontesinosKind::HorizontalB:
      return det4({{{-2, 0, 0, 1},
                    {0, l, 0, 1},
                    {0, 0, one_minus_2n, cq},
                    {1, 1, 1, 0}}});
    case MontesinosKind::RcNumerator:
      return det4({{{-2, 0, 0, 1},
                    {0, 2, 0, 1},
                    {0, 0, checked_sub(checked_mul(2, p), 1), d.phi},
                    {1, 1, 1, 0}}});
  }
  throw std::invalid_argument("unknown matrix kind");
}

HorizontalSlopes horizontal_slopes(const EMParams& q) {
  DerivedQuantities d = derived(q);
  if (q.l == 2 || q.l == -2 || d.delta == 2 || d.delta == -2)
    throw std::invalid_argument(
        "signed horizontal slopes need |l| > 2 and |delta| > 2; got " + to_string(q));
  EmDeterminants dets = em_determinants(q);
  return HorizontalSlopes{
      ProjRat(dets.dh_a, q.l),
      ProjRat(dets.dh_b, checked_sub(checked_sub(checked_mul(2, Int(q.p)), 1),
                                     checked_mul(q.l, d.phi))),
  };
}

VerticalSlopes vertical_slopes(const EMParams& q) {
  DerivedQuantities d = derived(q);
  return VerticalSlopes{
      ProjRat(checked_neg(checked_mul(d.lambda, d.phi))),
      ProjRat(checked_neg(d.lambda), d.phi),
  };
}

TangleSlopeRecord tangle_slope_record(EmTangleName name, const EMParams& q) {
  DerivedQuantities d = derived(q);
  HorizontalSlopes h = horizontal_slopes(q);
  VerticalSlopes v = vertical_slopes(q);
  EmDeterminants dets = em_determinants(q);
  auto mag = [](Int x) { return x < 0 ? -x : x; };
  if (name == EmTangleName::A)
    return TangleSlopeRecord{h.a, v.a, mag(dets.dh_a), mag(dets.dv_a), mag(q.l), 1};
  return TangleSlopeRecord{h.b, v.b, mag(dets.dh_b), mag(dets.dv_b), mag(d.delta), mag(d.phi)};
}

SlopeData characteristic_slopes(const HandlebodyKnot& hk) {
  if (hk.side() == Side::Right && !admits_left_form(hk.params())) {
    const EMParams& q = hk.params();
    DerivedQuantities d = derived(q);
    const Int l = q.l, m = q.m, n = q.n;
    if (q.p == 0) {
      Int lm1 = d.delta0;  // lm - 1
      return TypeMSlopes{
          ProjRat(checked_sub(checked_mul(checked_mul(l, m), d.lambda), 1), l),
          ProjRat(checked_add(checked_mul(checked_sub(checked_mul(4, n), 2), lm1), l), lm1),
      };
    }
    Int two_m_1 = checked_sub(checked_mul(2, Int(q.m)), 1);
    return TypeMSlopes{
        ProjRat(checked_sub(checked_mul(checked_mul(l, two_m_1), d.phi), 1), l),
        ProjRat(checked_add(checked_mul(-2, d.delta0), l), d.delta),
    };
  }
  HandlebodyKnot canon = canonicalize(hk);
  DerivedQuantities d = derived(canon.params());
  return TypeKSlopes{
      ProjRat(checked_neg(checked_mul(d.lambda, d.phi))),
      ProjRat(checked_neg(d.lambda), d.phi),
      ProjRat(checked_mul(-4, d.phi), d.lambda),
  };
}

ProjRat rb_tilde(const EMParams& q) {
  return ProjRat(q.l, checked_sub(checked_mul(Int(q.l), Int(q.m)), 1));
}

bool slopes_equal(const SlopeData& a, const SlopeData& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<TypeMSlopes>(a)) {
    const auto& x = std::get<TypeMSlopes>(a);
    const auto& y = std::get<TypeMSlopes>(b);
    // The two annuli are not labeled: compare as an unordered pair.
    return (x.r_a == y.r_a && x.r_b == y.r_b) || (x.r_a == y.r_b && x.r_b == y.r_a);
  }
  const auto& x = std::get<TypeKSlopes>(a);
  const auto& y = std::get<TypeKSlopes>(b);
  return x.r_c == y.r_c;
}

}  // namespace hbk
