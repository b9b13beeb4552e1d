#include "hbk/emknot.hpp"

namespace hbk {

const char* to_string(Side s) { return s == Side::Right ? "R" : "L"; }

std::string to_string(const EMParams& q) {
  return "(" + std::to_string(q.l) + "," + std::to_string(q.m) + "," + std::to_string(q.n) +
         "," + std::to_string(q.p) + ")";
}

const char* clause_text(Clause c) {
  switch (c) {
    case Clause::ProductZero: return "np=0";
    case Clause::LRange: return "l≠0,±1";
    case Clause::MNonzero: return "m≠0";
    case Clause::LmPair: return "(l,m)≠(±2,±1)";
    case Clause::MnPair: return "(m,n)≠(1,0),(-1,1)";
    case Clause::MRange: return "m≠0,1";
    case Clause::LmpTriple: return "(l,m,p)≠(2,2,1),(-2,-1,0)";
  }
  return "?";
}

std::vector<Clause> violated_clauses(const EMParams& q) {
  std::vector<Clause> out;
  if (q.n * q.p != 0) {
    out.push_back(Clause::ProductZero);
    return out;
  }
  if (q.l == 0 || q.l == 1 || q.l == -1) out.push_back(Clause::LRange);
  if (q.p == 0) {
    if (q.m == 0) out.push_back(Clause::MNonzero);
    if ((q.l == 2 && q.m == 1) || (q.l == -2 && q.m == -1)) out.push_back(Clause::LmPair);
    if ((q.m == 1 && q.n == 0) || (q.m == -1 && q.n == 1)) out.push_back(Clause::MnPair);
  } else {
    if (q.m == 0 || q.m == 1) out.push_back(Clause::MRange);
    if ((q.l == 2 && q.m == 2 && q.p == 1) || (q.l == -2 && q.m == -1 && q.p == 0))
      out.push_back(Clause::LmpTriple);
  }
  return out;
}

bool is_valid(const EMParams& q) { return violated_clauses(q).empty(); }

std::vector<Clause> violated_clauses_left(long long m, long long n, long long p) {
  std::vector<Clause> out;
  if (n * p != 0) {
    out.push_back(Clause::ProductZero);
    return out;
  }
  if (p == 0) {
    if (m == 0) out.push_back(Clause::MNonzero);
    if ((m == 1 && n == 0) || (m == -1 && n == 1)) out.push_back(Clause::MnPair);
  } else {
    if (m == 0 || m == 1) out.push_back(Clause::MRange);
  }
  return out;
}

namespace {

std::string clause_list(const std::vector<Clause>& clauses) {
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i) out += ", ";
    out += clause_text(clauses[i]);
  }
  return out;
}

}  // namespace

InvalidKnotError::InvalidKnotError(const EMParams& q, std::vector<Clause> clauses)
    : std::invalid_argument("parameters " + to_string(q) +
                            " violate: " + clause_list(clauses)),
      clauses_(std::move(clauses)) {}

DerivedQuantities derived(const EMParams& q) {
  const Int l = q.l, m = q.m, n = q.n, p = q.p;
  DerivedQuantities d;
  d.lambda = checked_add(checked_sub(checked_mul(checked_mul(4, m), n), checked_mul(2, m)), 1);
  d.phi = checked_sub(checked_sub(checked_mul(checked_mul(2, p), m), p), m);
  Int lm = checked_mul(l, m);
  d.delta = checked_sub(
      checked_add(checked_add(checked_mul(checked_mul(-2, lm), p), lm),
                  checked_add(checked_mul(l, p), checked_mul(2, p))),
      1);
  d.lambda0 = 1 - 2 * static_cast<Int>(q.m);
  d.phi0 = -static_cast<Int>(q.m);
  d.delta0 = checked_sub(lm, 1);
  return d;
}

bool admits_left_form(const EMParams& q) {
  if (q.l == 2 || q.l == -2) return true;
  Int delta = derived(q).delta;
  return delta == 2 || delta == -2;
}

long long left_placeholder(long long m, long long n, long long p) {
  if (is_valid({3, m, n, p})) return 3;
  for (long long a = 2;; ++a) {
    if (is_valid({a, m, n, p})) return a;
    if (is_valid({-a, m, n, p})) return -a;
  }
}

HandlebodyKnot::HandlebodyKnot(Side side, const EMParams& params)
    : side_(side), params_(params) {
  auto clauses = violated_clauses(params);
  if (!clauses.empty()) throw InvalidKnotError(params, std::move(clauses));
}

HandlebodyKnot HandlebodyKnot::left(long long m, long long n, long long p) {
  auto clauses = violated_clauses_left(m, n, p);
  if (!clauses.empty()) throw InvalidKnotError({0, m, n, p}, std::move(clauses));
  return HandlebodyKnot(Side::Left, {left_placeholder(m, n, p), m, n, p});
}

std::string to_string(const HandlebodyKnot& hk) {
  if (hk.side() == Side::Left)
    return "L(*," + std::to_string(hk.params().m) + "," + std::to_string(hk.params().n) + "," +
           std::to_string(hk.params().p) + ")";
  return std::string("R") + to_string(hk.params());
}

namespace {

// Rebuilds a knot after an identity rewrite; an invalid image would falsify
// the encoding, so it surfaces as logic_error, never as a user-input error.
HandlebodyKnot rebuilt(Side side, const EMParams& q, const char* move) {
  auto clauses = violated_clauses(q);
  if (!clauses.empty())
    throw std::logic_error(std::string(move) + " produced inadmissible parameters " +
                           to_string(q));
  return HandlebodyKnot(side, q);
}

}  // namespace

EMParams mirror_params(const EMParams& q) {
  if (q.p == 0) return {-q.l, -q.m, 1 - q.n, 0};
  return {-q.l, 1 - q.m, 0, 1 - q.p};
}

HandlebodyKnot mirror(const HandlebodyKnot& hk) {
  return rebuilt(hk.side(), mirror_params(hk.params()), "mirror");
}

HandlebodyKnot horizontal_flip(const HandlebodyKnot& hk) {
  const EMParams& q = hk.params();
  if (q.p != 0 || (q.m != 1 && q.m != -1))
    throw std::invalid_argument("horizontal flip requires p = 0 and m = ±1");
  long long s = q.m;  // ±1
  return rebuilt(hk.side(), {-q.l + s, q.m, q.n, 0}, "horizontal-flip");
}

std::vector<EMParams> mirror_images(const EMParams& q) {
  std::vector<EMParams> out;
  if (q.p == 0) out.push_back({-q.l, -q.m, 1 - q.n, 0});
  if (q.n == 0) {
    EMParams img{-q.l, 1 - q.m, 0, 1 - q.p};
    if (out.empty() || !(out.front() == img)) out.push_back(img);
  }
  return out;
}

namespace {

// Enumerates each rotation identity instance applicable to q (the pattern,
// forwards or backwards) as a (source, image) pair.  A left knot accepts any
// pattern l whose completed source tuple is admissible.
std::vector<std::pair<EMParams, EMParams>> rotation_matches(Side side, const EMParams& q) {
  std::vector<std::pair<EMParams, EMParams>> out;
  auto consider = [&](long long pattern_l, const EMParams& image) {
    EMParams source{pattern_l, q.m, q.n, q.p};
    if (side == Side::Right && q.l != pattern_l) return;
    if (!is_valid(source)) return;
    for (const auto& seen : out)
      if (seen.second == image) return;
    out.push_back({source, image});
  };
  // (2,m,n,0) <-> (2,1-m,0,n)
  if (q.p == 0) consider(2, {2, 1 - q.m, 0, q.n});
  if (q.n == 0) consider(2, {2, 1 - q.m, q.p, 0});
  // (-2,m,n,0) <-> (-2,-m,0,n)
  if (q.p == 0) consider(-2, {-2, -q.m, 0, q.n});
  if (q.n == 0) consider(-2, {-2, -q.m, q.p, 0});
  // (3,1,n,0) <-> (-2,-1,0,n), both directions
  if (q.p == 0 && q.m == 1) consider(3, {-2, -1, 0, q.n});
  if (q.n == 0 && q.m == -1) consider(-2, {3, 1, q.p, 0});
  // (-3,-1,n,0) <-> (2,2,0,n), both directions
  if (q.p == 0 && q.m == -1) consider(-3, {2, 2, 0, q.n});
  if (q.n == 0 && q.m == 2) consider(2, {-3, -1, q.p, 0});
  return out;
}

}  // namespace

std::vector<HandlebodyKnot> rotation_images(const HandlebodyKnot& hk) {
  std::vector<HandlebodyKnot> out;
  for (const auto& match : rotation_matches(hk.side(), hk.params()))
    out.push_back(rebuilt(other_side(hk.side()), match.second, "rotation"));
  return out;
}

HandlebodyKnot rotate(const HandlebodyKnot& hk) {
  auto images = rotation_images(hk);
  if (images.empty())
    throw std::invalid_argument("no rotation identity matches " + to_string(hk.params()));
  return images.front();
}

std::vector<HandlebodyKnot> double_mirror_images(const HandlebodyKnot& hk) {
  std::vector<HandlebodyKnot> out;
  for (const EMParams& mid : mirror_images(hk.params())) {
    if (!is_valid(mid))
      throw std::logic_error("mirror produced inadmissible parameters " + to_string(mid));
    for (const EMParams& img : mirror_images(mid)) {
      HandlebodyKnot knot = rebuilt(hk.side(), img, "double-mirror");
      if (knot == hk) continue;
      bool seen = false;
      for (const auto& k : out) seen = seen || k == knot;
      if (!seen) out.push_back(knot);
    }
  }
  return out;
}

HandlebodyKnot canonicalize(const HandlebodyKnot& hk) {
  if (hk.side() == Side::Left) return hk;
  const EMParams& q = hk.params();
  if (!admits_left_form(q)) return hk;  // asymmetric exterior: already canonical

  auto images = rotation_images(hk);
  if (!images.empty()) return images.front();

  // Remaining shape: n = 0, delta = ±2 and l != ±2, which forces p = 1
  // (away from p = 0, 1 the delta estimate gives |delta| >= 9).  The double
  // mirror reaches the equivalent p = 0 presentation (l,m-1,1,0), which the
  // rotation identities cover.
  if (q.n == 0 && q.p == 1) {
    HandlebodyKnot shifted = rebuilt(hk.side(), {q.l, q.m - 1, 1, 0}, "double-mirror");
    auto shifted_images = rotation_images(shifted);
    if (shifted_images.empty() || shifted_images.front().side() != Side::Left)
      throw std::logic_error("canonicalize failed to reach a left form from " + to_string(q));
    return shifted_images.front();
  }
  throw std::logic_error("left-form knot " + to_string(q) + " matched no rewrite");
}

std::vector<EMParams> valid_params_in_box(int bound) {
  std::vector<EMParams> out;
  const long long b = bound;
  for (long long l = -b; l <= b; ++l)
    for (long long m = -b; m <= b; ++m) {
      for (long long n = -b; n <= b; ++n) {
        EMParams q{l, m, n, 0};
        if (is_valid(q)) out.push_back(q);
      }
      for (long long p = -b; p <= b; ++p) {
        if (p == 0) continue;
        EMParams q{l, m, 0, p};
        if (is_valid(q)) out.push_back(q);
      }
    }
  return out;
}

std::vector<HandlebodyKnot> left_knots_in_box(int bound) {
  std::vector<HandlebodyKnot> out;
  const long long b = bound;
  for (long long m = -b; m <= b; ++m) {
    for (long long n = -b; n <= b; ++n)
      if (violated_clauses_left(m, n, 0).empty()) out.push_back(HandlebodyKnot::left(m, n, 0));
    for (long long p = -b; p <= b; ++p) {
      if (p == 0) continue;
      if (violated_clauses_left(m, 0, p).empty()) out.push_back(HandlebodyKnot::left(m, 0, p));
    }
  }
  return out;
}

}  // namespace hbk
