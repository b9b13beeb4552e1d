#include <doctest.h>

#include <random>

#include "hbk/projrat.hpp"

using hbk::cf_eval;
using hbk::Int;
using hbk::mod_one;
using hbk::ProjRat;

namespace {

bool canonical(const ProjRat& x) {
  if (x.den() == 0) return x.num() == 1;
  if (x.den() < 0) return false;
  Int a = x.num() < 0 ? -x.num() : x.num(), b = x.den();
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return x.num() == 0 ? x.den() == 1 : a == 1;
}

ProjRat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 30);
  return ProjRat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("continued fraction evaluation") {
  CHECK(cf_eval({1, -3}) == ProjRat(-2));
  CHECK(cf_eval({}) == ProjRat::infinity());
  CHECK(cf_eval({-1, 2, 0, 2, 0}) == ProjRat(1, 3));
  CHECK(cf_eval({3, 0}) == ProjRat(1, 3));
  CHECK(cf_eval({3}) == ProjRat(3));
  // fractions with an infinite intermediate value
  CHECK(cf_eval({0, -2, 1, -3}) == ProjRat(-2));
}

TEST_CASE("continued fraction fold property") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 10), coeff(-9, 9);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<long long> seq(static_cast<std::size_t>(len(rng)));
    for (auto& a : seq) a = coeff(rng);
    std::vector<long long> prefix(seq.begin(), seq.end() - 1);
    CHECK(cf_eval(seq) == add_int(invert(cf_eval(prefix)), seq.back()));
  }
}

TEST_CASE("inversion and negation") {
  CHECK(invert(ProjRat(1, 3)) == ProjRat(3));
  CHECK(invert(ProjRat::infinity()) == ProjRat(0));
  CHECK(invert(ProjRat(0)) == ProjRat::infinity());
  CHECK(invert(ProjRat(-2, 7)) == ProjRat(-7, 2));
  CHECK(negate(ProjRat(4, 3)) == ProjRat(-4, 3));
  CHECK(negate(ProjRat::infinity()) == ProjRat::infinity());

  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    ProjRat x = random_rat(rng);
    CHECK(invert(invert(x)) == x);
    CHECK(negate(negate(x)) == x);
  }
}

TEST_CASE("integer shift") {
  CHECK(add_int(ProjRat(1, 3), 2) == ProjRat(7, 3));
  CHECK(add_int(ProjRat::infinity(), 5) == ProjRat::infinity());
}

TEST_CASE("mod_one") {
  CHECK(mod_one(ProjRat(29, 3)) == ProjRat(2, 3));
  CHECK(mod_one(ProjRat(-1, 3)) == ProjRat(2, 3));
  CHECK(mod_one(ProjRat(7)) == ProjRat(0));
  CHECK_THROWS_AS(mod_one(ProjRat::infinity()), std::domain_error);

  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 300; ++iter) {
    ProjRat x = random_rat(rng), y = random_rat(rng);
    ProjRat diff = x - y;
    CHECK((mod_one(x) == mod_one(y)) == diff.is_integer());
  }
}

TEST_CASE("canonical form is preserved by every operation") {
  CHECK_THROWS_AS(ProjRat(0, 0), std::domain_error);
  CHECK(ProjRat(2, -4) == ProjRat(-1, 2));
  CHECK(ProjRat(-3, 0) == ProjRat::infinity());

  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 500; ++iter) {
    ProjRat x = random_rat(rng), y = random_rat(rng);
    for (const ProjRat& v : {x + y, x - y, x * y, invert(x), negate(x), mod_one(x)})
      CHECK(canonical(v));
    if (!(y == ProjRat(0))) CHECK(canonical(x / y));
  }
}

TEST_CASE("ordering") {
  CHECK(ProjRat(1, 3) < ProjRat(1, 2));
  CHECK(ProjRat(-7, 2) < ProjRat(-1, 3));
  CHECK(ProjRat(5) < ProjRat::infinity());
  CHECK(ProjRat(-1000) < ProjRat::infinity());
  CHECK(abs(ProjRat(-9, 4)) >= ProjRat(9, 4));
}

TEST_CASE("overflow is detected, never wrapped") {
  Int big = Int(1) << 126;
  CHECK_THROWS_AS(hbk::checked_mul(big, 4), hbk::OverflowError);
  CHECK_THROWS_AS(hbk::checked_add(big + (big - 1), big), hbk::OverflowError);

  // Huge coefficients drive the numerators past 128 bits within a few steps.
  std::vector<long long> huge(4, 9'000'000'000'000'000'000LL);
  CHECK_THROWS_AS(cf_eval(huge), hbk::OverflowError);

  CHECK_THROWS_AS(hbk::to_int64(big), hbk::OverflowError);
  CHECK(hbk::to_int64(Int(-42)) == -42);
}

TEST_CASE("int128 decimal rendering") {
  CHECK(hbk::to_string(Int(0)) == "0");
  CHECK(hbk::to_string(Int(-1234)) == "-1234");
  CHECK(hbk::to_string(ProjRat(-7, 2)) == "-7/2");
  CHECK(hbk::to_string(ProjRat(5)) == "5");
  CHECK(hbk::to_string(ProjRat::infinity()) == "inf");
}
