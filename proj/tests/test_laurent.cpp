#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vtx/laurent.hpp"

using namespace vtx;

namespace {

RatPoly mono_p(int e0, int e1, int e2, Rational c = 1) {
  return RatPoly::monomial(Multideg{e0, e1, e2}, c);
}

// x_b^{-1} delta-style sum:  sum_n (x_p sign x_q)^n x_b^{-n-1}, each factor
// expanded in nonnegative powers of x_q, with n restricted so that the
// x_b-exponent lands inside box[b].  An optional (-1)^n factor covers the
// negated-argument variants.
RatPoly delta_sum(Var p, Var q, Sign sign, Var b, const Box& box,
                  bool alt_sign = false) {
  RatPoly out;
  Window wq{0, box[q].hi};
  for (int n = -box[b].hi - 1; n <= -box[b].lo - 1; ++n) {
    RatPoly part = binom_expand(p, q, sign, n, wq);
    Rational f = (alt_sign && (n % 2 != 0)) ? Rational(-1) : Rational(1);
    out += part.mul_scalar_poly(RatPoly::monomial(mono(b, -n - 1), f));
  }
  return out.truncated(box);
}

RationalExpr rexpr(RatPoly g, long r, long s, long t, Var a, Var b,
                   Sign sign = Sign::minus) {
  RationalExpr e;
  e.g = std::move(g);
  e.r = r;
  e.s = s;
  e.t = t;
  e.a = a;
  e.b = b;
  e.sign = sign;
  return e;
}

RatPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> nterms(0, 6);
  RatPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p.add_term(Multideg{exp(rng), exp(rng), exp(rng)},
               Rational(num(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("coeff on expanded binomials and constants") {
  RatPoly b3 = binom_expand(Var::x1, Var::x2, Sign::plus, 3, Window{0, 8});
  CHECK(b3.coeff(Multideg{0, 2, 1}) == Rational(3));
  RatPoly five(Rational(5));
  CHECK(five.coeff(kZeroDeg) == Rational(5));
  CHECK(mono_p(0, 2, 0).coeff(Multideg{0, 3, 0}) == Rational(0));
}

TEST_CASE("residue picks the -1 coefficient") {
  CHECK(mono_p(0, -1, 0).residue(Var::x1) == RatPoly(Rational(1)));
  RatPoly p = mono_p(0, -2, 0, 3) + mono_p(0, -1, 0, 2) + mono_p(0, 1, 0);
  CHECK(p.residue(Var::x1) == RatPoly(Rational(2)));
  // Geometric series: iota_12(1/(x1-x2)) = sum_j x2^j x1^{-1-j}.
  Box box(Window{-8, 8});
  RatPoly geo = iota_expand(rexpr(RatPoly(Rational(1)), 0, 0, 1, Var::x1,
                                  Var::x2),
                            Var::x2, box);
  CHECK(geo.residue(Var::x1) == RatPoly(Rational(1)));
}

TEST_CASE("binom_expand basic shapes") {
  RatPoly sq = binom_expand(Var::x1, Var::x2, Sign::minus, 2, Window{0, 8});
  RatPoly want = mono_p(0, 2, 0) + mono_p(0, 1, 1, -2) + mono_p(0, 0, 2);
  CHECK(sq == want);

  RatPoly inv = binom_expand(Var::x1, Var::x2, Sign::minus, -1, Window{0, 2});
  RatPoly want_inv = mono_p(0, -1, 0) + mono_p(0, -2, 1) + mono_p(0, -3, 2);
  CHECK(inv == want_inv);

  RatPoly inv21 = binom_expand(Var::x2, Var::x1, Sign::minus, -1, Window{0, 1});
  RatPoly want21 = mono_p(0, 0, -1) + mono_p(0, 1, -2);
  CHECK(inv21 == want21);

  CHECK_THROWS(binom_expand(Var::x1, Var::x1, Sign::minus, 1, Window{0, 1}));
}

TEST_CASE("binom_expand back-multiplication oracle") {
  // (x1-x2)^{-n} * (x1-x2)^n == 1 on the certified part of the window.
  Window w{0, 10};
  RatPoly lin = binom_expand(Var::x1, Var::x2, Sign::minus, 1, w);
  for (long n = 1; n <= 4; ++n) {
    RatPoly inv = binom_expand(Var::x1, Var::x2, Sign::minus, -n, w);
    RatPoly prod = inv;
    for (long j = 0; j < n; ++j) prod = prod.mul_scalar_poly(lin);
    // Coefficients with x2-exponent <= 10 - n are exact.
    CHECK(prod.truncated(Var::x2, Window{0, 10 - static_cast<int>(n)}) ==
          RatPoly(Rational(1)));
  }
}

TEST_CASE("iota expansion examples") {
  Box box(Window{-8, 8});
  RationalExpr f = rexpr(RatPoly(Rational(1)), 0, 0, 1, Var::x1, Var::x2);
  RatPoly i12 = iota_expand(f, Var::x2, box);
  RatPoly i21 = iota_expand(f, Var::x1, box);
  RatPoly diff = i12 - i21;
  CHECK(diff.coeff(Multideg{0, 3, -4}) == Rational(1));
  // The difference is supported on x1^n x2^{-n-1} only.
  for (const auto& [d, c] : diff.terms()) {
    CHECK(d[1] + d[2] == -1);
    CHECK(c == Rational(1));
  }

  RationalExpr f2 = rexpr(RatPoly(Rational(1)), 0, 0, 2, Var::x1, Var::x2);
  CHECK(iota_expand(f2, Var::x2, box).coeff(Multideg{0, -3, 1}) ==
        Rational(2));

  // iota of a polynomial is the polynomial.
  RationalExpr poly = rexpr(mono_p(0, 2, 1) + mono_p(0, 0, 0, 7), 0, 0, 0,
                            Var::x1, Var::x2);
  RatPoly img = iota_expand(poly, Var::x2, box);
  CHECK(img == poly.g);
}

TEST_CASE("taylor_shift basics") {
  RatPoly x2sq = mono_p(0, 2, 0);
  RatPoly shifted = taylor_shift(x2sq, Var::x1, Var::x0, Window{0, 8});
  CHECK(shifted == mono_p(0, 2, 0) + mono_p(1, 1, 0, 2) + mono_p(2, 0, 0));

  RatPoly inv = taylor_shift(mono_p(0, -1, 0), Var::x1, Var::x0, Window{0, 3});
  RatPoly want = mono_p(0, -1, 0) + mono_p(1, -2, 0, -1) + mono_p(2, -3, 0) +
                 mono_p(3, -4, 0, -1);
  CHECK(inv == want);
  // (x1+x0) * result == 1 within the window.
  RatPoly lin = mono_p(0, 1, 0) + mono_p(1, 0, 0);
  CHECK(inv.mul_scalar_poly(lin).truncated(Var::x0, Window{0, 3}) ==
        RatPoly(Rational(1)));

  CHECK(taylor_shift(RatPoly(Rational(7)), Var::x1, Var::x0, Window{0, 2}) ==
        RatPoly(Rational(7)));
  CHECK_THROWS(taylor_shift(mono_p(1, 1, 0), Var::x1, Var::x0, Window{0, 2}));
}

TEST_CASE("taylor_shift composes like a sum of shifts") {
  // f(x1) shifted by x0 then x0 shifted by x2 equals f shifted by x0 with
  // x0 -> x0 + x2 substituted, on a box small enough for both to be exact.
  RatPoly f = mono_p(0, -2, 0, 3) + mono_p(0, 3, 0) + mono_p(0, -1, 0, -2);
  Window deep{0, 8};
  RatPoly once = taylor_shift(f, Var::x1, Var::x0, deep);
  RatPoly twice = taylor_shift(once, Var::x0, Var::x2, deep);
  RatPoly direct =
      subst_var(once, Var::x0, mono_p(1, 0, 0) + mono_p(0, 0, 1));
  Box cmp(Window{-20, 20}, Window{-20, 20}, Window{-20, 20});
  cmp[Var::x0] = Window{0, 3};
  cmp[Var::x2] = Window{0, 3};
  CHECK(twice.truncated(cmp) == direct.truncated(cmp));
}

TEST_CASE("principal_part_eq") {
  RatPoly a = mono_p(0, -2, 0) + mono_p(0, 1, 0);
  CHECK(principal_part_eq(a, mono_p(0, -2, 0), {Var::x1}));
  CHECK_FALSE(principal_part_eq(mono_p(0, -1, 0), RatPoly{}, {Var::x1}));
  // Only multidegrees negative in all listed vars are compared.
  RatPoly b = mono_p(0, -1, 2);
  CHECK(principal_part_eq(b, RatPoly{}, {Var::x1, Var::x2}));
  CHECK_FALSE(principal_part_eq(b, RatPoly{}, {Var::x1}));
}

TEST_CASE("delta identity: two-variable shift form") {
  // x1^{-1} delta((x2+x0)/x1) == x2^{-1} delta((x1-x0)/x2), coefficientwise
  // on [-6,6]^3.
  Box box(Window{-6, 6});
  RatPoly lhs = delta_sum(Var::x2, Var::x0, Sign::plus, Var::x1, box);
  RatPoly rhs = delta_sum(Var::x1, Var::x0, Sign::minus, Var::x2, box);
  CHECK(lhs == rhs);
  CHECK(!lhs.empty());
}

TEST_CASE("delta identity: three-term splitting") {
  // x0^{-1} delta((x1-x2)/x0) - x0^{-1} delta((x2-x1)/(-x0))
  //   == x2^{-1} delta((x1-x0)/x2).
  Box box(Window{-6, 6});
  RatPoly t1 = delta_sum(Var::x1, Var::x2, Sign::minus, Var::x0, box);
  RatPoly t2 = delta_sum(Var::x2, Var::x1, Sign::minus, Var::x0, box, true);
  RatPoly rhs = delta_sum(Var::x1, Var::x0, Sign::minus, Var::x2, box);
  CHECK(t1 - t2 == rhs);
  CHECK(!rhs.empty());
}

TEST_CASE("delta derivative equals difference of squared expansions") {
  // d/dx2 [x2^{-1} delta(x1/x2)] == iota_12(1/(x1-x2)^2)
  //                                  - iota_21(1/(x1-x2)^2).
  Box box(Window{-6, 6});
  RatPoly delta;
  for (int n = -8; n <= 8; ++n)
    delta.add_term(Multideg{0, n, -n - 1}, Rational(1));
  RatPoly lhs = delta.derivative(Var::x2).truncated(box);
  RationalExpr f2 = rexpr(RatPoly(Rational(1)), 0, 0, 2, Var::x1, Var::x2);
  RatPoly rhs =
      (iota_expand(f2, Var::x2, box) - iota_expand(f2, Var::x1, box))
          .truncated(box);
  CHECK(lhs == rhs);
  CHECK(!lhs.empty());
}

TEST_CASE("canonicalize strips shared factors") {
  // (x1^2 - x2^2) / (x1 (x1-x2)^2) -> (x1+x2) / (x1 (x1-x2)).
  RatPoly g = mono_p(0, 2, 0) + mono_p(0, 0, 2, -1);
  RationalExpr e = canonicalize(rexpr(g, 1, 0, 2, Var::x1, Var::x2));
  CHECK(e.t == 1);
  CHECK(e.r == 1);
  CHECK(e.s == 0);
  CHECK(e.g == mono_p(0, 1, 0) + mono_p(0, 0, 1));

  // x1 x2 / (x1 x2) -> 1.
  RationalExpr e2 = canonicalize(rexpr(mono_p(0, 1, 1), 1, 1, 0, Var::x1,
                                       Var::x2));
  CHECK(e2.is_polynomial());
  CHECK(e2.g == RatPoly(Rational(1)));
}

TEST_CASE("match_rational examples") {
  Box box(Window{-8, 8});
  RationalExpr f = rexpr(RatPoly(Rational(1)), 0, 0, 1, Var::x1, Var::x2);
  RatPoly s = iota_expand(f, Var::x2, box);
  MatchResult m = match_rational(s, Var::x1, Var::x2, Sign::minus, Var::x2, 4,
                                 box);
  REQUIRE(m.status == MatchStatus::ok);
  CHECK(m.expr == f);

  MatchResult m2 = match_rational(mono_p(0, -1, 0), Var::x1, Var::x2,
                                  Sign::minus, Var::x2, 4, box);
  REQUIRE(m2.status == MatchStatus::ok);
  CHECK(m2.expr == rexpr(RatPoly(Rational(1)), 1, 0, 0, Var::x1, Var::x2));

  RationalExpr f3 = rexpr(mono_p(0, 1, 0) + mono_p(0, 0, 1), 0, 0, 1, Var::x1,
                          Var::x2);
  RatPoly s3 = iota_expand(f3, Var::x2, box);
  MatchResult m3 = match_rational(s3, Var::x1, Var::x2, Sign::minus, Var::x2,
                                  4, box);
  REQUIRE(m3.status == MatchStatus::ok);
  CHECK(m3.expr == canonicalize(f3));
}

TEST_CASE("match_rational round-trips random canonical inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(0, 2);
  Box box(Window{-8, 8});
  for (int trial = 0; trial < 25; ++trial) {
    RationalExpr f;
    f.a = Var::x1;
    f.b = Var::x2;
    f.sign = Sign::minus;
    f.r = small(rng);
    f.s = small(rng);
    f.t = small(rng);
    RatPoly g;
    for (int i = 0; i < 3; ++i)
      g.add_term(Multideg{0, small(rng), small(rng)},
                 Rational(small(rng) * 2 - 1));
    if (g.empty()) g = RatPoly(Rational(1));
    f.g = g;
    f = canonicalize(f);
    RatPoly s = iota_expand(f, Var::x2, box);
    MatchResult m = match_rational(s, Var::x1, Var::x2, Sign::minus, Var::x2,
                                   4, box);
    REQUIRE(m.status == MatchStatus::ok);
    CHECK(m.expr == f);
  }
}

TEST_CASE("match_rational reports non-rational and inconclusive inputs") {
  Box box(Window{-8, 8});
  // delta-like series: supported on x1^n x2^{-n-1}, not rational at any t,
  // but every multiple touches the window frontier, so the window cannot
  // certify: inconclusive.
  RatPoly delta;
  for (int n = -8; n <= 8; ++n)
    delta.add_term(Multideg{0, n, -n - 1}, Rational(1));
  MatchResult m = match_rational(delta, Var::x1, Var::x2, Sign::minus,
                                 Var::x2, 3, box);
  CHECK(m.status == MatchStatus::inconclusive);

  // A series with x2-support bounded away from the frontier but never
  // cleared by the linear factor within tBound: not rational.
  RatPoly s = iota_expand(rexpr(RatPoly(Rational(1)), 0, 0, 3, Var::x1,
                                Var::x2),
                          Var::x2, Box(Window{-30, 30}));
  Box tight(Window{-30, 30});
  MatchResult m2 = match_rational(s.truncated(tight), Var::x1, Var::x2,
                                  Sign::minus, Var::x2, 2, tight);
  CHECK(m2.status != MatchStatus::ok);
}

TEST_CASE("exact arithmetic properties on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    RatPoly p = random_poly(rng);
    RatPoly q = random_poly(rng);
    RatPoly r = random_poly(rng);
    CHECK((p + q) - q == p);
    CHECK(p.mul_scalar_poly(q).mul_scalar_poly(r) ==
          p.mul_scalar_poly(q.mul_scalar_poly(r)));
    CHECK(p.mul_scalar_poly(q) == q.mul_scalar_poly(p));
  }
}

TEST_CASE("rational scalar helpers") {
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("").has_value());
  CHECK(binomial(-1, 3) == Rational(-1));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(factorial(5) == Rational(120));
}
