#include "vtx/laurent.hpp"

#include <algorithm>

namespace vtx {

const char* var_name(Var v) {
  switch (v) {
    case Var::x0: return "x0";
    case Var::x1: return "x1";
    case Var::x2: return "x2";
  }
  return "?";
}

RatPoly binom_expand(Var a, Var b, Sign sign, long n, Window wb) {
  if (a == b) throw std::invalid_argument("binom_expand: a == b");
  RatPoly out;
  Rational sg = sign == Sign::plus ? 1 : -1;
  long jmax = n >= 0 ? n : static_cast<long>(wb.hi);
  Rational sgj = 1;
  for (long j = 0; j <= jmax; ++j) {
    Multideg d{0, 0, 0};
    d[idx(a)] = static_cast<int>(n - j);
    d[idx(b)] = static_cast<int>(j);
    out.add_term(d, binomial(n, j) * sgj);
    sgj *= sg;
  }
  return n >= 0 ? out : out.truncated(b, wb);
}

bool divide_linear(const RatPoly& p, Var a, Var b, Sign sign, RatPoly* out) {
  // Treat p as a polynomial in x_a and divide by (x_a + sign x_b) from the
  // top degree down; exact Laurent exponents in x_a are allowed.
  if (p.empty()) {
    *out = RatPoly{};
    return true;
  }
  RatPoly rem = p;
  RatPoly quot;
  Rational sg = sign == Sign::plus ? 1 : -1;
  while (!rem.empty()) {
    // Leading term in x_a (max exponent; ties resolved by map order).
    int top = rem.max_exp(a);
    Multideg lead{};
    bool found = false;
    for (const auto& [d, c] : rem.terms())
      if (d[idx(a)] == top) {
        lead = d;
        found = true;
        break;
      }
    if (!found) return false;
    Rational lc = rem.coeff(lead);
    Multideg qd = lead;
    qd[idx(a)] -= 1;
    quot.add_term(qd, lc);
    // Subtract lc * x^qd * (x_a + sign x_b).
    Multideg t1 = qd;
    t1[idx(a)] += 1;
    rem.add_term(t1, lc * Rational(-1));
    Multideg t2 = qd;
    t2[idx(b)] += 1;
    rem.add_term(t2, lc * sg * Rational(-1));
    // Exactness guard: quotient exponents in x_a must stay >= original min-1
    // bounded; divergence shows up as ever-decreasing exponents.
    if (qd[idx(a)] < p.min_exp(a) - p.max_exp(b) - 2) return false;
  }
  *out = quot;
  return true;
}

RationalExpr canonicalize(RationalExpr e) {
  RatPoly q;
  while (e.t > 0 && divide_linear(e.g, e.a, e.b, e.sign, &q)) {
    e.g = q;
    --e.t;
  }
  auto divisible_by = [&](Var v) {
    return !e.g.empty() && e.g.min_exp(v) >= 1;
  };
  while (e.r > 0 && divisible_by(e.a)) {
    RatPoly out;
    for (const auto& [d, c] : e.g.terms()) {
      Multideg nd = d;
      nd[idx(e.a)] -= 1;
      out.add_term(nd, c);
    }
    e.g = out;
    --e.r;
  }
  while (e.s > 0 && divisible_by(e.b)) {
    RatPoly out;
    for (const auto& [d, c] : e.g.terms()) {
      Multideg nd = d;
      nd[idx(e.b)] -= 1;
      out.add_term(nd, c);
    }
    e.g = out;
    --e.s;
  }
  if (e.t == 0) e.sign = Sign::minus;
  return e;
}

RatPoly iota_expand(const RationalExpr& f, Var expand_in, const Box& box) {
  if (expand_in != f.a && expand_in != f.b)
    throw std::invalid_argument("iota_expand: bad expansion variable");
  // Depth that guarantees exactness of every coefficient inside box.
  int gmin = f.g.empty() ? 0 : f.g.min_exp(expand_in);
  long sdenom = expand_in == f.b ? f.s : f.r;
  long depth = static_cast<long>(box[expand_in].hi) + sdenom - gmin + f.t + 4;
  if (depth < 0) depth = 0;
  Window deep{0, static_cast<int>(depth)};

  RatPoly lin_part;
  if (f.t == 0) {
    lin_part = RatPoly(Rational(1));
  } else if (expand_in == f.b) {
    lin_part = binom_expand(f.a, f.b, f.sign, -f.t, deep);
  } else {
    // (x_a - x_b)^{-t} = (-1)^t (x_b - x_a)^{-t};  (x_a + x_b) symmetric.
    lin_part = binom_expand(f.b, f.a, f.sign, -f.t, deep);
    if (f.sign == Sign::minus && f.t % 2 != 0)
      lin_part = lin_part.scaled(Rational(-1));
  }
  RatPoly shift = RatPoly::monomial(
      mono(f.a, static_cast<int>(-f.r)) + mono(f.b, static_cast<int>(-f.s)),
      Rational(1));
  return f.g.mul_scalar_poly(lin_part).mul_scalar_poly(shift).truncated(box);
}

RatPoly subst_var(const RatPoly& f, Var v, const RatPoly& p) {
  RatPoly out;
  for (const auto& [d, c] : f.terms()) {
    int e = d[idx(v)];
    if (e < 0) throw std::invalid_argument("subst_var: negative exponent");
    Multideg rest = d;
    rest[idx(v)] = 0;
    RatPoly term = RatPoly::monomial(rest, c);
    for (int j = 0; j < e; ++j) term = term.mul_scalar_poly(p);
    out += term;
  }
  return out;
}

MatchResult match_rational(const RatPoly& s, Var a, Var b, Sign sign,
                           Var expand_in, long t_bound, const Box& box) {
  MatchResult res;
  RatPoly lin;
  lin.add_term(mono(a, 1), Rational(1));
  lin.add_term(mono(b, 1), sign == Sign::plus ? Rational(1) : Rational(-1));

  Var other = expand_in == a ? b : a;
  bool saw_boundary = false;

  RatPoly prod = s;
  for (long t = 0; t <= t_bound; ++t) {
    // Reliable region: multiplying by lin^t mixes exponents within distance
    // t of each cell, so shrink each window by t on the side that pulls
    // coefficients from outside the box.
    Box rel = box;
    rel[a].lo += static_cast<int>(t);
    rel[b].lo += static_cast<int>(t);
    if (rel[a].lo > rel[a].hi || rel[b].lo > rel[b].hi) {
      saw_boundary = true;
      break;
    }
    RatPoly win = prod.truncated(rel);

    // A Laurent polynomial has bounded support: inside the reliable region
    // the support must stay clear of the open frontier (high exponents of
    // the expansion variable, low exponents of the other variable).
    bool clear = win.empty() ||
                 (win.max_exp(expand_in) < rel[expand_in].hi &&
                  win.min_exp(other) > rel[other].lo);
    if (clear) {
      RationalExpr cand;
      cand.a = a;
      cand.b = b;
      cand.sign = sign;
      cand.t = t;
      if (!win.empty()) {
        cand.r = std::max(0, -win.min_exp(a));
        cand.s = std::max(0, -win.min_exp(b));
        Multideg up = mono(a, static_cast<int>(cand.r)) +
                      mono(b, static_cast<int>(cand.s));
        cand.g = win.mul_scalar_poly(RatPoly::monomial(up, Rational(1)));
      }
      cand = canonicalize(cand);
      RatPoly back = iota_expand(cand, expand_in, rel);
      if (back == s.truncated(rel)) {
        res.status = MatchStatus::ok;
        res.expr = cand;
        res.reliable = rel;
        return res;
      }
    } else {
      saw_boundary = true;
    }
    prod = prod.mul_scalar_poly(lin);
  }
  res.status = saw_boundary ? MatchStatus::inconclusive
                            : MatchStatus::not_rational;
  return res;
}

}  // namespace vtx
