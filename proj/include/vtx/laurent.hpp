#ifndef VTX_LAURENT_HPP
#define VTX_LAURENT_HPP

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtx/rational.hpp"

namespace vtx {

// Formal variables.  At most three distinct variables appear in any
// computation in this library.
enum class Var : int { x0 = 0, x1 = 1, x2 = 2 };

inline int idx(Var v) { return static_cast<int>(v); }
const char* var_name(Var v);

// Exponent vector over (x0, x1, x2); unused variables carry exponent 0.
using Multideg = std::array<int, 3>;

inline constexpr Multideg kZeroDeg{0, 0, 0};

inline Multideg mono(Var v, int e) {
  Multideg d{0, 0, 0};
  d[idx(v)] = e;
  return d;
}

inline Multideg operator+(const Multideg& a, const Multideg& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

// Inclusive exponent bounds for one variable.
struct Window {
  int lo = -8;
  int hi = 8;
  bool contains(int e) const { return lo <= e && e <= hi; }
};

// Per-variable windows.
struct Box {
  std::array<Window, 3> w{};
  Box() = default;
  explicit Box(Window uniform) : w{uniform, uniform, uniform} {}
  Box(Window w0, Window w1, Window w2) : w{w0, w1, w2} {}
  const Window& operator[](Var v) const { return w[idx(v)]; }
  Window& operator[](Var v) { return w[idx(v)]; }
  bool contains(const Multideg& d) const {
    return w[0].contains(d[0]) && w[1].contains(d[1]) && w[2].contains(d[2]);
  }
};

inline bool is_zero(const Rational&);  // fwd (defined in rational.hpp)

// Sparse exact Laurent polynomial with coefficients in C.  C is Rational
// for scalar series, or a sparse vector type for vector-valued series.
template <class C>
class Poly {
 public:
  using Terms = std::map<Multideg, C>;

  Poly() = default;
  explicit Poly(C constant) {
    if (!is_zero(constant)) terms_[kZeroDeg] = std::move(constant);
  }

  static Poly monomial(const Multideg& d, C c) {
    Poly p;
    if (!is_zero(c)) p.terms_[d] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  C coeff(const Multideg& d) const {
    auto it = terms_.find(d);
    if (it == terms_.end()) return C{};
    return it->second;
  }

  void add_term(const Multideg& d, const C& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c * Rational(-1));
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly scaled(const Rational& s) const {
    Poly out;
    if (is_zero(s)) return out;
    for (const auto& [d, c] : terms_) out.terms_[d] = c * s;
    return out;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Multiplication by a scalar-coefficient polynomial (from either side).
  Poly mul_scalar_poly(const Poly<Rational>& q) const {
    Poly out;
    for (const auto& [d1, c1] : terms_)
      for (const auto& [d2, c2] : q.terms())
        out.add_term(d1 + d2, c1 * c2);
    return out;
  }

  // Formal derivative with respect to v (exponent-multiply rule).
  Poly derivative(Var v) const {
    Poly out;
    for (const auto& [d, c] : terms_) {
      int e = d[idx(v)];
      if (e == 0) continue;
      Multideg nd = d;
      nd[idx(v)] = e - 1;
      out.add_term(nd, c * Rational(e));
    }
    return out;
  }

  // Coefficient of v^{-1}, as a polynomial in the remaining variables.
  Poly residue(Var v) const {
    Poly out;
    for (const auto& [d, c] : terms_) {
      if (d[idx(v)] != -1) continue;
      Multideg nd = d;
      nd[idx(v)] = 0;
      out.add_term(nd, c);
    }
    return out;
  }

  // x_v -> -x_v.
  Poly negate_var(Var v) const {
    Poly out;
    for (const auto& [d, c] : terms_) {
      int e = d[idx(v)];
      out.add_term(d, e % 2 == 0 ? c : c * Rational(-1));
    }
    return out;
  }

  // Keep only terms inside the box.
  Poly truncated(const Box& b) const {
    Poly out;
    for (const auto& [d, c] : terms_)
      if (b.contains(d)) out.terms_[d] = c;
    return out;
  }

  // Keep only terms whose exponent in v lies inside w.
  Poly truncated(Var v, Window w) const {
    Poly out;
    for (const auto& [d, c] : terms_)
      if (w.contains(d[idx(v)])) out.terms_[d] = c;
    return out;
  }

  int min_exp(Var v, int if_empty = 0) const {
    if (terms_.empty()) return if_empty;
    int m = terms_.begin()->first[idx(v)];
    for (const auto& [d, c] : terms_) m = std::min(m, d[idx(v)]);
    return m;
  }
  int max_exp(Var v, int if_empty = 0) const {
    if (terms_.empty()) return if_empty;
    int m = terms_.begin()->first[idx(v)];
    for (const auto& [d, c] : terms_) m = std::max(m, d[idx(v)]);
    return m;
  }

 private:
  Terms terms_;
};

using RatPoly = Poly<Rational>;

// Replace v by (v + h) in f, expanding negative powers of v in nonnegative
// powers of h, keeping h-exponents within wh.  h must not occur in f.
template <class C>
Poly<C> taylor_shift(const Poly<C>& f, Var v, Var h, Window wh) {
  Poly<C> out;
  for (const auto& [d, c] : f.terms()) {
    if (d[idx(h)] != 0)
      throw std::invalid_argument("taylor_shift: shift variable occurs in f");
    int e = d[idx(v)];
    int jmax = e >= 0 ? e : wh.hi;
    for (int j = 0; j <= jmax; ++j) {
      Multideg nd = d;
      nd[idx(v)] = e - j;
      nd[idx(h)] = j;
      out.add_term(nd, c * binomial(e, j));
    }
  }
  return out;
}

// True iff f and g agree at every multidegree strictly negative in all of
// `vars` (the other exponents are unconstrained).
template <class C>
bool principal_part_eq(const Poly<C>& f, const Poly<C>& g,
                       const std::vector<Var>& vars) {
  auto principal = [&](const Poly<C>& p) {
    typename Poly<C>::Terms out;
    for (const auto& [d, c] : p.terms()) {
      bool keep = true;
      for (Var v : vars)
        if (d[idx(v)] >= 0) keep = false;
      if (keep) out[d] = c;
    }
    return out;
  };
  return principal(f) == principal(g);
}

// Expansion sign for the linear factor (x_a + sign*x_b).
enum class Sign : int { plus = +1, minus = -1 };

// (x_a +/- x_b)^n expanded in nonnegative powers of x_b, truncated to wb in
// x_b.  For n >= 0 the expansion is the exact polynomial; coefficients with
// x_b-exponent inside wb are exact in all cases.
RatPoly binom_expand(Var a, Var b, Sign sign, long n, Window wb);

// Canonical rational function  g(x_a,x_b) / (x_a^r x_b^s (x_a sign x_b)^t).
// g has nonnegative exponents and shares no factor of x_a, x_b or the
// linear factor.
struct RationalExpr {
  RatPoly g;  // numerator, exponents only in vars a and b
  long r = 0, s = 0, t = 0;
  Var a = Var::x1, b = Var::x2;
  Sign sign = Sign::minus;

  bool operator==(const RationalExpr& o) const {
    return g == o.g && r == o.r && s == o.s && t == o.t && a == o.a &&
           b == o.b && (t == 0 || sign == o.sign);
  }
  bool is_polynomial() const { return r == 0 && s == 0 && t == 0; }
};

// Divide p exactly by (x_a sign x_b); returns false when not divisible.
bool divide_linear(const RatPoly& p, Var a, Var b, Sign sign, RatPoly* out);

// Reduce g against the denominator factors: minimal t, then minimal r,
// then minimal s, by trial division.
RationalExpr canonicalize(RationalExpr e);

// Expanded image of f under iota, expanding the inverse linear factor in
// nonnegative powers of `expand_in` (one of f.a, f.b).  All coefficients
// whose exponents lie inside `box` are exact.
RatPoly iota_expand(const RationalExpr& f, Var expand_in, const Box& box);

enum class MatchStatus { ok, not_rational, inconclusive };

struct MatchResult {
  MatchStatus status = MatchStatus::inconclusive;
  RationalExpr expr;
  // Sub-box on which s was certified to agree with the re-expansion.
  Box reliable;
};

// Reconstruct the canonical rational function whose iota-expansion (in
// nonnegative powers of expand_in) agrees with s on `box`.  s must be the
// windowed expansion of some g/(x_a^r x_b^s lin^t) with t <= t_bound; the
// result is verified by re-expansion over the reliable sub-box.
MatchResult match_rational(const RatPoly& s, Var a, Var b, Sign sign,
                           Var expand_in, long t_bound, const Box& box);

// Substitute x_a -> p (a scalar polynomial in other variables) into a
// polynomial with nonnegative exponents in x_a.
RatPoly subst_var(const RatPoly& f, Var v, const RatPoly& p);

}  // namespace vtx

#endif
