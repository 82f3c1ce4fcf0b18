// End-to-end gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <iostream>
#include <map>
#include <vector>

#include "vtx/checkers.hpp"
#include "vtx/constructions.hpp"
#include "vtx/laurent.hpp"
#include "vtx/vla.hpp"

using namespace vtx;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void begin() { t0 = std::chrono::steady_clock::now(); }

void report(int n, const std::string& what, bool ok) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << "criterion " << n << " (" << what << "): "
            << (ok ? "pass" : "fail") << "  [" << ms << " ms]\n";
  if (!ok) ++failures;
}

RatPoly mono_p(int e0, int e1, int e2, Rational c = 1) {
  return RatPoly::monomial(Multideg{e0, e1, e2}, c);
}

// x_b^{-1} delta-style sum with both factors expanded toward x_q.
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

DualFunctional pure(const std::string& a, const std::string& b,
                    const std::string& c) {
  DualFunctional f;
  f.add({a, b, c}, 1);
  return f;
}

Status entry_status(const Report& r, const std::string& name) {
  for (const auto& e : r.entries)
    if (e.name == name) return e.status;
  return Status::inconclusive;
}

std::string entry_witness(const Report& r, const std::string& name) {
  for (const auto& e : r.entries)
    if (e.name == name) return e.witness;
  return "";
}

Comodule self_comodule(const VertexCoalgebra& C) {
  Comodule m;
  m.name = C.name + "-self";
  m.space = C.space;
  m.over = C;
  m.coproducts = C.coproducts;
  m.weight_complete = C.weight_complete;
  m.known_weight_max = C.known_weight_max;
  return m;
}

std::vector<long> partition_table(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int w = part; w <= n; ++w) p[w] += p[w - part];
  return p;
}

std::vector<std::string> labels_up_to(const GradedSpace& s,
                                      const Rational& cap) {
  std::vector<std::string> out;
  for (const auto& l : s.labels())
    if (s.weight(l) <= cap) out.push_back(l);
  return out;
}

}  // namespace

int main() {
  auto total0 = std::chrono::steady_clock::now();

  // 1. Delta-calculus identities, coefficientwise on [-6,6] per variable.
  begin();
  {
    Box box(Window{-6, 6});
    bool ok = true;

    RatPoly geo = iota_expand(
        rexpr(RatPoly(Rational(1)), 0, 0, 1, Var::x1, Var::x2), Var::x2,
        Box(Window{-8, 8}));
    ok = ok && geo.residue(Var::x1) == RatPoly(Rational(1));

    RatPoly lhs2 = delta_sum(Var::x2, Var::x0, Sign::plus, Var::x1, box);
    RatPoly rhs2 = delta_sum(Var::x1, Var::x0, Sign::minus, Var::x2, box);
    ok = ok && lhs2 == rhs2 && !lhs2.empty();

    RatPoly t1 = delta_sum(Var::x1, Var::x2, Sign::minus, Var::x0, box);
    RatPoly t2 = delta_sum(Var::x2, Var::x1, Sign::minus, Var::x0, box, true);
    RatPoly rhs3 = delta_sum(Var::x1, Var::x0, Sign::minus, Var::x2, box);
    ok = ok && (t1 - t2 == rhs3) && !rhs3.empty();

    RatPoly delta;
    for (int n = -8; n <= 8; ++n)
      delta.add_term(Multideg{0, n, -n - 1}, Rational(1));
    RationalExpr f2 = rexpr(RatPoly(Rational(1)), 0, 0, 2, Var::x1, Var::x2);
    RatPoly dl = delta.derivative(Var::x2).truncated(box);
    RatPoly dr = (iota_expand(f2, Var::x2, box) -
                  iota_expand(f2, Var::x1, box))
                     .truncated(box);
    ok = ok && dl == dr && !dl.empty();

    RatPoly shifted =
        taylor_shift(mono_p(0, 2, 0), Var::x1, Var::x0, Window{0, 8});
    ok = ok &&
         shifted == mono_p(0, 2, 0) + mono_p(1, 1, 0, 2) + mono_p(2, 0, 0);
    RatPoly inv =
        taylor_shift(mono_p(0, -1, 0), Var::x1, Var::x0, Window{0, 6});
    RatPoly lin = mono_p(0, 1, 0) + mono_p(1, 0, 0);
    ok = ok && inv.mul_scalar_poly(lin).truncated(Var::x0, Window{0, 6}) ==
                   RatPoly(Rational(1));

    report(1, "delta calculus", ok);
  }

  // Shared structures for 2..7.
  begin();
  VertexCoalgebra Cd = dualize(commutative_va(4), Window{0, 4});
  VertexCoalgebra Td = dualize(trivial_va(), Window{0, 0});
  VertexCoalgebra Ad = dualize(
      Envelope(abelian_vla(6), 6).to_vertex_algebra(), Window{0, 6});
  VertexCoalgebra Hd = dualize(
      Envelope(heisenberg_vla(6), 6).to_vertex_algebra(), Window{0, 6});
  VertexCoalgebra mutant = Cd;
  mutant.coproducts["t3"].erase(-2);
  VertexCoalgebra mutant_skew = Cd;
  for (auto& [v, perk] : mutant_skew.coproducts) {
    auto it = perk.find(-2);
    if (it != perk.end()) it->second = it->second * Rational(-1);
  }
  const std::vector<const VertexCoalgebra*> suite_set{&Cd, &Ad, &Hd, &Td};
  Window w{-4, 3};

  // 2. Coalgebra axiom suite on the four structures; mutants fail.
  {
    bool ok = true;
    for (const auto* C : suite_set)
      ok = ok && run_coalgebra_suite(*C, w).all_pass();
    Report rm = run_coalgebra_suite(mutant, w);
    ok = ok && entry_status(rm, "jacobi") == Status::fail &&
         !entry_witness(rm, "jacobi").empty();
    Report rs = check_skew_symmetry(mutant_skew, w);
    ok = ok && rs.any_fail();
    report(2, "coalgebra suite + mutants", ok);
  }

  // 3. D* laws and skew-symmetry on the same structures.
  begin();
  {
    bool ok = true;
    for (const auto* C : suite_set) {
      ok = ok && check_dstar_laws(*C, w).all_pass();
      ok = ok && check_skew_symmetry(*C, w).all_pass();
    }
    report(3, "D* laws + skew symmetry", ok);
  }

  // 4. Weak cocommutativity/coassociativity minimal exponents.
  begin();
  std::vector<DualFunctional> sweep;
  {
    bool ok = true;
    auto fam = labels_up_to(Cd.space, 5);
    for (const auto& a : fam)
      for (const auto& b : fam)
        for (const auto& c : fam) sweep.push_back(pure(a, b, c));
    for (const auto& f : sweep) {
      MinimalK kc = weak_cocomm_k(Cd, f, w);
      MinimalK ka = weak_coassoc_k(Cd, f, w);
      ok = ok && kc.k == 0 && ka.k == 0;
      ok = ok && kc.k <= kc.bound && ka.k <= ka.bound;
    }
    MinimalK kh = weak_cocomm_k(Hd, pure("a(-1)", "a(-1)", "1"), w);
    ok = ok && kh.k == 2 && kh.k <= kh.bound;
    MinimalK kha = weak_coassoc_k(Hd, pure("a(-1)", "1", "a(-1)"),
                                  Window{-2, 3});
    ok = ok && kha.k == 2 && kha.k <= kha.bound;
    report(4, "weak minimal exponents + bound sweep", ok);
  }

  // 5. Rational reconstruction for every functional in the sweep.
  begin();
  {
    bool ok = true;
    Vec v = unit_vec("t0");
    for (const auto& f : sweep) {
      CorrelationResult cr = correlation(Cd, f, v, CorrKind::right, w);
      ok = ok && cr.match.status == MatchStatus::ok &&
           entry_status(cr.report, "cocommutativity_rational") == Status::pass;
      CorrelationResult cl = correlation(Cd, f, v, CorrKind::left, w);
      ok = ok && cl.match.status == MatchStatus::ok &&
           entry_status(cl.report, "coassociativity_substitution") ==
               Status::pass;
    }
    CorrelationResult ch = correlation(Hd, pure("a(-1)", "a(-1)", "1"),
                                       unit_vec("K(-1)"), CorrKind::right,
                                       Window{-5, 3});
    ok = ok && ch.match.status == MatchStatus::ok && ch.match.expr.t == 2;
    report(5, "rational correlation identities", ok);
  }

  // 6. Alternate axiom sets match the Jacobi verdict everywhere.
  begin();
  {
    bool ok = true;
    std::vector<const VertexCoalgebra*> all = suite_set;
    all.push_back(&mutant);
    all.push_back(&mutant_skew);
    for (const auto* C : all) {
      Report r = run_alt_axiom_suite(*C, w);
      ok = ok && entry_status(r, "alt1_matches_jacobi") == Status::pass;
      ok = ok && entry_status(r, "alt2_matches_jacobi") == Status::pass;
    }
    report(6, "axiom-set equivalence", ok);
  }

  // 7. Every coalgebra above is a comodule over itself; a mutated
  // comodule fails.
  begin();
  {
    bool ok = true;
    for (const auto* C : suite_set)
      ok = ok && run_comodule_suite(self_comodule(*C), w).all_pass();
    Comodule bad = self_comodule(Cd);
    for (auto& [v, perk] : bad.coproducts) {
      bool done = false;
      for (auto& [k, tv] : perk)
        if (k != -1 && !tv.empty()) {
          tv = tv * Rational(2);
          done = true;
          break;
        }
      if (done) break;
    }
    ok = ok && run_comodule_suite(bad, w).any_fail();
    report(7, "comodule suites", ok);
  }

  // 8. Envelope dimensions and the Virasoro commutator.
  begin();
  {
    bool ok = true;
    Envelope env(abelian_vla(4), 8);
    std::map<Rational, long> dims;
    for (const auto& m : env.basis()) ++dims[env.weight(m)];
    auto p = partition_table(8);
    for (int k = 0; k <= 8; ++k) ok = ok && dims[Rational(k)] == p[k];

    Rational d(1, 2);
    LieAlgebraData V = affinize(virasoro_vla(d, 4), 10);
    for (long j = -4; j <= 4; ++j)
      for (long k = -4; k <= 4; ++k) {
        // L(n) = w_(n+1).
        LieVec got = V.bracket({"w", j + 1}, {"w", k + 1});
        LieVec want = V.reduce({"w", j + k + 1}) * Rational(j - k);
        if (j + k == 0) {
          LieVec central;
          central.add({"K", -1}, Rational(j * j * j - j, 12) * d);
          want += central;
        }
        ok = ok && got == want;
      }
    Report printed = affinize(virasoro_vla(d, 4), 6, true).check_lie_axioms();
    std::cout << "  note: printed-convention Lie verdict = "
              << status_name(printed.verdict()) << "\n";
    report(8, "envelope dimensions + Virasoro", ok);
  }

  // 9. Classical enveloping tables.
  begin();
  {
    bool ok = true;
    for (long dim = 1; dim <= 3; ++dim) {
      BialgebraData B = classical_enveloping(dim, 4);
      Report r = check_classical(B);
      ok = ok && entry_status(r, "coassociative") == Status::pass;
      ok = ok && entry_status(r, "cocommutative") == Status::pass;
      ok = ok && entry_status(r, "unit_group_like") == Status::pass;
      ok = ok && entry_status(r, "primitive_generators") == Status::pass;
      TensorVec du = B.induced.at("1");
      ok = ok && du.c.size() == 1 && du.coeff({"1", "1"}) == 1;
      for (long i = 1; i <= dim; ++i) {
        std::string e = "e" + std::to_string(i);
        TensorVec de = B.induced.at(e);
        ok = ok && de.c.size() == 2 && de.coeff({e, "1"}) == 1 &&
             de.coeff({"1", e}) == 1;
      }
      if (dim == 1)
        std::cout << "  note: e1.e1 comparison: induced coeff(e1,e1)="
                  << to_string(B.induced.at("e1.e1").coeff({"e1", "e1"}))
                  << " multiplicative="
                  << to_string(B.classical.at("e1.e1").coeff({"e1", "e1"}))
                  << "\n";
    }
    report(9, "classical enveloping", ok);
  }

  // 10. Double dual recovers the original tables.
  begin();
  {
    VertexAlgebra A = commutative_va(4);
    VertexAlgebra AA = dualize_back(dualize(A, Window{0, 8}), Window{0, 8});
    bool ok = AA.products == A.products && AA.vacuum == A.vacuum &&
              AA.space.labels() == A.space.labels();
    report(10, "double dual identity", ok);
  }

  auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - total0)
                      .count();
  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: FAILURES")
            << "  [" << total_ms << " ms total]\n";
  return failures == 0 ? 0 : 1;
}
