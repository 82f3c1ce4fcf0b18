#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "vtx/vla.hpp"

using namespace vtx;

namespace {

LieVec lv(std::initializer_list<std::pair<ModeSym, Rational>> xs) {
  LieVec out;
  for (const auto& [s, c] : xs) out.add(s, c);
  return out;
}

StateVec sv(std::initializer_list<std::pair<PbwMonomial, Rational>> xs) {
  StateVec out;
  for (const auto& [m, c] : xs) out.add(m, c);
  return out;
}

// Partition counts, independent of the envelope enumeration.
std::vector<long> partition_table(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int w = part; w <= n; ++w) p[w] += p[w - part];
  return p;
}

std::size_t dim_at(const GradedSpace& s, const Rational& w) {
  auto it = s.pieces().find(w);
  return it == s.pieces().end() ? 0 : it->second.size();
}

Status entry_status(const Report& r, const std::string& name) {
  for (const auto& e : r.entries)
    if (e.name == name) return e.status;
  return Status::inconclusive;
}

}  // namespace

TEST_CASE("builtin vertex Lie algebras validate and carry D-chains") {
  auto A = abelian_vla();
  auto H = heisenberg_vla();
  auto V = virasoro_vla(Rational(1) / 2);
  CHECK(dim_at(A.space, 1) == 1);
  CHECK(A.known_weight_max == Rational(5));
  CHECK(dim_at(H.space, 0) == 1);
  CHECK(H.space.weight("D2a") == Rational(3));
  CHECK(H.basis_product("a", 1, "a") == unit_vec("K"));
  CHECK(H.basis_product("a", 0, "a").empty());
  // a_2 (Da) = 2K from the chain identities.
  CHECK(H.basis_product("a", 2, "Da") == unit_vec("K", 2));
  CHECK(H.basis_product("Da", 1, "a").empty());
  CHECK(H.basis_product("Da", 2, "a") == unit_vec("K", -2));
  CHECK(V.basis_product("w", 1, "w") == unit_vec("w", 2));
  CHECK(V.basis_product("w", 3, "w") == unit_vec("K", Rational(1) / 4));
  CHECK(V.basis_product("w", 0, "w") == unit_vec("Dw"));
  // K is central on the stored slice.
  CHECK(H.basis_product("K", 0, "a").empty());
  CHECK(H.basis_product("a", 0, "K").empty());
}

TEST_CASE("vertex Lie axiom suite passes on the builtins") {
  Window w{-4, -1};
  for (const auto& L : {abelian_vla(), heisenberg_vla(),
                        virasoro_vla(Rational(1) / 2)}) {
    Report r = check_vla_axioms(L, w);
    INFO(L.name);
    CHECK_FALSE(r.any_fail());
    CHECK(entry_status(r, "truncation") == Status::pass);
    CHECK(entry_status(r, "half_jacobi") == Status::pass);
    CHECK(entry_status(r, "half_skew_symmetry") == Status::pass);
    CHECK(entry_status(r, "d_bracket") == Status::pass);
    CHECK(entry_status(r, "d_bracket_derivative") == Status::pass);
  }
}

TEST_CASE("affinization quotient reduction") {
  LieAlgebraData L = affinize(heisenberg_vla(), 6);
  CHECK(L.reduce({"Da", -3}) == lv({{{"a", -4}, 3}}));
  CHECK(L.reduce({"D2a", -1}) == lv({{{"a", -3}, 2}}));
  CHECK(L.reduce({"a", -4}) == lv({{{"a", -4}, 1}}));
  CHECK(L.reduce({"K", -1}) == lv({{{"K", -1}, 1}}));
  CHECK(L.reduce({"K", 0}).empty());
  CHECK(L.reduce({"K", -3}).empty());
  // (Dv)_0 = 0.
  CHECK(L.reduce({"Da", 0}).empty());
  // Canonical basis = chain-root modes plus the surviving central mode.
  auto b = L.basis();
  CHECK(b.size() == 14);  // a(-6..6) minus a(... none removed) plus K(-1)
  for (const auto& s : b)
    CHECK((s.first == "a" || (s.first == "K" && s.second == -1)));
}

TEST_CASE("affinization brackets") {
  LieAlgebraData Ab = affinize(abelian_vla(), 4);
  for (long m = -2; m <= 2; ++m)
    for (long n = -2; n <= 2; ++n)
      CHECK(Ab.bracket({"a", m}, {"a", n}).empty());

  LieAlgebraData H = affinize(heisenberg_vla(), 4);
  // [a_m, a_n] = m delta_{m+n,0} K_(-1).
  CHECK(H.bracket({"a", 2}, {"a", -2}) == lv({{{"K", -1}, 2}}));
  CHECK(H.bracket({"a", -3}, {"a", 3}) == lv({{{"K", -1}, -3}}));
  CHECK(H.bracket({"a", 1}, {"a", 2}).empty());
  CHECK(H.bracket({"K", -1}, {"a", 3}).empty());

  // Virasoro with L(j) = w_(j+1): [L(2), L(-2)] = 4 L(0) + (d/2) K_(-1).
  LieAlgebraData V = affinize(virasoro_vla(Rational(1) / 2), 4);
  CHECK(V.bracket({"w", 3}, {"w", -1}) ==
        lv({{{"w", 1}, 4}, {{"K", -1}, Rational(1) / 4}}));
  // [L(1), L(-1)] = 2 L(0), no central term.
  CHECK(V.bracket({"w", 2}, {"w", 0}) == lv({{{"w", 1}, 2}}));
  // [L(2), L(-1)] = 3 L(1).
  CHECK(V.bracket({"w", 3}, {"w", 0}) == lv({{{"w", 2}, 3}}));
}

TEST_CASE("Lie axioms hold in the standard convention") {
  CHECK(affinize(abelian_vla(), 3).check_lie_axioms().all_pass());
  CHECK(affinize(heisenberg_vla(), 3).check_lie_axioms().all_pass());
  CHECK(affinize(virasoro_vla(Rational(1) / 2), 3)
            .check_lie_axioms()
            .all_pass());
}

TEST_CASE("printed bracket convention: verdict recorded, tables differ") {
  // On the quotient the printed convention yields the opposite bracket,
  // which is itself a Lie bracket: the axiom check passes but the
  // structure constants differ in sign from the standard convention.
  LieAlgebraData Vstd = affinize(virasoro_vla(Rational(1) / 2), 3, false);
  LieAlgebraData Vpap = affinize(virasoro_vla(Rational(1) / 2), 3, true);
  Report r = Vpap.check_lie_axioms();
  CHECK(r.verdict() != Status::inconclusive);
  CHECK(r.all_pass());  // observed verdict, recorded here
  LieVec s = Vstd.bracket({"w", 3}, {"w", -1});
  LieVec p = Vpap.bracket({"w", 3}, {"w", -1});
  CHECK_FALSE(s == p);
  CHECK(p == s * Rational(-1));
  CHECK(affinize(heisenberg_vla(), 3, true).check_lie_axioms().all_pass());
}

TEST_CASE("abelian envelope has partition dimensions") {
  Envelope env(abelian_vla(4), 8);
  std::map<Rational, long> dims;
  for (const auto& m : env.basis()) ++dims[env.weight(m)];
  auto p = partition_table(8);
  for (int w = 0; w <= 8; ++w) CHECK(dims[Rational(w)] == p[w]);
  long total = 0;
  for (const auto& [w, d] : dims) total += d;
  CHECK(total == long(env.basis().size()));
}

TEST_CASE("envelope iota and modes") {
  Envelope env(heisenberg_vla(4), 4);
  PbwMonomial am1{{"a", -1}};
  CHECK(env.iota("a") == sv({{am1, 1}}));
  CHECK(env.iota("Da") == sv({{{{"a", -2}}, 1}}));
  // a_1 a_(-1) vac = K_(-1) vac.
  CHECK(env.apply_sym({"a", 1}, env.iota("a")) == sv({{{{"K", -1}}, 1}}));
  CHECK(env.state_mode(am1, 1, am1) == sv({{{{"K", -1}}, 1}}));
  CHECK(env.state_mode(am1, 0, am1).empty());
  CHECK(env.state_mode(am1, -2, am1) ==
        sv({{{{"a", -2}, {"a", -1}}, 1}}));
  CHECK(env.state_mode(am1, -1, am1) == sv({{{am1[0], am1[0]}, 1}}));
}

TEST_CASE("abelian envelope vertex algebra table") {
  Envelope env(abelian_vla(4), 6);
  VertexAlgebra A = env.to_vertex_algebra();
  auto p = partition_table(6);
  for (int w = 0; w <= 6; ++w) CHECK(dim_at(A.space, w) == std::size_t(p[w]));
  CHECK(A.vacuum == unit_vec("1"));
  CHECK_FALSE(A.weight_complete);
  CHECK(A.known_weight_max == Rational(6));
  CHECK(A.basis_product("a(-1)", -2, "a(-1)") == unit_vec("a(-2).a(-1)"));
  CHECK(A.basis_product("a(-1)", -1, "a(-1)") == unit_vec("a(-1).a(-1)"));
  CHECK(A.basis_product("a(-1)", 0, "a(-1)").empty());
  // Commutative: u_(-1) v = v_(-1) u on a spot check.
  CHECK(A.basis_product("a(-2)", -1, "a(-1)") ==
        A.basis_product("a(-1)", -1, "a(-2)"));
  CHECK_THROWS_AS(A.basis_product("a(-3).a(-3)", -1, "a(-1)"),
                  IncompleteData);
}

TEST_CASE("Heisenberg and Virasoro envelope tables") {
  Envelope henv(heisenberg_vla(4), 4);
  VertexAlgebra HA = henv.to_vertex_algebra();
  CHECK(HA.basis_product("a(-1)", 1, "a(-1)") == unit_vec("K(-1)"));
  CHECK(HA.basis_product("a(-1)", 0, "a(-1)").empty());
  CHECK(HA.basis_product("K(-1)", -1, "a(-1)") == unit_vec("K(-1).a(-1)"));
  // Central annihilation modes act by zero.
  CHECK(HA.basis_product("K(-1)", 0, "a(-1)").empty());

  Envelope venv(virasoro_vla(Rational(1) / 2, 4), 4);
  VertexAlgebra VA = venv.to_vertex_algebra();
  CHECK(VA.basis_product("w(-1)", 3, "w(-1)") ==
        unit_vec("K(-1)", Rational(1) / 4));
  CHECK(VA.basis_product("w(-1)", 1, "w(-1)") == unit_vec("w(-1)", 2));
  CHECK(VA.basis_product("w(-1)", 0, "w(-1)") == unit_vec("w(-2)"));
}
