#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vtx/constructions.hpp"
#include "vtx/specfile.hpp"
#include "vtx/vla.hpp"

using namespace vtx;

namespace {

SpecFile wrap(std::string name, std::string kind,
              decltype(SpecFile::value) value) {
  SpecFile f;
  f.name = std::move(name);
  f.kind = std::move(kind);
  f.value = std::move(value);
  return f;
}

Comodule shifted_comodule(const VertexCoalgebra& C, const Rational& shift) {
  Comodule m;
  m.name = C.name + "-shifted";
  m.over = C;
  m.space.integer_weights = false;
  for (const auto& l : C.space.labels())
    m.space.add(C.space.weight(l) + shift, "m." + l);
  for (const auto& [v, perk] : C.coproducts)
    for (const auto& [k, tv] : perk) {
      TensorVec nt;
      for (const auto& [key, c] : tv.c) nt.add({key[0], "m." + key[1]}, c);
      m.coproducts["m." + v][k] = nt;
    }
  m.weight_complete = C.weight_complete;
  m.known_weight_max = C.known_weight_max + shift;
  return m;
}

long error_line(const std::string& text) {
  try {
    parse_spec_file(text);
  } catch (const SpecError& e) {
    return e.line;
  }
  return -1;
}

const char* kGood = R"([meta]
name = toy
kind = vertex-algebra

[space]
0: 1: a
1: 1: b

[vacuum]
1*a

[products]
a, -1, a -> 1*a
a, -1, b -> 1*b
)";

}  // namespace

TEST_CASE("minimal file parses") {
  SpecFile f = parse_spec_file(kGood);
  CHECK(f.name == "toy");
  CHECK(f.kind == "vertex-algebra");
  const auto& A = std::get<VertexAlgebra>(f.value);
  CHECK(A.space.labels().size() == 2);
  CHECK(A.vacuum.coeff("a") == 1);
  CHECK(A.products.at("a").at(-1).at("b").coeff("b") == 1);
}

TEST_CASE("serialize then parse is the identity on the builtins") {
  std::vector<SpecFile> files;
  files.push_back(wrap("trivial", "vertex-algebra", trivial_va()));
  files.push_back(wrap("commutative4", "vertex-algebra", commutative_va(4)));
  VertexCoalgebra dual = dualize(commutative_va(4), Window{0, 4});
  files.push_back(wrap("commutative4-dual", "vertex-coalgebra", dual));
  files.push_back(wrap("abelian-vla", "vertex-lie", abelian_vla(4)));
  files.push_back(wrap("heisenberg-vla", "vertex-lie", heisenberg_vla(4)));
  files.push_back(
      wrap("virasoro-vla", "vertex-lie", virasoro_vla(Rational(1, 2), 4)));
  files.push_back(wrap("comodule-shifted", "comodule",
                       shifted_comodule(dual, Rational(1, 2))));
  for (const auto& f : files) {
    std::string s1 = serialize_spec_file(f);
    INFO(f.name);
    SpecFile g = parse_spec_file(s1);
    CHECK(serialize_spec_file(g) == s1);
  }
}

TEST_CASE("parsed commutative4 matches the builtin table for table") {
  VertexAlgebra ref = commutative_va(4);
  SpecFile f = parse_spec_file(
      serialize_spec_file(wrap("commutative4", "vertex-algebra", ref)));
  const auto& A = std::get<VertexAlgebra>(f.value);
  CHECK(A.products == ref.products);
  CHECK(A.vacuum == ref.vacuum);
  CHECK(A.weight_complete == ref.weight_complete);
  CHECK(A.space.labels() == ref.space.labels());
}

TEST_CASE("coalgebra round trip keeps the coproduct table") {
  VertexCoalgebra ref = dualize(commutative_va(4), Window{0, 4});
  SpecFile f = parse_spec_file(serialize_spec_file(
      wrap("commutative4-dual", "vertex-coalgebra", ref)));
  const auto& C = std::get<VertexCoalgebra>(f.value);
  CHECK(C.coproducts == ref.coproducts);
  CHECK(C.covacuum == ref.covacuum);
}

TEST_CASE("form section round trips") {
  SpecFile f = wrap("toy", "vertex-algebra", trivial_va());
  BilinearForm form;
  form["1"] = unit_vec("1");
  f.form = form;
  std::string s = serialize_spec_file(f);
  SpecFile g = parse_spec_file(s);
  REQUIRE(g.form.has_value());
  CHECK(g.form->at("1").coeff("1") == 1);
  CHECK(serialize_spec_file(g) == s);
}

TEST_CASE("errors carry 1-based line numbers") {
  CHECK(error_line("x = 1\n") == 1);  // content before any section
  CHECK(error_line("[meta]\nkind\n") == 2);
  CHECK(error_line("[meta]\nkind = nothing\n") == 2);
  CHECK(error_line("[space]\n[space]\n") == 2);
  std::string good = kGood;
  CHECK(error_line(good + "a, x, b -> 1*b\n") == 15);
  CHECK(error_line(good + "a, -1, q -> 1*b\n") == 15);
  CHECK(error_line(good + "a, -1, b -> b\n") == 15);
  // weight rule: wt(out) must be wt(a)+wt(b)-n-1 = 0 here, not 1
  CHECK(error_line(good + "a, 0, b -> 1*b\n") == 15);
}

TEST_CASE("space rows are validated") {
  CHECK(error_line("[meta]\nkind = vertex-algebra\n[space]\n0: 2: a\n") == 4);
  CHECK(error_line("[meta]\nkind = vertex-algebra\n[space]\n0: 2: a a\n") == 4);
  CHECK(error_line("[meta]\nkind = vertex-algebra\n[space]\nbad row\n") == 4);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text = std::string("# leading comment\n") + kGood;
  SpecFile f = parse_spec_file(text);
  CHECK(f.name == "toy");
}
