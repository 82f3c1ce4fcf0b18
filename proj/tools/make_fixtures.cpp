// Regenerates the bundled fixture files from the builtin structures.
// Usage: make_fixtures <output-dir>
#include <fstream>
#include <iostream>

#include "vtx/constructions.hpp"
#include "vtx/specfile.hpp"
#include "vtx/vla.hpp"

using namespace vtx;

namespace {

void emit(const std::string& dir, const std::string& file, const SpecFile& f) {
  std::ofstream out(dir + "/" + file, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << dir << "/" << file << "\n";
    std::exit(1);
  }
  out << serialize_spec_file(f);
  std::cout << file << "\n";
}

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

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 64;
  }
  std::string dir = argv[1];

  emit(dir, "trivial.spec", wrap("trivial", "vertex-algebra", trivial_va()));
  emit(dir, "commutative4.spec",
       wrap("commutative4", "vertex-algebra", commutative_va(4)));

  VertexCoalgebra dual = dualize(commutative_va(4), Window{0, 4});
  emit(dir, "commutative4_dual.spec",
       wrap("commutative4-dual", "vertex-coalgebra", dual));

  VertexCoalgebra mutant = dual;
  mutant.coproducts["t3"].erase(-2);
  emit(dir, "mutant_jacobi.spec",
       wrap("mutant-jacobi", "vertex-coalgebra", mutant));

  emit(dir, "abelian_vla.spec",
       wrap("abelian-vla", "vertex-lie", abelian_vla(4)));
  emit(dir, "heisenberg_vla.spec",
       wrap("heisenberg-vla", "vertex-lie", heisenberg_vla(4)));
  emit(dir, "virasoro_vla.spec",
       wrap("virasoro-vla", "vertex-lie", virasoro_vla(Rational(1, 2), 4)));

  emit(dir, "comodule_shifted.spec",
       wrap("comodule-shifted", "comodule",
            shifted_comodule(dual, Rational(1, 2))));

  VertexCoalgebra heis =
      dualize(Envelope(heisenberg_vla(4), 4).to_vertex_algebra(), Window{0, 4});
  emit(dir, "heisenberg_dual.spec",
       wrap("heisenberg-dual", "vertex-coalgebra", heis));

  return 0;
}
