#ifndef VTX_SPECFILE_HPP
#define VTX_SPECFILE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "vtx/constructions.hpp"
#include "vtx/structures.hpp"

namespace vtx {

// Line-oriented structure description.
//
//   [meta]        name, kind (vertex-algebra | vertex-coalgebra |
//                 vertex-lie | comodule | voc), complete, known-max,
//                 pair-cap, rank, over-complete, over-known-max
//   [space]       rows "weight: dim: label ... label"
//   [vacuum] / [covacuum] / [rho]
//                 a single coefficient sum "c*label + c*label"
//   [products] / [coproducts]
//                 rows "u, n, v -> c*label + ...": for algebras the sum is
//                 u_n v; for coalgebras it lists the functionals w with
//                 <Delta_n(w), u (x) v> = c, so the same grammar serves
//                 both directions of the pairing
//   [derivation]  rows "u -> c*label + ..." (vertex-lie D)
//   [form]        optional Gram rows "u -> c*label + ..."
//   [over-space] / [over-covacuum] / [over-coproducts]
//                 the base coalgebra of a comodule
//
// Rationals are "p/q".  Parsing is total-or-error with 1-based line
// numbers; weight rules are checked per row at load.
struct SpecError : std::runtime_error {
  long line;
  SpecError(long l, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ": " + msg),
        line(l) {}
};

struct SpecFile {
  std::string name;
  std::string kind;
  std::variant<VertexAlgebra, VertexCoalgebra, VertexLieAlgebra, Comodule,
               VocData>
      value;
  std::optional<BilinearForm> form;
};

SpecFile parse_spec_file(const std::string& text);
std::string serialize_spec_file(const SpecFile& f);

}  // namespace vtx

#endif
