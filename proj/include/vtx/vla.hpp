#ifndef VTX_VLA_HPP
#define VTX_VLA_HPP

#include <utility>

#include "vtx/report.hpp"
#include "vtx/structures.hpp"

namespace vtx {

// Mode symbol v_n of the affinization: (vertex-Lie basis label, mode).
using ModeSym = std::pair<std::string, long>;
using LieVec = SparseVec<ModeSym>;

inline std::string sym_name(const ModeSym& s) {
  return s.first + "(" + std::to_string(s.second) + ")";
}

// The Lie algebra L(V) = (V (x) F[q,q^-1]) / {(Dv)_n + n v_{n-1}} with
// bracket [u_m, v_n] = sum_i binom(m, i) (u_i v)_{m+n-i} (standard
// convention) or binom(n, i) (the printed variant, behind a flag).
class LieAlgebraData {
 public:
  LieAlgebraData(const VertexLieAlgebra& vla, long mode_bound,
                 bool printed_variant);

  const VertexLieAlgebra& vla() const { return vla_; }
  long mode_bound() const { return mode_bound_; }

  Rational sym_weight(const ModeSym& s) const {
    return vla_.space.weight(s.first) - s.second - 1;
  }

  // Image of an arbitrary symbol in the canonical quotient basis.
  LieVec reduce(const ModeSym& s) const;
  // Canonical basis symbols with |mode| <= mode_bound.
  std::vector<ModeSym> basis() const;

  LieVec bracket(const ModeSym& a, const ModeSym& b) const;
  LieVec bracket(const LieVec& a, const LieVec& b) const;

  // Antisymmetry and the Lie Jacobi identity, brute-forced over the
  // enumerated basis.
  Report check_lie_axioms() const;

 private:
  const std::map<std::string, LieVec>& reductions_at(const Rational& w) const;

  VertexLieAlgebra vla_;
  long mode_bound_;
  bool printed_variant_;
  mutable std::map<Rational, std::map<std::string, LieVec>> reduce_cache_;
};

inline LieAlgebraData affinize(const VertexLieAlgebra& vla, long mode_bound,
                               bool printed_variant = false) {
  return LieAlgebraData(vla, mode_bound, printed_variant);
}

// PBW monomial over creation symbols, sorted by (mode asc, label asc);
// empty = vacuum.
using PbwMonomial = std::vector<ModeSym>;
using StateVec = SparseVec<PbwMonomial>;

std::string pbw_name(const PbwMonomial& m);

// The enveloping vertex algebra V(V) = U(L(V)) (x)_{U(L+)} F sliced at
// weight <= cutoff.  Weight-0 creation symbols (central modes) get their
// multiplicity capped at zero_weight_cap to keep the slice finite.
class Envelope {
 public:
  Envelope(const VertexLieAlgebra& vla, int weight_cutoff,
           int zero_weight_cap = 2);

  const LieAlgebraData& lie() const { return lie_; }
  const std::vector<PbwMonomial>& basis() const { return basis_; }

  Rational weight(const PbwMonomial& m) const;

  // Lie-algebra action of a canonical symbol on a state (exact, no basis
  // restriction).
  StateVec apply_sym(const ModeSym& s, const StateVec& v) const;
  StateVec apply_lie(const LieVec& l, const StateVec& v) const;
  // Mode u_n v of the vertex algebra structure, via the reconstruction
  // recursion on the left monomial (exact).
  StateVec state_mode(const PbwMonomial& u, long n, const PbwMonomial& v) const;

  // iota(v) = v_{-1} vacuum for a vertex-Lie basis label.
  StateVec iota(const std::string& vla_label) const;

  // Structure-constant table over the enumerated basis.  Entries are
  // exact projections onto the slice.
  VertexAlgebra to_vertex_algebra() const;

 private:
  StateVec apply_one(const ModeSym& s, const PbwMonomial& m) const;

  LieAlgebraData lie_;
  int cutoff_;
  int zero_cap_;
  std::vector<PbwMonomial> basis_;
  mutable std::map<std::pair<ModeSym, PbwMonomial>, StateVec> apply_cache_;
  mutable std::map<std::tuple<PbwMonomial, long, PbwMonomial>, StateVec>
      mode_cache_;
};

// Builtin vertex Lie algebras.  Each carries a D-power chain of length
// `chain` above its generators; the slice is weight-truncated accordingly.
VertexLieAlgebra abelian_vla(int chain = 4);
VertexLieAlgebra heisenberg_vla(int chain = 4);
VertexLieAlgebra virasoro_vla(const Rational& d, int chain = 4);

// Truncation, half Jacobi identity, half skew-symmetry and D-bracket on
// the derivable region.
Report check_vla_axioms(const VertexLieAlgebra& L, Window w);

}  // namespace vtx

#endif
