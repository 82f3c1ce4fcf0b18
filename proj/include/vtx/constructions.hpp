#ifndef VTX_CONSTRUCTIONS_HPP
#define VTX_CONSTRUCTIONS_HPP

#include "vtx/report.hpp"
#include "vtx/structures.hpp"

namespace vtx {

// Graded symmetric bilinear form, stored as rows u -> sum G(u,v) v'.
using BilinearForm = std::map<std::string, Vec>;

// 1-dimensional vertex algebra: Y(1,x) = Id.
VertexAlgebra trivial_va();

// F[t]/(t^{N+1}) with wt t^k = k, D t^k = k t^{k+1}, Y(a,x)b = (e^{xD}a)b.
// Labels t0..tN.  N <= 12.
VertexAlgebra commutative_va(int n);

// Graded dual within the weight window [w.lo, w.hi]:
// <Delta_k(u'), v (x) w> = <u', v_k w>, covacuum = double dual of the
// vacuum.  Dual-basis labels reuse the primal label strings.
VertexCoalgebra dualize(const VertexAlgebra& A, Window w);

// Dual of a coalgebra, inverse direction of the same pairing rule:
// <u', v_k w> := <Delta_k(u'), v (x) w>.
VertexAlgebra dualize_back(const VertexCoalgebra& C, Window w);

// Coalgebra on A's own space via a graded nondegenerate bilinear form:
// (Yc(x)u, v (x) w) = (u, Y(v,x)w).  Null form means the basis-diagonal
// default.
VertexCoalgebra coalgebra_from_form(const VertexAlgebra& A,
                                    const BilinearForm* form, Window w);

// Per-weight Gram inverse; throws on degenerate or non-graded forms.
BilinearForm invert_form(const GradedSpace& space, const BilinearForm& form);

// U(L) for an abelian L with generators e1..en: sorted monomial basis up
// to the degree cutoff, multiplication by multiset merge, and two
// comultiplications: `induced` transports the multiplication through the
// dual-basis identification (coefficient of v (x) w in Delta(u) equals the
// coefficient of u in v*w), `classical` extends the primitive rule
// Delta(e) = e (x) 1 + 1 (x) e multiplicatively.  The two agree on
// primitives but differ from degree 2 on (e.g. the e1 (x) e1 coefficient
// in Delta(e1^2) is 1 versus 2); the comparison is reported as data.
struct BialgebraData {
  GradedSpace space;  // graded by monomial degree
  Vec unit;           // empty monomial "1"
  std::map<std::string, std::map<std::string, Vec>> mult;
  std::map<std::string, TensorVec> induced;
  std::map<std::string, TensorVec> classical;
  long dim = 0;
  long cutoff = 0;
};

BialgebraData classical_enveloping(long dim, long degree_cutoff);

// Coassociativity and cocommutativity of the induced comultiplication
// (brute force within the cutoff), the primitive rule on the generators,
// and the induced-versus-classical comparison.
Report check_classical(const BialgebraData& B);

}  // namespace vtx

#endif
