#ifndef VTX_STRUCTURES_HPP
#define VTX_STRUCTURES_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "vtx/graded.hpp"
#include "vtx/laurent.hpp"

namespace vtx {

// A structure constant was requested outside the region where the stored
// table determines it.  Checkers catch this and report inconclusive cells;
// it is never silently treated as zero.
struct IncompleteData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using VecPoly = Poly<Vec>;
using TensorPoly = Poly<TensorVec>;

// Graded vertex algebra as a structure-constant table u_n v on basis
// labels.  When weight_complete is false the space is a weight-truncated
// slice of a larger algebra: entries of weight above known_weight_max are
// not derivable, and stored entries are the exact projections of the true
// products onto the enumerated basis.
struct VertexAlgebra {
  std::string name;
  GradedSpace space;
  Vec vacuum;
  // u -> n -> v -> u_n v
  std::map<std::string, std::map<long, std::map<std::string, Vec>>> products;

  bool weight_complete = true;
  Rational known_weight_max = 0;
  // For tables obtained by dualizing a coalgebra: v_n w is only determined
  // when wt(v)+wt(w) stays within the dualized slice.
  std::optional<Rational> pair_weight_cap;

  bool product_derivable(const std::string& u, long n,
                         const std::string& v) const;
  // Table lookup on basis labels; throws IncompleteData outside the
  // derivable region.
  Vec basis_product(const std::string& u, long n, const std::string& v) const;
  // Validates vacuum weight, the weight rule on every stored entry, and
  // Y(1,x) = Id on the basis.
  void validate() const;
};

// Bilinear extension of the table.
Vec mode_product(const VertexAlgebra& A, const Vec& u, long n, const Vec& v);

// Y(u,x)v assembled over x-exponents inside win.
VecPoly va_field(const VertexAlgebra& A, const Vec& u, const Vec& v, Var x,
                 Window win);

// Graded vertex coalgebra: coproduct components Delta_k(v) in V (x) V.
// Yc(x)v = sum_k Delta_k(v) x^{-k-1}.  Completeness rule for truncated
// instances: Delta_k(v) is derivable iff wt(v)+k+1 <= known_weight_max
// (its target weight is inside the stored slice) or is forced zero by the
// lower weight bound.
struct VertexCoalgebra {
  std::string name;
  GradedSpace space;
  Vec covacuum;  // functional on the basis, concentrated in weight 0
  std::map<std::string, std::map<long, TensorVec>> coproducts;

  bool weight_complete = true;
  Rational known_weight_max = 0;

  bool coproduct_derivable(const std::string& v, long k) const;
  TensorVec basis_coproduct(const std::string& v, long k) const;
  // All k with Delta_k(v) possibly nonzero for some basis v (by grading).
  long min_mode() const;
  long max_mode() const;
  void validate() const;
};

TensorVec coproduct_component(const VertexCoalgebra& C, const Vec& v, long k);

// Yc(x)v over x-exponents inside win.
TensorPoly yc_field(const VertexCoalgebra& C, const Vec& v, Var x, Window win);

// D* = (Id (x) c) Delta_{-2}; weight -1.
Vec dstar(const VertexCoalgebra& C, const Vec& v);

// e^{h D*} v as a polynomial in h; terminates since weights are bounded
// below.
VecPoly exp_dstar(const VertexCoalgebra& C, const Vec& v, Var h);
// D* as a basis-column map (throws IncompleteData if some column is not
// derivable).
GradedMap dstar_map(const VertexCoalgebra& C);

// Vertex Lie algebra: nonnegative modes u_k v (k >= 0) plus derivation D
// of weight +1.  In truncated instances D(v) is derivable iff
// wt(v)+1 <= known_weight_max.
struct VertexLieAlgebra {
  std::string name;
  GradedSpace space;
  GradedMap D;  // shift +1
  std::map<std::string, std::map<long, std::map<std::string, Vec>>> products;

  bool weight_complete = true;
  Rational known_weight_max = 0;

  bool product_derivable(const std::string& u, long k,
                         const std::string& v) const;
  bool d_derivable(const std::string& v) const;
  Vec basis_product(const std::string& u, long k, const std::string& v) const;
  Vec apply_d(const Vec& v) const;
  void validate() const;
};

Vec vla_product(const VertexLieAlgebra& L, const Vec& u, long k, const Vec& v);

// Comodule over a vertex coalgebra: Y_M(x)w = sum_k Delta_k(w) x^{-k-1}
// with Delta_k(w) in V (x) M.  Tensor keys are {V label, M label}.
struct Comodule {
  std::string name;
  GradedSpace space;  // rational weights allowed
  VertexCoalgebra over;
  std::map<std::string, std::map<long, TensorVec>> coproducts;

  bool weight_complete = true;
  Rational known_weight_max = 0;

  bool coproduct_derivable(const std::string& w, long k) const;
  TensorVec basis_coproduct(const std::string& w, long k) const;
  void validate() const;
};

TensorVec comodule_component(const Comodule& M, const Vec& w, long k);
TensorPoly ym_field(const Comodule& M, const Vec& w, Var x, Window win);

// Vertex operator coalgebra data: rank and the Virasoro functional rho.
// L(k) = (rho (x) Id) Delta_{1-k} read off from
// (rho (x) Id) Yc(x) = sum_k L(k) x^{k-2}.
struct VocData {
  VertexCoalgebra base;
  Rational rank = 0;
  Vec rho;  // functional, concentrated in weight 2

  bool l_derivable(long k) const;
  GradedMap L(long k) const;  // throws IncompleteData when not derivable
};

}  // namespace vtx

#endif
