#include "vtx/structures.hpp"

namespace vtx {

namespace {

// Forced-zero / derivable / unknown triage shared by all tables keyed by a
// result weight.
enum class Cell { zero, stored, unknown };

Cell triage(const GradedSpace& space, bool weight_complete,
            const Rational& known_max, const Rational& result_weight) {
  if (space.pieces().empty()) return Cell::zero;
  if (result_weight < space.min_weight()) return Cell::zero;
  if (weight_complete) {
    if (!space.pieces().count(result_weight)) return Cell::zero;
    return Cell::stored;
  }
  if (result_weight > known_max) return Cell::unknown;
  return Cell::stored;
}

}  // namespace

bool VertexAlgebra::product_derivable(const std::string& u, long n,
                                      const std::string& v) const {
  Rational w = space.weight(u) + space.weight(v) - n - 1;
  Cell cell = triage(space, weight_complete, known_weight_max, w);
  if (cell == Cell::zero) return true;
  if (cell == Cell::unknown) return false;
  if (pair_weight_cap && space.weight(u) + space.weight(v) > *pair_weight_cap)
    return false;
  return true;
}

Vec VertexAlgebra::basis_product(const std::string& u, long n,
                                 const std::string& v) const {
  if (!product_derivable(u, n, v))
    throw IncompleteData(name + ": product " + u + "_(" + std::to_string(n) +
                         ") " + v + " not derivable");
  auto itu = products.find(u);
  if (itu == products.end()) return {};
  auto itn = itu->second.find(n);
  if (itn == itu->second.end()) return {};
  auto itv = itn->second.find(v);
  if (itv == itn->second.end()) return {};
  return itv->second;
}

void VertexAlgebra::validate() const {
  if (space.homogeneous_weight(vacuum) != Rational(0))
    throw std::invalid_argument(name + ": vacuum not homogeneous of weight 0");
  for (const auto& [u, per_n] : products)
    for (const auto& [n, per_v] : per_n)
      for (const auto& [v, img] : per_v) {
        Rational want = space.weight(u) + space.weight(v) - n - 1;
        for (const auto& [l, c] : img.c)
          if (space.weight(l) != want)
            throw std::invalid_argument(
                name + ": weight rule broken at " + u + "_(" +
                std::to_string(n) + ") " + v + " -> " + l);
      }
  // Y(1,x) = Id.
  long span = static_cast<long>(space.pieces().empty()
                                    ? 0
                                    : numerator(space.max_weight() -
                                                space.min_weight()));
  for (const auto& v : space.labels()) {
    for (long n = -span - 2; n <= span + 2; ++n) {
      bool ok = true;
      for (const auto& [l, c] : vacuum.c)
        if (!product_derivable(l, n, v)) ok = false;
      if (!ok) continue;
      Vec got = mode_product(*this, vacuum, n, unit_vec(v));
      Vec want = n == -1 ? unit_vec(v) : Vec{};
      if (!(got == want))
        throw std::invalid_argument(name + ": Y(1,x) is not the identity at " +
                                    v + ", mode " + std::to_string(n));
    }
  }
}

Vec mode_product(const VertexAlgebra& A, const Vec& u, long n, const Vec& v) {
  Vec out;
  for (const auto& [lu, cu] : u.c)
    for (const auto& [lv, cv] : v.c)
      out += A.basis_product(lu, n, lv) * (cu * cv);
  return out;
}

VecPoly va_field(const VertexAlgebra& A, const Vec& u, const Vec& v, Var x,
                 Window win) {
  VecPoly out;
  for (int e = win.lo; e <= win.hi; ++e)
    out.add_term(mono(x, e), mode_product(A, u, -e - 1, v));
  return out;
}

bool VertexCoalgebra::coproduct_derivable(const std::string& v,
                                          long k) const {
  if (space.pieces().empty()) return true;
  Rational t = space.weight(v) + k + 1;
  Rational mn = space.min_weight();
  if (t < mn + mn) return true;  // forced zero by the grading
  if (weight_complete) return true;
  // A tensor component can carry weight up to t - mn on one side.
  return t - mn <= known_weight_max;
}

TensorVec VertexCoalgebra::basis_coproduct(const std::string& v,
                                           long k) const {
  if (!coproduct_derivable(v, k))
    throw IncompleteData(name + ": Delta_" + std::to_string(k) + "(" + v +
                         ") not derivable");
  auto itv = coproducts.find(v);
  if (itv == coproducts.end()) return {};
  auto itk = itv->second.find(k);
  if (itk == itv->second.end()) return {};
  return itk->second;
}

long VertexCoalgebra::min_mode() const {
  if (space.pieces().empty()) return 0;
  // Delta_k(v) targets weight wt(v)+k+1 >= 2*min, so over all basis v the
  // smallest possible mode is 2*min - top - 1.
  Rational top = weight_complete ? space.max_weight() : known_weight_max;
  return to_long(space.min_weight() + space.min_weight() - top) - 1;
}

long VertexCoalgebra::max_mode() const {
  if (space.pieces().empty()) return 0;
  // Target weight can reach 2*top, so modes run up to 2*top - min - 1.
  Rational top = weight_complete ? space.max_weight() : known_weight_max;
  return to_long(top + top - space.min_weight()) - 1;
}

void VertexCoalgebra::validate() const {
  for (const auto& [l, c] : covacuum.c)
    if (space.weight(l) != Rational(0))
      throw std::invalid_argument(name +
                                  ": covacuum not concentrated in weight 0");
  for (const auto& [v, per_k] : coproducts)
    for (const auto& [k, tv] : per_k) {
      Rational want = space.weight(v) + k + 1;
      for (const auto& [key, c] : tv.c) {
        if (key.size() != 2)
          throw std::invalid_argument(name + ": coproduct arity");
        if (space.weight(key[0]) + space.weight(key[1]) != want)
          throw std::invalid_argument(name + ": weight rule broken at Delta_" +
                                      std::to_string(k) + "(" + v + ")");
      }
    }
}

TensorVec coproduct_component(const VertexCoalgebra& C, const Vec& v, long k) {
  TensorVec out;
  for (const auto& [l, c] : v.c) out += C.basis_coproduct(l, k) * c;
  return out;
}

TensorPoly yc_field(const VertexCoalgebra& C, const Vec& v, Var x,
                    Window win) {
  TensorPoly out;
  for (int e = win.lo; e <= win.hi; ++e)
    out.add_term(mono(x, e), coproduct_component(C, v, -e - 1));
  return out;
}

Vec dstar(const VertexCoalgebra& C, const Vec& v) {
  TensorVec d = coproduct_component(C, v, -2);
  Vec out;
  for (const auto& [key, c] : d.c)
    out.add(key[0], c * C.covacuum.coeff(key[1]));
  return out;
}

VecPoly exp_dstar(const VertexCoalgebra& C, const Vec& v, Var h) {
  VecPoly out;
  Vec cur = v;
  Rational fact = 1;
  for (long j = 0; !cur.empty(); ++j) {
    if (j > 0) fact *= j;
    out.add_term(mono(h, static_cast<int>(j)), cur * (Rational(1) / fact));
    cur = dstar(C, cur);
  }
  return out;
}

GradedMap dstar_map(const VertexCoalgebra& C) {
  GradedMap m;
  m.shift = -1;
  for (const auto& l : C.space.labels()) m.set(l, dstar(C, unit_vec(l)));
  return m;
}

bool VertexLieAlgebra::product_derivable(const std::string& u, long k,
                                         const std::string& v) const {
  if (k < 0) throw std::invalid_argument(name + ": negative mode");
  Rational w = space.weight(u) + space.weight(v) - k - 1;
  return triage(space, weight_complete, known_weight_max, w) != Cell::unknown;
}

bool VertexLieAlgebra::d_derivable(const std::string& v) const {
  Rational w = space.weight(v) + 1;
  return triage(space, weight_complete, known_weight_max, w) != Cell::unknown;
}

Vec VertexLieAlgebra::basis_product(const std::string& u, long k,
                                    const std::string& v) const {
  if (!product_derivable(u, k, v))
    throw IncompleteData(name + ": product " + u + "_(" + std::to_string(k) +
                         ") " + v + " not derivable");
  auto itu = products.find(u);
  if (itu == products.end()) return {};
  auto itk = itu->second.find(k);
  if (itk == itu->second.end()) return {};
  auto itv = itk->second.find(v);
  if (itv == itk->second.end()) return {};
  return itv->second;
}

Vec VertexLieAlgebra::apply_d(const Vec& v) const {
  for (const auto& [l, c] : v.c)
    if (!d_derivable(l))
      throw IncompleteData(name + ": D(" + l + ") not derivable");
  return D.apply(v);
}

void VertexLieAlgebra::validate() const {
  if (D.shift != Rational(1))
    throw std::invalid_argument(name + ": D must have weight +1");
  if (!D.respects_grading(space, space))
    throw std::invalid_argument(name + ": D breaks the grading");
  for (const auto& [u, per_k] : products)
    for (const auto& [k, per_v] : per_k) {
      if (k < 0) throw std::invalid_argument(name + ": negative stored mode");
      for (const auto& [v, img] : per_v) {
        Rational want = space.weight(u) + space.weight(v) - k - 1;
        for (const auto& [l, c] : img.c)
          if (space.weight(l) != want)
            throw std::invalid_argument(name + ": weight rule broken at " + u +
                                        "_(" + std::to_string(k) + ") " + v);
      }
    }
}

Vec vla_product(const VertexLieAlgebra& L, const Vec& u, long k,
                const Vec& v) {
  Vec out;
  for (const auto& [lu, cu] : u.c)
    for (const auto& [lv, cv] : v.c)
      out += L.basis_product(lu, k, lv) * (cu * cv);
  return out;
}

bool Comodule::coproduct_derivable(const std::string& w, long k) const {
  if (space.pieces().empty() || over.space.pieces().empty()) return true;
  Rational t = space.weight(w) + k + 1;
  Rational mnV = over.space.min_weight();
  Rational mnM = space.min_weight();
  if (t < mnV + mnM) return true;  // forced zero by the grading
  // Target weight splits as (V weight) + (M weight); either side can carry
  // up to t minus the other side's minimum.
  bool v_ok = over.weight_complete || t - mnM <= over.known_weight_max;
  bool m_ok = weight_complete || t - mnV <= known_weight_max;
  return v_ok && m_ok;
}

TensorVec Comodule::basis_coproduct(const std::string& w, long k) const {
  if (!coproduct_derivable(w, k))
    throw IncompleteData(name + ": Delta_" + std::to_string(k) + "(" + w +
                         ") not derivable");
  auto itw = coproducts.find(w);
  if (itw == coproducts.end()) return {};
  auto itk = itw->second.find(k);
  if (itk == itw->second.end()) return {};
  return itk->second;
}

void Comodule::validate() const {
  over.validate();
  for (const auto& [w, per_k] : coproducts)
    for (const auto& [k, tv] : per_k) {
      Rational want = space.weight(w) + k + 1;
      for (const auto& [key, c] : tv.c) {
        if (key.size() != 2)
          throw std::invalid_argument(name + ": coaction arity");
        if (over.space.weight(key[0]) + space.weight(key[1]) != want)
          throw std::invalid_argument(name + ": weight rule broken at Delta_" +
                                      std::to_string(k) + "(" + w + ")");
      }
    }
}

TensorVec comodule_component(const Comodule& M, const Vec& w, long k) {
  TensorVec out;
  for (const auto& [l, c] : w.c) out += M.basis_coproduct(l, k) * c;
  return out;
}

TensorPoly ym_field(const Comodule& M, const Vec& w, Var x, Window win) {
  TensorPoly out;
  for (int e = win.lo; e <= win.hi; ++e)
    out.add_term(mono(x, e), comodule_component(M, w, -e - 1));
  return out;
}

bool VocData::l_derivable(long k) const {
  for (const auto& v : base.space.labels())
    if (!base.coproduct_derivable(v, 1 - k)) return false;
  return true;
}

GradedMap VocData::L(long k) const {
  GradedMap m;
  m.shift = Rational(-k);
  for (const auto& v : base.space.labels()) {
    TensorVec d = base.basis_coproduct(v, 1 - k);
    Vec img;
    for (const auto& [key, c] : d.c) img.add(key[1], c * rho.coeff(key[0]));
    m.set(v, img);
  }
  return m;
}

}  // namespace vtx
