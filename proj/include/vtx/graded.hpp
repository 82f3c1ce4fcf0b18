#ifndef VTX_GRADED_HPP
#define VTX_GRADED_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vtx/rational.hpp"

namespace vtx {

// Sparse coefficient vector over basis labels of type K.  Doubles as the
// representation of graded-dual functionals (coefficients on the dual basis).
template <class K>
struct SparseVec {
  std::map<K, Rational> c;

  SparseVec() = default;

  bool empty() const { return c.empty(); }

  Rational coeff(const K& k) const {
    auto it = c.find(k);
    return it == c.end() ? Rational(0) : it->second;
  }

  void add(const K& k, const Rational& v) {
    if (vtx::is_zero(v)) return;
    auto [it, inserted] = c.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (vtx::is_zero(it->second)) c.erase(it);
    }
  }

  SparseVec& operator+=(const SparseVec& o) {
    for (const auto& [k, v] : o.c) add(k, v);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    for (const auto& [k, v] : o.c) add(k, -v);
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }

  friend SparseVec operator*(const SparseVec& a, const Rational& s) {
    SparseVec out;
    if (vtx::is_zero(s)) return out;
    for (const auto& [k, v] : a.c) out.c[k] = v * s;
    return out;
  }

  bool operator==(const SparseVec& o) const { return c == o.c; }
};

template <class K>
bool is_zero(const SparseVec<K>& v) {
  return v.c.empty();
}

using Vec = SparseVec<std::string>;
// Tensor basis tuples (2 or 3 factors) as label lists.
using TensorKey = std::vector<std::string>;
using TensorVec = SparseVec<TensorKey>;

inline Vec unit_vec(const std::string& label, Rational s = 1) {
  Vec v;
  v.add(label, s);
  return v;
}

// Natural pairing of a functional with a vector over the same basis:
// dual-basis orthonormal, extended bilinearly.
template <class K>
Rational pair(const SparseVec<K>& f, const SparseVec<K>& v) {
  const auto& small = f.c.size() <= v.c.size() ? f : v;
  const auto& big = f.c.size() <= v.c.size() ? v : f;
  Rational out = 0;
  for (const auto& [k, a] : small.c) {
    auto it = big.c.find(k);
    if (it != big.c.end()) out += a * it->second;
  }
  return out;
}

inline TensorVec tensor(const Vec& a, const Vec& b) {
  TensorVec out;
  for (const auto& [ka, ca] : a.c)
    for (const auto& [kb, cb] : b.c) out.add({ka, kb}, ca * cb);
  return out;
}

inline TensorVec tensor(const Vec& a, const TensorVec& b) {
  TensorVec out;
  for (const auto& [ka, ca] : a.c)
    for (const auto& [kb, cb] : b.c) {
      TensorKey k;
      k.reserve(1 + kb.size());
      k.push_back(ka);
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(k, ca * cb);
    }
  return out;
}

inline TensorVec tensor(const TensorVec& a, const Vec& b) {
  TensorVec out;
  for (const auto& [ka, ca] : a.c)
    for (const auto& [kb, cb] : b.c) {
      TensorKey k = ka;
      k.push_back(kb);
      out.add(k, ca * cb);
    }
  return out;
}

// T(u (x) v) = v (x) u on 2-fold tensors.
inline TensorVec transposition_T(const TensorVec& t) {
  TensorVec out;
  for (const auto& [k, v] : t.c) {
    if (k.size() != 2)
      throw std::invalid_argument("transposition_T: need a 2-fold tensor");
    out.add({k[1], k[0]}, v);
  }
  return out;
}

// Finite-dimensionally graded basis: weight -> ordered labels.
class GradedSpace {
 public:
  bool integer_weights = true;

  void add(const Rational& w, const std::string& label) {
    if (wt_.count(label))
      throw std::invalid_argument("GradedSpace: duplicate label " + label);
    if (integer_weights && denominator(w) != 1)
      throw std::invalid_argument("GradedSpace: non-integer weight for " +
                                  label);
    pieces_[w].push_back(label);
    wt_[label] = w;
  }

  bool has(const std::string& label) const { return wt_.count(label) != 0; }

  const Rational& weight(const std::string& label) const {
    auto it = wt_.find(label);
    if (it == wt_.end())
      throw std::invalid_argument("GradedSpace: unknown label " + label);
    return it->second;
  }

  bool empty() const { return wt_.empty(); }
  std::size_t dim() const { return wt_.size(); }

  Rational min_weight() const {
    if (pieces_.empty()) throw std::logic_error("GradedSpace: empty");
    return pieces_.begin()->first;
  }
  Rational max_weight() const {
    if (pieces_.empty()) throw std::logic_error("GradedSpace: empty");
    return pieces_.rbegin()->first;
  }

  const std::map<Rational, std::vector<std::string>>& pieces() const {
    return pieces_;
  }

  // All labels, weight-ascending, insertion order within a weight.
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(wt_.size());
    for (const auto& [w, ls] : pieces_)
      out.insert(out.end(), ls.begin(), ls.end());
    return out;
  }

  // Homogeneous weight of v; nullopt for v = 0; throws on mixed weights.
  std::optional<Rational> homogeneous_weight(const Vec& v) const {
    std::optional<Rational> w;
    for (const auto& [k, c] : v.c) {
      const Rational& wk = weight(k);
      if (!w) {
        w = wk;
      } else if (*w != wk) {
        throw std::invalid_argument("GradedSpace: vector not homogeneous");
      }
    }
    return w;
  }

  // Weight of a tensor tuple over `factors` (nullptr entries mean this space).
  Rational tuple_weight(const TensorKey& k,
                        const std::vector<const GradedSpace*>& factors) const {
    if (k.size() != factors.size())
      throw std::invalid_argument("GradedSpace: tuple arity mismatch");
    Rational w = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const GradedSpace* s = factors[i] ? factors[i] : this;
      w += s->weight(k[i]);
    }
    return w;
  }

 private:
  std::map<Rational, std::vector<std::string>> pieces_;
  std::map<std::string, Rational> wt_;
};

// Weight-homogeneous linear map, stored as image columns on basis labels.
// Labels keep their weights under transpose, so the transpose of a map of
// weight shift d has shift -d on the dual side.
struct GradedMap {
  Rational shift = 0;
  std::map<std::string, Vec> cols;

  Vec apply(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v.c) {
      auto it = cols.find(k);
      if (it == cols.end()) continue;
      out += it->second * c;
    }
    return out;
  }

  void set(const std::string& label, Vec image) {
    if (!image.empty()) cols[label] = std::move(image);
  }

  static GradedMap identity(const GradedSpace& s) {
    GradedMap m;
    for (const auto& l : s.labels()) m.cols[l] = unit_vec(l);
    return m;
  }

  GradedMap transpose() const {
    GradedMap out;
    out.shift = -shift;
    for (const auto& [src, img] : cols)
      for (const auto& [dst, c] : img.c) out.cols[dst].add(src, c);
    return out;
  }

  // this after other.
  GradedMap compose(const GradedMap& other) const {
    GradedMap out;
    out.shift = shift + other.shift;
    for (const auto& [src, img] : other.cols) out.set(src, apply(img));
    return out;
  }

  bool operator==(const GradedMap& o) const {
    return shift == o.shift && cols == o.cols;
  }

  // Every column image homogeneous of source weight + shift.
  bool respects_grading(const GradedSpace& dom, const GradedSpace& cod) const {
    for (const auto& [src, img] : cols) {
      Rational want = dom.weight(src) + shift;
      for (const auto& [dst, c] : img.c)
        if (cod.weight(dst) != want) return false;
    }
    return true;
  }
};

// Apply m to tensor factor `slot` of t.
inline TensorVec apply_factor(const GradedMap& m, const TensorVec& t,
                              std::size_t slot) {
  TensorVec out;
  for (const auto& [k, c] : t.c) {
    if (slot >= k.size())
      throw std::invalid_argument("apply_factor: slot out of range");
    auto it = m.cols.find(k[slot]);
    if (it == m.cols.end()) continue;
    for (const auto& [dst, cc] : it->second.c) {
      TensorKey nk = k;
      nk[slot] = dst;
      out.add(nk, c * cc);
    }
  }
  return out;
}

}  // namespace vtx

#endif
