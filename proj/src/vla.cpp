#include "vtx/vla.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>

namespace vtx {

LieAlgebraData::LieAlgebraData(const VertexLieAlgebra& vla, long mode_bound,
                               bool printed_variant)
    : vla_(vla), mode_bound_(mode_bound), printed_variant_(printed_variant) {}

// Canonical quotient form of all symbols of one weight.  At weight w each
// basis label v contributes exactly one symbol v_{wt(v)-1-w}; the quotient
// relations (Dv)_n = -n v_{n-1} are rows of a linear system eliminated
// towards high-weight labels, so generators survive as the canonical basis.
const std::map<std::string, LieVec>& LieAlgebraData::reductions_at(
    const Rational& w) const {
  auto found = reduce_cache_.find(w);
  if (found != reduce_cache_.end()) return found->second;

  std::vector<std::string> cols = vla_.space.labels();
  std::reverse(cols.begin(), cols.end());  // weight-descending
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;
  auto mode_of = [&](const std::string& l) {
    return to_long(vla_.space.weight(l) - 1 - w);
  };

  std::vector<std::vector<Rational>> rows;
  for (const auto& u : vla_.space.labels()) {
    if (!vla_.d_derivable(u)) continue;
    std::vector<Rational> r(cols.size(), 0);
    Vec du = vla_.D.apply(unit_vec(u));
    for (const auto& [l, c] : du.c) r[idx.at(l)] += c;
    r[idx.at(u)] += vla_.space.weight(u) - w;
    bool nonzero = false;
    for (const auto& x : r)
      if (!is_zero(x)) nonzero = true;
    if (nonzero) rows.push_back(std::move(r));
  }

  // Row echelon over the fixed column order.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || is_zero(rows[r][col])) continue;
      Rational f = rows[r][col];
      for (std::size_t j = 0; j < cols.size(); ++j)
        rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }

  std::map<std::string, LieVec> red;
  std::vector<bool> pivot_col(cols.size(), false);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t p = 0;
    while (p < cols.size() && is_zero(rows[r][p])) ++p;
    pivot_col[p] = true;
    LieVec img;
    for (std::size_t j = p + 1; j < cols.size(); ++j)
      if (!is_zero(rows[r][j]))
        img.add({cols[j], mode_of(cols[j])}, -rows[r][j]);
    red[cols[p]] = img;
  }
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!pivot_col[j]) {
      LieVec self;
      self.add({cols[j], mode_of(cols[j])}, 1);
      red[cols[j]] = self;
    }
  // Pivot images may still reference pivot columns further right; resolve.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [l, img] : red) {
      LieVec out;
      for (const auto& [s, c] : img.c) {
        const LieVec& r2 = red.at(s.first);
        if (r2.c.size() == 1 && r2.c.begin()->first == s) {
          out.add(s, c);
        } else {
          out += r2 * c;
          changed = true;
        }
      }
      img = out;
    }
  }
  return reduce_cache_.emplace(w, std::move(red)).first->second;
}

LieVec LieAlgebraData::reduce(const ModeSym& s) const {
  return reductions_at(sym_weight(s)).at(s.first);
}

std::vector<ModeSym> LieAlgebraData::basis() const {
  std::vector<ModeSym> out;
  for (long m = -mode_bound_; m <= mode_bound_; ++m)
    for (const auto& l : vla_.space.labels()) {
      ModeSym s{l, m};
      LieVec r = reduce(s);
      if (r.c.size() == 1 && r.c.begin()->first == s &&
          r.c.begin()->second == Rational(1))
        out.push_back(s);
    }
  std::sort(out.begin(), out.end(), [](const ModeSym& a, const ModeSym& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });
  return out;
}

LieVec LieAlgebraData::bracket(const ModeSym& a, const ModeSym& b) const {
  const auto& [u, m] = a;
  const auto& [v, n] = b;
  LieVec out;
  long imax = to_long(vla_.space.weight(u) + vla_.space.weight(v)) - 1;
  for (long i = 0; i <= imax; ++i) {
    Rational coef = binomial(printed_variant_ ? n : m, i);
    if (is_zero(coef)) continue;
    Vec p = vla_.basis_product(u, i, v);
    for (const auto& [l, c] : p.c)
      out += reduce({l, m + n - i}) * (coef * c);
  }
  return out;
}

LieVec LieAlgebraData::bracket(const LieVec& a, const LieVec& b) const {
  LieVec out;
  for (const auto& [sa, ca] : a.c)
    for (const auto& [sb, cb] : b.c) out += bracket(sa, sb) * (ca * cb);
  return out;
}

Report LieAlgebraData::check_lie_axioms() const {
  Report rep;
  rep.structure = "affinization(" + vla_.name + ")";
  rep.window = Window{static_cast<int>(-mode_bound_),
                      static_cast<int>(mode_bound_)};
  std::vector<ModeSym> b = basis();
  bool anti_ok = true, jac_ok = true;
  std::string anti_wit, jac_wit;
  long anti_cells = 0, jac_cells = 0;
  bool incomplete = false;
  for (const auto& x : b)
    for (const auto& y : b) {
      try {
        LieVec s = bracket(x, y) + bracket(y, x);
        ++anti_cells;
        if (!s.empty() && anti_ok) {
          anti_ok = false;
          anti_wit = "[" + sym_name(x) + "," + sym_name(y) + "] + [" +
                     sym_name(y) + "," + sym_name(x) + "] != 0";
        }
      } catch (const IncompleteData&) {
        incomplete = true;
      }
    }
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b) {
        auto one = [](const ModeSym& s) {
          LieVec v;
          v.add(s, 1);
          return v;
        };
        try {
          LieVec s = bracket(one(x), bracket(y, z));
          s += bracket(one(y), bracket(z, x));
          s += bracket(one(z), bracket(x, y));
          ++jac_cells;
          if (!s.empty() && jac_ok) {
            jac_ok = false;
            jac_wit = "triple (" + sym_name(x) + "," + sym_name(y) + "," +
                      sym_name(z) + ")";
          }
        } catch (const IncompleteData&) {
          incomplete = true;
        }
      }
  auto entry = [&](const char* name, bool ok, long cells, std::string wit) {
    if (!ok)
      rep.add(name, Status::fail, std::move(wit));
    else if (cells == 0)
      rep.add(name, Status::inconclusive, "no derivable cells");
    else
      rep.add(name, Status::pass);
  };
  entry("lie_antisymmetry", anti_ok, anti_cells, std::move(anti_wit));
  entry("lie_jacobi", jac_ok, jac_cells, std::move(jac_wit));
  if (incomplete && rep.verdict() == Status::pass)
    rep.add("lie_coverage", Status::pass,
            "some cells skipped outside the stored slice");
  return rep;
}

std::string pbw_name(const PbwMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ".";
    out += sym_name(m[i]);
  }
  return out;
}

namespace {

bool sym_less(const ModeSym& a, const ModeSym& b) {
  return std::tie(a.second, a.first) < std::tie(b.second, b.first);
}

}  // namespace

Envelope::Envelope(const VertexLieAlgebra& vla, int weight_cutoff,
                   int zero_weight_cap)
    : lie_(vla, weight_cutoff + to_long(vla.space.max_weight()) + 4, false),
      cutoff_(weight_cutoff),
      zero_cap_(zero_weight_cap) {
  // Creation symbols of weight <= cutoff, in PBW order.
  std::vector<ModeSym> gens;
  for (const auto& s : lie_.basis())
    if (s.second < 0 && lie_.sym_weight(s) <= Rational(cutoff_))
      gens.push_back(s);
  // Multisets of gens with weight sum <= cutoff and at most zero_cap
  // weight-0 symbols.
  std::vector<PbwMonomial> out{{}};
  std::function<void(std::size_t, PbwMonomial&, Rational, int)> rec =
      [&](std::size_t i, PbwMonomial& cur, Rational wsum, int zeros) {
        if (i == gens.size()) return;
        rec(i + 1, cur, wsum, zeros);
        Rational gw = lie_.sym_weight(gens[i]);
        Rational w = wsum + gw;
        int z = zeros + (gw == Rational(0) ? 1 : 0);
        while (w <= Rational(cutoff_) && z <= zero_cap_) {
          cur.push_back(gens[i]);
          out.push_back(cur);
          rec(i + 1, cur, w, z);
          w += gw;
          z += gw == Rational(0) ? 1 : 0;
          if (gw == Rational(0) && z > zero_cap_) break;
          if (gw > Rational(0) && w > Rational(cutoff_)) break;
        }
        while (!cur.empty() && cur.back() == gens[i]) cur.pop_back();
      };
  PbwMonomial cur;
  rec(0, cur, 0, 0);
  for (auto& m : out) std::sort(m.begin(), m.end(), sym_less);
  std::sort(out.begin(), out.end(), [&](const PbwMonomial& a,
                                        const PbwMonomial& b) {
    return std::make_tuple(weight(a), pbw_name(a)) <
           std::make_tuple(weight(b), pbw_name(b));
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  basis_ = std::move(out);
}

Rational Envelope::weight(const PbwMonomial& m) const {
  Rational w = 0;
  for (const auto& s : m) w += lie_.sym_weight(s);
  return w;
}

StateVec Envelope::apply_one(const ModeSym& s, const PbwMonomial& m) const {
  auto key = std::make_pair(s, m);
  auto it = apply_cache_.find(key);
  if (it != apply_cache_.end()) return it->second;
  StateVec out;
  if (m.empty()) {
    if (s.second < 0) out.add({s}, 1);
  } else if (!sym_less(m.front(), s)) {
    PbwMonomial nm;
    nm.reserve(m.size() + 1);
    nm.push_back(s);
    nm.insert(nm.end(), m.begin(), m.end());
    out.add(nm, 1);
  } else {
    ModeSym h = m.front();
    PbwMonomial rest(m.begin() + 1, m.end());
    out = apply_sym(h, apply_one(s, rest));
    StateVec rv;
    rv.add(rest, 1);
    out += apply_lie(lie_.bracket(s, h), rv);
  }
  apply_cache_.emplace(std::move(key), out);
  return out;
}

StateVec Envelope::apply_sym(const ModeSym& s, const StateVec& v) const {
  StateVec out;
  for (const auto& [m, c] : v.c) out += apply_one(s, m) * c;
  return out;
}

StateVec Envelope::apply_lie(const LieVec& l, const StateVec& v) const {
  StateVec out;
  for (const auto& [s, c] : l.c) out += apply_sym(s, v) * c;
  return out;
}

StateVec Envelope::state_mode(const PbwMonomial& u, long n,
                              const PbwMonomial& v) const {
  auto key = std::make_tuple(u, n, v);
  auto it = mode_cache_.find(key);
  if (it != mode_cache_.end()) return it->second;
  StateVec out;
  if (u.empty()) {
    if (n == -1) out.add(v, 1);
  } else {
    // u = s.b with s = c_m, m < 0:
    // (c_m b)_n = sum_i (-1)^i binom(m,i)
    //             (c_{m-i} b_{n+i} - (-1)^m b_{m+n-i} c_i).
    ModeSym s = u.front();
    PbwMonomial b(u.begin() + 1, u.end());
    long m = s.second;
    Rational wc = lie_.vla().space.weight(s.first);
    long bound1 = to_long(weight(b) + weight(v)) - n - 1;
    long bound2 = to_long(wc + weight(v)) - 1;
    long imax = std::max({bound1, bound2, static_cast<long>(-1)});
    Rational msign = (m % 2 == 0) ? 1 : -1;
    for (long i = 0; i <= imax; ++i) {
      Rational coef = binomial(m, i);
      if (i % 2 != 0) coef = -coef;
      if (i <= bound1) {
        StateVec inner = state_mode(b, n + i, v);
        if (!inner.empty())
          out += apply_lie(lie_.reduce({s.first, m - i}), inner) * coef;
      }
      if (i <= bound2) {
        StateVec sv;
        sv.add(v, 1);
        StateVec inner = apply_lie(lie_.reduce({s.first, i}), sv);
        StateVec moved;
        for (const auto& [mv, cv] : inner.c)
          moved += state_mode(b, m + n - i, mv) * cv;
        out += moved * (coef * msign * Rational(-1));
      }
    }
  }
  mode_cache_.emplace(std::move(key), out);
  return out;
}

StateVec Envelope::iota(const std::string& vla_label) const {
  StateVec sv;
  sv.add({}, 1);
  return apply_lie(lie_.reduce({vla_label, -1}), sv);
}

VertexAlgebra Envelope::to_vertex_algebra() const {
  VertexAlgebra A;
  A.name = "envelope(" + lie_.vla().name + "," + std::to_string(cutoff_) + ")";
  std::map<PbwMonomial, std::string> names;
  for (const auto& m : basis_) {
    names[m] = pbw_name(m);
    A.space.add(weight(m), names[m]);
  }
  A.vacuum = unit_vec("1");
  A.weight_complete = false;
  A.known_weight_max = cutoff_;
  for (const auto& u : basis_)
    for (const auto& v : basis_) {
      long base = to_long(weight(u) + weight(v)) - 1;
      // Result weight base - n in [0, cutoff].
      for (long n = base - cutoff_; n <= base; ++n) {
        StateVec r = state_mode(u, n, v);
        Vec img;
        for (const auto& [m, c] : r.c) {
          auto it = names.find(m);
          if (it != names.end()) img.add(it->second, c);
        }
        if (!img.empty()) A.products[names[u]][n][names[v]] = img;
      }
    }
  A.validate();
  return A;
}

namespace {

struct Chain {
  std::string root;
  Rational wt;
  int len = 0;
};

std::string chain_label(const Chain& c, int j) {
  if (j == 0) return c.root;
  if (j == 1) return "D" + c.root;
  return "D" + std::to_string(j) + c.root;
}

// Build a vertex Lie algebra from D-power chains over a finite table of
// root products, extending via (Du)_k = -k u_{k-1} and
// u_k(Dv) = D(u_k v) + k u_{k-1} v.
VertexLieAlgebra build_chain_vla(
    const std::string& name, const std::vector<Chain>& chains,
    const std::map<std::pair<std::string, std::string>,
                   std::map<long, Vec>>& root_products) {
  VertexLieAlgebra L;
  L.name = name;
  // A chain of length 0 carries no D-truncation; only truncated chains
  // bound the complete slice.
  std::optional<Rational> known;
  for (const auto& c : chains) {
    for (int j = 0; j <= c.len; ++j) L.space.add(c.wt + j, chain_label(c, j));
    if (c.len > 0) {
      Rational top = c.wt + c.len;
      known = known ? std::min(*known, top) : top;
    }
  }
  L.weight_complete = !known.has_value();
  L.known_weight_max = known.value_or(L.space.max_weight());
  L.D.shift = 1;
  for (const auto& c : chains)
    for (int j = 0; j < c.len; ++j)
      L.D.set(chain_label(c, j), unit_vec(chain_label(c, j + 1)));

  std::map<std::tuple<int, std::string, long, int, std::string>, Vec> memo;
  std::function<Vec(int, const Chain&, long, int, const Chain&)> prod =
      [&](int i, const Chain& g, long k, int j, const Chain& h) -> Vec {
    if (k < 0) return {};
    auto key = std::make_tuple(i, g.root, k, j, h.root);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Vec out;
    if (i > 0) {
      out = prod(i - 1, g, k - 1, j, h) * Rational(-k);
    } else if (j > 0) {
      out = L.D.apply(prod(0, g, k, j - 1, h));
      out += prod(0, g, k - 1, j - 1, h) * Rational(k);
    } else {
      auto itp = root_products.find({g.root, h.root});
      if (itp != root_products.end()) {
        auto itk = itp->second.find(k);
        if (itk != itp->second.end()) out = itk->second;
      }
    }
    memo.emplace(std::move(key), out);
    return out;
  };

  for (const auto& g : chains)
    for (const auto& h : chains)
      for (int i = 0; i <= g.len; ++i)
        for (int j = 0; j <= h.len; ++j) {
          Rational wu = g.wt + i, wv = h.wt + j;
          long kmax = to_long(wu + wv) - 1;
          for (long k = 0; k <= kmax; ++k) {
            Rational res = wu + wv - k - 1;
            if (res > L.known_weight_max) continue;
            Vec p = prod(i, g, k, j, h);
            if (!p.empty())
              L.products[chain_label(g, i)][k][chain_label(h, j)] = p;
          }
        }
  L.validate();
  return L;
}

}  // namespace

VertexLieAlgebra abelian_vla(int chain) {
  return build_chain_vla("abelian_vla", {{"a", 1, chain}}, {});
}

VertexLieAlgebra heisenberg_vla(int chain) {
  std::map<std::pair<std::string, std::string>, std::map<long, Vec>> prods;
  prods[{"a", "a"}][1] = unit_vec("K");
  return build_chain_vla("heisenberg_vla", {{"K", 0, 0}, {"a", 1, chain}},
                         prods);
}

VertexLieAlgebra virasoro_vla(const Rational& d, int chain) {
  std::map<std::pair<std::string, std::string>, std::map<long, Vec>> prods;
  prods[{"w", "w"}][0] = unit_vec("Dw");
  prods[{"w", "w"}][1] = unit_vec("w", 2);
  prods[{"w", "w"}][3] = unit_vec("K", d / 2);
  return build_chain_vla("virasoro_vla", {{"K", 0, 0}, {"w", 2, chain}},
                         prods);
}

Report check_vla_axioms(const VertexLieAlgebra& L, Window w) {
  Report rep;
  rep.structure = L.name;
  rep.window = w;
  const auto labels = L.space.labels();

  // Truncation and the weight rule on every stored entry.
  try {
    L.validate();
    bool trunc_ok = true;
    std::string wit;
    for (const auto& [u, per_k] : L.products)
      for (const auto& [k, per_v] : per_k)
        for (const auto& [v, img] : per_v)
          if (!img.empty() &&
              Rational(k) > L.space.weight(u) + L.space.weight(v) - 1) {
            trunc_ok = false;
            wit = u + "_(" + std::to_string(k) + ") " + v;
          }
    rep.add_pass_fail("truncation", trunc_ok, wit);
  } catch (const std::exception& e) {
    rep.add("truncation", Status::fail, e.what());
  }

  // Half Jacobi identity at multidegrees negative in x0, x1, x2.
  {
    bool ok = true;
    std::string wit;
    long cells = 0;
    for (const auto& ul : labels)
      for (const auto& vl : labels)
        for (const auto& wl : labels) {
          Vec uu = unit_vec(ul), vv = unit_vec(vl), ww = unit_vec(wl);
          for (int d0 = w.lo; d0 <= -1; ++d0)
            for (int d1 = w.lo; d1 <= -1; ++d1)
              for (int d2 = w.lo; d2 <= -1; ++d2) {
                long n = -d0 - 1;
                try {
                  Vec lhs;
                  for (long j = 0; j <= n; ++j) {
                    Rational c = binomial(n, j);
                    if (j % 2 != 0) c = -c;
                    long k1 = n - j - d1 - 1, k2 = j - d2 - 1;
                    if (k1 >= 0 && k2 >= 0)
                      lhs += vla_product(L, uu, k1, vla_product(L, vv, k2, ww)) *
                             c;
                    long k1b = j - d1 - 1, k2b = n - j - d2 - 1;
                    if (k1b >= 0 && k2b >= 0) {
                      Rational cb = binomial(n, j);
                      if ((n + j) % 2 == 0) cb = -cb;
                      lhs +=
                          vla_product(L, vv, k2b, vla_product(L, uu, k1b, ww)) *
                          cb;
                    }
                  }
                  Vec rhs;
                  for (long j = 0; j <= -d1 - d2 - 2; ++j) {
                    long i = j - d0 - 1, t = -d1 - j - d2 - 2;
                    if (i < 0 || t < 0) continue;
                    Rational c = binomial(d1 + j, j);
                    if (j % 2 != 0) c = -c;
                    rhs += vla_product(L, vla_product(L, uu, i, vv), t, ww) * c;
                  }
                  ++cells;
                  if (!(lhs == rhs) && ok) {
                    ok = false;
                    wit = "u=" + ul + " v=" + vl + " w=" + wl + " deg=(" +
                          std::to_string(d0) + "," + std::to_string(d1) + "," +
                          std::to_string(d2) + ")";
                  }
                } catch (const IncompleteData&) {
                }
              }
        }
    if (!ok)
      rep.add("half_jacobi", Status::fail, wit);
    else if (cells == 0)
      rep.add("half_jacobi", Status::inconclusive, "no derivable cells");
    else
      rep.add("half_jacobi", Status::pass);
  }

  // Half skew-symmetry: u_m v = sum_j (-1)^{m+j+1} D^j (v_{m+j} u) / j!.
  {
    bool ok = true;
    std::string wit;
    long cells = 0;
    for (const auto& ul : labels)
      for (const auto& vl : labels) {
        long mmax =
            to_long(L.space.weight(ul) + L.space.weight(vl)) - 1;
        for (long m = 0; m <= mmax; ++m) {
          try {
            Vec lhs = L.basis_product(ul, m, vl);
            Vec rhs;
            for (long j = 0; m + j <= mmax; ++j) {
              Vec term = L.basis_product(vl, m + j, ul);
              for (long a = 0; a < j; ++a) term = L.apply_d(term);
              Rational c = Rational(1) / factorial(j);
              if ((m + j + 1) % 2 != 0) c = -c;
              rhs += term * c;
            }
            ++cells;
            if (!(lhs == rhs) && ok) {
              ok = false;
              wit = ul + "_(" + std::to_string(m) + ") " + vl;
            }
          } catch (const IncompleteData&) {
          }
        }
      }
    if (!ok)
      rep.add("half_skew_symmetry", Status::fail, wit);
    else if (cells == 0)
      rep.add("half_skew_symmetry", Status::inconclusive, "no derivable cells");
    else
      rep.add("half_skew_symmetry", Status::pass);
  }

  // D-bracket: D(u_k v) - u_k(Dv) = (Du)_k v, and (Du)_k = -k u_{k-1}.
  {
    bool ok = true, dok = true;
    std::string wit, dwit;
    long cells = 0;
    for (const auto& ul : labels)
      for (const auto& vl : labels) {
        long kmax =
            to_long(L.space.weight(ul) + L.space.weight(vl));
        for (long k = 0; k <= kmax; ++k) {
          try {
            Vec du = L.apply_d(unit_vec(ul));
            Vec lhs = L.apply_d(L.basis_product(ul, k, vl)) -
                      vla_product(L, unit_vec(ul), k,
                                  L.apply_d(unit_vec(vl)));
            Vec rhs = vla_product(L, du, k, unit_vec(vl));
            ++cells;
            if (!(lhs == rhs) && ok) {
              ok = false;
              wit = ul + "_(" + std::to_string(k) + ") " + vl;
            }
            Vec deriv = k == 0 ? Vec{}
                               : L.basis_product(ul, k - 1, vl) * Rational(-k);
            if (!(rhs == deriv) && dok) {
              dok = false;
              dwit = ul + "_(" + std::to_string(k) + ") " + vl;
            }
          } catch (const IncompleteData&) {
          }
        }
      }
    auto emit = [&](const char* name, bool okf, std::string w2) {
      if (!okf)
        rep.add(name, Status::fail, std::move(w2));
      else if (cells == 0)
        rep.add(name, Status::inconclusive, "no derivable cells");
      else
        rep.add(name, Status::pass);
    };
    emit("d_bracket", ok, std::move(wit));
    emit("d_bracket_derivative", dok, std::move(dwit));
  }
  return rep;
}

}  // namespace vtx
