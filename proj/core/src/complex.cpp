#include "tausilt/complex.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "tausilt/errors.hpp"

namespace tausilt {

ModMap ModMap::zero(const BoundQuiverAlgebra& A, std::vector<int> src, std::vector<int> dst) {
  ModMap m;
  m.src = std::move(src);
  m.dst = std::move(dst);
  m.e.assign(m.src.size(), std::vector<AlgElem>(m.dst.size(), A.zero_elem()));
  return m;
}

ModMap ModMap::identity(const BoundQuiverAlgebra& A, std::vector<int> types) {
  ModMap m = zero(A, types, types);
  for (size_t i = 0; i < types.size(); ++i) m.e[i][i][types[i]] = 1;
  return m;
}

ModMap then(const BoundQuiverAlgebra& A, const ModMap& f, const ModMap& g) {
  assert(f.dst == g.src);
  ModMap out = ModMap::zero(A, f.src, g.dst);
  for (size_t r = 0; r < f.src.size(); ++r)
    for (size_t t = 0; t < g.dst.size(); ++t) {
      AlgElem acc = A.zero_elem();
      for (size_t s = 0; s < f.dst.size(); ++s) {
        AlgElem prod = A.mult(g.e[s][t], f.e[r][s]);
        for (int k = 0; k < A.dim(); ++k) acc[k] += prod[k];
      }
      out.e[r][t] = std::move(acc);
    }
  return out;
}

ModMap add(const ModMap& f, const ModMap& g) {
  assert(f.src == g.src && f.dst == g.dst);
  ModMap out = f;
  for (size_t r = 0; r < f.src.size(); ++r)
    for (size_t c = 0; c < f.dst.size(); ++c)
      for (size_t k = 0; k < f.e[r][c].size(); ++k) out.e[r][c][k] += g.e[r][c][k];
  return out;
}

ModMap scale(const ModMap& f, const Rational& c) {
  ModMap out = f;
  for (auto& row : out.e)
    for (auto& u : row)
      for (auto& x : u) x *= c;
  return out;
}

bool is_zero_map(const ModMap& f) {
  for (const auto& row : f.e)
    for (const auto& u : row)
      for (const auto& x : u)
        if (!is_zero(x)) return false;
  return true;
}

ModMap TwoTermComplex::diff_map(const BoundQuiverAlgebra& A) const {
  // d may be ragged (zero differentials are allowed to be unstored)
  ModMap m = ModMap::zero(A, deg1, deg0);
  for (size_t r = 0; r < deg1.size() && r < d.size(); ++r)
    for (size_t c = 0; c < deg0.size() && c < d[r].size(); ++c)
      if (!d[r][c].empty()) m.e[r][c] = d[r][c];
  return m;
}

TwoTermComplex stalk_deg0(const BoundQuiverAlgebra& A, int proj) {
  TwoTermComplex c;
  c.deg0 = {proj};
  (void)A;
  return c;
}

TwoTermComplex stalk_deg1(const BoundQuiverAlgebra& A, int proj) {
  TwoTermComplex c;
  c.deg1 = {proj};
  (void)A;
  return c;
}

TwoTermComplex direct_sum(const BoundQuiverAlgebra& A, const TwoTermComplex& a,
                          const TwoTermComplex& b) {
  TwoTermComplex out;
  out.deg1 = a.deg1;
  out.deg1.insert(out.deg1.end(), b.deg1.begin(), b.deg1.end());
  out.deg0 = a.deg0;
  out.deg0.insert(out.deg0.end(), b.deg0.begin(), b.deg0.end());
  out.d.assign(out.deg1.size(), std::vector<AlgElem>(out.deg0.size(), A.zero_elem()));
  for (size_t r = 0; r < a.deg1.size(); ++r)
    for (size_t c = 0; c < a.deg0.size(); ++c) out.d[r][c] = a.d[r][c];
  for (size_t r = 0; r < b.deg1.size(); ++r)
    for (size_t c = 0; c < b.deg0.size(); ++c) out.d[a.deg1.size() + r][a.deg0.size() + c] = b.d[r][c];
  return out;
}

IntVec g_vector(const BoundQuiverAlgebra& A, const TwoTermComplex& c) {
  IntVec g(A.num_vertices());
  for (int p : c.deg0) g[p] += 1;
  for (int p : c.deg1) g[p] -= 1;
  return g;
}

bool is_minimal(const BoundQuiverAlgebra& A, const TwoTermComplex& c) {
  (void)A;
  for (size_t r = 0; r < c.deg1.size(); ++r)
    for (size_t s = 0; s < c.deg0.size(); ++s)
      if (c.deg1[r] == c.deg0[s] && !is_zero(c.d[r][s][c.deg1[r]])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Coordinate spaces of module maps between sums of projectives.

namespace {

struct MapSpace {
  const BoundQuiverAlgebra* A;
  std::vector<int> src, dst;
  // slot (r, c, b): offset into the coordinate vector
  std::vector<std::vector<int>> offset;  // offset[r][c]
  int total = 0;

  MapSpace(const BoundQuiverAlgebra& alg, std::vector<int> s, std::vector<int> t)
      : A(&alg), src(std::move(s)), dst(std::move(t)) {
    offset.assign(src.size(), std::vector<int>(dst.size(), 0));
    for (size_t r = 0; r < src.size(); ++r)
      for (size_t c = 0; c < dst.size(); ++c) {
        offset[r][c] = total;
        total += static_cast<int>(A->hom_basis(src[r], dst[c]).size());
      }
  }

  RatVec pack(const ModMap& f) const {
    RatVec v(total);
    for (size_t r = 0; r < src.size(); ++r)
      for (size_t c = 0; c < dst.size(); ++c) {
        const std::vector<int>& hb = A->hom_basis(src[r], dst[c]);
        for (size_t b = 0; b < hb.size(); ++b) v[offset[r][c] + b] = f.e[r][c][hb[b]];
      }
    return v;
  }

  ModMap unpack(const RatVec& v) const {
    ModMap f = ModMap::zero(*A, src, dst);
    for (size_t r = 0; r < src.size(); ++r)
      for (size_t c = 0; c < dst.size(); ++c) {
        const std::vector<int>& hb = A->hom_basis(src[r], dst[c]);
        for (size_t b = 0; b < hb.size(); ++b) f.e[r][c][hb[b]] = v[offset[r][c] + b];
      }
    return f;
  }

  ModMap slot_map(int slot) const {
    RatVec v(total);
    v[slot] = 1;
    return unpack(v);
  }
};

// Matrix of phi -> D after phi (post-composition) from MapSpace(src -> mid) to
// MapSpace(src -> out), where D : mid -> out.
RatMatrix post_compose_matrix(const BoundQuiverAlgebra& A, const MapSpace& in, const ModMap& D,
                              const MapSpace& out) {
  RatMatrix m(out.total, in.total);
  for (int slot = 0; slot < in.total; ++slot) {
    ModMap phi = in.slot_map(slot);
    ModMap comp = then(A, phi, D);
    RatVec col = out.pack(comp);
    for (int r = 0; r < out.total; ++r) m.at(r, slot) = col[r];
  }
  return m;
}

// Matrix of phi -> phi after D (pre-composition) from MapSpace(mid -> dst) to
// MapSpace(src -> dst), where D : src -> mid.
RatMatrix pre_compose_matrix(const BoundQuiverAlgebra& A, const MapSpace& in, const ModMap& D,
                             const MapSpace& out) {
  RatMatrix m(out.total, in.total);
  for (int slot = 0; slot < in.total; ++slot) {
    ModMap phi = in.slot_map(slot);
    ModMap comp = then(A, D, phi);
    RatVec col = out.pack(comp);
    for (int r = 0; r < out.total; ++r) m.at(r, slot) = col[r];
  }
  return m;
}

int rank_of_columns(const std::vector<RatVec>& cols, int height) {
  if (cols.empty()) return 0;
  RatMatrix m(height, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < height; ++r) m.at(r, static_cast<int>(c)) = cols[c][r];
  return rank(m);
}

}  // namespace

ChainMap chain_identity(const BoundQuiverAlgebra& A, const TwoTermComplex& c) {
  return ChainMap{ModMap::identity(A, c.deg1), ModMap::identity(A, c.deg0)};
}

ChainMap chain_compose(const BoundQuiverAlgebra& A, const ChainMap& f, const ChainMap& g) {
  return ChainMap{then(A, f.f1, g.f1), then(A, f.f0, g.f0)};
}

ChainMap chain_add(const ChainMap& f, const ChainMap& g) {
  return ChainMap{add(f.f1, g.f1), add(f.f0, g.f0)};
}

ChainMap chain_scale(const ChainMap& f, const Rational& c) {
  return ChainMap{scale(f.f1, c), scale(f.f0, c)};
}

HomSpace::HomSpace(const BoundQuiverAlgebra& A, const TwoTermComplex& M, const TwoTermComplex& N)
    : A_(&A), M_(&M), N_(&N) {
  MapSpace sp1(A, M.deg1, N.deg1);
  MapSpace sp0(A, M.deg0, N.deg0);
  MapSpace sp_cross(A, M.deg1, N.deg0);  // target of the chain condition
  MapSpace sp_h(A, M.deg0, N.deg1);     // homotopies
  hom1_dim_ = sp1.total;
  hom0_dim_ = sp0.total;

  ModMap dM = M.diff_map(A);
  ModMap dN = N.diff_map(A);

  // chain condition: dN after phi1 - phi0 after dM = 0
  RatMatrix cond(sp_cross.total, sp1.total + sp0.total);
  {
    RatMatrix a = post_compose_matrix(A, sp1, dN, sp_cross);
    RatMatrix b = pre_compose_matrix(A, sp0, dM, sp_cross);
    for (int r = 0; r < sp_cross.total; ++r) {
      for (int c = 0; c < sp1.total; ++c) cond.at(r, c) = a.at(r, c);
      for (int c = 0; c < sp0.total; ++c) cond.at(r, sp1.total + c) = -b.at(r, c);
    }
  }
  std::vector<RatVec> chain_kernel = kernel_basis(cond);

  // homotopy image: h -> (h after dM, dN after h)
  std::vector<RatVec> homotopy_cols;
  {
    RatMatrix a = pre_compose_matrix(A, sp_h, dM, sp1);   // phi1 = h after dM
    RatMatrix b = post_compose_matrix(A, sp_h, dN, sp0);  // phi0 = dN after h
    for (int s = 0; s < sp_h.total; ++s) {
      RatVec col(sp1.total + sp0.total);
      for (int r = 0; r < sp1.total; ++r) col[r] = a.at(r, s);
      for (int r = 0; r < sp0.total; ++r) col[sp1.total + r] = b.at(r, s);
      homotopy_cols.push_back(std::move(col));
    }
  }

  // basis of (chain kernel) / (homotopy span): greedily extend the homotopy
  // span by kernel vectors
  const int height = sp1.total + sp0.total;
  std::vector<RatVec> chosen;
  std::vector<RatVec> span = homotopy_cols;
  int cur_rank = rank_of_columns(span, height);
  for (const RatVec& v : chain_kernel) {
    std::vector<RatVec> trial = span;
    trial.push_back(v);
    int r = rank_of_columns(trial, height);
    if (r > cur_rank) {
      chosen.push_back(v);
      span = std::move(trial);
      cur_rank = r;
    }
  }

  express_ = RatMatrix(height, static_cast<int>(chosen.size() + homotopy_cols.size()));
  for (size_t c = 0; c < chosen.size(); ++c)
    for (int r = 0; r < height; ++r) express_.at(r, static_cast<int>(c)) = chosen[c][r];
  for (size_t c = 0; c < homotopy_cols.size(); ++c)
    for (int r = 0; r < height; ++r)
      express_.at(r, static_cast<int>(chosen.size() + c)) = homotopy_cols[c][r];

  for (const RatVec& v : chosen) {
    RatVec v1(v.begin(), v.begin() + sp1.total);
    RatVec v0(v.begin() + sp1.total, v.end());
    basis_.push_back(ChainMap{sp1.unpack(v1), sp0.unpack(v0)});
  }
}

RatVec HomSpace::pack(const ChainMap& f) const {
  MapSpace sp1(*A_, M_->deg1, N_->deg1);
  MapSpace sp0(*A_, M_->deg0, N_->deg0);
  RatVec v1 = sp1.pack(f.f1);
  RatVec v0 = sp0.pack(f.f0);
  RatVec v(v1);
  v.insert(v.end(), v0.begin(), v0.end());
  return v;
}

ChainMap HomSpace::unpack(const RatVec& v) const {
  MapSpace sp1(*A_, M_->deg1, N_->deg1);
  MapSpace sp0(*A_, M_->deg0, N_->deg0);
  RatVec v1(v.begin(), v.begin() + hom1_dim_);
  RatVec v0(v.begin() + hom1_dim_, v.end());
  return ChainMap{sp1.unpack(v1), sp0.unpack(v0)};
}

RatVec HomSpace::coords(const ChainMap& f) const {
  RatVec target = pack(f);
  SolveResult sol = solve(express_, target);
  if (!sol.solvable) throw std::logic_error("HomSpace::coords: not a chain map modulo homotopy");
  return RatVec(sol.particular.begin(), sol.particular.begin() + dim());
}

ChainMap HomSpace::from_coords(const RatVec& coords) const {
  assert(static_cast<int>(coords.size()) == dim());
  ChainMap out{ModMap::zero(*A_, M_->deg1, N_->deg1), ModMap::zero(*A_, M_->deg0, N_->deg0)};
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(coords[i])) continue;
    out = chain_add(out, chain_scale(basis_[i], coords[i]));
  }
  return out;
}

int hom_shift1_dim(const BoundQuiverAlgebra& A, const TwoTermComplex& M, const TwoTermComplex& N) {
  MapSpace sp(A, M.deg1, N.deg0);
  if (sp.total == 0) return 0;
  MapSpace sp_h(A, M.deg0, N.deg0);
  MapSpace sp_h2(A, M.deg1, N.deg1);
  ModMap dM = M.diff_map(A);
  ModMap dN = N.diff_map(A);
  std::vector<RatVec> cols;
  {
    RatMatrix a = pre_compose_matrix(A, sp_h, dM, sp);  // h after dM
    for (int s = 0; s < sp_h.total; ++s) {
      RatVec col(sp.total);
      for (int r = 0; r < sp.total; ++r) col[r] = a.at(r, s);
      cols.push_back(std::move(col));
    }
    RatMatrix b = post_compose_matrix(A, sp_h2, dN, sp);  // dN after h'
    for (int s = 0; s < sp_h2.total; ++s) {
      RatVec col(sp.total);
      for (int r = 0; r < sp.total; ++r) col[r] = b.at(r, s);
      cols.push_back(std::move(col));
    }
  }
  return sp.total - rank_of_columns(cols, sp.total);
}

// ---------------------------------------------------------------------------
// Cone, fiber, and minimization of bounded complexes.

BoundedComplex cone(const BoundQuiverAlgebra& A, const TwoTermComplex& X, const TwoTermComplex& Z,
                    const ChainMap& f) {
  BoundedComplex c;
  c.lo = -2;
  c.terms.resize(3);
  c.terms[0] = X.deg1;
  c.terms[1] = X.deg0;
  c.terms[1].insert(c.terms[1].end(), Z.deg1.begin(), Z.deg1.end());
  c.terms[2] = Z.deg0;
  ModMap dX = X.diff_map(A);
  ModMap dZ = Z.diff_map(A);

  ModMap d0 = ModMap::zero(A, c.terms[0], c.terms[1]);
  for (size_t r = 0; r < X.deg1.size(); ++r) {
    for (size_t s = 0; s < X.deg0.size(); ++s)
      for (int k = 0; k < A.dim(); ++k) d0.e[r][s][k] = -dX.e[r][s][k];
    for (size_t s = 0; s < Z.deg1.size(); ++s) d0.e[r][X.deg0.size() + s] = f.f1.e[r][s];
  }
  ModMap d1 = ModMap::zero(A, c.terms[1], c.terms[2]);
  for (size_t s = 0; s < X.deg0.size(); ++s)
    for (size_t t = 0; t < Z.deg0.size(); ++t) d1.e[s][t] = f.f0.e[s][t];
  for (size_t s = 0; s < Z.deg1.size(); ++s)
    for (size_t t = 0; t < Z.deg0.size(); ++t) d1.e[X.deg0.size() + s][t] = dZ.e[s][t];
  c.diffs = {std::move(d0), std::move(d1)};
  return c;
}

BoundedComplex fiber(const BoundQuiverAlgebra& A, const TwoTermComplex& W, const TwoTermComplex& X,
                     const ChainMap& g) {
  BoundedComplex c;
  c.lo = -1;
  c.terms.resize(3);
  c.terms[0] = W.deg1;
  c.terms[1] = W.deg0;
  c.terms[1].insert(c.terms[1].end(), X.deg1.begin(), X.deg1.end());
  c.terms[2] = X.deg0;
  ModMap dW = W.diff_map(A);
  ModMap dX = X.diff_map(A);

  ModMap d0 = ModMap::zero(A, c.terms[0], c.terms[1]);
  for (size_t r = 0; r < W.deg1.size(); ++r) {
    for (size_t s = 0; s < W.deg0.size(); ++s) d0.e[r][s] = dW.e[r][s];
    for (size_t s = 0; s < X.deg1.size(); ++s) d0.e[r][W.deg0.size() + s] = g.f1.e[r][s];
  }
  ModMap d1 = ModMap::zero(A, c.terms[1], c.terms[2]);
  for (size_t s = 0; s < W.deg0.size(); ++s)
    for (size_t t = 0; t < X.deg0.size(); ++t) d1.e[s][t] = g.f0.e[s][t];
  for (size_t s = 0; s < X.deg1.size(); ++s)
    for (size_t t = 0; t < X.deg0.size(); ++t)
      for (int k = 0; k < A.dim(); ++k) d1.e[W.deg0.size() + s][t][k] = -dX.e[s][t][k];
  c.diffs = {std::move(d0), std::move(d1)};
  return c;
}

namespace {

void drop_row(ModMap& m, size_t r) {
  m.src.erase(m.src.begin() + r);
  m.e.erase(m.e.begin() + r);
}

void drop_col(ModMap& m, size_t c) {
  m.dst.erase(m.dst.begin() + c);
  for (auto& row : m.e) row.erase(row.begin() + c);
}

}  // namespace

void minimize_bounded(const BoundQuiverAlgebra& A, BoundedComplex& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < c.diffs.size() && !changed; ++k) {
      ModMap& d = c.diffs[k];
      for (size_t r = 0; r < d.src.size() && !changed; ++r) {
        for (size_t s = 0; s < d.dst.size() && !changed; ++s) {
          if (d.src[r] != d.dst[s]) continue;
          const int v = d.src[r];
          if (is_zero(d.e[r][s][v])) continue;
          // pivot entry invertible in e_v A e_v: eliminate the pair (r, s)
          AlgElem uinv = A.local_inverse(d.e[r][s], v);
          for (size_t r2 = 0; r2 < d.src.size(); ++r2) {
            if (r2 == r) continue;
            AlgElem w = A.mult(uinv, d.e[r2][s]);  // P_{src[r2]} -> P_{src[r]}
            for (size_t s2 = 0; s2 < d.dst.size(); ++s2) {
              if (s2 == s) continue;
              AlgElem corr = A.mult(d.e[r][s2], w);
              for (int t = 0; t < A.dim(); ++t) d.e[r2][s2][t] -= corr[t];
            }
          }
          // restrict adjacent differentials
          if (k > 0) drop_col(c.diffs[k - 1], r);
          if (k + 1 < c.diffs.size()) drop_row(c.diffs[k + 1], s);
          drop_row(d, r);
          drop_col(d, s);
          c.terms[k].erase(c.terms[k].begin() + r);
          c.terms[k + 1].erase(c.terms[k + 1].begin() + s);
          changed = true;
        }
      }
    }
  }
}

std::optional<TwoTermComplex> to_two_term(const BoundQuiverAlgebra& A, const BoundedComplex& c) {
  for (size_t k = 0; k < c.terms.size(); ++k) {
    int deg = c.lo + static_cast<int>(k);
    if (!c.terms[k].empty() && (deg < -1 || deg > 0)) return std::nullopt;
  }
  TwoTermComplex out;
  for (size_t k = 0; k < c.terms.size(); ++k) {
    int deg = c.lo + static_cast<int>(k);
    if (deg == -1) out.deg1 = c.terms[k];
    if (deg == 0) out.deg0 = c.terms[k];
  }
  out.d.assign(out.deg1.size(), std::vector<AlgElem>(out.deg0.size(), A.zero_elem()));
  for (size_t k = 0; k + 1 < c.terms.size(); ++k) {
    if (c.lo + static_cast<int>(k) != -1) continue;
    for (size_t r = 0; r < out.deg1.size(); ++r)
      for (size_t s = 0; s < out.deg0.size(); ++s) out.d[r][s] = c.diffs[k].e[r][s];
  }
  return out;
}

TwoTermComplex minimize(const BoundQuiverAlgebra& A, const TwoTermComplex& c) {
  BoundedComplex b;
  b.lo = -1;
  b.terms = {c.deg1, c.deg0};
  b.diffs = {c.diff_map(A)};
  minimize_bounded(A, b);
  TwoTermComplex out;
  out.deg1 = b.terms[0];
  out.deg0 = b.terms[1];
  out.d = b.diffs[0].e;
  if (out.deg1.empty()) out.d.clear();
  return out;
}

std::string complex_str(const BoundQuiverAlgebra& A, const TwoTermComplex& c) {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& types) {
    if (types.empty()) {
      os << "0";
      return;
    }
    for (size_t i = 0; i < types.size(); ++i) {
      if (i) os << "+";
      os << "P" << A.quiver().vertices[types[i]];
    }
  };
  list(c.deg1);
  os << " -> ";
  list(c.deg0);
  return os.str();
}

}  // namespace tausilt
