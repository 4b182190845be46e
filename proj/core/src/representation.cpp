#include "tausilt/representation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "tausilt/errors.hpp"
#include "tausilt/finite_algebra.hpp"

namespace tausilt {

namespace {

// Basis of (P_i)_j = e_i A e_j: residue paths from i to j.
const std::vector<int>& proj_vertex_basis(const BoundQuiverAlgebra& A, int i, int j) {
  return A.hom_basis(j, i);
}

int index_in(const std::vector<int>& v, int x) {
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] == x) return static_cast<int>(k);
  return -1;
}

}  // namespace

int Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

Representation zero_rep(const BoundQuiverAlgebra& A) {
  Representation m;
  m.dims.assign(A.num_vertices(), 0);
  m.act.assign(A.quiver().arrows.size(), RatMatrix(0, 0));
  return m;
}

Representation projective_rep(const BoundQuiverAlgebra& A, int vertex) {
  Representation m;
  const int n = A.num_vertices();
  m.dims.resize(n);
  for (int j = 0; j < n; ++j) m.dims[j] = static_cast<int>(proj_vertex_basis(A, vertex, j).size());
  for (size_t a = 0; a < A.quiver().arrows.size(); ++a) {
    const Arrow& arr = A.quiver().arrows[a];
    const std::vector<int>& from_basis = proj_vertex_basis(A, vertex, arr.from);
    const std::vector<int>& to_basis = proj_vertex_basis(A, vertex, arr.to);
    RatMatrix mat(static_cast<int>(to_basis.size()), static_cast<int>(from_basis.size()));
    // right multiplication by the arrow
    int arrow_word = -1;
    for (int w = 0; w < A.dim(); ++w)
      if (A.word_len(w) == 1 && A.word(w)[0] == static_cast<int>(a)) {
        arrow_word = w;
        break;
      }
    assert(arrow_word >= 0);
    for (size_t c = 0; c < from_basis.size(); ++c) {
      const AlgElem& prod = A.table(from_basis[c], arrow_word);
      for (size_t r = 0; r < to_basis.size(); ++r) mat.at(static_cast<int>(r), static_cast<int>(c)) = prod[to_basis[r]];
    }
    m.act.push_back(std::move(mat));
  }
  return m;
}

Representation simple_rep(const BoundQuiverAlgebra& A, int vertex) {
  Representation m;
  m.dims.assign(A.num_vertices(), 0);
  m.dims[vertex] = 1;
  for (const Arrow& a : A.quiver().arrows)
    m.act.push_back(RatMatrix(a.to == vertex ? 1 : 0, a.from == vertex ? 1 : 0));
  return m;
}

Representation direct_sum_rep(const BoundQuiverAlgebra& A, const Representation& a,
                              const Representation& b) {
  Representation m;
  const int n = A.num_vertices();
  m.dims.resize(n);
  for (int v = 0; v < n; ++v) m.dims[v] = a.dims[v] + b.dims[v];
  for (size_t k = 0; k < A.quiver().arrows.size(); ++k) {
    const Arrow& arr = A.quiver().arrows[k];
    RatMatrix mat(m.dims[arr.to], m.dims[arr.from]);
    for (int r = 0; r < a.dims[arr.to]; ++r)
      for (int c = 0; c < a.dims[arr.from]; ++c) mat.at(r, c) = a.act[k].at(r, c);
    for (int r = 0; r < b.dims[arr.to]; ++r)
      for (int c = 0; c < b.dims[arr.from]; ++c)
        mat.at(a.dims[arr.to] + r, a.dims[arr.from] + c) = b.act[k].at(r, c);
    m.act.push_back(std::move(mat));
  }
  return m;
}

Representation algebra_as_module(const BoundQuiverAlgebra& A) {
  Representation m = projective_rep(A, 0);
  for (int v = 1; v < A.num_vertices(); ++v) m = direct_sum_rep(A, m, projective_rep(A, v));
  return m;
}

namespace {

RatMatrix path_action(const BoundQuiverAlgebra& A, const Representation& m, const Word& w) {
  assert(!w.empty());
  RatMatrix acc = m.act[w[0]];
  for (size_t k = 1; k < w.size(); ++k) acc = m.act[w[k]] * acc;
  return acc;
}

}  // namespace

bool rep_satisfies_relations(const BoundQuiverAlgebra& A, const Representation& m) {
  for (const Relation& rel : A.relations()) {
    const int s = A.quiver().arrows[rel.front().path.front()].from;
    const int t = A.quiver().arrows[rel.front().path.back()].to;
    RatMatrix acc(m.dims[t], m.dims[s]);
    for (const RelationTerm& term : rel) {
      RatMatrix pa = path_action(A, m, term.path);
      for (int r = 0; r < acc.rows(); ++r)
        for (int c = 0; c < acc.cols(); ++c) acc.at(r, c) += term.coeff * pa.at(r, c);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<RepHom> hom_rep(const BoundQuiverAlgebra& A, const Representation& M,
                            const Representation& N) {
  const int n = A.num_vertices();
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  const int unknowns = offset[n];
  if (unknowns == 0) return {};
  int rows = 0;
  for (size_t a = 0; a < A.quiver().arrows.size(); ++a) {
    const Arrow& arr = A.quiver().arrows[a];
    rows += N.dims[arr.to] * M.dims[arr.from];
  }
  RatMatrix cond(std::max(rows, 1), unknowns);
  int row0 = 0;
  for (size_t a = 0; a < A.quiver().arrows.size(); ++a) {
    const Arrow& arr = A.quiver().arrows[a];
    const int i = arr.from, j = arr.to;
    // phi_j * M_a - N_a * phi_i = 0, entry (r, c): r < N.dims[j], c < M.dims[i]
    for (int r = 0; r < N.dims[j]; ++r)
      for (int c = 0; c < M.dims[i]; ++c) {
        const int row = row0 + r * M.dims[i] + c;
        for (int k = 0; k < M.dims[j]; ++k)
          cond.at(row, offset[j] + r * M.dims[j] + k) += M.act[a].at(k, c);
        for (int k = 0; k < N.dims[i]; ++k)
          cond.at(row, offset[i] + k * M.dims[i] + c) -= N.act[a].at(r, k);
      }
    row0 += N.dims[j] * M.dims[i];
  }
  std::vector<RepHom> out;
  for (const RatVec& v : kernel_basis(cond)) {
    RepHom h;
    for (int vtx = 0; vtx < n; ++vtx) {
      RatMatrix mat(N.dims[vtx], M.dims[vtx]);
      for (int r = 0; r < N.dims[vtx]; ++r)
        for (int c = 0; c < M.dims[vtx]; ++c) mat.at(r, c) = v[offset[vtx] + r * M.dims[vtx] + c];
      h.push_back(std::move(mat));
    }
    out.push_back(std::move(h));
  }
  return out;
}

bool fac_contains(const BoundQuiverAlgebra& A, const Representation& M, const Representation& N) {
  if (N.is_zero()) return true;
  std::vector<RepHom> homs = hom_rep(A, M, N);
  for (int v = 0; v < A.num_vertices(); ++v) {
    if (N.dims[v] == 0) continue;
    int cols = 0;
    for (const RepHom& h : homs) cols += M.dims[v];
    RatMatrix stack(N.dims[v], std::max(cols, 1));
    int c0 = 0;
    for (const RepHom& h : homs) {
      for (int r = 0; r < N.dims[v]; ++r)
        for (int c = 0; c < M.dims[v]; ++c) stack.at(r, c0 + c) = h[v].at(r, c);
      c0 += M.dims[v];
    }
    if (rank(stack) < N.dims[v]) return false;
  }
  return true;
}

namespace {

// Kernel of a vertex-wise linear map of representations, with the induced
// arrow actions and the inclusion matrices.
struct SubRep {
  Representation rep;
  std::vector<RatMatrix> incl;  // incl[v]: amb.dims[v] x rep.dims[v]
};

SubRep kernel_subrep(const BoundQuiverAlgebra& A, const Representation& amb,
                     const std::vector<RatMatrix>& map, const std::vector<int>& map_rows) {
  const int n = A.num_vertices();
  SubRep out;
  out.rep.dims.resize(n);
  out.incl.resize(n);
  for (int v = 0; v < n; ++v) {
    RatMatrix m(map_rows[v], amb.dims[v]);
    for (int r = 0; r < map_rows[v]; ++r)
      for (int c = 0; c < amb.dims[v]; ++c) m.at(r, c) = map[v].at(r, c);
    std::vector<RatVec> ker = kernel_basis(m);
    out.rep.dims[v] = static_cast<int>(ker.size());
    RatMatrix incl(amb.dims[v], static_cast<int>(ker.size()));
    for (size_t c = 0; c < ker.size(); ++c)
      for (int r = 0; r < amb.dims[v]; ++r) incl.at(r, static_cast<int>(c)) = ker[c][r];
    out.incl[v] = std::move(incl);
  }
  for (size_t a = 0; a < A.quiver().arrows.size(); ++a) {
    const Arrow& arr = A.quiver().arrows[a];
    // act restricted to the kernel: solve incl[to] * X = amb.act * incl[from]
    RatMatrix rhs = amb.act[a] * out.incl[arr.from];
    RatMatrix X(out.rep.dims[arr.to], out.rep.dims[arr.from]);
    for (int c = 0; c < out.rep.dims[arr.from]; ++c) {
      RatVec col(rhs.rows());
      for (int r = 0; r < rhs.rows(); ++r) col[r] = rhs.at(r, c);
      SolveResult sol = solve(out.incl[arr.to], col);
      assert(sol.solvable);
      for (int r = 0; r < out.rep.dims[arr.to]; ++r) X.at(r, c) = sol.particular[r];
    }
    out.rep.act.push_back(std::move(X));
  }
  return out;
}

// Projective cover data: for each vertex, generators of M completing rad M.
struct Cover {
  std::vector<int> proj_types;             // one entry per P_v copy
  std::vector<std::pair<int, RatVec>> gen; // (vertex, generator coordinates)
};

Cover top_cover(const BoundQuiverAlgebra& A, const Representation& M) {
  const int n = A.num_vertices();
  Cover cover;
  for (int v = 0; v < n; ++v) {
    // rad M at v: sum of images of all arrows into v
    int cols = 0;
    for (size_t a = 0; a < A.quiver().arrows.size(); ++a)
      if (A.quiver().arrows[a].to == v) cols += M.dims[A.quiver().arrows[a].from];
    RatMatrix radm(M.dims[v], std::max(cols, 1));
    int c0 = 0;
    for (size_t a = 0; a < A.quiver().arrows.size(); ++a) {
      const Arrow& arr = A.quiver().arrows[a];
      if (arr.to != v) continue;
      for (int r = 0; r < M.dims[v]; ++r)
        for (int c = 0; c < M.dims[arr.from]; ++c) radm.at(r, c0 + c) = M.act[a].at(r, c);
      c0 += M.dims[arr.from];
    }
    if (M.dims[v] == 0) continue;
    for (int e : complement_by_standard_basis(radm)) {
      RatVec gen(M.dims[v]);
      gen[e] = 1;
      cover.proj_types.push_back(v);
      cover.gen.emplace_back(v, std::move(gen));
    }
  }
  return cover;
}

// The map P_v -> M sending e_v to the generator, per vertex.
std::vector<RatMatrix> generator_map(const BoundQuiverAlgebra& A, int v, const RatVec& gen,
                                     const Representation& M) {
  const int n = A.num_vertices();
  std::vector<RatMatrix> out(n);
  for (int j = 0; j < n; ++j) {
    const std::vector<int>& basis = proj_vertex_basis(A, v, j);
    RatMatrix m(M.dims[j], static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c) {
      const Word& w = A.word(basis[c]);
      RatVec img = gen;
      if (!w.empty()) img = path_action(A, M, w).apply(gen);
      for (int r = 0; r < M.dims[j]; ++r) m.at(r, static_cast<int>(c)) = img[r];
    }
    out[j] = std::move(m);
  }
  return out;
}

struct CoverMap {
  std::vector<int> proj_types;
  Representation p0;
  std::vector<RatMatrix> map;  // vertex-wise, M.dims[v] x p0.dims[v]
};

CoverMap projective_cover(const BoundQuiverAlgebra& A, const Representation& M) {
  Cover cover = top_cover(A, M);
  CoverMap out;
  out.proj_types = cover.proj_types;
  const int n = A.num_vertices();
  out.p0.dims.assign(n, 0);
  std::vector<Representation> pieces;
  std::vector<std::vector<RatMatrix>> maps;
  for (size_t i = 0; i < cover.proj_types.size(); ++i) {
    pieces.push_back(projective_rep(A, cover.proj_types[i]));
    maps.push_back(generator_map(A, cover.gen[i].first, cover.gen[i].second, M));
  }
  if (pieces.empty()) {
    out.p0 = zero_rep(A);
    out.map.assign(n, RatMatrix());
    for (int v = 0; v < n; ++v) out.map[v] = RatMatrix(M.dims[v], 0);
    return out;
  }
  Representation total = pieces[0];
  for (size_t i = 1; i < pieces.size(); ++i) total = direct_sum_rep(A, total, pieces[i]);
  out.p0 = total;
  out.map.resize(n);
  for (int v = 0; v < n; ++v) {
    RatMatrix m(M.dims[v], total.dims[v]);
    int c0 = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
      for (int r = 0; r < M.dims[v]; ++r)
        for (int c = 0; c < pieces[i].dims[v]; ++c) m.at(r, c0 + c) = maps[i][v].at(r, c);
      c0 += pieces[i].dims[v];
    }
    out.map[v] = std::move(m);
  }
  return out;
}

// Reads off the residue-path form of a map between sums of projectives given
// vertex-wise: the component P_c -> P_v is determined by the image of e_c.
std::vector<std::vector<AlgElem>> path_form(const BoundQuiverAlgebra& A,
                                            const std::vector<int>& src_types,
                                            const std::vector<int>& dst_types,
                                            const std::vector<RatMatrix>& vertex_map) {
  std::vector<std::vector<AlgElem>> d(src_types.size(),
                                      std::vector<AlgElem>(dst_types.size(), A.zero_elem()));
  for (size_t r = 0; r < src_types.size(); ++r) {
    const int c_vtx = src_types[r];
    // position of e_{c_vtx} inside the source vertex space at vertex c_vtx
    int col = 0;
    for (size_t i = 0; i < r; ++i)
      col += static_cast<int>(proj_vertex_basis(A, src_types[i], c_vtx).size());
    int e_pos = index_in(proj_vertex_basis(A, src_types[r], c_vtx), c_vtx);
    assert(e_pos >= 0);
    col += e_pos;
    // image of e_c in the target vertex space at vertex c_vtx
    int row0 = 0;
    for (size_t s = 0; s < dst_types.size(); ++s) {
      const std::vector<int>& basis = proj_vertex_basis(A, dst_types[s], c_vtx);
      for (size_t b = 0; b < basis.size(); ++b) {
        const Rational& coef = vertex_map[c_vtx].at(row0 + static_cast<int>(b), col);
        if (!is_zero(coef)) d[r][s][basis[b]] += coef;
      }
      row0 += static_cast<int>(basis.size());
    }
  }
  return d;
}

}  // namespace

TwoTermComplex min_projective_presentation(const BoundQuiverAlgebra& A, const Representation& M) {
  CoverMap cover0 = projective_cover(A, M);
  // kernel of P0 -> M
  std::vector<int> rows(A.num_vertices());
  for (int v = 0; v < A.num_vertices(); ++v) rows[v] = M.dims[v];
  SubRep K = kernel_subrep(A, cover0.p0, cover0.map, rows);
  CoverMap cover1 = projective_cover(A, K.rep);
  // differential P1 -> P0 vertex-wise: incl after cover map
  std::vector<RatMatrix> delta(A.num_vertices());
  for (int v = 0; v < A.num_vertices(); ++v) delta[v] = K.incl[v] * cover1.map[v];
  TwoTermComplex c;
  c.deg1 = cover1.proj_types;
  c.deg0 = cover0.proj_types;
  c.d = path_form(A, c.deg1, c.deg0, delta);
  assert(is_minimal(A, c));
  return c;
}

RepMapOfComplex complex_as_rep_map(const BoundQuiverAlgebra& A, const TwoTermComplex& c) {
  RepMapOfComplex out;
  out.source = zero_rep(A);
  for (int t : c.deg1) out.source = direct_sum_rep(A, out.source, projective_rep(A, t));
  out.target = zero_rep(A);
  for (int t : c.deg0) out.target = direct_sum_rep(A, out.target, projective_rep(A, t));
  const int n = A.num_vertices();
  out.map.resize(n);
  ModMap d = c.diff_map(A);
  for (int v = 0; v < n; ++v) {
    RatMatrix m(out.target.dims[v], out.source.dims[v]);
    int col0 = 0;
    for (size_t r = 0; r < c.deg1.size(); ++r) {
      const std::vector<int>& src_basis = proj_vertex_basis(A, c.deg1[r], v);
      int row0 = 0;
      for (size_t s = 0; s < c.deg0.size(); ++s) {
        const std::vector<int>& dst_basis = proj_vertex_basis(A, c.deg0[s], v);
        // component acting by left multiplication with d.e[r][s]
        for (size_t col = 0; col < src_basis.size(); ++col) {
          AlgElem img = A.mult(d.e[r][s], A.elem_of_word(src_basis[col]));
          for (size_t row = 0; row < dst_basis.size(); ++row)
            m.at(row0 + static_cast<int>(row), col0 + static_cast<int>(col)) = img[dst_basis[row]];
        }
        row0 += static_cast<int>(dst_basis.size());
      }
      col0 += static_cast<int>(src_basis.size());
    }
    out.map[v] = std::move(m);
  }
  return out;
}

namespace {

// Injective representation I_c = D(A e_c) and the vertex bases used for it:
// (I_c)_j is the dual of e_j A e_c (paths j -> c).
Representation injective_rep(const BoundQuiverAlgebra& A, int c) {
  Representation m;
  const int n = A.num_vertices();
  m.dims.resize(n);
  for (int j = 0; j < n; ++j) m.dims[j] = static_cast<int>(A.hom_basis(c, j).size());
  for (size_t a = 0; a < A.quiver().arrows.size(); ++a) {
    const Arrow& arr = A.quiver().arrows[a];
    const std::vector<int>& from_basis = A.hom_basis(c, arr.from);  // paths from -> c
    const std::vector<int>& to_basis = A.hom_basis(c, arr.to);      // paths to -> c
    // L_a : e_{to} A e_c -> e_{from} A e_c, w -> a.w ; action on duals is the
    // transpose
    RatMatrix L(static_cast<int>(from_basis.size()), static_cast<int>(to_basis.size()));
    int arrow_word = -1;
    for (int w = 0; w < A.dim(); ++w)
      if (A.word_len(w) == 1 && A.word(w)[0] == static_cast<int>(a)) {
        arrow_word = w;
        break;
      }
    for (size_t col = 0; col < to_basis.size(); ++col) {
      const AlgElem& prod = A.table(arrow_word, to_basis[col]);
      for (size_t row = 0; row < from_basis.size(); ++row)
        L.at(static_cast<int>(row), static_cast<int>(col)) = prod[from_basis[row]];
    }
    m.act.push_back(L.transpose());
  }
  return m;
}

// nu of a map P_c -> P_v given by u in e_v A e_c: the map I_c -> I_v is the
// transpose of right multiplication R_u : e_j A e_v -> e_j A e_c.
std::vector<RatMatrix> nu_of_map(const BoundQuiverAlgebra& A, int c, int v, const AlgElem& u) {
  const int n = A.num_vertices();
  std::vector<RatMatrix> out(n);
  for (int j = 0; j < n; ++j) {
    const std::vector<int>& vb = A.hom_basis(v, j);  // paths j -> v
    const std::vector<int>& cb = A.hom_basis(c, j);  // paths j -> c
    RatMatrix R(static_cast<int>(cb.size()), static_cast<int>(vb.size()));
    for (size_t col = 0; col < vb.size(); ++col) {
      AlgElem prod = A.mult(A.elem_of_word(vb[col]), u);
      for (size_t row = 0; row < cb.size(); ++row)
        R.at(static_cast<int>(row), static_cast<int>(col)) = prod[cb[row]];
    }
    out[j] = R.transpose();  // (I_c)_j -> (I_v)_j
  }
  return out;
}

}  // namespace

Representation tau(const BoundQuiverAlgebra& A, const Representation& M) {
  if (M.is_zero()) return zero_rep(A);
  TwoTermComplex pres = min_projective_presentation(A, M);
  if (pres.deg1.empty()) return zero_rep(A);  // projective module
  const int n = A.num_vertices();
  // nu P1 and nu P0 as direct sums of injectives
  Representation nu_p1 = zero_rep(A), nu_p0 = zero_rep(A);
  for (int t : pres.deg1) nu_p1 = direct_sum_rep(A, nu_p1, injective_rep(A, t));
  for (int t : pres.deg0) nu_p0 = direct_sum_rep(A, nu_p0, injective_rep(A, t));
  // assemble nu(delta) vertex-wise
  std::vector<RatMatrix> nud(n);
  for (int v = 0; v < n; ++v) nud[v] = RatMatrix(nu_p0.dims[v], nu_p1.dims[v]);
  ModMap d = pres.diff_map(A);
  for (size_t r = 0; r < pres.deg1.size(); ++r)
    for (size_t s = 0; s < pres.deg0.size(); ++s) {
      std::vector<RatMatrix> block = nu_of_map(A, pres.deg1[r], pres.deg0[s], d.e[r][s]);
      for (int v = 0; v < n; ++v) {
        int row0 = 0, col0 = 0;
        for (size_t s2 = 0; s2 < s; ++s2)
          row0 += static_cast<int>(A.hom_basis(pres.deg0[s2], v).size());
        for (size_t r2 = 0; r2 < r; ++r2)
          col0 += static_cast<int>(A.hom_basis(pres.deg1[r2], v).size());
        for (int i = 0; i < block[v].rows(); ++i)
          for (int j = 0; j < block[v].cols(); ++j) nud[v].at(row0 + i, col0 + j) += block[v].at(i, j);
      }
    }
  std::vector<int> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = nu_p0.dims[v];
  SubRep K = kernel_subrep(A, nu_p1, nud, rows);
  return K.rep;
}

TauRigidResult is_tau_rigid_pair(const BoundQuiverAlgebra& A, const Representation& M,
                                 const std::vector<int>& support_proj) {
  TauRigidResult res;
  if (!M.is_zero()) {
    Representation tm = tau(A, M);
    if (!tm.is_zero()) {
      std::vector<RepHom> h = hom_rep(A, M, tm);
      if (!h.empty()) {
        res.ok = false;
        res.certificate = "nonzero Hom(M, tau M) of dimension " + std::to_string(h.size());
        return res;
      }
    }
    for (int p : support_proj) {
      std::vector<RepHom> h = hom_rep(A, projective_rep(A, p), M);
      if (!h.empty()) {
        res.ok = false;
        res.certificate =
            "nonzero Hom(P_" + A.quiver().vertices[p] + ", M) of dimension " + std::to_string(h.size());
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

H0Pair h0_pair(const BoundQuiverAlgebra& A, const TwoTermComplex& c) {
  if (!is_minimal(A, c))
    throw NotMinimal("h0_pair requires a minimal complex");
  H0Pair out;
  ModMap d = c.diff_map(A);
  // support: degree -1 copies with an entirely zero differential row
  std::vector<size_t> module_rows;
  for (size_t r = 0; r < c.deg1.size(); ++r) {
    bool zero_row = true;
    for (size_t s = 0; s < c.deg0.size() && zero_row; ++s)
      for (int k = 0; k < A.dim() && zero_row; ++k)
        if (!is_zero(d.e[r][s][k])) zero_row = false;
    if (zero_row)
      out.support.push_back(c.deg1[r]);
    else
      module_rows.push_back(r);
  }
  // cokernel of the remaining differential
  TwoTermComplex trimmed;
  for (size_t r : module_rows) trimmed.deg1.push_back(c.deg1[r]);
  trimmed.deg0 = c.deg0;
  trimmed.d.assign(trimmed.deg1.size(), std::vector<AlgElem>(c.deg0.size(), A.zero_elem()));
  for (size_t i = 0; i < module_rows.size(); ++i)
    for (size_t s = 0; s < c.deg0.size(); ++s) trimmed.d[i][s] = d.e[module_rows[i]][s];
  RepMapOfComplex rm = complex_as_rep_map(A, trimmed);
  // quotient by the image, vertex-wise
  const int n = A.num_vertices();
  Representation Q;
  Q.dims.resize(n);
  std::vector<RatMatrix> proj(n);  // target -> quotient coordinates
  std::vector<std::vector<int>> comp(n);
  for (int v = 0; v < n; ++v) {
    RatMatrix img = rm.map[v];
    comp[v] = complement_by_standard_basis(img);
    Q.dims[v] = static_cast<int>(comp[v].size());
    // full basis = [image-columns | chosen std vectors]; projection takes the
    // trailing coordinates
    int icols = img.cols();
    RatMatrix full(rm.target.dims[v], icols + Q.dims[v]);
    for (int r = 0; r < rm.target.dims[v]; ++r)
      for (int cidx = 0; cidx < icols; ++cidx) full.at(r, cidx) = img.at(r, cidx);
    for (int cidx = 0; cidx < Q.dims[v]; ++cidx) full.at(comp[v][cidx], icols + cidx) = 1;
    RatMatrix pr(Q.dims[v], rm.target.dims[v]);
    for (int e = 0; e < rm.target.dims[v]; ++e) {
      RatVec col(rm.target.dims[v]);
      col[e] = 1;
      SolveResult sol = solve(full, col);
      assert(sol.solvable);
      for (int r = 0; r < Q.dims[v]; ++r) pr.at(r, e) = sol.particular[icols + r];
    }
    proj[v] = std::move(pr);
  }
  for (size_t a = 0; a < A.quiver().arrows.size(); ++a) {
    const Arrow& arr = A.quiver().arrows[a];
    RatMatrix sec(rm.target.dims[arr.from], Q.dims[arr.from]);
    for (int cidx = 0; cidx < Q.dims[arr.from]; ++cidx) sec.at(comp[arr.from][cidx], cidx) = 1;
    Q.act.push_back(proj[arr.to] * (rm.target.act[a] * sec));
  }
  out.module = std::move(Q);
  return out;
}

int count_indec_summands(const BoundQuiverAlgebra& A, const Representation& M,
                         std::mt19937_64& rng) {
  if (M.is_zero()) return 0;
  std::vector<RepHom> basis = hom_rep(A, M, M);
  const int m = static_cast<int>(basis.size());
  const int n = A.num_vertices();
  // coordinates: stack all vertex matrices
  int total = 0;
  for (int v = 0; v < n; ++v) total += M.dims[v] * M.dims[v];
  RatMatrix bas(total, m);
  for (int b = 0; b < m; ++b) {
    int r0 = 0;
    for (int v = 0; v < n; ++v)
      for (int r = 0; r < M.dims[v]; ++r)
        for (int c = 0; c < M.dims[v]; ++c) bas.at(r0++, b) = basis[b][v].at(r, c);
  }
  auto compose = [&](const RepHom& f, const RepHom& g) {
    RepHom out;
    for (int v = 0; v < n; ++v) out.push_back(g[v] * f[v]);  // g after f
    return out;
  };
  auto to_coords = [&](const RepHom& f) {
    RatVec flat(total);
    int r0 = 0;
    for (int v = 0; v < n; ++v)
      for (int r = 0; r < M.dims[v]; ++r)
        for (int c = 0; c < M.dims[v]; ++c) flat[r0++] = f[v].at(r, c);
    SolveResult sol = solve(bas, flat);
    assert(sol.solvable);
    return sol.particular;
  };
  auto from_coords = [&](const RatVec& v) {
    RepHom out;
    for (int vtx = 0; vtx < n; ++vtx) out.push_back(RatMatrix(M.dims[vtx], M.dims[vtx]));
    for (int b = 0; b < m; ++b) {
      if (is_zero(v[b])) continue;
      for (int vtx = 0; vtx < n; ++vtx)
        for (int r = 0; r < M.dims[vtx]; ++r)
          for (int c = 0; c < M.dims[vtx]; ++c) out[vtx].at(r, c) += v[b] * basis[b][vtx].at(r, c);
    }
    return out;
  };
  RepHom id;
  for (int vtx = 0; vtx < n; ++vtx) id.push_back(RatMatrix::identity(M.dims[vtx]));
  AbstractAlgebra alg;
  alg.dim = m;
  alg.one = to_coords(id);
  alg.mult = [&, compose, to_coords, from_coords](const RatVec& a, const RatVec& b) {
    return to_coords(compose(from_coords(a), from_coords(b)));
  };
  return count_simple_factors(alg, rng);
}

}  // namespace tausilt
