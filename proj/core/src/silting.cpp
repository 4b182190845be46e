#include "tausilt/silting.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "tausilt/errors.hpp"
#include "tausilt/finite_algebra.hpp"

namespace tausilt {

bool gvec_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::string gvec_str(const IntVec& g) {
  std::ostringstream os;
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    os << g[i].get_str();
  }
  return os.str();
}

TwoTermComplex SiltingObject::total(const BoundQuiverAlgebra& A) const {
  TwoTermComplex t;
  for (const TwoTermComplex& s : summands) t = direct_sum(A, t, s);
  return t;
}

IntMatrix SiltingObject::g_matrix(const BoundQuiverAlgebra& A) const {
  IntMatrix m(A.num_vertices(), size());
  for (int c = 0; c < size(); ++c)
    for (int r = 0; r < A.num_vertices(); ++r) m.at(r, c) = gvecs[c][r];
  return m;
}

SiltingObject make_silting(const BoundQuiverAlgebra& A, std::vector<TwoTermComplex> summands) {
  SiltingObject s;
  std::vector<std::pair<IntVec, TwoTermComplex>> tagged;
  for (TwoTermComplex& c : summands) tagged.emplace_back(g_vector(A, c), std::move(c));
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& a, const auto& b) { return gvec_less(a.first, b.first); });
  std::ostringstream key;
  for (size_t i = 0; i < tagged.size(); ++i) {
    if (i) key << ";";
    key << gvec_str(tagged[i].first);
    s.gvecs.push_back(tagged[i].first);
    s.summands.push_back(std::move(tagged[i].second));
  }
  s.key = key.str();
  return s;
}

SiltingObject stalk_silting(const BoundQuiverAlgebra& A) {
  std::vector<TwoTermComplex> parts;
  for (int v = 0; v < A.num_vertices(); ++v) parts.push_back(stalk_deg0(A, v));
  return make_silting(A, std::move(parts));
}

SiltingObject shifted_stalk_silting(const BoundQuiverAlgebra& A) {
  std::vector<TwoTermComplex> parts;
  for (int v = 0; v < A.num_vertices(); ++v) parts.push_back(stalk_deg1(A, v));
  return make_silting(A, std::move(parts));
}

bool order_geq(const BoundQuiverAlgebra& A, const TwoTermComplex& M, const TwoTermComplex& N) {
  return hom_shift1_dim(A, M, N) == 0;
}

bool order_geq(const BoundQuiverAlgebra& A, const SiltingObject& M, const SiltingObject& N) {
  return order_geq(A, M.total(A), N.total(A));
}

bool is_presilting(const BoundQuiverAlgebra& A, const TwoTermComplex& M) {
  return hom_shift1_dim(A, M, M) == 0;
}

namespace {

// End_K(M) as an abstract algebra in the coordinates of a HomSpace basis.
AbstractAlgebra end_algebra(const BoundQuiverAlgebra& A, const TwoTermComplex& M,
                            const HomSpace& H) {
  AbstractAlgebra alg;
  alg.dim = H.dim();
  alg.one = H.coords(chain_identity(A, M));
  alg.mult = [&A, &H](const RatVec& a, const RatVec& b) {
    // a * b applies b first
    return H.coords(chain_compose(A, H.from_coords(b), H.from_coords(a)));
  };
  return alg;
}

bool in_span(const std::vector<RatVec>& span, const RatVec& v) {
  if (v.empty()) return true;
  const int h = static_cast<int>(v.size());
  RatMatrix m(h, static_cast<int>(span.size()) + 1);
  for (size_t c = 0; c < span.size(); ++c)
    for (int r = 0; r < h; ++r) m.at(r, static_cast<int>(c)) = span[c][r];
  RatMatrix m2(h, static_cast<int>(span.size()));
  for (size_t c = 0; c < span.size(); ++c)
    for (int r = 0; r < h; ++r) m2.at(r, static_cast<int>(c)) = span[c][r];
  for (int r = 0; r < h; ++r) m.at(r, static_cast<int>(span.size())) = v[r];
  return rank(m) == rank(m2);
}

}  // namespace

int count_indec_summands_complex(const BoundQuiverAlgebra& A, const TwoTermComplex& M,
                                 std::mt19937_64& rng) {
  if (M.is_zero()) return 0;
  HomSpace H(A, M, M);
  AbstractAlgebra alg = end_algebra(A, M, H);
  return count_simple_factors(alg, rng);
}

bool is_two_term_silting(const BoundQuiverAlgebra& A, const TwoTermComplex& M,
                         std::mt19937_64& rng) {
  if (!is_minimal(A, M)) throw NotMinimal("is_two_term_silting requires a minimal complex");
  if (!is_presilting(A, M)) return false;
  return count_indec_summands_complex(A, M, rng) == A.num_vertices();
}

// ---------------------------------------------------------------------------
// Approximations.

namespace {

// Chain maps spanning the radical of Hom_K(U_l, U_j) inside add(U): all of
// Hom for l != j, the radical of End_K for l == j.
std::vector<ChainMap> radical_homs(const BoundQuiverAlgebra& A, const TwoTermComplex& Ul,
                                   const TwoTermComplex& Uj, bool same) {
  HomSpace H(A, Ul, Uj);
  std::vector<ChainMap> out;
  if (!same) {
    out = H.basis();
  } else {
    AbstractAlgebra alg = end_algebra(A, Ul, H);
    for (const RatVec& coords : algebra_radical(alg)) out.push_back(H.from_coords(coords));
  }
  return out;
}

struct BlockAssembly {
  TwoTermComplex target;
  std::vector<ChainMap> components;  // maps X -> U_{j(t)} (left) or U -> X (right)
  std::vector<int> which;            // index of U per component
};

}  // namespace

Approximation minimal_left_approximation(const BoundQuiverAlgebra& A, const TwoTermComplex& X,
                                         const std::vector<TwoTermComplex>& U) {
  BlockAssembly asmb;
  for (size_t j = 0; j < U.size(); ++j) {
    HomSpace Hj(A, X, U[j]);
    if (Hj.dim() == 0) continue;
    std::vector<RatVec> rad_span;
    for (size_t l = 0; l < U.size(); ++l) {
      HomSpace Hl(A, X, U[l]);
      if (Hl.dim() == 0) continue;
      std::vector<ChainMap> rads = radical_homs(A, U[l], U[j], l == j);
      for (const ChainMap& psi : Hl.basis())
        for (const ChainMap& beta : rads)
          rad_span.push_back(Hj.coords(chain_compose(A, psi, beta)));
    }
    for (int t = 0; t < Hj.dim(); ++t) {
      RatVec unit(Hj.dim());
      unit[t] = 1;
      if (!in_span(rad_span, unit)) {
        asmb.components.push_back(Hj.basis()[t]);
        asmb.which.push_back(static_cast<int>(j));
        rad_span.push_back(unit);
      }
    }
  }
  // assemble f : X -> (+) components
  TwoTermComplex target;
  for (int j : asmb.which) target = direct_sum(A, target, U[j]);
  ChainMap f{ModMap::zero(A, X.deg1, target.deg1), ModMap::zero(A, X.deg0, target.deg0)};
  size_t off1 = 0, off0 = 0;
  for (size_t t = 0; t < asmb.components.size(); ++t) {
    const TwoTermComplex& Uj = U[asmb.which[t]];
    const ChainMap& comp = asmb.components[t];
    for (size_t r = 0; r < X.deg1.size(); ++r)
      for (size_t s = 0; s < Uj.deg1.size(); ++s) f.f1.e[r][off1 + s] = comp.f1.e[r][s];
    for (size_t r = 0; r < X.deg0.size(); ++r)
      for (size_t s = 0; s < Uj.deg0.size(); ++s) f.f0.e[r][off0 + s] = comp.f0.e[r][s];
    off1 += Uj.deg1.size();
    off0 += Uj.deg0.size();
  }
  return Approximation{std::move(target), std::move(f)};
}

Approximation minimal_right_approximation(const BoundQuiverAlgebra& A, const TwoTermComplex& X,
                                          const std::vector<TwoTermComplex>& U) {
  BlockAssembly asmb;
  for (size_t j = 0; j < U.size(); ++j) {
    HomSpace Hj(A, U[j], X);
    if (Hj.dim() == 0) continue;
    std::vector<RatVec> rad_span;
    for (size_t l = 0; l < U.size(); ++l) {
      HomSpace Hl(A, U[l], X);
      if (Hl.dim() == 0) continue;
      std::vector<ChainMap> rads = radical_homs(A, U[j], U[l], l == j);
      for (const ChainMap& psi : Hl.basis())
        for (const ChainMap& beta : rads)
          rad_span.push_back(Hj.coords(chain_compose(A, beta, psi)));
    }
    for (int t = 0; t < Hj.dim(); ++t) {
      RatVec unit(Hj.dim());
      unit[t] = 1;
      if (!in_span(rad_span, unit)) {
        asmb.components.push_back(Hj.basis()[t]);
        asmb.which.push_back(static_cast<int>(j));
        rad_span.push_back(unit);
      }
    }
  }
  TwoTermComplex source;
  for (int j : asmb.which) source = direct_sum(A, source, U[j]);
  ChainMap g{ModMap::zero(A, source.deg1, X.deg1), ModMap::zero(A, source.deg0, X.deg0)};
  size_t off1 = 0, off0 = 0;
  for (size_t t = 0; t < asmb.components.size(); ++t) {
    const TwoTermComplex& Uj = U[asmb.which[t]];
    const ChainMap& comp = asmb.components[t];
    for (size_t r = 0; r < Uj.deg1.size(); ++r)
      for (size_t s = 0; s < X.deg1.size(); ++s) g.f1.e[off1 + r][s] = comp.f1.e[r][s];
    for (size_t r = 0; r < Uj.deg0.size(); ++r)
      for (size_t s = 0; s < X.deg0.size(); ++s) g.f0.e[off0 + r][s] = comp.f0.e[r][s];
    off1 += Uj.deg1.size();
    off0 += Uj.deg0.size();
  }
  return Approximation{std::move(source), std::move(g)};
}

// ---------------------------------------------------------------------------
// Mutation.

namespace {

bool same_gvec(const IntVec& a, const IntVec& b) { return a == b; }

// presilting compatibility of candidate summand Y against kept summands
bool compatible_with(const BoundQuiverAlgebra& A, const TwoTermComplex& Y,
                     const std::vector<TwoTermComplex>& kept) {
  if (hom_shift1_dim(A, Y, Y) != 0) return false;
  for (const TwoTermComplex& u : kept) {
    if (hom_shift1_dim(A, Y, u) != 0) return false;
    if (hom_shift1_dim(A, u, Y) != 0) return false;
  }
  return true;
}

}  // namespace

MutationResult mutate(const BoundQuiverAlgebra& A, const SiltingObject& S, int k, bool validate,
                      std::mt19937_64* rng) {
  assert(k >= 0 && k < S.size());
  const TwoTermComplex& X = S.summands[k];
  std::vector<TwoTermComplex> kept;
  for (int i = 0; i < S.size(); ++i)
    if (i != k) kept.push_back(S.summands[i]);

  auto finish = [&](TwoTermComplex Y, const char* route) -> MutationResult {
    IntVec gY = g_vector(A, Y);
    if (same_gvec(gY, S.gvecs[k]))
      throw MutationFailed(std::string("mutation returned the removed summand via ") + route);
    for (const IntVec& g : S.gvecs)
      if (same_gvec(g, gY))
        throw MutationFailed(std::string("mutation produced an existing summand via ") + route);
    if (validate && rng) {
      if (count_indec_summands_complex(A, Y, *rng) != 1)
        throw MutationFailed(std::string("mutation cone is decomposable via ") + route);
    }
    std::vector<TwoTermComplex> parts = kept;
    parts.push_back(std::move(Y));
    MutationResult res{make_silting(A, std::move(parts)), TwoTermComplex{}, k};
    res.new_summand = res.object.summands[0];
    for (int i = 0; i < res.object.size(); ++i)
      if (same_gvec(res.object.gvecs[i], gY)) res.new_summand = res.object.summands[i];
    return res;
  };

  std::string diagnostics;
  {
    Approximation ap = minimal_left_approximation(A, X, kept);
    BoundedComplex c = cone(A, X, ap.target, ap.map);
    minimize_bounded(A, c);
    std::optional<TwoTermComplex> Y = to_two_term(A, c);
    if (Y && !Y->is_zero() && compatible_with(A, *Y, kept)) {
      IntVec gY = g_vector(A, *Y);
      bool clashes = same_gvec(gY, S.gvecs[k]);
      for (const IntVec& g : S.gvecs) clashes = clashes || same_gvec(g, gY);
      if (!clashes) return finish(std::move(*Y), "left approximation cone");
      diagnostics += "left cone clashed with an existing summand; ";
    } else {
      diagnostics += Y ? (Y->is_zero() ? "left cone vanished; " : "left cone not presilting-compatible; ")
                       : "left cone not two-term; ";
    }
  }
  {
    Approximation ap = minimal_right_approximation(A, X, kept);
    BoundedComplex c = fiber(A, ap.target, X, ap.map);
    minimize_bounded(A, c);
    std::optional<TwoTermComplex> Y = to_two_term(A, c);
    if (Y && !Y->is_zero() && compatible_with(A, *Y, kept)) {
      IntVec gY = g_vector(A, *Y);
      bool clashes = same_gvec(gY, S.gvecs[k]);
      for (const IntVec& g : S.gvecs) clashes = clashes || same_gvec(g, gY);
      if (!clashes) return finish(std::move(*Y), "right approximation fiber");
      diagnostics += "right fiber clashed with an existing summand; ";
    } else {
      diagnostics += Y ? (Y->is_zero() ? "right fiber vanished; " : "right fiber not presilting-compatible; ")
                       : "right fiber not two-term; ";
    }
  }
  throw MutationFailed("mutation at summand " + std::to_string(k) + " of " + S.key + " failed: " +
                       diagnostics);
}

// ---------------------------------------------------------------------------
// Summand extraction.

namespace {

struct SplitData {
  std::vector<int> types;  // complement summand types
  ModMap incl;             // complement -> Z_d
  ModMap proj;             // Z_d -> complement
};

// Split the image of the module idempotent f (as 1 - p) at one degree of a
// minimal complex: returns inclusion/retraction for a complement presented as
// a sum of indecomposable projectives.
SplitData split_module_idempotent(const BoundQuiverAlgebra& A, const std::vector<int>& types,
                                  const ModMap& f) {
  const size_t k = types.size();
  // scalar part per projective type
  std::map<int, std::vector<size_t>> by_type;
  for (size_t i = 0; i < k; ++i) by_type[types[i]].push_back(i);
  std::vector<size_t> chosen;  // chosen generator columns in Z_d
  for (auto& [type, idxs] : by_type) {
    const int kk = static_cast<int>(idxs.size());
    RatMatrix scal(kk, kk);
    for (int r = 0; r < kk; ++r)
      for (int c = 0; c < kk; ++c) scal.at(r, c) = f.e[idxs[c]][idxs[r]][type];
    // column space of the scalar idempotent: greedy independent columns
    RatMatrix acc(kk, 0);
    for (int c = 0; c < kk; ++c) {
      RatMatrix trial(kk, acc.cols() + 1);
      for (int r = 0; r < kk; ++r) {
        for (int cc = 0; cc < acc.cols(); ++cc) trial.at(r, cc) = acc.at(r, cc);
        trial.at(r, acc.cols()) = scal.at(r, c);
      }
      if (rank(trial) > acc.cols()) {
        acc = trial;
        chosen.push_back(idxs[c]);
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  SplitData out;
  for (size_t c : chosen) out.types.push_back(types[c]);
  // sigma = f after the standard inclusion of the chosen columns
  ModMap iota = ModMap::zero(A, out.types, types);
  for (size_t t = 0; t < chosen.size(); ++t) iota.e[t][chosen[t]][out.types[t]] = 1;
  ModMap sigma = then(A, iota, f);
  // scalar left inverse of sigma's scalar part: rows = chosen columns block
  const size_t m = out.types.size();
  ModMap pi0 = ModMap::zero(A, types, out.types);
  {
    // scalar matrices per type again, restricted to chosen rows
    std::map<int, std::vector<size_t>> rows_by_type;
    for (size_t i = 0; i < k; ++i) rows_by_type[types[i]].push_back(i);
    // build the full scalar matrix of sigma: rows = Z_d copies, cols = chosen
    RatMatrix scal(static_cast<int>(k), static_cast<int>(m));
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < m; ++c)
        if (types[r] == out.types[c]) scal.at(static_cast<int>(r), static_cast<int>(c)) = sigma.e[c][r][types[r]];
    // deterministic row selection making the square submatrix invertible
    std::vector<int> sel;
    RatMatrix acc(static_cast<int>(m), 0);
    for (size_t r = 0; r < k && acc.cols() < static_cast<int>(m); ++r) {
      RatMatrix trial(static_cast<int>(m), acc.cols() + 1);
      for (int rr = 0; rr < static_cast<int>(m); ++rr) {
        for (int cc = 0; cc < acc.cols(); ++cc) trial.at(rr, cc) = acc.at(rr, cc);
        trial.at(rr, acc.cols()) = scal.at(static_cast<int>(r), rr);
      }
      if (rank(trial) > acc.cols()) {
        acc = trial;
        sel.push_back(static_cast<int>(r));
      }
    }
    assert(sel.size() == m);
    // invert the selected square block
    RatMatrix block(static_cast<int>(m), static_cast<int>(m));
    for (size_t r = 0; r < m; ++r)
      for (size_t c = 0; c < m; ++c) block.at(static_cast<int>(r), static_cast<int>(c)) = scal.at(sel[r], static_cast<int>(c));
    RatMatrix aug(static_cast<int>(m), 2 * static_cast<int>(m));
    for (size_t r = 0; r < m; ++r) {
      for (size_t c = 0; c < m; ++c) aug.at(static_cast<int>(r), static_cast<int>(c)) = block.at(static_cast<int>(r), static_cast<int>(c));
      aug.at(static_cast<int>(r), static_cast<int>(m + r)) = 1;
    }
    RatMatrix red = rref(aug);
    // pi0[z][c] = inv[c][row-position of z in sel] as scalar entries
    for (size_t c = 0; c < m; ++c)
      for (size_t rpos = 0; rpos < m; ++rpos) {
        const Rational& coef = red.at(static_cast<int>(c), static_cast<int>(m + rpos));
        if (!is_zero(coef)) pi0.e[sel[rpos]][c][out.types[c]] = coef;
      }
  }
  // pi0 . sigma = id + rho with rho radical; correct by the finite geometric
  // series
  ModMap rho = then(A, sigma, pi0);
  ModMap id = ModMap::identity(A, out.types);
  for (size_t r = 0; r < m; ++r) rho.e[r][r][out.types[r]] -= 1;
  ModMap inv = id;
  ModMap power = rho;
  int guard = 0;
  while (!is_zero_map(power)) {
    inv = (guard % 2 == 0) ? add(inv, scale(power, Rational(-1))) : add(inv, power);
    power = then(A, power, rho);
    if (++guard > 64) throw std::logic_error("geometric series for retraction did not terminate");
  }
  out.proj = then(A, pi0, inv);  // apply pi0 then inv
  out.incl = sigma;
  return out;
}

std::optional<TwoTermComplex> try_split_off(const BoundQuiverAlgebra& A, const TwoTermComplex& Z,
                                            const TwoTermComplex& X) {
  if (Z.is_zero()) return std::nullopt;
  HomSpace ZX(A, Z, X);
  HomSpace XZ(A, X, Z);
  if (ZX.dim() == 0 || XZ.dim() == 0) return std::nullopt;
  HomSpace EX(A, X, X);
  AbstractAlgebra endx = end_algebra(A, X, EX);
  std::vector<RatVec> rad = algebra_radical(endx);
  int found_phi = -1, found_psi = -1;
  for (int i = 0; i < XZ.dim() && found_phi < 0; ++i)
    for (int j = 0; j < ZX.dim() && found_phi < 0; ++j) {
      ChainMap e = chain_compose(A, XZ.basis()[i], ZX.basis()[j]);  // X -> Z -> X
      RatVec coords = EX.coords(e);
      if (!in_span(rad, coords)) {
        found_psi = i;
        found_phi = j;
      }
    }
  if (found_phi < 0) return std::nullopt;
  const ChainMap& psi = XZ.basis()[found_psi];  // X -> Z
  const ChainMap& phi = ZX.basis()[found_phi];  // Z -> X
  ChainMap e = chain_compose(A, psi, phi);
  // invert e inside End_K(X): solve (left mult by e) x = 1
  RatVec e_coords = EX.coords(e);
  RatMatrix lm(EX.dim(), EX.dim());
  for (int j = 0; j < EX.dim(); ++j) {
    RatVec unit(EX.dim());
    unit[j] = 1;
    RatVec col = EX.coords(chain_compose(A, EX.from_coords(unit), e));  // e after x
    for (int i = 0; i < EX.dim(); ++i) lm.at(i, j) = col[i];
  }
  SolveResult sol = solve(lm, EX.coords(chain_identity(A, X)));
  if (!sol.solvable) throw std::logic_error("unit of local endomorphism ring not invertible");
  ChainMap einv = EX.from_coords(sol.particular);
  // retraction r = einv after phi : Z -> X, section s = psi; p = s after r
  ChainMap r = chain_compose(A, phi, einv);
  ChainMap p = chain_compose(A, r, psi);  // Z -> Z
  // Newton-lift p to an exact chain idempotent
  for (int it = 0; it < 64; ++it) {
    ChainMap p2 = chain_compose(A, p, p);
    ChainMap diff{add(p2.f1, scale(p.f1, Rational(-1))), add(p2.f0, scale(p.f0, Rational(-1)))};
    if (is_zero_map(diff.f1) && is_zero_map(diff.f0)) break;
    ChainMap p3 = chain_compose(A, p2, p);
    p = ChainMap{add(scale(p2.f1, Rational(3)), scale(p3.f1, Rational(-2))),
                 add(scale(p2.f0, Rational(3)), scale(p3.f0, Rational(-2)))};
  }
  // complement idempotent
  ModMap f1 = ModMap::identity(A, Z.deg1);
  ModMap f0 = ModMap::identity(A, Z.deg0);
  f1 = add(f1, scale(p.f1, Rational(-1)));
  f0 = add(f0, scale(p.f0, Rational(-1)));
  SplitData s1 = split_module_idempotent(A, Z.deg1, f1);
  SplitData s0 = split_module_idempotent(A, Z.deg0, f0);
  TwoTermComplex rem;
  rem.deg1 = s1.types;
  rem.deg0 = s0.types;
  ModMap d = then(A, s1.incl, then(A, Z.diff_map(A), s0.proj));
  rem.d = d.e;
  return rem;
}

}  // namespace

int summand_multiplicity(const BoundQuiverAlgebra& A, const TwoTermComplex& Z,
                         const TwoTermComplex& X) {
  int count = 0;
  TwoTermComplex cur = Z;
  while (true) {
    std::optional<TwoTermComplex> rem = try_split_off(A, cur, X);
    if (!rem) return count;
    ++count;
    cur = std::move(*rem);
  }
}

TwoTermComplex split_off(const BoundQuiverAlgebra& A, const TwoTermComplex& Z,
                         const TwoTermComplex& X) {
  std::optional<TwoTermComplex> rem = try_split_off(A, Z, X);
  if (!rem) throw std::runtime_error("split_off: X is not a direct summand of Z");
  return *rem;
}

SiltingObject bongartz_complete(const BoundQuiverAlgebra& A,
                                const std::vector<IntVec>& presilting_keys,
                                const std::vector<SiltingObject>& pool) {
  if (pool.empty()) throw EmptyPool("bongartz_complete: empty silting pool");
  std::vector<const SiltingObject*> candidates;
  for (const SiltingObject& T : pool) {
    bool all = true;
    for (const IntVec& g : presilting_keys) {
      bool found = false;
      for (const IntVec& h : T.gvecs) found = found || g == h;
      all = all && found;
    }
    if (all) candidates.push_back(&T);
  }
  if (candidates.empty())
    throw EmptyPool("bongartz_complete: no silting object contains the presilting summands");
  const SiltingObject* best = nullptr;
  for (const SiltingObject* T : candidates) {
    bool maximal = true;
    for (const SiltingObject* other : candidates)
      if (!order_geq(A, *T, *other)) maximal = false;
    if (maximal) {
      if (best) throw std::logic_error("bongartz_complete: maximum is not unique");
      best = T;
    }
  }
  if (!best) throw std::logic_error("bongartz_complete: no order-maximum among candidates");
  return *best;
}

bool complexes_isomorphic(const BoundQuiverAlgebra& A, const TwoTermComplex& X,
                          const TwoTermComplex& Y) {
  if (X.is_zero() && Y.is_zero()) return true;
  if (g_vector(A, X) != g_vector(A, Y)) return false;
  std::optional<TwoTermComplex> rem = try_split_off(A, Y, X);
  return rem && rem->is_zero();
}

}  // namespace tausilt
