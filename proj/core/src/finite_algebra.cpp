#include "tausilt/finite_algebra.hpp"

#include <cassert>

#include "tausilt/errors.hpp"

namespace tausilt {

namespace {

RatVec unit_vec(int dim, int i) {
  RatVec v(dim);
  v[i] = 1;
  return v;
}

// matrix of left multiplication by a, in coordinates
RatMatrix left_mult_matrix(const AbstractAlgebra& alg, const RatVec& a) {
  RatMatrix m(alg.dim, alg.dim);
  for (int j = 0; j < alg.dim; ++j) {
    RatVec col = alg.mult(a, unit_vec(alg.dim, j));
    for (int i = 0; i < alg.dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Rational trace(const RatMatrix& m) {
  Rational t(0);
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

// Monic minimal polynomial of the element with the given left-multiplication
// action on the subalgebra it generates, computed from the first linear
// dependence among 1, z, z^2, ...
std::vector<Rational> minimal_polynomial(const AbstractAlgebra& alg, const RatVec& z) {
  std::vector<RatVec> powers;
  powers.push_back(alg.one);
  while (true) {
    RatMatrix m(alg.dim, static_cast<int>(powers.size()));
    for (size_t c = 0; c < powers.size(); ++c)
      for (int r = 0; r < alg.dim; ++r) m.at(r, static_cast<int>(c)) = powers[c][r];
    RatVec next = alg.mult(powers.back(), z);
    SolveResult sol = solve(m, next);
    if (sol.solvable) {
      // z^k = sum c_i z^i  =>  mu(t) = t^k - sum c_i t^i
      std::vector<Rational> mu(powers.size() + 1);
      for (size_t i = 0; i < powers.size(); ++i) mu[i] = -sol.particular[i];
      mu[powers.size()] = 1;
      return mu;
    }
    powers.push_back(std::move(next));
    if (powers.size() > static_cast<size_t>(alg.dim) + 1)
      throw std::logic_error("minimal polynomial search exceeded the algebra dimension");
  }
}

// All rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
  // clear denominators
  Int lcm_den(1);
  for (const Rational& c : poly) {
    Int d = c.get_den();
    lcm_den = lcm(lcm_den, d);
  }
  std::vector<Int> p;
  for (const Rational& c : poly) {
    Rational scaled = c * Rational(lcm_den);
    p.push_back(scaled.get_num());
  }
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  if (p.empty()) return {};
  std::vector<Rational> roots;
  size_t low = 0;
  while (low < p.size() && sgn(p[low]) == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 > p.size()) return roots;
  Int a0 = abs(p[low]);
  Int ad = abs(p.back());
  auto divisors = [](const Int& n) {
    std::vector<Int> out;
    if (sgn(n) == 0) return out;
    Int i(1);
    while (i * i <= n) {
      if (n % i == 0) {
        out.push_back(i);
        Int other = n / i;
        if (other != i) out.push_back(other);
      }
      ++i;
      if (i > 2000000) break;  // give up on huge constant terms; caller retries
    }
    return out;
  };
  std::vector<Int> num_divs = divisors(a0);
  std::vector<Int> den_divs = divisors(ad);
  auto eval_zero = [&](const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
    return sgn(acc) == 0;
  };
  for (const Int& num : num_divs)
    for (const Int& den : den_divs) {
      Rational cand(num, den);
      cand.canonicalize();
      if (eval_zero(cand)) roots.push_back(cand);
      Rational neg = -cand;
      if (eval_zero(neg)) roots.push_back(neg);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<RatVec> algebra_radical(const AbstractAlgebra& alg) {
  std::vector<RatMatrix> lmats;
  for (int i = 0; i < alg.dim; ++i) lmats.push_back(left_mult_matrix(alg, unit_vec(alg.dim, i)));
  RatMatrix gram(alg.dim, alg.dim);
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) gram.at(i, j) = trace(lmats[i] * lmats[j]);
  return kernel_basis(gram);
}

int count_simple_factors(const AbstractAlgebra& alg, std::mt19937_64& rng) {
  if (alg.dim == 0) return 0;
  std::vector<RatVec> rad = algebra_radical(alg);
  const int q = static_cast<int>(rad.size());
  const int sdim = alg.dim - q;
  assert(sdim > 0);

  // coordinates on S = alg / rad: complete rad to a basis of alg by standard
  // vectors, then express mod rad
  RatMatrix radm(alg.dim, q);
  for (int c = 0; c < q; ++c)
    for (int r = 0; r < alg.dim; ++r) radm.at(r, c) = rad[c][r];
  std::vector<int> comp = complement_by_standard_basis(radm);
  assert(static_cast<int>(comp.size()) == sdim);
  RatMatrix full(alg.dim, alg.dim);
  for (int c = 0; c < q; ++c)
    for (int r = 0; r < alg.dim; ++r) full.at(r, c) = rad[c][r];
  for (int c = 0; c < sdim; ++c) full.at(comp[c], q + c) = 1;

  auto to_s = [&](const RatVec& v) {
    SolveResult sol = solve(full, v);
    assert(sol.solvable);
    return RatVec(sol.particular.begin() + q, sol.particular.end());
  };
  auto from_s = [&](const RatVec& s) {
    RatVec v(alg.dim);
    for (int c = 0; c < sdim; ++c) v[comp[c]] = s[c];
    return v;
  };
  AbstractAlgebra S;
  S.dim = sdim;
  S.one = to_s(alg.one);
  S.mult = [&, to_s, from_s](const RatVec& a, const RatVec& b) {
    return to_s(alg.mult(from_s(a), from_s(b)));
  };

  // center of S: [z, b] = 0 for all basis elements b
  std::vector<RatVec> commutator_rows;
  RatMatrix cond(sdim * sdim, sdim);
  for (int j = 0; j < sdim; ++j) {
    RatVec bj = unit_vec(sdim, j);
    for (int i = 0; i < sdim; ++i) {
      RatVec zi = unit_vec(sdim, i);
      RatVec comm = S.mult(zi, bj);
      RatVec rev = S.mult(bj, zi);
      for (int r = 0; r < sdim; ++r) cond.at(j * sdim + r, i) = comm[r] - rev[r];
    }
  }
  std::vector<RatVec> center = kernel_basis(cond);
  const int zdim = static_cast<int>(center.size());
  if (zdim == 1) return 1;

  const int attempts = 32;
  for (int trial = 0; trial < attempts; ++trial) {
    RatVec z(sdim);
    for (int k = 0; k < zdim; ++k) {
      long coeff = static_cast<long>(rng() % 19) - 9;
      if (trial == 0) coeff = static_cast<long>(k) + 1;  // deterministic first try
      for (int r = 0; r < sdim; ++r) z[r] += Rational(coeff) * center[k][r];
    }
    std::vector<Rational> mu = minimal_polynomial(S, z);
    if (static_cast<int>(mu.size()) != zdim + 1) continue;  // not a generator of Z(S)
    std::vector<Rational> roots = rational_roots(mu);
    if (static_cast<int>(roots.size()) == zdim) return zdim;
  }
  throw IdempotentSearchExhausted(
      "central element with fully split rational minimal polynomial not found");
}

}  // namespace tausilt
