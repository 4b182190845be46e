#pragma once

#include <random>
#include <string>
#include <vector>

#include "tausilt/algebra.hpp"
#include "tausilt/complex.hpp"

namespace tausilt {

// Finite dimensional right A-module as a covariant representation of the
// quiver: a space per vertex, a matrix per arrow (columns act, so the matrix
// of arrow a : i -> j has shape dims[j] x dims[i], and a path acts by the
// product of its arrow matrices in traversal order).
struct Representation {
  std::vector<int> dims;
  std::vector<RatMatrix> act;  // one per arrow

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

Representation zero_rep(const BoundQuiverAlgebra& A);
Representation projective_rep(const BoundQuiverAlgebra& A, int vertex);
Representation simple_rep(const BoundQuiverAlgebra& A, int vertex);
Representation direct_sum_rep(const BoundQuiverAlgebra& A, const Representation& a,
                              const Representation& b);
Representation algebra_as_module(const BoundQuiverAlgebra& A);

// True when every relation of the algebra acts by zero (debug aid; all
// constructors here produce valid representations).
bool rep_satisfies_relations(const BoundQuiverAlgebra& A, const Representation& m);

// Element of Hom_A(M, N): one matrix per vertex commuting with arrow actions.
using RepHom = std::vector<RatMatrix>;

std::vector<RepHom> hom_rep(const BoundQuiverAlgebra& A, const Representation& M,
                            const Representation& N);

// Trace of M in N equals N; equivalently some M^k surjects onto N.
bool fac_contains(const BoundQuiverAlgebra& A, const Representation& M, const Representation& N);

// Minimal projective presentation P1 -> P0 of M, as a two-term complex with
// residue-path differential entries; all entries lie in the radical.
TwoTermComplex min_projective_presentation(const BoundQuiverAlgebra& A, const Representation& M);

// Auslander-Reiten translate via the Nakayama functor on the minimal
// presentation: tau M = ker(nu P1 -> nu P0); zero for projective M.
Representation tau(const BoundQuiverAlgebra& A, const Representation& M);

struct TauRigidResult {
  bool ok = false;
  std::string certificate;  // a nonzero hom witness on failure
};

// Checks Hom(M, tau M) = 0 and Hom(P, M) = 0 for the support projectives.
TauRigidResult is_tau_rigid_pair(const BoundQuiverAlgebra& A, const Representation& M,
                                 const std::vector<int>& support_proj);

struct H0Pair {
  Representation module;
  std::vector<int> support;  // projective indices with zero differential row
};

// H^0 of a minimal two-term complex together with its shifted-projective
// support; throws NotMinimal when the complex has an invertible entry.
H0Pair h0_pair(const BoundQuiverAlgebra& A, const TwoTermComplex& c);

// Number of pairwise non-isomorphic indecomposable direct summands.
int count_indec_summands(const BoundQuiverAlgebra& A, const Representation& M,
                         std::mt19937_64& rng);

// Representation of a two-term complex's terms and differential as an honest
// map of representations (used by h0_pair and the tests).
struct RepMapOfComplex {
  Representation source, target;
  std::vector<RatMatrix> map;  // one matrix per vertex
};
RepMapOfComplex complex_as_rep_map(const BoundQuiverAlgebra& A, const TwoTermComplex& c);

}  // namespace tausilt
