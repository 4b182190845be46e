#pragma once

#include <random>
#include <string>
#include <vector>

#include "tausilt/complex.hpp"

namespace tausilt {

// Lexicographic comparison of integer vectors.
bool gvec_less(const IntVec& a, const IntVec& b);
std::string gvec_str(const IntVec& g);

// A basic two-term silting (or presilting) object tracked as a direct sum of
// explicit indecomposable minimal summands, canonically ordered by g-vector.
struct SiltingObject {
  std::vector<TwoTermComplex> summands;
  std::vector<IntVec> gvecs;  // per summand, sorted ascending
  std::string key;            // canonical: "g1;g2;..." with gi = "a,b,c"

  int size() const { return static_cast<int>(summands.size()); }
  TwoTermComplex total(const BoundQuiverAlgebra& A) const;
  IntMatrix g_matrix(const BoundQuiverAlgebra& A) const;  // columns sorted lex
};

SiltingObject make_silting(const BoundQuiverAlgebra& A, std::vector<TwoTermComplex> summands);
SiltingObject stalk_silting(const BoundQuiverAlgebra& A);          // A itself
SiltingObject shifted_stalk_silting(const BoundQuiverAlgebra& A);  // A[1]

// T(M, N[1]) = 0; for two-term complexes every higher shift vanishes by
// degree disjointness, so this single check decides the silting order M >= N.
bool order_geq(const BoundQuiverAlgebra& A, const TwoTermComplex& M, const TwoTermComplex& N);
bool order_geq(const BoundQuiverAlgebra& A, const SiltingObject& M, const SiltingObject& N);

bool is_presilting(const BoundQuiverAlgebra& A, const TwoTermComplex& M);

// Presilting with exactly n pairwise non-isomorphic indecomposable summands.
bool is_two_term_silting(const BoundQuiverAlgebra& A, const TwoTermComplex& M,
                         std::mt19937_64& rng);

// Number of pairwise non-isomorphic indecomposable summands of a minimal
// complex, via the simple factors of End_K.
int count_indec_summands_complex(const BoundQuiverAlgebra& A, const TwoTermComplex& M,
                                 std::mt19937_64& rng);

struct Approximation {
  TwoTermComplex target;  // object of add U
  ChainMap map;           // X -> target (left) or target -> X (right)
};

// Minimal left add(U)-approximation of X, assembled from hom bases and
// reduced by the radical quotient of the category add U.
Approximation minimal_left_approximation(const BoundQuiverAlgebra& A, const TwoTermComplex& X,
                                         const std::vector<TwoTermComplex>& U);
Approximation minimal_right_approximation(const BoundQuiverAlgebra& A, const TwoTermComplex& X,
                                          const std::vector<TwoTermComplex>& U);

struct MutationResult {
  SiltingObject object;
  TwoTermComplex new_summand;
  int removed_index;
};

// The unique other basic two-term silting object sharing all summands except
// summands[k]; cone of the minimal left approximation, with the dual fiber
// construction as fallback. Postconditions (result is silting, differs from
// the input, shares n-1 summands) are checked; throws MutationFailed.
MutationResult mutate(const BoundQuiverAlgebra& A, const SiltingObject& S, int k,
                      bool validate = false, std::mt19937_64* rng = nullptr);

// Multiplicity of the indecomposable X as a direct summand of Z, detected by
// the composition pairing Hom(Z,X) x Hom(X,Z) -> End(X) escaping the radical.
int summand_multiplicity(const BoundQuiverAlgebra& A, const TwoTermComplex& Z,
                         const TwoTermComplex& X);

// Z = X (+) remainder for X an indecomposable summand; throws when X is not a
// summand.
TwoTermComplex split_off(const BoundQuiverAlgebra& A, const TwoTermComplex& Z,
                         const TwoTermComplex& X);

// Order-maximum element of the pool containing all summand keys of U.
SiltingObject bongartz_complete(const BoundQuiverAlgebra& A,
                                const std::vector<IntVec>& presilting_keys,
                                const std::vector<SiltingObject>& pool);

// Explicit isomorphism test: two-sided invertible chain maps.
bool complexes_isomorphic(const BoundQuiverAlgebra& A, const TwoTermComplex& X,
                          const TwoTermComplex& Y);

}  // namespace tausilt
