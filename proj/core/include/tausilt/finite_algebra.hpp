#pragma once

#include <functional>
#include <random>
#include <vector>

#include "tausilt/matrix.hpp"

namespace tausilt {

// A finite dimensional unital algebra over the rationals given in coordinates:
// a multiplication on coordinate vectors and the coordinates of 1.
struct AbstractAlgebra {
  int dim = 0;
  std::function<RatVec(const RatVec&, const RatVec&)> mult;
  RatVec one;
};

// Coordinates of a basis of the Jacobson radical, via the kernel of the trace
// form of the left regular representation (characteristic zero).
std::vector<RatVec> algebra_radical(const AbstractAlgebra& alg);

// Number of simple factors of alg / rad(alg): equals the number of pairwise
// non-isomorphic indecomposable summands when alg is the endomorphism algebra
// of a module or complex. Certified by finding a random central element whose
// minimal polynomial splits into distinct rational linear factors; throws
// IdempotentSearchExhausted after a bounded number of attempts.
int count_simple_factors(const AbstractAlgebra& alg, std::mt19937_64& rng);

}  // namespace tausilt
