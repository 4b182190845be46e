#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tausilt/algebra.hpp"

namespace tausilt {

// Morphism between finite direct sums of indecomposable projectives.
// Entry e[r][c] is the component P_{src[r]} -> P_{dst[c]}, stored as the
// algebra element u in e_{dst[c]} A e_{src[r]} acting by left multiplication.
// Composition: u_{g after f} = u_g * u_f.
struct ModMap {
  std::vector<int> src, dst;
  std::vector<std::vector<AlgElem>> e;

  static ModMap zero(const BoundQuiverAlgebra& A, std::vector<int> src, std::vector<int> dst);
  static ModMap identity(const BoundQuiverAlgebra& A, std::vector<int> types);
};

ModMap then(const BoundQuiverAlgebra& A, const ModMap& f, const ModMap& g);  // g after f
ModMap add(const ModMap& f, const ModMap& g);
ModMap scale(const ModMap& f, const Rational& c);
bool is_zero_map(const ModMap& f);

// Complex of projectives concentrated in (cohomological) degrees -1 and 0.
//
// Sign and shift conventions, fixed here for every module:
//  - the shift C[1] moves degree 0 to degree -1 (differential sign flips are
//    irrelevant for two-term complexes and are dropped);
//  - cone(f : X -> Z) has C_n = X_{n+1} (+) Z_n with d(x, z) =
//    (-d_X x, f(x) + d_Z z);
//  - fiber(g : W -> X) = cone(g)[-1] is used for the dual mutation.
struct TwoTermComplex {
  std::vector<int> deg1;  // projective types in degree -1
  std::vector<int> deg0;  // projective types in degree 0
  std::vector<std::vector<AlgElem>> d;  // d[r][c]: P_{deg1[r]} -> P_{deg0[c]}

  bool is_zero() const { return deg1.empty() && deg0.empty(); }
  ModMap diff_map(const BoundQuiverAlgebra& A) const;
};

TwoTermComplex stalk_deg0(const BoundQuiverAlgebra& A, int proj);
TwoTermComplex stalk_deg1(const BoundQuiverAlgebra& A, int proj);   // P[1]
TwoTermComplex direct_sum(const BoundQuiverAlgebra& A, const TwoTermComplex& a,
                          const TwoTermComplex& b);

// g-vector: degree-0 multiplicities minus degree-(-1) multiplicities.
IntVec g_vector(const BoundQuiverAlgebra& A, const TwoTermComplex& c);

bool is_minimal(const BoundQuiverAlgebra& A, const TwoTermComplex& c);

// Homotopy-equivalent complex with all differential entries in the radical,
// obtained by Gaussian elimination of entries with an invertible idempotent
// component.
TwoTermComplex minimize(const BoundQuiverAlgebra& A, const TwoTermComplex& c);

// Chain map between two-term complexes.
struct ChainMap {
  ModMap f1;  // degree -1 component
  ModMap f0;  // degree 0 component
};

ChainMap chain_identity(const BoundQuiverAlgebra& A, const TwoTermComplex& c);
ChainMap chain_compose(const BoundQuiverAlgebra& A, const ChainMap& f, const ChainMap& g);
ChainMap chain_add(const ChainMap& f, const ChainMap& g);
ChainMap chain_scale(const ChainMap& f, const Rational& c);

// Hom in the homotopy category in shift 0: chain maps modulo null-homotopic
// ones. Keeps enough structure to express an arbitrary chain map in the
// chosen basis modulo homotopy.
class HomSpace {
 public:
  HomSpace(const BoundQuiverAlgebra& A, const TwoTermComplex& M, const TwoTermComplex& N);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<ChainMap>& basis() const { return basis_; }

  // Coordinates of a chain map M -> N in the basis, modulo homotopy.
  RatVec coords(const ChainMap& f) const;
  ChainMap from_coords(const RatVec& coords) const;

 private:
  const BoundQuiverAlgebra* A_;
  const TwoTermComplex *M_, *N_;
  std::vector<ChainMap> basis_;
  RatMatrix express_;  // columns: [basis | homotopy span]
  int hom1_dim_ = 0, hom0_dim_ = 0;

  RatVec pack(const ChainMap& f) const;
  ChainMap unpack(const RatVec& v) const;
  friend class HomShiftSpace;
};

// Hom_K(M, N[1]). For two-term complexes this degenerates to all module maps
// M_{-1} -> N_0 modulo those of the form h d_M + d_N h'; shifts k >= 2 vanish
// because the degrees are disjoint.
int hom_shift1_dim(const BoundQuiverAlgebra& A, const TwoTermComplex& M, const TwoTermComplex& N);

// Bounded complex of projectives used for cone / fiber intermediates.
struct BoundedComplex {
  int lo = 0;                           // lowest degree
  std::vector<std::vector<int>> terms;  // terms[k]: types in degree lo + k
  std::vector<ModMap> diffs;            // diffs[k]: terms[k] -> terms[k+1]
};

BoundedComplex cone(const BoundQuiverAlgebra& A, const TwoTermComplex& X,
                    const TwoTermComplex& Z, const ChainMap& f);  // f : X -> Z
BoundedComplex fiber(const BoundQuiverAlgebra& A, const TwoTermComplex& W,
                     const TwoTermComplex& X, const ChainMap& g);  // g : W -> X

void minimize_bounded(const BoundQuiverAlgebra& A, BoundedComplex& c);

// Null when the minimized complex is not supported in degrees {-1, 0}.
std::optional<TwoTermComplex> to_two_term(const BoundQuiverAlgebra& A, const BoundedComplex& c);

std::string complex_str(const BoundQuiverAlgebra& A, const TwoTermComplex& c);

}  // namespace tausilt
