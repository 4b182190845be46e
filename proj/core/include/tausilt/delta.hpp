#pragma once

#include <string>
#include <vector>

#include "tausilt/explorer.hpp"

namespace tausilt {

// The simplicial complex with vertices the indecomposable two-term presilting
// summands and maximal faces the silting objects. Faces are the downward
// closure of the maximal faces; no extra presilting check is needed, since a
// direct summand of a presilting object is presilting.
struct SimplicialComplex {
  int n = 0;                                // face size (purity dimension + 1)
  std::vector<IntVec> vertex_g;             // sorted by g-vector
  std::vector<std::vector<int>> max_faces;  // sorted vertex-index sets, sorted
};

SimplicialComplex build_delta(const BoundQuiverAlgebra& A, const MutationGraph& g);

struct PurityReport {
  bool ok = false;
  std::string detail;
};

// Purity (all maximal faces of size n) and the closed pseudomanifold
// condition (every codimension-1 face lies in exactly two maximal faces).
PurityReport check_pure_nonbranching(const SimplicialComplex& dc);

struct HomologyReport {
  long euler = 0;                         // non-reduced Euler characteristic
  std::vector<long> reduced_ranks;        // ranks of reduced homology, degrees 0..n-1
  std::vector<std::vector<Int>> torsion;  // invariant factors > 1 per degree
  bool is_sphere = false;                 // homology of S^{n-1}
};

HomologyReport euler_and_homology(const SimplicialComplex& dc);

struct ShellingReport {
  bool ok = false;
  std::vector<int> order;  // max-face indices in shelling order
  std::string witness;
};

// Verifies the shelling condition for an explicitly given order of maximal
// faces.
ShellingReport verify_shelling(const SimplicialComplex& dc, const std::vector<int>& order);

// Linear extension of the silting order (smallest first, ties broken by
// canonical key), then verification.
ShellingReport shelling_from_order(const SimplicialComplex& dc, const MutationGraph& g);

struct DualGraphWithPolygons {
  // edges between maximal faces sharing a codimension-1 face
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> shared_face;  // the codim-1 face per edge
  // polygons: closed cycles of maximal faces around each codimension-2 face
  std::vector<std::vector<int>> polygons;
  bool connected = false;
  bool polygons_closed = false;  // every polygon is a single closed cycle
};

DualGraphWithPolygons dual_graph(const SimplicialComplex& dc);

struct Rank2Report {
  bool ok = false;
  int cycle_rank = 0;
  int polygon_rank = 0;
  std::string detail;
};

// The integral cycle space of the dual graph has rank E - V + C; the polygon
// cycles must span it (abelianized rank-2 generation).
Rank2Report rank2_cycle_check(const SimplicialComplex& dc);

}  // namespace tausilt
