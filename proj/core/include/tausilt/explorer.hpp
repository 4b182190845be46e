#pragma once

#include <map>
#include <string>
#include <vector>

#include "tausilt/silting.hpp"

namespace tausilt {

enum class Verdict { Finite, BudgetExhausted };
enum class StartObject { Algebra, ShiftedAlgebra };

struct GraphEdge {
  int a = -1, b = -1;   // node ids, a discovered first
  int pos_a = -1;       // summand position mutated in node a
  bool a_greater = false;  // Hasse arrow a -> b iff true, else b -> a
};

struct MutationGraph {
  Verdict verdict = Verdict::BudgetExhausted;
  std::vector<SiltingObject> nodes;  // discovery order
  std::vector<int> depth;            // BFS layer per node
  std::vector<bool> expanded;        // all n mutations computed
  std::map<std::string, int> key_to_id;
  std::vector<GraphEdge> edges;
  int root = 0;
  int n = 0;  // number of simples

  int node_id(const std::string& key) const;
};

// Breadth-first exploration of the mutation graph from A (or A[1]), nodes
// deduplicated by canonical G-matrix key. Finite iff the frontier empties
// within the node budget (and before the optional depth cap). A depth-capped
// or budget-capped run reports BudgetExhausted: never a finiteness claim.
MutationGraph explore(const BoundQuiverAlgebra& A, StartObject start, long budget,
                      int max_depth = -1, bool validate = false, unsigned seed = 0);

struct PathStats {
  int ell = 0;     // longest directed Hasse path from the stalk A node
  Int bound;       // 1 + n + ... + n^ell
  bool bound_ok = false;
};

// Requires verdict Finite; longest path is computed on the Hasse DAG.
PathStats longest_path_stats(const BoundQuiverAlgebra& A, const MutationGraph& g);

// Deterministic DOT rendering of the Hasse quiver: nodes sorted by canonical
// key, arrows oriented by the silting order, edge label = exchanged summand
// position.
std::string hasse_dot(const BoundQuiverAlgebra& A, const MutationGraph& g);

}  // namespace tausilt
