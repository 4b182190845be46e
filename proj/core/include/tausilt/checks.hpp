#pragma once

#include <string>
#include <vector>

#include "tausilt/delta.hpp"
#include "tausilt/explorer.hpp"
#include "tausilt/gfan.hpp"

namespace tausilt {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Structural theorem checks on a Finite mutation graph. Each check appears
// exactly once in the suite returned by finite_check_suite.
CheckResult check_g_identities(const BoundQuiverAlgebra& A, const MutationGraph& g, unsigned seed);
CheckResult check_sign_coherence(const BoundQuiverAlgebra& A, const MutationGraph& g);
CheckResult check_mutation_involution(const BoundQuiverAlgebra& A, const MutationGraph& g);
CheckResult check_n_regular(const BoundQuiverAlgebra& A, const MutationGraph& g);
CheckResult check_unique_source_sink(const BoundQuiverAlgebra& A, const MutationGraph& g);
CheckResult check_path_bound(const BoundQuiverAlgebra& A, const MutationGraph& g);
CheckResult check_h0_bridge(const BoundQuiverAlgebra& A, const MutationGraph& g, unsigned seed);
CheckResult check_order_fac_agreement(const BoundQuiverAlgebra& A, const MutationGraph& g);
CheckResult check_delta_pure_nonbranching(const SimplicialComplex& dc);
CheckResult check_euler(const BoundQuiverAlgebra& A, const SimplicialComplex& dc);
CheckResult check_sphere_homology(const SimplicialComplex& dc);
CheckResult check_shelling(const SimplicialComplex& dc, const MutationGraph& g);
CheckResult check_rank2(const SimplicialComplex& dc);
CheckResult check_cone_intersections(const BoundQuiverAlgebra& A, const MutationGraph& g);
CheckResult check_fan_coverage(const BoundQuiverAlgebra& A, const MutationGraph& g, int samples,
                               unsigned seed);
CheckResult check_order_cone_chain(const BoundQuiverAlgebra& A, const MutationGraph& g);

std::vector<CheckResult> finite_check_suite(const BoundQuiverAlgebra& A, const MutationGraph& g,
                                            int samples, unsigned seed);

struct RunReport {
  std::string algebra_name;
  int dim = 0;
  int n = 0;
  int nilpotency = 0;
  std::string verdict;
  int nodes = 0;
  int edges = 0;
  int ell = -1;
  int delta_vertices = -1;
  long delta_max_faces = -1;
  long delta_codim1 = -1;
  long euler = 0;
  std::string homology;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool all_pass() const;
};

RunReport run_report(const BoundQuiverAlgebra& A, const std::string& name, long budget,
                     int samples, unsigned seed);

std::string report_json(const RunReport& r);
std::string report_text(const RunReport& r);

}  // namespace tausilt
