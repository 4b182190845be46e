#include "doctest.h"
#include "tausilt/delta.hpp"
#include "tausilt/spec_io.hpp"

using namespace tausilt;

namespace {

SimplicialComplex delta_of(const std::string& name, MutationGraph* graph_out = nullptr) {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example(name));
  MutationGraph g = explore(A, StartObject::Algebra, 1000);
  SimplicialComplex dc = build_delta(A, g);
  if (graph_out) *graph_out = g;
  return dc;
}

}  // namespace

TEST_CASE("pentagon complex of A2") {
  SimplicialComplex dc = delta_of("a2-path");
  CHECK(dc.n == 2);
  CHECK(dc.vertex_g.size() == 5);
  CHECK(dc.max_faces.size() == 5);
  CHECK(check_pure_nonbranching(dc).ok);
  HomologyReport hom = euler_and_homology(dc);
  CHECK(hom.euler == 0);
  CHECK(hom.reduced_ranks == std::vector<long>{0, 1});
  CHECK(hom.is_sphere);
}

TEST_CASE("two points for the one-simple algebra") {
  SimplicialComplex dc = delta_of("one-simple");
  CHECK(dc.n == 1);
  CHECK(dc.vertex_g.size() == 2);
  CHECK(dc.max_faces.size() == 2);
  HomologyReport hom = euler_and_homology(dc);
  CHECK(hom.euler == 2);
  CHECK(hom.reduced_ranks == std::vector<long>{1});
  CHECK(hom.is_sphere);  // S^0
}

TEST_CASE("a3 relation algebra gives a 2-sphere") {
  MutationGraph g;
  SimplicialComplex dc = delta_of("a3-rel", &g);
  CHECK(dc.n == 3);
  CHECK(dc.vertex_g.size() == 8);
  CHECK(dc.max_faces.size() == 12);
  CHECK(check_pure_nonbranching(dc).ok);
  HomologyReport hom = euler_and_homology(dc);
  CHECK(hom.euler == 2);
  CHECK(hom.reduced_ranks == std::vector<long>{0, 0, 1});
  for (const auto& t : hom.torsion) CHECK(t.empty());
  CHECK(hom.is_sphere);
}

TEST_CASE("deleting a max face breaks the pseudomanifold condition") {
  SimplicialComplex dc = delta_of("a2-path");
  dc.max_faces.pop_back();
  CHECK(!check_pure_nonbranching(dc).ok);
}

TEST_CASE("shelling succeeds via the order-derived linear extension") {
  MutationGraph g2;
  SimplicialComplex dc2 = delta_of("a2-path", &g2);
  ShellingReport rep2 = shelling_from_order(dc2, g2);
  CHECK(rep2.ok);

  MutationGraph g3;
  SimplicialComplex dc3 = delta_of("a3-rel", &g3);
  ShellingReport rep3 = shelling_from_order(dc3, g3);
  CHECK(rep3.ok);
}

TEST_CASE("an order isolating an edge fails shelling") {
  MutationGraph g;
  SimplicialComplex dc = delta_of("a2-path", &g);
  // the pentagon's max faces are edges; pick an order where the second face
  // shares no vertex with the first
  std::vector<int> order(dc.max_faces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  bool found = false;
  for (size_t i = 1; i < order.size() && !found; ++i) {
    std::vector<int> inter;
    std::set_intersection(dc.max_faces[0].begin(), dc.max_faces[0].end(),
                          dc.max_faces[i].begin(), dc.max_faces[i].end(),
                          std::back_inserter(inter));
    if (inter.empty()) {
      std::swap(order[1], order[i]);
      found = true;
    }
  }
  REQUIRE(found);
  CHECK(!verify_shelling(dc, order).ok);
}

TEST_CASE("rank-2 cycle spanning") {
  SimplicialComplex dc2 = delta_of("a2-path");
  Rank2Report rep2 = rank2_cycle_check(dc2);
  CHECK(rep2.ok);
  CHECK(rep2.cycle_rank == 1);  // pentagon dual is a 5-cycle

  SimplicialComplex dc3 = delta_of("a3-rel");
  Rank2Report rep3 = rank2_cycle_check(dc3);
  CHECK(rep3.ok);
  CHECK(rep3.cycle_rank == 18 - 12 + 1);

  SimplicialComplex dc1 = delta_of("one-simple");
  Rank2Report rep1 = rank2_cycle_check(dc1);
  CHECK(rep1.ok);
  CHECK(rep1.cycle_rank == 0);
}

TEST_CASE("dual graph structure of the a3 sphere") {
  SimplicialComplex dc = delta_of("a3-rel");
  DualGraphWithPolygons d = dual_graph(dc);
  CHECK(d.connected);
  CHECK(d.polygons_closed);
  CHECK(d.edges.size() == 18);
  CHECK(d.polygons.size() == 8);  // one polygon per vertex
}
