#include <set>

#include "doctest.h"
#include "tausilt/errors.hpp"
#include "tausilt/explorer.hpp"
#include "tausilt/spec_io.hpp"

using namespace tausilt;

TEST_CASE("the A2 pentagon") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a2-path"));
  MutationGraph g = explore(A, StartObject::Algebra, 100);
  CHECK(g.verdict == Verdict::Finite);
  CHECK(g.nodes.size() == 5);
  CHECK(g.edges.size() == 5);
  PathStats st = longest_path_stats(A, g);
  CHECK(st.ell == 3);
  CHECK(st.bound_ok);
  CHECK(st.bound == Int(1 + 2 + 4 + 8));
}

TEST_CASE("one simple: two nodes, one arrow") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("one-simple"));
  MutationGraph g = explore(A, StartObject::Algebra, 10);
  CHECK(g.verdict == Verdict::Finite);
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(longest_path_stats(A, g).ell == 1);
}

TEST_CASE("preprojective A2 has six nodes") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("preproj-a2"));
  MutationGraph g = explore(A, StartObject::Algebra, 100);
  CHECK(g.verdict == Verdict::Finite);
  CHECK(g.nodes.size() == 6);
}

TEST_CASE("exploration from A and A[1] agree on finite graphs") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a3-rel"));
  MutationGraph from_a = explore(A, StartObject::Algebra, 100);
  MutationGraph from_a1 = explore(A, StartObject::ShiftedAlgebra, 100);
  REQUIRE(from_a.verdict == Verdict::Finite);
  REQUIRE(from_a1.verdict == Verdict::Finite);
  std::set<std::string> keys_a, keys_a1;
  for (const SiltingObject& s : from_a.nodes) keys_a.insert(s.key);
  for (const SiltingObject& s : from_a1.nodes) keys_a1.insert(s.key);
  CHECK(keys_a == keys_a1);
}

TEST_CASE("budget exhaustion on the symmetric algebra") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("sym-local"));
  MutationGraph g = explore(A, StartObject::Algebra, 40);
  CHECK(g.verdict == Verdict::BudgetExhausted);
  CHECK(g.nodes.size() <= 40);
  CHECK(g.nodes.size() >= 30);
  CHECK_THROWS_AS(longest_path_stats(A, g), NotFinite);
}

TEST_CASE("determinism of exploration and DOT output") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a3-rel"));
  MutationGraph g1 = explore(A, StartObject::Algebra, 100);
  MutationGraph g2 = explore(A, StartObject::Algebra, 100);
  REQUIRE(g1.nodes.size() == g2.nodes.size());
  for (size_t i = 0; i < g1.nodes.size(); ++i) CHECK(g1.nodes[i].key == g2.nodes[i].key);
  CHECK(hasse_dot(A, g1) == hasse_dot(A, g2));
  CHECK(graph_json(A, g1) == graph_json(A, g2));
}

TEST_CASE("DOT output has the right arrow count on finite graphs") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a2-path"));
  MutationGraph g = explore(A, StartObject::Algebra, 100);
  std::string dot = hasse_dot(A, g);
  size_t arrows = 0;
  for (size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1))
    ++arrows;
  CHECK(arrows == g.edges.size());
  // n-regularity: arrow count = n |nodes| / 2
  CHECK(2 * g.edges.size() == static_cast<size_t>(A.num_vertices()) * g.nodes.size());
}

TEST_CASE("depth-capped exploration stops at the layer boundary") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a2-path"));
  MutationGraph g = explore(A, StartObject::Algebra, 100, 1);
  CHECK(g.verdict == Verdict::BudgetExhausted);
  CHECK(g.nodes.size() == 3);  // A and its two neighbours
  for (int d : g.depth) CHECK(d <= 1);
}
