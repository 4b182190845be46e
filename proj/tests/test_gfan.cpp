#include "doctest.h"
#include "tausilt/gfan.hpp"
#include "tausilt/representation.hpp"
#include "tausilt/spec_io.hpp"

using namespace tausilt;

namespace {

BoundQuiverAlgebra a2() { return algebra_from_spec(bundled_example("a2-path")); }

}  // namespace

TEST_CASE("membership in the positive orthant cone") {
  BoundQuiverAlgebra A = a2();
  Cone c = cone_of(A, stalk_silting(A));
  CHECK(membership(c, {Rational(1), Rational(1)}) == Membership::Inside);
  CHECK(membership(c, {Rational(1), Rational(0)}) == Membership::Boundary);
  CHECK(membership(c, {Rational(-1), Rational(0)}) == Membership::Outside);
}

TEST_CASE("cone feasibility solver") {
  IntMatrix V(2, 2);
  V.at(0, 0) = 1;
  V.at(1, 1) = 1;
  CHECK(in_cone_span(V, {Int(3), Int(4)}));
  CHECK(!in_cone_span(V, {Int(-1), Int(0)}));
  IntMatrix W(2, 1);
  W.at(0, 0) = 1;
  W.at(1, 0) = 1;
  CHECK(in_cone_span(W, {Int(2), Int(2)}));
  CHECK(!in_cone_span(W, {Int(2), Int(1)}));
}

TEST_CASE("self intersection is the cone itself") {
  BoundQuiverAlgebra A = a2();
  SiltingObject top = stalk_silting(A);
  ConeIntersectionReport rep = cone_intersection_check(A, top, top);
  CHECK(rep.ok);
  CHECK(rep.extreme_rays.size() == 2);
}

TEST_CASE("adjacent pentagon cones share a ray") {
  BoundQuiverAlgebra A = a2();
  SiltingObject top = stalk_silting(A);
  TwoTermComplex arrow = min_projective_presentation(A, simple_rep(A, 0));
  SiltingObject mid = make_silting(A, {stalk_deg0(A, 0), arrow});
  ConeIntersectionReport rep = cone_intersection_check(A, top, mid);
  CHECK(rep.ok);
  REQUIRE(rep.extreme_rays.size() == 1);
  CHECK(rep.extreme_rays[0] == IntVec{1, 0});
}

TEST_CASE("opposite orthants meet only at zero") {
  BoundQuiverAlgebra A = a2();
  ConeIntersectionReport rep =
      cone_intersection_check(A, stalk_silting(A), shifted_stalk_silting(A));
  CHECK(rep.ok);
  CHECK(rep.extreme_rays.empty());
  CHECK(rep.common_gens.empty());
}

TEST_CASE("full fan coverage for A2") {
  BoundQuiverAlgebra A = a2();
  MutationGraph g = explore(A, StartObject::Algebra, 100);
  CoverageReport rep = fan_coverage_sample(A, g, 1000, 0);
  CHECK(rep.ok);
}

TEST_CASE("order cone probe basics") {
  BoundQuiverAlgebra A = a2();
  SiltingObject top = stalk_silting(A);
  SiltingObject bottom = shifted_stalk_silting(A);
  OrderConeProbe self = order_cone_probe(A, top, top);
  CHECK(self.cond2);
  CHECK(self.cond3);
  CHECK(self.cond6);
  CHECK(self.chain_ok);
  OrderConeProbe down = order_cone_probe(A, top, bottom);
  CHECK(down.cond2);
  CHECK(down.cond3);
  CHECK(down.chain_ok);
  OrderConeProbe up = order_cone_probe(A, bottom, top);
  CHECK(!up.cond3);
  CHECK(!up.cond2);
  CHECK(up.chain_ok);
}

TEST_CASE("exhaustive probe over the pentagon finds no violations") {
  BoundQuiverAlgebra A = a2();
  MutationGraph g = explore(A, StartObject::Algebra, 100);
  REQUIRE(g.nodes.size() == 5);
  for (const SiltingObject& M : g.nodes)
    for (const SiltingObject& N : g.nodes) {
      OrderConeProbe probe = order_cone_probe(A, M, N);
      CHECK(probe.chain_ok);
    }
}

TEST_CASE("facet representation consistency") {
  BoundQuiverAlgebra A = a2();
  MutationGraph g = explore(A, StartObject::Algebra, 100);
  for (const SiltingObject& node : g.nodes) {
    Cone c = cone_of(A, node);
    IntMatrix prod = c.normals * c.gens;
    CHECK(prod == IntMatrix::identity(A.num_vertices()));
  }
}

TEST_CASE("OFF cross-section for three simples") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a3-rel"));
  MutationGraph g = explore(A, StartObject::Algebra, 100);
  std::string off = off_cross_section(A, g);
  CHECK(off.substr(0, 4) == "OFF\n");
  CHECK(off.find("8 12 0") != std::string::npos);
}
