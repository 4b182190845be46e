#include <random>

#include "doctest.h"
#include "tausilt/representation.hpp"
#include "tausilt/spec_io.hpp"

using namespace tausilt;

namespace {

BoundQuiverAlgebra a2() { return algebra_from_spec(bundled_example("a2-path")); }
BoundQuiverAlgebra a3() { return algebra_from_spec(bundled_example("a3-rel")); }

bool same_dims(const Representation& m, std::vector<int> dims) { return m.dims == dims; }

}  // namespace

TEST_CASE("projective representations of A2") {
  BoundQuiverAlgebra A = a2();
  Representation p1 = projective_rep(A, 0);
  Representation p2 = projective_rep(A, 1);
  CHECK(same_dims(p1, {1, 1}));
  CHECK(same_dims(p2, {0, 1}));
  CHECK(rep_satisfies_relations(A, p1));
}

TEST_CASE("hom spaces of A2 representations") {
  BoundQuiverAlgebra A = a2();
  Representation p1 = projective_rep(A, 0);
  Representation s1 = simple_rep(A, 0);
  Representation s2 = simple_rep(A, 1);
  CHECK(hom_rep(A, s1, s2).empty());
  CHECK(hom_rep(A, p1, s1).size() == 1);
  CHECK(hom_rep(A, p1, p1).size() == 1);  // End(P1) = K
}

TEST_CASE("hom contains the identity") {
  BoundQuiverAlgebra A = a3();
  Representation m = direct_sum_rep(A, projective_rep(A, 0), simple_rep(A, 1));
  auto homs = hom_rep(A, m, m);
  // identity is some combination; check dimension is at least 2 and that the
  // trace of M in M is everything
  CHECK(homs.size() >= 2);
  CHECK(fac_contains(A, m, m));
}

TEST_CASE("minimal projective presentations over A2") {
  BoundQuiverAlgebra A = a2();
  // projective module: 0 -> P_i
  TwoTermComplex cp = min_projective_presentation(A, projective_rep(A, 0));
  CHECK(cp.deg1.empty());
  CHECK(cp.deg0 == std::vector<int>{0});
  // S1: P2 -> P1
  TwoTermComplex cs = min_projective_presentation(A, simple_rep(A, 0));
  CHECK(cs.deg1 == std::vector<int>{1});
  CHECK(cs.deg0 == std::vector<int>{0});
  CHECK(is_minimal(A, cs));
}

TEST_CASE("minimal projective presentation of S2 over the a3 relation algebra") {
  BoundQuiverAlgebra A = a3();
  TwoTermComplex c = min_projective_presentation(A, simple_rep(A, 1));
  CHECK(c.deg1 == std::vector<int>{2});  // P3
  CHECK(c.deg0 == std::vector<int>{1});  // P2
}

TEST_CASE("tau over A2 and the a3 relation algebra") {
  BoundQuiverAlgebra A = a2();
  CHECK(tau(A, projective_rep(A, 0)).is_zero());
  CHECK(tau(A, projective_rep(A, 1)).is_zero());
  Representation t = tau(A, simple_rep(A, 0));
  CHECK(same_dims(t, {0, 1}));  // tau S1 = S2

  BoundQuiverAlgebra B = a3();
  Representation t1 = tau(B, simple_rep(B, 0));
  CHECK(same_dims(t1, {0, 1, 0}));  // tau S1 = S2
  Representation t2 = tau(B, simple_rep(B, 1));
  CHECK(same_dims(t2, {0, 0, 1}));  // tau S2 = S3
}

TEST_CASE("tau commutes with direct sums on samples") {
  BoundQuiverAlgebra A = a3();
  Representation m = simple_rep(A, 0);
  Representation n = simple_rep(A, 1);
  Representation lhs = tau(A, direct_sum_rep(A, m, n));
  Representation rhs = direct_sum_rep(A, tau(A, m), tau(A, n));
  CHECK(lhs.dims == rhs.dims);
}

TEST_CASE("tau-rigid pairs over A2") {
  BoundQuiverAlgebra A = a2();
  Representation whole = algebra_as_module(A);
  CHECK(is_tau_rigid_pair(A, whole, {}).ok);
  CHECK(is_tau_rigid_pair(A, simple_rep(A, 0), {1}).ok);
  Representation bad = direct_sum_rep(A, simple_rep(A, 1), simple_rep(A, 0));
  TauRigidResult res = is_tau_rigid_pair(A, bad, {});
  CHECK(!res.ok);
  CHECK(!res.certificate.empty());
}

TEST_CASE("fac membership") {
  BoundQuiverAlgebra A = a2();
  Representation whole = algebra_as_module(A);
  CHECK(fac_contains(A, whole, simple_rep(A, 0)));
  CHECK(fac_contains(A, whole, projective_rep(A, 0)));
  CHECK(!fac_contains(A, simple_rep(A, 0), simple_rep(A, 1)));
  CHECK(fac_contains(A, simple_rep(A, 0), zero_rep(A)));
}

TEST_CASE("trace idempotence: fac_contains is stable under recomputation") {
  BoundQuiverAlgebra A = a3();
  Representation m = projective_rep(A, 0);
  Representation n = simple_rep(A, 0);
  bool first = fac_contains(A, m, n);
  bool second = fac_contains(A, m, n);
  CHECK(first == second);
}

TEST_CASE("h0 of stalk complexes") {
  BoundQuiverAlgebra A = a2();
  TwoTermComplex stalk;
  stalk.deg0 = {0, 1};
  stalk.d = {};
  H0Pair pair = h0_pair(A, stalk);
  CHECK(pair.support.empty());
  CHECK(pair.module.dims == algebra_as_module(A).dims);

  TwoTermComplex shift;
  shift.deg1 = {0, 1};
  H0Pair pair2 = h0_pair(A, shift);
  CHECK(pair2.module.is_zero());
  CHECK(pair2.support == std::vector<int>{0, 1});
}

TEST_CASE("h0 of the S1 presentation plus P2[1] is the support pair (S1, P2)") {
  BoundQuiverAlgebra A = a2();
  TwoTermComplex pres = min_projective_presentation(A, simple_rep(A, 0));
  TwoTermComplex shifted = stalk_deg1(A, 1);
  TwoTermComplex total = direct_sum(A, pres, shifted);
  H0Pair pair = h0_pair(A, total);
  CHECK(pair.module.dims == std::vector<int>{1, 0});
  CHECK(pair.support == std::vector<int>{1});
  CHECK(is_tau_rigid_pair(A, pair.module, pair.support).ok);
}

TEST_CASE("count of pairwise non-isomorphic summands") {
  BoundQuiverAlgebra A = a2();
  std::mt19937_64 rng(7);
  Representation p1 = projective_rep(A, 0);
  CHECK(count_indec_summands(A, direct_sum_rep(A, p1, p1), rng) == 1);
  CHECK(count_indec_summands(A, algebra_as_module(A), rng) == 2);
  CHECK(count_indec_summands(A, direct_sum_rep(A, p1, simple_rep(A, 0)), rng) == 2);
  CHECK(count_indec_summands(A, zero_rep(A), rng) == 0);
}
