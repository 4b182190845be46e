#include <random>

#include "doctest.h"
#include "tausilt/errors.hpp"
#include "tausilt/representation.hpp"
#include "tausilt/silting.hpp"
#include "tausilt/spec_io.hpp"

using namespace tausilt;

namespace {

BoundQuiverAlgebra a2() { return algebra_from_spec(bundled_example("a2-path")); }

TwoTermComplex arrow_complex(const BoundQuiverAlgebra& A) {
  return min_projective_presentation(A, simple_rep(A, 0));
}

}  // namespace

TEST_CASE("the stalks of A and A[1] are silting") {
  BoundQuiverAlgebra A = a2();
  std::mt19937_64 rng(1);
  CHECK(is_two_term_silting(A, stalk_silting(A).total(A), rng));
  CHECK(is_two_term_silting(A, shifted_stalk_silting(A).total(A), rng));
}

TEST_CASE("P1 + (P2 -> P1) is silting over A2") {
  BoundQuiverAlgebra A = a2();
  std::mt19937_64 rng(1);
  TwoTermComplex total = direct_sum(A, stalk_deg0(A, 0), arrow_complex(A));
  CHECK(is_two_term_silting(A, total, rng));
  SiltingObject s = make_silting(A, {stalk_deg0(A, 0), arrow_complex(A)});
  CHECK(s.key == "1,-1;1,0");
}

TEST_CASE("(P2 -> P1) + P2 is presilting-incompatible") {
  BoundQuiverAlgebra A = a2();
  TwoTermComplex total = direct_sum(A, arrow_complex(A), stalk_deg1(A, 1));
  // this one IS silting (the pentagon node); the bad one is with the plain stalk
  std::mt19937_64 rng(1);
  CHECK(is_two_term_silting(A, total, rng));
  TwoTermComplex bad = direct_sum(A, arrow_complex(A), stalk_deg0(A, 1));
  CHECK(!is_presilting(A, bad));
}

TEST_CASE("order: A is the maximum, A[1] the minimum") {
  BoundQuiverAlgebra A = a2();
  SiltingObject top = stalk_silting(A);
  SiltingObject bottom = shifted_stalk_silting(A);
  SiltingObject mid = make_silting(A, {stalk_deg0(A, 0), arrow_complex(A)});
  CHECK(order_geq(A, top, mid));
  CHECK(order_geq(A, top, bottom));
  CHECK(order_geq(A, mid, bottom));
  CHECK(!order_geq(A, bottom, mid));
  CHECK(!order_geq(A, mid, top));
  SiltingObject other = make_silting(A, {arrow_complex(A), stalk_deg1(A, 1)});
  CHECK(order_geq(A, mid, other));
  CHECK(!order_geq(A, other, mid));
}

TEST_CASE("mutation of the stalk silting over A2") {
  BoundQuiverAlgebra A = a2();
  SiltingObject top = stalk_silting(A);
  // summands sorted by g-vector: position 0 = P1 (g = (1,0) > (0,1)? lex
  // ascending puts (0,1) first), so find positions explicitly
  int pos_p1 = top.gvecs[0] == IntVec{1, 0} ? 0 : 1;
  int pos_p2 = 1 - pos_p1;
  // removing P1 keeps P2: the partner is P2 + P1[1]
  MutationResult at_p1 = mutate(A, top, pos_p1);
  CHECK(at_p1.object.key == "-1,0;0,1");
  // removing P2 keeps P1: the partner is P1 + (P2 -> P1)
  MutationResult at_p2 = mutate(A, top, pos_p2);
  CHECK(at_p2.object.key == "1,-1;1,0");
}

TEST_CASE("mutation is an involution on the pentagon") {
  BoundQuiverAlgebra A = a2();
  SiltingObject top = stalk_silting(A);
  for (int k = 0; k < top.size(); ++k) {
    MutationResult out = mutate(A, top, k);
    IntVec gY = g_vector(A, out.new_summand);
    int back = -1;
    for (int i = 0; i < out.object.size(); ++i)
      if (out.object.gvecs[i] == gY) back = i;
    REQUIRE(back >= 0);
    MutationResult round = mutate(A, out.object, back);
    CHECK(round.object.key == top.key);
  }
}

TEST_CASE("left approximation of P2 by P1 over A2 is the arrow") {
  BoundQuiverAlgebra A = a2();
  Approximation ap = minimal_left_approximation(A, stalk_deg0(A, 1), {stalk_deg0(A, 0)});
  CHECK(ap.target.deg0 == std::vector<int>{0});
  CHECK(ap.target.deg1.empty());
}

TEST_CASE("approximation by a summand-free target is zero") {
  BoundQuiverAlgebra A = a2();
  // no maps P1 -> P2
  Approximation ap = minimal_left_approximation(A, stalk_deg0(A, 0), {stalk_deg0(A, 1)});
  CHECK(ap.target.is_zero());
}

TEST_CASE("summand multiplicity and split_off") {
  BoundQuiverAlgebra A = a2();
  TwoTermComplex x = arrow_complex(A);
  TwoTermComplex y = stalk_deg0(A, 0);
  TwoTermComplex z = direct_sum(A, x, y);
  CHECK(summand_multiplicity(A, z, x) == 1);
  CHECK(summand_multiplicity(A, z, y) == 1);
  CHECK(summand_multiplicity(A, stalk_silting(A).total(A), stalk_deg0(A, 0)) == 1);
  CHECK(summand_multiplicity(A, stalk_silting(A).total(A), x) == 0);
  TwoTermComplex rem = split_off(A, z, x);
  CHECK(g_vector(A, rem) == g_vector(A, y));
  TwoTermComplex dbl = direct_sum(A, y, y);
  CHECK(summand_multiplicity(A, dbl, y) == 2);
}

TEST_CASE("complex isomorphism via g-vector and splitting") {
  BoundQuiverAlgebra A = a2();
  TwoTermComplex x = arrow_complex(A);
  CHECK(complexes_isomorphic(A, x, x));
  CHECK(!complexes_isomorphic(A, x, stalk_deg0(A, 0)));
  // scaled differential is isomorphic
  TwoTermComplex sx = x;
  for (auto& row : sx.d)
    for (auto& u : row)
      for (auto& e : u) e *= Rational(5);
  CHECK(complexes_isomorphic(A, x, sx));
}

TEST_CASE("bongartz completion over the pentagon") {
  BoundQuiverAlgebra A = a2();
  std::vector<SiltingObject> pool;
  pool.push_back(stalk_silting(A));
  pool.push_back(make_silting(A, {stalk_deg0(A, 0), arrow_complex(A)}));
  pool.push_back(make_silting(A, {arrow_complex(A), stalk_deg1(A, 1)}));
  pool.push_back(make_silting(A, {stalk_deg0(A, 1), stalk_deg1(A, 0)}));
  pool.push_back(shifted_stalk_silting(A));

  // U = A completes to A
  SiltingObject full = bongartz_complete(A, stalk_silting(A).gvecs, pool);
  CHECK(full.key == stalk_silting(A).key);
  // U = 0 completes to the maximum A
  SiltingObject zero = bongartz_complete(A, {}, pool);
  CHECK(zero.key == stalk_silting(A).key);
  // U = (P2 -> P1) completes to P1 + (P2 -> P1)
  SiltingObject arrow = bongartz_complete(A, {g_vector(A, arrow_complex(A))}, pool);
  CHECK(arrow.key == "1,-1;1,0");
  CHECK_THROWS_AS(bongartz_complete(A, {}, {}), EmptyPool);
}

TEST_CASE("silting count distinguishes decomposable presilting") {
  BoundQuiverAlgebra A = a2();
  std::mt19937_64 rng(3);
  // P1 alone is presilting but not silting (one summand, n = 2)
  CHECK(is_presilting(A, stalk_deg0(A, 0)));
  CHECK(!is_two_term_silting(A, stalk_deg0(A, 0), rng));
  CHECK(count_indec_summands_complex(A, stalk_silting(A).total(A), rng) == 2);
}
