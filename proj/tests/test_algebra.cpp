#include "doctest.h"
#include "tausilt/algebra.hpp"
#include "tausilt/errors.hpp"
#include "tausilt/spec_io.hpp"

using namespace tausilt;

TEST_CASE("path algebra of 1 -> 2") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a2-path"));
  CHECK(A.dim() == 3);
  CHECK(A.nilpotency() == 2);
  CHECK(A.hom_basis(0, 0).size() == 1);  // e_1
  CHECK(A.hom_basis(1, 0).size() == 1);  // Hom(P_2, P_1): the arrow
  CHECK(A.hom_basis(0, 1).size() == 0);  // Hom(P_1, P_2) = 0
}

TEST_CASE("a3 with one zero relation has dimension 5") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a3-rel"));
  CHECK(A.dim() == 5);
  // basis: e1, e2, e3, x, y
  CHECK(A.nilpotency() == 2);
  CHECK(A.hom_basis(1, 0).size() == 1);  // Hom(P_2, P_1) spanned by x
  CHECK(A.hom_basis(2, 1).size() == 1);  // Hom(P_3, P_2) spanned by y
  CHECK(A.hom_basis(2, 0).size() == 0);  // xy = 0 kills Hom(P_3, P_1)
  CHECK(A.hom_basis(0, 1).size() == 0);
}

TEST_CASE("symmetric two-vertex algebra has dimension 8") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("sym-local"));
  CHECK(A.dim() == 8);
  CHECK(A.nilpotency() == 3);
  // each projective is 4-dimensional: e, two arrows, one socle path
  CHECK(A.hom_basis(0, 0).size() == 2);
  CHECK(A.hom_basis(1, 1).size() == 2);
  CHECK(A.hom_basis(0, 1).size() == 2);
  CHECK(A.hom_basis(1, 0).size() == 2);
}

TEST_CASE("preprojective A2 has dimension 4") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("preproj-a2"));
  CHECK(A.dim() == 4);
  CHECK(A.nilpotency() == 2);
}

TEST_CASE("one simple vertex is the ground field") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("one-simple"));
  CHECK(A.dim() == 1);
  CHECK(A.num_vertices() == 1);
}

TEST_CASE("jacobian algebra of the cyclic quiver with potential is finite dimensional") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("jacobian-b"));
  CHECK(A.num_vertices() == 3);
  CHECK(A.dim() > 3);
  // inhomogeneous relations hold in the table: x1 x2 equals the length-5 word
  const Quiver& q = A.quiver();
  int x1 = q.arrow_index("x1"), x2 = q.arrow_index("x2");
  REQUIRE(x1 >= 0);
  // find the words as basis elements or reductions: multiply e-elements
  AlgElem ax1 = A.zero_elem(), ax2 = A.zero_elem();
  for (int w = 0; w < A.dim(); ++w) {
    if (A.word_len(w) == 1 && A.word(w)[0] == x1) ax1 = A.elem_of_word(w);
    if (A.word_len(w) == 1 && A.word(w)[0] == x2) ax2 = A.elem_of_word(w);
  }
  AlgElem sq = A.mult(ax1, ax2);
  bool nonzero = false;
  for (int k = 0; k < A.dim(); ++k) nonzero = nonzero || !is_zero(sq[k]);
  CHECK(nonzero);  // x^2 = yxyxy is nonzero in B
}

TEST_CASE("dimension equals the sum of hom space dimensions") {
  for (const std::string& name : {"a2-path", "a3-rel", "sym-local", "preproj-a2"}) {
    BoundQuiverAlgebra A = algebra_from_spec(bundled_example(name));
    int total = 0;
    for (int i = 0; i < A.num_vertices(); ++i)
      for (int j = 0; j < A.num_vertices(); ++j)
        total += static_cast<int>(A.hom_basis(i, j).size());
    CHECK(total == A.dim());
  }
}

TEST_CASE("basis paths of positive length are nilpotent") {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("sym-local"));
  for (int w = 0; w < A.dim(); ++w) {
    if (A.word_len(w) == 0) continue;
    AlgElem acc = A.elem_of_word(w);
    bool vanished = false;
    for (int k = 0; k < A.nilpotency() + 1 && !vanished; ++k) {
      acc = A.mult(acc, A.elem_of_word(w));
      vanished = true;
      for (int i = 0; i < A.dim(); ++i) vanished = vanished && is_zero(acc[i]);
    }
    CHECK(vanished);
  }
}

TEST_CASE("non-admissible relations are rejected") {
  // loop with x^2 = x^3: x^2 becomes a nontrivial idempotent, so the arrow
  // ideal is not nilpotent and the ideal is not admissible
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  Relation rel{{Rational(1), {0, 0}}, {Rational(-1), {0, 0, 0}}};
  CHECK_THROWS_AS(BoundQuiverAlgebra::build(q, {rel}, 16), NotFiniteDimensional);
}

TEST_CASE("radical of endo algebras via the trace form") {
  // 1-dimensional algebra: radical 0
  {
    std::vector<RatMatrix> basis{RatMatrix::identity(1)};
    CHECK(radical_of_endo(basis).empty());
  }
  // upper triangular 2x2: radical is the strictly upper part
  {
    RatMatrix e11(2, 2), e22(2, 2), e12(2, 2);
    e11.at(0, 0) = 1;
    e22.at(1, 1) = 1;
    e12.at(0, 1) = 1;
    std::vector<RatMatrix> basis{e11, e22, e12};
    auto rad = radical_of_endo(basis);
    REQUIRE(rad.size() == 1);
    CHECK(rad[0].at(0, 1) != Rational(0));
    CHECK(rad[0].at(0, 0) == Rational(0));
    CHECK(rad[0].at(1, 1) == Rational(0));
    CHECK(rad[0].at(1, 0) == Rational(0));
  }
  // full 2x2 matrix algebra: semisimple
  {
    std::vector<RatMatrix> basis;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        RatMatrix e(2, 2);
        e.at(i, j) = 1;
        basis.push_back(e);
      }
    CHECK(radical_of_endo(basis).empty());
  }
}
