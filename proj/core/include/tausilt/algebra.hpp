#pragma once

#include <map>
#include <string>
#include <vector>

#include "tausilt/matrix.hpp"

namespace tausilt {

struct Arrow {
  std::string name;
  int from = -1;
  int to = -1;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& name) const;
};

// A path is a composable word of arrow ids, read left to right: in the word
// {a, b} the arrow a is traversed first, so src(w) = from(a), tgt(w) = to(b).
using Word = std::vector<int>;

struct RelationTerm {
  Rational coeff;
  Word path;  // length >= 2 (admissibility)
};

// A relation is a vanishing linear combination of parallel paths.
using Relation = std::vector<RelationTerm>;

// Element of the algebra in coordinates over the residue-path basis.
using AlgElem = RatVec;

// The bound quiver algebra A = KQ/I. Basis elements are the normal residue
// paths: indices 0..n-1 are the vertex idempotents e_i, the rest are
// nontrivial normal words ordered by (length, lex). Conventions, fixed here
// and inherited by every module:
//   - paths compose left to right, modules are right modules, P_i = e_i A;
//   - e_i A e_j is spanned by the residue paths from i to j;
//   - Hom(P_i, P_j) = e_j A e_i acting by left multiplication, so its basis
//     consists of the residue paths from j to i.
class BoundQuiverAlgebra {
 public:
  static BoundQuiverAlgebra build(const Quiver& q, const std::vector<Relation>& rels,
                                  int max_len = 32, unsigned seed = 0);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int num_vertices() const { return static_cast<int>(quiver_.vertices.size()); }
  int dim() const { return static_cast<int>(words_.size()); }
  int nilpotency() const { return nilpotency_; }

  int word_src(int idx) const { return src_[idx]; }
  int word_tgt(int idx) const { return tgt_[idx]; }
  int word_len(int idx) const { return static_cast<int>(words_[idx].size()); }
  const Word& word(int idx) const { return words_[idx]; }
  std::string word_name(int idx) const;

  // Basis indices spanning Hom(P_i, P_j) = e_j A e_i.
  const std::vector<int>& hom_basis(int i, int j) const { return hom_[i][j]; }

  // Product of two basis elements, as coordinates; zero when not composable.
  const AlgElem& table(int i, int j) const { return table_[i][j]; }

  AlgElem mult(const AlgElem& u, const AlgElem& v) const;
  AlgElem elem_of_word(int idx) const;
  AlgElem zero_elem() const { return AlgElem(dim()); }

  // Inverse of u inside e_v A e_v; u must have nonzero e_v coefficient.
  AlgElem local_inverse(const AlgElem& u, int v) const;

  std::string elem_str(const AlgElem& u) const;

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Word> words_;
  std::vector<int> src_, tgt_;
  std::map<Word, int> word_index_;
  std::vector<std::vector<std::vector<int>>> hom_;
  std::vector<std::vector<AlgElem>> table_;
  int nilpotency_ = 0;
};

// Basis of the Jacobson radical of a multiplication-closed matrix algebra
// containing the identity, via the kernel of the trace bilinear form
// (a, b) -> tr(ab); valid in characteristic zero.
std::vector<RatMatrix> radical_of_endo(const std::vector<RatMatrix>& algebra_basis);

}  // namespace tausilt
