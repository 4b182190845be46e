#pragma once

#include <optional>
#include <vector>

#include "tausilt/rational.hpp"

namespace tausilt {

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Int>;

// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const;

  RatVec apply(const RatVec& v) const;  // matrix * column vector
  RatMatrix transpose() const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Reduced row echelon form with deterministic pivoting (leftmost nonzero
// column, first available row). Returns pivot columns through `pivots`.
RatMatrix rref(const RatMatrix& m, std::vector<int>* pivots = nullptr);

int rank(const RatMatrix& m);

// Echelon-normalized basis of the right null space {v : m v = 0}, one vector
// per free column, ordered by free column index.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

struct SolveResult {
  bool solvable = false;
  RatVec particular;             // empty unless solvable
  std::vector<RatVec> kernel;    // kernel basis of m
};

// One particular solution of m x = b (free variables set to zero) plus the
// kernel basis, or solvable = false.
SolveResult solve(const RatMatrix& m, const RatVec& b);

// Extends the column span of `m` to the full space by standard basis vectors,
// chosen greedily in index order. Returns the indices of the chosen standard
// vectors.
std::vector<int> complement_by_standard_basis(const RatMatrix& m);

// Dense matrix over the integers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const;

  RatMatrix to_rational() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

Int det(const IntMatrix& m);  // fraction-free Bareiss

// Exact inverse of a unimodular integer matrix; throws NotUnimodular when
// |det| != 1.
IntMatrix int_inverse(const IntMatrix& m);

struct SmithResult {
  IntMatrix U, D, V;  // U * m * V = D
};

// Smith normal form: U, V unimodular, D diagonal with nonnegative entries and
// d_i | d_{i+1}.
SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace tausilt
