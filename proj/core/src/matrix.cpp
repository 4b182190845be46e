#include "tausilt/matrix.hpp"

#include <cassert>

#include "tausilt/errors.hpp"

namespace tausilt {

Rational parse_rational(const std::string& text) {
  std::string t = text;
  if (t.empty()) throw ParseError("empty rational literal");
  try {
    Rational q(t);
    q.canonicalize();
    if (sgn(q.get_den()) <= 0) throw ParseError("nonpositive denominator in '" + text + "'");
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  assert(cols_ == other.rows_);
  RatMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        if (sgn(other.at(k, j)) == 0) continue;
        out.at(i, j) += a * other.at(k, j);
      }
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  RatMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + other.at(i, j);
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  RatMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - other.at(i, j);
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  return a_ == other.a_;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  RatVec out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn(at(i, j)) != 0 && sgn(v[j]) != 0) out[i] += at(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

RatMatrix rref(const RatMatrix& m, std::vector<int>* pivots) {
  RatMatrix a = m;
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < a.rows(); ++r)
      if (!is_zero(a.at(r, col))) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(row, c));
    Rational inv = 1 / a.at(row, col);
    for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a.at(r, col))) continue;
      Rational f = a.at(r, col);
      for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = piv;
  return a;
}

int rank(const RatMatrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  std::vector<int> piv;
  RatMatrix r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(static_cast<int>(i), f);
    // normalize so the first nonzero coordinate is positive
    for (const Rational& x : v) {
      if (sgn(x) == 0) continue;
      if (sgn(x) < 0)
        for (Rational& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const RatMatrix& m, const RatVec& b) {
  assert(static_cast<int>(b.size()) == m.rows());
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> piv;
  RatMatrix r = rref(aug, &piv);
  SolveResult out;
  for (int c : piv)
    if (c == m.cols()) return out;  // inconsistent
  out.solvable = true;
  out.particular.assign(m.cols(), Rational(0));
  for (size_t i = 0; i < piv.size(); ++i) out.particular[piv[i]] = r.at(static_cast<int>(i), m.cols());
  out.kernel = kernel_basis(m);
  return out;
}

std::vector<int> complement_by_standard_basis(const RatMatrix& m) {
  int n = m.rows();
  RatMatrix work(n, m.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.cols(); ++j) work.at(i, j) = m.at(i, j);
  int base_rank = rank(work);
  std::vector<int> chosen;
  RatMatrix cur = work;
  int cur_rank = base_rank;
  for (int e = 0; e < n && cur_rank < n; ++e) {
    RatMatrix trial(n, cur.cols() + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < cur.cols(); ++j) trial.at(i, j) = cur.at(i, j);
    trial.at(e, cur.cols()) = 1;
    int r = rank(trial);
    if (r > cur_rank) {
      chosen.push_back(e);
      cur = trial;
      cur_rank = r;
    }
  }
  return chosen;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  assert(cols_ == other.rows_);
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  return a_ == other.a_;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = Rational(at(i, j));
  return out;
}

Int det(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  if (n == 0) return Int(1);
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      int sel = -1;
      for (int r = k + 1; r < n; ++r)
        if (sgn(a.at(r, k)) != 0) {
          sel = r;
          break;
        }
      if (sel < 0) return Int(0);
      for (int c = 0; c < n; ++c) std::swap(a.at(sel, c), a.at(k, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact division
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix int_inverse(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  Int d = det(m);
  if (d != 1 && d != -1)
    throw NotUnimodular("determinant " + d.get_str() + " is not a unit");
  int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = Rational(m.at(i, j));
    aug.at(i, n + i) = 1;
  }
  RatMatrix r = rref(aug);
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& q = r.at(i, n + j);
      assert(q.get_den() == 1);
      inv.at(i, j) = q.get_num();
    }
  return inv;
}

}  // namespace tausilt
