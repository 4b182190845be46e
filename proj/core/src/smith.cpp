#include <cassert>
#include <cstdlib>

#include "tausilt/matrix.hpp"

namespace tausilt {

namespace {

void swap_rows(IntMatrix& a, IntMatrix& u, int r1, int r2) {
  for (int c = 0; c < a.cols(); ++c) std::swap(a.at(r1, c), a.at(r2, c));
  for (int c = 0; c < u.cols(); ++c) std::swap(u.at(r1, c), u.at(r2, c));
}

void swap_cols(IntMatrix& a, IntMatrix& v, int c1, int c2) {
  for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, c1), a.at(r, c2));
  for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, c1), v.at(r, c2));
}

// row r1 += f * row r2
void add_row(IntMatrix& a, IntMatrix& u, int r1, int r2, const Int& f) {
  for (int c = 0; c < a.cols(); ++c) a.at(r1, c) += f * a.at(r2, c);
  for (int c = 0; c < u.cols(); ++c) u.at(r1, c) += f * u.at(r2, c);
}

void add_col(IntMatrix& a, IntMatrix& v, int c1, int c2, const Int& f) {
  for (int r = 0; r < a.rows(); ++r) a.at(r, c1) += f * a.at(r, c2);
  for (int r = 0; r < v.rows(); ++r) v.at(r, c1) += f * v.at(r, c2);
}

void negate_row(IntMatrix& a, IntMatrix& u, int r) {
  for (int c = 0; c < a.cols(); ++c) a.at(r, c) = -a.at(r, c);
  for (int c = 0; c < u.cols(); ++c) u.at(r, c) = -u.at(r, c);
}

// Smallest nonzero |entry| in the trailing block starting at (t, t);
// ties broken by row then column for determinism.
bool find_pivot(const IntMatrix& a, int t, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int r = t; r < a.rows(); ++r)
    for (int c = t; c < a.cols(); ++c) {
      if (sgn(a.at(r, c)) == 0) continue;
      Int v = abs(a.at(r, c));
      if (!found || v < best) {
        found = true;
        best = v;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  int t = 0;
  int limit = std::min(m.rows(), m.cols());
  while (t < limit) {
    int pr, pc;
    if (!find_pivot(a, t, pr, pc)) break;
    swap_rows(a, u, t, pr);
    swap_cols(a, v, t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < a.rows(); ++r) {
        if (sgn(a.at(r, t)) == 0) continue;
        Int q = a.at(r, t) / a.at(t, t);  // truncated division
        add_row(a, u, r, t, -q);
        if (sgn(a.at(r, t)) != 0) {
          swap_rows(a, u, t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < a.cols(); ++c) {
        if (sgn(a.at(t, c)) == 0) continue;
        Int q = a.at(t, c) / a.at(t, t);
        add_col(a, v, c, t, -q);
        if (sgn(a.at(t, c)) != 0) {
          swap_cols(a, v, t, c);
          clean = false;
        }
      }
      if (clean) {
        // Pivot must divide every entry of the trailing block.
        for (int r = t + 1; r < a.rows() && clean; ++r)
          for (int c = t + 1; c < a.cols() && clean; ++c)
            if (sgn(a.at(r, c) % a.at(t, t)) != 0) {
              add_row(a, u, t, r, Int(1));
              clean = false;
            }
      }
    }
    if (sgn(a.at(t, t)) < 0) negate_row(a, u, t);
    ++t;
  }
  return SmithResult{u, a, v};
}

}  // namespace tausilt
