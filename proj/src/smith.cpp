#include <cstdlib>
#include <utility>

#include "clutchlab/errors.hpp"
#include "clutchlab/homotopy.hpp"

namespace clutchlab {

namespace {

using i64 = std::int64_t;

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw NumericalError("integer overflow in Smith normal form");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw NumericalError("integer overflow in Smith normal form");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw NumericalError("integer overflow in Smith normal form");
  return r;
}

IntMatrix eye(int n) {
  IntMatrix m(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, int dst, int src, i64 q) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = checked_sub(m[dst][j], checked_mul(q, m[src][j]));
}

void col_axpy(IntMatrix& m, int dst, int src, i64 q) {
  for (auto& row : m) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
}

void swap_cols(IntMatrix& m, int a, int b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<i64> SmithForm::diagonal() const {
  std::vector<i64> d;
  for (size_t i = 0; i < s.size() && i < (s.empty() ? 0 : s[0].size()); ++i) d.push_back(s[i][i]);
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m, int rows, int cols) {
  SmithForm f{m, eye(rows), eye(cols)};
  auto& s = f.s;
  s.resize(rows);
  for (auto& row : s)
    if (static_cast<int>(row.size()) != cols) throw DomainError("ragged integer matrix");

  const int diag = std::min(rows, cols);
  for (int t = 0; t < diag; ++t) {
    while (true) {
      int pr = -1, pc = -1;
      i64 best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (s[i][j] != 0 && (pr < 0 || std::llabs(s[i][j]) < best)) {
            best = std::llabs(s[i][j]);
            pr = i;
            pc = j;
          }
      if (pr < 0) return f;  // the remaining block is zero

      std::swap(s[t], s[pr]);
      std::swap(f.u[t], f.u[pr]);
      swap_cols(s, t, pc);
      swap_cols(f.v, t, pc);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        const i64 q = s[i][t] / s[t][t];
        if (q != 0) {
          row_axpy(s, i, t, q);
          row_axpy(f.u, i, t, q);
        }
        if (s[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        const i64 q = s[t][j] / s[t][t];
        if (q != 0) {
          col_axpy(s, j, t, q);
          col_axpy(f.v, j, t, q);
        }
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and reduce again.
      int bad_row = -1;
      for (int i = t + 1; i < rows && bad_row < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (s[i][j] % s[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      for (int j = 0; j < cols; ++j) s[t][j] = checked_add(s[t][j], s[bad_row][j]);
      for (int j = 0; j < rows; ++j) f.u[t][j] = checked_add(f.u[t][j], f.u[bad_row][j]);
    }
    if (s[t][t] < 0) {
      for (auto& v : s[t]) v = -v;
      for (auto& v : f.u[t]) v = -v;
    }
  }
  return f;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size();
  const size_t k = b.size();
  const size_t m = k == 0 ? 0 : b[0].size();
  IntMatrix c(n, std::vector<i64>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      for (size_t j = 0; j < m; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][l], b[l][j]));
  return c;
}

i64 determinant(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  IntMatrix a = m;
  i64 sign = 1;
  i64 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j])) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

FgAbelianGroup cokernel(const IntMatrix& m, int rows, int cols) {
  const auto snf = smith_normal_form(m, rows, cols);
  FgAbelianGroup out;
  int rank = 0;
  for (i64 d : snf.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = rows - rank;
  return out;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (i64 t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  return s;
}

}  // namespace clutchlab
