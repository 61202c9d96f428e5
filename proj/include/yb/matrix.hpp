#pragma once

// Dense matrix over an arbitrary coefficient ring T, with tensor-factor
// metadata and optional basis labels. Action convention is column-action:
// e_j -> sum_i e_i M(i,j), matching the convention that lower indices
// enumerate rows.

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "yb/poly.hpp"

namespace yb {

template <class T>
class Matrix {
 public:
  int rows = 0, cols = 0;
  std::vector<T> data;                 // row-major
  std::vector<int> row_factors;       // tensor factor dims (product == rows)
  std::vector<int> col_factors;       // tensor factor dims (product == cols)
  std::vector<std::string> row_labels;  // optional basis labels
  std::vector<std::string> col_labels;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {
    row_factors = {r};
    col_factors = {c};
  }

  T& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n, const T& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data) x = -x;
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_shape(a, b);
    Matrix r = a;
    for (size_t k = 0; k < r.data.size(); ++k) r.data[k] = r.data[k] + b.data[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_shape(a, b);
    Matrix r = a;
    for (size_t k = 0; k < r.data.size(); ++k) r.data[k] = r.data[k] - b.data[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows, b.cols);
    r.row_factors = a.row_factors;
    r.col_factors = b.col_factors;
    for (int i = 0; i < a.rows; ++i)
      for (int k = 0; k < a.cols; ++k) {
        const T& aik = a(i, k);
        if (is_zero_elem(aik)) continue;
        for (int j = 0; j < b.cols; ++j) {
          if (is_zero_elem(b(k, j))) continue;
          r(i, j) = r(i, j) + aik * b(k, j);
        }
      }
    return r;
  }
  template <class S>
  Matrix scaled(const S& s) const {
    Matrix r = *this;
    for (auto& x : r.data) x = x * s;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (size_t k = 0; k < a.data.size(); ++k)
      if (!(a.data[k] == b.data[k])) return false;
    return true;
  }

  bool is_zero() const {
    for (auto& x : data)
      if (!is_zero_elem(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix r(cols, rows);
    r.row_factors = col_factors;
    r.col_factors = row_factors;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  template <class U>
  Matrix<U> map(const std::function<U(const T&)>& f) const {
    Matrix<U> r(rows, cols);
    r.row_factors = row_factors;
    r.col_factors = col_factors;
    r.row_labels = row_labels;
    r.col_labels = col_labels;
    for (size_t k = 0; k < data.size(); ++k) r.data[k] = f(data[k]);
    return r;
  }

 private:
  static void check_shape(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
      throw std::invalid_argument("Matrix: shape mismatch");
  }
  static bool is_zero_elem(const T& x) { return x == T{}; }
};

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows * b.rows, a.cols * b.cols);
  r.row_factors.clear();
  r.col_factors.clear();
  for (int d : a.row_factors) r.row_factors.push_back(d);
  for (int d : b.row_factors) r.row_factors.push_back(d);
  for (int d : a.col_factors) r.col_factors.push_back(d);
  for (int d : b.col_factors) r.col_factors.push_back(d);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          r(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
  return r;
}

// P: V1 (x) V2 -> V2 (x) V1, P(v (x) w) = w (x) v.
template <class T>
Matrix<T> braid_permutation(int d1, int d2, const T& one) {
  Matrix<T> p(d1 * d2, d1 * d2);
  p.col_factors = {d1, d2};
  p.row_factors = {d2, d1};
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) p(j * d1 + i, i * d2 + j) = one;
  return p;
}

namespace detail {
inline void permutations_rec(std::vector<int>& cur, std::vector<bool>& used,
                             std::vector<std::vector<int>>& out) {
  size_t n = used.size();
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (size_t k = 0; k < n; ++k) {
    if (used[k]) continue;
    used[k] = true;
    cur.push_back(static_cast<int>(k));
    permutations_rec(cur, used, out);
    cur.pop_back();
    used[k] = false;
  }
}
}  // namespace detail

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  detail::permutations_rec(cur, used, out);
  return out;
}

// Matrix of the permutation pi acting on (C^d)^{(x) n}:
// e_{i_1} (x) ... (x) e_{i_n} -> e_{i_{pi^-1(1)}} (x) ... — concretely we send
// basis tensor with multi-index w to the tensor whose slot pi(k) holds w_k.
inline Matrix<ExactScalar> tensor_permutation(const std::vector<int>& pi, int d) {
  int n = static_cast<int>(pi.size());
  int dim = 1;
  for (int k = 0; k < n; ++k) dim *= d;
  Matrix<ExactScalar> m(dim, dim);
  m.row_factors.assign(n, d);
  m.col_factors.assign(n, d);
  std::vector<int> w(n);
  for (int col = 0; col < dim; ++col) {
    int c = col;
    for (int k = n - 1; k >= 0; --k) {
      w[k] = c % d;
      c /= d;
    }
    int row = 0;
    std::vector<int> v(n);  // slot pi[k] receives w[k]
    for (int k = 0; k < n; ++k) v[pi[k]] = w[k];
    for (int k = 0; k < n; ++k) row = row * d + v[k];
    m(row, col) = ExactScalar(1);
  }
  return m;
}

// S = (1/n!) sum_{pi in S_n} P_pi on (C^d)^{(x) n}.
inline Matrix<ExactScalar> symmetric_projector(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("symmetric_projector: need n,d >= 1");
  auto perms = all_permutations(n);
  int dim = 1;
  for (int k = 0; k < n; ++k) dim *= d;
  Matrix<ExactScalar> s(dim, dim);
  s.row_factors.assign(n, d);
  s.col_factors.assign(n, d);
  for (auto& pi : perms) s = s + tensor_permutation(pi, d);
  ExactScalar inv_fact = ExactScalar(1) / factorial(n);
  return s.scaled(inv_fact);
}

template <class T>
Matrix<T> convert_scalar_matrix(const Matrix<ExactScalar>& m, const TablePtr& tab) {
  static_assert(std::is_same_v<T, Poly>, "convert_scalar_matrix targets Poly");
  Matrix<Poly> r(m.rows, m.cols);
  r.row_factors = m.row_factors;
  r.col_factors = m.col_factors;
  for (size_t k = 0; k < m.data.size(); ++k)
    if (!m.data[k].is_zero()) r.data[k] = Poly::constant(tab, m.data[k]);
  return r;
}

// Embed an operator acting on legs (a, b) of a three-leg tensor product with
// dims (d1, d2, d3). legs is one of {0,1}, {1,2}, {0,2}.
template <class T>
Matrix<T> embed_three(const Matrix<T>& op, int which, int d1, int d2, int d3, const T& one) {
  auto id = [&](int d) { return Matrix<T>::identity(d, one); };
  if (which == 12) return kronecker(op, id(d3));
  if (which == 23) return kronecker(id(d1), op);
  if (which == 13) {
    // R13 = (I (x) P23) (R (x) I) (I (x) P23) with P23 on dims (d2, d3)...
    // built generically by index bookkeeping instead:
    int dim = d1 * d2 * d3;
    Matrix<T> r(dim, dim);
    r.row_factors = {d1, d2, d3};
    r.col_factors = {d1, d2, d3};
    for (int i1 = 0; i1 < d1; ++i1)
      for (int i3 = 0; i3 < d3; ++i3)
        for (int j1 = 0; j1 < d1; ++j1)
          for (int j3 = 0; j3 < d3; ++j3) {
            const T& v = op(i1 * d3 + i3, j1 * d3 + j3);
            if (v == T{}) continue;
            for (int k = 0; k < d2; ++k)
              r((i1 * d2 + k) * d3 + i3, (j1 * d2 + k) * d3 + j3) = v;
          }
    return r;
  }
  throw std::invalid_argument("embed_three: which must be 12, 23 or 13");
}

// Embed an operator acting on legs (a, b), a < b, of an n-leg tensor product
// with the given dims. op is indexed with leg a major: op(ia*db+ib, ja*db+jb).
template <class T>
Matrix<T> embed_pair(const Matrix<T>& op, int a, int b, const std::vector<int>& dims) {
  int n = static_cast<int>(dims.size());
  if (a < 0 || b <= a || b >= n) throw std::invalid_argument("embed_pair: bad legs");
  int dim = 1;
  for (int d : dims) dim *= d;
  Matrix<T> r(dim, dim);
  r.row_factors = dims;
  r.col_factors = dims;
  std::vector<int> w(n);
  for (int col = 0; col < dim; ++col) {
    int c = col;
    for (int k = n - 1; k >= 0; --k) {
      w[k] = c % dims[k];
      c /= dims[k];
    }
    for (int ia = 0; ia < dims[a]; ++ia)
      for (int ib = 0; ib < dims[b]; ++ib) {
        const T& v = op(ia * dims[b] + ib, w[a] * dims[b] + w[b]);
        if (v == T{}) continue;
        int row = 0;
        for (int k = 0; k < n; ++k) {
          int ik = (k == a) ? ia : (k == b) ? ib : w[k];
          row = row * dims[k] + ik;
        }
        r(row, col) = r(row, col) + v;
      }
  }
  return r;
}

}  // namespace yb
