#pragma once

#include "qstack/field.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace qstack {

template <class F>
using Matrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using RowMatrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class F>
using Vector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

// Reduced row echelon form in place.  Returns the pivot columns; rows past
// the rank are left zero.
template <class M>
std::vector<int> rref_inplace(M& a) {
  using F = typename M::Scalar;
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    if (a(r, c) != F(1)) {
      F inv = F(1) / a(r, c);
      for (int j = c; j < cols; ++j) a(r, j) *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      F f = a(i, c);
      for (int j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class F, class Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  RowMatrix<F> a = m;
  return static_cast<int>(rref_inplace(a).size());
}

// Columns form a basis of {x : a x = 0}.
template <class F, class Derived>
Matrix<F> nullspace(const Eigen::MatrixBase<Derived>& m) {
  RowMatrix<F> a = m;
  auto piv = rref_inplace(a);
  const int n = static_cast<int>(a.cols());
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  Matrix<F> ns = Matrix<F>::Zero(n, n - static_cast<int>(piv.size()));
  int k = 0;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    ns(f, k) = F(1);
    for (size_t i = 0; i < piv.size(); ++i) ns(piv[i], k) = -a(static_cast<int>(i), f);
    ++k;
  }
  return ns;
}

// Some x with a x = b, if one exists.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& a, const Vector<F>& b) {
  const int n = static_cast<int>(a.cols());
  RowMatrix<F> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  auto piv = rref_inplace(aug);
  Vector<F> x = Vector<F>::Zero(n);
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == n) return std::nullopt;
    x(piv[i]) = aug(static_cast<int>(i), n);
  }
  return x;
}

template <class F>
bool is_invertible(const Matrix<F>& a) {
  return a.rows() == a.cols() && rank<F>(a) == a.rows();
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  const int n = static_cast<int>(a.rows());
  RowMatrix<F> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Matrix<F>::Identity(n, n);
  auto piv = rref_inplace(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] >= n))
    throw std::domain_error("matrix not invertible");
  return aug.rightCols(n);
}

// Subspace of F^n held as the nonzero rows of its reduced echelon form.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : n_(ambient), rows_(0, ambient) {}

  static Subspace full(int n) {
    Subspace s(n);
    s.rows_ = RowMatrix<F>::Identity(n, n);
    for (int i = 0; i < n; ++i) s.piv_.push_back(i);
    return s;
  }
  template <class Derived>
  static Subspace from_rows(const Eigen::MatrixBase<Derived>& rows) {
    Subspace s(static_cast<int>(rows.cols()));
    RowMatrix<F> a = rows;
    s.piv_ = rref_inplace(a);
    s.rows_ = a.topRows(static_cast<int>(s.piv_.size()));
    return s;
  }
  template <class Derived>
  static Subspace from_columns(const Eigen::MatrixBase<Derived>& cols) {
    return from_rows(cols.transpose());
  }
  // Trusted: rows already reduced with these pivots.
  static Subspace from_rref(RowMatrix<F> rows, std::vector<int> piv) {
    Subspace s(static_cast<int>(rows.cols()));
    s.rows_ = std::move(rows);
    s.piv_ = std::move(piv);
    return s;
  }

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(piv_.size()); }
  const RowMatrix<F>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }
  Matrix<F> basis() const { return rows_.transpose(); }

  // v minus its component along the echelon rows; zero iff v lies inside.
  template <class Derived>
  Vector<F> reduce(const Eigen::MatrixBase<Derived>& v) const {
    Vector<F> r = v;
    for (int i = 0; i < dim(); ++i) {
      F c = r(piv_[i]);
      if (is_zero(c)) continue;
      for (int j = piv_[i]; j < n_; ++j)
        if (!is_zero(rows_(i, j))) r(j) -= c * rows_(i, j);
    }
    return r;
  }
  template <class Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    Vector<F> r = reduce(v);
    for (int j = 0; j < n_; ++j)
      if (!is_zero(r(j))) return false;
    return true;
  }
  bool contains(const Subspace& o) const {
    for (int i = 0; i < o.dim(); ++i)
      if (!contains(o.rows_.row(i).transpose())) return false;
    return true;
  }
  // Coordinates of a vector known to lie in the subspace.
  template <class Derived>
  Vector<F> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    Vector<F> c(dim());
    for (int i = 0; i < dim(); ++i) c(i) = v(piv_[i]);
    return c;
  }
  // Positions outside the pivots: coordinates on the quotient F^n / this.
  std::vector<int> nonpivots() const {
    std::vector<int> out;
    std::vector<char> p(n_, 0);
    for (int c : piv_) p[c] = 1;
    for (int j = 0; j < n_; ++j)
      if (!p[j]) out.push_back(j);
    return out;
  }
  // Image of v in the quotient, in nonpivot coordinates.
  template <class Derived>
  Vector<F> quotient_coordinates(const Eigen::MatrixBase<Derived>& v) const {
    Vector<F> r = reduce(v);
    auto np = nonpivots();
    Vector<F> q(static_cast<int>(np.size()));
    for (size_t i = 0; i < np.size(); ++i) q(static_cast<int>(i)) = r(np[i]);
    return q;
  }

  Subspace sum(const Subspace& o) const {
    RowMatrix<F> st(dim() + o.dim(), n_);
    st.topRows(dim()) = rows_;
    st.bottomRows(o.dim()) = o.rows_;
    return from_rows(st);
  }
  Subspace intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(n_);
    Matrix<F> sys(n_, dim() + o.dim());
    sys.leftCols(dim()) = rows_.transpose();
    sys.rightCols(o.dim()) = -o.rows_.transpose();
    Matrix<F> ns = nullspace<F>(sys);
    Matrix<F> vecs = rows_.transpose() * ns.topRows(dim());
    return from_columns(vecs);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.piv_ == b.piv_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 0;
  RowMatrix<F> rows_;
  std::vector<int> piv_;
};

}  // namespace qstack
