#pragma once

#include <optional>
#include <vector>

#include "axial/eigen_support.hpp"

namespace axial {

/// Reduced row echelon form by exact Gauss-Jordan elimination.  Pivoting is
/// first-nonzero: exact arithmetic has no stability concerns.  Pivot entries
/// are normalized to 1 and cleared above and below, so the result is the
/// canonical basis of the row space.
template <class K>
struct Rref {
  Mat<K> mat;                  // r x n, r = rank, no zero rows
  std::vector<Index> pivots;   // pivot column per row, strictly increasing
};

template <class K>
Rref<K> rref(Mat<K> m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    K inv = K(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Rref<K> out;
  out.mat = m.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

template <class K>
Index rank(const Mat<K>& m) {
  return rref(m).mat.rows();
}

/// Basis of {x : A x = 0}, one kernel vector per row, in the canonical form
/// induced by the RREF free columns.
template <class K>
Mat<K> kernel(const Mat<K>& a) {
  Rref<K> r = rref(a);
  const Index n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index p : r.pivots) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat<K> out(static_cast<Index>(free_cols.size()), n);
  out.setConstant(K(0));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    Index j = free_cols[k];
    out(k, j) = K(1);
    for (Index i = 0; i < r.mat.rows(); ++i) out(k, r.pivots[i]) = -r.mat(i, j);
  }
  return out;
}

/// One solution of A x = b, if consistent.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& a, const Vec<K>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  Mat<K> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  Rref<K> r = rref(std::move(aug));
  Vec<K> x(a.cols());
  x.setConstant(K(0));
  for (Index i = 0; i < r.mat.rows(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;  // row 0 ... 0 | 1
    x[r.pivots[i]] = r.mat(i, a.cols());
  }
  return x;
}

/// A linear subspace held as the canonical RREF basis of its row space.
template <class K>
class Subspace {
 public:
  Subspace() : basis_(0, 0) {}
  explicit Subspace(Index ambient) : basis_(0, ambient) {}

  static Subspace from_rows(const Mat<K>& rows) {
    Subspace s;
    Rref<K> r = rref(rows);
    s.basis_ = std::move(r.mat);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  static Subspace zero(Index ambient) { return Subspace(ambient); }

  static Subspace full(Index ambient) {
    Mat<K> id(ambient, ambient);
    id.setConstant(K(0));
    for (Index i = 0; i < ambient; ++i) id(i, i) = K(1);
    return from_rows(id);
  }

  Index dim() const { return basis_.rows(); }
  Index ambient_dim() const { return basis_.cols(); }
  const Mat<K>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  Vec<K> basis_vector(Index i) const { return basis_.row(i).transpose(); }

  /// v reduced modulo the subspace (pivot coordinates eliminated).
  Vec<K> reduce(Vec<K> v) const {
    for (Index i = 0; i < basis_.rows(); ++i) {
      const K& f = v[pivots_[i]];
      if (is_zero(f)) continue;
      K c = f;
      for (Index j = 0; j < v.size(); ++j) v[j] = v[j] - c * basis_(i, j);
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

  /// Coordinates of v in the RREF basis; nullopt when v is outside.
  std::optional<Vec<K>> coords_of(const Vec<K>& v) const {
    Vec<K> c(basis_.rows());
    for (Index i = 0; i < basis_.rows(); ++i) c[i] = v[pivots_[i]];
    Vec<K> rec = v;
    for (Index i = 0; i < basis_.rows(); ++i)
      for (Index j = 0; j < v.size(); ++j) rec[j] = rec[j] - c[i] * basis_(i, j);
    if (!vec_is_zero(rec)) return std::nullopt;
    return c;
  }

  Subspace sum(const Subspace& other) const {
    Mat<K> stacked(basis_.rows() + other.basis_.rows(), basis_.cols());
    stacked.topRows(basis_.rows()) = basis_;
    stacked.bottomRows(other.basis_.rows()) = other.basis_;
    return from_rows(stacked);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return mat_equal(a.basis_, b.basis_);
  }

 private:
  Mat<K> basis_;
  std::vector<Index> pivots_;
};

}  // namespace axial
