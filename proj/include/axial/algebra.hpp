#pragma once

#include <string>
#include <utility>
#include <vector>

#include "axial/linalg.hpp"

namespace axial {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : AlgebraError {
  DimensionMismatch() : AlgebraError("element dimension does not match algebra") {}
};
struct NotAnIdeal : AlgebraError {
  NotAnIdeal() : AlgebraError("subspace is not an ideal") {}
};

/// A finite-dimensional commutative algebra given by an ordered basis and
/// the symmetric structure-constant tensor sc[i][j] = e_i * e_j.
template <class K>
class AlgebraT {
 public:
  AlgebraT() = default;

  AlgebraT(std::vector<std::string> labels, std::vector<std::vector<Vec<K>>> sc)
      : labels_(std::move(labels)), sc_(std::move(sc)) {
    check_shape();
  }

  /// All-zero products; fill entries with set_product.
  static AlgebraT zero_algebra(std::vector<std::string> labels) {
    const Index n = static_cast<Index>(labels.size());
    Vec<K> z(n);
    z.setConstant(K(0));
    std::vector<std::vector<Vec<K>>> sc(n, std::vector<Vec<K>>(n, z));
    return AlgebraT(std::move(labels), std::move(sc));
  }

  Index dim() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_[i]; }

  const Vec<K>& basis_product(Index i, Index j) const { return sc_[i][j]; }

  void set_product(Index i, Index j, const Vec<K>& v) {
    sc_[i][j] = v;
    sc_[j][i] = v;
  }

  Vec<K> basis_element(Index i) const {
    Vec<K> e(dim());
    e.setConstant(K(0));
    e[i] = K(1);
    return e;
  }

  Vec<K> zero_element() const {
    Vec<K> e(dim());
    e.setConstant(K(0));
    return e;
  }

  /// Bilinear extension of the structure constants.
  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch();
    Vec<K> out = zero_element();
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (Index j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        K c = x[i] * y[j];
        const Vec<K>& p = sc_[i][j];
        for (Index k = 0; k < dim(); ++k) {
          if (!is_zero(p[k])) out[k] = out[k] + c * p[k];
        }
      }
    }
    return out;
  }

  /// Matrix of ad_a : x -> a x.
  Mat<K> ad_matrix(const Vec<K>& a) const {
    Mat<K> m(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.col(j) = multiply(a, basis_element(j));
    return m;
  }

  /// A_lambda(a) = { u : a u = lambda u }, the exact kernel of ad_a - lambda id.
  Subspace<K> ad_eigenspace(const Vec<K>& a, const K& lambda) const {
    Mat<K> m = ad_matrix(a);
    for (Index i = 0; i < dim(); ++i) m(i, i) = m(i, i) - lambda;
    return Subspace<K>::from_rows(kernel(m));
  }

  struct Closure {
    Subspace<K> space;     // product-closed subspace of the ambient algebra
    AlgebraT<K> induced;   // structure constants on the reduced basis
  };

  /// Smallest product-closed subspace containing gens, with the induced
  /// algebra on its canonical basis.  Iterates pairwise products until the
  /// rank stabilizes; terminates because dim is bounded by the ambient.
  Closure subalgebra_closure(const std::vector<Vec<K>>& gens) const {
    if (gens.empty()) throw AlgebraError("subalgebra_closure: no generators");
    Subspace<K> s = span_of(gens);
    for (;;) {
      std::vector<Vec<K>> fresh;
      for (Index i = 0; i < s.dim(); ++i) {
        for (Index j = i; j < s.dim(); ++j) {
          Vec<K> p = multiply(s.basis_vector(i), s.basis_vector(j));
          if (!s.contains(p)) fresh.push_back(std::move(p));
        }
      }
      if (fresh.empty()) break;
      Mat<K> stacked(s.dim() + static_cast<Index>(fresh.size()), dim());
      stacked.topRows(s.dim()) = s.basis();
      for (std::size_t k = 0; k < fresh.size(); ++k)
        stacked.row(s.dim() + static_cast<Index>(k)) = fresh[k].transpose();
      s = Subspace<K>::from_rows(stacked);
    }
    Closure out;
    out.space = s;
    std::vector<std::string> labels;
    for (Index i = 0; i < s.dim(); ++i) labels.push_back(labels_[s.pivots()[i]]);
    out.induced = AlgebraT::zero_algebra(labels);
    for (Index i = 0; i < s.dim(); ++i) {
      for (Index j = i; j < s.dim(); ++j) {
        auto c = s.coords_of(multiply(s.basis_vector(i), s.basis_vector(j)));
        out.induced.set_product(i, j, *c);
      }
    }
    return out;
  }

  /// Smallest subspace containing gens that is closed under multiplication
  /// by every basis element (hence an ideal, by bilinearity).
  Subspace<K> ideal_closure(const std::vector<Vec<K>>& gens) const {
    Subspace<K> s = span_of(gens);
    for (;;) {
      std::vector<Vec<K>> fresh;
      for (Index i = 0; i < s.dim(); ++i) {
        for (Index k = 0; k < dim(); ++k) {
          Vec<K> p = multiply(s.basis_vector(i), basis_element(k));
          if (!s.contains(p)) fresh.push_back(std::move(p));
        }
      }
      if (fresh.empty()) break;
      Mat<K> stacked(s.dim() + static_cast<Index>(fresh.size()), dim());
      stacked.topRows(s.dim()) = s.basis();
      for (std::size_t k = 0; k < fresh.size(); ++k)
        stacked.row(s.dim() + static_cast<Index>(k)) = fresh[k].transpose();
      s = Subspace<K>::from_rows(stacked);
    }
    return s;
  }

  bool is_ideal(const Subspace<K>& s) const {
    for (Index i = 0; i < s.dim(); ++i)
      for (Index k = 0; k < dim(); ++k)
        if (!s.contains(multiply(s.basis_vector(i), basis_element(k)))) return false;
    return true;
  }

  struct Quotient {
    AlgebraT<K> algebra;
    Mat<K> projection;  // q x n, an algebra homomorphism onto the quotient
  };

  /// Quotient by a verified ideal; the complement basis consists of the
  /// non-pivot coordinates of the ideal's reduced basis.
  Quotient quotient(const Subspace<K>& ideal) const {
    if (ideal.ambient_dim() != dim()) throw DimensionMismatch();
    if (!is_ideal(ideal)) throw NotAnIdeal();
    std::vector<bool> is_pivot(dim(), false);
    for (Index p : ideal.pivots()) is_pivot[p] = true;
    std::vector<Index> comp;
    for (Index j = 0; j < dim(); ++j)
      if (!is_pivot[j]) comp.push_back(j);
    const Index q = static_cast<Index>(comp.size());

    Mat<K> proj(q, dim());
    for (Index j = 0; j < dim(); ++j) {
      Vec<K> red = ideal.reduce(basis_element(j));
      for (Index i = 0; i < q; ++i) proj(i, j) = red[comp[i]];
    }

    std::vector<std::string> labels;
    for (Index c : comp) labels.push_back(labels_[c]);
    AlgebraT<K> alg = AlgebraT::zero_algebra(labels);
    for (Index i = 0; i < q; ++i) {
      for (Index j = i; j < q; ++j) {
        Vec<K> prod = multiply(basis_element(comp[i]), basis_element(comp[j]));
        alg.set_product(i, j, proj * prod);
      }
    }
    return Quotient{std::move(alg), std::move(proj)};
  }

  Subspace<K> span_of(const std::vector<Vec<K>>& vs) const {
    Mat<K> rows(static_cast<Index>(vs.size()), dim());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].size() != dim()) throw DimensionMismatch();
      rows.row(static_cast<Index>(i)) = vs[i].transpose();
    }
    return Subspace<K>::from_rows(rows);
  }

  bool commutative_ok() const {
    for (Index i = 0; i < dim(); ++i)
      for (Index j = 0; j < dim(); ++j)
        if (!vec_equal(sc_[i][j], sc_[j][i])) return false;
    return true;
  }

 private:
  void check_shape() const {
    const std::size_t n = labels_.size();
    if (n == 0) throw AlgebraError("algebra dimension must be >= 1");
    if (sc_.size() != n) throw AlgebraError("structure tensor shape");
    for (const auto& row : sc_) {
      if (row.size() != n) throw AlgebraError("structure tensor shape");
      for (const auto& v : row)
        if (static_cast<std::size_t>(v.size()) != n) throw AlgebraError("structure tensor shape");
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<Vec<K>>> sc_;
};

using Algebra = AlgebraT<Scalar>;
using Element = Vec<Scalar>;

/// Rewrites the algebra in the basis given by the rows of t (an invertible
/// change of coordinates); elements transform by x -> coordinates of x in
/// the new basis.
template <class K>
AlgebraT<K> change_basis(const AlgebraT<K>& a, const Mat<K>& t,
                         std::vector<std::string> new_labels) {
  const Index n = a.dim();
  if (t.rows() != n || t.cols() != n || rank(t) != n)
    throw AlgebraError("change_basis: matrix is not invertible");
  Mat<K> tt = t.transpose();
  auto coords = [&](const Vec<K>& v) { return *solve<K>(tt, v); };
  AlgebraT<K> out = AlgebraT<K>::zero_algebra(std::move(new_labels));
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      out.set_product(i, j, coords(a.multiply(t.row(i).transpose(), t.row(j).transpose())));
  return out;
}

}  // namespace axial
