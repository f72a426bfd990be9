#pragma once

#include <array>
#include <string>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

struct AxialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAnAxis : AxialError {
  explicit NotAnAxis(const std::string& what) : AxialError(what) {}
};
struct DecompositionIncomplete : AxialError {
  DecompositionIncomplete() : AxialError("Peirce eigenspaces do not span the algebra") {}
};
struct NoSolution : AxialError {
  explicit NoSolution(const std::string& what) : AxialError(what) {}
};
struct NonUnique : AxialError {
  explicit NonUnique(const std::string& what) : AxialError(what) {}
};
struct KernelNotIdeal : AxialError {
  KernelNotIdeal() : AxialError("Gram kernel is not an ideal; association violated upstream") {}
};
struct Unclassifiable : AxialError {
  explicit Unclassifiable(const std::string& what) : AxialError(what) {}
};

template <class K>
struct AxisReport {
  bool is_idempotent = false;
  Index dim_a1 = 0;
  bool decomposition_complete = false;
  bool fusion_ok = false;
  std::vector<std::string> violations;

  bool is_axis() const {
    return is_idempotent && dim_a1 == 1 && decomposition_complete && fusion_ok;
  }
};

template <class K>
struct PeirceData {
  Subspace<K> a0, a1, ah;  // eigenspaces at 0, 1, 1/2
};

template <class K>
PeirceData<K> peirce_spaces(const AlgebraT<K>& alg, const Vec<K>& a) {
  PeirceData<K> p;
  p.a0 = alg.ad_eigenspace(a, K(0));
  p.a1 = alg.ad_eigenspace(a, K(1));
  p.ah = alg.ad_eigenspace(a, K(1) / K(2));
  return p;
}

/// Checks a^2 = a, primitivity, that the eigenspaces at {0, 1, 1/2} span,
/// and all six fusion containments by multiplying eigenbasis pairs.
template <class K>
AxisReport<K> axis_report(const AlgebraT<K>& alg, const Vec<K>& a) {
  AxisReport<K> rep;
  rep.is_idempotent = vec_equal(alg.multiply(a, a), a);
  PeirceData<K> p = peirce_spaces(alg, a);
  rep.dim_a1 = p.a1.dim();
  // Eigenspaces at distinct eigenvalues are independent, so spanning is a
  // dimension count.
  rep.decomposition_complete = p.a0.dim() + p.a1.dim() + p.ah.dim() == alg.dim();

  Subspace<K> a01 = p.a0.sum(p.a1);
  rep.fusion_ok = true;
  auto check = [&](const Subspace<K>& x, const Subspace<K>& y, const char* name,
                   auto&& member) {
    for (Index i = 0; i < x.dim(); ++i) {
      for (Index j = 0; j < y.dim(); ++j) {
        Vec<K> prod = alg.multiply(x.basis_vector(i), y.basis_vector(j));
        if (!member(prod)) {
          rep.fusion_ok = false;
          rep.violations.push_back(name);
          return;
        }
      }
    }
  };
  check(p.a0, p.ah, "A0*Ah not in Ah", [&](const Vec<K>& v) { return p.ah.contains(v); });
  check(p.a1, p.ah, "A1*Ah not in Ah", [&](const Vec<K>& v) { return p.ah.contains(v); });
  check(p.a0, p.a1, "A0*A1 != 0", [&](const Vec<K>& v) { return vec_is_zero(v); });
  check(p.a0, p.a0, "A0*A0 not in A0", [&](const Vec<K>& v) { return p.a0.contains(v); });
  check(p.a1, p.a1, "A1*A1 not in A1", [&](const Vec<K>& v) { return p.a1.contains(v); });
  check(p.ah, p.ah, "Ah*Ah not in A0+A1", [&](const Vec<K>& v) { return a01.contains(v); });
  return rep;
}

template <class K>
void require_axis(const AlgebraT<K>& alg, const Vec<K>& a, const char* who) {
  AxisReport<K> rep = axis_report(alg, a);
  if (!rep.is_axis()) throw NotAnAxis(std::string(who) + ": designated element is not an axis");
}

/// x = x0 + x1 + xh with components in A_0(a), A_1(a), A_1/2(a).
template <class K>
std::array<Vec<K>, 3> peirce_decompose(const AlgebraT<K>& alg, const Vec<K>& a,
                                       const Vec<K>& x) {
  require_axis(alg, a, "peirce_decompose");
  PeirceData<K> p = peirce_spaces(alg, a);
  const Index n = alg.dim();
  const Index d0 = p.a0.dim(), d1 = p.a1.dim(), dh = p.ah.dim();
  Mat<K> cols(n, d0 + d1 + dh);
  for (Index i = 0; i < d0; ++i) cols.col(i) = p.a0.basis_vector(i);
  for (Index i = 0; i < d1; ++i) cols.col(d0 + i) = p.a1.basis_vector(i);
  for (Index i = 0; i < dh; ++i) cols.col(d0 + d1 + i) = p.ah.basis_vector(i);
  auto sol = solve<K>(cols, x);
  if (!sol) throw DecompositionIncomplete();
  std::array<Vec<K>, 3> out{alg.zero_element(), alg.zero_element(), alg.zero_element()};
  for (Index i = 0; i < d0; ++i) out[0] += (*sol)[i] * p.a0.basis_vector(i);
  for (Index i = 0; i < d1; ++i) out[1] += (*sol)[d0 + i] * p.a1.basis_vector(i);
  for (Index i = 0; i < dh; ++i) out[2] += (*sol)[d0 + d1 + i] * p.ah.basis_vector(i);
  return out;
}

/// Projection of y onto A_1(a), computed from the Peirce decomposition.
template <class K>
Vec<K> phi_projection(const AlgebraT<K>& alg, const Vec<K>& a, const Vec<K>& y) {
  return peirce_decompose(alg, a, y)[1];
}

/// Miyamoto involution: y -> y - 4 y a + 4 phi_a(y).
template <class K>
Vec<K> miyamoto(const AlgebraT<K>& alg, const Vec<K>& a, const Vec<K>& y) {
  Vec<K> ya = alg.multiply(y, a);
  Vec<K> out = y - K(4) * ya + K(4) * phi_projection(alg, a, y);
  return out;
}

template <class K>
struct GramForm {
  Mat<K> matrix;
  Index solution_space_dim = 0;  // of the association + equal-normalization system

  K value(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> gy = matrix * y;
    K out = K(0);
    for (Index i = 0; i < x.size(); ++i) out = out + x[i] * gy[i];
    return out;
  }

  bool associates(const AlgebraT<K>& alg) const {
    for (Index i = 0; i < alg.dim(); ++i)
      for (Index j = 0; j < alg.dim(); ++j)
        for (Index k = 0; k < alg.dim(); ++k) {
          K lhs = value(alg.basis_product(i, j), alg.basis_element(k));
          K rhs = value(alg.basis_element(i), alg.basis_product(j, k));
          if (!(lhs == rhs)) return false;
        }
    return true;
  }
};

/// The unique Frobenius form with (a, a) = 1 on the designated axes.
///
/// The n(n+1)/2 entries of the symmetric matrix are unknowns of one exact
/// homogeneous linear system: association (e_i e_j, e_k) = (e_i, e_j e_k)
/// for all triples, plus (a_1, a_1) = (a_t, a_t) for the designated axes.
/// Uniqueness of the form means that system must have a one-dimensional
/// solution space; anything else is reported as an error, not repaired.
template <class K>
GramForm<K> frobenius_form(const AlgebraT<K>& alg, const std::vector<Vec<K>>& axes) {
  if (axes.empty()) throw NoSolution("frobenius_form: no designated axes");
  if (alg.subalgebra_closure(axes).space.dim() != alg.dim())
    throw NoSolution("frobenius_form: designated axes do not generate the algebra");
  const Index n = alg.dim();
  const Index unknowns = n * (n + 1) / 2;
  auto idx = [n](Index i, Index j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };

  std::vector<Vec<K>> rows;
  Vec<K> zero_row(unknowns);
  zero_row.setConstant(K(0));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Vec<K>& eij = alg.basis_product(i, j);
      for (Index k = 0; k < n; ++k) {
        Vec<K> row = zero_row;
        for (Index l = 0; l < n; ++l) {
          if (!is_zero(eij[l])) row[idx(l, k)] += eij[l];
        }
        const Vec<K>& ejk = alg.basis_product(j, k);
        for (Index l = 0; l < n; ++l) {
          if (!is_zero(ejk[l])) row[idx(i, l)] -= ejk[l];
        }
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  auto norm_row = [&](const Vec<K>& a) {
    Vec<K> row = zero_row;
    for (Index i = 0; i < n; ++i) {
      if (is_zero(a[i])) continue;
      for (Index j = 0; j < n; ++j) {
        if (is_zero(a[j])) continue;
        row[idx(i, j)] += a[i] * a[j];
      }
    }
    return row;
  };
  for (std::size_t t = 1; t < axes.size(); ++t) {
    Vec<K> row = norm_row(axes[0]) - norm_row(axes[t]);
    if (!vec_is_zero(row)) rows.push_back(std::move(row));
  }

  Mat<K> sys(static_cast<Index>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) sys.row(static_cast<Index>(r)) = rows[r];
  Mat<K> ker = kernel(sys);
  GramForm<K> g;
  g.solution_space_dim = ker.rows();
  if (ker.rows() == 0) throw NoSolution("frobenius_form: association system has no solution");
  if (ker.rows() > 1)
    throw NonUnique("frobenius_form: solution space dimension " + std::to_string(ker.rows()));

  g.matrix = Mat<K>(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g.matrix(i, j) = ker(0, idx(i, j));
  K s = g.value(axes[0], axes[0]);
  if (is_zero(s)) throw NoSolution("frobenius_form: (a, a) = 0, cannot normalize");
  K inv = K(1) / s;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g.matrix(i, j) = g.matrix(i, j) * inv;
  for (const auto& a : axes) {
    if (!(g.value(a, a) == K(1)))
      throw NoSolution("frobenius_form: normalization failed on a designated axis");
  }
  return g;
}

/// Radical of the form: the kernel of the Gram matrix, verified to be an
/// ideal (association forces this; failure means bad input upstream).
template <class K>
Subspace<K> radical(const AlgebraT<K>& alg, const GramForm<K>& g) {
  Subspace<K> k = Subspace<K>::from_rows(kernel(g.matrix));
  if (!alg.is_ideal(k)) throw KernelNotIdeal();
  return k;
}

/// Case id (1..6) of the two-generated classification.
template <class K>
int classify_2gen(const AlgebraT<K>& alg, const Vec<K>& a, const Vec<K>& b) {
  auto closure = alg.subalgebra_closure({a, b});
  if (closure.space.dim() != alg.dim())
    throw AxialError("classify_2gen: algebra is not generated by the two axes");
  GramForm<K> g = frobenius_form(alg, std::vector<Vec<K>>{a, b});
  K alpha = g.value(a, b);
  const Index d = alg.dim();
  if (d == 1) return 1;
  if (d == 2) {
    if (is_zero(alpha)) return 2;
    if (alpha == K(1)) return 3;
    throw Unclassifiable("dim 2 with (a,b) not in {0,1}");
  }
  if (d == 3) {
    if (is_zero(alpha)) return 4;
    if (alpha == K(1)) return 5;
    return 6;
  }
  throw Unclassifiable("2-generated Jordan-type algebra of dimension > 3");
}

template <class K>
struct IdentityReport {
  struct Entry {
    std::string name;
    Vec<K> residual;
    bool zero;
  };
  std::vector<Entry> entries;
  bool all_zero() const {
    for (const auto& e : entries)
      if (!e.zero) return false;
    return true;
  }
};

/// The six axis identities for a pair of axes with alpha = (a, b):
///   a0(b)^2             = (1 - alpha) a0(b)
///   ah(b)^2             = alpha a0(b) + (alpha - alpha^2) b
///   a0(b) ah(b)         = 1/2 (1 - alpha) ah(b)
///   a (ab)              = 1/2 (alpha a + ab)
///   (ab) b              = 1/2 (alpha b + ab)
///   (ab)(ab)            = alpha/4 (a + b + 2 ab)
/// Residuals are returned exactly; all must vanish.
template <class K>
IdentityReport<K> verify_axis_identities(const AlgebraT<K>& alg, const GramForm<K>& g,
                                         const Vec<K>& a, const Vec<K>& b) {
  require_axis(alg, a, "verify_axis_identities");
  require_axis(alg, b, "verify_axis_identities");
  K alpha = g.value(a, b);
  auto parts = peirce_decompose(alg, b, a);
  const Vec<K>& a0 = parts[0];
  const Vec<K>& ah = parts[2];
  Vec<K> ab = alg.multiply(a, b);
  K half = K(1) / K(2);

  IdentityReport<K> rep;
  auto add = [&](std::string name, Vec<K> residual) {
    bool zero = vec_is_zero(residual);
    rep.entries.push_back({std::move(name), std::move(residual), zero});
  };
  add("a0(b)^2 - (1-alpha) a0(b)", alg.multiply(a0, a0) - (K(1) - alpha) * a0);
  add("ah(b)^2 - alpha a0(b) - (alpha-alpha^2) b",
      alg.multiply(ah, ah) - alpha * a0 - (alpha - alpha * alpha) * b);
  add("a0(b) ah(b) - 1/2 (1-alpha) ah(b)",
      alg.multiply(a0, ah) - half * (K(1) - alpha) * ah);
  add("a(ab) - 1/2 (alpha a + ab)", alg.multiply(a, ab) - half * (alpha * a + ab));
  add("(ab)b - 1/2 (alpha b + ab)", alg.multiply(ab, b) - half * (alpha * b + ab));
  add("(ab)(ab) - alpha/4 (a + b + 2 ab)",
      alg.multiply(ab, ab) - alpha / K(4) * (a + b + K(2) * ab));
  return rep;
}

template <class K>
struct QuotientFormReport {
  bool ok = true;
  std::string detail;
};

/// Quotient-form invariance: the unique Frobenius form of A/R agrees entrywise with the
/// original form on representatives.
template <class K>
QuotientFormReport<K> quotient_form_check(const AlgebraT<K>& alg, const GramForm<K>& g,
                                          const std::vector<Vec<K>>& axes) {
  Subspace<K> rad = radical(alg, g);
  auto quo = alg.quotient(rad);
  std::vector<Vec<K>> qaxes;
  for (const auto& a : axes) qaxes.push_back(quo.projection * a);
  GramForm<K> gq = frobenius_form(quo.algebra, qaxes);
  QuotientFormReport<K> rep;
  for (Index i = 0; i < alg.dim(); ++i) {
    for (Index j = 0; j < alg.dim(); ++j) {
      K orig = g.matrix(i, j);
      K ind = gq.value(quo.projection * alg.basis_element(i),
                       quo.projection * alg.basis_element(j));
      if (!(orig == ind)) {
        rep.ok = false;
        rep.detail = "mismatch at basis pair (" + alg.label(i) + ", " + alg.label(j) +
                     "): " + std::string("original != induced");
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace axial
