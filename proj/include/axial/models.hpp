#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "axial/axial.hpp"

namespace axial {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateParameters : ModelError {
  explicit DegenerateParameters(const std::string& what) : ModelError(what) {}
};
struct BranchRootMissing : ModelError {
  explicit BranchRootMissing(const std::string& what) : ModelError(what) {}
};
struct NoRationalSolution : ModelError {
  explicit NoRationalSolution(const std::string& what) : ModelError(what) {}
};

struct ParameterTuple {
  Scalar alpha, beta, gamma, psi;
};

enum class Provenance { Fn, JForm, MatrixJordan, Hermitian, S7gen, S8gen, Universal };
std::string to_string(Provenance p);

enum class Branch { Minus, Plus };
inline std::string to_string(Branch b) { return b == Branch::Minus ? "minus" : "plus"; }

/// A constructed algebra together with its designated generating axes.
struct ModelAlgebra {
  Algebra algebra;
  std::vector<Element> axes;
  std::vector<std::string> axis_names;
  Provenance provenance = Provenance::Fn;
  std::optional<ParameterTuple> params;  // tuple the generators realize
  std::optional<Branch> branch;
  std::optional<Mat<Scalar>> trace_gram;  // trace form, for matrix models
  // S7 construction data: the printed-shape matrices A, B, C as algebra
  // elements and the scalars lambda_a, lambda_b, lambda_c inside them.
  std::optional<std::array<Element, 3>> shape_matrices;
  std::optional<std::array<Scalar, 3>> s7_lambdas;
  std::vector<std::string> notes;
};

/// F^n with component-wise product; axes are the unit vectors.
ModelAlgebra build_Fn(int n);

/// Jordan algebra of a symmetric bilinear form on F + V; each v with
/// phi(v, v) = 1/4 induces the axis 1/2 + v.
ModelAlgebra build_jform(const Mat<Scalar>& phi, const std::vector<Vec<Scalar>>& vs);

/// M_n with the Jordan product X o Y = (XY + YX)/2, basis {E_ij}.
ModelAlgebra build_matrix_jordan(int n);

/// Symmetric matrices in M_n^+, basis {E_ii} and {E_ij + E_ji}.
ModelAlgebra build_hermitian_jordan(int n);

/// Three generating axes of M_2^+ realizing a row-A7 parameter tuple,
/// built from the 2x2 matrix shapes of the S7 identification.  The
/// branch flag picks the sign of sqrt(psi^2 - alpha beta gamma).
ModelAlgebra s7_generators(const ParameterTuple& p, Branch branch = Branch::Minus);

/// Three generating axes of H(M_3) realizing (0, beta, gamma, 0).
ModelAlgebra s8_generators(const Scalar& beta, const Scalar& gamma);

/// The generator switch d = (2ab - alpha a - b)/(alpha - 1); an axis with
/// a d = 0 whenever a, b are axes with alpha = (a, b) not in {0, 1}.
Element derived_axis(const Algebra& alg, const GramForm<Scalar>& g, const Element& a,
                     const Element& b);

/// Three generating axes of the 6-dimensional S9 model (the H(M_3) real
/// form) realizing a row-A9 tuple, obtained as the closure of a rank-one
/// idempotent triple in M_3^+.  The derived-axis switch of the S8 = S9
/// identification is available inside the result via derived_axis.
ModelAlgebra s9_generators(const ParameterTuple& p);

/// Three rank-one idempotents of M_3^+ realizing a tuple in the simple
/// regime (alpha+beta+gamma-2psi-1)(alpha beta gamma - psi^2) != 0.
ModelAlgebra realize_universal(const ParameterTuple& p);

/// JForm_2 with three generating axes realizing a row-A4 or row-A5 tuple.
ModelAlgebra jform2_realizing(const ParameterTuple& p);

/// JForm_2 with two generating axes a, b with (a, b) = alpha (alpha not in
/// {0, 1}).
ModelAlgebra jform2_two_axes(const Scalar& alpha);

/// F + JForm_2 with axes a, c inside JForm_2 ((a, c) = gamma) and b the
/// isolated idempotent: the row-A6 quotient.
ModelAlgebra build_f_plus_jform2(const Scalar& gamma);

/// The universal 2-generated algebra on basis {a, b, ab} with (a, b) = alpha:
/// two-generated case 4 at alpha = 0, case 5 at alpha = 1, JForm_2 otherwise.
struct TwoGenAlgebra {
  Algebra algebra;
  Element a, b;
};
TwoGenAlgebra build_u2(const Scalar& alpha);

/// The nine universal basis elements (a, b, c, ab, bc, ac, a(bc), b(ac),
/// c(ab)) evaluated in a model carrying labeled generators.
std::array<Element, 9> universal_basis_elements(const Algebra& alg, const Element& a,
                                                const Element& b, const Element& c);

Mat<Scalar> jordan_product(const Mat<Scalar>& x, const Mat<Scalar>& y);
Scalar trace(const Mat<Scalar>& x);
Vec<Scalar> vectorize(const Mat<Scalar>& m);

}  // namespace axial
