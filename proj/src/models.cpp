#include "axial/models.hpp"

#include <algorithm>
#include <functional>

namespace axial {

namespace {

const Scalar kHalf(1, 2);

Mat<Scalar> zero_mat(Index n) {
  Mat<Scalar> m(n, n);
  m.setConstant(Scalar(0));
  return m;
}

std::vector<Mat<Scalar>> matrix_units(int n) {
  std::vector<Mat<Scalar>> units;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat<Scalar> e = zero_mat(n);
      e(i, j) = Scalar(1);
      units.push_back(std::move(e));
    }
  return units;
}

std::vector<Mat<Scalar>> hermitian_units(int n) {
  std::vector<Mat<Scalar>> units;
  for (int i = 0; i < n; ++i) {
    Mat<Scalar> e = zero_mat(n);
    e(i, i) = Scalar(1);
    units.push_back(std::move(e));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat<Scalar> e = zero_mat(n);
      e(i, j) = Scalar(1);
      e(j, i) = Scalar(1);
      units.push_back(std::move(e));
    }
  return units;
}

Algebra algebra_from_matrix_basis(const std::vector<Mat<Scalar>>& basis,
                                  std::vector<std::string> labels,
                                  const std::function<Vec<Scalar>(const Mat<Scalar>&)>& coords) {
  Algebra alg = Algebra::zero_algebra(std::move(labels));
  const Index d = static_cast<Index>(basis.size());
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j)
      alg.set_product(i, j, coords(jordan_product(basis[i], basis[j])));
  return alg;
}

Mat<Scalar> trace_gram_of(const std::vector<Mat<Scalar>>& basis) {
  const Index d = static_cast<Index>(basis.size());
  Mat<Scalar> g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = trace(Mat<Scalar>(basis[i] * basis[j]));
  return g;
}

Vec<Scalar> mat2_coords(const Mat<Scalar>& m) {
  Vec<Scalar> v(4);
  v << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  return v;
}

Vec<Scalar> herm3_coords(const Mat<Scalar>& m) {
  Vec<Scalar> v(6);
  v << m(0, 0), m(1, 1), m(2, 2), m(0, 1), m(0, 2), m(1, 2);
  return v;
}

// Permutations of (a, b, c); slot i of a construction holds generator p[i].
constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

struct PairValues {
  Scalar alpha, beta, gamma;
  const Scalar& value(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return alpha;
    if (i == 1 && j == 2) return beta;
    return gamma;
  }
};

ParameterTuple permuted(const ParameterTuple& p, const std::array<int, 3>& perm) {
  PairValues v{p.alpha, p.beta, p.gamma};
  return ParameterTuple{v.value(perm[0], perm[1]), v.value(perm[1], perm[2]),
                        v.value(perm[0], perm[2]), p.psi};
}

std::string perm_name(const std::array<int, 3>& perm) {
  const char* names = "abc";
  return std::string() + names[perm[0]] + names[perm[1]] + names[perm[2]];
}

// The three 2x2 shapes of the S7 identification.
Mat<Scalar> s7_shape_A(const Scalar& lc) {
  Mat<Scalar> m(2, 2);
  m << Scalar(1) - lc, Scalar(1), lc * (Scalar(1) - lc), lc;
  return m;
}
Mat<Scalar> s7_shape_B(const Scalar& lb) {
  Mat<Scalar> m(2, 2);
  m << Scalar(1), Scalar(0), lb, Scalar(0);
  return m;
}
Mat<Scalar> s7_shape_C(const Scalar& la) {
  Mat<Scalar> m(2, 2);
  m << Scalar(1), la, Scalar(0), Scalar(0);
  return m;
}

struct S7Attempt {
  std::array<Mat<Scalar>, 3> slot;  // matrices for construction slots a', b', c'
  std::array<Scalar, 3> lambdas;    // lambda_a, lambda_b, lambda_c of the shapes
  std::string note;
};

// Solves the trace system for the printed matrix shapes at a permuted tuple.
std::optional<S7Attempt> s7_solve(const ParameterTuple& p, Branch branch) {
  const Scalar &alpha = p.alpha, &beta = p.beta, &gamma = p.gamma, &psi = p.psi;
  if (alpha.is_zero()) {
    // Second-branch closed form; it realizes (0, beta, gamma) with
    // the images of a and b taken as the B- and A-shaped matrices.
    if (gamma.is_zero()) return std::nullopt;
    Scalar denom = beta + gamma - Scalar(1);
    if (denom.is_zero()) return std::nullopt;
    Scalar la = -(gamma * gamma - gamma) / denom;
    Scalar lb = -denom / gamma;
    Scalar lc = (Scalar(1) - beta) / gamma;
    S7Attempt at;
    at.slot = {s7_shape_B(lb), s7_shape_A(lc), s7_shape_C(la)};
    at.lambdas = {la, lb, lc};
    at.note = "alpha = 0 branch";
    return at;
  }
  if (alpha == Scalar(1)) return std::nullopt;
  Scalar rad = psi * psi - alpha * beta * gamma;
  Scalar root;
  try {
    root = sqrt(rad);
  } catch (const FieldError&) {
    throw BranchRootMissing("sqrt(psi^2 - alpha beta gamma) is not in the field: radicand " +
                            to_string(rad));
  }
  Scalar denom = alpha * (Scalar(1) - alpha);
  Scalar la = (branch == Branch::Minus) ? (psi - alpha * beta - root) / denom
                                        : (psi - alpha * beta + root) / denom;
  std::string note;
  if (la.is_zero()) {
    la = (branch == Branch::Minus) ? (psi - alpha * beta + root) / denom
                                   : (psi - alpha * beta - root) / denom;
    note = "requested branch degenerates to lambda_a = 0; other root used";
    if (la.is_zero()) return std::nullopt;
  }
  Scalar lb = (beta - Scalar(1)) / la;
  Scalar lc = Scalar(1) - alpha + lb;
  S7Attempt at;
  at.slot = {s7_shape_A(lc), s7_shape_B(lb), s7_shape_C(la)};
  at.lambdas = {la, lb, lc};
  at.note = note;
  return at;
}

bool model_matches(const ModelAlgebra& m, const ParameterTuple& p, Index want_dim) {
  const auto& g = *m.trace_gram;
  GramForm<Scalar> form{g, 1};
  const Element &a = m.axes[0], &b = m.axes[1], &c = m.axes[2];
  for (const Element& x : m.axes)
    if (!vec_equal(m.algebra.multiply(x, x), x)) return false;
  if (!(form.value(a, b) == p.alpha)) return false;
  if (!(form.value(b, c) == p.beta)) return false;
  if (!(form.value(a, c) == p.gamma)) return false;
  if (!(form.value(m.algebra.multiply(a, b), c) == p.psi)) return false;
  return m.algebra.subalgebra_closure({a, b, c}).space.dim() == want_dim;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Fn: return "Fn";
    case Provenance::JForm: return "JForm";
    case Provenance::MatrixJordan: return "MatrixJordan";
    case Provenance::Hermitian: return "Hermitian";
    case Provenance::S7gen: return "S7gen";
    case Provenance::S8gen: return "S8gen";
    case Provenance::Universal: return "Universal";
  }
  return "?";
}

Mat<Scalar> jordan_product(const Mat<Scalar>& x, const Mat<Scalar>& y) {
  return kHalf * (Mat<Scalar>(x * y) + Mat<Scalar>(y * x));
}

Scalar trace(const Mat<Scalar>& x) {
  Scalar t(0);
  for (Index i = 0; i < x.rows(); ++i) t += x(i, i);
  return t;
}

Vec<Scalar> vectorize(const Mat<Scalar>& m) {
  Vec<Scalar> v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

ModelAlgebra build_Fn(int n) {
  if (n < 1 || n > 3) throw DegenerateParameters("build_Fn: n must be 1, 2 or 3");
  std::vector<std::string> labels = {"a", "b", "c"};
  labels.resize(n);
  Algebra alg = Algebra::zero_algebra(labels);
  for (Index i = 0; i < n; ++i) alg.set_product(i, i, alg.basis_element(i));
  ModelAlgebra m;
  m.algebra = alg;
  for (Index i = 0; i < n; ++i) {
    m.axes.push_back(alg.basis_element(i));
    m.axis_names.push_back(labels[i]);
  }
  m.provenance = Provenance::Fn;
  Mat<Scalar> g(n, n);
  g.setConstant(Scalar(0));
  for (Index i = 0; i < n; ++i) g(i, i) = Scalar(1);
  m.trace_gram = g;
  return m;
}

ModelAlgebra build_jform(const Mat<Scalar>& phi, const std::vector<Vec<Scalar>>& vs) {
  const Index n = phi.rows();
  if (phi.cols() != n) throw DegenerateParameters("build_jform: phi must be square");
  if (!mat_equal(Mat<Scalar>(phi.transpose()), phi))
    throw DegenerateParameters("build_jform: phi must be symmetric");
  std::vector<std::string> labels = {"e"};
  for (Index i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  Algebra alg = Algebra::zero_algebra(labels);
  alg.set_product(0, 0, alg.basis_element(0));
  for (Index i = 0; i < n; ++i) {
    alg.set_product(0, i + 1, alg.basis_element(i + 1));
    for (Index j = i; j < n; ++j) {
      Vec<Scalar> prod = alg.zero_element();
      prod[0] = phi(i, j);
      alg.set_product(i + 1, j + 1, prod);
    }
  }
  ModelAlgebra m;
  m.algebra = alg;
  m.provenance = Provenance::JForm;
  const Scalar quarter(1, 4);
  for (const auto& v : vs) {
    if (v.size() != n) throw DegenerateParameters("build_jform: vector dimension");
    Scalar vv(0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) vv += v[i] * phi(i, j) * v[j];
    if (!(vv == quarter))
      throw DegenerateParameters("build_jform: phi(v, v) != 1/4, not an axis");
    Vec<Scalar> axis = alg.zero_element();
    axis[0] = kHalf;
    for (Index i = 0; i < n; ++i) axis[i + 1] = v[i];
    m.axes.push_back(std::move(axis));
    m.axis_names.push_back("axis" + std::to_string(m.axes.size()));
  }
  return m;
}

ModelAlgebra build_matrix_jordan(int n) {
  if (n < 2) throw DegenerateParameters("build_matrix_jordan: n must be >= 2");
  auto units = matrix_units(n);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  ModelAlgebra m;
  m.algebra = algebra_from_matrix_basis(units, labels, vectorize);
  m.provenance = Provenance::MatrixJordan;
  m.trace_gram = trace_gram_of(units);
  return m;
}

ModelAlgebra build_hermitian_jordan(int n) {
  if (n < 2) throw DegenerateParameters("build_hermitian_jordan: n must be >= 2");
  auto units = hermitian_units(n);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      labels.push_back("F" + std::to_string(i + 1) + std::to_string(j + 1));
  std::function<Vec<Scalar>(const Mat<Scalar>&)> coords;
  if (n == 3) {
    coords = herm3_coords;
  } else {
    coords = [n](const Mat<Scalar>& mt) {
      Vec<Scalar> v(n * (n + 1) / 2);
      Index k = 0;
      for (int i = 0; i < n; ++i) v[k++] = mt(i, i);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v[k++] = mt(i, j);
      return v;
    };
  }
  ModelAlgebra m;
  m.algebra = algebra_from_matrix_basis(units, labels, coords);
  m.provenance = Provenance::Hermitian;
  m.trace_gram = trace_gram_of(units);
  return m;
}

ModelAlgebra s7_generators(const ParameterTuple& p, Branch branch) {
  if (!(p.alpha + p.beta + p.gamma == Scalar(2) * p.psi + Scalar(1)))
    throw DegenerateParameters("s7_generators: alpha+beta+gamma = 2 psi + 1 must hold");
  if (p.psi * p.psi == p.alpha * p.beta * p.gamma)
    throw DegenerateParameters("s7_generators: psi^2 != alpha beta gamma must hold");

  ModelAlgebra ambient = build_matrix_jordan(2);
  auto attempt_all = [&](const ParameterTuple& q,
                         std::vector<std::string>& notes) -> std::optional<ModelAlgebra> {
    for (const auto& perm : kPerms) {
      ParameterTuple pq = permuted(q, perm);
      std::optional<S7Attempt> at = s7_solve(pq, branch);
      if (!at) continue;
      ModelAlgebra m;
      m.algebra = ambient.algebra;
      m.trace_gram = ambient.trace_gram;
      m.provenance = Provenance::S7gen;
      m.branch = branch;
      m.params = q;
      m.axis_names = {"a", "b", "c"};
      m.axes.resize(3);
      for (int slot = 0; slot < 3; ++slot) m.axes[perm[slot]] = mat2_coords(at->slot[slot]);
      if (!model_matches(m, q, 4)) continue;
      m.notes = notes;
      if (perm != kPerms[0]) m.notes.push_back("generators permuted internally: " + perm_name(perm));
      if (!at->note.empty()) m.notes.push_back(at->note);
      m.shape_matrices = {mat2_coords(s7_shape_A(at->lambdas[2])),
                          mat2_coords(s7_shape_B(at->lambdas[1])),
                          mat2_coords(s7_shape_C(at->lambdas[0]))};
      m.s7_lambdas = at->lambdas;
      return m;
    }
    return std::nullopt;
  };

  std::vector<std::string> notes;
  if (auto m = attempt_all(p, notes)) return *m;

  // Fallback: redesignate c as c^{tau_b}, which keeps the
  // A7 relations and moves gamma to gamma + 4 alpha beta - 4 psi.
  ParameterTuple pt{p.alpha, p.beta,
                    p.gamma + Scalar(4) * p.alpha * p.beta - Scalar(4) * p.psi,
                    Scalar(2) * p.alpha * p.beta - p.psi};
  std::vector<std::string> notes2 = {"generator c redesignated as c^{tau_b}"};
  if (auto m = attempt_all(pt, notes2)) {
    ModelAlgebra out = *m;
    out.params = p;
    out.axes[2] = miyamoto(out.algebra, out.axes[1], out.axes[2]);
    if (!model_matches(out, p, 4))
      throw DegenerateParameters("s7_generators: redesignation failed to realize the tuple");
    return out;
  }
  throw DegenerateParameters("s7_generators: no generator assignment realizes the tuple");
}

ModelAlgebra s8_generators(const Scalar& beta, const Scalar& gamma) {
  if (beta.is_zero() || gamma.is_zero() || gamma == Scalar(1))
    throw DegenerateParameters("s8_generators: beta, gamma must be nonzero and gamma != 1");
  Scalar sc = Scalar(2) * gamma - Scalar(1);
  Scalar lc2 = gamma - gamma * gamma;
  Scalar sb = Scalar(1) - Scalar(2) * beta / (Scalar(1) - gamma);
  Scalar lb2 = (Scalar(1) - sb * sb) / Scalar(4);
  if (lc2.is_zero() || lb2.is_zero())
    throw DegenerateParameters("s8_generators: lambda^2 = 0, generators degenerate");
  Scalar lc = sqrt(lc2);  // NestedRadical / NegativeRadicand propagate
  Scalar lb = sqrt(lb2);

  Mat<Scalar> a = zero_mat(3);
  a(0, 0) = Scalar(1);
  Mat<Scalar> b = zero_mat(3);
  b(1, 1) = (Scalar(1) + sb) * kHalf;
  b(2, 2) = (Scalar(1) - sb) * kHalf;
  b(1, 2) = lb;
  b(2, 1) = lb;
  Mat<Scalar> c = zero_mat(3);
  c(0, 0) = (Scalar(1) + sc) * kHalf;
  c(2, 2) = (Scalar(1) - sc) * kHalf;
  c(0, 2) = lc;
  c(2, 0) = lc;

  ModelAlgebra ambient = build_hermitian_jordan(3);
  ModelAlgebra m;
  m.algebra = ambient.algebra;
  m.trace_gram = ambient.trace_gram;
  m.provenance = Provenance::S8gen;
  m.params = ParameterTuple{Scalar(0), beta, gamma, Scalar(0)};
  m.axis_names = {"a", "b", "c"};
  m.axes = {herm3_coords(a), herm3_coords(b), herm3_coords(c)};
  if (!model_matches(m, *m.params, 6))
    throw DegenerateParameters("s8_generators: construction failed to realize (0, beta, gamma, 0)");
  return m;
}

Element derived_axis(const Algebra& alg, const GramForm<Scalar>& g, const Element& a,
                     const Element& b) {
  Scalar alpha = g.value(a, b);
  if (alpha.is_zero() || alpha == Scalar(1))
    throw DegenerateParameters("derived_axis: requires (a, b) not in {0, 1}");
  Element ab = alg.multiply(a, b);
  return (Scalar(2) * ab - alpha * a - b) / (alpha - Scalar(1));
}

namespace {

bool model_params_match(const ModelAlgebra& m, const ParameterTuple& p) {
  const auto& g = *m.trace_gram;
  GramForm<Scalar> form{g, 1};
  const Element &a = m.axes[0], &b = m.axes[1], &c = m.axes[2];
  for (const Element& x : m.axes)
    if (!vec_equal(m.algebra.multiply(x, x), x)) return false;
  return form.value(a, b) == p.alpha && form.value(b, c) == p.beta &&
         form.value(a, c) == p.gamma &&
         form.value(m.algebra.multiply(a, b), c) == p.psi;
}

// Three rank-one idempotents u_i v_i^T of M_3^+ whose trace-form values
// reproduce a permutation-normalized tuple.  Gauge: u1 = v1 = e1,
// u2 = (1,1,0), v2 = (alpha, 1-alpha, z), u3 = (gamma, s, 1),
// v3 = (1, w, 1-gamma-ws); the free entries are eliminated in the order
// Y (quadratic, root of psi^2 - alpha beta gamma), X, then s/z and w.
std::optional<ModelAlgebra> universal_triple(const ParameterTuple& p, bool plus_root) {
  const Scalar &alpha = p.alpha, &beta = p.beta, &gamma = p.gamma, &psi = p.psi;
  static const ModelAlgebra ambient = build_matrix_jordan(3);
  Scalar ag = alpha * gamma;
  Scalar Y;
  if (ag.is_zero()) {
    if (psi.is_zero()) return std::nullopt;
    Y = beta / (Scalar(2) * psi);
  } else {
    Scalar root;
    try {
      root = sqrt(psi * psi - alpha * beta * gamma);
    } catch (const FieldError& e) {
      throw NoRationalSolution(std::string("universal realization: ") + e.what());
    }
    Y = plus_root ? (psi + root) / ag : (psi - root) / ag;
  }
  Scalar X = Scalar(2) * psi - ag * Y;
  Scalar s, z;
  if (alpha == Scalar(1)) {
    s = Scalar(0);
    z = X - ag;
  } else {
    s = (X - ag) / (Scalar(1) - alpha);
    z = Scalar(0);
  }
  Scalar w = Y - Scalar(1);

  Vec<Scalar> u1(3), v1(3), u2(3), v2(3), u3(3), v3(3);
  u1 << Scalar(1), Scalar(0), Scalar(0);
  v1 = u1;
  u2 << Scalar(1), Scalar(1), Scalar(0);
  v2 << alpha, Scalar(1) - alpha, z;
  u3 << gamma, s, Scalar(1);
  v3 << Scalar(1), w, Scalar(1) - gamma - w * s;

  auto rank1 = [](const Vec<Scalar>& u, const Vec<Scalar>& v) {
    Mat<Scalar> e(3, 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) e(i, j) = u[i] * v[j];
    return e;
  };
  ModelAlgebra m;
  m.algebra = ambient.algebra;
  m.trace_gram = ambient.trace_gram;
  m.provenance = Provenance::Universal;
  m.params = p;
  m.axis_names = {"a", "b", "c"};
  m.axes = {vectorize(rank1(u1, v1)), vectorize(rank1(u2, v2)), vectorize(rank1(u3, v3))};
  if (!model_params_match(m, p)) return std::nullopt;
  return m;
}

ModelAlgebra universal_triple_any_branch(const ParameterTuple& p, const char* who) {
  if (auto m = universal_triple(p, false)) return *m;
  if (auto m = universal_triple(p, true)) {
    m->notes.push_back("plus root of psi^2 - alpha beta gamma used");
    return *m;
  }
  throw DegenerateParameters(std::string(who) + ": rank-one elimination failed at the tuple");
}

}  // namespace

ModelAlgebra s9_generators(const ParameterTuple& p) {
  if (!(p.alpha * p.beta * p.gamma == p.psi * p.psi) || p.psi.is_zero() ||
      p.alpha + p.beta + p.gamma == Scalar(2) * p.psi + Scalar(1))
    throw DegenerateParameters("s9_generators: tuple is not on the A9 locus");
  // On the A9 locus the elimination's quadratic has the double root
  // Y = psi/(alpha gamma), so the triple is rational in the parameters; the
  // closure comes out 6-dimensional (the radical of the universal algebra
  // has dimension 3) and the induced algebra is the S9 = H(M_3) real form.
  ModelAlgebra ambient = universal_triple_any_branch(p, "s9_generators");
  auto closure = ambient.algebra.subalgebra_closure(ambient.axes);
  if (closure.space.dim() != 6)
    throw DegenerateParameters("s9_generators: closure dimension " +
                               std::to_string(closure.space.dim()) + ", expected 6");
  ModelAlgebra m;
  m.algebra = closure.induced;
  m.provenance = Provenance::Universal;
  m.params = p;
  m.axis_names = {"a", "b", "c"};
  const Index d = closure.space.dim();
  Mat<Scalar> g(d, d);
  GramForm<Scalar> tform{*ambient.trace_gram, 1};
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      g(i, j) = tform.value(closure.space.basis_vector(i), closure.space.basis_vector(j));
  m.trace_gram = g;
  for (const Element& ax : ambient.axes) m.axes.push_back(*closure.space.coords_of(ax));
  if (Subspace<Scalar>::from_rows(kernel(g)).dim() != 0)
    throw DegenerateParameters("s9_generators: restricted trace form is degenerate");
  if (!model_params_match(m, p))
    throw DegenerateParameters("s9_generators: induced model failed to reproduce the tuple");
  m.notes.push_back("rank-one idempotent triple in M_3^+; closure is the 6-dimensional S9 model");
  return m;
}

ModelAlgebra realize_universal(const ParameterTuple& p) {
  const Scalar &alpha = p.alpha, &beta = p.beta, &gamma = p.gamma, &psi = p.psi;
  Scalar simple = (alpha + beta + gamma - Scalar(2) * psi - Scalar(1)) *
                  (alpha * beta * gamma - psi * psi);
  if (simple.is_zero())
    throw DegenerateParameters(
        "realize_universal: (alpha+beta+gamma-2psi-1)(alpha beta gamma - psi^2) = 0");
  ModelAlgebra m = universal_triple_any_branch(p, "realize_universal");
  if (m.algebra.subalgebra_closure(m.axes).space.dim() != 9)
    throw DegenerateParameters("realize_universal: closure dimension is not 9");
  return m;
}

ModelAlgebra jform2_realizing(const ParameterTuple& p) {
  const Scalar &alpha = p.alpha, &beta = p.beta, &gamma = p.gamma, &psi = p.psi;
  const Scalar quarter(1, 4);
  Mat<Scalar> phi(2, 2);
  Vec<Scalar> u(2), v(2), w(2);
  if (alpha.is_zero()) {
    // row A4: psi = 0, beta + gamma = 1, beta gamma != 0
    if (!psi.is_zero() || !(beta + gamma == Scalar(1)) || beta.is_zero() || gamma.is_zero())
      throw DegenerateParameters("jform2_realizing: tuple is not on the A4 locus");
    phi << Scalar(1), Scalar(0), Scalar(0), gamma - gamma * gamma;
    u << kHalf, Scalar(0);
    v = -u;
    w << gamma - kHalf, Scalar(1);
  } else {
    if (alpha == Scalar(1)) throw DegenerateParameters("jform2_realizing: alpha = 1");
    if (!(alpha + beta + gamma == Scalar(2) * psi + Scalar(1)))
      throw DegenerateParameters("jform2_realizing: alpha+beta+gamma = 2 psi + 1 must hold");
    Scalar aa = alpha - alpha * alpha;
    Scalar t = ((beta - kHalf) * kHalf - (alpha - kHalf) * (gamma - kHalf)) / aa;
    phi << Scalar(1), Scalar(0), Scalar(0), aa;
    u << kHalf, Scalar(0);
    v << alpha - kHalf, Scalar(1);
    w << gamma - kHalf, t;
    Scalar ww = w[0] * w[0] + aa * t * t;
    if (!(ww == quarter))
      throw DegenerateParameters("jform2_realizing: tuple is not on the A5 locus");
  }
  ModelAlgebra m = build_jform(phi, {u, v, w});
  m.params = p;
  m.axis_names = {"a", "b", "c"};
  return m;
}

ModelAlgebra jform2_two_axes(const Scalar& alpha) {
  if (alpha.is_zero() || alpha == Scalar(1))
    throw DegenerateParameters("jform2_two_axes: alpha must avoid {0, 1}");
  Scalar aa = alpha - alpha * alpha;
  Mat<Scalar> phi(2, 2);
  phi << Scalar(1), Scalar(0), Scalar(0), aa;
  Vec<Scalar> u(2), v(2);
  u << kHalf, Scalar(0);
  v << alpha - kHalf, Scalar(1);
  ModelAlgebra m = build_jform(phi, {u, v});
  m.axis_names = {"a", "b"};
  return m;
}

ModelAlgebra build_f_plus_jform2(const Scalar& gamma) {
  if (gamma.is_zero() || gamma == Scalar(1))
    throw DegenerateParameters("build_f_plus_jform2: gamma must avoid {0, 1}");
  Algebra alg = Algebra::zero_algebra({"e", "v1", "v2", "f"});
  Scalar gg = gamma - gamma * gamma;
  alg.set_product(0, 0, alg.basis_element(0));
  alg.set_product(0, 1, alg.basis_element(1));
  alg.set_product(0, 2, alg.basis_element(2));
  Vec<Scalar> p11 = alg.zero_element(), p22 = alg.zero_element();
  p11[0] = Scalar(1);
  p22[0] = gg;
  alg.set_product(1, 1, p11);
  alg.set_product(2, 2, p22);
  alg.set_product(3, 3, alg.basis_element(3));

  ModelAlgebra m;
  m.algebra = alg;
  m.provenance = Provenance::JForm;
  m.notes.push_back("direct sum F + JForm2; b is the isolated idempotent");
  Vec<Scalar> a = alg.zero_element(), b = alg.zero_element(), c = alg.zero_element();
  a[0] = kHalf;
  a[1] = kHalf;
  b[3] = Scalar(1);
  c[0] = kHalf;
  c[1] = gamma - kHalf;
  c[2] = Scalar(1);
  m.axes = {a, b, c};
  m.axis_names = {"a", "b", "c"};
  m.params = ParameterTuple{Scalar(0), Scalar(0), gamma, Scalar(0)};
  return m;
}

TwoGenAlgebra build_u2(const Scalar& alpha) {
  Algebra alg = Algebra::zero_algebra({"a", "b", "ab"});
  Vec<Scalar> a = alg.basis_element(0), b = alg.basis_element(1), ab = alg.basis_element(2);
  alg.set_product(0, 0, a);
  alg.set_product(1, 1, b);
  alg.set_product(0, 1, ab);
  alg.set_product(0, 2, kHalf * (alpha * a + ab));
  alg.set_product(1, 2, kHalf * (alpha * b + ab));
  alg.set_product(2, 2, alpha / Scalar(4) * (a + b + Scalar(2) * ab));
  return TwoGenAlgebra{std::move(alg), a, b};
}

std::array<Element, 9> universal_basis_elements(const Algebra& alg, const Element& a,
                                                const Element& b, const Element& c) {
  Element ab = alg.multiply(a, b);
  Element bc = alg.multiply(b, c);
  Element ac = alg.multiply(a, c);
  return {a, b, c, ab, bc, ac, alg.multiply(a, bc), alg.multiply(b, ac), alg.multiply(c, ab)};
}

}  // namespace axial
