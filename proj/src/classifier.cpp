#include "axial/classifier.hpp"

#include <algorithm>
#include <functional>

namespace axial {

namespace {

const Scalar kHalf(1, 2);
const Scalar kQuarter(1, 4);

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

ParameterTuple permuted(const ParameterTuple& p, const std::array<int, 3>& perm) {
  auto value = [&](int i, int j) -> const Scalar& {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return p.alpha;
    if (i == 1 && j == 2) return p.beta;
    return p.gamma;
  };
  return ParameterTuple{value(perm[0], perm[1]), value(perm[1], perm[2]),
                        value(perm[0], perm[2]), p.psi};
}

std::string perm_name(const std::array<int, 3>& perm) {
  const char* names = "abc";
  return std::string() + names[perm[0]] + names[perm[1]] + names[perm[2]];
}

}  // namespace

std::string to_string(Row r) { return "A" + std::to_string(static_cast<int>(r) + 1); }

std::optional<Row> row_from_string(const std::string& s) {
  for (Row r : kAllRows)
    if (to_string(r) == s) return r;
  return std::nullopt;
}

std::string to_string(IsoClass c) {
  switch (c) {
    case IsoClass::F: return "F";
    case IsoClass::F2: return "F2";
    case IsoClass::F3: return "F3";
    case IsoClass::JForm2: return "JForm2";
    case IsoClass::FplusJForm2: return "F+JForm2";
    case IsoClass::M2plus: return "M2+";
    case IsoClass::HM3: return "H(M3)";
    case IsoClass::M3plus: return "M3+";
  }
  return "?";
}

bool row_predicate(Row r, const ParameterTuple& p) {
  const Scalar &a = p.alpha, &b = p.beta, &g = p.gamma, &s = p.psi;
  const Scalar one(1);
  Scalar sum = a + b + g;
  Scalar rel = Scalar(2) * s + one;
  switch (r) {
    case Row::A1: return s == one && a == one && b == one && g == one;
    case Row::A2: return s.is_zero() && a.is_zero() && b.is_zero() && g == one;
    case Row::A3: return s.is_zero() && a.is_zero() && b.is_zero() && g.is_zero();
    case Row::A4:
      return s.is_zero() && a.is_zero() && !b.is_zero() && !g.is_zero() && b + g == one;
    case Row::A5:
      return a * b * g == s * s && !s.is_zero() && !(a == one) && sum == rel;
    case Row::A6:
      return s.is_zero() && a.is_zero() && b.is_zero() && !g.is_zero() && !(g == one);
    case Row::A7: return !(s * s == a * b * g) && sum == rel && !(a == one);
    case Row::A8:
      return s.is_zero() && a.is_zero() && !b.is_zero() && !g.is_zero() && !(b + g == one);
    case Row::A9: return a * b * g == s * s && !s.is_zero() && !(sum == rel);
  }
  return false;
}

int row_quotient_dim(Row r) {
  static constexpr std::array<int, 9> dims = {1, 2, 3, 3, 3, 4, 4, 6, 6};
  return dims[static_cast<int>(r)];
}

IsoClass row_iso(Row r) {
  switch (r) {
    case Row::A1: return IsoClass::F;
    case Row::A2: return IsoClass::F2;
    case Row::A3: return IsoClass::F3;
    case Row::A4:
    case Row::A5: return IsoClass::JForm2;
    case Row::A6: return IsoClass::FplusJForm2;
    case Row::A7: return IsoClass::M2plus;
    case Row::A8:
    case Row::A9: return IsoClass::HM3;
  }
  return IsoClass::M3plus;
}

bool is_generic(const ParameterTuple& p) {
  Scalar v = (p.alpha + p.beta + p.gamma - Scalar(2) * p.psi - Scalar(1)) *
             (p.alpha * p.beta * p.gamma - p.psi * p.psi);
  return !v.is_zero();
}

RowMatch classify_parameters(const ParameterTuple& p) {
  RowMatch m;
  m.generic = is_generic(p);
  for (Row r : kAllRows)
    if (row_predicate(r, p)) m.rows.push_back(r);
  if (m.rows.empty() && !m.generic) {
    // Non-generic tuple outside every literal predicate: the row conditions
    // are written for a normalized labeling of (a, b, c), so search the S3
    // relabelings (psi is invariant under them).
    for (const auto& perm : kPerms) {
      ParameterTuple q = permuted(p, perm);
      std::vector<Row> found;
      for (Row r : kAllRows)
        if (row_predicate(r, q)) found.push_back(r);
      if (!found.empty()) {
        m.rows = std::move(found);
        m.permutation = perm_name(perm);
        m.relabeled = q;
        break;
      }
    }
  }
  if (!m.rows.empty()) {
    m.iso = row_iso(m.rows.front());
    m.quotient_dim = row_quotient_dim(m.rows.front());
  } else {
    m.iso = IsoClass::M3plus;
    m.quotient_dim = 9;
  }
  return m;
}

const std::array<std::string, 9> kUniversalBasisNames = {
    "a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)", "c(ab)"};

namespace {

Vec<Scalar> coeff_vec(std::initializer_list<std::pair<int, Scalar>> entries) {
  Vec<Scalar> v(9);
  v.setConstant(Scalar(0));
  for (const auto& [i, c] : entries) v[i] += c;
  return v;
}

std::string combo_name(const Vec<Scalar>& coeffs,
                       const std::array<std::string, 9>& names) {
  std::string out;
  for (Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::string cs = to_string(coeffs[i]);
    std::string piece;
    if (cs == "1") {
      piece = names[i];
    } else if (cs == "-1") {
      piece = "-" + names[i];
    } else {
      piece = cs + "*" + names[i];
    }
    if (!out.empty() && piece[0] != '-') out += "+";
    out += piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<NamedExpression> radical_expressions(Row r, const ParameterTuple& p) {
  if (!row_predicate(r, p))
    throw RowMismatch("radical_expressions: " + to_string(r) + " predicate fails at the tuple");
  const Scalar &a = p.alpha, &b = p.beta, &g = p.gamma, &s = p.psi;
  const Scalar one(1), two(2), four(4);
  // universal basis indices
  enum { A = 0, B = 1, C = 2, AB = 3, BC = 4, AC = 5, A_BC = 6, B_AC = 7, C_AB = 8 };
  std::vector<Vec<Scalar>> vs;
  switch (r) {
    case Row::A1:
      vs = {coeff_vec({{B, one}, {A, -one}}),    coeff_vec({{C, one}, {A, -one}}),
            coeff_vec({{AB, one}, {A, -one}}),   coeff_vec({{BC, one}, {A, -one}}),
            coeff_vec({{AC, one}, {A, -one}}),   coeff_vec({{A_BC, one}, {A, -one}}),
            coeff_vec({{B_AC, one}, {A, -one}}), coeff_vec({{C_AB, one}, {A, -one}})};
      break;
    case Row::A2:
      vs = {coeff_vec({{C, one}, {A, -one}}),  coeff_vec({{AB, one}}),
            coeff_vec({{BC, one}}),            coeff_vec({{AC, one}, {A, -one}}),
            coeff_vec({{A_BC, one}}),          coeff_vec({{B_AC, one}}),
            coeff_vec({{C_AB, one}})};
      break;
    case Row::A3:
      vs = {coeff_vec({{AB, one}}),   coeff_vec({{BC, one}}),   coeff_vec({{AC, one}}),
            coeff_vec({{A_BC, one}}), coeff_vec({{B_AC, one}}), coeff_vec({{C_AB, one}})};
      break;
    case Row::A4:
      vs = {coeff_vec({{AB, one}}),
            coeff_vec({{A, kHalf * g}, {B, -kHalf * b}, {C, -kHalf}, {BC, one}}),
            coeff_vec({{A, -kHalf * g}, {B, kHalf * b}, {C, -kHalf}, {AC, one}}),
            coeff_vec({{A, kQuarter * g}, {B, kQuarter * b}, {C, -kQuarter}, {A_BC, one}}),
            coeff_vec({{A, kQuarter * g}, {B, kQuarter * b}, {C, -kQuarter}, {B_AC, one}}),
            coeff_vec({{C_AB, one}})};
      break;
    case Row::A5:
      vs = {coeff_vec({{A, a * (b - one)},
                       {B, a * (g - one)},
                       {C, a * (one - a)},
                       {AB, two * a - two * s}}),
            coeff_vec({{B, a * b - a * s}, {AB, s - a * b}, {BC, a * a - a}}),
            coeff_vec({{A, a * g - a * s}, {AB, s - a * g}, {AC, a * a - a}}),
            coeff_vec({{A, a * s - a * a * b},
                       {AB, a + s - a * a - a * g},
                       {A_BC, two * a * (a - one)}}),
            coeff_vec({{B, a * (s - a * g)},
                       {AB, a + s - a * a - a * b},
                       {B_AC, two * a * (a - one)}}),
            coeff_vec({{A, s - a * b}, {B, s - a * g}, {AB, one - a}, {C_AB, two * (a - one)}})};
      break;
    case Row::A6:
      // Table 1 also prints "ac" here, but (ac, c) = (a, c^2) = gamma != 0
      // shows ac is not in the radical; the five entries below are the
      // radical basis (9 - dim(A/R) = 5).
      vs = {coeff_vec({{AB, one}}), coeff_vec({{BC, one}}), coeff_vec({{A_BC, one}}),
            coeff_vec({{B_AC, one}}), coeff_vec({{C_AB, one}})};
      break;
    case Row::A7:
      vs = {coeff_vec({{A, kHalf * (b - one)},
                       {B, kHalf * (b - a)},
                       {C, kHalf * (one - a)},
                       {AB, one - b},
                       {BC, a - one}}),
            coeff_vec({{A, kHalf * (g - a)},
                       {B, kHalf * (g - one)},
                       {C, kHalf * (one - a)},
                       {AB, one - g},
                       {AC, a - one}}),
            coeff_vec({{A, two * s - two * a * b + b - one},
                       {B, g - one},
                       {C, one - a},
                       {AB, four - two * a - two * g},
                       {A_BC, four * a - four}}),
            coeff_vec({{A, b - one},
                       {B, two * s - two * a * g + g - one},
                       {C, one - a},
                       {AB, four - two * a - two * b},
                       {B_AC, four * a - four}}),
            coeff_vec({{A, s - a},
                       {B, s - a},
                       {C, a * (one - a)},
                       {AB, two - b - g},
                       {C_AB, two * a - two}})};
      break;
    case Row::A8:
      vs = {coeff_vec({{AB, one}}), coeff_vec({{B_AC, one}, {A_BC, -one}}),
            coeff_vec({{C_AB, one}})};
      break;
    case Row::A9:
      vs = {coeff_vec({{AB, -b * g}, {AC, -a * b}, {A_BC, two * s}}),
            coeff_vec({{AB, -b * g}, {BC, -a * g}, {B_AC, two * s}}),
            coeff_vec({{BC, -a * g}, {AC, -a * b}, {C_AB, two * s}})};
      break;
  }
  std::vector<NamedExpression> out;
  for (auto& v : vs) {
    NamedExpression e;
    e.name = combo_name(v, kUniversalBasisNames);
    e.coeffs = std::move(v);
    out.push_back(std::move(e));
  }
  return out;
}

Element evaluate_expression(const NamedExpression& e, const std::array<Element, 9>& basis) {
  Element out = basis[0];
  out.setConstant(Scalar(0));
  for (Index i = 0; i < 9; ++i) {
    if (e.coeffs[i].is_zero()) continue;
    out += e.coeffs[i] * basis[i];
  }
  return out;
}

ModelAlgebra build_row_model(Row r, const ParameterTuple& p, Branch branch) {
  switch (r) {
    case Row::A1: {
      ModelAlgebra m = build_Fn(1);
      Element a = m.axes[0];
      m.axes = {a, a, a};
      m.axis_names = {"a", "b", "c"};
      m.params = p;
      return m;
    }
    case Row::A2: {
      ModelAlgebra m = build_Fn(2);
      Element a = m.axes[0], b = m.axes[1];
      m.axes = {a, b, a};  // (a, c) = 1 forces c = a in the semisimple quotient
      m.axis_names = {"a", "b", "c"};
      m.params = p;
      return m;
    }
    case Row::A3: {
      ModelAlgebra m = build_Fn(3);
      m.axis_names = {"a", "b", "c"};
      m.params = p;
      return m;
    }
    case Row::A4:
    case Row::A5: return jform2_realizing(p);
    case Row::A6: return build_f_plus_jform2(p.gamma);
    case Row::A7: return s7_generators(p, branch);
    case Row::A8: return s8_generators(p.beta, p.gamma);
    case Row::A9: return s9_generators(p);
  }
  throw ModelUnrealizable("unknown row");
}

RowVerification verify_row(Row r, const ParameterTuple& p, Branch branch) {
  if (!row_predicate(r, p))
    throw RowMismatch("verify_row: " + to_string(r) + " predicate fails at the tuple");
  RowVerification v;
  v.row = r;
  v.params = p;
  v.iso = row_iso(r);
  v.expected_dim = row_quotient_dim(r);

  ModelAlgebra model;
  try {
    model = build_row_model(r, p, branch);
  } catch (const ModelError& e) {
    throw ModelUnrealizable(e.what());
  } catch (const FieldError& e) {
    throw ModelUnrealizable(e.what());
  }
  v.notes = model.notes;
  v.model_dim = model.algebra.dim();
  v.dim_ok = v.model_dim == v.expected_dim;

  const Element &a = model.axes[0], &b = model.axes[1], &c = model.axes[2];
  std::vector<Element> distinct;
  for (const Element& x : model.axes) {
    bool seen = false;
    for (const Element& y : distinct) seen = seen || vec_equal(x, y);
    if (!seen) distinct.push_back(x);
  }
  GramForm<Scalar> g = frobenius_form(model.algebra, distinct);
  v.params_reproduced = g.value(a, b) == p.alpha && g.value(b, c) == p.beta &&
                        g.value(a, c) == p.gamma &&
                        g.value(model.algebra.multiply(a, b), c) == p.psi;

  auto basis = universal_basis_elements(model.algebra, a, b, c);
  for (const auto& expr : radical_expressions(r, p)) {
    Element res = evaluate_expression(expr, basis);
    bool zero = vec_is_zero(res);
    v.residuals.push_back({expr.name, std::move(res), zero});
  }
  v.radical_dim = radical(model.algebra, g).dim();
  return v;
}

GenericVerification verify_generic(const ParameterTuple& p) {
  GenericVerification v;
  v.params = p;
  ModelAlgebra model = realize_universal(p);
  v.closure_dim = model.algebra.subalgebra_closure(model.axes).space.dim();
  GramForm<Scalar> g = frobenius_form(model.algebra, model.axes);
  v.radical_dim = radical(model.algebra, g).dim();
  const Element &a = model.axes[0], &b = model.axes[1], &c = model.axes[2];
  v.params_reproduced = g.value(a, b) == p.alpha && g.value(b, c) == p.beta &&
                        g.value(a, c) == p.gamma &&
                        g.value(model.algebra.multiply(a, b), c) == p.psi;
  return v;
}

namespace {

struct CellTemplate {
  int row, col;             // indices into the table basis
  Vec<Scalar> printed;      // printed entry over the table basis
  bool known_suspect;
};

Vec<Scalar> tb(std::initializer_list<std::pair<int, Scalar>> entries, int dim) {
  Vec<Scalar> v(dim);
  v.setConstant(Scalar(0));
  for (const auto& [i, c] : entries) v[i] += c;
  return v;
}

// Table of products for the S7 basis (a, b, c, ab).  The three cells with
// the 1/(2(alpha-1)) prefactor are printed with the sign opposite to what
// the row-A7 radical expressions force; they are carried verbatim and
// flagged as suspects so the recomputation reports both values.
std::vector<CellTemplate> s7_cells(const ParameterTuple& p) {
  const Scalar &al = p.alpha, &b = p.beta, &g = p.gamma, &s = p.psi;
  const Scalar one(1), two(2);
  Scalar d = one / (two * (al - one));
  std::vector<CellTemplate> cells;
  auto add = [&](int r, int c, Vec<Scalar> v, bool suspect = false) {
    cells.push_back({r, c, std::move(v), suspect});
  };
  add(0, 0, tb({{0, one}}, 4));
  add(1, 0, tb({{3, one}}, 4));
  add(1, 1, tb({{1, one}}, 4));
  add(2, 0, tb({{0, d * (g - al)}, {1, d * (g - one)}, {2, d * (one - al)}, {3, d * two * (one - g)}}, 4),
      true);
  add(2, 1, tb({{0, d * (b - one)}, {1, d * (b - al)}, {2, d * (one - al)}, {3, d * two * (one - b)}}, 4),
      true);
  add(2, 2, tb({{2, one}}, 4));
  add(3, 0, tb({{0, kHalf * al}, {3, kHalf}}, 4));
  add(3, 1, tb({{1, kHalf * al}, {3, kHalf}}, 4));
  add(3, 2, tb({{0, d * (s - al)}, {1, d * (s - al)}, {2, d * (al - al * al)}, {3, d * (two - b - g)}}, 4),
      true);
  add(3, 3, tb({{0, kQuarter * al}, {1, kQuarter * al}, {3, kHalf * al}}, 4));
  return cells;
}

// Table of products for the S8 basis (a, b, c, bc, ac, a(bc)).  Two cells
// are carried verbatim but flagged: (a(bc), a) prints 0 while a(bc) lies in
// the half-eigenspace of a, and (a(bc), b) prints a spurious beta/4 ac term
// (a(bc) = b(ac) lies in the half-eigenspace of b as well, so both products
// recompute to 1/2 a(bc)).
std::vector<CellTemplate> s8_cells(const ParameterTuple& p) {
  const Scalar &b = p.beta, &g = p.gamma;
  const Scalar one(1), two(2);
  const Scalar e8 = Scalar(1, 8), e16 = Scalar(1, 16);
  std::vector<CellTemplate> cells;
  auto add = [&](int r, int c, Vec<Scalar> v, bool suspect = false) {
    cells.push_back({r, c, std::move(v), suspect});
  };
  add(0, 0, tb({{0, one}}, 6));
  add(1, 0, tb({}, 6));
  add(1, 1, tb({{1, one}}, 6));
  add(2, 0, tb({{4, one}}, 6));
  add(2, 1, tb({{3, one}}, 6));
  add(2, 2, tb({{2, one}}, 6));
  add(3, 0, tb({{5, one}}, 6));
  add(3, 1, tb({{1, kHalf * b}, {3, kHalf}}, 6));
  add(3, 2, tb({{2, kHalf * b}, {3, kHalf}}, 6));
  add(3, 3, tb({{1, kQuarter * b}, {2, kQuarter * b}, {3, kHalf * b}}, 6));
  add(4, 0, tb({{0, kHalf * g}, {4, kHalf}}, 6));
  add(4, 1, tb({{5, one}}, 6));
  add(4, 2, tb({{2, kHalf * g}, {4, kHalf}}, 6));
  add(4, 3, tb({{3, kQuarter * g}, {4, kQuarter * b}, {5, kHalf}}, 6));
  add(4, 4, tb({{0, kQuarter * g}, {2, kQuarter * g}, {4, kHalf * g}}, 6));
  add(5, 0, tb({}, 6), true);
  add(5, 1, tb({{4, kQuarter * b}, {5, kHalf}}, 6), true);
  add(5, 2, tb({{3, kQuarter * g}, {4, kQuarter * b}}, 6));
  add(5, 3, tb({{1, e8 * b * g}, {4, e8 * b}, {5, kQuarter * b}}, 6));
  add(5, 4, tb({{0, e8 * b * g}, {3, e8 * g}, {5, kQuarter * g}}, 6));
  add(5, 5, tb({{0, e16 * b * g}, {1, e16 * b * g}}, 6));
  return cells;
}

}  // namespace

TableReport verify_multiplication_table(const ModelAlgebra& model, TableId table) {
  if (!model.params) throw CheckFailed("table verification requires a parametrized model");
  const ParameterTuple& p = *model.params;
  const Element &a = model.axes[0], &b = model.axes[1], &c = model.axes[2];
  const Algebra& alg = model.algebra;

  std::vector<Element> basis;
  std::vector<std::string> names;
  std::vector<CellTemplate> cells;
  if (table == TableId::S7) {
    basis = {a, b, c, alg.multiply(a, b)};
    names = {"a", "b", "c", "ab"};
    cells = s7_cells(p);
  } else {
    Element bc = alg.multiply(b, c), ac = alg.multiply(a, c);
    basis = {a, b, c, bc, ac, alg.multiply(a, bc)};
    names = {"a", "b", "c", "bc", "ac", "a(bc)"};
    cells = s8_cells(p);
  }
  const Index d = static_cast<Index>(basis.size());
  Mat<Scalar> t(d, alg.dim());
  for (Index i = 0; i < d; ++i) t.row(i) = basis[i].transpose();
  if (rank(t) != d) throw CheckFailed("table basis is linearly dependent in the model");
  Mat<Scalar> tt = t.transpose();

  std::array<std::string, 9> padded_names{};
  for (Index i = 0; i < d; ++i) padded_names[i] = names[i];
  auto fmt = [&](const Vec<Scalar>& v) {
    Vec<Scalar> v9(9);
    v9.setConstant(Scalar(0));
    for (Index i = 0; i < d; ++i) v9[i] = v[i];
    return combo_name(v9, padded_names);
  };

  TableReport rep;
  rep.table = table;
  rep.params = p;
  for (const auto& cell : cells) {
    Element prod = alg.multiply(basis[cell.row], basis[cell.col]);
    auto coords = solve<Scalar>(tt, prod);
    if (!coords) throw CheckFailed("product left the table basis span");
    CellDiff diff;
    diff.row_label = names[cell.row];
    diff.col_label = names[cell.col];
    diff.printed = fmt(cell.printed);
    diff.recomputed = fmt(*coords);
    diff.printed_coeffs = cell.printed;
    diff.recomputed_coeffs = *coords;
    diff.match = vec_equal(*coords, cell.printed);
    diff.known_suspect = cell.known_suspect;
    rep.cells.push_back(std::move(diff));
  }
  return rep;
}

ParameterTuple witness_tuple(Row r) {
  switch (r) {
    case Row::A1: return {Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
    case Row::A2: return {Scalar(0), Scalar(0), Scalar(1), Scalar(0)};
    case Row::A3: return {Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    case Row::A4: return {Scalar(0), Scalar(1, 3), Scalar(2, 3), Scalar(0)};
    case Row::A5: return {Scalar(1, 3), Scalar(1, 3), Scalar(1, 9), Scalar(-1, 9)};
    case Row::A6: return {Scalar(0), Scalar(0), Scalar(1, 2), Scalar(0)};
    case Row::A7: return {Scalar(0), Scalar(1, 2), Scalar(3, 2), Scalar(1, 2)};
    case Row::A8: return {Scalar(0), Scalar(1, 8), Scalar(3, 4), Scalar(0)};
    case Row::A9: return {Scalar(4), Scalar(1), Scalar(1), Scalar(2)};
  }
  return {};
}

ParameterTuple generic_witness() { return {Scalar(1, 2), Scalar(2), Scalar(2), Scalar(3, 2)}; }

}  // namespace axial
