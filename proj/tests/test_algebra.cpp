#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axial/io.hpp"
#include "testutil.hpp"

using namespace axial;
using testutil::S;

TEST_CASE("multiply is the bilinear symmetric extension") {
  ModelAlgebra f2 = build_Fn(2);
  Element a = f2.axes[0], b = f2.axes[1];
  CHECK(vec_is_zero(f2.algebra.multiply(a, b)));
  CHECK(vec_equal(f2.algebra.multiply(a, a), a));

  ModelAlgebra m2 = build_matrix_jordan(2);
  const Algebra& alg = m2.algebra;
  // E11 o E12 = 1/2 E12
  Element e11 = alg.basis_element(0), e12 = alg.basis_element(1);
  CHECK(vec_equal(alg.multiply(e11, e12), Element(S("1/2") * e12)));
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j)
      CHECK(vec_equal(alg.basis_product(i, j), alg.basis_product(j, i)));

  Element wrong(3);
  wrong.setConstant(Scalar(0));
  CHECK_THROWS_AS(alg.multiply(e11, wrong), DimensionMismatch);
}

TEST_CASE("ad eigenspaces recheck and span for a matrix axis") {
  ModelAlgebra m2 = build_matrix_jordan(2);
  const Algebra& alg = m2.algebra;
  Element e11 = alg.basis_element(0);
  auto half = alg.ad_eigenspace(e11, S("1/2"));
  CHECK(half.dim() == 2);  // span{E12, E21}
  auto one = alg.ad_eigenspace(e11, Scalar(1));
  CHECK(one.dim() == 1);
  auto zero = alg.ad_eigenspace(e11, Scalar(0));
  CHECK(zero.dim() == 1);
  for (const auto* sp : {&half, &one, &zero}) {
    for (Index i = 0; i < sp->dim(); ++i) {
      Element u = sp->basis_vector(i);
      Element au = alg.multiply(e11, u);
      Scalar lam = sp == &half ? S("1/2") : (sp == &one ? Scalar(1) : Scalar(0));
      CHECK(vec_equal(au, Element(lam * u)));
    }
  }
  // ad_0 at lambda = 0 is the whole space
  CHECK(alg.ad_eigenspace(alg.zero_element(), Scalar(0)).dim() == alg.dim());
}

TEST_CASE("subalgebra closure: expected dimensions") {
  ModelAlgebra m2 = build_matrix_jordan(2);
  auto c1 = m2.algebra.subalgebra_closure({m2.algebra.basis_element(0), m2.algebra.basis_element(3)});
  CHECK(c1.space.dim() == 2);  // orthogonal idempotents

  ModelAlgebra s7 = s7_generators(witness_tuple(Row::A7));
  auto c2 = s7.algebra.subalgebra_closure(s7.axes);
  CHECK(c2.space.dim() == 4);

  ModelAlgebra s8 = s8_generators(witness_tuple(Row::A8).beta, witness_tuple(Row::A8).gamma);
  auto c3 = s8.algebra.subalgebra_closure(s8.axes);
  CHECK(c3.space.dim() == 6);

  // closure is idempotent and monotone
  std::vector<Element> basis2;
  for (Index i = 0; i < c2.space.dim(); ++i) basis2.push_back(c2.space.basis_vector(i));
  auto again = s7.algebra.subalgebra_closure(basis2);
  CHECK(again.space == c2.space);
  auto smaller = s7.algebra.subalgebra_closure({s7.axes[0], s7.axes[1]});
  for (Index i = 0; i < smaller.space.dim(); ++i)
    CHECK(c2.space.contains(smaller.space.basis_vector(i)));

  // induced algebra multiplies consistently with the ambient
  for (Index i = 0; i < c3.induced.dim(); ++i)
    for (Index j = 0; j < c3.induced.dim(); ++j) {
      Element ambient_prod =
          s8.algebra.multiply(c3.space.basis_vector(i), c3.space.basis_vector(j));
      auto coords = c3.space.coords_of(ambient_prod);
      REQUIRE(coords.has_value());
      CHECK(vec_equal(*coords, c3.induced.basis_product(i, j)));
    }
}

TEST_CASE("ideal closure: worked examples") {
  ModelAlgebra f3 = build_Fn(3);
  CHECK(f3.algebra.ideal_closure({f3.algebra.zero_element()}).dim() == 0);
  CHECK(f3.algebra.ideal_closure({f3.algebra.basis_element(0)}).dim() == 1);

  // two-generated case 5: closure of the form kernel has dimension 2
  TwoGenAlgebra u2 = build_u2(Scalar(1));
  GramForm<Scalar> g = frobenius_form(u2.algebra, {u2.a, u2.b});
  auto rad = radical(u2.algebra, g);
  CHECK(rad.dim() == 2);
  CHECK(u2.algebra.ideal_closure({rad.basis_vector(0), rad.basis_vector(1)}) == rad);
}

TEST_CASE("quotient: homomorphism property and worked examples") {
  ModelAlgebra f3 = build_Fn(3);
  auto trivial = f3.algebra.quotient(Subspace<Scalar>::zero(3));
  CHECK(trivial.algebra.dim() == 3);

  // two-generated case 4 modulo its radical is F + F
  TwoGenAlgebra u2 = build_u2(Scalar(0));
  GramForm<Scalar> g = frobenius_form(u2.algebra, {u2.a, u2.b});
  auto rad = radical(u2.algebra, g);
  CHECK(rad.dim() == 1);
  auto quo = u2.algebra.quotient(rad);
  CHECK(quo.algebra.dim() == 2);
  Element qa = quo.projection * u2.a, qb = quo.projection * u2.b;
  CHECK(vec_is_zero(quo.algebra.multiply(qa, qb)));
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      Element lhs = quo.projection * u2.algebra.basis_product(i, j);
      Element rhs = quo.algebra.multiply(quo.projection * u2.algebra.basis_element(i),
                                         quo.projection * u2.algebra.basis_element(j));
      CHECK(vec_equal(lhs, rhs));
    }

  // non-ideals are rejected
  Mat<Scalar> line(1, 3);
  line << Scalar(1), Scalar(0), Scalar(0);
  CHECK_THROWS_AS(u2.algebra.quotient(Subspace<Scalar>::from_rows(line)), NotAnIdeal);
}

TEST_CASE("eigenspace dimensions sum to the algebra dimension for axes") {
  for (const auto& m : testutil::model_zoo()) {
    for (const auto& a : testutil::distinct_axes(m)) {
      Index total = m.algebra.ad_eigenspace(a, Scalar(0)).dim() +
                    m.algebra.ad_eigenspace(a, Scalar(1)).dim() +
                    m.algebra.ad_eigenspace(a, S("1/2")).dim();
      CHECK(total == m.algebra.dim());
    }
  }
}

TEST_CASE("algebra JSON round-trips and validates commutativity") {
  ModelAlgebra s8 = s8_generators(witness_tuple(Row::A8).beta, witness_tuple(Row::A8).gamma);
  Json j = algebra_to_json(s8.algebra);
  Algebra back = algebra_from_json(j);
  CHECK(back.dim() == s8.algebra.dim());
  CHECK(back.labels() == s8.algebra.labels());
  for (Index i = 0; i < back.dim(); ++i)
    for (Index k = 0; k < back.dim(); ++k)
      CHECK(vec_equal(back.basis_product(i, k), s8.algebra.basis_product(i, k)));

  Json bad = j;
  bad["sc"][0][1][0] = "1/3";  // break sc[0][1] != sc[1][0]
  CHECK_THROWS_AS(algebra_from_json(bad), AlgebraError);
}

TEST_CASE("change of basis preserves products") {
  testutil::Rng rng(11);
  TwoGenAlgebra u2 = build_u2(S("1/3"));
  Mat<Scalar> t = testutil::random_invertible(rng, 3);
  Algebra conj = change_basis(u2.algebra, t, {"x", "y", "z"});
  Mat<Scalar> tt = t.transpose();
  auto coords = [&](const Element& v) { return *solve<Scalar>(tt, v); };
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      Element xi = t.row(i).transpose(), xj = t.row(j).transpose();
      CHECK(vec_equal(conj.basis_product(i, j), coords(u2.algebra.multiply(xi, xj))));
    }
}
