#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axial/io.hpp"
#include "testutil.hpp"

using namespace axial;
using testutil::S;

TEST_CASE("classification: fixed examples") {
  auto m1 = classify_parameters({Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
  REQUIRE(m1.rows == std::vector<Row>{Row::A1});
  CHECK(m1.quotient_dim == 1);
  CHECK(to_string(m1.iso) == "F");

  auto m3 = classify_parameters({Scalar(0), Scalar(0), Scalar(0), Scalar(0)});
  REQUIRE(m3.rows == std::vector<Row>{Row::A3});
  CHECK(m3.quotient_dim == 3);
  CHECK(to_string(m3.iso) == "F3");

  auto mg = classify_parameters(generic_witness());
  CHECK(mg.rows.empty());
  CHECK(mg.generic);
  CHECK(mg.quotient_dim == 9);
  CHECK(to_string(mg.iso) == "M3+");

  auto m5 = classify_parameters(witness_tuple(Row::A5));
  REQUIRE(m5.rows == std::vector<Row>{Row::A5});
  CHECK(to_string(m5.iso) == "JForm2");

  auto m6 = classify_parameters({Scalar(0), Scalar(0), S("1/2"), Scalar(0)});
  REQUIRE(m6.rows == std::vector<Row>{Row::A6});
  CHECK(m6.quotient_dim == 4);
  CHECK(to_string(m6.iso) == "F+JForm2");
}

TEST_CASE("non-generic tuples off the literal predicates match after relabeling") {
  // (0, 1, 0, 0) is (0, 0, 1, 0) with b and c swapped
  auto m = classify_parameters({Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  CHECK_FALSE(m.generic);
  REQUIRE(m.rows == std::vector<Row>{Row::A2});
  REQUIRE(m.permutation.has_value());
  REQUIRE(m.relabeled.has_value());
  CHECK(row_predicate(Row::A2, *m.relabeled));
}

TEST_CASE("iso class is invariant under generator relabelings") {
  testutil::Rng rng(41);
  std::vector<ParameterTuple> tuples;
  for (Row r : kAllRows) tuples.push_back(testutil::sample_row(r, rng));
  tuples.push_back(testutil::sample_generic(rng));
  constexpr std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  for (const auto& p : tuples) {
    IsoClass base = classify_parameters(p).iso;
    for (const auto& perm : perms) {
      auto value = [&](int i, int j) -> const Scalar& {
        if (i > j) std::swap(i, j);
        if (i == 0 && j == 1) return p.alpha;
        if (i == 1 && j == 2) return p.beta;
        return p.gamma;
      };
      ParameterTuple q{value(perm[0], perm[1]), value(perm[1], perm[2]),
                       value(perm[0], perm[2]), p.psi};
      CHECK(classify_parameters(q).iso == base);
    }
  }
}

TEST_CASE("radical expressions: counts and substitution examples") {
  for (Row r : kAllRows) {
    ParameterTuple p = witness_tuple(r);
    auto exprs = radical_expressions(r, p);
    CHECK(static_cast<int>(exprs.size()) + row_quotient_dim(r) == 9);
  }
  // row A9 at (4,1,1,2): first vector is -ab - 4ac + 4 a(bc)
  auto exprs = radical_expressions(Row::A9, witness_tuple(Row::A9));
  REQUIRE(exprs.size() == 3);
  Vec<Scalar> expect(9);
  expect.setConstant(Scalar(0));
  expect[3] = Scalar(-1);
  expect[5] = Scalar(-4);
  expect[6] = Scalar(4);
  CHECK(vec_equal(exprs[0].coeffs, expect));

  CHECK_THROWS_AS(radical_expressions(Row::A1, witness_tuple(Row::A3)), RowMismatch);
}

TEST_CASE("row verification at randomized admissible tuples") {
  testutil::Rng rng(123);
  for (Row r : kAllRows) {
    for (int i = 0; i < 3; ++i) {
      ParameterTuple p = testutil::sample_row(r, rng);
      RowVerification v = verify_row(r, p);
      INFO("row ", to_string(r), " alpha=", to_string(p.alpha), " beta=", to_string(p.beta),
           " gamma=", to_string(p.gamma), " psi=", to_string(p.psi));
      CHECK(v.ok());
    }
  }
}

TEST_CASE("table S7: the three suspect cells are exactly the sign-flipped ones") {
  testutil::Rng rng(77);
  for (int i = 0; i < 4; ++i) {
    ParameterTuple p = i == 0 ? witness_tuple(Row::A7) : testutil::sample_a7(rng, i == 1);
    TableReport rep = verify_multiplication_table(s7_generators(p), TableId::S7);
    CHECK(rep.cells.size() == 10);
    CHECK(rep.mismatches(false) == 0);
    int suspects_mismatched = 0;
    for (const auto& c : rep.cells) {
      if (c.known_suspect) {
        CHECK_FALSE(c.match);
        ++suspects_mismatched;
        // recomputed = printed with the 1/(2(alpha-1)) prefactor negated
        CHECK(vec_equal(c.recomputed_coeffs, Vec<Scalar>(-c.printed_coeffs)));
      } else {
        CHECK(c.match);
      }
    }
    CHECK(suspects_mismatched == 3);
  }
}

TEST_CASE("table S8: nineteen cells match, the two flagged cells recompute to a(bc)/2") {
  testutil::Rng rng(78);
  for (int i = 0; i < 4; ++i) {
    ParameterTuple p = i == 0 ? witness_tuple(Row::A8) : testutil::sample_a8(rng);
    TableReport rep = verify_multiplication_table(s8_generators(p.beta, p.gamma), TableId::S8);
    CHECK(rep.cells.size() == 21);
    CHECK(rep.mismatches(false) == 0);
    Vec<Scalar> half_abc(6);
    half_abc.setConstant(Scalar(0));
    half_abc[5] = S("1/2");
    for (const auto& c : rep.cells) {
      if (c.known_suspect) {
        CHECK_FALSE(c.match);
        CHECK(vec_equal(c.recomputed_coeffs, half_abc));
      } else {
        CHECK(c.match);
      }
    }
  }
}

TEST_CASE("the A9 triple (a, d, c) reproduces the S8 standard-basis table") {
  // Inside an A9 model, the derived axis d makes (a, d, c) a triple with
  // form values (0, (2psi - alpha gamma - beta)/(alpha - 1), gamma, 0), and
  // its multiplication table over {a, d, c, dc, ac, a(dc)} must behave
  // exactly like the S8 table, suspect cells included.
  testutil::Rng rng(86);
  for (int i = 0; i < 3; ++i) {
    ParameterTuple p = i == 0 ? witness_tuple(Row::A9) : testutil::sample_a9(rng);
    ModelAlgebra m = s9_generators(p);
    GramForm<Scalar> g = frobenius_form(m.algebra, testutil::distinct_axes(m));
    Element d = derived_axis(m.algebra, g, m.axes[0], m.axes[1]);
    Scalar beta8 = (Scalar(2) * p.psi - p.alpha * p.gamma - p.beta) / (p.alpha - Scalar(1));
    REQUIRE(g.value(m.axes[2], d) == beta8);
    ModelAlgebra as_s8;
    as_s8.algebra = m.algebra;
    as_s8.axes = {m.axes[0], d, m.axes[2]};
    as_s8.axis_names = {"a", "b", "c"};
    as_s8.params = ParameterTuple{Scalar(0), beta8, p.gamma, Scalar(0)};
    TableReport rep = verify_multiplication_table(as_s8, TableId::S8);
    CHECK(rep.mismatches(false) == 0);
    Vec<Scalar> half_abc(6);
    half_abc.setConstant(Scalar(0));
    half_abc[5] = testutil::S("1/2");
    for (const auto& c : rep.cells)
      if (c.known_suspect) CHECK(vec_equal(c.recomputed_coeffs, half_abc));
  }
}

TEST_CASE("generic verification and precondition errors") {
  testutil::Rng rng(55);
  CHECK(verify_generic(generic_witness()).ok());
  for (int i = 0; i < 3; ++i) CHECK(verify_generic(testutil::sample_generic(rng)).ok());
  CHECK_THROWS_AS(realize_universal(witness_tuple(Row::A5)), DegenerateParameters);
}

TEST_CASE("report JSON carries the contract fields") {
  RowVerification v = verify_row(Row::A7, witness_tuple(Row::A7));
  Json j = row_verification_to_json(v);
  CHECK(j.contains("params"));
  CHECK(j.contains("expression_residuals"));
  CHECK(j["quotient_dim"] == 4);
  CHECK(j["ok"] == true);

  TableReport rep =
      verify_multiplication_table(s7_generators(witness_tuple(Row::A7)), TableId::S7);
  Json tj = table_report_to_json(rep);
  CHECK(tj.contains("table_diffs"));
  CHECK(tj["unexpected_mismatches"] == 0);
}
