#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "axial/classifier.hpp"

namespace axial::testutil {

inline Scalar S(const char* text) { return parse_scalar(text); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  Rational rational(long num_range = 6, long den_max = 5) {
    long num = integer(-num_range, num_range);
    long den = integer(1, den_max);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(long num_range = 6, long den_max = 5) {
    for (;;) {
      Rational q = rational(num_range, den_max);
      if (sgn(q) != 0) return q;
    }
  }

  // A rational strictly between 0 and 1.
  Rational unit_interval() {
    long den = integer(2, 9);
    long num = integer(1, den - 1);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::mt19937_64& gen() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Rational point on the circle |v| = 1/2 (tangent half-angle).
inline Vec<Scalar> circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  Vec<Scalar> v(2);
  v << Scalar(Rational(1 - t * t) / (2 * d)), Scalar(t / d);
  return v;
}

inline ParameterTuple sample_a4(Rng& rng) {
  for (;;) {
    Scalar beta(rng.nonzero_rational());
    Scalar gamma = Scalar(1) - beta;
    ParameterTuple p{Scalar(0), beta, gamma, Scalar(0)};
    if (row_predicate(Row::A4, p)) return p;
  }
}

// A5 tuples, two interleaved modes.  Mode 0: form values of three axes of
// JForm_2 sampled on the rational circle (alpha, beta, gamma all in [0, 1]).
// Mode 1: beta, gamma are squared circle-cosines, so that the psi-quadratic
// psi = beta gamma +- sqrt(beta gamma (1-beta)(1-gamma)) has rational roots
// and alpha = 2 psi + 1 - beta - gamma ranges outside [0, 1] as well.
inline ParameterTuple sample_a5(Rng& rng) {
  for (;;) {
    if (rng.integer(0, 1) == 0) {
      Rational t1 = rng.rational(4, 4), t2 = rng.rational(4, 4), t3 = rng.rational(4, 4);
      if (t1 == t2 || t2 == t3 || t1 == t3) continue;
      Vec<Scalar> v1 = circle_point(t1), v2 = circle_point(t2), v3 = circle_point(t3);
      auto pair = [&](const Vec<Scalar>& x, const Vec<Scalar>& y) {
        return Scalar(Rational(1, 2)) + Scalar(2) * (x[0] * y[0] + x[1] * y[1]);
      };
      Scalar alpha = pair(v1, v2), beta = pair(v2, v3), gamma = pair(v1, v3);
      Scalar psi = (alpha + beta + gamma - Scalar(1)) / Scalar(2);
      ParameterTuple p{alpha, beta, gamma, psi};
      if (row_predicate(Row::A5, p)) return p;
    } else {
      Rational t = rng.rational(4, 4), s = rng.rational(4, 4);
      Vec<Scalar> vt = circle_point(t), vs = circle_point(s);
      Scalar beta = Scalar(4) * vt[0] * vt[0], gamma = Scalar(4) * vs[0] * vs[0];
      Scalar root = Scalar(4) * vt[0] * vs[0] * vt[1] * vs[1] * Scalar(4);
      Scalar psi = rng.integer(0, 1) ? beta * gamma + root : beta * gamma - root;
      Scalar alpha = Scalar(2) * psi + Scalar(1) - beta - gamma;
      ParameterTuple p{alpha, beta, gamma, psi};
      if (row_predicate(Row::A5, p)) return p;
    }
  }
}

inline ParameterTuple sample_a6(Rng& rng) {
  for (;;) {
    Scalar gamma(rng.nonzero_rational());
    ParameterTuple p{Scalar(0), Scalar(0), gamma, Scalar(0)};
    if (row_predicate(Row::A6, p)) return p;
  }
}

// A7 tuples come from the matrix side: random nonzero lambdas realize an
// admissible tuple with a rational branch root.
inline ParameterTuple sample_a7(Rng& rng, bool force_alpha_zero = false) {
  for (;;) {
    Scalar lc(rng.nonzero_rational(4, 4));
    Scalar lb(rng.nonzero_rational(4, 4));
    Scalar la(rng.nonzero_rational(4, 4));
    if (force_alpha_zero) lc = Scalar(1) + lb;
    Scalar alpha = Scalar(1) - lc + lb;
    Scalar beta = Scalar(1) + la * lb;
    Scalar gamma = (Scalar(1) - lc) * (Scalar(1) + la * lc);
    Scalar psi = (alpha + beta + gamma - Scalar(1)) / Scalar(2);
    ParameterTuple p{alpha, beta, gamma, psi};
    if (row_predicate(Row::A7, p)) return p;
  }
}

inline ParameterTuple sample_a8(Rng& rng) {
  for (;;) {
    Rational g = rng.unit_interval();
    Rational bmax = 1 - g;
    Rational b = rng.unit_interval() * bmax;
    ParameterTuple p{Scalar(0), Scalar(b), Scalar(g), Scalar(0)};
    if (sgn(b) != 0 && row_predicate(Row::A8, p)) return p;
  }
}

inline ParameterTuple sample_a9(Rng& rng) {
  for (;;) {
    Scalar psi(rng.nonzero_rational(4, 4));
    Scalar beta(rng.nonzero_rational(4, 4));
    Scalar gamma(rng.nonzero_rational(4, 4));
    Scalar alpha = psi * psi / (beta * gamma);
    ParameterTuple p{alpha, beta, gamma, psi};
    if (!row_predicate(Row::A9, p)) continue;
    if (alpha == Scalar(1)) continue;
    // keep the derived-axis switch unobstructed: (c, d) != 0
    if ((Scalar(2) * psi - beta - alpha * gamma).is_zero()) continue;
    return p;
  }
}

// Simple-regime tuples with a rational branch root: gamma is solved from
// psi^2 - k^2 = alpha beta gamma.
inline ParameterTuple sample_generic(Rng& rng) {
  for (;;) {
    Scalar alpha(rng.nonzero_rational(4, 3));
    Scalar beta(rng.nonzero_rational(4, 3));
    Scalar psi(rng.rational(4, 3));
    Scalar k(rng.nonzero_rational(4, 3));
    Scalar gamma = (psi * psi - k * k) / (alpha * beta);
    ParameterTuple p{alpha, beta, gamma, psi};
    if (is_generic(p)) return p;
  }
}

inline ParameterTuple sample_row(Row r, Rng& rng) {
  switch (r) {
    case Row::A1:
    case Row::A2:
    case Row::A3: return witness_tuple(r);  // zero-dimensional loci
    case Row::A4: return sample_a4(rng);
    case Row::A5: return sample_a5(rng);
    case Row::A6: return sample_a6(rng);
    case Row::A7: return sample_a7(rng);
    case Row::A8: return sample_a8(rng);
    case Row::A9: return sample_a9(rng);
  }
  return witness_tuple(r);
}

inline std::vector<Element> distinct_axes(const ModelAlgebra& m) {
  std::vector<Element> out;
  for (const Element& x : m.axes) {
    bool seen = false;
    for (const Element& y : out) seen = seen || vec_equal(x, y);
    if (!seen) out.push_back(x);
  }
  return out;
}

/// The standard model zoo: every classification member together with its
/// designated generating axes.
inline std::vector<ModelAlgebra> model_zoo() {
  std::vector<ModelAlgebra> zoo;
  zoo.push_back(build_Fn(1));
  zoo.push_back(build_Fn(2));
  zoo.push_back(build_Fn(3));
  zoo.push_back(jform2_realizing(witness_tuple(Row::A5)));
  zoo.push_back(jform2_realizing(witness_tuple(Row::A4)));
  zoo.push_back(build_f_plus_jform2(witness_tuple(Row::A6).gamma));
  zoo.push_back(s7_generators(witness_tuple(Row::A7)));
  zoo.push_back(s8_generators(witness_tuple(Row::A8).beta, witness_tuple(Row::A8).gamma));
  zoo.push_back(s9_generators(witness_tuple(Row::A9)));
  zoo.push_back(realize_universal(generic_witness()));
  return zoo;
}

// Random invertible basis change: a product of unitriangular shears and a
// permutation, so the determinant is +-1 by construction.
inline Mat<Scalar> random_invertible(Rng& rng, Index n) {
  Mat<Scalar> t(n, n);
  t.setConstant(Scalar(0));
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng.gen());
  for (Index i = 0; i < n; ++i) t(i, perm[i]) = Scalar(1);
  for (int k = 0; k < 2 * n; ++k) {
    Index i = rng.integer(0, n - 1), j = rng.integer(0, n - 1);
    if (i == j) continue;
    Scalar c(rng.rational(3, 3));
    t.row(i) += c * t.row(j);
  }
  return t;
}

}  // namespace axial::testutil
