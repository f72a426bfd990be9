#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "axial/rational.hpp"

namespace axial {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : FieldError {
  DivisionByZero() : FieldError("division by zero") {}
};
struct NestedRadical : FieldError {
  explicit NestedRadical(const std::string& what) : FieldError(what) {}
};
struct NegativeRadicand : FieldError {
  explicit NegativeRadicand(const std::string& what) : FieldError(what) {}
};
struct ScalarParseError : FieldError {
  explicit ScalarParseError(const std::string& what) : FieldError(what) {}
};

/// An element of Q adjoined finitely many real square roots of rationals.
///
/// Stored as a map radicand -> coefficient where every radicand is a
/// square-free positive integer (radicand 1 holds the rational part) and no
/// coefficient is zero.  Distinct square-free radicands are linearly
/// independent over Q, so this form is canonical: two Scalars are equal as
/// field elements iff their maps are equal.  All arithmetic is exact and
/// zero-testing is decidable.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) : Scalar(Rational(n)) {}  // NOLINT: implicit by design
  Scalar(long n) : Scalar(Rational(static_cast<long>(n))) {}
  Scalar(const Integer& n) : Scalar(Rational(n)) {}
  Scalar(const Rational& q) {  // NOLINT: implicit by design
    if (sgn(q) != 0) terms_.emplace(Integer(1), q);
  }
  Scalar(int num, int den) : Scalar(make_rational(num, den)) {}

  static Scalar sqrt_term(const Integer& squarefree_radicand, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  /// Rational part (coefficient of radicand 1).
  Rational rational_part() const;
  /// The value as a rational; throws NestedRadical if it has irrational terms.
  Rational as_rational() const;

  const std::map<Integer, Rational>& terms() const { return terms_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;

  static Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  void add_term(const Integer& radicand, const Rational& coeff);
  std::map<Integer, Rational> terms_;
};

/// Exact square root.  Requires a nonnegative rational argument (positive
/// root convention); an irrational argument raises NestedRadical.
Scalar sqrt(const Scalar& x);

std::string to_string(const Scalar& x);

/// Parses the scalar grammar used by the CLI and file formats:
/// INT, INT/INT, sqrt(RAT), +, -, *, /, parentheses.  The result is
/// canonical, so parse/print round-trips exactly.
Scalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// The multiquadratic tower Q(sqrt(d_1), ..., sqrt(d_k)) spanned by a set of
/// scalars: pairwise-coprime square-free radicands > 1, canonically sorted.
class FieldTower {
 public:
  FieldTower() = default;
  static FieldTower spanning(const std::vector<Scalar>& xs);

  const std::vector<Integer>& radicands() const { return radicands_; }
  bool contains(const Scalar& x) const;
  std::size_t degree_log2() const { return radicands_.size(); }

 private:
  std::vector<Integer> radicands_;
};

}  // namespace axial
