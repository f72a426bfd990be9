#include "axial/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace axial {

void square_free_decompose(const Integer& n, Integer& s, Integer& m) {
  if (sgn(n) <= 0) throw NegativeRadicand("square_free_decompose expects n > 0");
  s = 1;
  m = 1;
  Integer cur = n;
  Integer d = 2;
  // Trial division; d is prime whenever it divides cur because smaller
  // factors have been removed.
  const Integer limit(1 << 20);
  while (d * d <= cur && d <= limit) {
    if (mpz_divisible_p(cur.get_mpz_t(), d.get_mpz_t())) {
      unsigned long e = 0;
      while (mpz_divisible_p(cur.get_mpz_t(), d.get_mpz_t())) {
        cur /= d;
        ++e;
      }
      Integer dp;
      mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), e / 2);
      s *= dp;
      if (e % 2 == 1) m *= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (cur > 1) {
    if (mpz_perfect_square_p(cur.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), cur.get_mpz_t());
      s *= r;
    } else {
      // Either prime or a composite with all factors beyond the trial bound;
      // the cofactor is taken square-free (any square factor would exceed
      // 2^40, far past the magnitudes this workbench produces).
      m *= cur;
    }
  }
}

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(q.get_den().get_mpz_t());
}

Scalar Scalar::sqrt_term(const Integer& radicand, const Rational& coeff) {
  Scalar s;
  s.add_term(radicand, coeff);
  return s;
}

Rational Scalar::rational_part() const {
  auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Scalar::as_rational() const {
  if (!is_rational()) throw NestedRadical("scalar is irrational: " + to_string(*this));
  return rational_part();
}

void Scalar::add_term(const Integer& radicand, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) {
      // sqrt(m1)*sqrt(m2) = g*sqrt(m1*m2/g^2) with g = gcd(m1, m2); the new
      // radicand is square-free because m1, m2 are.
      Integer g;
      mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
      Integer m = (m1 / g) * (m2 / g);
      r.add_term(m, c1 * c2 * Rational(g));
    }
  }
  return r;
}

namespace {

Integer smallest_prime_factor(const Integer& n) {
  Integer d = 2;
  while (d * d <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return d;
    d += (d == 2) ? 1 : 2;
  }
  return n;
}

}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Scalar(Rational(1) / rational_part());
  // Split x = a + b*sqrt(p) along a prime p dividing some radicand, then
  // 1/x = (a - b*sqrt(p)) / (x * (a - b*sqrt(p))), where the denominator
  // lives in the subfield without p.  Recurses on the number of primes.
  Integer p = 0;
  for (const auto& [m, c] : terms_) {
    if (m > 1) {
      p = smallest_prime_factor(m);
      break;
    }
  }
  Scalar a, b;
  for (const auto& [m, c] : terms_) {
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      b.add_term(m / p, c);
    } else {
      a.add_term(m, c);
    }
  }
  Scalar conj = a - b * Scalar::sqrt_term(p, 1);
  Scalar norm = *this * conj;
  for (const auto& [m, c] : norm.terms_) {
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()))
      throw FieldError("inverse: conjugate norm kept radicand prime");
  }
  return conj * norm.inverse();
}

Scalar sqrt(const Scalar& x) {
  if (!x.is_rational()) throw NestedRadical("sqrt of irrational value: " + to_string(x));
  Rational q = x.rational_part();
  if (sgn(q) < 0) throw NegativeRadicand("sqrt of negative value: " + to_string(x));
  if (sgn(q) == 0) return Scalar(0);
  // sqrt(n/d) = sqrt(n*d)/d
  Integer nd = q.get_num() * q.get_den();
  Integer s, m;
  square_free_decompose(nd, s, m);
  Rational coeff(s, q.get_den());
  coeff.canonicalize();
  if (m == 1) return Scalar(coeff);
  return Scalar::sqrt_term(m, coeff);
}

std::string to_string(const Scalar& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    std::string piece;
    if (m == 1) {
      piece = c.get_str();
    } else if (c == 1) {
      piece = "sqrt(" + m.get_str() + ")";
    } else if (c == -1) {
      piece = "-sqrt(" + m.get_str() + ")";
    } else {
      piece = c.get_str() + "*sqrt(" + m.get_str() + ")";
    }
    if (!out.empty() && piece[0] != '-') out += '+';
    out += piece;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (accept('(')) {
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      skip_ws();
      expect('(');
      Scalar arg = expr();
      expect(')');
      return sqrt(arg);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Scalar integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    // base fixed to 10: the gmp string constructor would otherwise treat a
    // leading zero as octal
    return Scalar(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& why) {
    std::ostringstream os;
    os << "parse error at offset " << pos_ << ": " << why << " in \"" << s_ << "\"";
    throw ScalarParseError(os.str());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

FieldTower FieldTower::spanning(const std::vector<Scalar>& xs) {
  std::vector<Integer> rads;
  for (const auto& x : xs)
    for (const auto& [m, c] : x.terms())
      if (m > 1) rads.push_back(m);
  // gcd refinement until pairwise coprime
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rads.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < rads.size() && !changed; ++j) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), rads[i].get_mpz_t(), rads[j].get_mpz_t());
        if (g > 1) {
          Integer a = rads[i] / g, b = rads[j] / g;
          rads.erase(rads.begin() + j);
          rads.erase(rads.begin() + i);
          if (a > 1) rads.push_back(a);
          if (b > 1) rads.push_back(b);
          rads.push_back(g);
          changed = true;
        }
      }
    }
  }
  std::sort(rads.begin(), rads.end());
  rads.erase(std::unique(rads.begin(), rads.end()), rads.end());
  FieldTower t;
  t.radicands_ = std::move(rads);
  return t;
}

bool FieldTower::contains(const Scalar& x) const {
  for (const auto& [m, c] : x.terms()) {
    if (m == 1) continue;
    Integer rest = m;
    for (const auto& d : radicands_) {
      if (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) rest /= d;
    }
    if (rest != 1) return false;
  }
  return true;
}

}  // namespace axial
