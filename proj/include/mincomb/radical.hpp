#pragma once

#include <map>
#include <string>

#include "mincomb/rational.hpp"

namespace mincomb {

// Finite sum  sum_k r_k * sqrt(s_k)  with distinct squarefree radicands s_k >= 1
// and nonzero rational coefficients r_k. Radicand 1 holds the rational part.
// The representation is canonical, so equality is structural.
class RadicalScalar {
 public:
  using Terms = std::map<Integer, Rational>;

  RadicalScalar() = default;
  RadicalScalar(const Rational& r);  // NOLINT(google-explicit-constructor)
  RadicalScalar(long r) : RadicalScalar(Rational(r)) {}  // NOLINT(google-explicit-constructor)

  // coef * sqrt(radicand); radicand must be a positive squarefree integer.
  static RadicalScalar term(const Rational& coef, const Integer& radicand);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Coefficient of the radicand-1 term.
  Rational rational_part() const;
  // Throws std::domain_error unless is_rational().
  Rational as_rational() const;
  double to_double() const;

  // "0", "3/14*sqrt(42)", "1 + sqrt(2)"
  std::string to_string() const;

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);
  RadicalScalar& operator*=(const Rational& r);
  RadicalScalar& operator/=(const Rational& r);

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) { return a *= b; }
  friend RadicalScalar operator*(RadicalScalar a, const Rational& b) { return a *= b; }
  friend RadicalScalar operator*(const Rational& a, RadicalScalar b) { return b *= a; }
  friend RadicalScalar operator/(RadicalScalar a, const Rational& b) { return a /= b; }

  friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;

 private:
  void add_term(const Rational& coef, const Integer& radicand);

  Terms terms_;
};

// Splits m > 0 as square^2 * squarefree.
struct SquarefreeSplit {
  Integer square_root_part;
  Integer squarefree_part;
};
SquarefreeSplit squarefree_split(const Integer& m);

bool is_squarefree(const Integer& m);

// Exact sqrt(q) as r*sqrt(s), s squarefree. Throws std::domain_error for q < 0.
RadicalScalar sqrt_rational(const Rational& q);

RadicalScalar radical_mul(const RadicalScalar& a, const RadicalScalar& b);

}  // namespace mincomb
