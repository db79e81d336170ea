#include "mincomb/radical.hpp"

#include <cmath>
#include <stdexcept>

namespace mincomb {

SquarefreeSplit squarefree_split(const Integer& m) {
  if (m <= 0) throw std::domain_error("squarefree_split: argument must be positive");
  Integer rest = m;
  Integer root = 1;
  Integer free = 1;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    return {root, 1};
  }
  for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned exponent = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++exponent;
    }
    for (unsigned e = 0; e < exponent / 2; ++e) root *= p;
    if (exponent % 2) free *= p;
  }
  // Whatever survives trial division up to its square root is prime.
  free *= rest;
  return {root, free};
}

bool is_squarefree(const Integer& m) { return m > 0 && squarefree_split(m).square_root_part == 1; }

RadicalScalar::RadicalScalar(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(Integer(1), r);
}

RadicalScalar RadicalScalar::term(const Rational& coef, const Integer& radicand) {
  if (!is_squarefree(radicand)) {
    throw std::invalid_argument("radicand must be a positive squarefree integer: " + radicand.get_str());
  }
  RadicalScalar out;
  out.add_term(coef, radicand);
  return out;
}

void RadicalScalar::add_term(const Rational& coef, const Integer& radicand) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coef);
  if (inserted) return;
  it->second += coef;
  if (it->second.is_zero()) terms_.erase(it);
}

bool RadicalScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalScalar::rational_part() const {
  const auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational RadicalScalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("radical scalar is not rational: " + to_string());
  return rational_part();
}

double RadicalScalar::to_double() const {
  double acc = 0.0;
  for (const auto& [radicand, coef] : terms_) acc += coef.to_double() * std::sqrt(radicand.get_d());
  return acc;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [radicand, coef] : terms_) {
    Rational c = coef;
    if (!first) {
      out += c.sign() < 0 ? " - " : " + ";
      c = abs(c);
    }
    first = false;
    if (radicand == 1) {
      out += c.to_string();
    } else if (c == Rational(1)) {
      out += "sqrt(" + radicand.get_str() + ")";
    } else if (c == Rational(-1)) {
      out += "-sqrt(" + radicand.get_str() + ")";
    } else {
      out += c.to_string() + "*sqrt(" + radicand.get_str() + ")";
    }
  }
  return out;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  for (auto& [radicand, coef] : out.terms_) coef = -coef;
  return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  for (const auto& [radicand, coef] : o.terms_) add_term(coef, radicand);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
  for (const auto& [radicand, coef] : o.terms_) add_term(-coef, radicand);
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) {
  // sqrt(a)*sqrt(b) = g*sqrt((a/g)*(b/g)) with g = gcd(a, b); the cofactors are
  // coprime and squarefree, so their product is squarefree.
  RadicalScalar product;
  for (const auto& [ra, ca] : terms_) {
    for (const auto& [rb, cb] : o.terms_) {
      const Integer g = gcd(ra, rb);
      const Integer radicand = (ra / g) * (rb / g);
      product.add_term(ca * cb * Rational(g), radicand);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [radicand, coef] : terms_) coef *= r;
  return *this;
}

RadicalScalar& RadicalScalar::operator/=(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("radical scalar division by zero");
  for (auto& [radicand, coef] : terms_) coef /= r;
  return *this;
}

RadicalScalar sqrt_rational(const Rational& q) {
  if (q.sign() < 0) throw std::domain_error("sqrt_rational: negative argument " + q.to_string());
  if (q.is_zero()) return {};
  // sqrt(a/b) = sqrt(a*b) / b
  const Integer den = q.denominator();
  const auto [root, free] = squarefree_split(q.numerator() * den);
  return RadicalScalar::term(Rational(root, den), free);
}

RadicalScalar radical_mul(const RadicalScalar& a, const RadicalScalar& b) { return a * b; }

}  // namespace mincomb
