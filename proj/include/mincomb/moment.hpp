#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mincomb/radical.hpp"
#include "mincomb/weights.hpp"

namespace mincomb {

// Homogeneous form  sum c_alpha x^alpha  with RadicalScalar coefficients.
// Zero coefficients are never stored; terms iterate in descending lex order.
class RadicalPolynomial {
 public:
  using Terms = std::map<MultiIndex, RadicalScalar, DescendingLex>;

  RadicalPolynomial(int n, int d) : n_(n), d_(d) {}

  int n() const { return n_; }
  int d() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c to the coefficient of alpha; alpha must have n entries and degree d.
  void add(const MultiIndex& alpha, const RadicalScalar& c);
  RadicalScalar coefficient(const MultiIndex& alpha) const;

  RadicalPolynomial scaled(const Rational& c) const;

  // "3*sqrt(3)*x^2z + sqrt(5)*y^3"
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const RadicalPolynomial&, const RadicalPolynomial&) = default;

 private:
  int n_;
  int d_;
  Terms terms_;
};

// Form with coefficients +sqrt(coeff_sq[alpha]).
RadicalPolynomial polynomial_from_coeff_sq(int n, int d, const std::map<MultiIndex, Rational, DescendingLex>& coeff_sq);

// Symmetric n x n matrix over RadicalScalar.
class MomentMatrix {
 public:
  MomentMatrix() = default;
  explicit MomentMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static MomentMatrix diagonal(std::span<const Rational> diag);

  std::size_t size() const { return n_; }
  RadicalScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const RadicalScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  RadicalScalar trace() const;
  // Diagonal as rationals; throws std::domain_error if a diagonal entry is irrational.
  Vector diagonal_values() const;

  friend bool operator==(const MomentMatrix&, const MomentMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<RadicalScalar> entries_;
};

// sum_alpha f_alpha g_alpha ||x^alpha||^2 for real coefficients.
RadicalScalar poly_inner(const RadicalPolynomial& f, const RadicalPolynomial& g);

RadicalPolynomial partial_derivative(const RadicalPolynomial& f, std::size_t var);

// Entries <d_i f, d_j f> / (d ||f||^2) - (d/n) delta_ij. Requires f != 0 and
// ||f||^2 rational, which holds whenever every coefficient is a single radical
// term.
MomentMatrix moment_matrix(const RadicalPolynomial& f);

bool is_diagonal(const MomentMatrix& m);

// Monomials whose weights lie on the hyperplane through beta orthogonal to beta.
std::vector<MultiIndex> zbeta_support(std::span<const Rational> beta, const WeightTable& table);

// sqrt(||beta||^2)
RadicalScalar critical_value(std::span<const Rational> beta);

struct CriticalCandidate {
  Vector beta;
  std::vector<MultiIndex> support;
  Vector q_weights;
  std::map<MultiIndex, Rational, DescendingLex> coeff_sq;
  MomentMatrix moment;
  bool verified = false;
  RadicalScalar critical_value;

  friend bool operator==(const CriticalCandidate&, const CriticalCandidate&) = default;
};

// Candidate f_beta = sum sqrt(q_alpha)/||x^alpha|| x^alpha from a convex
// certificate of beta, with its moment matrix checked against diag(beta).
// Throws std::invalid_argument unless q > 0, sum q = 1 and sum q_alpha weight(alpha) = beta.
CriticalCandidate build_f_beta(std::span<const Rational> beta, std::span<const MultiIndex> support,
                               std::span<const Rational> q, const WeightTable& table);

// Display form: coeff_sq scaled to coprime integers, coefficients as a*sqrt(b).
std::string display_form(const CriticalCandidate& candidate, std::span<const std::string> names);
RadicalPolynomial display_polynomial(const CriticalCandidate& candidate);

// sum_alpha (c_alpha^2 ||x^alpha||^2 / ||f||^2) weight(alpha) when m(f) is
// diagonal; nullopt otherwise.
std::optional<Vector> calpha_reconstruct(const RadicalPolynomial& f, const WeightTable& table);

// f in one more variable, with exponent 0 appended.
RadicalPolynomial embed(const RadicalPolynomial& f);

// For a ternary cubic f: m_4(f) == block(m_3(f), -1) + (1/4) I.
bool embed_check(const RadicalPolynomial& f);

}  // namespace mincomb
