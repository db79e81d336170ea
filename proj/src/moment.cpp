#include "mincomb/moment.hpp"

#include <stdexcept>

namespace mincomb {

void RadicalPolynomial::add(const MultiIndex& alpha, const RadicalScalar& c) {
  if (static_cast<int>(alpha.vars()) != n_ || alpha.degree() != d_) {
    throw std::invalid_argument("monomial does not match polynomial shape");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RadicalScalar RadicalPolynomial::coefficient(const MultiIndex& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? RadicalScalar{} : it->second;
}

RadicalPolynomial RadicalPolynomial::scaled(const Rational& c) const {
  RadicalPolynomial out(n_, d_);
  for (const auto& [alpha, coef] : terms_) out.add(alpha, coef * c);
  return out;
}

std::string RadicalPolynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, coef] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_string(alpha, names);
    if (coef == RadicalScalar(1)) {
      out += mono;
    } else if (coef.terms().size() == 1) {
      out += coef.to_string() + "*" + mono;
    } else {
      out += "(" + coef.to_string() + ")*" + mono;
    }
  }
  return out;
}

RadicalPolynomial polynomial_from_coeff_sq(int n, int d, const std::map<MultiIndex, Rational, DescendingLex>& coeff_sq) {
  RadicalPolynomial f(n, d);
  for (const auto& [alpha, c2] : coeff_sq) f.add(alpha, sqrt_rational(c2));
  return f;
}

MomentMatrix MomentMatrix::diagonal(std::span<const Rational> diag) {
  MomentMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = RadicalScalar(diag[i]);
  return m;
}

RadicalScalar MomentMatrix::trace() const {
  RadicalScalar t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Vector MomentMatrix::diagonal_values() const {
  Vector out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back((*this)(i, i).as_rational());
  return out;
}

RadicalScalar poly_inner(const RadicalPolynomial& f, const RadicalPolynomial& g) {
  if (f.n() != g.n() || f.d() != g.d()) throw std::invalid_argument("poly_inner: shape mismatch");
  RadicalScalar acc;
  for (const auto& [alpha, fc] : f.terms()) {
    const auto it = g.terms().find(alpha);
    if (it == g.terms().end()) continue;
    acc += fc * it->second * monomial_norm_sq(alpha);
  }
  return acc;
}

RadicalPolynomial partial_derivative(const RadicalPolynomial& f, std::size_t var) {
  if (f.d() < 1) throw std::invalid_argument("partial_derivative: degree must be at least 1");
  if (var >= static_cast<std::size_t>(f.n())) throw std::out_of_range("partial_derivative: variable index");
  RadicalPolynomial out(f.n(), f.d() - 1);
  for (const auto& [alpha, coef] : f.terms()) {
    const int e = alpha[var];
    if (e == 0) continue;
    std::vector<int> lowered = alpha.exponents();
    --lowered[var];
    out.add(MultiIndex(std::move(lowered)), coef * Rational(e));
  }
  return out;
}

MomentMatrix moment_matrix(const RadicalPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("moment_matrix: zero polynomial");
  const auto n = static_cast<std::size_t>(f.n());
  const Rational norm = poly_inner(f, f).as_rational();
  const Rational scale = Rational(f.d()) * norm;
  const Rational shift(f.d(), f.n());

  std::vector<RadicalPolynomial> partials;
  partials.reserve(n);
  for (std::size_t i = 0; i < n; ++i) partials.push_back(partial_derivative(f, i));

  MomentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      RadicalScalar entry = poly_inner(partials[i], partials[j]) / scale;
      if (i == j) entry -= RadicalScalar(shift);
      m(i, j) = entry;
      m(j, i) = std::move(entry);
    }
  }
  return m;
}

bool is_diagonal(const MomentMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

std::vector<MultiIndex> zbeta_support(std::span<const Rational> beta, const WeightTable& table) {
  const Rational target = norm_sq(beta);
  std::vector<MultiIndex> out;
  for (const auto& e : table.entries()) {
    if (dot(e.weight, beta) == target) out.push_back(e.alpha);
  }
  return out;
}

RadicalScalar critical_value(std::span<const Rational> beta) { return sqrt_rational(norm_sq(beta)); }

CriticalCandidate build_f_beta(std::span<const Rational> beta, std::span<const MultiIndex> support,
                               std::span<const Rational> q, const WeightTable& table) {
  if (support.empty() || support.size() != q.size()) {
    throw std::invalid_argument("build_f_beta: support and weights must be non-empty and of equal length");
  }
  if (beta.size() != static_cast<std::size_t>(table.n())) throw std::invalid_argument("build_f_beta: beta dimension");
  Rational total;
  Vector combo(beta.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (q[i].sign() <= 0) throw std::invalid_argument("build_f_beta: weights must be positive");
    total += q[i];
    combo = combo + q[i] * table.at(support[i]).weight;
  }
  if (total != Rational(1)) throw std::invalid_argument("build_f_beta: weights do not sum to 1");
  if (combo != Vector(beta.begin(), beta.end())) {
    throw std::invalid_argument("build_f_beta: certificate does not reproduce beta " + to_string(beta));
  }

  CriticalCandidate c;
  c.beta.assign(beta.begin(), beta.end());
  c.support.assign(support.begin(), support.end());
  c.q_weights.assign(q.begin(), q.end());
  for (std::size_t i = 0; i < support.size(); ++i) c.coeff_sq.emplace(support[i], q[i] / table.at(support[i]).norm_sq);
  c.moment = moment_matrix(polynomial_from_coeff_sq(table.n(), table.d(), c.coeff_sq));
  c.verified = c.moment == MomentMatrix::diagonal(beta);
  c.critical_value = critical_value(beta);
  return c;
}

RadicalPolynomial display_polynomial(const CriticalCandidate& candidate) {
  Integer den_lcm = 1;
  for (const auto& [alpha, c2] : candidate.coeff_sq) den_lcm = lcm(den_lcm, c2.denominator());
  Integer num_gcd = 0;
  for (const auto& [alpha, c2] : candidate.coeff_sq) num_gcd = gcd(num_gcd, c2.numerator() * (den_lcm / c2.denominator()));
  const Rational factor(den_lcm, num_gcd == 0 ? Integer(1) : num_gcd);

  const int n = static_cast<int>(candidate.beta.size());
  const int d = candidate.support.empty() ? 0 : candidate.support.front().degree();
  std::map<MultiIndex, Rational, DescendingLex> scaled;
  for (const auto& [alpha, c2] : candidate.coeff_sq) scaled.emplace(alpha, c2 * factor);
  return polynomial_from_coeff_sq(n, d, scaled);
}

std::string display_form(const CriticalCandidate& candidate, std::span<const std::string> names) {
  return display_polynomial(candidate).to_string(names);
}

std::optional<Vector> calpha_reconstruct(const RadicalPolynomial& f, const WeightTable& table) {
  if (f.n() != table.n() || f.d() != table.d()) throw std::invalid_argument("calpha_reconstruct: shape mismatch");
  if (!is_diagonal(moment_matrix(f))) return std::nullopt;
  const Rational norm = poly_inner(f, f).as_rational();
  Vector out(static_cast<std::size_t>(f.n()));
  for (const auto& [alpha, coef] : f.terms()) {
    const WeightEntry& e = table.at(alpha);
    const Rational share = (coef * coef).as_rational() * e.norm_sq / norm;
    out = out + share * e.weight;
  }
  return out;
}

RadicalPolynomial embed(const RadicalPolynomial& f) {
  RadicalPolynomial out(f.n() + 1, f.d());
  for (const auto& [alpha, coef] : f.terms()) {
    std::vector<int> e = alpha.exponents();
    e.push_back(0);
    out.add(MultiIndex(std::move(e)), coef);
  }
  return out;
}

bool embed_check(const RadicalPolynomial& f) {
  // H_{n+1}(f) = block(H_n(f), 0), so
  //   m_{n+1}(f) = block(m_n(f), -d/n) + (d/n - d/(n+1)) I,
  // which is block(m_3, -1) + I/4 for ternary cubics.
  const MomentMatrix small = moment_matrix(f);
  const MomentMatrix large = moment_matrix(embed(f));
  const std::size_t n = small.size();
  const Rational lift = Rational(f.d(), f.n()) - Rational(f.d(), f.n() + 1);

  MomentMatrix expected(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) expected(i, j) = small(i, j);
  expected(n, n) = RadicalScalar(-Rational(f.d(), f.n()));
  for (std::size_t i = 0; i <= n; ++i) expected(i, i) += RadicalScalar(lift);
  return large == expected;
}

}  // namespace mincomb
