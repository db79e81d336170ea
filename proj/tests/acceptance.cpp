#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "mincomb/matrix.hpp"
#include "mincomb/oracle.hpp"
#include "mincomb/report.hpp"

using namespace mincomb;

namespace {

using Exps = std::vector<int>;
using Ratios = std::map<Exps, long>;

struct Expected {
  Vector beta;
  Ratios coeff_sq;
  bool verified = true;
};

// coeff_sq proportional to the integer ratios, same support.
bool proportional(const CriticalCandidate& c, const Ratios& ratios) {
  if (c.coeff_sq.size() != ratios.size()) return false;
  std::optional<Rational> scale;
  for (const auto& [e, r] : ratios) {
    const auto it = c.coeff_sq.find(MultiIndex(e));
    if (it == c.coeff_sq.end()) return false;
    const Rational s = it->second / Rational(r);
    if (scale && *scale != s) return false;
    scale = s;
  }
  return true;
}

const CandidateRecord* find_candidate(const AnalysisReport& report, const Vector& beta, const Ratios& ratios,
                                      bool verified) {
  for (const auto& rec : report.records) {
    if (rec.beta != beta) continue;
    for (const auto& c : rec.candidates) {
      if (c.candidate.verified == verified && proportional(c.candidate, ratios)) return &c;
    }
  }
  return nullptr;
}

// The surface examples name f only up to a permutation of x, y, z, w, so the
// support is relabelled while beta stays fixed.
bool find_up_to_permutation(const AnalysisReport& report, const Expected& e) {
  std::vector<std::size_t> sigma(e.beta.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Ratios ratios;
    for (const auto& [exps, r] : e.coeff_sq) {
      Exps p(exps.size());
      for (std::size_t i = 0; i < sigma.size(); ++i) p[sigma[i]] = exps[i];
      ratios[p] = r;
    }
    if (find_candidate(report, e.beta, ratios, e.verified)) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

MomentMatrix rational_matrix(const std::vector<Vector>& rows) {
  MomentMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = RadicalScalar(rows[i][j]);
  return m;
}

std::vector<Vector> random_points(std::mt19937_64& rng, std::size_t dim, std::size_t count) {
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Vector> pts;
  while (pts.size() < count) {
    Vector p(dim);
    for (auto& c : p) {
      const int q = den(rng);
      std::uniform_int_distribution<int> num(-3 * q, 3 * q);
      c = Rational(num(rng), q);
    }
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

Rational r(long p, long q = 1) { return Rational(p, q); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

AnalysisReport curve_table1;
AnalysisReport curve_full;
AnalysisReport surface_interior;

void criterion1(Outcome& o) {
  AnalyzeOptions opts;
  opts.weyl_only = true;
  opts.k_max = 1;
  opts.reproducible = true;
  curve_table1 = analyze(opts);
  const auto names = default_variable_names(3);
  const std::vector<std::tuple<Vector, std::string, RadicalScalar>> expected{
      {Vector{0, 0, 0}, "xyz", RadicalScalar()},
      {Vector{1, 0, -1}, "x^2y", RadicalScalar::term(1, 2)},
      {Vector{2, -1, -1}, "x^3", RadicalScalar::term(1, 6)},
  };
  if (curve_table1.records.size() != expected.size()) return o.fail("wrong number of rows");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& rec = curve_table1.records[i];
    const auto& [beta, f, m] = expected[i];
    if (rec.beta != beta || rec.critical_value != m || rec.candidates.size() != 1 ||
        display_form(rec.candidates[0].candidate, names) != f || !rec.candidates[0].candidate.verified) {
      return o.fail("row mismatch at beta " + to_string(beta));
    }
  }
}

void criterion2(Outcome& o) {
  AnalyzeOptions opts;
  opts.weyl_only = true;
  opts.reproducible = true;
  curve_full = analyze(opts);
  std::set<Vector> betas;
  for (const auto& rec : curve_full.records) betas.insert(rec.beta);
  const std::set<Vector> chamber{{2, -1, -1},           {1, 0, -1},        {0, 0, 0},
                                 {1, r(-1, 2), r(-1, 2)}, {r(1, 2), r(1, 2), -1},
                                 {r(2, 7), r(1, 14), r(-5, 14)}, {r(1, 2), 0, r(-1, 2)}};
  if (betas != chamber) return o.fail("chamber beta set differs");

  const Vector half{r(1, 2), r(1, 2), -1};
  const Vector zero{0, 0, 0};
  const std::vector<std::pair<std::string, Expected>> verified{
      {"3sqrt3 x^2z + sqrt5 y^3", {{r(2, 7), r(1, 14), r(-5, 14)}, {{{2, 0, 1}, 27}, {{0, 3, 0}, 5}}}},
      {"x^3 + 3xy^2", {half, {{{3, 0, 0}, 1}, {{1, 2, 0}, 9}}}},
      {"x^3 + y^3", {half, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}}}},
      {"3x^2y + y^3", {half, {{{2, 1, 0}, 9}, {{0, 3, 0}, 1}}}},
      {"x^2z + xy^2", {{r(1, 2), 0, r(-1, 2)}, {{{2, 0, 1}, 1}, {{1, 2, 0}, 1}}}},
      {"x^2z + y^2z", {zero, {{{2, 0, 1}, 1}, {{0, 2, 1}, 1}}}},
      {"x^2y + z^2y", {zero, {{{2, 1, 0}, 1}, {{0, 1, 2}, 1}}}},
      {"xz^2 + xy^2", {zero, {{{1, 0, 2}, 1}, {{1, 2, 0}, 1}}}},
      {"x^3 + y^3 + z^3", {zero, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}}}},
  };
  for (const auto& [name, e] : verified) {
    if (!find_candidate(curve_full, e.beta, e.coeff_sq, true)) return o.fail("missing verified " + name);
  }

  const auto* r1 = find_candidate(curve_full, half, {{{2, 1, 0}, 1}, {{1, 2, 0}, 1}}, false);
  if (!r1) return o.fail("missing rejected x^2y + xy^2");
  if (r1->candidate.moment != rational_matrix({{r(1, 2), 1, 0}, {1, r(1, 2), 0}, {0, 0, -1}})) {
    return o.fail("x^2y + xy^2 moment matrix differs");
  }
  const auto* r2 = find_candidate(curve_full, {1, r(-1, 2), r(-1, 2)}, {{{2, 1, 0}, 1}, {{2, 0, 1}, 1}}, false);
  if (!r2) return o.fail("missing rejected x^2y + x^2z");
  if (r2->candidate.moment != rational_matrix({{1, 0, 0}, {0, r(-1, 2), r(1, 2)}, {0, r(1, 2), r(-1, 2)}})) {
    return o.fail("x^2y + x^2z moment matrix differs");
  }
}

void criterion3(Outcome& o) {
  AnalyzeOptions opts;
  opts.n = 4;
  opts.interior_only = true;
  opts.reproducible = true;
  opts.threads = 4;
  surface_interior = analyze(opts);

  const Vector quarter{r(1, 4), r(1, 4), r(-1, 4), r(-1, 4)};
  const Vector half{r(1, 2), 0, 0, r(-1, 2)};
  const std::vector<std::pair<std::string, Expected>> cases{
      {"xw^2 + 2xyz", {{r(1, 4), r(-1, 12), r(-1, 12), r(-1, 12)}, {{{1, 0, 0, 2}, 1}, {{1, 1, 1, 0}, 4}}}},
      {"sqrt6 xyz + x^2w", {half, {{{1, 1, 1, 0}, 6}, {{2, 0, 0, 1}, 1}}}},
      {"x^2y + z^2w", {quarter, {{{2, 1, 0, 0}, 1}, {{0, 0, 2, 1}, 1}}}},
      {"k=3 (15/76, ...) x^2w, y^3, z^3",
       {{r(15, 76), r(3, 76), r(3, 76), r(-21, 76)}, {{{2, 0, 0, 1}, 27}, {{0, 3, 0, 0}, 5}, {{0, 0, 3, 0}, 5}}}},
      {"k=3 (15/76, ...) x^2w, y^2z, z^3",
       {{r(15, 76), r(3, 76), r(3, 76), r(-21, 76)}, {{{2, 0, 0, 1}, 54}, {{0, 2, 1, 0}, 45}, {{0, 0, 3, 0}, 5}}}},
      {"k=3 (9/20, ...)",
       {{r(9, 20), r(3, 20), r(-3, 20), r(-9, 20)}, {{{2, 0, 0, 1}, 9}, {{0, 3, 0, 0}, 1}, {{1, 1, 1, 0}, 36}}}},
      {"k=3 (1/4, 1/4, ...)", {quarter, {{{2, 0, 0, 1}, 1}, {{0, 0, 2, 1}, 1}, {{1, 1, 1, 0}, 4}}}},
      {"k=3 (33/100, ...)",
       {{r(33, 100), r(9, 100), r(-3, 100), r(-39, 100)}, {{{2, 0, 0, 1}, 27}, {{1, 0, 2, 0}, 27}, {{0, 3, 0, 0}, 7}}}},
      {"k=3 (27/140, ...)",
       {{r(27, 140), r(3, 140), r(-9, 140), r(-3, 20)}, {{{1, 0, 2, 0}, 18}, {{0, 3, 0, 0}, 1}, {{1, 1, 0, 1}, 63}}}},
      {"k=3 (3/44, ...)",
       {{r(3, 44), r(3, 44), r(-1, 44), r(-5, 44)}, {{{1, 0, 2, 0}, 8}, {{0, 2, 0, 1}, 9}, {{2, 0, 0, 1}, 5}}}},
      {"k=3 (1/2, 0, 0, -1/2)", {half, {{{1, 0, 2, 0}, 3}, {{1, 2, 0, 0}, 3}, {{2, 0, 0, 1}, 2}}}},
      {"k=3 (1/4, 3/28, ...)",
       {{r(1, 4), r(3, 28), r(-1, 28), r(-9, 28)}, {{{1, 0, 2, 0}, 1}, {{0, 2, 1, 0}, 3}, {{2, 0, 0, 1}, 3}}}},
      {"k=3 (3/20, ...)",
       {{r(3, 20), r(1, 20), r(-1, 20), r(-3, 20)}, {{{1, 0, 2, 0}, 3}, {{0, 2, 1, 0}, 1}, {{1, 1, 0, 1}, 12}}}},
  };
  for (const auto& [name, e] : cases) {
    if (!find_up_to_permutation(surface_interior, e)) return o.fail("missing verified " + name);
  }
  const Expected rejected{quarter, {{{1, 1, 1, 0}, 1}, {{0, 1, 1, 1}, 1}}, false};
  if (!find_up_to_permutation(surface_interior, rejected)) return o.fail("missing rejected xyz + yzw");
}

void criterion4(Outcome& o) {
  const MomentMatrix expected = MomentMatrix::diagonal(Vector{r(1, 4), r(1, 4), r(1, 4), r(-3, 4)});
  const std::vector<std::vector<Exps>> forms{{{1, 1, 1}}, {{2, 1, 0}, {0, 1, 2}}, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}};
  for (const auto& monos : forms) {
    RadicalPolynomial f(3, 3);
    for (const auto& e : monos) f.add(MultiIndex(e), 1);
    if (!embed_check(f)) return o.fail("embed_check failed for " + f.to_string(default_variable_names(3)));
    if (moment_matrix(embed(f)) != expected) return o.fail("m4 differs for " + f.to_string(default_variable_names(3)));
  }
}

void criterion5(Outcome& o) {
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<int> num(0, 30);
  std::uniform_int_distribution<int> den(1, 12);
  for (int i = 0; i < 20; ++i) {
    Rational lambda_sq(num(rng), den(rng));
    const Rational mu_sq(num(rng), den(rng));
    if (lambda_sq.is_zero() && mu_sq.is_zero()) lambda_sq = Rational(1);
    RadicalPolynomial f(3, 3);
    for (const auto& e : {Exps{3, 0, 0}, Exps{0, 3, 0}, Exps{0, 0, 3}}) f.add(MultiIndex(e), sqrt_rational(lambda_sq));
    f.add(MultiIndex({1, 1, 1}), sqrt_rational(mu_sq));
    if (moment_matrix(f) != MomentMatrix(3)) {
      return o.fail("nonzero moment matrix at lambda^2=" + lambda_sq.to_string() + ", mu^2=" + mu_sq.to_string());
    }
  }
}

void criterion6(Outcome& o) {
  std::mt19937_64 rng(66);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<std::size_t> count(1, 8);
  double worst = 0.0;
  int pairs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = dim(rng);
    const auto pts = random_points(rng, n, count(rng));
    const Vector exact = tau_full(pts);
    const auto approx = nearest_point_oracle(pts);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(approx[i] - exact[i].to_double()));
    Rational previous = norm_sq(tau_full(std::span<const Vector>(pts.data(), 1)));
    for (std::size_t m = 2; m <= pts.size(); ++m, ++pairs) {
      const Rational current = norm_sq(tau_full(std::span<const Vector>(pts.data(), m)));
      if (current > previous) return o.fail("monotonicity violated");
      previous = current;
    }
  }
  if (worst > 1e-7) {
    std::ostringstream why;
    why << "oracle delta " << worst;
    return o.fail(why.str());
  }
  o.detail << "120 sets, " << pairs << " nested pairs, max delta " << worst;
}

bool perpendicular_and_positive(const PointSet& a, const MinimalCombination& mc) {
  for (const auto& cert : mc.certificates) {
    Rational total;
    Vector combo(a.dim());
    for (std::size_t i = 0; i < cert.k; ++i) {
      if (cert.weights[i].sign() <= 0) return false;
      total += cert.weights[i];
      combo = combo + cert.weights[i] * a[cert.subset[i]];
    }
    if (total != Rational(1) || combo != mc.beta) return false;
    for (std::size_t i = 1; i < cert.k; ++i) {
      if (!dot(mc.beta, a[cert.subset[i]] - a[cert.subset[0]]).is_zero()) return false;
    }
  }
  return true;
}

void criterion7(Outcome& o) {
  std::size_t matrices = 0;
  for (const auto* report : {&curve_table1, &curve_full, &surface_interior}) {
    for (const auto& rec : report->records) {
      for (const auto& c : rec.candidates) {
        ++matrices;
        if (!c.candidate.moment.trace().is_zero()) return o.fail("nonzero trace");
        try {
          c.candidate.moment.diagonal_values();
        } catch (const std::domain_error&) {
          return o.fail("irrational diagonal");
        }
      }
    }
  }

  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  for (int tested = 0; tested < 50;) {
    const std::size_t n = dim(rng);
    std::uniform_int_distribution<std::size_t> count(1, n + 1);
    const auto pts = random_points(rng, n, count(rng));
    if (!affinely_independent(pts)) continue;
    ++tested;
    const Vector reference = min_square(pts, 0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (min_square(pts, i) != reference) return o.fail("min_square depends on the pivot");
    }
  }

  for (const auto& [n, d] : {std::pair{3, 3}, std::pair{4, 3}}) {
    const PointSet a = WeightTable(n, d).point_set();
    for (const auto& mc : minimal_combinations(a)) {
      if (!perpendicular_and_positive(a, mc)) return o.fail("certificate check failed on weight table");
    }
  }

  int emptiness = 0;
  std::uniform_int_distribution<std::size_t> small_dim(2, 3);
  while (emptiness < 30) {
    const std::size_t n = small_dim(rng);
    const auto pts = random_points(rng, n, n + 3);
    if (norm_sq(tau_full(pts)).is_zero()) continue;
    const PointSet a(n, pts);
    std::vector<Vector> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    if (rank(RationalMatrix::from_columns(diffs, n)) != n) continue;
    ++emptiness;
    for (const auto& mc : minimal_combinations(a, {.k_max = n + 1})) {
      if (!perpendicular_and_positive(a, mc)) return o.fail("certificate check failed on random set");
      for (const auto& cert : mc.certificates) {
        if (cert.k == n + 1) return o.fail("certificate of size n+1 on a full-dimensional set");
      }
    }
  }
  o.detail << matrices << " moment matrices, 50 pivot sets, 30 full-dimensional sets";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cubic-curve Table 1", 1.0, criterion1},
      {2, "cubic-curve full pipeline", 5.0, criterion2},
      {3, "cubic-surface results", 30.0, criterion3},
      {4, "embedding relation", 60.0, criterion4},
      {5, "Hesse family", 60.0, criterion5},
      {6, "oracle equivalence and monotonicity", 60.0, criterion6},
      {7, "structural invariants", 60.0, criterion7},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && elapsed >= c.limit_s) o.fail("runtime limit exceeded");
    all = all && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " " << c.name << " ("
              << std::fixed << std::setprecision(3) << elapsed << " s)";
    if (!o.detail.str().empty()) std::cout << " " << o.detail.str();
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
