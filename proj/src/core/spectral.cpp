#include "lip/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lip/error.hpp"
#include "lip/rng.hpp"
#include "set_search.hpp"

namespace lip {

std::string_view to_string(EigenMethod method) noexcept {
  return method == EigenMethod::Dense ? "dense" : "iterative";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kKrylovMemoryBudget = std::size_t{512} << 20;

void adjacency_times(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  for (Vertex v = 0; v < g.n(); ++v) {
    double sum = 0.0;
    for (Vertex w : g.neighbors(v)) sum += x[w];
    y[v] = sum;
  }
}

/// Removes the component along the all-ones vector, the top eigenvector of a
/// regular graph.
void deflate(Eigen::VectorXd& v) { v.array() -= v.mean(); }

void dense_spectrum(const Graph& g, const SpectralOptions& options, SpectralReport& report) {
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex w : g.neighbors(v)) a(v, w) = 1.0;
  }
  const bool vectors = g.n() <= options.dense_vector_limit;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NoConvergence("dense eigensolver failed", 0.0);
  const auto& values = solver.eigenvalues();
  report.lambda2 = values[n - 2];
  report.lambda_min = values[0];
  report.method = EigenMethod::Dense;
  report.iterations = 0;
  if (vectors) {
    double residual = 0.0;
    for (Eigen::Index col : {Eigen::Index{0}, n - 2}) {
      const Eigen::VectorXd v = solver.eigenvectors().col(col);
      residual = std::max(residual, (a * v - values[col] * v).norm());
    }
    report.residual = residual;
  } else {
    report.residual = 8.0 * kEps * static_cast<double>(g.n()) * std::max<double>(1.0, report.d);
  }
}

/// Lanczos with full reorthogonalization on the operator restricted to the
/// complement of the all-ones vector. Its extreme Ritz values converge to λ2
/// and λn.
void iterative_spectrum(const Graph& g, const SpectralOptions& options, SpectralReport& report) {
  const std::size_t n = g.n();
  const double tolerance = options.relative_tolerance * std::max<double>(1.0, report.d);
  std::size_t max_steps = std::min(options.max_krylov, n - 1);
  max_steps = std::max<std::size_t>(1, std::min(max_steps, kKrylovMemoryBudget / (8 * n) - 1));

  Eigen::MatrixXd basis(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(max_steps + 1));
  std::vector<double> alpha;
  std::vector<double> beta;

  SplitMix64 rng(options.seed);
  Eigen::VectorXd q(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) q[static_cast<Eigen::Index>(i)] = rng.uniform() - 0.5;
  deflate(q);
  q.normalize();
  basis.col(0) = q;

  Eigen::VectorXd w(static_cast<Eigen::Index>(n));
  double residual = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < max_steps; ++j) {
    const auto k = static_cast<Eigen::Index>(j + 1);
    adjacency_times(g, basis.col(static_cast<Eigen::Index>(j)), w);
    deflate(w);
    alpha.push_back(basis.col(static_cast<Eigen::Index>(j)).dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXd coeffs = basis.leftCols(k).transpose() * w;
      w.noalias() -= basis.leftCols(k) * coeffs;
    }
    deflate(w);
    const double b = w.norm();
    const bool breakdown = b <= 1e-10 * std::max<double>(1.0, report.d);

    if ((j + 1) % 10 == 0 || breakdown || j + 1 == max_steps) {
      Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), k);
      Eigen::VectorXd sub = beta.empty() ? Eigen::VectorXd(0)
                                         : Eigen::Map<const Eigen::VectorXd>(beta.data(), k - 1).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const auto& theta = tri.eigenvalues();
      const auto& s = tri.eigenvectors();
      report.lambda2 = theta[k - 1];
      report.lambda_min = theta[0];
      residual = breakdown ? 0.0
                           : std::max(std::abs(b * s(k - 1, k - 1)), std::abs(b * s(k - 1, 0)));
      report.iterations = j + 1;
      if (residual <= tolerance) break;
    }
    if (breakdown) break;
    beta.push_back(b);
    basis.col(static_cast<Eigen::Index>(j + 1)) = w / b;
  }
  report.method = EigenMethod::Iterative;
  report.residual = residual;
  if (residual > tolerance) {
    throw NoConvergence("Lanczos did not converge after " + std::to_string(report.iterations) +
                            " steps (residual " + std::to_string(residual) + ")",
                        residual);
  }
}

bool passes(double lhs, double rhs, bool strict) {
  const double slack = kCertificateTolerance * std::abs(rhs);
  return strict ? lhs < rhs - slack : lhs <= rhs + slack;
}

CertificateCondition condition(std::string name, double lhs, double rhs, bool strict,
                               bool required = true) {
  CertificateCondition c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.strict = strict;
  c.pass = passes(lhs, rhs, strict);
  c.required = required;
  return c;
}

void finalize(Certificate& cert) {
  cert.overall = std::all_of(cert.conditions.begin(), cert.conditions.end(),
                             [](const CertificateCondition& c) { return !c.required || c.pass; });
  cert.l_floor = static_cast<std::size_t>(std::floor(cert.l));
  cert.s1_floor = static_cast<std::size_t>(std::floor(cert.s1));
  cert.s2_floor = static_cast<std::size_t>(std::floor(cert.s2));
}

}  // namespace

SpectralReport compute_lambda(const Graph& g, const SpectralOptions& options) {
  if (g.n() < 2) throw InvalidArgument("spectral report needs at least 2 vertices");
  if (!g.is_regular()) {
    throw NotRegular("graph is not regular (degrees " + std::to_string(g.min_degree()) + ".." +
                     std::to_string(g.max_degree()) + ")");
  }
  SpectralReport report;
  report.n = g.n();
  report.d = g.degree(0);
  if (g.n() <= options.dense_limit) {
    dense_spectrum(g, options, report);
  } else {
    iterative_spectrum(g, options, report);
  }
  report.lambda = std::max(report.lambda2, -report.lambda_min);
  report.alon_boppana_ok = alon_boppana_check(report.n, report.d, report.lambda);
  return report;
}

MixingCheck mixing_check(const Graph& g, double lambda, const VertexSet& a, const VertexSet& b) {
  MixingCheck out;
  if (g.n() == 0) {
    out.pass = true;
    return out;
  }
  const double d = static_cast<double>(g.degree(0));
  const double size_product = static_cast<double>(a.size()) * static_cast<double>(b.size());
  const double edges = static_cast<double>(e_between(g, a, b));
  out.lhs = std::abs(edges - size_product * d / static_cast<double>(g.n()));
  out.rhs = lambda * std::sqrt(size_product);
  // λ itself is only known to ~1e-8·d.
  const double slack = kCertificateTolerance * std::max(1.0, out.rhs) +
                       1e-8 * std::max(1.0, d) * std::sqrt(size_product);
  out.pass = out.lhs <= out.rhs + slack;
  return out;
}

bool alon_boppana_check(std::size_t n, std::size_t d, double lambda) {
  if (n < 2 || d >= n) throw InvalidArgument("Alon-Boppana check needs n >= 2 and d < n");
  const double bound = static_cast<double>(d) * static_cast<double>(n - d) / static_cast<double>(n - 1);
  return lambda * lambda >= bound - kCertificateTolerance * std::max(1.0, bound);
}

Certificate certify_spectral_expander(std::size_t n, std::size_t d, double lambda) {
  if (d == 0 || d >= n) throw InvalidArgument("need 0 < d < n");
  if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be non-negative");
  const double nn = static_cast<double>(n);
  const double dd = static_cast<double>(d);

  Certificate cert;
  cert.kind = "ndlambda";
  cert.n = n;
  cert.d = dd;
  cert.lambda = lambda;
  cert.s1 = nn / (32.0 * dd);
  cert.l = cert.s1;
  cert.s2 = 2.0 * lambda * lambda * nn / (dd * dd);

  const double y = std::max(3.0 * cert.s2, cert.l + cert.s1 + cert.s2);
  cert.conditions.push_back(condition("cond1: e(X,Y) < d/4*s1",
                                      cert.s1 * y * dd / nn + lambda * std::sqrt(cert.s1 * y),
                                      dd / 4.0 * cert.s1, true));
  const double gamma_size = dd * (cert.l + cert.s1);
  cert.conditions.push_back(
      condition("cond2: e(Gamma[X],Y) <= d/4*s2",
                gamma_size * cert.s2 * dd / nn + lambda * std::sqrt(gamma_size * cert.s2),
                dd / 4.0 * cert.s2, false));
  cert.conditions.push_back(condition("s1+s2 < n", cert.s1 + cert.s2, nn, true));
  // -s2 <= -s1, i.e. s2 >= s1.
  cert.conditions.push_back(condition("s2 >= s1", -cert.s2, -cert.s1, false, false));
  cert.conditions.push_back(condition("lambda < d^(3/4)/100", lambda, std::pow(dd, 0.75) / 100.0,
                                      true, false));
  cert.conditions.push_back(condition("d < n/10", dd, nn / 10.0, true, false));
  finalize(cert);
  return cert;
}

Certificate certify_upper_uniform(const Graph& g, std::size_t d, double c, std::size_t samples,
                                  std::uint64_t seed) {
  if (d < 256) throw InvalidArgument("upper-uniform certificate needs d >= 256");
  if (!(c > 1.0)) throw InvalidArgument("upper-uniform certificate needs C > 1");
  const std::size_t n = g.n();
  const double nn = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  const auto x_size = static_cast<std::size_t>(std::max(1.0, std::ceil(nn / (16.0 * c * dd))));
  const auto y_size = static_cast<std::size_t>(std::max(1.0, std::ceil(nn / (256.0 * c))));
  if (x_size > n || y_size > n) throw InvalidArgument("hypothesis set sizes exceed n");

  Certificate cert;
  cert.kind = "upper-uniform";
  cert.n = n;
  cert.d = dd;
  cert.c = c;
  cert.s1 = nn / (32.0 * c * dd);
  cert.l = cert.s1;
  cert.s2 = nn / (512.0 * c);
  cert.sampled = true;
  cert.samples = samples;
  cert.untested = samples == 0;
  cert.graph_min_degree = g.min_degree();

  const double xy = static_cast<double>(x_size) * static_cast<double>(y_size);
  const double bound1 = 32.0 * c * xy * dd / nn;
  const double bound2 = c * xy * dd * dd / nn;

  std::vector<std::uint32_t> counts(n);
  std::vector<Vertex> scratch(n);
  std::vector<Vertex> chosen;
  struct Worst {
    std::uint64_t value = 0;
    std::vector<Vertex> x;
    std::vector<Vertex> y;
  } worst1, worst2;

  const auto greedy = detail::greedy_sets(g, x_size);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto x = i < greedy.size() ? greedy[i] : detail::random_subset(n, x_size, rng);

    std::fill(counts.begin(), counts.end(), 0);
    for (Vertex v : x) {
      for (Vertex w : g.neighbors(v)) ++counts[w];
    }
    auto value = detail::top_by_count(counts, y_size, scratch, chosen);
    if (value > worst1.value || worst1.x.empty()) worst1 = {value, x, chosen};

    const VertexSet open = gamma(g, VertexSet(n, x));
    std::fill(counts.begin(), counts.end(), 0);
    open.for_each([&](Vertex a) {
      for (Vertex w : g.neighbors(a)) ++counts[w];
    });
    value = detail::top_by_count(counts, y_size, scratch, chosen);
    if (value > worst2.value || worst2.x.empty()) worst2 = {value, x, chosen};
  }

  auto add = [&](std::string name, const Worst& worst, double bound) {
    auto cond = condition(std::move(name), static_cast<double>(worst.value), bound, true);
    if (!cond.pass && !worst.x.empty()) {
      cond.witness_x = worst.x;
      cond.witness_y = worst.y;
    }
    cert.conditions.push_back(std::move(cond));
  };
  add("e(X,Y) < 32C|X||Y|d/n", worst1, bound1);
  add("e(Gamma(X),Y) < C|X||Y|d^2/n", worst2, bound2);
  cert.conditions.push_back(condition("s1+s2 < n", cert.s1 + cert.s2, nn, true));
  cert.conditions.push_back(condition("min degree >= d", -static_cast<double>(g.min_degree()), -dd,
                                      false, false));
  finalize(cert);
  return cert;
}

}  // namespace lip
