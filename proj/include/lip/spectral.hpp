#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lip/graph.hpp"

namespace lip {

enum class EigenMethod : std::uint8_t { Dense, Iterative };
std::string_view to_string(EigenMethod method) noexcept;

/// Adjacency spectrum summary of a d-regular graph:
/// λ = max(λ2, -λn) where λ1 = d ≥ λ2 ≥ ... ≥ λn.
struct SpectralReport {
  std::size_t n = 0;
  std::size_t d = 0;
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double lambda = 0.0;
  EigenMethod method = EigenMethod::Dense;
  /// Largest eigen-residual ||Ax - θx|| of the two reported Ritz pairs (or a
  /// backward-error bound when eigenvectors are not formed).
  double residual = 0.0;
  std::size_t iterations = 0;
  bool alon_boppana_ok = false;
};

struct SpectralOptions {
  std::size_t dense_limit = 4096;
  /// Eigenvectors (and hence true residuals) are formed up to this size.
  std::size_t dense_vector_limit = 1024;
  std::size_t max_krylov = 1000;
  /// Target residual relative to max(d, 1).
  double relative_tolerance = 1e-8;
  std::uint64_t seed = 0x5EED;
};

/// Throws NotRegular for irregular input, InvalidArgument for n < 2 and
/// NoConvergence (with the achieved residual) if Lanczos stalls.
SpectralReport compute_lambda(const Graph& g, const SpectralOptions& options = {});

struct MixingCheck {
  double lhs = 0.0;  // |e(A,B) - |A||B| d/n|
  double rhs = 0.0;  // λ sqrt(|A||B|)
  bool pass = false;
};

/// Expander mixing bound for a d-regular g.
MixingCheck mixing_check(const Graph& g, double lambda, const VertexSet& a, const VertexSet& b);

/// Lower bound obeyed by every d-regular graph: λ² ≥ d(n-d)/(n-1).
bool alon_boppana_check(std::size_t n, std::size_t d, double lambda);

/// Relative slack used by all certificate comparisons.
inline constexpr double kCertificateTolerance = 1e-9;

struct CertificateCondition {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool strict = true;
  bool pass = false;
  /// Informational checks do not enter `overall`.
  bool required = true;
  std::optional<std::vector<Vertex>> witness_x;
  std::optional<std::vector<Vertex>> witness_y;
};

/// Parameter chain showing that a graph meets the sparsity conditions of the
/// induced-path search. Real-valued ℓ, s1, s2 are used in the arithmetic;
/// floors are what would be handed to the search.
struct Certificate {
  std::string kind;  // "ndlambda" or "upper-uniform"
  std::size_t n = 0;
  double d = 0.0;
  std::optional<double> lambda;
  std::optional<double> c;
  double l = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  std::size_t l_floor = 0;
  std::size_t s1_floor = 0;
  std::size_t s2_floor = 0;
  std::vector<CertificateCondition> conditions;
  bool overall = false;
  bool sampled = false;
  std::size_t samples = 0;
  /// Sampled certificate with zero samples: nothing was looked at.
  bool untested = false;
  /// Upper-uniform only: actual minimum degree of the graph.
  std::optional<std::size_t> graph_min_degree;
};

/// (n, d, λ)-graph certificate. ℓ = s1 = n/(32d) and s2 = 2λ²n/d².
///   (1) s1·|Y|·d/n + λ√(s1|Y|) < d/4·s1,  |Y| = max(3 s2, ℓ+s1+s2)
///   (2) |Γ|·s2·d/n + λ√(|Γ| s2) ≤ d/4·s2,  |Γ| = d(ℓ+s1) ≥ |Γ(X)|
///   s1 + s2 < n
/// both bounds coming from the mixing lemma. s2 carries a factor 2 so that
/// (2) still closes with |X| = ℓ+s1 = 2 s1; with s2 = λ²n/d² the second term
/// alone equals the right-hand side. "s2 ≥ s1" is reported, not required.
Certificate certify_spectral_expander(std::size_t n, std::size_t d, double lambda);

/// Sampled upper-uniformity certificate for a graph of minimum degree d ≥ 256
/// and C > 1. Hypothesis sets have sizes ⌈n/(16Cd)⌉ and ⌈n/(256C)⌉:
///   e(X,Y) < 32C|X||Y|d/n  and  e(Γ(X),Y) < C|X||Y|d²/n,
/// and ℓ = s1 = n/(32Cd), s2 = n/(512C). Each sampled X (greedy first, then
/// random) is paired with its maximizing Y. overall = no violation seen.
Certificate certify_upper_uniform(const Graph& g, std::size_t d, double c, std::size_t samples,
                                  std::uint64_t seed);

}  // namespace lip
