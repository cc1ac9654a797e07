#pragma once

#include <cstdint>
#include <optional>

#include "krein/frames.hpp"
#include "krein/rng.hpp"

namespace krein {

struct GenConfig {
  int dim = 2;
  int n_plus = 1, n_minus = 1;
  int family_size = 2;
  std::uint64_t seed = 0;
  double scale = 1.0;  // magnitude spread of sampled entries
};

// G = S* D S with S a seeded well-conditioned matrix (condition <= 1e3,
// enforced by resampling) and D = diag(+1 x n_plus, -1 x n_minus).
KreinSpace random_krein(const GenConfig& config);

// A family passing jframe_check by construction: a maximal uniformly positive
// and a maximal uniformly negative span (contraction graphs over the
// canonical decomposition), filled up with in-span extras, order shuffled.
VectorFamily random_jframe(const KreinSpace& space, int family_size,
                           std::uint64_t seed);

// Random k-dimensional subspace; resamples until regular when requested.
Subspace random_subspace(const KreinSpace& space, int k, std::uint64_t seed,
                         bool require_regular = true);

// Uniformly definite subspace of dimension k (k <= n_plus resp. n_minus);
// maximal when k equals the signature count. sign is +1 or -1.
Subspace random_definite_subspace(const KreinSpace& space, int k, int sign,
                                  std::uint64_t seed);

// Subspace invariant under the canonical symmetry: a k_plus-dimensional piece
// of K+ plus a k_minus-dimensional piece of K-.
Subspace random_invariant_subspace(const KreinSpace& space, int k_plus,
                                   int k_minus, std::uint64_t seed);

// U with U* G U = G (an isometry of the indefinite form).
Matrix random_j_unitary(const KreinSpace& space, std::uint64_t seed);

// `count` nonzero vectors inside the span of the subspace.
Matrix in_span_vectors(const Subspace& m, int count, Rng& rng, Field field);

// Monte-Carlo estimate of the per-side ratio extremes
//   sum_{i in I+-} |[f, f_i]|^2 / [f, f]
// over random unit-coefficient vectors in each definite span. Kept
// independent of the pencil route: spans via modified Gram-Schmidt, sums by
// direct evaluation.
struct SampledBounds {
  std::optional<PlusBounds> plus;
  std::optional<MinusBounds> minus;
};
SampledBounds sampled_bounds(const KreinSpace& space,
                             const VectorFamily& family, int samples,
                             std::uint64_t seed);

// Two J-frames on one space with identical optimal bounds whose projections
// onto a uniformly positive regular subspace have visibly different optimal
// bounds (no closed-form transfer of bounds exists). Found by seeded search.
struct ProjectionCounterexample {
  Matrix gram;
  Matrix family1, family2;
  Matrix subspace_basis;
  std::uint64_t seed = 0;
};

ProjectionCounterexample projection_counterexample(std::uint64_t seed,
                                                   int budget = 64);

struct CounterexampleVerdict {
  bool original_bounds_match = false;
  double projected_rel_diff = 0.0;
  bool ok = false;  // bounds match and relative difference >= 0.10
};
CounterexampleVerdict verify_projection_counterexample(
    const ProjectionCounterexample& fixture, double tol = kDefaultTol);

}  // namespace krein
