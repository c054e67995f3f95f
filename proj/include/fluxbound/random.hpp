#pragma once

// Counter-derived random substreams. Draw i of a run is a pure function of
// (master_seed, stream_id, i), independent of thread count or scheduling.

#include <cstdint>

#include "fluxbound/hermitian.hpp"
#include "fluxbound/quantum_state.hpp"

namespace fluxbound {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for one draw of one named suite.
  static RandomStream derive(std::uint64_t master_seed, std::uint64_t stream_id,
                             std::uint64_t index) {
    const std::uint64_t a = mix64(master_seed + 0x9E3779B97F4A7C15ULL);
    const std::uint64_t b = mix64(a ^ (stream_id * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
    return RandomStream(mix64(b ^ (index + 1) * 0x9E3779B97F4A7C15ULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal (Box-Muller, one value per call).
  double normal();

 private:
  std::uint64_t state_;
};

/// Hermitian matrix with i.i.d. complex Gaussian entries (GUE-like).
HermitianOperator random_hermitian(std::size_t dim, RandomStream& rng, double scale = 1.0);

/// Full-rank state G G^dag / tr(G G^dag) from a complex Ginibre matrix G.
DensityMatrix random_density(std::size_t dim, RandomStream& rng,
                             const Tolerances& tol = default_tolerances());

/// exp(-i H) for a random Hermitian H of scale pi.
ComplexMatrix random_unitary(std::size_t dim, RandomStream& rng,
                             const Tolerances& tol = default_tolerances());

}  // namespace fluxbound
