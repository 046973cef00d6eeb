#pragma once

#include <cstdint>
#include <utility>

#include "matrix.hpp"
#include "vector.hpp"

namespace pastrev {

struct RngState {
  std::uint64_t state = 0;  // must be nonzero to step
};

/// One xorshift64* step: x ^= x>>12; x ^= x<<25; x ^= x>>27;
/// output = x * 2685821657736338717 (mod 2^64). Pinned so independent
/// implementations produce identical streams. Throws ZeroState on state 0.
std::pair<RngState, std::uint64_t> rng_next(RngState s);

/// Convenience wrapper around the pinned recurrence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  /// Integer uniform in [-bound, bound]: next() mod (2*bound+1), shifted.
  long entry(int bound);

  /// Dimension uniform in [1, max_dim].
  int dim(int max_dim);

  /// Rational with numerator in [-bound, bound], denominator in [1, bound].
  Rational rational_scalar(int bound);

  bool coin() { return (next() & 1u) != 0; }

  RngState state() const { return state_; }

 private:
  RngState state_;
};

/// Entries uniform in [-bound, bound] drawn row-major from the stream.
Matrix random_matrix(Rng& rng, int rows, int cols, int bound);
Vector random_vector(Rng& rng, int n, int bound);

}  // namespace pastrev
