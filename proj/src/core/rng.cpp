#include "rng.hpp"

namespace pastrev {

std::pair<RngState, std::uint64_t> rng_next(RngState s) {
  if (s.state == 0) throw ZeroState("rng state must be nonzero");
  std::uint64_t x = s.state;
  x ^= x >> 12;
  x ^= x << 25;
  x ^= x >> 27;
  return {RngState{x}, x * 2685821657736338717ULL};
}

Rng::Rng(std::uint64_t seed) : state_{seed} {
  if (seed == 0) throw ZeroState("rng seed must be nonzero");
}

std::uint64_t Rng::next() {
  auto [state, out] = rng_next(state_);
  state_ = state;
  return out;
}

long Rng::entry(int bound) {
  if (bound < 1) throw InvalidDimension("entry bound must be >= 1");
  const std::uint64_t span = 2ULL * static_cast<std::uint64_t>(bound) + 1ULL;
  return static_cast<long>(next() % span) - bound;
}

int Rng::dim(int max_dim) {
  if (max_dim < 1) throw InvalidDimension("max dimension must be >= 1");
  return 1 + static_cast<int>(next() % static_cast<std::uint64_t>(max_dim));
}

Rational Rng::rational_scalar(int bound) {
  const long num = entry(bound);
  const long den = 1 + static_cast<long>(next() % static_cast<std::uint64_t>(bound));
  return Rational(num, den);
}

Matrix random_matrix(Rng& rng, int rows, int cols, int bound) {
  Matrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = Rational(rng.entry(bound));
  return out;
}

Vector random_vector(Rng& rng, int n, int bound) {
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) entries.emplace_back(rng.entry(bound));
  return Vector(std::move(entries));
}

}  // namespace pastrev
