#pragma once

// Seeded corpus of random codes shared by the property tests and the
// acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "ringcodes/code.hpp"
#include "ringcodes/ring.hpp"

namespace ringcodes::testing {

inline LinearCode c1() {
  return LinearCode::from_generators(ChainRing::integers_mod(5, 3), 4, {{1, 0, 57, 0}, {0, 1, 0, 68}});
}

inline LinearCode c2() {
  return LinearCode::from_generators(ChainRing::integers_mod(5, 3), 4, {{1, 0, 5, 43}, {0, 1, 82, 5}});
}

/// <(1,0,1), (0,2,0), (0,0,2)> over Z/4.
inline LinearCode z4_example() {
  return LinearCode::from_generators(ChainRing::integers_mod(2, 2), 3, {{1, 0, 1}, {0, 2, 0}, {0, 0, 2}});
}

struct CorpusOptions {
  std::uint64_t seed = 20240611;
  std::size_t count = 100;
  std::size_t max_length = 8;
  /// Both |C| and |C^perp| stay at or below this.
  std::uint64_t max_size = std::uint64_t{1} << 16;
  std::vector<ChainRing> rings = {ChainRing::integers_mod(2, 2), ChainRing::integers_mod(2, 3),
                                  ChainRing::integers_mod(3, 2), ChainRing::integers_mod(5, 2)};
};

/// Codes cycle through the rings in order. Rows are uniform over R with a
/// one-in-three chance of being multiplied by a power of gamma, so non-free
/// codes show up regularly. Draws whose code or dual exceeds max_size are
/// rejected.
inline std::vector<LinearCode> random_corpus(const CorpusOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed);
  auto below = [&](std::uint64_t m) { return rng() % m; };
  std::vector<LinearCode> out;
  out.reserve(opt.count);
  while (out.size() < opt.count) {
    const auto& R = opt.rings[out.size() % opt.rings.size()];
    const std::size_t n = 2 + below(opt.max_length - 1);
    const std::size_t rows = 1 + below(n);
    std::vector<std::vector<std::uint64_t>> g(rows, std::vector<std::uint64_t>(n));
    for (auto& row : g) {
      const unsigned shift = below(3) == 0 ? static_cast<unsigned>(1 + below(R.s())) : 0;
      for (auto& x : row) x = R.shift_up(static_cast<ChainRing::Value>(below(R.size())), shift);
    }
    auto code = LinearCode::from_generators(R, n, g);
    // Neither the code nor its dual may be the zero code: both need a
    // minimum distance.
    if (code.rank() == 0 || code.free_rank() == n) continue;
    const BigInt size = code.cardinality();
    const BigInt dual_size = ipow(BigInt(R.size()), n) / size;
    if (size > opt.max_size || dual_size > opt.max_size) continue;
    out.push_back(std::move(code));
  }
  return out;
}

}  // namespace ringcodes::testing
