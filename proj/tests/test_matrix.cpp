#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ringcodes/code.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/matrix.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace ringcodes;

namespace {

const ChainRing kZ4 = ChainRing::integers_mod(2, 2);

oracle::VecSet rowspace(const RingMatrix& m) {
  std::vector<oracle::Vec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return oracle::span(m.ring(), rows, m.cols());
}

RingMatrix random_matrix(std::mt19937_64& rng, const ChainRing& R, std::size_t rows, std::size_t cols) {
  RingMatrix m(R, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    // Sometimes push a whole row into gamma^k R to get non-free structure.
    const unsigned shift = rng() % 3 == 0 ? static_cast<unsigned>(rng() % (R.s() + 1)) : 0;
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = R.shift_up(static_cast<ChainRing::Value>(rng() % R.size()), shift);
  }
  return m;
}

std::vector<ChainRing> property_rings() {
  return {ChainRing::integers_mod(2, 2), ChainRing::integers_mod(2, 3), ChainRing::integers_mod(3, 2),
          ChainRing::truncated_poly(2, 2), ChainRing::truncated_poly(2, 3), ChainRing::truncated_poly(3, 2),
          ChainRing::integers_mod(3, 1)};
}

}  // namespace

TEST_CASE("standard form of the Z/4 example is the input itself") {
  const RingMatrix g(kZ4, 3, {{1, 0, 1}, {0, 2, 0}, {0, 0, 2}});
  const auto sf = standard_form(g);
  CHECK(sf.reduced == g);
  CHECK(sf.profile == TypeProfile{1, 2});
  CHECK(sf.permutation.is_identity());
  CHECK(sf.row_levels == std::vector<unsigned>{0, 1, 1});
}

TEST_CASE("standard form of the identity") {
  for (const auto& R : {kZ4, ChainRing::integers_mod(5, 3), ChainRing::truncated_poly(3, 2)}) {
    const auto sf = standard_form(RingMatrix::identity(R, 4));
    CHECK(sf.reduced == RingMatrix::identity(R, 4));
    TypeProfile expected(R.s());
    expected.counts[0] = 4;
    CHECK(sf.profile == expected);
    CHECK(sf.permutation.is_identity());
  }
}

TEST_CASE("standard form permutes columns and preserves the row space") {
  const RingMatrix g(kZ4, 2, {{2, 1}, {1, 1}});
  const auto sf = standard_form(g);
  CHECK(sf.reduced == RingMatrix::identity(kZ4, 2));
  CHECK(sf.profile == TypeProfile{2, 0});
  CHECK_FALSE(sf.permutation.is_identity());
  CHECK(sf.permutation.one_based_targets() == std::vector<std::size_t>{2, 1});
  // Row-space oracle: enumerate both sides.
  CHECK(rowspace(sf.permutation.apply(g)) == rowspace(sf.reduced));
  CHECK(rowspace(g).size() == 16);
}

TEST_CASE("zero rows and zero matrices") {
  const RingMatrix z(kZ4, 3, 4);
  const auto sf = standard_form(z);
  CHECK(sf.reduced.rows() == 0);
  CHECK(sf.reduced.cols() == 4);
  CHECK(sf.profile == TypeProfile{0, 0});
  CHECK(rowspace_size(z) == 1);

  const RingMatrix g(kZ4, 3, {{1, 1, 0}, {2, 2, 0}, {0, 0, 0}});
  CHECK(standard_form(g).profile == TypeProfile{1, 0});
}

TEST_CASE("matrix_type reports raw row valuations") {
  CHECK(matrix_type(RingMatrix(kZ4, 2, {{2, 2}, {0, 0}})) == TypeProfile{0, 1});
  CHECK(matrix_type(RingMatrix(kZ4, 2, {{1, 0}, {0, 2}})) == TypeProfile{1, 1});
  // Dependent rows are still counted; the canonical type drops them.
  const RingMatrix dep(kZ4, 2, {{1, 1}, {1, 1}});
  CHECK(matrix_type(dep) == TypeProfile{2, 0});
  CHECK(standard_form(dep).profile == TypeProfile{1, 0});

  const auto h = testing::c1().parity_check();
  CHECK(matrix_type(h) == TypeProfile{2, 0, 0});
}

TEST_CASE("submatrix selection") {
  const auto id = RingMatrix::identity(kZ4, 3);
  const std::vector<std::size_t> cols{0, 2};
  CHECK(submatrix(id, cols) == RingMatrix(kZ4, 2, {{1, 0}, {0, 0}, {0, 1}}));

  const RingMatrix h(kZ4, 3, {{0, 2, 0}, {2, 0, 2}});
  CHECK(submatrix(h, cols) == RingMatrix(kZ4, 2, {{0, 0}, {2, 2}}));

  const std::vector<std::size_t> all{0, 1, 2};
  CHECK(submatrix(h, all) == h);

  const std::vector<std::size_t> out_of_range{0, 3};
  const std::vector<std::size_t> repeated{1, 1};
  const std::vector<std::size_t> unordered{2, 1};
  CHECK_THROWS_AS(submatrix(h, out_of_range), InvalidArgument);
  CHECK_THROWS_AS(submatrix(h, repeated), InvalidArgument);
  CHECK_THROWS_AS(submatrix(h, unordered), InvalidArgument);
}

TEST_CASE("submatrix type counts") {
  SUBCASE("C1 parity check, nu above n - d_dual") {
    const auto h = testing::c1().parity_check();
    const auto counts = count_submatrix_types(h, 3);
    REQUIRE(counts.size() == 1);
    CHECK(counts.begin()->first == TypeProfile{2, 0, 0});
    CHECK(counts.begin()->second == 4);
  }
  SUBCASE("Z/4 example parity check, nu at the threshold") {
    const RingMatrix h(kZ4, 3, {{0, 2, 0}, {2, 0, 2}});
    const auto counts = count_submatrix_types(h, 2);
    CHECK(counts.size() == 2);
    CHECK(counts.at(TypeProfile{0, 2}) == 2);
    CHECK(counts.at(TypeProfile{0, 1}) == 1);
  }
  SUBCASE("nu = cols gives the canonical type once") {
    const RingMatrix m(kZ4, 3, {{1, 1, 0}, {1, 1, 0}, {0, 2, 2}});
    const auto counts = count_submatrix_types(m, 3);
    REQUIRE(counts.size() == 1);
    CHECK(counts.begin()->first == standard_form(m).profile);
  }
  SUBCASE("range and cap errors") {
    const auto id = RingMatrix::identity(kZ4, 30);
    CHECK_THROWS_AS(count_submatrix_types(id, 0), InvalidArgument);
    CHECK_THROWS_AS(count_submatrix_types(id, 31), InvalidArgument);
    CHECK_THROWS_AS(count_submatrix_types(id, 15), CapExceeded);
    CHECK_THROWS_AS(count_submatrix_types(id, 3, {.cap = 100}), CapExceeded);
  }
}

TEST_CASE("row space sizes") {
  CHECK(rowspace_size(RingMatrix(kZ4, 3, {{1, 0, 1}, {0, 2, 0}, {0, 0, 2}})) == 16);
  CHECK(rowspace_size(RingMatrix::identity(ChainRing::integers_mod(3, 2), 3)) == 729);
  CHECK(rowspace_size(RingMatrix(ChainRing::integers_mod(5, 3), 4, {{1, 0, 57, 0}, {0, 1, 0, 68}})) == 15625);
}

TEST_CASE("dual type formula") {
  CHECK(dual_type(TypeProfile{1, 2}, 3) == TypeProfile{0, 2});
  CHECK(dual_type(TypeProfile{2, 0, 0}, 4) == TypeProfile{2, 0, 0});
  CHECK(dual_type(TypeProfile{1, 2, 3}, 10) == TypeProfile{4, 3, 2});
}

TEST_CASE("property: standard form preserves the row space") {
  std::mt19937_64 rng(11);
  for (const auto& R : property_rings()) {
    if (R.size() > 9) continue;
    CAPTURE(R.name());
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_matrix(rng, R, 1 + rng() % 4, 1 + rng() % 4);
      const auto sf = standard_form(m);
      const auto expected = rowspace(sf.permutation.apply(m));
      REQUIRE(expected == rowspace(sf.reduced));
      CHECK(cardinality(R, sf.profile) == expected.size());
      CHECK(sf.profile.rank() == sf.reduced.rows());
    }
  }
}

TEST_CASE("property: standard form shape") {
  std::mt19937_64 rng(12);
  for (const auto& R : property_rings()) {
    CAPTURE(R.name());
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = random_matrix(rng, R, 1 + rng() % 6, 1 + rng() % 7);
      const auto sf = standard_form(m);
      const auto& g = sf.reduced;
      for (std::size_t r = 0; r < g.rows(); ++r) {
        const unsigned level = sf.row_levels[r];
        if (r > 0) CHECK(level >= sf.row_levels[r - 1]);
        CHECK(g(r, r) == R.shift_up(1, level));
        for (std::size_t c = 0; c < g.cols(); ++c) {
          CHECK(R.valuation(g(r, c)) >= level);
          if (c < r) CHECK(g(r, c) == 0);
          // Pivot columns of the same level are cleared above and below.
          if (c < g.rows() && c != r && sf.row_levels[c] == level) CHECK(g(r, c) == 0);
          // Below a pivot everything is cleared.
          if (c < g.rows() && r > c) CHECK(g(r, c) == 0);
        }
      }
    }
  }
}

TEST_CASE("property: standard form is idempotent and invariant under row operations") {
  std::mt19937_64 rng(13);
  for (const auto& R : property_rings()) {
    CAPTURE(R.name());
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_matrix(rng, R, 1 + rng() % 5, 1 + rng() % 6);
      const auto sf = standard_form(m);

      const auto again = standard_form(sf.reduced);
      CHECK(again.profile == sf.profile);
      CHECK(again.permutation.is_identity());
      CHECK(again.reduced == sf.reduced);

      // Shuffle rows and scale each by a random unit.
      std::vector<std::size_t> order(m.rows());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      RingMatrix t(R, m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r) {
        ChainRing::Value unit = 0;
        while (!R.is_unit(unit)) unit = static_cast<ChainRing::Value>(rng() % R.size());
        for (std::size_t c = 0; c < m.cols(); ++c) t(r, c) = R.mul(unit, m(order[r], c));
      }
      CHECK(standard_form(t).profile == sf.profile);
    }
  }
}

TEST_CASE("property: submatrix type counts total binom(cols, nu)") {
  std::mt19937_64 rng(14);
  const auto rings = property_rings();
  for (int trial = 0; trial < 30; ++trial) {
    const auto& R = rings[trial % rings.size()];
    const auto m = random_matrix(rng, R, 1 + rng() % 4, 1 + rng() % 7);
    for (std::size_t nu = 1; nu <= m.cols(); ++nu) {
      std::uint64_t total = 0;
      for (const auto& [type, count] : count_submatrix_types(m, nu)) total += count;
      CHECK(total == oracle::choose(m.cols(), nu));
      CHECK(count_submatrix_types(m, nu, {.workers = 3}) == count_submatrix_types(m, nu));
    }
  }
}
