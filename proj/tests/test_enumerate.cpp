#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ringcodes/enumerate.hpp"
#include "ringcodes/error.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace ringcodes;

namespace {

std::vector<BigInt> big(std::initializer_list<std::uint64_t> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigInt> big(const std::vector<std::uint64_t>& xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

oracle::VecSet oracle_code(const LinearCode& c) {
  const auto g = c.generator_matrix();
  std::vector<oracle::Vec> rows;
  for (std::size_t r = 0; r < g.rows(); ++r) rows.emplace_back(g.row(r).begin(), g.row(r).end());
  return oracle::span(c.ring(), rows, c.length());
}

}  // namespace

TEST_CASE("weight distributions of the reference codes") {
  const auto a1 = weight_distribution(testing::c1());
  CHECK(a1.counts() == big({1, 0, 248, 0, 15376}));
  CHECK(a1.enumerator_polynomial() == "X^4 + 248*X^2*Y^2 + 15376*Y^4");
  CHECK(a1.is_consistent());
  CHECK(a1.total() == 15625);

  CHECK(weight_distribution(testing::c2()).counts() == big({1, 0, 8, 480, 15136}));
  CHECK(weight_distribution(testing::z4_example()).counts() == big({1, 3, 7, 5}));

  const auto z9 = ChainRing::integers_mod(3, 2);
  CHECK(weight_distribution(LinearCode::from_generators(z9, 3, {{1, 0, 1}, {0, 1, 1}})).counts() ==
        big({1, 0, 24, 56}));
  const auto z4 = ChainRing::integers_mod(2, 2);
  CHECK(weight_distribution(LinearCode::from_generators(z4, 2, {{1, 1}})).counts() == big({1, 0, 3}));
}

TEST_CASE("zero code and its distance") {
  const auto zero = LinearCode::from_generators(ChainRing::integers_mod(2, 2), 3, {});
  const auto a = weight_distribution(zero);
  CHECK(a.counts() == big({1, 0, 0, 0}));
  CHECK(a.enumerator_polynomial() == "X^3");
  CHECK(codewords(zero) == std::vector<std::vector<ChainRing::Value>>{{0, 0, 0}});
  CHECK_THROWS_AS(min_distance(zero), InvalidArgument);
  CHECK_THROWS_AS(min_distance(a), InvalidArgument);
}

TEST_CASE("minimum distances") {
  CHECK(min_distance(testing::c1()) == 2);
  CHECK(min_distance(testing::c2()) == 2);
  CHECK(min_distance(testing::z4_example()) == 1);
  CHECK(min_distance(dual(testing::z4_example())) == 1);
  CHECK(min_distance(LinearCode::from_matrix(RingMatrix::identity(ChainRing::integers_mod(3, 2), 5))) == 1);
}

TEST_CASE("message space radices follow the row levels") {
  const MessageSpace m(testing::z4_example());
  CHECK(m.radices() == std::vector<std::uint64_t>{4, 2, 2});
  REQUIRE(m.size().has_value());
  CHECK(*m.size() == 16);
}

TEST_CASE("codeword enumeration is exhaustive and duplicate free") {
  const auto c = testing::z4_example();
  const auto words = codewords(c);
  CHECK(words.size() == 16);
  const std::set<std::vector<ChainRing::Value>> distinct(words.begin(), words.end());
  CHECK(distinct.size() == 16);
  oracle::VecSet as_oracle;
  for (const auto& w : words) as_oracle.insert(oracle::Vec(w.begin(), w.end()));
  CHECK(as_oracle == oracle_code(c));
}

TEST_CASE("enumeration cap") {
  const auto c1 = testing::c1();
  CHECK_THROWS_AS(weight_distribution(c1, {.cap = 1000}), CapExceeded);
  CHECK_THROWS_AS(codewords(c1, 15624), CapExceeded);
  CHECK_NOTHROW(weight_distribution(c1, {.cap = 15625}));
  const auto wide = LinearCode::from_matrix(RingMatrix::identity(ChainRing::integers_mod(5, 3), 12));
  CHECK_THROWS_AS(weight_distribution(wide), CapExceeded);
}

TEST_CASE("property: enumeration agrees with the brute-force span") {
  testing::CorpusOptions opt;
  opt.count = 40;
  opt.max_length = 5;
  opt.rings = {ChainRing::integers_mod(2, 2), ChainRing::integers_mod(3, 2), ChainRing::truncated_poly(2, 3)};
  for (const auto& c : testing::random_corpus(opt)) {
    const auto set = oracle_code(c);
    CHECK(weight_distribution(c).counts() == big(oracle::weights(set, c.length())));
    CHECK(codewords(c).size() == set.size());
  }
}

TEST_CASE("property: results do not depend on the worker count") {
  for (const auto& c : testing::random_corpus()) {
    const auto one = weight_distribution(c, {.workers = 1});
    CHECK(one.is_consistent());
    CHECK(one.total() == c.cardinality());
    CHECK(weight_distribution(c, {.workers = 2}) == one);
    CHECK(weight_distribution(c, {.workers = 8}) == one);
  }
}

TEST_CASE("property: distribution is invariant under column permutation and unit scaling") {
  std::mt19937_64 rng(21);
  for (const auto& c : testing::random_corpus({.count = 40})) {
    const auto& R = c.ring();
    const auto g = c.generator_matrix();
    std::vector<std::size_t> perm(c.length());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ChainRing::Value> units(c.length());
    for (auto& u : units)
      do u = static_cast<ChainRing::Value>(rng() % R.size());
      while (!R.is_unit(u));

    RingMatrix t(R, g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t j = 0; j < g.cols(); ++j) t(r, j) = R.mul(units[j], g(r, perm[j]));
    const auto other = LinearCode::from_matrix(t);
    CHECK(other.profile() == c.profile());
    CHECK(weight_distribution(other) == weight_distribution(c));
  }
}
