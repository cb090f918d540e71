#include <doctest.h>

#include <map>

#include "ringcodes/error.hpp"
#include "ringcodes/ring.hpp"
#include "support/oracles.hpp"

using namespace ringcodes;

namespace {

std::vector<ChainRing> small_rings() {
  std::vector<ChainRing> out;
  for (auto b : {Backend::Integer, Backend::Polynomial})
    for (auto [p, s] : {std::pair{2U, 1U}, {2U, 2U}, {2U, 3U}, {3U, 2U}, {5U, 2U}, {2U, 7U}, {3U, 3U}, {7U, 2U}})
      out.emplace_back(p, s, b);
  return out;
}

}  // namespace

TEST_CASE("ring parameters are validated") {
  CHECK_THROWS_AS(ChainRing(4, 2), InvalidArgument);
  CHECK_THROWS_AS(ChainRing(1, 2), InvalidArgument);
  CHECK_THROWS_AS(ChainRing(2, 0), InvalidArgument);
  CHECK_THROWS_AS(ChainRing(2, 32), InvalidArgument);
  CHECK_NOTHROW(ChainRing(2, 31));
  CHECK(ChainRing(5, 3).size() == 125);
  CHECK(ChainRing(3, 4, Backend::Polynomial).size() == 81);
}

TEST_CASE("ring arithmetic examples") {
  const auto z4 = ChainRing::integers_mod(2, 2);
  const auto z8 = ChainRing::integers_mod(2, 3);
  const auto f2u3 = ChainRing::truncated_poly(2, 3);

  CHECK(z4.element(3) + z4.element(3) == z4.element(2));
  CHECK(z8.element(2) * z8.element(4) == z8.element(0));

  // u^2 + u times u is u^2 once u^3 is truncated.
  const auto a = RingElement(f2u3, f2u3.from_digits(std::vector<unsigned>{0, 1, 1}));
  const auto u = RingElement(f2u3, f2u3.from_digits(std::vector<unsigned>{0, 1, 0}));
  CHECK((a * u).value() == f2u3.from_digits(std::vector<unsigned>{0, 0, 1}));
  CHECK((a * u).to_string() == "u^2");

  CHECK((-z4.element(1)).value() == 3);
  CHECK((z8.element(1) - z8.element(3)).value() == 6);
}

TEST_CASE("mixing rings is an error") {
  const auto z4 = ChainRing::integers_mod(2, 2);
  const auto poly = ChainRing::truncated_poly(2, 2);
  const auto z8 = ChainRing::integers_mod(2, 3);
  CHECK_THROWS_AS(z4.element(1) + poly.element(1), IncompatibleRings);
  CHECK_THROWS_AS(z4.element(1) * z8.element(1), IncompatibleRings);
  CHECK_THROWS_AS(z4.element(4), InvalidArgument);
}

TEST_CASE("gamma decomposition examples") {
  const auto z8 = ChainRing::integers_mod(2, 3);
  auto d = gamma_decompose(z8.element(6));
  CHECK(d.valuation == 1);
  REQUIRE(d.unit.has_value());
  CHECK(d.unit->value() == 3);

  d = gamma_decompose(z8.element(0));
  CHECK(d.valuation == 3);
  CHECK_FALSE(d.unit.has_value());

  const auto f3u2 = ChainRing::truncated_poly(3, 2);
  d = gamma_decompose(RingElement(f3u2, f3u2.from_digits(std::vector<unsigned>{0, 2})));
  CHECK(d.valuation == 1);
  REQUIRE(d.unit.has_value());
  CHECK(d.unit->value() == 2);
}

TEST_CASE("unit inverse examples") {
  const auto z4 = ChainRing::integers_mod(2, 2);
  CHECK(unit_inverse(z4.element(3)).value() == 3);

  const auto z125 = ChainRing::integers_mod(5, 3);
  // Frozen from an exhaustive scan of Z/125.
  CHECK(oracle::inverse_by_scan(z125, 57) == 68);
  CHECK(unit_inverse(z125.element(57)).value() == 68);

  const auto f2u3 = ChainRing::truncated_poly(2, 3);
  const auto one_plus_u = f2u3.from_digits(std::vector<unsigned>{1, 1, 0});
  CHECK(f2u3.inverse(one_plus_u) == f2u3.from_digits(std::vector<unsigned>{1, 1, 1}));

  CHECK_THROWS_AS(unit_inverse(z4.element(2)), NotInvertible);
  CHECK_THROWS_AS(unit_inverse(z4.element(0)), NotInvertible);
}

TEST_CASE("gamma is nilpotent of index s") {
  for (const auto& R : small_rings()) {
    CAPTURE(R.name());
    ChainRing::Value g = R.one();
    for (unsigned i = 0; i + 1 < R.s(); ++i) g = R.mul(g, R.gamma());
    if (R.s() > 1) CHECK(g != 0);  // gamma^(s-1)
    CHECK(R.mul(g, R.gamma()) == 0);
  }
}

TEST_CASE("ring axioms hold on exhaustive scans") {
  for (const auto& R : small_rings()) {
    if (R.size() > 27) continue;
    CAPTURE(R.name());
    const auto q = static_cast<std::uint32_t>(R.size());
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        REQUIRE(R.add(a, b) == R.add(b, a));
        REQUIRE(R.mul(a, b) == R.mul(b, a));
        REQUIRE(R.add(R.sub(a, b), b) == a);
        for (std::uint32_t c = 0; c < q; ++c) {
          REQUIRE(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
          REQUIRE(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
          REQUIRE(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
        }
      }
  }
}

TEST_CASE("decomposition, ideal sizes and inverses on every element") {
  for (const auto& R : small_rings()) {
    if (R.size() > 256) continue;
    CAPTURE(R.name());
    std::vector<std::uint64_t> at_least(R.s() + 1, 0);
    for (std::uint32_t a = 0; a < R.size(); ++a) {
      const auto e = R.element(a);
      const auto d = gamma_decompose(e);
      for (unsigned j = 0; j <= d.valuation; ++j) ++at_least[j];
      if (a == 0) continue;
      REQUIRE(d.unit.has_value());
      CHECK(d.unit->is_unit());
      CHECK(d.valuation < R.s());
      CHECK(R.shift_up(d.unit->value(), d.valuation) == a);
      if (e.is_unit()) {
        const auto inv = unit_inverse(e);
        CHECK((e * inv).value() == 1);
        CHECK(unit_inverse(inv) == e);
        CHECK(inv.value() == oracle::inverse_by_scan(R, a));
      }
    }
    // |gamma^j R| = p^(s-j)
    for (unsigned j = 0; j <= R.s(); ++j) CHECK(at_least[j] == R.pow_p(R.s() - j));
  }
}

TEST_CASE("both backends share the valuation histogram") {
  for (auto [p, s] : {std::pair{2U, 3U}, {3U, 2U}, {5U, 2U}, {2U, 6U}}) {
    const ChainRing zi(p, s, Backend::Integer), zp(p, s, Backend::Polynomial);
    std::map<unsigned, std::uint64_t> hi, hp;
    for (std::uint32_t a = 0; a < zi.size(); ++a) {
      ++hi[zi.valuation(a)];
      ++hp[zp.valuation(a)];
    }
    CHECK(hi == hp);
  }
}

TEST_CASE("reduce and shift agree with the ideal structure") {
  for (const auto& R : small_rings()) {
    if (R.size() > 128) continue;
    CAPTURE(R.name());
    for (std::uint32_t a = 0; a < R.size(); ++a)
      for (unsigned m = 0; m <= R.s(); ++m) {
        const auto r = R.reduce(a, m);
        CHECK(r < R.pow_p(m));
        // a - r lies in gamma^m R and equals gamma^m * (a / p^m).
        CHECK(R.valuation(R.sub(a, r)) >= m);
        CHECK(R.sub(a, r) == R.shift_up(R.shift_down(a, m), m));
      }
  }
}

TEST_CASE("formatting and coefficient round trip") {
  const auto R = ChainRing::truncated_poly(3, 3);
  CHECK(R.format(R.from_digits(std::vector<unsigned>{1, 0, 2})) == "2u^2 + 1");
  CHECK(R.name() == "F_3[u]/(u^3)");
  CHECK(ChainRing::integers_mod(5, 3).name() == "Z/125");
  for (std::uint32_t a = 0; a < R.size(); ++a) CHECK(R.from_digits(R.digits(a)) == a);
  CHECK_THROWS_AS(R.from_digits(std::vector<unsigned>{1, 3, 0}), InvalidArgument);
  CHECK_THROWS_AS(R.from_digits(std::vector<unsigned>{1, 0}), InvalidArgument);
  CHECK(R.from_integer(-1) == 2);
  CHECK(ChainRing::integers_mod(2, 3).from_integer(-1) == 7);
}
