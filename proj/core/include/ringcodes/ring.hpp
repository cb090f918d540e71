#pragma once

// Finite commutative chain rings with a residue field of p elements.
//
// Two concrete rings are supported, both with p^s elements and maximal ideal
// generated by gamma:
//   - Backend::Integer     Z/p^s Z,           gamma = p
//   - Backend::Polynomial  F_p[u]/(u^s),      gamma = u
//
// Elements of both rings are packed into a single word in [0, p^s). For the
// integer ring this is the least nonnegative residue; for the polynomial ring
// it is the base-p number whose digits are the coefficients (lowest degree in
// the least significant digit). With this packing, multiplication by gamma^k,
// exact division by gamma^k and reduction modulo gamma^k are the integer
// operations *p^k, /p^k and %p^k in both rings. Only + and * differ.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringcodes {

enum class Backend : std::uint8_t { Integer, Polynomial };

std::string_view backend_name(Backend b);  // "int" / "poly"
Backend parse_backend(std::string_view name);

class RingElement;

class ChainRing {
 public:
  using Value = std::uint32_t;

  /// Largest supported ring size p^s.
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 31;

  /// Throws InvalidArgument unless p is prime, s >= 1 and p^s <= kMaxSize.
  ChainRing(unsigned p, unsigned s, Backend backend = Backend::Integer);

  static ChainRing integers_mod(unsigned p, unsigned s) { return {p, s, Backend::Integer}; }
  static ChainRing truncated_poly(unsigned p, unsigned s) { return {p, s, Backend::Polynomial}; }

  unsigned p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  Backend backend() const noexcept { return backend_; }
  std::uint64_t size() const noexcept { return size_; }

  /// p^k for 0 <= k <= s.
  std::uint64_t pow_p(unsigned k) const noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p_;
    return r;
  }

  Value zero() const noexcept { return 0; }
  Value one() const noexcept { return 1; }
  /// The maximal-ideal generator (p, resp. u); zero when s == 1.
  Value gamma() const noexcept { return s_ == 1 ? 0 : static_cast<Value>(p_); }

  Value add(Value a, Value b) const noexcept;
  Value sub(Value a, Value b) const noexcept;
  Value neg(Value a) const noexcept;
  Value mul(Value a, Value b) const noexcept;

  /// Largest v with gamma^v | a; s for a == 0.
  unsigned valuation(Value a) const noexcept;
  bool is_unit(Value a) const noexcept { return a % p_ != 0; }

  /// gamma^k * a.
  Value shift_up(Value a, unsigned k) const noexcept {
    return k >= s_ ? 0 : static_cast<Value>((std::uint64_t{a} * pow_p(k)) % size_);
  }
  /// The representative in [0, p^(s-k)) of a / gamma^k; requires valuation(a) >= k.
  Value shift_down(Value a, unsigned k) const noexcept {
    return static_cast<Value>(a / pow_p(k));
  }
  /// Canonical representative of a modulo gamma^m (m <= s). The set of
  /// canonical representatives of R / gamma^m R is exactly [0, p^m).
  Value reduce(Value a, unsigned m) const noexcept {
    return static_cast<Value>(a % pow_p(m));
  }

  /// a = gamma^valuation * unit_part; requires a != 0. The unit part is the
  /// canonical representative in [0, p^(s - valuation)).
  Value unit_part(Value a) const noexcept { return shift_down(a, valuation(a)); }

  /// Multiplicative inverse of a unit; throws NotInvertible otherwise.
  Value inverse(Value a) const;

  /// Image of an integer under Z -> R (n * 1).
  Value from_integer(std::int64_t n) const noexcept;
  /// Base-p digits of the packed value, lowest first, length s. For the
  /// polynomial ring these are the coefficients.
  std::vector<unsigned> digits(Value a) const;
  /// Inverse of digits(); throws InvalidArgument on bad length or digit range.
  Value from_digits(std::span<const unsigned> coefficients) const;

  bool contains(std::uint64_t a) const noexcept { return a < size_; }
  RingElement element(std::uint64_t value) const;

  std::string name() const;  // "Z/8" or "F_2[u]/(u^3)"
  std::string format(Value a) const;

  friend bool operator==(const ChainRing&, const ChainRing&) = default;

 private:
  unsigned p_;
  unsigned s_;
  Backend backend_;
  std::uint64_t size_;
};

/// A ring element bound to its ambient ring. Mixing rings throws
/// IncompatibleRings.
class RingElement {
 public:
  using Value = ChainRing::Value;

  RingElement(ChainRing ring, Value value);

  const ChainRing& ring() const noexcept { return ring_; }
  Value value() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return ring_.is_unit(value_); }
  unsigned valuation() const noexcept { return ring_.valuation(value_); }

  RingElement operator-() const { return {ring_, ring_.neg(value_)}; }
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement&, const RingElement&) = default;

  std::string to_string() const { return ring_.format(value_); }

 private:
  ChainRing ring_;
  Value value_;
};

struct GammaDecomposition {
  unsigned valuation;
  std::optional<RingElement> unit;  // empty iff the element is zero
};

/// a = gamma^v * u with u a unit; zero maps to (s, nullopt).
GammaDecomposition gamma_decompose(const RingElement& a);

/// Throws NotInvertible for non-units.
RingElement unit_inverse(const RingElement& a);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace ringcodes
