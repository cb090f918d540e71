#include "ringcodes/ring.hpp"

#include <array>

#include "ringcodes/error.hpp"

namespace ringcodes {

namespace {

constexpr unsigned kMaxDigits = 31;

using Digits = std::array<std::uint64_t, kMaxDigits>;

void unpack(std::uint64_t v, unsigned p, unsigned s, Digits& out) {
  for (unsigned i = 0; i < s; ++i) {
    out[i] = v % p;
    v /= p;
  }
}

std::uint64_t pack(const Digits& d, unsigned p, unsigned s) {
  std::uint64_t v = 0;
  for (unsigned i = s; i-- > 0;) v = v * p + d[i];
  return v;
}

// Inverse of a modulo m for gcd(a, m) == 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_x = 1, x = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_x % mm) + mm) % mm);
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::Integer ? "int" : "poly";
}

Backend parse_backend(std::string_view name) {
  if (name == "int") return Backend::Integer;
  if (name == "poly") return Backend::Polynomial;
  throw InvalidArgument("unknown ring backend '" + std::string(name) + "' (expected \"int\" or \"poly\")");
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ChainRing::ChainRing(unsigned p, unsigned s, Backend backend) : p_(p), s_(s), backend_(backend), size_(1) {
  if (!is_prime(p)) throw InvalidArgument("ring characteristic p=" + std::to_string(p) + " is not prime");
  if (s < 1) throw InvalidArgument("nilpotency index s must be at least 1");
  for (unsigned i = 0; i < s; ++i) {
    size_ *= p;
    if (size_ > kMaxSize)
      throw InvalidArgument("ring size " + std::to_string(p) + "^" + std::to_string(s) + " exceeds 2^31");
  }
}

ChainRing::Value ChainRing::add(Value a, Value b) const noexcept {
  if (backend_ == Backend::Integer || s_ == 1) {
    const std::uint64_t r = std::uint64_t{a} + b;
    return static_cast<Value>(r >= size_ ? r - size_ : r);
  }
  if (p_ == 2) return a ^ b;
  std::uint64_t r = 0, place = 1;
  for (unsigned i = 0; i < s_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return static_cast<Value>(r);
}

ChainRing::Value ChainRing::neg(Value a) const noexcept {
  if (a == 0) return 0;
  if (backend_ == Backend::Integer || s_ == 1) return static_cast<Value>(size_ - a);
  if (p_ == 2) return a;
  std::uint64_t r = 0, place = 1;
  for (unsigned i = 0; i < s_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return static_cast<Value>(r);
}

ChainRing::Value ChainRing::sub(Value a, Value b) const noexcept { return add(a, neg(b)); }

ChainRing::Value ChainRing::mul(Value a, Value b) const noexcept {
  if (backend_ == Backend::Integer || s_ == 1)
    return static_cast<Value>((std::uint64_t{a} * b) % size_);
  Digits x{}, y{}, z{};
  unpack(a, p_, s_, x);
  unpack(b, p_, s_, y);
  for (unsigned i = 0; i < s_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; i + j < s_; ++j) z[i + j] += x[i] * y[j];
  }
  for (unsigned k = 0; k < s_; ++k) z[k] %= p_;
  return static_cast<Value>(pack(z, p_, s_));
}

unsigned ChainRing::valuation(Value a) const noexcept {
  if (a == 0) return s_;
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

ChainRing::Value ChainRing::inverse(Value a) const {
  if (!is_unit(a)) throw NotInvertible(format(a) + " is not a unit in " + name());
  if (backend_ == Backend::Integer || s_ == 1) return static_cast<Value>(mod_inverse(a, size_));
  // Power series inversion over F_p, truncated at u^s.
  Digits x{}, y{};
  unpack(a, p_, s_, x);
  const std::uint64_t inv0 = mod_inverse(x[0], p_);
  y[0] = inv0;
  for (unsigned k = 1; k < s_; ++k) {
    std::uint64_t acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc = (acc + x[i] * y[k - i]) % p_;
    y[k] = ((p_ - acc) % p_) * inv0 % p_;
  }
  return static_cast<Value>(pack(y, p_, s_));
}

ChainRing::Value ChainRing::from_integer(std::int64_t n) const noexcept {
  const std::int64_t m = backend_ == Backend::Integer ? static_cast<std::int64_t>(size_) : p_;
  return static_cast<Value>(((n % m) + m) % m);
}

std::vector<unsigned> ChainRing::digits(Value a) const {
  std::vector<unsigned> d(s_);
  for (unsigned i = 0; i < s_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

ChainRing::Value ChainRing::from_digits(std::span<const unsigned> coefficients) const {
  if (coefficients.size() != s_)
    throw InvalidArgument("expected " + std::to_string(s_) + " coefficients, got " +
                          std::to_string(coefficients.size()));
  std::uint64_t v = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    if (coefficients[i] >= p_)
      throw InvalidArgument("coefficient " + std::to_string(coefficients[i]) + " out of range [0," +
                            std::to_string(p_) + ")");
    v = v * p_ + coefficients[i];
  }
  return static_cast<Value>(v);
}

RingElement ChainRing::element(std::uint64_t value) const {
  if (!contains(value))
    throw InvalidArgument("value " + std::to_string(value) + " is not a canonical element of " + name());
  return {*this, static_cast<Value>(value)};
}

std::string ChainRing::name() const {
  if (backend_ == Backend::Integer) return "Z/" + std::to_string(size_);
  return "F_" + std::to_string(p_) + "[u]/(u^" + std::to_string(s_) + ")";
}

std::string ChainRing::format(Value a) const {
  if (backend_ == Backend::Integer) return std::to_string(a);
  if (a == 0) return "0";
  std::string out;
  const auto d = digits(a);
  for (unsigned i = s_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]);
    out += i == 1 ? std::string("u") : "u^" + std::to_string(i);
  }
  return out;
}

RingElement::RingElement(ChainRing ring, Value value) : ring_(ring), value_(value) {
  if (!ring_.contains(value))
    throw InvalidArgument("value " + std::to_string(value) + " is not a canonical element of " + ring_.name());
}

namespace {
void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    throw IncompatibleRings("operands live in different rings: " + a.ring().name() + " and " + b.ring().name());
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.ring_, a.ring_.add(a.value_, b.value_)};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.ring_, a.ring_.sub(a.value_, b.value_)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.ring_, a.ring_.mul(a.value_, b.value_)};
}

GammaDecomposition gamma_decompose(const RingElement& a) {
  const auto& r = a.ring();
  if (a.is_zero()) return {r.s(), std::nullopt};
  return {r.valuation(a.value()), RingElement(r, r.unit_part(a.value()))};
}

RingElement unit_inverse(const RingElement& a) { return {a.ring(), a.ring().inverse(a.value())}; }

}  // namespace ringcodes
