#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringcodes/bigint.hpp"
#include "ringcodes/code.hpp"

namespace ringcodes {

/// 2^24, or the value of the RINGCODES_ENUM_CAP environment variable.
std::uint64_t default_enumeration_cap();

struct EnumerationOptions {
  std::uint64_t cap = default_enumeration_cap();
  unsigned workers = 1;
};

/// Code parameters carried along with a weight distribution.
struct DistributionContext {
  unsigned p = 0;
  unsigned s = 0;
  BigInt cardinality;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> free_rank;

  friend bool operator==(const DistributionContext&, const DistributionContext&) = default;
};

DistributionContext context_of(const LinearCode& code);

/// Hamming weight distribution (A_0, ..., A_n).
class WeightDistribution {
 public:
  WeightDistribution(DistributionContext context, std::vector<BigInt> counts);

  std::size_t length() const noexcept { return counts_.size() - 1; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& operator[](std::size_t w) const { return counts_.at(w); }
  const DistributionContext& context() const noexcept { return context_; }

  BigInt total() const;
  /// A_0 == 1, all A_i >= 0 and sum A_i == |C|.
  bool is_consistent() const;

  /// W(X, Y) = sum_i A_i X^(n-i) Y^i, e.g. "X^4 + 248*X^2*Y^2 + 15376*Y^4".
  std::string enumerator_polynomial() const;

  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
    return a.counts_ == b.counts_;
  }

 private:
  DistributionContext context_;
  std::vector<BigInt> counts_;
};

/// Mixed-radix message space of a code: one digit per standard-form row, the
/// digit of a level-i row ranging over [0, p^(s-i)), the canonical
/// representatives of R / gamma^(s-i) R. Distinct messages give distinct
/// codewords, so the space has exactly |C| elements.
class MessageSpace {
 public:
  using Value = ChainRing::Value;

  explicit MessageSpace(const LinearCode& code);

  /// |C|, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const noexcept { return size_; }
  const std::vector<std::uint64_t>& radices() const noexcept { return radices_; }

  /// Calls visit(codeword) for message indices [begin, end), codewords in
  /// the code's permuted coordinates.
  void walk(std::uint64_t begin, std::uint64_t end, const std::function<void(std::span<const Value>)>& visit) const;

  /// Hamming-weight histogram of messages [begin, end).
  std::vector<std::uint64_t> weight_histogram(std::uint64_t begin, std::uint64_t end) const;

 private:
  template <class Visit>
  void walk_impl(std::uint64_t begin, std::uint64_t end, Visit&& visit) const;

  const LinearCode* code_;
  std::vector<std::uint64_t> radices_;
  std::optional<std::uint64_t> size_;
};

/// Visits every codeword exactly once, in original coordinates.
/// Throws CapExceeded if |C| > cap.
void for_each_codeword(const LinearCode& code,
                       const std::function<void(std::span<const ChainRing::Value>)>& visit,
                       std::uint64_t cap = default_enumeration_cap());

std::vector<std::vector<ChainRing::Value>> codewords(const LinearCode& code,
                                                     std::uint64_t cap = default_enumeration_cap());

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options = {});

/// Least weight of a nonzero codeword. Throws InvalidArgument for the zero code.
std::size_t min_distance(const LinearCode& code, const EnumerationOptions& options = {});
std::size_t min_distance(const WeightDistribution& distribution);

}  // namespace ringcodes
