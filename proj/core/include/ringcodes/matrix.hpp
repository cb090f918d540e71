#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ringcodes/bigint.hpp"
#include "ringcodes/ring.hpp"

namespace ringcodes {

/// Row counts (t_0, ..., t_{s-1}) by exact gamma-valuation. Zero rows are
/// not counted at any level.
struct TypeProfile {
  std::vector<std::size_t> counts;

  TypeProfile() = default;
  explicit TypeProfile(unsigned s) : counts(s, 0) {}
  TypeProfile(std::initializer_list<std::size_t> c) : counts(c) {}

  unsigned levels() const noexcept { return static_cast<unsigned>(counts.size()); }
  std::size_t rank() const noexcept;
  std::size_t free_rank() const noexcept { return counts.empty() ? 0 : counts.front(); }
  std::size_t operator[](unsigned i) const { return counts.at(i); }

  std::string to_string() const;  // "(1,2)"

  friend auto operator<=>(const TypeProfile&, const TypeProfile&) = default;
  friend bool operator==(const TypeProfile&, const TypeProfile&) = default;
};

/// p^(sum_i (s-i) k_i): number of vectors spanned by a matrix of this type.
BigInt cardinality(const ChainRing& ring, const TypeProfile& profile);

/// Type of the dual of a length-n code of the given type:
/// (n - K, k_{s-1}, ..., k_1).
TypeProfile dual_type(const TypeProfile& profile, std::size_t n);

/// Dense row-major matrix over a chain ring. Entries are packed ring values.
class RingMatrix {
 public:
  using Value = ChainRing::Value;

  RingMatrix(ChainRing ring, std::size_t rows, std::size_t cols);
  /// Throws InvalidArgument on ragged rows or non-canonical entries.
  RingMatrix(ChainRing ring, std::size_t cols, const std::vector<std::vector<std::uint64_t>>& rows);

  static RingMatrix identity(ChainRing ring, std::size_t n);

  const ChainRing& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Value operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Value& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Value> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Value> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Value> values);
  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void swap_cols(std::size_t a, std::size_t b) noexcept;
  /// Keeps the first `count` rows.
  void truncate_rows(std::size_t count);

  RingMatrix transpose() const;
  std::vector<std::vector<std::uint64_t>> to_rows() const;

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  ChainRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> data_;
};

/// a * b; throws IncompatibleRings or InvalidArgument on shape mismatch.
RingMatrix multiply(const RingMatrix& a, const RingMatrix& b);
bool is_zero(const RingMatrix& m) noexcept;

/// A reordering of n columns. Position j of the permuted matrix holds
/// original column source(j); original column i ends up at target(i).
class ColumnPermutation {
 public:
  ColumnPermutation() = default;
  static ColumnPermutation identity(std::size_t n);
  /// Throws InvalidArgument if `sources` is not a permutation of 0..n-1.
  static ColumnPermutation from_sources(std::vector<std::size_t> sources);

  std::size_t size() const noexcept { return sources_.size(); }
  std::size_t source(std::size_t position) const { return sources_.at(position); }
  std::size_t target(std::size_t column) const { return targets_.at(column); }
  bool is_identity() const noexcept;

  void swap(std::size_t a, std::size_t b) noexcept;

  /// One-line notation with 1-based target indices: entry i is the position
  /// (1-based) that original column i+1 moves to.
  std::vector<std::size_t> one_based_targets() const;

  /// Moves columns from original to permuted order.
  RingMatrix apply(const RingMatrix& m) const;
  /// Moves columns from permuted back to original order.
  RingMatrix unapply(const RingMatrix& m) const;

  template <class T>
  std::vector<T> unapply(std::span<const T> v) const {
    std::vector<T> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[sources_[j]] = v[j];
    return out;
  }

  friend bool operator==(const ColumnPermutation&, const ColumnPermutation&) = default;

 private:
  std::vector<std::size_t> sources_;
  std::vector<std::size_t> targets_;
};

/// Generator matrix in standard form, in permuted coordinates.
///
/// Rows are grouped by level i = 0..s-1; the k_i rows of level i have the
/// shape gamma^i [0 | I_{k_i} | A_{i,i+1} | ... | A_{i,s}] where the identity
/// blocks of all levels occupy columns 0..K-1 in increasing order. Entries of
/// a level-i row above a later pivot of level j > i are reduced modulo
/// gamma^j.
struct StandardForm {
  RingMatrix reduced;
  ColumnPermutation permutation;
  TypeProfile profile;
  std::vector<unsigned> row_levels;  // level of each row of `reduced`
};

/// Valuation-aware Gaussian elimination. Never fails; zero rows are dropped.
StandardForm standard_form(const RingMatrix& m);

/// Raw row-valuation profile of m (no reduction).
TypeProfile matrix_type(const RingMatrix& m);

/// Columns of m at the given 0-based, strictly increasing indices.
RingMatrix submatrix(const RingMatrix& m, std::span<const std::size_t> columns);

struct SubsetOptions {
  static constexpr std::uint64_t kDefaultCap = 1'000'000;
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 1;
};

/// Canonical types of all binom(cols, nu) column submatrices.
/// Throws CapExceeded when binom(cols, nu) > options.cap.
std::map<TypeProfile, std::uint64_t> count_submatrix_types(const RingMatrix& m, std::size_t nu,
                                                           const SubsetOptions& options = {});

/// Number of vectors in the row space of m.
BigInt rowspace_size(const RingMatrix& m);

}  // namespace ringcodes
