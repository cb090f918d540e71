#include "ringcodes/matrix.hpp"

#include <numeric>

#include "ringcodes/detail/parallel.hpp"
#include "ringcodes/error.hpp"

namespace ringcodes {

std::size_t TypeProfile::rank() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::string TypeProfile::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(counts[i]);
  }
  return out + ")";
}

BigInt cardinality(const ChainRing& ring, const TypeProfile& profile) {
  std::uint64_t exponent = 0;
  for (unsigned i = 0; i < profile.levels(); ++i) exponent += (ring.s() - i) * profile.counts[i];
  return ipow(BigInt(ring.p()), exponent);
}

TypeProfile dual_type(const TypeProfile& profile, std::size_t n) {
  const unsigned s = profile.levels();
  TypeProfile out(s);
  if (s == 0) return out;
  out.counts[0] = n - profile.rank();
  for (unsigned i = 1; i < s; ++i) out.counts[i] = profile.counts[s - i];
  return out;
}

// ---------------------------------------------------------------------------

RingMatrix::RingMatrix(ChainRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

RingMatrix::RingMatrix(ChainRing ring, std::size_t cols, const std::vector<std::vector<std::uint64_t>>& rows)
    : RingMatrix(ring, 0, cols) {
  data_.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols)
      throw InvalidArgument("row of length " + std::to_string(r.size()) + " in a matrix with " +
                            std::to_string(cols) + " columns");
    for (auto v : r) {
      if (!ring.contains(v))
        throw InvalidArgument("entry " + std::to_string(v) + " is not a canonical element of " + ring.name());
      data_.push_back(static_cast<Value>(v));
    }
    ++rows_;
  }
}

RingMatrix RingMatrix::identity(ChainRing ring, std::size_t n) {
  RingMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RingMatrix::append_row(std::span<const Value> values) {
  if (values.size() != cols_) throw InvalidArgument("appended row has the wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void RingMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

void RingMatrix::swap_cols(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void RingMatrix::truncate_rows(std::size_t count) {
  if (count >= rows_) return;
  rows_ = count;
  data_.resize(rows_ * cols_);
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<std::vector<std::uint64_t>> RingMatrix::to_rows() const {
  std::vector<std::vector<std::uint64_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

RingMatrix multiply(const RingMatrix& a, const RingMatrix& b) {
  if (a.ring() != b.ring()) throw IncompatibleRings("matrix product over different rings");
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
  const auto& R = a.ring();
  RingMatrix out(R, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = R.add(out(i, j), R.mul(x, b(k, j)));
    }
  return out;
}

bool is_zero(const RingMatrix& m) noexcept {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto v : m.row(r))
      if (v != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

ColumnPermutation ColumnPermutation::identity(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return from_sources(std::move(s));
}

ColumnPermutation ColumnPermutation::from_sources(std::vector<std::size_t> sources) {
  ColumnPermutation p;
  p.targets_.assign(sources.size(), sources.size());
  for (std::size_t j = 0; j < sources.size(); ++j) {
    if (sources[j] >= sources.size() || p.targets_[sources[j]] != sources.size())
      throw InvalidArgument("not a permutation");
    p.targets_[sources[j]] = j;
  }
  p.sources_ = std::move(sources);
  return p;
}

bool ColumnPermutation::is_identity() const noexcept {
  for (std::size_t j = 0; j < sources_.size(); ++j)
    if (sources_[j] != j) return false;
  return true;
}

void ColumnPermutation::swap(std::size_t a, std::size_t b) noexcept {
  std::swap(sources_[a], sources_[b]);
  targets_[sources_[a]] = a;
  targets_[sources_[b]] = b;
}

std::vector<std::size_t> ColumnPermutation::one_based_targets() const {
  std::vector<std::size_t> out(targets_.size());
  for (std::size_t i = 0; i < targets_.size(); ++i) out[i] = targets_[i] + 1;
  return out;
}

RingMatrix ColumnPermutation::apply(const RingMatrix& m) const {
  if (m.cols() != size()) throw InvalidArgument("permutation size does not match matrix width");
  RingMatrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < size(); ++j) out(r, j) = m(r, sources_[j]);
  return out;
}

RingMatrix ColumnPermutation::unapply(const RingMatrix& m) const {
  if (m.cols() != size()) throw InvalidArgument("permutation size does not match matrix width");
  RingMatrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < size(); ++j) out(r, sources_[j]) = m(r, j);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// row[dst] -= factor * row[src], over the columns from `from` on.
void subtract_multiple(RingMatrix& m, std::size_t dst, std::size_t src, RingMatrix::Value factor,
                       std::size_t from = 0) {
  const auto& R = m.ring();
  for (std::size_t c = from; c < m.cols(); ++c) {
    const auto v = m(src, c);
    if (v != 0) m(dst, c) = R.sub(m(dst, c), R.mul(factor, v));
  }
}

}  // namespace

StandardForm standard_form(const RingMatrix& input) {
  const auto& R = input.ring();
  const unsigned s = R.s();
  RingMatrix m = input;
  auto perm = ColumnPermutation::identity(m.cols());
  TypeProfile profile(s);
  std::vector<unsigned> levels;

  std::size_t pivot = 0;  // next pivot row == next pivot column
  for (unsigned level = 0; level < s; ++level) {
    while (pivot < m.rows() && pivot < m.cols()) {
      // Every entry in the trailing block has valuation >= level here.
      std::size_t pr = m.rows(), pc = m.cols();
      for (std::size_t r = pivot; r < m.rows() && pr == m.rows(); ++r)
        for (std::size_t c = pivot; c < m.cols(); ++c)
          if (m(r, c) != 0 && R.valuation(m(r, c)) == level) {
            pr = r;
            pc = c;
            break;
          }
      if (pr == m.rows()) break;

      m.swap_rows(pivot, pr);
      m.swap_cols(pivot, pc);
      perm.swap(pivot, pc);

      const auto scale = R.inverse(R.unit_part(m(pivot, pivot)));
      for (auto& v : m.row(pivot)) v = R.mul(scale, v);

      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == pivot) continue;
        const auto e = m(r, pivot);
        if (e == 0) continue;
        // Rows below have valuation >= level in this column and are cleared;
        // rows above keep e mod gamma^level.
        const auto factor = R.shift_down(e, level);
        if (factor != 0) subtract_multiple(m, r, pivot, factor);
      }
      levels.push_back(level);
      ++profile.counts[level];
      ++pivot;
    }
  }
  m.truncate_rows(pivot);
  return {std::move(m), std::move(perm), std::move(profile), std::move(levels)};
}

TypeProfile matrix_type(const RingMatrix& m) {
  const auto& R = m.ring();
  TypeProfile profile(R.s());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    unsigned v = R.s();
    for (auto x : m.row(r)) v = std::min(v, R.valuation(x));
    if (v < R.s()) ++profile.counts[v];
  }
  return profile;
}

RingMatrix submatrix(const RingMatrix& m, std::span<const std::size_t> columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] >= m.cols())
      throw InvalidArgument("column index " + std::to_string(columns[i]) + " out of range");
    if (i > 0 && columns[i] <= columns[i - 1])
      throw InvalidArgument("column indices must be strictly increasing");
  }
  RingMatrix out(m.ring(), m.rows(), columns.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = m(r, columns[j]);
  return out;
}

std::map<TypeProfile, std::uint64_t> count_submatrix_types(const RingMatrix& m, std::size_t nu,
                                                           const SubsetOptions& options) {
  if (nu < 1 || nu > m.cols())
    throw InvalidArgument("submatrix width " + std::to_string(nu) + " outside [1, " + std::to_string(m.cols()) + "]");
  const BigInt total = binom(static_cast<std::int64_t>(m.cols()), static_cast<std::int64_t>(nu));
  if (total > options.cap)
    throw CapExceeded("binom(" + std::to_string(m.cols()) + "," + std::to_string(nu) + ") = " + total.str() +
                      " submatrices exceeds the cap of " + std::to_string(options.cap) +
                      "; use a smaller instance");
  using Tally = std::map<TypeProfile, std::uint64_t>;
  return detail::parallel_subsets(
      m.cols(), nu, options.workers, Tally{},
      [&](const std::vector<std::size_t>& subset, Tally& acc) {
        ++acc[standard_form(submatrix(m, subset)).profile];
      },
      [](Tally& into, const Tally& from) {
        for (const auto& [k, v] : from) into[k] += v;
      });
}

BigInt rowspace_size(const RingMatrix& m) { return cardinality(m.ring(), standard_form(m).profile); }

}  // namespace ringcodes
