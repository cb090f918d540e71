#include "ringcodes/enumerate.hpp"

#include <cstdlib>
#include <limits>

#include "ringcodes/detail/parallel.hpp"
#include "ringcodes/error.hpp"

namespace ringcodes {

std::uint64_t default_enumeration_cap() {
  constexpr std::uint64_t kDefault = std::uint64_t{1} << 24;
  if (const char* env = std::getenv("RINGCODES_ENUM_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefault;
}

DistributionContext context_of(const LinearCode& code) {
  return {code.ring().p(), code.ring().s(), code.cardinality(), code.rank(), code.free_rank()};
}

WeightDistribution::WeightDistribution(DistributionContext context, std::vector<BigInt> counts)
    : context_(std::move(context)), counts_(std::move(counts)) {
  if (counts_.empty()) throw InvalidArgument("a weight distribution needs at least A_0");
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& a : counts_) t += a;
  return t;
}

bool WeightDistribution::is_consistent() const {
  if (counts_[0] != 1) return false;
  for (const auto& a : counts_)
    if (a < 0) return false;
  return total() == context_.cardinality;
}

std::string WeightDistribution::enumerator_polynomial() const {
  const std::size_t n = length();
  std::string out;
  auto power = [](const char* var, std::size_t e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i <= n; ++i) {
    if (counts_[i] == 0) continue;
    std::string term;
    const std::string x = power("X", n - i), y = power("Y", i);
    if (counts_[i] != 1 || (x.empty() && y.empty())) term = counts_[i].str();
    for (const auto* part : {&x, &y}) {
      if (part->empty()) continue;
      if (!term.empty()) term += "*";
      term += *part;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

MessageSpace::MessageSpace(const LinearCode& code) : code_(&code) {
  const auto& R = code.ring();
  const auto& levels = code.standard_form().row_levels;
  radices_.reserve(levels.size());
  std::uint64_t total = 1;
  bool overflow = false;
  for (auto level : levels) {
    const std::uint64_t r = R.pow_p(R.s() - level);
    radices_.push_back(r);
    if (total > std::numeric_limits<std::uint64_t>::max() / r) overflow = true;
    else total *= r;
  }
  if (!overflow) size_ = total;
}

template <class Visit>
void MessageSpace::walk_impl(std::uint64_t begin, std::uint64_t end, Visit&& visit) const {
  if (begin >= end) return;
  const auto& R = code_->ring();
  const auto& g = code_->standard_form().reduced;
  const std::size_t n = code_->length();
  const std::size_t rows = radices_.size();

  if (rows == 0) {
    const std::vector<Value> zero(n, 0);
    visit(std::span<const Value>(zero));
    return;
  }

  // The last row is the least significant digit.
  std::vector<std::uint64_t> digit(rows);
  std::uint64_t idx = begin;
  for (std::size_t r = rows; r-- > 0;) {
    digit[r] = idx % radices_[r];
    idx /= radices_[r];
  }

  // partial[r] = sum_{t <= r} digit[t] * g_t; partial[-1] is the zero vector.
  std::vector<std::vector<Value>> partial(rows, std::vector<Value>(n, 0));
  auto rebuild_from = [&](std::size_t first) {
    for (std::size_t r = first; r < rows; ++r) {
      auto& cur = partial[r];
      const auto coeff = static_cast<Value>(digit[r]);
      const auto row = g.row(r);
      for (std::size_t c = 0; c < n; ++c) {
        const Value base = r == 0 ? 0 : partial[r - 1][c];
        cur[c] = coeff == 0 || row[c] == 0 ? base : R.add(base, R.mul(coeff, row[c]));
      }
    }
  };
  rebuild_from(0);

  for (std::uint64_t m = begin;;) {
    visit(std::span<const Value>(partial[rows - 1]));
    if (++m == end) break;
    std::size_t r = rows - 1;
    while (++digit[r] == radices_[r]) {
      digit[r] = 0;
      --r;
    }
    rebuild_from(r);
  }
}

void MessageSpace::walk(std::uint64_t begin, std::uint64_t end,
                        const std::function<void(std::span<const Value>)>& visit) const {
  walk_impl(begin, end, visit);
}

std::vector<std::uint64_t> MessageSpace::weight_histogram(std::uint64_t begin, std::uint64_t end) const {
  std::vector<std::uint64_t> hist(code_->length() + 1, 0);
  walk_impl(begin, end, [&](std::span<const Value> v) {
    std::size_t w = 0;
    for (auto x : v) w += x != 0;
    ++hist[w];
  });
  return hist;
}

namespace {

std::uint64_t checked_size(const MessageSpace& space, const LinearCode& code, std::uint64_t cap) {
  const auto size = space.size();
  if (!size || *size > cap)
    throw CapExceeded("code has " + code.cardinality().str() + " codewords, above the enumeration cap of " +
                      std::to_string(cap));
  return *size;
}

}  // namespace

void for_each_codeword(const LinearCode& code, const std::function<void(std::span<const ChainRing::Value>)>& visit,
                       std::uint64_t cap) {
  const MessageSpace space(code);
  const auto total = checked_size(space, code, cap);
  const auto& perm = code.standard_form().permutation;
  space.walk(0, total, [&](std::span<const ChainRing::Value> v) {
    const auto original = perm.unapply(v);
    visit(std::span<const ChainRing::Value>(original));
  });
}

std::vector<std::vector<ChainRing::Value>> codewords(const LinearCode& code, std::uint64_t cap) {
  std::vector<std::vector<ChainRing::Value>> out;
  for_each_codeword(code, [&](std::span<const ChainRing::Value> v) { out.emplace_back(v.begin(), v.end()); }, cap);
  return out;
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options) {
  const MessageSpace space(code);
  const auto total = checked_size(space, code, options.cap);
  using Hist = std::vector<std::uint64_t>;
  const Hist hist = detail::parallel_ranges(
      total, options.workers, Hist(code.length() + 1, 0),
      [&](std::uint64_t begin, std::uint64_t end, Hist& acc) { acc = space.weight_histogram(begin, end); },
      [](Hist& into, const Hist& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });
  return {context_of(code), std::vector<BigInt>(hist.begin(), hist.end())};
}

std::size_t min_distance(const WeightDistribution& distribution) {
  for (std::size_t w = 1; w <= distribution.length(); ++w)
    if (distribution[w] > 0) return w;
  throw InvalidArgument("the zero code has no nonzero codeword");
}

std::size_t min_distance(const LinearCode& code, const EnumerationOptions& options) {
  if (code.rank() == 0) throw InvalidArgument("the zero code has no nonzero codeword");
  return min_distance(weight_distribution(code, options));
}

}  // namespace ringcodes
