#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "ringcodes/bigint.hpp"

namespace ringcodes::detail {

/// Splits [0, total) into `workers` contiguous chunks, runs body(begin, end,
/// acc) on each with its own accumulator and folds the accumulators in chunk
/// order. Results therefore do not depend on scheduling.
template <class Acc, class Body, class Merge>
Acc parallel_ranges(std::uint64_t total, unsigned workers, const Acc& init, Body body, Merge merge) {
  workers = std::max(1U, workers);
  if (workers == 1 || total < 2) {
    Acc acc = init;
    body(std::uint64_t{0}, total, acc);
    return acc;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(workers, total);
  std::vector<Acc> partial(chunks, init);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::uint64_t w = 0; w < chunks; ++w) {
      const std::uint64_t begin = total * w / chunks;
      const std::uint64_t end = total * (w + 1) / chunks;
      threads.emplace_back([&, w, begin, end] {
        try {
          body(begin, end, partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc acc = init;
  for (auto& p : partial) merge(acc, p);
  return acc;
}

/// Lexicographically `rank`-th nu-subset of {0..n-1}.
inline std::vector<std::size_t> unrank_subset(std::size_t n, std::size_t nu, std::uint64_t rank) {
  std::vector<std::size_t> out;
  out.reserve(nu);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < nu; ++slot) {
    for (;; ++next) {
      // Subsets that start with `next` at this slot.
      const auto block = static_cast<std::uint64_t>(binom(static_cast<std::int64_t>(n - next - 1),
                                                          static_cast<std::int64_t>(nu - slot - 1)));
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(next++);
  }
  return out;
}

/// Advances to the lexicographically next subset; false after the last one.
inline bool next_subset(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  for (std::size_t i = k; i-- > 0;) {
    if (subset[i] < n - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Calls visit(subset, acc) for every nu-subset of {0..n-1}, split across
/// workers by lexicographic rank.
template <class Acc, class Visit, class Merge>
Acc parallel_subsets(std::size_t n, std::size_t nu, unsigned workers, const Acc& init, Visit visit,
                     Merge merge) {
  const auto total = static_cast<std::uint64_t>(
      binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(nu)));
  return parallel_ranges(
      total, workers, init,
      [&](std::uint64_t begin, std::uint64_t end, Acc& acc) {
        if (begin >= end) return;
        auto subset = unrank_subset(n, nu, begin);
        for (std::uint64_t r = begin; r < end; ++r) {
          visit(static_cast<const std::vector<std::size_t>&>(subset), acc);
          next_subset(subset, n);
        }
      },
      merge);
}

}  // namespace ringcodes::detail
