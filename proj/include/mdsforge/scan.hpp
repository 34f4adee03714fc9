#pragma once

// Lexicographic k-subset enumeration split across worker threads.
//
// Workers claim contiguous rank ranges. Every worker keeps the smallest
// failing rank seen by anyone, so the reported witness is the first failing
// subset in lexicographic order no matter how many threads run.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "mdsforge/error.hpp"

namespace mdsforge::scan {

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Writes the combination of the given lexicographic rank into `out`.
void unrank_combination(std::uint64_t n, std::uint64_t rank, std::span<std::size_t> out) noexcept;

/// Advances to the next combination; returns the first position that changed,
/// or k when the sequence is exhausted.
std::size_t next_combination(std::size_t n, std::span<std::size_t> c) noexcept;

/// Thread count from the MDSFORGE_THREADS environment variable, else 1.
unsigned default_threads() noexcept;

struct SubsetScanResult {
  bool ok = true;
  std::vector<std::size_t> witness;  // first failing subset when !ok
  std::uint64_t witness_rank = 0;
  std::uint64_t total = 0;
};

/// Runs `checker(indices, changed_from)` on every k-subset of {0..n-1}.
/// `changed_from` is the first position that differs from the previous call
/// made to the same checker (0 after a jump), so checkers can reuse prefix
/// work. `make_checker()` is invoked once per worker. Throws BudgetExceeded
/// when C(n, k) exceeds `budget`.
template <class MakeChecker>
SubsetScanResult scan_subsets(std::size_t n, std::size_t k, unsigned threads, std::uint64_t budget,
                              MakeChecker&& make_checker) {
  SubsetScanResult res;
  res.total = binomial(n, k);
  if (k > n) return res;
  if (res.total > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(res.total) +
                    " subsets exceeds the budget of " + std::to_string(budget));
  }
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> first_fail{kNone};
  std::atomic<std::uint64_t> next_chunk{0};
  threads = std::max(1u, threads);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(1u << 16, res.total / (threads * 16ull) + 1));
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    try {
      auto check = make_checker();
      std::vector<std::size_t> c(k);
      for (;;) {
        const std::uint64_t start = next_chunk.fetch_add(chunk);
        if (start >= res.total || start >= first_fail.load(std::memory_order_relaxed)) return;
        const std::uint64_t stop = std::min(res.total, start + chunk);
        unrank_combination(n, start, c);
        std::size_t changed = 0;
        for (std::uint64_t rank = start; rank < stop; ++rank) {
          if (!check(std::span<const std::size_t>(c), changed)) {
            std::uint64_t cur = first_fail.load();
            while (rank < cur && !first_fail.compare_exchange_weak(cur, rank)) {
            }
            break;
          }
          if (rank + 1 < stop) changed = next_combination(n, c);
          if ((rank & 1023) == 0 && rank > first_fail.load(std::memory_order_relaxed)) break;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      first_fail.store(0);
    }
  };

  if (threads == 1 || res.total < 4096) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (first_fail.load() != kNone) {
    res.ok = false;
    res.witness_rank = first_fail.load();
    res.witness.resize(k);
    unrank_combination(n, res.witness_rank, res.witness);
  }
  return res;
}

}  // namespace mdsforge::scan
