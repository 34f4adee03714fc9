#include "mdsforge/scan.hpp"

#include <cstdlib>
#include <string>

namespace mdsforge::scan {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

void unrank_combination(std::uint64_t n, std::uint64_t rank, std::span<std::size_t> out) noexcept {
  const std::size_t k = out.size();
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++x) {
      const std::uint64_t block = binomial(n - x - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    out[i] = static_cast<std::size_t>(x++);
  }
}

std::size_t next_combination(std::size_t n, std::span<std::size_t> c) noexcept {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return k;
  --i;
  ++c[i];
  for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return i;
}

unsigned default_threads() noexcept {
  if (const char* env = std::getenv("MDSFORGE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 1;
}

}  // namespace mdsforge::scan
