#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace covmag {

// Photon-count statistics for one acquisition channel. Integer sums are
// exact and associative, so serial and parallel runs merge bit-identically.
struct CountStats {
  std::int64_t n = 0;
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;

  void add(std::int64_t x) {
    ++n;
    sum += x;
    sum_sq += x * x;
  }
  void merge(const CountStats& o) {
    n += o.n;
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  double mean() const { return n ? double(sum) / double(n) : 0.0; }
  // unbiased sample variance
  double variance() const {
    if (n < 2) return 0.0;
    const double m = mean();
    return (double(sum_sq) - double(n) * m * m) / double(n - 1);
  }
};

// Deterministic block-parallel driver. Work is split into fixed blocks,
// each block's partial result is produced independently (seeded by block
// and shot index, never by thread), and partials are merged in block order.
// n_threads = 1 follows the identical code path, so outputs match bitwise.
template <class Partial>
void run_blocks(std::uint64_t n_items, std::uint64_t block_size, int n_threads,
                const std::function<void(std::uint64_t block, std::uint64_t begin,
                                         std::uint64_t end, Partial&)>& body,
                const std::function<void(std::uint64_t block, const Partial&)>& merge) {
  if (block_size == 0) block_size = 4096;
  const std::uint64_t n_blocks = (n_items + block_size - 1) / block_size;
  std::vector<Partial> partials(n_blocks);
  auto work = [&](std::uint64_t b) {
    const std::uint64_t begin = b * block_size;
    const std::uint64_t end = std::min(n_items, begin + block_size);
    body(b, begin, end, partials[b]);
  };
  if (n_threads <= 1 || n_blocks <= 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b) work(b);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (n_blocks + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const std::uint64_t lo = std::uint64_t(t) * chunk;
      const std::uint64_t hi = std::min(n_blocks, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::uint64_t b = lo; b < hi; ++b) work(b);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (std::uint64_t b = 0; b < n_blocks; ++b) merge(b, partials[b]);
}

}  // namespace covmag
