#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

namespace divcor {

// Neumaier-compensated accumulator. Unlike plain Kahan it stays accurate when
// an addend is larger than the running sum.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Worker count: DIVCOR_THREADS if set, otherwise hardware concurrency.
int default_thread_count();

// Deterministic parallel reduction over [lo, hi). The range is cut into fixed
// blocks of `block` items; `map` runs on blocks in any order (concurrently),
// and the per-block results are folded strictly in block order. The result is
// therefore independent of the worker count.
template <class T, class Map, class Fold>
T blocked_reduce(uint64_t lo, uint64_t hi, uint64_t block, int threads,
                 Map map, T init, Fold fold) {
  if (hi <= lo) return init;
  if (block == 0) block = 1;
  uint64_t nblocks = (hi - lo + block - 1) / block;
  std::vector<T> partial(static_cast<size_t>(nblocks));
  std::atomic<uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks) break;
      uint64_t blo = lo + b * block;
      uint64_t bhi = std::min(hi, blo + block);
      partial[static_cast<size_t>(b)] = map(blo, bhi);
    }
  };
  int t = threads > 0 ? threads : default_thread_count();
  if (static_cast<uint64_t>(t) > nblocks) t = static_cast<int>(nblocks);
  if (t <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(t) - 1);
    for (int i = 0; i + 1 < t; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
  }
  T acc = init;
  for (const auto& p : partial) acc = fold(acc, p);
  return acc;
}

}  // namespace divcor
