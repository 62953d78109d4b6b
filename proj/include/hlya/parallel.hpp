#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hlya {

/* Worker count: explicit request wins, then HLYA_THREADS, then hardware. */
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HLYA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/* Runs fn(begin..end) over contiguous index blocks, one block per worker.
   Results are whatever each worker accumulates; the caller merges the
   per-worker outputs in block order, which keeps every reduction
   deterministic regardless of scheduling. */
template <class Acc, class Fn>
std::vector<Acc> parallel_blocks(std::size_t count, unsigned threads, Fn fn) {
  unsigned workers = resolve_threads(threads);
  if (count == 0) return {};
  if (static_cast<std::size_t>(workers) > count)
    workers = static_cast<unsigned>(count);
  std::vector<Acc> accs(workers);
  if (workers == 1) {
    fn(std::size_t{0}, count, accs[0]);
    return accs;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * chunk;
    std::size_t hi = lo + chunk < count ? lo + chunk : count;
    if (lo >= hi) break;
    pool.emplace_back([&fn, &accs, w, lo, hi] { fn(lo, hi, accs[w]); });
  }
  for (auto& t : pool) t.join();
  return accs;
}

}  // namespace hlya
