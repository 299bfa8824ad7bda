#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace addbase {

/// Splits [0, count) into contiguous shards, runs fn(shard, begin, end) on up to
/// `threads` workers and returns once all shards finish. Callers merge per-shard
/// results in shard order, which keeps every reduction independent of the thread count.
template <class Fn>
void parallel_shards(std::size_t count, unsigned threads, std::size_t shards, Fn&& fn) {
  if (count == 0) return;
  shards = std::max<std::size_t>(1, std::min(shards, count));
  auto bounds = [&](std::size_t s) { return s * count / shards; };
  threads = std::max(1u, threads);
  if (threads == 1 || shards == 1) {
    for (std::size_t s = 0; s < shards; ++s) fn(s, bounds(s), bounds(s + 1));
    return;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> workers;
  const unsigned nworkers = static_cast<unsigned>(std::min<std::size_t>(threads, shards));
  for (unsigned w = 0; w < nworkers; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t s = w; s < shards; s += nworkers) {
        try {
          fn(s, bounds(s), bounds(s + 1));
        } catch (...) {
          errors[s] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Shard count used by the exhaustive searches; fixed so results never depend on threads.
inline constexpr std::size_t kDefaultShards = 64;

}  // namespace addbase
