#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

#include "pathforge/enumerate.hpp"

namespace pathforge {

/// Worker count: PATHFORGE_THREADS if set and positive, otherwise the
/// hardware concurrency (0 means auto).
unsigned thread_count();

/// Runs body(index) for index in [0, count) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

/// Folds every path of (kind, k) into an accumulator. The stream is split by
/// prefix; each prefix gets its own accumulator and the partial results are
/// merged in prefix order, so the result does not depend on scheduling.
template <class Acc, class MakeAcc, class Fold, class Merge>
Acc fold_paths(PathKind kind, int k, MakeAcc make, Fold fold, Merge merge, unsigned threads = thread_count()) {
  if (threads <= 1 || k < 4) {
    Acc acc = make();
    for_each_path(kind, k, [&](const Path& p) { fold(acc, p); });
    return acc;
  }
  const auto prefixes = feasible_prefixes(kind, k, std::min<std::size_t>(8, static_cast<std::size_t>(k)));
  std::vector<Acc> partial;
  partial.reserve(prefixes.size());
  for (std::size_t i = 0; i < prefixes.size(); ++i) partial.push_back(make());
  parallel_for(prefixes.size(), threads, [&](std::size_t i) {
    for_each_path(kind, k, [&](const Path& p) { fold(partial[i], p); }, prefixes[i]);
  });
  Acc acc = make();
  for (auto& part : partial) merge(acc, part);
  return acc;
}

}  // namespace pathforge
