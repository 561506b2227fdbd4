#pragma once

// Contiguous range partitioning across worker threads. Each worker gets its
// own state; results are merged in range order, so output does not depend
// on the number of workers.

#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "interlace/harness/report.hpp"

namespace interlace::harness {

// Calls body(begin, end, worker) on `jobs` consecutive slices of [0, total).
template <typename F>
void parallel_ranges(std::uint64_t total, std::size_t jobs, F&& body) {
  if (jobs <= 1 || total < 2) {
    body(std::uint64_t{0}, total, std::size_t{0});
    return;
  }
  if (jobs > total) jobs = static_cast<std::size_t>(total);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    const std::uint64_t begin = total * w / jobs;
    const std::uint64_t end = total * (w + 1) / jobs;
    workers.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
  for (std::thread& t : workers) t.join();
}

// Like parallel_ranges, with one report per slice folded into `into` in
// slice order.
template <typename F>
void parallel_check(std::uint64_t total, std::size_t jobs, VerificationReport& into, F&& body) {
  const std::size_t slices = jobs == 0 ? 1 : jobs;
  std::vector<VerificationReport> parts(slices);
  parallel_ranges(total, slices, [&](std::uint64_t begin, std::uint64_t end, std::size_t w) {
    body(begin, end, parts[w]);
  });
  for (const VerificationReport& part : parts) into.absorb(part);
}

}  // namespace interlace::harness
