// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

namespace brownlab {

// Reproducible seed tree. Child seeds are derived by hashing the parent state
// with a stream label or a trial index, so identical (root, labels) always
// yield bit-identical draws regardless of evaluation order.
class Seed {
 public:
  explicit Seed(std::uint64_t root) : state_(root) {}

  Seed stream(std::string_view label) const;
  Seed trial(std::uint64_t index) const;

  std::uint64_t value() const { return state_; }
  std::mt19937_64 engine() const;

  bool operator==(const Seed&) const = default;

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Runs body(i) for i in [0, count) on up to `workers` threads (0 = hardware
// concurrency). Callers write results into slot i, so aggregation is order-free.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned workers = 0);

}  // namespace brownlab
