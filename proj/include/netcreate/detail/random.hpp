// Copyright 2026 The netcreate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETCREATE_DETAIL_RANDOM_HPP_
#define NETCREATE_DETAIL_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// std::mt19937_64 output is fixed by the standard but the std distributions
// are not, so the few draws needed here are written out to keep seeded runs
// identical across standard libraries.
namespace netcreate::detail {

using Rng = std::mt19937_64;

// Uniform in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (limit == 0 || x < limit) return x % bound;
  }
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

template <class T>
void shuffle(Rng& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = uniform_below(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

// First `count` slots of a partial Fisher-Yates pass.
template <class T>
std::vector<T> sample_distinct(Rng& rng, std::vector<T> population, std::size_t count) {
  if (count > population.size()) count = population.size();
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + uniform_below(rng, population.size() - i);
    std::swap(population[i], population[j]);
  }
  population.resize(count);
  return population;
}

}  // namespace netcreate::detail

#endif  // NETCREATE_DETAIL_RANDOM_HPP_
