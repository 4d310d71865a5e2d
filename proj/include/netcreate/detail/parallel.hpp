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

#ifndef NETCREATE_DETAIL_PARALLEL_HPP_
#define NETCREATE_DETAIL_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace netcreate::detail {

struct Shard {
  std::uint64_t begin;
  std::uint64_t end;
};

// Contiguous split of [0, count) into at most `shards` non-empty ranges.
inline std::vector<Shard> make_shards(std::uint64_t count, std::uint64_t shards) {
  std::vector<Shard> out;
  if (count == 0) return out;
  shards = std::clamp<std::uint64_t>(shards, 1, count);
  std::uint64_t base = count / shards;
  std::uint64_t extra = count % shards;
  std::uint64_t at = 0;
  for (std::uint64_t i = 0; i < shards; ++i) {
    std::uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

// Runs fn(shard) for every shard on up to `threads` workers. Results come back
// indexed by shard, so any merge done in shard order is independent of the
// thread count and of scheduling.
template <class Fn>
auto run_sharded(const std::vector<Shard>& shards, unsigned threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const Shard&>> {
  using Result = std::invoke_result_t<Fn&, const Shard&>;
  std::vector<Result> results(shards.size());
  if (threads <= 1 || shards.size() <= 1) {
    for (std::size_t i = 0; i < shards.size(); ++i) results[i] = fn(shards[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(shards.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < shards.size(); i = next++) {
      try {
        results[i] = fn(shards[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    unsigned workers = std::min<std::size_t>(threads, shards.size());
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace netcreate::detail

#endif  // NETCREATE_DETAIL_PARALLEL_HPP_
