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

#ifndef NETCREATE_ENUMERATION_HPP_
#define NETCREATE_ENUMERATION_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "netcreate/detail/evaluators.hpp"
#include "netcreate/detail/parallel.hpp"
#include "netcreate/equilibria.hpp"
#include "netcreate/errors.hpp"
#include "netcreate/game.hpp"
#include "netcreate/graph.hpp"

// Labeled, exhaustive enumeration over profiles without double purchases.
//
// A profile with both v in S_w and w in S_v is never weak-Nash for alpha > 0:
// dropping one copy saves alpha and changes no distance. Those profiles are
// therefore left out of the code space, which is then exactly 3^C(n,2).
namespace netcreate {

struct EnumerationOptions {
  int enumeration_limit = 5;  // n = 6 (3^15 profiles) must be requested explicitly
  unsigned threads = 1;
};

// Base-3 code with one trit per pair (v, w), v < w, pairs in lexicographic
// order and the first pair least significant: 0 absent, 1 v buys, 2 w buys.
struct ProfileCode {
  std::uint64_t value = 0;
  friend auto operator<=>(const ProfileCode&, const ProfileCode&) = default;
};

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline std::uint64_t profile_space_size(int n) {
  if (n > 9) throw LimitExceeded("profile code width", 9, n);
  std::uint64_t size = 1;
  for (int i = 0; i < pair_count(n); ++i) size *= 3;
  return size;
}

namespace detail {

inline void check_enumeration(int n, const EnumerationOptions& opts) {
  if (n > opts.enumeration_limit) {
    throw LimitExceeded("enumeration_limit", opts.enumeration_limit, n);
  }
  if (n < 1) throw InvalidInput("enumeration needs n >= 1");
}

inline void decode_masks(int n, std::uint64_t code, std::span<Mask> bought) {
  std::fill(bought.begin(), bought.end(), Mask(0));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      switch (code % 3) {
        case 1: bought[v] |= bit(w); break;
        case 2: bought[w] |= bit(v); break;
        default: break;
      }
      code /= 3;
    }
  }
}

// Scaled social cost of every profile in a shard that satisfies `keep`.
struct CodedCost {
  std::uint64_t code;
  std::int64_t scaled_social;
};

}  // namespace detail

inline StrategyProfile decode_profile(int n, ProfileCode code) {
  if (code.value >= profile_space_size(n)) {
    throw InvalidInput("profile code " + std::to_string(code.value) + " out of range for n = " +
                       std::to_string(n));
  }
  std::vector<detail::Mask> bought(n);
  detail::decode_masks(n, code.value, bought);
  return detail::profile_from_masks(n, bought);
}

inline ProfileCode encode_profile(const StrategyProfile& profile) {
  const int n = profile.n();
  profile_space_size(n);
  std::uint64_t code = 0;
  std::uint64_t weight = 1;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      bool low = profile.buys(v, w);
      bool high = profile.buys(w, v);
      if (low && high) {
        throw PreconditionError("pair {" + std::to_string(v) + "," + std::to_string(w) +
                                "} is bought twice and has no profile code");
      }
      code += weight * (low ? 1 : high ? 2 : 0);
      weight *= 3;
    }
  }
  return {code};
}

// Lazily decodes profiles in code order.
class ProfileRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = StrategyProfile;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, std::uint64_t code) : n_(n), code_(code) {}

    StrategyProfile operator*() const { return decode_profile(n_, {code_}); }
    ProfileCode code() const { return {code_}; }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++code_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

   private:
    int n_ = 0;
    std::uint64_t code_ = 0;
  };

  explicit ProfileRange(int n) : n_(n), size_(profile_space_size(n)) {}

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, size_}; }
  std::uint64_t size() const { return size_; }

 private:
  int n_;
  std::uint64_t size_;
};

inline ProfileRange enumerate_profiles(int n, const EnumerationOptions& opts = {}) {
  detail::check_enumeration(n, opts);
  return ProfileRange(n);
}

namespace detail {

template <class Keep>
std::vector<CodedCost> collect(const GameParams& game, const EnumerationOptions& opts, Keep keep) {
  check_enumeration(game.n(), opts);
  const int n = game.n();
  const ScaledAlpha alpha = ScaledAlpha::from(game.alpha());
  const std::uint64_t total = profile_space_size(n);
  const unsigned threads = std::max(1u, opts.threads);
  auto shards = make_shards(total, std::uint64_t(threads) * 16);
  auto parts = run_sharded(shards, threads, [&](const Shard& s) {
    std::vector<CodedCost> out;
    MaskEvaluator e(n, alpha);
    std::vector<Mask> bought(n);
    for (std::uint64_t code = s.begin; code < s.end; ++code) {
      decode_masks(n, code, bought);
      e.load(bought);
      if (keep(e)) out.push_back({code, e.scaled_social_cost()});
    }
    return out;
  });
  std::vector<CodedCost> merged;
  for (auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
  return merged;
}

}  // namespace detail

struct EquilibriumEntry {
  ProfileCode code;
  CostReport cost;
};

// Every duplicate-free profile whose verdict matches `mode`, in code order.
inline std::vector<EquilibriumEntry> enumerate_equilibria(const GameParams& game, NashMode mode,
                                                          const EnumerationOptions& opts = {}) {
  auto found = detail::collect(game, opts, [mode](const detail::MaskEvaluator& e) {
    return detail::is_equilibrium(e, mode);
  });
  std::vector<EquilibriumEntry> out;
  out.reserve(found.size());
  for (const auto& f : found) {
    out.push_back({{f.code}, social_cost(game, decode_profile(game.n(), {f.code}))});
  }
  return out;
}

struct OptimumEntry {
  Rational cost;
  ProfileCode code;  // least code among minimizers
};

inline OptimumEntry brute_force_optimum(const GameParams& game,
                                        const EnumerationOptions& opts = {}) {
  detail::check_enumeration(game.n(), opts);
  const auto alpha = detail::ScaledAlpha::from(game.alpha());
  // Minimum per shard, then across shards in code order.
  const int n = game.n();
  const unsigned threads = std::max(1u, opts.threads);
  auto shards = detail::make_shards(profile_space_size(n), std::uint64_t(threads) * 16);
  auto parts = detail::run_sharded(shards, threads, [&](const detail::Shard& s) {
    detail::CodedCost best{0, detail::kInfiniteScaled};
    detail::MaskEvaluator e(n, alpha);
    std::vector<detail::Mask> bought(n);
    for (std::uint64_t code = s.begin; code < s.end; ++code) {
      detail::decode_masks(n, code, bought);
      e.load(bought);
      std::int64_t c = e.scaled_social_cost();
      if (c < best.scaled_social) best = {code, c};
    }
    return best;
  });
  detail::CodedCost best{0, detail::kInfiniteScaled};
  for (const auto& p : parts) {
    if (p.scaled_social < best.scaled_social) best = p;
  }
  return {alpha.to_cost(best.scaled_social).value(), {best.code}};
}

struct PoaResult {
  GameParams game;
  NashMode mode = NashMode::kWeak;
  Rational optimum;
  ProfileCode optimum_code;
  Rational worst_equilibrium;
  ProfileCode worst_code;  // least code among the costliest equilibria
  std::uint64_t equilibrium_count = 0;
  Rational poa;
};

// Worst equilibrium over optimum, exactly. For n = 1 both costs are 0 and the
// ratio is reported as 1.
inline PoaResult price_of_anarchy_exact(const GameParams& game, NashMode mode,
                                        const EnumerationOptions& opts = {}) {
  auto equilibria = detail::collect(game, opts, [mode](const detail::MaskEvaluator& e) {
    return detail::is_equilibrium(e, mode);
  });
  if (equilibria.empty()) {
    throw PreconditionError("no " + std::string(mode == NashMode::kWeak ? "weak" : "strict") +
                            " equilibrium exists for n = " + std::to_string(game.n()) +
                            ", alpha = " + game.alpha().to_string());
  }
  const auto alpha = detail::ScaledAlpha::from(game.alpha());
  detail::CodedCost worst = equilibria.front();
  for (const auto& eq : equilibria) {
    if (eq.scaled_social > worst.scaled_social) worst = eq;
  }
  OptimumEntry opt = brute_force_optimum(game, opts);

  PoaResult r;
  r.game = game;
  r.mode = mode;
  r.optimum = opt.cost;
  r.optimum_code = opt.code;
  r.worst_equilibrium = alpha.to_cost(worst.scaled_social).value();
  r.worst_code = {worst.code};
  r.equilibrium_count = equilibria.size();
  r.poa = opt.cost == Rational(0) ? Rational(1) : r.worst_equilibrium / opt.cost;
  return r;
}

// One row per (n, alpha), n-major, in the order given.
inline std::vector<PoaResult> poa_sweep(const std::vector<int>& n_list,
                                        const std::vector<Rational>& alpha_list, NashMode mode,
                                        const EnumerationOptions& opts = {}) {
  for (int n : n_list) detail::check_enumeration(n, opts);
  std::vector<PoaResult> rows;
  for (int n : n_list) {
    for (const auto& a : alpha_list) rows.push_back(price_of_anarchy_exact(GameParams(n, a), mode, opts));
  }
  return rows;
}

}  // namespace netcreate

#endif  // NETCREATE_ENUMERATION_HPP_
