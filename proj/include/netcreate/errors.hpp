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

#ifndef NETCREATE_ERRORS_HPP_
#define NETCREATE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netcreate {

// Malformed input: bad ids, self-purchases, unparsable numbers, schema errors.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's precondition.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size limit (exhaustive or enumeration) would be exceeded.
class LimitExceeded : public PreconditionError {
 public:
  LimitExceeded(const std::string& limit_name, long long limit, long long requested)
      : PreconditionError(limit_name + " exceeded: requested " +
                          std::to_string(requested) + ", limit is " +
                          std::to_string(limit)),
        limit_(limit) {}
  explicit LimitExceeded(const std::string& what) : PreconditionError(what) {}

  long long limit() const { return limit_; }

 private:
  long long limit_ = 0;
};

// A randomized search gave up after its trial budget.
class TrialsExhausted : public std::runtime_error {
 public:
  explicit TrialsExhausted(std::size_t trials)
      : std::runtime_error("no successful trial after " + std::to_string(trials) +
                           " attempts; raise max_trials"),
        trials_(trials) {}

  std::size_t trials() const { return trials_; }

 private:
  std::size_t trials_;
};

}  // namespace netcreate

#endif  // NETCREATE_ERRORS_HPP_
