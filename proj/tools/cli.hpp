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

#ifndef NETCREATE_TOOLS_CLI_HPP_
#define NETCREATE_TOOLS_CLI_HPP_

#include <istream>
#include <ostream>

namespace netcreate::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMalformed = 1;
inline constexpr int kRefused = 2;

// Runs one command line. Machine output goes to `out` (unless --out names a
// file), summaries and errors to `err`. `in` is read when --in is "-".
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace netcreate::cli

#endif  // NETCREATE_TOOLS_CLI_HPP_
