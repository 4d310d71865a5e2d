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

#ifndef NETCREATE_NETCREATE_HPP_
#define NETCREATE_NETCREATE_HPP_

#include "netcreate/constructions.hpp"
#include "netcreate/cost.hpp"
#include "netcreate/enumeration.hpp"
#include "netcreate/equilibria.hpp"
#include "netcreate/errors.hpp"
#include "netcreate/game.hpp"
#include "netcreate/graph.hpp"
#include "netcreate/io.hpp"
#include "netcreate/rational.hpp"
#include "netcreate/structure.hpp"

#endif  // NETCREATE_NETCREATE_HPP_
