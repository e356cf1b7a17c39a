// Copyright 2026 The cfpgn Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Convenience header pulling in the whole library.

#ifndef CFPGN_CFPGN_HPP_
#define CFPGN_CFPGN_HPP_

#include "cfpgn/cf.hpp"
#include "cfpgn/envelope.hpp"
#include "cfpgn/json_io.hpp"
#include "cfpgn/lattice.hpp"
#include "cfpgn/logcoord.hpp"
#include "cfpgn/oracle.hpp"
#include "cfpgn/rational.hpp"
#include "cfpgn/svg.hpp"
#include "cfpgn/trajectory.hpp"
#include "cfpgn/verify.hpp"

#endif  // CFPGN_CFPGN_HPP_
