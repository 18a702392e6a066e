// Copyright 2026 The eofbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EOFBOUND_EOFBOUND_HPP
#define EOFBOUND_EOFBOUND_HPP

#include "eofbound/bound.hpp"
#include "eofbound/error.hpp"
#include "eofbound/maps.hpp"
#include "eofbound/matkernel.hpp"
#include "eofbound/oracles.hpp"
#include "eofbound/random.hpp"
#include "eofbound/statefile.hpp"
#include "eofbound/states.hpp"

#endif  // EOFBOUND_EOFBOUND_HPP
