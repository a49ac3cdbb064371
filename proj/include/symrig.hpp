// Copyright 2026 The symrig Authors
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

// Umbrella header.

#pragma once

#include "symrig/connectivity.hpp"
#include "symrig/covering.hpp"
#include "symrig/error.hpp"
#include "symrig/fixtures.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/group.hpp"
#include "symrig/io.hpp"
#include "symrig/matroid.hpp"
#include "symrig/numeric.hpp"
#include "symrig/symcover.hpp"
