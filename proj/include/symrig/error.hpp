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

#pragma once

#include <stdexcept>
#include <string>

namespace symrig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a documented invariant (malformed graph, bad partition, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The requested group / character combination has no known characterization.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run beyond its configured cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Numerical rank decisions disagreed between random placements.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

}  // namespace symrig
