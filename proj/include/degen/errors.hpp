// Copyright 2026 The degen Authors
//
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

namespace degen {

/// Raised when an operation is called outside its domain (a series with a
/// nonzero constant term handed to `compose`, a malformed rational, ...).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when two independent computations of the same table disagree.
/// This always indicates an engine defect, never bad input.
class route_mismatch : public std::logic_error {
 public:
  explicit route_mismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace degen
