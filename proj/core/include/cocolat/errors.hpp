// Copyright 2026 The Cocolat Authors
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

#ifndef COCOLAT_ERRORS_HPP_
#define COCOLAT_ERRORS_HPP_

#include <stdexcept>

namespace cocolat {

/// An enumeration or exhaustive check would exceed its configured size guard.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A relation handed in as a lattice lacks a unique meet or join.
class NotALatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cocolat

#endif  // COCOLAT_ERRORS_HPP_
