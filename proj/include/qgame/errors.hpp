// Copyright 2026 The qgame Authors
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

namespace qgame {

/// Argument outside the mathematical domain of an operation (bad digit,
/// player index, dimension mismatch, n < 2, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A requested dense object would exceed the configured size cap.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// An internally constructed object failed its own certification.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace qgame
