// Copyright 2026 The selfnav Authors
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

namespace selfnav {

/** Axis vector that is not unit-norm. */
class InvalidAxis : public std::invalid_argument {
 public:
  explicit InvalidAxis(const std::string &message)
      : std::invalid_argument(message) {}
};

/** Matrix that fails the unitarity check. */
class InvalidUnitary : public std::invalid_argument {
 public:
  explicit InvalidUnitary(const std::string &message)
      : std::invalid_argument(message) {}
};

/** Argument outside the mathematical domain of an operation. */
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string &message)
      : std::domain_error(message) {}
};

class InvalidConfiguration : public std::invalid_argument {
 public:
  explicit InvalidConfiguration(const std::string &message)
      : std::invalid_argument(message) {}
};

class InsufficientData : public std::invalid_argument {
 public:
  explicit InsufficientData(const std::string &message)
      : std::invalid_argument(message) {}
};

}  // namespace selfnav
