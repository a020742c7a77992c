// Copyright 2026 The ZoloEig Authors. All Rights Reserved.
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

#ifndef ZOLOEIG_ERROR_HPP
#define ZOLOEIG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zoloeig {

/// Invalid argument or out-of-domain input.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical breakdown inside an algorithm (not the caller's fault).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Unpivoted elimination met a pivot below the acceptance threshold.
class FactorizationError : public NumericalError {
 public:
  FactorizationError(const std::string& what, std::size_t pivot_index)
      : NumericalError(what), pivot_index(pivot_index) {}

  std::size_t pivot_index;
};

}  // namespace zoloeig

#endif  // ZOLOEIG_ERROR_HPP
