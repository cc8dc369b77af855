// Copyright 2026 The mpfkit Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpfkit {

/// Raised when an operation needs a dense matrix on more qubits than allowed.
class DenseCapExceeded : public std::length_error {
   public:
    DenseCapExceeded(std::size_t n_sites, std::size_t cap)
        : std::length_error(
              "dense evaluation requested on " + std::to_string(n_sites) + " sites, cap is " + std::to_string(cap)),
          n_sites_(n_sites),
          cap_(cap) {
    }
    std::size_t n_sites() const noexcept {
        return n_sites_;
    }
    std::size_t cap() const noexcept {
        return cap_;
    }

   private:
    std::size_t n_sites_;
    std::size_t cap_;
};

/// Raised when an enumeration would exceed its configured evaluation budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace mpfkit
