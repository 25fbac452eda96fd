/*
   Copyright 2026 The chaincodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHAINCODES_ERRORS_HPP
#define CHAINCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chaincodes {

/// Malformed textual input (ring specs, polynomials, element lists).
class ParseError : public std::invalid_argument {
   public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation does not hold. The message names
/// the violated condition.
class PreconditionError : public std::domain_error {
   public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// An exhaustive search would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chaincodes

#endif
