/*
 * Copyright 2026 The edom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EDOM_ERRORS_HPP
#define EDOM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edom {

/** Malformed or out-of-range input data (parse errors, bad instances). */
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** An operation was called on a graph outside its domain. */
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/** The configured work limit was hit before an answer was known. */
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t used)
        : std::runtime_error("budget exceeded after " + std::to_string(used) + " tests"), used(used) {}
    std::uint64_t used;
};

/**
 * A side condition that the published argument guarantees did not hold.
 * Raised instead of silently continuing.
 */
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace edom

#endif
