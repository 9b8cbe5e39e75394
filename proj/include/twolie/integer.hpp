/* Copyright 2026 The twolie Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef TWOLIE_INTEGER_HPP
#define TWOLIE_INTEGER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace twolie {

using Integer = mpz_class;

/// Thrown when an operation's precondition on its arguments is violated.
class InvalidInput : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when terms of different bidegrees are combined where a homogeneous
/// element is required.
class BidegreeMismatch : public InvalidInput {
 public:
    using InvalidInput::InvalidInput;
};

/// An internal invariant failed (e.g. a nonzero residual after normalization).
/// Never caught inside the library.
class ConsistencyError : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Parses a decimal integer with optional leading sign.
Integer parse_integer(const std::string& text);

/// binom(n, k) with binom(n, k) = 0 for k < 0. For n >= 0 this is the usual
/// coefficient (zero when k > n); for n < 0 it is the generalized binomial
/// n(n-1)...(n-k+1)/k!, so Pascal's rule holds for every integer n.
Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace twolie

#endif  // TWOLIE_INTEGER_HPP
