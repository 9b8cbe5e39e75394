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

#include "twolie/integer.hpp"

#include <cctype>

namespace twolie {

Integer parse_integer(const std::string& text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    if (pos == text.size()) throw InvalidInput("not an integer: '" + text + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw InvalidInput("not an integer: '" + text + "'");
        }
    }
    Integer value(text[0] == '+' ? text.substr(1) : text, 10);
    return value;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // binom(n, k) = (-1)^k binom(k - n - 1, k) for n < 0
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? r : Integer(-r);
}

}  // namespace twolie
