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

#include "twolie/dims.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>

#include "twolie/integer.hpp"

namespace twolie {

int mobius(std::int64_t n) {
    if (n <= 0) throw InvalidInput("mobius: argument must be positive");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::int64_t dim_L(int n) {
    if (n <= 0) throw InvalidInput("dim_L: weight must be positive");
    if (n > 60) throw InvalidInput("dim_L: weight above 60 not supported");
    std::int64_t sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) sum += mobius(n / d) * (std::int64_t{1} << d);
    }
    return sum / n;
}

std::int64_t dim_L_bigraded(int k, int l) {
    if (k < 0 || l < 0) throw InvalidInput("dim_L_bigraded: negative argument");
    if (k == 0 && l == 0) throw InvalidInput("dim_L_bigraded: bidegree (0,0)");
    const int n = k + l;
    const int g = std::gcd(k, l);
    Integer sum = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d == 0) sum += mobius(d) * binomial(n / d, k / d);
    }
    Integer q = sum / n;
    if (q * n != sum) throw ConsistencyError("bigraded Witt sum not divisible by the weight");
    return q.get_si();
}

std::int64_t dim_L_bigraded_or_zero(int k, int l) {
    if (k < 0 || l < 0 || (k == 0 && l == 0)) return 0;
    return dim_L_bigraded(k, l);
}

std::int64_t dim_I_bigraded(int k, int l) {
    if (k < 0 || l < 0 || k + l < 2) throw InvalidInput("dim_I_bigraded: need k,l >= 0 and k+l >= 2");
    return dim_L_bigraded_or_zero(k - 1, l) + dim_L_bigraded_or_zero(k, l - 1) - dim_L_bigraded_or_zero(k, l);
}

std::int64_t dim_I(int n) {
    if (n < 2) throw InvalidInput("dim_I: weight must be at least 2");
    return 2 * dim_L(n - 1) - dim_L(n);
}

std::int64_t dim_I2(int m) {
    if (m < 1) throw InvalidInput("dim_I2: m must be positive");
    return m % 2 == 0 ? 1 : 0;
}

std::int64_t dim_I3(int m) {
    if (m < 1) throw InvalidInput("dim_I3: m must be positive");
    const std::int64_t ceil_half = (m + 1) / 2;
    const std::int64_t value = ceil_half - (m - 1) / 3 - 1;
    // floor((m+1)/2) form; identical for m >= 1.
    const std::int64_t alt = (m + 1) / 2 - (m - 1) / 3 - 1;
    if (value != alt) throw ConsistencyError("dim_I3: closed forms disagree");
    return value;
}

std::vector<DimRecord> bigraded_dim_records(int max_weight) {
    std::vector<DimRecord> out;
    for (int n = 2; n <= max_weight; ++n) {
        for (int k = 0; k <= n; ++k) {
            out.push_back({n, k, n - k, dim_L_bigraded(k, n - k), dim_I_bigraded(k, n - k)});
        }
    }
    return out;
}

namespace {

void table_row(std::ostringstream& os, const std::string& label, const std::vector<std::string>& cells) {
    os << label << std::string(label.size() < 13 ? 13 - label.size() : 0, ' ');
    for (const auto& c : cells) os << " | " << std::string(c.size() < 4 ? 4 - c.size() : 0, ' ') << c;
    os << " |\n";
}

}  // namespace

std::string dim_table_text(int max_weight) {
    if (max_weight < 1) throw InvalidInput("dims: max weight must be positive");
    std::ostringstream os;
    std::vector<std::string> head, row;
    for (int n = 1; n <= max_weight; ++n) {
        head.push_back(std::to_string(n));
        row.push_back(std::to_string(dim_L(n)));
    }
    table_row(os, "n", head);
    table_row(os, "dim L_n", row);
    if (max_weight < 2) return os.str();

    os << "\n";
    std::vector<std::string> h2, i2, i3, in;
    for (int n = 2; n <= max_weight; ++n) {
        h2.push_back(std::to_string(n));
        i2.push_back(std::to_string(dim_I_bigraded(2, n - 2)));
        i3.push_back(n >= 3 ? std::to_string(dim_I_bigraded(3, n - 3)) : "0");
        in.push_back(std::to_string(dim_I(n)));
    }
    table_row(os, "n", h2);
    table_row(os, "dim I_{2,n-2}", i2);
    table_row(os, "dim I_{3,n-3}", i3);
    table_row(os, "dim I_n", in);
    return os.str();
}

std::string dim_records_text(const std::vector<DimRecord>& records) {
    std::ostringstream os;
    os << "weight  k  l      dimL      dimI\n";
    for (const auto& r : records) {
        char line[96];
        std::snprintf(line, sizeof line, "%6d %2d %2d %9lld %9lld\n", r.weight, r.k, r.l,
                      static_cast<long long>(r.dim_L), static_cast<long long>(r.dim_I));
        os << line;
    }
    return os.str();
}

}  // namespace twolie
