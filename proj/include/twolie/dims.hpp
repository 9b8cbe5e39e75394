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

// Ranks of the graded pieces of L(a,b) and of the kernels I_n, I_{k,l}.

#ifndef TWOLIE_DIMS_HPP
#define TWOLIE_DIMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace twolie {

/// Moebius function by trial division. Throws InvalidInput for n <= 0.
int mobius(std::int64_t n);

/// dim L_n = (1/n) sum_{d | n} mu(n/d) 2^d, for 1 <= n <= 60.
std::int64_t dim_L(int n);

/// dim L_{k,l} = (1/(k+l)) sum_{d | gcd(k,l)} mu(d) binom((k+l)/d, k/d).
/// Throws InvalidInput for negative arguments or (0,0).
std::int64_t dim_L_bigraded(int k, int l);

/// dim_L_bigraded with the degenerate conventions used for kernel
/// bookkeeping: 0 when k < 0, l < 0 or (k,l) = (0,0).
std::int64_t dim_L_bigraded_or_zero(int k, int l);

/// dim I_{k,l} = dim L_{k-1,l} + dim L_{k,l-1} - dim L_{k,l} (surjectivity of
/// Theta_{k,l}), with degenerate conventions. Requires k + l >= 2.
std::int64_t dim_I_bigraded(int k, int l);

/// dim I_n = 2 dim L_{n-1} - dim L_n. Throws InvalidInput for n < 2.
std::int64_t dim_I(int n);

/// dim I_{2,m}: 0 for odd m, 1 for even m. Throws InvalidInput for m < 1.
std::int64_t dim_I2(int m);

/// dim I_{3,m} = ceil(m/2) - floor((m-1)/3) - 1. Throws InvalidInput for m < 1.
std::int64_t dim_I3(int m);

struct DimRecord {
    int weight;
    int k;
    int l;
    std::int64_t dim_L;
    std::int64_t dim_I;
};

/// One record per bidegree (k,l) with 2 <= k+l <= max_weight, ordered by
/// weight then k.
std::vector<DimRecord> bigraded_dim_records(int max_weight);

/// Aligned text tables: dim L_n for n = 1..max_weight, then the rows
/// dim I_{2,n-2}, dim I_{3,n-3} and dim I_n for n = 2..max_weight.
std::string dim_table_text(int max_weight);

/// Aligned text rendering of bigraded_dim_records.
std::string dim_records_text(const std::vector<DimRecord>& records);

}  // namespace twolie

#endif  // TWOLIE_DIMS_HPP
