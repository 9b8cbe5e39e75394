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

// Closed-form kernel elements built from Engel brackets C_n = [a, b, ..., b]:
// the I_{2,2n} family [[a,_{2n}b],a] = [sum (-1)^i [C_{2n-1-i}, C_i], b], the
// generator of I_{2,m}, and the weight-3n family in I_{3,3n} with its
// coefficients alpha_{i,j}.
//
// Every certificate stores B with its sign already flipped, so that
// [A,a] + [B,b] = 0 holds literally.

#ifndef TWOLIE_FAMILIES_HPP
#define TWOLIE_FAMILIES_HPP

#include "twolie/theta.hpp"

namespace twolie {

/// alpha_{0,0} = 1, otherwise
/// 2 binom(i+j-1, j) + binom(i+j-2, j-1) - binom(i+j-2, j-2) - 2 binom(i+j-1, j-2).
/// Throws InvalidInput for negative arguments.
Integer alpha(int i, int j);

/// [C_k, C_l] and [C_k, C_l, C_m] as expressions.
BracketExpr engel_pair(int k, int l);
BracketExpr engel_triple(int k, int l, int m);

/// Certificate in bidegree (2, 2n), n >= 1: A = C_{2n},
/// B = -sum_{i=0}^{n-1} (-1)^i [C_{2n-1-i}, C_i]. Verified on return.
KernelCertificate qbad_certificate(int n);

/// Generator of I_{2,m} for even m >= 2: (C_m, sum_{i=1}^{m/2} (-1)^i [C_{m-i}, C_{i-1}]).
/// Throws InvalidInput for odd m, where the kernel is zero.
KernelCertificate i2_certificate(int m);

/// The pair (A_n, -B_n) in bidegree (3, 3n), n >= 1, with
///   A_n = sum_{k=0}^{floor((n+1)/2)} (-1)^{n+1} alpha_{n+1-k,k} [C_{2n+1-k}, C_{n+k-1}]
///   B_n = sum_{i=0}^{n} sum_{j=0}^{floor(i/2)} (-1)^{i+1} alpha_{i-j,j} [C_{n+i-j}, C_{n+j-1}, C_{n-i}].
KernelCertificate i33n_certificate(int n);

/// Stage k of the induction behind i33n_certificate:
///   omega_k = [sum_{i=0}^{k} sum_{j=0}^{floor(i/2)} (-1)^{i+1} alpha_{i-j,j} [C_{n+i-j}, C_{n+j-1}, C_{n-i}], b]
///   theta_k = sum_{t=0}^{floor((k+1)/2)} (-1)^{k+1} alpha_{k+1-t,t} [C_{n+k+1-t}, C_{n-1+t}, C_{n-k}]
/// Both live in L_{3,3n}.
struct PartialSums {
    int n = 0;
    int k = 0;
    BracketExpr omega_expr;
    BracketExpr theta_expr;
    LieElement omega;
    LieElement theta;
};

/// Throws InvalidInput unless 1 <= k <= n.
PartialSums partial_sums(int n, int k);

/// The four cases of the expansion of [C_k, C_l, C_m, b] for k > l, k >= m.
enum class RazlCase {
    generic,       ///< k > l+1, k >= m+1
    adjacent,      ///< k = l+1, k >= m+1
    adjacent_top,  ///< k = l+1, k = m
    top,           ///< k > l+1, k = m
};

/// Throws InvalidInput unless k > l and k >= m (all nonnegative).
RazlCase razl_case(int k, int l, int m);

/// Right-hand side of the case expansion, as a sum of [C_x, C_y, C_z].
BracketExpr razl_expansion(int k, int l, int m);

/// razl_expansion normalized; equals normalize([C_k, C_l, C_m, b]).
LieElement razl_rewrite(int k, int l, int m);

}  // namespace twolie

#endif  // TWOLIE_FAMILIES_HPP
