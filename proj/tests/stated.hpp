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

// Generators of small kernels exactly as stated in closed form, written out
// term by term from Engel brackets C_n.

#ifndef TWOLIE_TESTS_STATED_HPP
#define TWOLIE_TESTS_STATED_HPP

#include "twolie/families.hpp"

namespace stated {

inline twolie::BracketExpr C(int n) { return twolie::engel_expr(n); }
inline twolie::BracketExpr C(int k, int l) { return twolie::engel_pair(k, l); }
inline twolie::BracketExpr C(int k, int l, int m) { return twolie::engel_triple(k, l, m); }

inline twolie::KernelCertificate make(twolie::Bidegree d, const twolie::BracketExpr& a, const twolie::BracketExpr& b) {
    twolie::KernelCertificate c;
    c.bidegree = d;
    c.A = twolie::normalize(a);
    c.B = twolie::normalize(b);
    c.source = "user";
    return c;
}

/// (C_m, sum_{i=1}^{m/2} (-1)^i [C_{m-i}, C_{i-1}]), written with an explicit loop.
inline twolie::KernelCertificate i2m(int m) {
    twolie::BracketExpr b;
    for (int i = 1; i <= m / 2; ++i) b += twolie::Integer(i % 2 == 0 ? 1 : -1) * C(m - i, i - 1);
    return make({2, m}, C(m), b);
}

/// (3[C_2,C_1] + 2[C_3,C_0], [C_1,C_0,C_1] - 2[C_2,C_0,C_0])
inline twolie::KernelCertificate i33() {
    return make({3, 3}, 3 * C(2, 1) + 2 * C(3, 0), C(1, 0, 1) - 2 * C(2, 0, 0));
}

/// (-2[C_5,C_1] - 5[C_4,C_2], 2[C_4,C_1,C_0] + 3[C_3,C_2,C_0] - 2[C_3,C_1,C_1] + [C_2,C_1,C_2])
inline twolie::KernelCertificate i36() {
    return make({3, 6}, -2 * C(5, 1) - 5 * C(4, 2),
                2 * C(4, 1, 0) + 3 * C(3, 2, 0) - 2 * C(3, 1, 1) + C(2, 1, 2));
}

}  // namespace stated

#endif  // TWOLIE_TESTS_STATED_HPP
