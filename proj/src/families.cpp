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

#include "twolie/families.hpp"

namespace twolie {

Integer alpha(int i, int j) {
    if (i < 0 || j < 0) throw InvalidInput("alpha: negative index");
    if (i == 0 && j == 0) return 1;
    const int s = i + j;
    return 2 * binomial(s - 1, j) + binomial(s - 2, j - 1) - binomial(s - 2, j - 2) - 2 * binomial(s - 1, j - 2);
}

BracketExpr engel_pair(int k, int l) { return left_normed({engel_expr(k), engel_expr(l)}); }

BracketExpr engel_triple(int k, int l, int m) {
    return left_normed({engel_expr(k), engel_expr(l), engel_expr(m)});
}

namespace {

KernelCertificate make_certificate(Bidegree d, const BracketExpr& a, const BracketExpr& b, std::string source) {
    KernelCertificate c;
    c.bidegree = d;
    c.A = normalize(a);
    c.B = normalize(b);
    if (c.A.is_zero()) c.A = LieElement(Bidegree{d.k - 1, d.l});
    if (c.B.is_zero()) c.B = LieElement(Bidegree{d.k, d.l - 1});
    c.source = std::move(source);
    verify_certificate(c);
    return c;
}

Integer sign(int e) { return e % 2 == 0 ? 1 : -1; }

BracketExpr omega_inner(int n, int k) {
    BracketExpr sum;
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j <= i / 2; ++j) {
            sum += sign(i + 1) * alpha(i - j, j) * engel_triple(n + i - j, n + j - 1, n - i);
        }
    }
    return sum;
}

BracketExpr theta_sum(int n, int k) {
    BracketExpr sum;
    for (int t = 0; t <= (k + 1) / 2; ++t) {
        sum += sign(k + 1) * alpha(k + 1 - t, t) * engel_triple(n + k + 1 - t, n - 1 + t, n - k);
    }
    return sum;
}

}  // namespace

KernelCertificate qbad_certificate(int n) {
    if (n < 1) throw InvalidInput("qbad: n must be at least 1");
    BracketExpr rhs;
    for (int i = 0; i <= n - 1; ++i) rhs += sign(i) * engel_pair(2 * n - 1 - i, i);
    return make_certificate({2, 2 * n}, engel_expr(2 * n), -rhs, "family:qbad");
}

KernelCertificate i2_certificate(int m) {
    if (m < 2 || m % 2 != 0) throw InvalidInput("i2: m must be even and at least 2 (I_{2,m} = 0 for odd m)");
    BracketExpr b;
    for (int i = 1; i <= m / 2; ++i) b += sign(i) * engel_pair(m - i, i - 1);
    return make_certificate({2, m}, engel_expr(m), b, "family:i2");
}

KernelCertificate i33n_certificate(int n) {
    if (n < 1) throw InvalidInput("i33: n must be at least 1");
    BracketExpr a;
    for (int k = 0; k <= (n + 1) / 2; ++k) {
        a += sign(n + 1) * alpha(n + 1 - k, k) * engel_pair(2 * n + 1 - k, n + k - 1);
    }
    return make_certificate({3, 3 * n}, a, -omega_inner(n, n), "family:i33");
}

PartialSums partial_sums(int n, int k) {
    if (k < 1 || k > n) throw InvalidInput("partial_sums: need 1 <= k <= n");
    PartialSums p;
    p.n = n;
    p.k = k;
    p.omega_expr = bracket(omega_inner(n, k), BracketExpr::letter(Letter::b));
    p.theta_expr = theta_sum(n, k);
    p.omega = normalize(p.omega_expr);
    p.theta = normalize(p.theta_expr);
    return p;
}

RazlCase razl_case(int k, int l, int m) {
    if (l < 0 || m < 0 || !(k > l) || !(k >= m)) {
        throw InvalidInput("razl: need k > l >= 0 and k >= m >= 0");
    }
    if (k > l + 1) return k >= m + 1 ? RazlCase::generic : RazlCase::top;
    return k >= m + 1 ? RazlCase::adjacent : RazlCase::adjacent_top;
}

BracketExpr razl_expansion(int k, int l, int m) {
    switch (razl_case(k, l, m)) {
        case RazlCase::generic:
            return engel_triple(k + 1, l, m) + engel_triple(k, l + 1, m) + engel_triple(k, l, m + 1);
        case RazlCase::adjacent:
            return engel_triple(k + 1, l, m) + engel_triple(k, l, m + 1);
        case RazlCase::adjacent_top:
            return 2 * engel_triple(k + 1, l, m) - engel_triple(k + 1, l + 1, m - 1);
        case RazlCase::top:
            return 2 * engel_triple(k + 1, l, m) + engel_triple(k, l + 1, m) - engel_triple(k + 1, k, l);
    }
    throw ConsistencyError("unreachable razl case");
}

LieElement razl_rewrite(int k, int l, int m) { return normalize(razl_expansion(k, l, m)); }

}  // namespace twolie
