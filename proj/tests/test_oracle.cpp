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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stated.hpp"
#include "twolie/families.hpp"
#include "twolie/oracle.hpp"

using namespace twolie;
using oracle::random_expr;

namespace {

IntMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    IntMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

// Evaluate a polynomial word by word, with plain products.
IntMatrix eval_assoc(const AssocPoly& p, const MatrixAssignment& x) {
    IntMatrix acc(x.dim, x.dim);
    for (const auto& [w, c] : p.terms()) {
        IntMatrix m = IntMatrix::identity(x.dim);
        for (std::size_t i = 0; i < w.size(); ++i) m = m * (w[i] == Letter::a ? x.a : x.b);
        for (std::size_t r = 0; r < x.dim; ++r)
            for (std::size_t s = 0; s < x.dim; ++s) acc(r, s) += c * m(r, s);
    }
    return acc;
}

}  // namespace

TEST_CASE("[a,b] on elementary matrices") {
    MatrixAssignment x{3, unit(3, 0, 1), unit(3, 1, 2), 0};
    CHECK(evaluate(parse_bracket_expr("[a,b]"), x) == unit(3, 0, 2));
    CHECK(evaluate(parse_bracket_expr("[b,a]"), x)(0, 2) == -1);
    // strictly upper triangular 3x3 matrices are 2-step nilpotent
    CHECK(evaluate(parse_bracket_expr("[a,b,a]"), x).is_zero());
    CHECK(evaluate(parse_bracket_expr("[a,b,b]"), x).is_zero());
}

TEST_CASE("random assignments are reproducible") {
    MatrixAssignment x = random_assignment(4, 7, 3);
    MatrixAssignment y = random_assignment(4, 7, 3);
    CHECK(x.a == y.a);
    CHECK(x.b == y.b);
    CHECK(random_assignment(4, 7, 4).a != x.a);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(x.a(i, j) >= -3);
            CHECK(x.a(i, j) <= 3);
        }
}

TEST_CASE("evaluation matches the associative expansion") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        int weight = 2 + trial % 7;
        BracketExpr e = random_expr(weight, gen);
        MatrixAssignment x = random_assignment(3, 5, static_cast<std::uint64_t>(trial));
        IntMatrix direct = evaluate(e, x);
        CHECK(direct == eval_assoc(assoc_expand(e), x));
        CHECK(evaluate(normalize(e), x) == direct);
    }
}

TEST_CASE("[a,b,b,a] - [a,b,a,b] vanishes") {
    BracketExpr e = parse_bracket_expr("[a,b,b,a] - [a,b,a,b]");
    for (std::uint64_t t = 0; t < 20; ++t) CHECK(evaluate(e, random_assignment(4, 1, t)).is_zero());
    CHECK(evaluate(parse_bracket_expr("[a,b,b,a]"), random_assignment(4, 1, 0)).is_zero() == false);
}

TEST_CASE("certificates pass, corrupted ones fail") {
    OracleOptions o;
    o.seed = 20260101;
    OracleReport ok = oracle_check(stated::i33(), o);
    CHECK(ok.passed);
    CHECK(ok.trials == 50);
    CHECK(ok.dim == 4);
    CHECK(ok.seed == 20260101);
    CHECK(ok.summary().find("seed 20260101") != std::string::npos);
    CHECK(ok.summary().find("not a proof") != std::string::npos);

    KernelCertificate bad = stated::i33();
    bad.A = bad.A + LieElement::basis(lyndon_words(2, 3).front());
    OracleReport no = oracle_check(bad, o);
    CHECK_FALSE(no.passed);
    REQUIRE(no.failing_trial);
    CHECK(*no.failing_trial < 50);
    REQUIRE(no.witness_value);
    CHECK_FALSE(no.witness_value->is_zero());
    CHECK(no.summary().find("FAIL") != std::string::npos);

    KernelCertificate zero;
    zero.bidegree = {2, 3};
    CHECK(oracle_check(zero, o).passed);
}

TEST_CASE("basis elements are nonzero on 4x4 matrices") {
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k < n; ++k) {
            for (const LyndonWord& w : lyndon_words(k, n - k)) {
                LieElement x = LieElement::basis(w);
                bool seen = false;
                for (std::uint64_t t = 0; t < 10 && !seen; ++t) seen = !evaluate(x, random_assignment(4, 3, t)).is_zero();
                CHECK_MESSAGE(seen, w.word().to_string());
            }
        }
    }
}

TEST_CASE("modulus option") {
    OracleOptions o;
    o.modulus = Integer(1000003);
    CHECK(oracle_check(i33n_certificate(2), o).passed);
    MatrixAssignment x = random_assignment(4, 2, 0);
    IntMatrix full = evaluate(parse_bracket_expr("[a,b,b,a,a]"), x);
    IntMatrix red = evaluate(parse_bracket_expr("[a,b,b,a,a]"), x, Integer(7));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), full(i, j).get_mpz_t(), 7);
            CHECK(red(i, j) == r);
        }
    o.modulus = Integer(1);
    CHECK_THROWS_AS(oracle_check(stated::i33(), o), InvalidInput);
    OracleOptions z;
    z.trials = 0;
    CHECK_THROWS_AS(oracle_check(stated::i33(), z), InvalidInput);
}
