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

#include "oracles.hpp"
#include "stated.hpp"
#include "twolie/dims.hpp"
#include "twolie/theta.hpp"

using namespace twolie;
using stated::C;

namespace {

std::vector<std::vector<mpq_class>> rational(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    }
    return out;
}

bool lattice_equal_to(const KernelCertificate& c) {
    return lattice_equal(kernel_lattice(c.bidegree.k, c.bidegree.l), certificate_lattice(c.bidegree, {c}));
}

}  // namespace

TEST_CASE("theta_matrix examples") {
    ThetaMatrix t = theta_matrix(2, 2);
    REQUIRE(t.a_block.size() == 1);
    REQUIRE(t.b_block.size() == 1);
    CHECK(t.a_block[0].to_string() == "abb");
    CHECK(t.b_block[0].to_string() == "aab");
    CHECK(t.matrix.rows() == 1);
    CHECK(t.matrix(0, 0) == -1);
    CHECK(t.matrix(0, 1) == 1);

    t = theta_matrix(1, 1);
    CHECK(t.matrix.rows() == 1);
    CHECK(t.matrix(0, 0) == -1);
    CHECK(t.matrix(0, 1) == 1);

    t = theta_matrix(2, 0);
    CHECK(t.matrix.rows() == 0);
    CHECK(t.matrix.cols() == 1);
    CHECK(t.a_block[0].to_string() == "a");

    CHECK_THROWS_AS(theta_matrix(0, 0), InvalidInput);
    CHECK_THROWS_AS(theta_matrix(-1, 3), InvalidInput);
}

TEST_CASE("theta columns are normalized brackets with a and b") {
    for (auto [k, l] : {std::pair{3, 3}, std::pair{2, 5}, std::pair{4, 3}}) {
        ThetaMatrix t = theta_matrix(k, l);
        for (std::size_t j = 0; j < t.domain_size(); ++j) {
            const bool in_a = j < t.a_block.size();
            const LyndonWord& w = in_a ? t.a_block[j] : t.b_block[j - t.a_block.size()];
            BracketExpr e = bracket(BracketExpr(lyndon_bracket(w)), BracketExpr::letter(in_a ? Letter::a : Letter::b));
            LieElement col = normalize(e);
            for (std::size_t i = 0; i < t.codomain.size(); ++i) CHECK(t.matrix(i, j) == col.coefficient(t.codomain[i]));
        }
    }
}

TEST_CASE("theta has full rank onto L_{k,l}") {
    ThetaMatrix t33 = theta_matrix(3, 3);
    CHECK(rank(t33.matrix) == 3);
    CHECK(oracle::rational_rank(rational(t33.matrix)) == 3);
    for (int n = 2; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            ThetaMatrix t = theta_matrix(k, n - k);
            CHECK(rank(t.matrix) == static_cast<std::size_t>(dim_L_bigraded(k, n - k)));
        }
    }
}

TEST_CASE("kernel_certificates examples") {
    auto c22 = kernel_certificates(2, 2);
    REQUIRE(c22.size() == 1);
    CHECK(c22[0].verified);
    CHECK(c22[0].source == "computed");
    CHECK(lattice_equal_to(stated::make({2, 2}, C(2), -C(1, 0))));

    CHECK(kernel_certificates(2, 3).empty());

    auto c33 = kernel_certificates(3, 3);
    REQUIRE(c33.size() == 1);
    CHECK(lattice_equal(certificate_lattice({3, 3}, c33), certificate_lattice({3, 3}, {stated::i33()})));
}

TEST_CASE("kernel ranks follow the dimension formula through weight 13") {
    for (int n = 2; n <= 13; ++n) {
        std::int64_t total = 0;
        for (int k = 0; k <= n; ++k) {
            const int l = n - k;
            auto certs = kernel_certificates(k, l);
            CHECK(static_cast<std::int64_t>(certs.size()) == dim_I_bigraded(k, l));
            for (auto& c : certs) CHECK(verify_certificate(c));
            total += static_cast<std::int64_t>(certs.size());
        }
        CHECK(total == dim_I(n));
    }
}

TEST_CASE("verify_certificate examples") {
    KernelCertificate good = stated::make({2, 2}, C(2), -C(1, 0));
    CHECK(verify_certificate(good));
    CHECK(good.verified);

    KernelCertificate bad = stated::make({2, 2}, C(2), C(1, 0));
    CHECK_FALSE(verify_certificate(bad));
    CHECK_FALSE(bad.verified);
    // [C_2,a] + [[C_1,C_0],b] = -[aabb] - [aabb]
    CHECK(theta_image(bad) == LieElement::basis(LyndonWord::parse("aabb"), -2));
    CHECK(assoc_expand(bracket(C(2), BracketExpr::letter(Letter::a)) +
                       bracket(C(1, 0), BracketExpr::letter(Letter::b))) ==
          Integer(-2) * assoc_expand(lyndon_bracket(LyndonWord::parse("aabb"))));

    KernelCertificate zero;
    zero.bidegree = {2, 2};
    CHECK(verify_certificate(zero));

    KernelCertificate mismatched = stated::make({2, 2}, C(3), -C(1, 0));
    CHECK_THROWS_AS(verify_certificate(mismatched), BidegreeMismatch);
}

TEST_CASE("check_surjective") {
    auto r = check_surjective(2, 2);
    CHECK(r.surjective());
    CHECK(r.rank == 1);
    CHECK(check_surjective(3, 0).surjective());
    CHECK(check_surjective(3, 0).codomain_dim == 0);
    CHECK_THROWS_AS(check_surjective(1, 0), InvalidInput);
    for (int n = 2; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(check_surjective(k, n - k).surjective());
    }
}

TEST_CASE("lattice_membership") {
    KernelCertificate g = stated::i33();
    REQUIRE(verify_certificate(g));
    MembershipReport m = lattice_membership(g);
    CHECK(m.member);
    CHECK(m.kernel_rank == 1);
    CHECK(m.index == Integer(1));
    CHECK(m.primitive);

    KernelCertificate twice = g;
    twice.A *= 2;
    twice.B *= 2;
    REQUIRE(verify_certificate(twice));
    m = lattice_membership(twice);
    CHECK(m.member);
    CHECK(m.index == Integer(2));
    CHECK_FALSE(m.primitive);

    KernelCertificate g36 = stated::i36();
    REQUIRE(verify_certificate(g36));
    CHECK(lattice_membership(g36).index == Integer(1));

    KernelCertificate unverified = stated::i33();
    CHECK_THROWS_AS(lattice_membership(unverified), InvalidInput);
}

TEST_CASE("certificate vectors round-trip through coordinates") {
    KernelCertificate g = stated::i36();
    auto v = certificate_vector(g);
    KernelCertificate back = certificate_from_vector(g.bidegree, v, "user");
    CHECK(back.A == g.A);
    CHECK(back.B == g.B);
    CHECK_THROWS_AS(certificate_from_vector({3, 6}, std::vector<Integer>{1}, "user"), InvalidInput);
}

TEST_CASE("rendering") {
    KernelCertificate c = stated::make({2, 2}, C(2), -C(1, 0));
    CHECK(certificate_text(c) == "[1*[abb], a] = [-1*[aab], b]");
    CHECK(certificate_latex(c) == "\\left[[ab^{2}],\\ a\\right] = \\left[-[aab],\\ b\\right]");
}
