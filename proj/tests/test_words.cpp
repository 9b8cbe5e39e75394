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

#include <string>

#include "oracles.hpp"
#include "twolie/dims.hpp"
#include "twolie/words.hpp"

using namespace twolie;

namespace {

std::string b_run(int n) { return std::string(static_cast<std::size_t>(n), 'b'); }

std::vector<std::string> strings(const std::vector<LyndonWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.to_string());
    return out;
}

}  // namespace

TEST_CASE("is_lyndon examples") {
    CHECK(is_lyndon(Word::parse("ab")));
    CHECK_FALSE(is_lyndon(Word::parse("abab")));
    CHECK(oracle::lyndon_by_rotation("aabab"));
    CHECK(is_lyndon(Word::parse("aabab")));
    CHECK(is_lyndon(Word::parse("a")));
    CHECK_FALSE(is_lyndon(Word::parse("ba")));
    CHECK_FALSE(is_lyndon(Word::parse("aa")));
    CHECK_THROWS_AS(is_lyndon(Word()), InvalidInput);
}

TEST_CASE("is_lyndon agrees with rotation brute force up to length 10") {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& s : oracle::words_of_length(n)) {
            CHECK_MESSAGE(is_lyndon(Word::parse(s)) == oracle::lyndon_by_rotation(s), s);
        }
    }
}

TEST_CASE("word ordering is lexicographic with prefixes first") {
    CHECK(Word::parse("a") < Word::parse("ab"));
    CHECK(Word::parse("ab") < Word::parse("b"));
    CHECK(Word::parse("aabb") < Word::parse("abab"));
    CHECK(Word::parse("abba").to_string() == "abba");
    CHECK(Word::parse("aab").rotated(1).to_string() == "aba");
    CHECK(Word::parse("aabbb").bidegree() == Bidegree{2, 3});
    CHECK_THROWS_AS(Word::parse("abc"), InvalidInput);
    CHECK_THROWS_AS(LyndonWord::parse("ba"), InvalidInput);
}

TEST_CASE("standard factorization") {
    auto [u, v] = standard_factorization(LyndonWord::parse("ab"));
    CHECK(u.to_string() == "a");
    CHECK(v.to_string() == "b");

    for (int n = 1; n <= 10; ++n) {
        auto [x, y] = standard_factorization(LyndonWord::parse("a" + b_run(n)));
        CHECK(x.to_string() == "a" + b_run(n - 1));
        CHECK(y.to_string() == "b");
    }

    // longest proper Lyndon suffix of aabb, by enumeration: abb (bb, b? bb is not Lyndon)
    std::string longest;
    const std::string w = "aabb";
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (oracle::lyndon_by_rotation(w.substr(i))) {
            longest = w.substr(i);
            break;
        }
    }
    CHECK(longest == "abb");
    auto [p, q] = standard_factorization(LyndonWord::parse("aabb"));
    CHECK(p.to_string() == "a");
    CHECK(q.to_string() == longest);

    CHECK_THROWS_AS(standard_factorization(LyndonWord::parse("a")), InvalidInput);
}

TEST_CASE("standard factorization recomposes into Lyndon halves") {
    for (int n = 2; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (k == 0 || k == n) continue;
            for (const auto& w : lyndon_words(k, n - k)) {
                auto [u, v] = standard_factorization(w);
                CHECK(u.word() + v.word() == w.word());
                CHECK(u < v);
                CHECK(oracle::lyndon_by_rotation(u.to_string()));
                CHECK(oracle::lyndon_by_rotation(v.to_string()));
            }
        }
    }
}

TEST_CASE("lyndon_bracket") {
    CHECK(lyndon_bracket(LyndonWord::parse("a")).to_string() == "a");
    CHECK(lyndon_bracket(LyndonWord::parse("abb")).to_string() == "[[a,b],b]");
    CHECK(lyndon_bracket(LyndonWord::parse("aabb")).to_string() == "[a,[[a,b],b]]");
    CHECK(lyndon_bracket(LyndonWord::parse("aabbb")).bidegree() == Bidegree{2, 3});
}

TEST_CASE("lyndon_words examples") {
    for (int m = 0; m <= 8; ++m) {
        auto ws = lyndon_words(1, m);
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].to_string() == "a" + b_run(m));
    }
    CHECK(strings(lyndon_words(2, 3)) == std::vector<std::string>{"aabbb", "ababb"});
    CHECK(strings(lyndon_words(3, 3)) == std::vector<std::string>{"aaabbb", "aababb", "aabbab"});
    CHECK(lyndon_words(2, 0).empty());
    CHECK(strings(lyndon_words(0, 1)) == std::vector<std::string>{"b"});
    CHECK_THROWS_AS(lyndon_words(0, 0), InvalidInput);
    CHECK_THROWS_AS(lyndon_words(-1, 2), InvalidInput);
}

TEST_CASE("lyndon_words are sorted and counted by the Witt formula") {
    for (int n = 1; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) {
            auto ws = lyndon_words(k, n - k);
            CHECK(static_cast<std::int64_t>(ws.size()) == dim_L_bigraded(k, n - k));
            CHECK(std::is_sorted(ws.begin(), ws.end()));
            if (n <= 12) CHECK(static_cast<int>(ws.size()) == oracle::count_lyndon(k, n - k));
        }
    }
}

TEST_CASE("ab^i ab^j ab^t is Lyndon iff i <= j and i < t") {
    for (int i = 0; i <= 12; ++i) {
        for (int j = 0; i + j <= 12; ++j) {
            for (int t = 0; i + j + t <= 12; ++t) {
                std::string s = "a" + b_run(i) + "a" + b_run(j) + "a" + b_run(t);
                CHECK_MESSAGE(is_lyndon(Word::parse(s)) == (i <= j && i < t), s);
            }
        }
    }
}
