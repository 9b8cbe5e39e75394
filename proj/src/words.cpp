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

#include "twolie/words.hpp"

#include "twolie/integer.hpp"

namespace twolie {

std::string to_string(const Bidegree& d) {
    return "(" + std::to_string(d.k) + "," + std::to_string(d.l) + ")";
}

Word Word::parse(std::string_view text) {
    if (static_cast<int>(text.size()) > max_length) {
        throw InvalidInput("word longer than " + std::to_string(max_length) + " letters");
    }
    Word w;
    for (char c : text) {
        if (c != 'a' && c != 'b') {
            throw InvalidInput("word '" + std::string(text) + "' has a letter outside {a,b}");
        }
        w.bits_ = (w.bits_ << 1) | (c == 'b' ? 1U : 0U);
        ++w.size_;
    }
    return w;
}

Word Word::from_bits(std::uint64_t bits, int size) {
    if (size < 0 || size > max_length) throw InvalidInput("word length out of range");
    Word w;
    w.size_ = size;
    w.bits_ = size == 0 ? 0 : (bits & ((std::uint64_t{1} << size) - 1));
    return w;
}

Word Word::substr(int pos, int len) const {
    if (pos < 0 || len < 0 || pos + len > size_) throw InvalidInput("substring out of range");
    return from_bits(bits_ >> (size_ - pos - len), len);
}

Word Word::rotated(int r) const {
    if (size_ == 0) return *this;
    r %= size_;
    return suffix(r) + substr(0, r);
}

Word Word::operator+(const Word& rhs) const {
    if (size_ + rhs.size_ > max_length) throw InvalidInput("word too long");
    Word w;
    w.size_ = size_ + rhs.size_;
    w.bits_ = (bits_ << rhs.size_) | rhs.bits_;
    return w;
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(size_);
    for (int i = 0; i < size_; ++i) s.push_back(to_char((*this)[i]));
    return s;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    const int common = std::min(size_, o.size_);
    const std::uint64_t x = common == 0 ? 0 : bits_ >> (size_ - common);
    const std::uint64_t y = common == 0 ? 0 : o.bits_ >> (o.size_ - common);
    if (x != y) return x <=> y;
    return size_ <=> o.size_;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) throw InvalidInput("is_lyndon: empty word");
    for (int r = 1; r < w.size(); ++r) {
        if (!(w < w.rotated(r))) return false;
    }
    return true;
}

LyndonWord::LyndonWord(Word w) : word_(w) {
    if (!is_lyndon(word_)) throw InvalidInput("'" + word_.to_string() + "' is not a Lyndon word");
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w) {
    const Word& word = w.word();
    if (word.size() < 2) {
        throw InvalidInput("standard_factorization: '" + word.to_string() + "' is a single letter");
    }
    for (int i = 1; i < word.size(); ++i) {
        Word v = word.suffix(i);
        if (is_lyndon(v)) {
            return {LyndonWord(word.substr(0, i), LyndonWord::Trusted{}),
                    LyndonWord(v, LyndonWord::Trusted{})};
        }
    }
    throw ConsistencyError("Lyndon word without a Lyndon suffix");  // the last letter always is
}

std::vector<Word> all_words(int k, int l) {
    if (k < 0 || l < 0) throw InvalidInput("all_words: negative letter count");
    const int n = k + l;
    if (n > Word::max_length) throw InvalidInput("all_words: weight too large");
    std::vector<Word> out;
    if (l == 0) {
        out.push_back(Word::from_bits(0, n));
        return out;
    }
    // Gosper's hack walks the l-subsets of n bits in increasing numeric order.
    std::uint64_t x = (std::uint64_t{1} << l) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (x < limit) {
        out.push_back(Word::from_bits(x, n));
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    return out;
}

std::vector<LyndonWord> lyndon_words(int k, int l) {
    if (k < 0 || l < 0) throw InvalidInput("lyndon_words: negative letter count");
    if (k == 0 && l == 0) throw InvalidInput("lyndon_words: bidegree (0,0)");
    std::vector<LyndonWord> out;
    for (const Word& w : all_words(k, l)) {
        if (is_lyndon(w)) out.push_back(LyndonWord(w, LyndonWord::Trusted{}));
    }
    return out;
}

BracketTree BracketTree::leaf(Letter x) {
    auto n = std::make_shared<Node>();
    n->is_leaf = true;
    n->letter = x;
    n->bidegree = x == Letter::a ? Bidegree{1, 0} : Bidegree{0, 1};
    return BracketTree(std::move(n));
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
    auto n = std::make_shared<Node>();
    n->is_leaf = false;
    n->bidegree = left.bidegree() + right.bidegree();
    n->children = std::make_unique<std::pair<BracketTree, BracketTree>>(std::move(left), std::move(right));
    return BracketTree(std::move(n));
}

std::string BracketTree::to_string() const {
    if (is_leaf()) return std::string(1, to_char(letter()));
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

bool operator==(const BracketTree& x, const BracketTree& y) {
    if (x.node_ == y.node_) return true;
    if (x.is_leaf() || y.is_leaf()) return x.is_leaf() == y.is_leaf() && x.is_leaf() && x.letter() == y.letter();
    return x.left() == y.left() && x.right() == y.right();
}

BracketTree lyndon_bracket(const LyndonWord& w) {
    if (w.size() == 1) return BracketTree::leaf(w.word()[0]);
    auto [u, v] = standard_factorization(w);
    return BracketTree::node(lyndon_bracket(u), lyndon_bracket(v));
}

}  // namespace twolie
