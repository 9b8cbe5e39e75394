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

// Words over the two-letter alphabet {a < b}, Lyndon words and the
// Lyndon-Shirshov bracketing.

#ifndef TWOLIE_WORDS_HPP
#define TWOLIE_WORDS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twolie {

enum class Letter : std::uint8_t { a = 0, b = 1 };

inline char to_char(Letter x) { return x == Letter::a ? 'a' : 'b'; }

/// (number of a's, number of b's).
struct Bidegree {
    int k = 0;
    int l = 0;

    int weight() const { return k + l; }
    bool operator==(const Bidegree&) const = default;
    auto operator<=>(const Bidegree&) const = default;
    Bidegree operator+(const Bidegree& o) const { return {k + o.k, l + o.l}; }
};

std::string to_string(const Bidegree& d);

/// A word of length at most Word::max_length. Letter i is stored at bit
/// (size - 1 - i), so for equal lengths numeric order is lexicographic order.
class Word {
 public:
    static constexpr int max_length = 63;

    Word() = default;
    explicit Word(Letter x) : bits_(static_cast<std::uint64_t>(x)), size_(1) {}

    /// Parses a string over {a, b}. Throws InvalidInput on other characters.
    static Word parse(std::string_view text);
    static Word from_bits(std::uint64_t bits, int size);

    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::uint64_t bits() const { return bits_; }
    Letter operator[](int i) const {
        return static_cast<Letter>((bits_ >> (size_ - 1 - i)) & 1U);
    }
    int count_b() const { return __builtin_popcountll(bits_); }
    int count_a() const { return size_ - count_b(); }
    Bidegree bidegree() const { return {count_a(), count_b()}; }

    /// Letters [pos, pos + len).
    Word substr(int pos, int len) const;
    Word suffix(int pos) const { return substr(pos, size_ - pos); }
    /// Left rotation by r positions.
    Word rotated(int r) const;

    Word operator+(const Word& rhs) const;

    std::string to_string() const;

    bool operator==(const Word& o) const = default;
    /// Lexicographic order with a < b; a proper prefix precedes its extensions.
    std::strong_ordering operator<=>(const Word& o) const;

 private:
    std::uint64_t bits_ = 0;
    int size_ = 0;
};

/// True iff w is strictly smaller than each of its proper rotations.
/// Throws InvalidInput on the empty word.
bool is_lyndon(const Word& w);

/// A word known to be Lyndon.
class LyndonWord {
 public:
    /// Throws InvalidInput if w is not Lyndon.
    explicit LyndonWord(Word w);
    static LyndonWord parse(std::string_view text) { return LyndonWord(Word::parse(text)); }

    const Word& word() const { return word_; }
    int size() const { return word_.size(); }
    Bidegree bidegree() const { return word_.bidegree(); }
    std::string to_string() const { return word_.to_string(); }

    bool operator==(const LyndonWord&) const = default;
    std::strong_ordering operator<=>(const LyndonWord& o) const { return word_ <=> o.word_; }

 private:
    struct Trusted {};
    LyndonWord(Word w, Trusted) : word_(w) {}
    friend std::vector<LyndonWord> lyndon_words(int, int);
    friend std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord&);

    Word word_;
};

/// w = u v with v the longest proper suffix of w that is Lyndon.
/// Throws InvalidInput for single letters.
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w);

/// All Lyndon words with k a's and l b's in lexicographic order; this is the
/// canonical basis order of L_{k,l}. Throws InvalidInput for (0,0) or
/// negative arguments.
std::vector<LyndonWord> lyndon_words(int k, int l);

/// All words with k a's and l b's in lexicographic order.
std::vector<Word> all_words(int k, int l);

/// Immutable binary bracket tree over {a, b}. Cheap to copy (shared nodes).
class BracketTree {
 public:
    static BracketTree leaf(Letter x);
    static BracketTree node(BracketTree left, BracketTree right);

    bool is_leaf() const { return node_->is_leaf; }
    Letter letter() const { return node_->letter; }
    const BracketTree& left() const { return node_->children->first; }
    const BracketTree& right() const { return node_->children->second; }

    int weight() const { return node_->bidegree.weight(); }
    Bidegree bidegree() const { return node_->bidegree; }

    /// Fully bracketed form, e.g. "[[a,b],b]".
    std::string to_string() const;

    friend bool operator==(const BracketTree& x, const BracketTree& y);

 private:
    struct Node {
        bool is_leaf = true;
        Letter letter = Letter::a;
        Bidegree bidegree;
        std::unique_ptr<std::pair<BracketTree, BracketTree>> children;
    };
    explicit BracketTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

/// [w]: a letter for single letters, otherwise [[u],[v]] with (u, v) the
/// standard factorization.
BracketTree lyndon_bracket(const LyndonWord& w);

}  // namespace twolie

#endif  // TWOLIE_WORDS_HPP
