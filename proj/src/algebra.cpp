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

#include "twolie/algebra.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace twolie {

// ---------------------------------------------------------------------------
// AssocPoly

AssocPoly AssocPoly::monomial(const Word& w, const Integer& c) {
    AssocPoly p;
    p.add(w, c);
    return p;
}

Integer AssocPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
}

void AssocPoly::add(const Word& w, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

AssocPoly& AssocPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

AssocPoly operator*(const AssocPoly& x, const AssocPoly& y) {
    AssocPoly out;
    Integer prod;
    for (const auto& [u, c] : x.terms_) {
        for (const auto& [v, d] : y.terms_) {
            prod = c * d;
            out.add(u + v, prod);
        }
    }
    return out;
}

std::string AssocPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (mag != 1) s += mag.get_str() + "*";
        s += w.to_string();
        first = false;
    }
    return s;
}

AssocPoly commutator(const AssocPoly& x, const AssocPoly& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// BracketExpr

BracketExpr::BracketExpr(BracketTree tree, Integer coeff) {
    if (coeff != 0) terms_.push_back({std::move(coeff), std::move(tree)});
}

std::optional<Bidegree> BracketExpr::bidegree() const {
    std::optional<Bidegree> d;
    for (const auto& t : terms_) {
        if (!d) {
            d = t.tree.bidegree();
        } else if (*d != t.tree.bidegree()) {
            throw BidegreeMismatch("expression mixes bidegrees " + twolie::to_string(*d) + " and " +
                                   twolie::to_string(t.tree.bidegree()));
        }
    }
    return d;
}

BracketExpr& BracketExpr::operator+=(const BracketExpr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

BracketExpr& BracketExpr::operator-=(const BracketExpr& o) {
    for (const auto& t : o.terms_) terms_.push_back({-t.coeff, t.tree});
    return *this;
}

BracketExpr& BracketExpr::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

std::string BracketExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) s += " + ";
        if (terms_[i].coeff != 1) s += terms_[i].coeff.get_str() + "*";
        s += terms_[i].tree.to_string();
    }
    return s;
}

BracketExpr bracket(const BracketExpr& x, const BracketExpr& y) {
    BracketExpr out;
    for (const auto& s : x.terms()) {
        for (const auto& t : y.terms()) {
            out += BracketExpr(BracketTree::node(s.tree, t.tree), s.coeff * t.coeff);
        }
    }
    return out;
}

BracketExpr left_normed(std::span<const BracketExpr> xs) {
    if (xs.empty()) throw InvalidInput("left_normed: empty sequence");
    BracketExpr acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = bracket(acc, xs[i]);
    return acc;
}

BracketExpr left_normed(std::initializer_list<BracketExpr> xs) {
    return left_normed(std::span<const BracketExpr>(xs.begin(), xs.size()));
}

BracketTree engel_tree(int n) {
    if (n < 0) throw InvalidInput("engel: negative index");
    BracketTree t = BracketTree::leaf(Letter::a);
    const BracketTree b = BracketTree::leaf(Letter::b);
    for (int i = 0; i < n; ++i) t = BracketTree::node(t, b);
    return t;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ExprParser {
 public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    BracketExpr parse() {
        BracketExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

 private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("bracket expression: " + what + " at position " + std::to_string(pos_) +
                           " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    BracketExpr expr() {
        BracketExpr acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    BracketExpr term() {
        char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            BracketExpr t = term();
            return c == '-' ? -t : t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer k = parse_integer(digits());
            expect('*');
            return k * atom();
        }
        return atom();
    }

    BracketExpr atom() {
        char c = peek();
        switch (c) {
            case 'a':
                ++pos_;
                return BracketExpr::letter(Letter::a);
            case 'b':
                ++pos_;
                return BracketExpr::letter(Letter::b);
            case 'C': {
                ++pos_;
                std::string d = digits();
                if (d.size() > 2) fail("Engel index too large");
                return engel_expr(std::stoi(d));
            }
            case '(': {
                ++pos_;
                BracketExpr e = expr();
                expect(')');
                return e;
            }
            case '[': {
                ++pos_;
                std::vector<BracketExpr> items{expr()};
                while (peek() == ',') {
                    ++pos_;
                    items.push_back(expr());
                }
                expect(']');
                if (items.size() < 2) fail("a bracket needs at least two entries");
                return left_normed(items);
            }
            default:
                fail("expected a, b, C<n>, '[' or '('");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BracketExpr parse_bracket_expr(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Associative expansion

AssocPoly assoc_expand(const BracketTree& t) {
    if (t.is_leaf()) return AssocPoly::monomial(Word(t.letter()));
    return commutator(assoc_expand(t.left()), assoc_expand(t.right()));
}

AssocPoly assoc_expand(const BracketExpr& e) {
    AssocPoly out;
    for (const auto& t : e.terms()) out += t.coeff * assoc_expand(t.tree);
    return out;
}

// ---------------------------------------------------------------------------
// Basis tables: words of one bidegree indexed by lexicographic rank, with the
// associative expansions of the basis brackets built on first use.

namespace {

std::uint64_t choose(int n, int k) {
    static const auto table = [] {
        std::vector<std::vector<std::uint64_t>> t(Word::max_length + 1);
        for (int i = 0; i <= Word::max_length; ++i) {
            t[i].assign(i + 1, 1);
            for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    return (k < 0 || k > n) ? 0 : table[n][k];
}

struct BasisTable {
    Bidegree bidegree;
    std::vector<Word> words;
    std::vector<int> lyndon_slot;  // -1 unless words[i] is Lyndon
    std::vector<LyndonWord> lyndon;
    std::vector<std::uint32_t> lyndon_index;

    using Expansion = std::vector<std::pair<std::uint32_t, Integer>>;
    mutable std::unique_ptr<std::once_flag[]> once;
    mutable std::vector<Expansion> expansions;

    std::uint32_t rank(const Word& w) const {
        // Count words of this bidegree that precede w lexicographically.
        std::uint64_t r = 0;
        int ka = bidegree.k;
        int kb = bidegree.l;
        for (int i = 0; i < w.size(); ++i) {
            if (w[i] == Letter::b) {
                if (ka > 0) r += choose(ka - 1 + kb, kb);
                --kb;
            } else {
                --ka;
            }
        }
        return static_cast<std::uint32_t>(r);
    }

    const Expansion& expansion(int slot) const {
        std::call_once(once[slot], [&] {
            AssocPoly p = assoc_expand(lyndon_bracket(lyndon[slot]));
            Expansion e;
            e.reserve(p.terms().size());
            for (const auto& [w, c] : p.terms()) e.emplace_back(rank(w), c);
            expansions[slot] = std::move(e);
        });
        return expansions[slot];
    }
};

std::shared_ptr<const BasisTable> basis_table(Bidegree d) {
    static std::mutex mutex;
    static std::map<Bidegree, std::shared_ptr<const BasisTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    auto t = std::make_shared<BasisTable>();
    t->bidegree = d;
    t->words = all_words(d.k, d.l);
    t->lyndon_slot.assign(t->words.size(), -1);
    for (std::size_t i = 0; i < t->words.size(); ++i) {
        if (is_lyndon(t->words[i])) {
            t->lyndon_slot[i] = static_cast<int>(t->lyndon.size());
            t->lyndon.emplace_back(t->words[i]);
            t->lyndon_index.push_back(static_cast<std::uint32_t>(i));
        }
    }
    t->once = std::make_unique<std::once_flag[]>(t->lyndon.size());
    t->expansions.resize(t->lyndon.size());
    cache.emplace(d, t);
    return t;
}

}  // namespace

LieElement lie_from_assoc(const AssocPoly& p, Bidegree d) {
    LieElement out(d);
    if (p.is_zero()) return out;
    if (d.k < 0 || d.l < 0 || (d.k == 0 && d.l == 0)) throw InvalidInput("invalid bidegree " + to_string(d));
    auto table = basis_table(d);
    std::vector<Integer> dense(table->words.size());
    for (const auto& [w, c] : p.terms()) {
        if (w.bidegree() != d) {
            throw BidegreeMismatch("word " + w.to_string() + " does not have bidegree " + to_string(d));
        }
        dense[table->rank(w)] += c;
    }
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] == 0) continue;
        const int slot = table->lyndon_slot[i];
        if (slot < 0) {
            throw ConsistencyError("normalization residual: word " + table->words[i].to_string() +
                                   " has coefficient " + dense[i].get_str() + " and is not Lyndon");
        }
        const Integer c = dense[i];
        out.add_term(table->lyndon[slot], c);
        for (const auto& [j, e] : table->expansion(slot)) {
            mpz_submul(dense[j].get_mpz_t(), c.get_mpz_t(), e.get_mpz_t());
        }
        if (dense[i] != 0) throw ConsistencyError("basis expansion is not unitriangular");
    }
    return out;
}

LieElement normalize(const BracketExpr& e) {
    auto d = e.bidegree();
    if (!d) return LieElement();
    return lie_from_assoc(assoc_expand(e), *d);
}

LieElement normalize(const BracketTree& t) { return normalize(BracketExpr(t)); }

// ---------------------------------------------------------------------------
// LieElement

LieElement LieElement::basis(const LyndonWord& w, const Integer& c) {
    LieElement x(w.bidegree());
    x.add_term(w, c);
    return x;
}

LieElement LieElement::from_coordinates(Bidegree d, std::span<const Integer> coords) {
    auto basis = lyndon_words(d.k, d.l);
    if (basis.size() != coords.size()) {
        throw InvalidInput("expected " + std::to_string(basis.size()) + " coordinates for L" + twolie::to_string(d));
    }
    LieElement x(d);
    for (std::size_t i = 0; i < basis.size(); ++i) x.add_term(basis[i], coords[i]);
    return x;
}

Integer LieElement::coefficient(const LyndonWord& w) const {
    auto it = terms_.find(w.word());
    return it == terms_.end() ? Integer(0) : it->second;
}

void LieElement::unify_bidegree(const std::optional<Bidegree>& d) {
    if (!d) return;
    if (!bidegree_) {
        bidegree_ = d;
    } else if (*bidegree_ != *d) {
        throw BidegreeMismatch("cannot combine elements of L" + twolie::to_string(*bidegree_) + " and L" + twolie::to_string(*d));
    }
}

void LieElement::add_term(const LyndonWord& w, const Integer& c) {
    unify_bidegree(w.bidegree());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w.word(), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<Integer> LieElement::coordinates() const {
    if (!bidegree_) throw InvalidInput("coordinates of an untyped zero");
    auto basis = lyndon_words(bidegree_->k, bidegree_->l);
    std::vector<Integer> out;
    out.reserve(basis.size());
    for (const auto& w : basis) out.push_back(coefficient(w));
    return out;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    unify_bidegree(o.bidegree_);
    for (const auto& [w, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) { return *this += -o; }

LieElement& LieElement::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

BracketExpr LieElement::to_bracket_expr() const {
    BracketExpr e;
    for (const auto& [w, c] : terms_) e += BracketExpr(lyndon_bracket(LyndonWord(w)), c);
    return e;
}

AssocPoly LieElement::to_assoc() const {
    AssocPoly p;
    if (terms_.empty()) return p;
    auto table = basis_table(*bidegree_);
    for (const auto& [w, c] : terms_) {
        const int slot = table->lyndon_slot[table->rank(w)];
        for (const auto& [j, e] : table->expansion(slot)) p.add(table->words[j], c * e);
    }
    return p;
}

std::string LieElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        s += c.get_str() + "*[" + w.to_string() + "]";
        first = false;
    }
    return s;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.is_zero() || y.is_zero()) {
        if (x.bidegree() && y.bidegree()) return LieElement(*x.bidegree() + *y.bidegree());
        return LieElement();
    }
    const Bidegree d = *x.bidegree() + *y.bidegree();
    return lie_from_assoc(commutator(x.to_assoc(), y.to_assoc()), d);
}

LieElement lie_letter(Letter x) { return LieElement::basis(LyndonWord(Word(x))); }

LieElement engel(int n) {
    if (n < 0) throw InvalidInput("engel: negative index");
    Word w(Letter::a);
    for (int i = 0; i < n; ++i) w = w + Word(Letter::b);
    return LieElement::basis(LyndonWord(w));
}

}  // namespace twolie
