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

// Free Lie ring L(a,b) over the integers: bracket expressions, the free
// associative ring used as an oracle, and normalization onto the
// Lyndon-Shirshov basis.
//
// Bracket convention: [x,y] = xy - yx in the associative ring.

#ifndef TWOLIE_ALGEBRA_HPP
#define TWOLIE_ALGEBRA_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twolie/integer.hpp"
#include "twolie/words.hpp"

namespace twolie {

/// Integer combination of words; no zero coefficients are stored.
class AssocPoly {
 public:
    using Terms = std::map<Word, Integer>;

    AssocPoly() = default;
    static AssocPoly monomial(const Word& w, const Integer& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Word& w) const;
    void add(const Word& w, const Integer& c);

    AssocPoly& operator+=(const AssocPoly& o);
    AssocPoly& operator-=(const AssocPoly& o);
    AssocPoly& operator*=(const Integer& c);
    friend AssocPoly operator+(AssocPoly x, const AssocPoly& y) { return x += y; }
    friend AssocPoly operator-(AssocPoly x, const AssocPoly& y) { return x -= y; }
    friend AssocPoly operator*(const Integer& c, AssocPoly x) { return x *= c; }
    /// Concatenation product.
    friend AssocPoly operator*(const AssocPoly& x, const AssocPoly& y);
    friend bool operator==(const AssocPoly&, const AssocPoly&) = default;

    /// e.g. "abb - 2*bab + bba"; "0" for the zero polynomial.
    std::string to_string() const;

 private:
    Terms terms_;
};

/// xy - yx.
AssocPoly commutator(const AssocPoly& x, const AssocPoly& y);

/// Integer combination of bracket trees. Terms are kept as written (no
/// collection), except that zero coefficients are dropped.
class BracketExpr {
 public:
    struct Term {
        Integer coeff;
        BracketTree tree;
    };

    BracketExpr() = default;
    BracketExpr(BracketTree tree, Integer coeff = 1);  // NOLINT: a tree is an expression
    static BracketExpr letter(Letter x) { return BracketExpr(BracketTree::leaf(x)); }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Common bidegree of all terms; nullopt for the empty combination.
    /// Throws BidegreeMismatch when terms disagree.
    std::optional<Bidegree> bidegree() const;

    BracketExpr& operator+=(const BracketExpr& o);
    BracketExpr& operator-=(const BracketExpr& o);
    BracketExpr& operator*=(const Integer& c);
    friend BracketExpr operator+(BracketExpr x, const BracketExpr& y) { return x += y; }
    friend BracketExpr operator-(BracketExpr x, const BracketExpr& y) { return x -= y; }
    friend BracketExpr operator*(const Integer& c, BracketExpr x) { return x *= c; }
    friend BracketExpr operator-(BracketExpr x) { return x *= -1; }

    /// Text in the parser grammar, e.g. "3*[a,b] + -1*[b,a]".
    std::string to_string() const;

 private:
    std::vector<Term> terms_;
};

/// Bilinear bracket of expressions: sum of c*d*[t,u] over all term pairs.
BracketExpr bracket(const BracketExpr& x, const BracketExpr& y);

/// [x_1, ..., x_n] = [[x_1, ..., x_{n-1}], x_n]. Throws InvalidInput when empty.
BracketExpr left_normed(std::span<const BracketExpr> xs);
BracketExpr left_normed(std::initializer_list<BracketExpr> xs);

/// Engel bracket C_n = [a, b, ..., b] with n copies of b.
BracketTree engel_tree(int n);
inline BracketExpr engel_expr(int n) { return BracketExpr(engel_tree(n)); }

/// Parses the expression grammar
///   expr := term (('+' | '-') term)*
///   term := [integer '*'] atom | '-' atom
///   atom := 'a' | 'b' | 'C' digits | '[' expr (',' expr)+ ']' | '(' expr ')'
/// where [e1,...,en] is left-normed and C<n> is the Engel bracket C_n.
/// Throws InvalidInput with the offending position on malformed text.
BracketExpr parse_bracket_expr(std::string_view text);

AssocPoly assoc_expand(const BracketTree& t);
AssocPoly assoc_expand(const BracketExpr& e);

/// Element of L_{k,l} in Lyndon-Shirshov coordinates. A default-constructed
/// element is the untyped zero, which combines with any bidegree; a zero
/// produced by arithmetic keeps its bidegree.
class LieElement {
 public:
    /// Keys are Lyndon words of the element's bidegree.
    using Terms = std::map<Word, Integer>;

    LieElement() = default;
    explicit LieElement(Bidegree d) : bidegree_(d) {}
    static LieElement basis(const LyndonWord& w, const Integer& c = 1);
    /// Element with the given coordinates against lyndon_words(d.k, d.l).
    static LieElement from_coordinates(Bidegree d, std::span<const Integer> coords);

    std::optional<Bidegree> bidegree() const { return bidegree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const LyndonWord& w) const;

    /// Throws BidegreeMismatch when w's bidegree differs from this element's.
    void add_term(const LyndonWord& w, const Integer& c);

    /// Coordinates against lyndon_words(k, l) of the element's bidegree.
    /// Throws InvalidInput for the untyped zero.
    std::vector<Integer> coordinates() const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Integer& c);
    friend LieElement operator+(LieElement x, const LieElement& y) { return x += y; }
    friend LieElement operator-(LieElement x, const LieElement& y) { return x -= y; }
    friend LieElement operator*(const Integer& c, LieElement x) { return x *= c; }
    friend LieElement operator-(LieElement x) { return x *= -1; }
    /// Compares coefficients only, so every zero equals every other zero.
    friend bool operator==(const LieElement& x, const LieElement& y) { return x.terms_ == y.terms_; }

    /// Sum of c * lyndon_bracket(w).
    BracketExpr to_bracket_expr() const;
    AssocPoly to_assoc() const;

    /// e.g. "-1*[aabb] + 2*[abab]"; "0" when zero.
    std::string to_string() const;

 private:
    void unify_bidegree(const std::optional<Bidegree>& d);

    std::optional<Bidegree> bidegree_;
    Terms terms_;
};

/// Unique Lyndon-Shirshov representation of a homogeneous expression, by
/// expanding into the associative ring and back-substituting against the
/// unitriangular expansions of the basis brackets.
/// Throws BidegreeMismatch for inhomogeneous input and ConsistencyError if a
/// nonzero residual remains.
LieElement normalize(const BracketExpr& e);
LieElement normalize(const BracketTree& t);

/// Back-substitution on an associative polynomial that must be a Lie element
/// of bidegree d (or zero). Throws ConsistencyError otherwise.
LieElement lie_from_assoc(const AssocPoly& p, Bidegree d);

/// [x, y], normalized; bidegrees add.
LieElement bracket(const LieElement& x, const LieElement& y);

/// C_n in basis coordinates; equals 1*[ab^n].
LieElement engel(int n);

/// Letters as Lie elements.
LieElement lie_letter(Letter x);

}  // namespace twolie

#endif  // TWOLIE_ALGEBRA_HPP
