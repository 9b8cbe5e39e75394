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

#include "twolie/theta.hpp"

#include <numeric>

namespace twolie {

namespace {

std::vector<LyndonWord> basis_or_empty(int k, int l) {
    if (k < 0 || l < 0 || (k == 0 && l == 0)) return {};
    return lyndon_words(k, l);
}

ThetaMatrix theta_skeleton(int k, int l) {
    if (k < 0 || l < 0) throw InvalidInput("theta_matrix: negative bidegree");
    if (k == 0 && l == 0) throw InvalidInput("theta_matrix: bidegree (0,0)");
    ThetaMatrix t;
    t.bidegree = {k, l};
    t.a_block = basis_or_empty(k - 1, l);
    t.b_block = basis_or_empty(k, l - 1);
    t.codomain = basis_or_empty(k, l);
    t.matrix = IntMatrix(t.codomain.size(), t.domain_size());
    return t;
}

void fill_column(ThetaMatrix& t, std::size_t j) {
    const bool in_a = j < t.a_block.size();
    const LyndonWord& w = in_a ? t.a_block[j] : t.b_block[j - t.a_block.size()];
    const LieElement image = bracket(LieElement::basis(w), lie_letter(in_a ? Letter::a : Letter::b));
    for (std::size_t i = 0; i < t.codomain.size(); ++i) t.matrix(i, j) = image.coefficient(t.codomain[i]);
}

}  // namespace

ThetaMatrix theta_matrix_serial(int k, int l) {
    ThetaMatrix t = theta_skeleton(k, l);
    for (std::size_t j = 0; j < t.domain_size(); ++j) fill_column(t, j);
    return t;
}

ThetaMatrix theta_matrix(int k, int l) {
    ThetaMatrix t = theta_skeleton(k, l);
    const auto n = static_cast<std::int64_t>(t.domain_size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t j = 0; j < n; ++j) fill_column(t, static_cast<std::size_t>(j));
    return t;
}

namespace {

void check_bidegrees(const KernelCertificate& c) {
    const Bidegree d = c.bidegree;
    if (d.k < 0 || d.l < 0 || (d.k == 0 && d.l == 0)) throw InvalidInput("certificate has invalid bidegree");
    if (!c.A.is_zero() && *c.A.bidegree() != Bidegree{d.k - 1, d.l}) {
        throw BidegreeMismatch("A must lie in L" + to_string(Bidegree{d.k - 1, d.l}) + ", got L" +
                               to_string(*c.A.bidegree()));
    }
    if (!c.B.is_zero() && *c.B.bidegree() != Bidegree{d.k, d.l - 1}) {
        throw BidegreeMismatch("B must lie in L" + to_string(Bidegree{d.k, d.l - 1}) + ", got L" +
                               to_string(*c.B.bidegree()));
    }
}

}  // namespace

LieElement theta_image(const KernelCertificate& c) {
    check_bidegrees(c);
    const Bidegree d = c.bidegree;
    LieElement out(d);
    out += bracket(c.A, lie_letter(Letter::a));
    out += bracket(c.B, lie_letter(Letter::b));
    return out;
}

bool verify_certificate(KernelCertificate& c) {
    c.verified = theta_image(c).is_zero();
    return c.verified;
}

std::vector<Integer> certificate_vector(const KernelCertificate& c) {
    check_bidegrees(c);
    const Bidegree d = c.bidegree;
    std::vector<Integer> v;
    for (const auto& w : basis_or_empty(d.k - 1, d.l)) v.push_back(c.A.coefficient(w));
    for (const auto& w : basis_or_empty(d.k, d.l - 1)) v.push_back(c.B.coefficient(w));
    return v;
}

KernelCertificate certificate_from_vector(Bidegree d, std::span<const Integer> v, std::string source) {
    const auto a_basis = basis_or_empty(d.k - 1, d.l);
    const auto b_basis = basis_or_empty(d.k, d.l - 1);
    if (v.size() != a_basis.size() + b_basis.size()) throw InvalidInput("certificate vector has wrong length");
    KernelCertificate c;
    c.bidegree = d;
    if (!a_basis.empty()) c.A = LieElement(Bidegree{d.k - 1, d.l});
    if (!b_basis.empty()) c.B = LieElement(Bidegree{d.k, d.l - 1});
    for (std::size_t i = 0; i < a_basis.size(); ++i) c.A.add_term(a_basis[i], v[i]);
    for (std::size_t i = 0; i < b_basis.size(); ++i) c.B.add_term(b_basis[i], v[a_basis.size() + i]);
    c.source = std::move(source);
    return c;
}

KernelLattice kernel_lattice(const ThetaMatrix& theta) { return kernel(theta.matrix); }

KernelLattice kernel_lattice(int k, int l) { return kernel_lattice(theta_matrix(k, l)); }

std::vector<KernelCertificate> kernel_certificates(int k, int l) {
    const KernelLattice lattice = kernel_lattice(k, l);
    std::vector<KernelCertificate> out;
    for (std::size_t i = 0; i < lattice.rank(); ++i) {
        KernelCertificate c = certificate_from_vector({k, l}, lattice.basis.row(i), "computed");
        if (!verify_certificate(c)) throw ConsistencyError("computed kernel vector fails to verify");
        out.push_back(std::move(c));
    }
    return out;
}

KernelLattice certificate_lattice(Bidegree d, const std::vector<KernelCertificate>& certs) {
    const std::size_t ambient = basis_or_empty(d.k - 1, d.l).size() + basis_or_empty(d.k, d.l - 1).size();
    IntMatrix rows(certs.size(), ambient);
    for (std::size_t i = 0; i < certs.size(); ++i) {
        if (certs[i].bidegree != d) throw BidegreeMismatch("certificates of different bidegrees");
        auto v = certificate_vector(certs[i]);
        for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = v[j];
    }
    KernelLattice x = lattice_from_generators(rows);
    x.ambient = ambient;
    return x;
}

bool SurjectivityReport::surjective() const {
    if (rank != codomain_dim) return false;
    for (const auto& f : invariant_factors) {
        if (f != 1) return false;
    }
    return true;
}

SurjectivityReport check_surjective(int k, int l) {
    if (k + l < 2) throw InvalidInput("check_surjective: need k + l >= 2");
    const ThetaMatrix t = theta_matrix(k, l);
    SurjectivityReport r;
    r.bidegree = {k, l};
    r.codomain_dim = t.codomain.size();
    r.invariant_factors = smith_invariants(t.matrix);
    r.rank = r.invariant_factors.size();
    return r;
}

MembershipReport lattice_membership(const KernelCertificate& c) {
    if (!c.verified) throw InvalidInput("lattice_membership: certificate is not verified");
    const KernelLattice lattice = kernel_lattice(c.bidegree.k, c.bidegree.l);
    MembershipReport r;
    r.kernel_rank = lattice.rank();
    auto coords = lattice_coordinates(lattice, certificate_vector(c));
    if (!coords) return r;
    r.member = true;
    r.coordinates = *coords;
    Integer g = 0;
    for (const auto& x : r.coordinates) g = gcd(g, x);
    r.primitive = g == 1;
    if (r.kernel_rank == 1) r.index = abs(r.coordinates[0]);
    return r;
}

namespace {

// Word with runs of b compressed: aabbb -> aab^{3}.
std::string latex_word(const Word& w) {
    std::string s;
    int i = 0;
    while (i < w.size()) {
        if (w[i] == Letter::a) {
            s += 'a';
            ++i;
            continue;
        }
        int j = i;
        while (j < w.size() && w[j] == Letter::b) ++j;
        s += (j - i == 1) ? std::string("b") : "b^{" + std::to_string(j - i) + "}";
        i = j;
    }
    return s;
}

std::string latex_element(const LieElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (mag != 1) s += mag.get_str();
        s += "[" + latex_word(w) + "]";
        first = false;
    }
    return s;
}

}  // namespace

std::string certificate_latex(const KernelCertificate& c) {
    return "\\left[" + latex_element(c.A) + ",\\ a\\right] = \\left[" + latex_element(-c.B) + ",\\ b\\right]";
}

std::string certificate_text(const KernelCertificate& c) {
    return "[" + c.A.to_string() + ", a] = [" + (-c.B).to_string() + ", b]";
}

}  // namespace twolie
