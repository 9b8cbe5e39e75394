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

// The map Theta(A,B) = [A,a] + [B,b] restricted to one bidegree, its integer
// kernel I_{k,l}, and kernel certificates.

#ifndef TWOLIE_THETA_HPP
#define TWOLIE_THETA_HPP

#include <optional>
#include <string>
#include <vector>

#include "twolie/algebra.hpp"
#include "twolie/zlinalg.hpp"

namespace twolie {

/// Theta_{k,l} : L_{k-1,l} + L_{k,l-1} -> L_{k,l} in canonical bases.
/// Columns: the L_{k-1,l} block (bracketed with a) then the L_{k,l-1}
/// block (bracketed with b), each in lexicographic order. A block whose
/// bidegree has a negative entry or is (0,0) is empty.
struct ThetaMatrix {
    Bidegree bidegree;
    std::vector<LyndonWord> a_block;
    std::vector<LyndonWord> b_block;
    std::vector<LyndonWord> codomain;
    IntMatrix matrix;

    std::size_t domain_size() const { return a_block.size() + b_block.size(); }
};

/// Columns built in parallel (OpenMP) when enabled; identical to the serial
/// result. Throws InvalidInput for negative arguments or (0,0).
ThetaMatrix theta_matrix(int k, int l);
ThetaMatrix theta_matrix_serial(int k, int l);

/// A pair (A, B) with A in L_{k-1,l}, B in L_{k,l-1}, claimed to satisfy
/// [A,a] + [B,b] = 0.
struct KernelCertificate {
    Bidegree bidegree;
    LieElement A;
    LieElement B;
    std::string source = "user";  ///< "computed", "family:<name>" or "user"
    bool verified = false;
};

/// [A,a] + [B,b], normalized. Throws BidegreeMismatch when A or B is not in
/// the summand its position requires.
LieElement theta_image(const KernelCertificate& c);

/// True iff [A,a] + [B,b] normalizes to zero; records the result in
/// c.verified.
bool verify_certificate(KernelCertificate& c);

/// Coordinates of (A, B) in the domain order of theta_matrix.
std::vector<Integer> certificate_vector(const KernelCertificate& c);
KernelCertificate certificate_from_vector(Bidegree d, std::span<const Integer> v, std::string source);

/// I_{k,l} as a canonical lattice in the domain coordinates.
KernelLattice kernel_lattice(const ThetaMatrix& theta);
KernelLattice kernel_lattice(int k, int l);

/// One verified certificate per canonical basis vector of I_{k,l}.
/// Throws ConsistencyError if a computed certificate fails to verify.
std::vector<KernelCertificate> kernel_certificates(int k, int l);

/// Lattice spanned by the given certificates (all of bidegree d).
KernelLattice certificate_lattice(Bidegree d, const std::vector<KernelCertificate>& certs);

struct SurjectivityReport {
    Bidegree bidegree;
    std::size_t rank = 0;
    std::size_t codomain_dim = 0;
    std::vector<Integer> invariant_factors;

    /// Full rank with every invariant factor 1, i.e. onto over the integers.
    bool surjective() const;
};

/// Throws InvalidInput for k + l < 2.
SurjectivityReport check_surjective(int k, int l);

struct MembershipReport {
    bool member = false;
    std::size_t kernel_rank = 0;
    std::vector<Integer> coordinates;  ///< against the canonical kernel basis
    /// For rank-1 kernels: |coordinate|, 1 meaning the certificate generates.
    std::optional<Integer> index;
    /// gcd of the coordinates is 1 (the vector extends to a basis).
    bool primitive = false;
};

/// Throws InvalidInput if c has not been verified.
MembershipReport lattice_membership(const KernelCertificate& c);

/// LaTeX display of the identity [A,a] = [-B,b].
std::string certificate_latex(const KernelCertificate& c);

/// Plain text display "[A, a] = [-B, b]".
std::string certificate_text(const KernelCertificate& c);

}  // namespace twolie

#endif  // TWOLIE_THETA_HPP
