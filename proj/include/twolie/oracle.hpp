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

// Evaluation of Lie expressions in matrix Lie rings (gl_d(Z) under the
// commutator). A true identity vanishes under every assignment, so a nonzero
// value is a disproof; vanishing on random samples is evidence only.

#ifndef TWOLIE_ORACLE_HPP
#define TWOLIE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twolie/theta.hpp"

namespace twolie {

struct MatrixAssignment {
    std::size_t dim = 0;
    IntMatrix a;
    IntMatrix b;
    std::uint64_t seed = 0;
};

/// Deterministic assignment: entries uniform in [lo, hi] drawn from a
/// generator seeded by (seed, trial).
MatrixAssignment random_assignment(std::size_t dim, std::uint64_t seed, std::uint64_t trial = 0, int lo = -3,
                                   int hi = 3);

/// Letters substituted, brackets read as XY - YX. With a modulus, entries
/// are reduced into [0, modulus) after each product.
IntMatrix evaluate(const BracketTree& t, const MatrixAssignment& x, const std::optional<Integer>& modulus = {});
IntMatrix evaluate(const BracketExpr& e, const MatrixAssignment& x, const std::optional<Integer>& modulus = {});
IntMatrix evaluate(const LieElement& e, const MatrixAssignment& x, const std::optional<Integer>& modulus = {});

/// [A,a] + [B,b] under the assignment.
IntMatrix evaluate_theta(const KernelCertificate& c, const MatrixAssignment& x,
                         const std::optional<Integer>& modulus = {});

struct OracleOptions {
    int trials = 50;
    std::size_t dim = 4;
    std::uint64_t seed = 0;
    std::optional<Integer> modulus;
};

struct OracleReport {
    std::string certificate_id;
    std::size_t dim = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::optional<Integer> modulus;
    bool passed = false;
    /// First failing trial, its assignment and the nonzero value.
    std::optional<int> failing_trial;
    std::optional<MatrixAssignment> counterexample;
    std::optional<IntMatrix> witness_value;

    /// One-paragraph human-readable summary including the evidence caveat.
    std::string summary() const;
};

/// Trials run in parallel (OpenMP) when enabled; the report is identical to
/// oracle_check_serial. Throws InvalidInput for trials < 1 or dim < 2.
OracleReport oracle_check(const KernelCertificate& c, const OracleOptions& options);
OracleReport oracle_check_serial(const KernelCertificate& c, const OracleOptions& options);

/// Identifier used in reports, e.g. "family:i33@(3,6)".
std::string certificate_id(const KernelCertificate& c);

}  // namespace twolie

#endif  // TWOLIE_ORACLE_HPP
