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

#include "twolie/oracle.hpp"

#include <map>
#include <random>
#include <sstream>

namespace twolie {

MatrixAssignment random_assignment(std::size_t dim, std::uint64_t seed, std::uint64_t trial, int lo, int hi) {
    if (dim < 1) throw InvalidInput("random_assignment: dimension must be positive");
    if (lo > hi) throw InvalidInput("random_assignment: empty entry range");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 gen(seq);
    std::uniform_int_distribution<int> entry(lo, hi);
    MatrixAssignment x{dim, IntMatrix(dim, dim), IntMatrix(dim, dim), seed};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) x.a(i, j) = entry(gen);
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) x.b(i, j) = entry(gen);
    }
    return x;
}

namespace {

void reduce(IntMatrix& m, const std::optional<Integer>& modulus) {
    if (!modulus) return;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), modulus->get_mpz_t());
        }
    }
}

IntMatrix commutator(const IntMatrix& x, const IntMatrix& y, const std::optional<Integer>& modulus) {
    IntMatrix xy = x * y;
    IntMatrix yx = y * x;
    for (std::size_t i = 0; i < xy.rows(); ++i) {
        for (std::size_t j = 0; j < xy.cols(); ++j) xy(i, j) -= yx(i, j);
    }
    reduce(xy, modulus);
    return xy;
}

void accumulate(IntMatrix& acc, const IntMatrix& x, const Integer& c) {
    for (std::size_t i = 0; i < acc.rows(); ++i) {
        for (std::size_t j = 0; j < acc.cols(); ++j) {
            mpz_addmul(acc(i, j).get_mpz_t(), c.get_mpz_t(), x(i, j).get_mpz_t());
        }
    }
}

// Basis brackets share subtrees through standard factorizations.
class LyndonEvaluator {
 public:
    LyndonEvaluator(const MatrixAssignment& x, const std::optional<Integer>& modulus) : x_(x), modulus_(modulus) {}

    const IntMatrix& operator()(const LyndonWord& w) {
        auto it = memo_.find(w.word());
        if (it != memo_.end()) return it->second;
        IntMatrix value;
        if (w.size() == 1) {
            value = w.word()[0] == Letter::a ? x_.a : x_.b;
        } else {
            auto [u, v] = standard_factorization(w);
            IntMatrix left = (*this)(u);
            value = commutator(left, (*this)(v), modulus_);
        }
        return memo_.emplace(w.word(), std::move(value)).first->second;
    }

 private:
    const MatrixAssignment& x_;
    const std::optional<Integer>& modulus_;
    std::map<Word, IntMatrix> memo_;
};

IntMatrix evaluate_element(const LieElement& e, LyndonEvaluator& eval, std::size_t dim,
                           const std::optional<Integer>& modulus) {
    IntMatrix acc(dim, dim);
    for (const auto& [w, c] : e.terms()) accumulate(acc, eval(LyndonWord(w)), c);
    reduce(acc, modulus);
    return acc;
}

}  // namespace

IntMatrix evaluate(const BracketTree& t, const MatrixAssignment& x, const std::optional<Integer>& modulus) {
    if (t.is_leaf()) {
        IntMatrix m = t.letter() == Letter::a ? x.a : x.b;
        reduce(m, modulus);
        return m;
    }
    return commutator(evaluate(t.left(), x, modulus), evaluate(t.right(), x, modulus), modulus);
}

IntMatrix evaluate(const BracketExpr& e, const MatrixAssignment& x, const std::optional<Integer>& modulus) {
    IntMatrix acc(x.dim, x.dim);
    for (const auto& t : e.terms()) accumulate(acc, evaluate(t.tree, x, modulus), t.coeff);
    reduce(acc, modulus);
    return acc;
}

IntMatrix evaluate(const LieElement& e, const MatrixAssignment& x, const std::optional<Integer>& modulus) {
    LyndonEvaluator eval(x, modulus);
    return evaluate_element(e, eval, x.dim, modulus);
}

IntMatrix evaluate_theta(const KernelCertificate& c, const MatrixAssignment& x,
                         const std::optional<Integer>& modulus) {
    LyndonEvaluator eval(x, modulus);
    IntMatrix va = evaluate_element(c.A, eval, x.dim, modulus);
    IntMatrix vb = evaluate_element(c.B, eval, x.dim, modulus);
    IntMatrix out = commutator(va, x.a, modulus);
    IntMatrix rb = commutator(vb, x.b, modulus);
    accumulate(out, rb, Integer(1));
    reduce(out, modulus);
    return out;
}

std::string certificate_id(const KernelCertificate& c) { return c.source + "@" + to_string(c.bidegree); }

namespace {

void check_options(const OracleOptions& o) {
    if (o.trials < 1) throw InvalidInput("oracle: trials must be at least 1");
    if (o.dim < 2) throw InvalidInput("oracle: matrix dimension must be at least 2");
    if (o.modulus && *o.modulus < 2) throw InvalidInput("oracle: modulus must be at least 2");
}

OracleReport make_report(const KernelCertificate& c, const OracleOptions& o) {
    OracleReport r;
    r.certificate_id = certificate_id(c);
    r.dim = o.dim;
    r.trials = o.trials;
    r.seed = o.seed;
    r.modulus = o.modulus;
    return r;
}

void record_failure(OracleReport& r, int trial, const OracleOptions& o, IntMatrix value) {
    r.passed = false;
    r.failing_trial = trial;
    r.counterexample = random_assignment(o.dim, o.seed, static_cast<std::uint64_t>(trial));
    r.witness_value = std::move(value);
}

}  // namespace

OracleReport oracle_check_serial(const KernelCertificate& c, const OracleOptions& options) {
    check_options(options);
    OracleReport r = make_report(c, options);
    r.passed = true;
    for (int t = 0; t < options.trials; ++t) {
        IntMatrix v = evaluate_theta(c, random_assignment(options.dim, options.seed, t), options.modulus);
        if (!v.is_zero()) {
            record_failure(r, t, options, std::move(v));
            break;
        }
    }
    return r;
}

OracleReport oracle_check(const KernelCertificate& c, const OracleOptions& options) {
    check_options(options);
    OracleReport r = make_report(c, options);
    std::vector<char> zero(static_cast<std::size_t>(options.trials), 1);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < options.trials; ++t) {
        zero[t] = evaluate_theta(c, random_assignment(options.dim, options.seed, t), options.modulus).is_zero();
    }
    r.passed = true;
    for (int t = 0; t < options.trials; ++t) {
        if (!zero[t]) {
            record_failure(r, t, options,
                           evaluate_theta(c, random_assignment(options.dim, options.seed, t), options.modulus));
            break;
        }
    }
    return r;
}

std::string OracleReport::summary() const {
    std::ostringstream os;
    os << "certificate " << certificate_id << ": " << (passed ? "PASS" : "FAIL") << " (" << trials
       << " trials, " << dim << "x" << dim << " integer matrices, seed " << seed;
    if (modulus) os << ", entries reduced mod " << modulus->get_str();
    os << ")\n";
    if (passed) {
        os << "vanished on every sampled assignment; this is evidence, not a proof\n";
        if (modulus) os << "note: reduction mod " << modulus->get_str() << " can hide nonzero integer values\n";
    } else {
        os << "nonzero value at trial " << *failing_trial << ": the identity is false\n";
        os << "a =\n" << counterexample->a.to_string() << "b =\n" << counterexample->b.to_string();
        os << "[A,a] + [B,b] =\n" << witness_value->to_string();
    }
    return os.str();
}

}  // namespace twolie
