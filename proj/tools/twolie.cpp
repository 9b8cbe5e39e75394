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

// twolie: command-line front end.
//
//   twolie dims --max-weight N [--bigraded] [--format text|json]
//   twolie basis K L [--format text|json|latex]
//   twolie theta K L [--out FILE]
//   twolie kernel K L [--certify]
//   twolie family qbad|i2|i33 (--n N | --m M) [--format json|latex]
//   twolie verify FILE [--oracle --trials T --dim D --seed S --modulus P] [--format text|json]
//   twolie normalize "EXPR" [--format text|json]
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twolie/dims.hpp"
#include "twolie/families.hpp"
#include "twolie/oracle.hpp"
#include "twolie/serialize.hpp"

namespace {

using namespace twolie;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw UsageError("failed writing '" + path + "'");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::vector<KernelCertificate> certificates_from_json(const Json& j) {
    std::vector<KernelCertificate> out;
    const Json* list = &j;
    if (j.is_object() && j.contains("certificates")) list = &j["certificates"];
    if (list->is_array()) {
        for (const auto& c : *list) out.push_back(certificate_from_json(c));
    } else {
        out.push_back(certificate_from_json(*list));
    }
    return out;
}

int cmd_dims(int max_weight, bool bigraded, const std::string& format) {
    if (max_weight < 1) throw InvalidInput("--max-weight must be at least 1");
    if (format == "json") {
        if (bigraded) {
            std::cout << dump(dim_records_to_json(bigraded_dim_records(max_weight)));
        } else {
            Json rows = Json::array();
            for (int n = 1; n <= max_weight; ++n) {
                Json r{{"weight", n}, {"dimL", dim_L(n)}};
                r["dimI"] = n >= 2 ? Json(dim_I(n)) : Json(nullptr);
                r["dimI2"] = n >= 2 ? Json(dim_I2(n - 2)) : Json(nullptr);
                r["dimI3"] = n >= 3 ? Json(dim_I3(n - 3)) : Json(nullptr);
                rows.push_back(r);
            }
            std::cout << dump(rows);
        }
    } else {
        std::cout << (bigraded ? dim_records_text(bigraded_dim_records(max_weight)) : dim_table_text(max_weight));
    }
    return kOk;
}

std::string latex_bracket(const BracketTree& t) {
    if (t.is_leaf()) return std::string(1, to_char(t.letter()));
    return "\\left[" + latex_bracket(t.left()) + ",\\, " + latex_bracket(t.right()) + "\\right]";
}

int cmd_basis(int k, int l, const std::string& format) {
    const auto words = lyndon_words(k, l);
    if (format == "json") {
        Json list = Json::array();
        for (const auto& w : words) list.push_back(Json{{"word", w.to_string()}, {"bracket", lyndon_bracket(w).to_string()}});
        std::cout << dump(Json{{"k", k}, {"l", l}, {"dim", words.size()}, {"basis", list}});
    } else if (format == "latex") {
        std::cout << "% basis of L_{" << k << "," << l << "}, dimension " << words.size() << "\n";
        std::cout << "\\begin{align*}\n";
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::cout << "  &" << latex_bracket(lyndon_bracket(words[i])) << (i + 1 < words.size() ? " \\\\\n" : "\n");
        }
        std::cout << "\\end{align*}\n";
    } else {
        std::cout << "# L" << to_string(Bidegree{k, l}) << " dim " << words.size() << "\n";
        for (const auto& w : words) std::cout << w.to_string() << "\t" << lyndon_bracket(w).to_string() << "\n";
    }
    return kOk;
}

int cmd_theta(int k, int l, const std::string& out) {
    write_output(dump(theta_to_json(theta_matrix(k, l))), out);
    return kOk;
}

std::optional<KernelCertificate> family_generator(Bidegree d) {
    if (d.k == 2 && d.l >= 2 && d.l % 2 == 0) return i2_certificate(d.l);
    if (d.k == 3 && d.l >= 3 && d.l % 3 == 0) return i33n_certificate(d.l / 3);
    return std::nullopt;
}

int cmd_kernel(int k, int l, bool certify) {
    const Bidegree d{k, l};
    KernelLattice lat = kernel_lattice(k, l);
    std::vector<KernelCertificate> certs = kernel_certificates(k, l);
    Json list = Json::array();
    for (const auto& c : certs) list.push_back(certificate_to_json(c));
    Json out{{"k", k}, {"l", l}, {"rank", lat.rank()}, {"certificates", list}};
    int status = kOk;
    if (certify) {
        bool all_verified = true;
        for (auto c : certs) all_verified = verify_certificate(c) && all_verified;
        Json report{{"verified", all_verified}};
        if (auto g = family_generator(d)) {
            bool equal = g->verified && lattice_equal(lat, certificate_lattice(d, {*g}));
            report["generator"] = g->source;
            report["lattice_equal"] = equal;
            if (equal) {
                std::cerr << "kernel " << to_string(d) << " is lattice-equal to " << certificate_id(*g) << "\n";
            } else {
                std::cerr << "kernel " << to_string(d) << " differs from " << certificate_id(*g) << "\n";
            }
            // a closed-form generator that fails to verify is a verification failure
            if (!g->verified) status = kVerifyFailed;
            report["generator_certificate"] = certificate_to_json(*g);
        } else {
            report["generator"] = nullptr;
        }
        if (!all_verified) status = kVerifyFailed;
        out["certify"] = report;
    }
    std::cout << dump(out);
    return status;
}

int cmd_family(const std::string& name, std::optional<int> n, std::optional<int> m, const std::string& format) {
    KernelCertificate c;
    if (name == "qbad" || name == "i33") {
        if (!n) throw UsageError("family " + name + " requires --n");
        if (m) throw UsageError("family " + name + " takes --n, not --m");
        c = name == "qbad" ? qbad_certificate(*n) : i33n_certificate(*n);
    } else {
        if (!m) throw UsageError("family i2 requires --m");
        if (n) throw UsageError("family i2 takes --m, not --n");
        c = i2_certificate(*m);
    }
    std::cout << (format == "latex" ? certificate_latex(c) + "\n" : dump(certificate_to_json(c)));
    if (!c.verified) {
        std::cerr << "certificate " << certificate_id(c) << " does not verify\n";
        return kVerifyFailed;
    }
    return kOk;
}

struct VerifyOptions {
    bool oracle = false;
    int trials = 50;
    std::size_t dim = 4;
    std::uint64_t seed = 0;
    std::string modulus;
    std::string format = "text";
};

int cmd_verify(const std::string& path, const VerifyOptions& v) {
    std::vector<KernelCertificate> certs = certificates_from_json(read_json_file(path));
    OracleOptions o;
    o.trials = v.trials;
    o.dim = v.dim;
    o.seed = v.seed;
    if (!v.modulus.empty()) o.modulus = parse_integer(v.modulus);
    bool ok = true;
    Json results = Json::array();
    for (auto& c : certs) {
        const bool claimed = c.verified;
        const bool exact = verify_certificate(c);
        ok = ok && exact;
        Json r{{"certificate", certificate_id(c)}, {"exact", exact}};
        if (claimed && !exact) std::cerr << certificate_id(c) << ": record claims verified but the identity fails\n";
        if (v.format == "text") {
            std::cout << certificate_id(c) << ": " << (exact ? "verified" : "NOT in the kernel") << "\n";
            if (!exact) std::cout << "  Theta(A,B) = " << theta_image(c).to_string() << "\n";
        } else if (!exact) {
            r["theta_image"] = terms_to_json(theta_image(c));
        }
        if (v.oracle) {
            OracleReport rep = oracle_check(c, o);
            ok = ok && rep.passed;
            if (v.format == "text") std::cout << rep.summary();
            r["oracle"] = oracle_report_to_json(rep);
        }
        results.push_back(r);
    }
    if (v.format == "json") std::cout << dump(Json{{"passed", ok}, {"results", results}});
    return ok ? kOk : kVerifyFailed;
}

int cmd_normalize(const std::string& expr, const std::string& format) {
    LieElement x = normalize(parse_bracket_expr(expr));
    if (format == "json") {
        std::cout << dump(lie_element_to_json(x));
    } else {
        std::cout << x.to_string() << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twolie: integral Lie brackets in two generators"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    int max_weight = 0;
    bool bigraded = false;
    std::string dims_format = "text";
    auto* dims = app.add_subcommand("dims", "dimension tables of L_n and I_n");
    dims->add_option("--max-weight", max_weight, "largest weight n")->required();
    dims->add_flag("--bigraded", bigraded, "one row per bidegree (k,l)");
    dims->add_option("--format", dims_format)->check(CLI::IsMember({"text", "json"}));

    int k = 0, l = 0;
    auto add_kl = [&](CLI::App* sub) {
        sub->add_option("K", k, "number of a's")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("L", l, "number of b's")->required()->check(CLI::NonNegativeNumber);
    };

    std::string basis_format = "text";
    auto* basis = app.add_subcommand("basis", "Lyndon-Shirshov basis of L_{k,l}");
    add_kl(basis);
    basis->add_option("--format", basis_format)->check(CLI::IsMember({"text", "json", "latex"}));

    std::string theta_out;
    auto* theta = app.add_subcommand("theta", "matrix of Theta_{k,l} as a JSON record");
    add_kl(theta);
    theta->add_option("--out", theta_out, "write to FILE instead of stdout");

    bool certify = false;
    auto* kernel = app.add_subcommand("kernel", "integral kernel basis of Theta_{k,l}");
    add_kl(kernel);
    kernel->add_flag("--certify", certify, "re-verify and compare with the closed-form generator");

    std::string family_name;
    std::optional<int> fam_n, fam_m;
    std::string family_format = "json";
    auto* family = app.add_subcommand("family", "closed-form kernel elements");
    family->add_option("name", family_name)->required()->check(CLI::IsMember({"qbad", "i2", "i33"}));
    family->add_option("--n", fam_n, "family index (qbad, i33)");
    family->add_option("--m", fam_m, "even weight of b's (i2)");
    family->add_option("--format", family_format)->check(CLI::IsMember({"json", "latex"}));

    std::string verify_file;
    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "check certificates from a JSON file");
    verify->add_option("FILE", verify_file)->required();
    verify->add_flag("--oracle", vopt.oracle, "also evaluate on random integer matrices");
    verify->add_option("--trials", vopt.trials)->check(CLI::PositiveNumber);
    verify->add_option("--dim", vopt.dim)->check(CLI::Range(2, 64));
    verify->add_option("--seed", vopt.seed);
    verify->add_option("--modulus", vopt.modulus, "reduce entries modulo P");
    verify->add_option("--format", vopt.format)->check(CLI::IsMember({"text", "json"}));

    std::string expr;
    std::string normalize_format = "text";
    auto* norm = app.add_subcommand("normalize", "rewrite a bracket expression in the Lyndon basis");
    norm->add_option("EXPR", expr)->required();
    norm->add_option("--format", normalize_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*dims) return cmd_dims(max_weight, bigraded, dims_format);
        if (*basis) return cmd_basis(k, l, basis_format);
        if (*theta) return cmd_theta(k, l, theta_out);
        if (*kernel) return cmd_kernel(k, l, certify);
        if (*family) return cmd_family(family_name, fam_n, fam_m, family_format);
        if (*verify) return cmd_verify(verify_file, vopt);
        if (*norm) return cmd_normalize(expr, normalize_format);
    } catch (const UsageError& e) {
        std::cerr << "twolie: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "twolie: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "twolie: malformed record: " << e.what() << "\n";
        return kUsage;
    } catch (const ConsistencyError& e) {
        std::cerr << "twolie: internal consistency check failed: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
