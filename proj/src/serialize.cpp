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

#include "twolie/serialize.hpp"

namespace twolie {

namespace {

Integer integer_from_json(const Json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long>());
    throw InvalidInput("expected an integer or a decimal string, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("record is missing field '") + name + "'");
    return j.at(name);
}

int int_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_integer()) throw InvalidInput(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

}  // namespace

Json terms_to_json(const LieElement& x) {
    Json out = Json::array();
    for (const auto& [w, c] : x.terms()) out.push_back(Json::array({c.get_str(), w.to_string()}));
    return out;
}

LieElement terms_from_json(const Json& j, Bidegree d) {
    if (!j.is_array()) throw InvalidInput("terms must be an array of [coeff, word] pairs");
    LieElement x;
    if (d.k >= 0 && d.l >= 0 && !(d.k == 0 && d.l == 0)) x = LieElement(d);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_string()) {
            throw InvalidInput("malformed term " + t.dump());
        }
        LyndonWord w = LyndonWord::parse(t[1].get<std::string>());
        if (w.bidegree() != d) {
            throw BidegreeMismatch("word " + w.to_string() + " is not in L" + to_string(d));
        }
        x.add_term(w, integer_from_json(t[0]));
    }
    return x;
}

Json lie_element_to_json(const LieElement& x) {
    Json out;
    if (x.bidegree()) {
        out["bidegree"] = Json::array({x.bidegree()->k, x.bidegree()->l});
    } else {
        out["bidegree"] = nullptr;
    }
    out["terms"] = terms_to_json(x);
    return out;
}

LieElement lie_element_from_json(const Json& j) {
    const Json& bd = field(j, "bidegree");
    if (bd.is_null()) {
        if (!field(j, "terms").empty()) throw InvalidInput("untyped element with terms");
        return {};
    }
    if (!bd.is_array() || bd.size() != 2) throw InvalidInput("bidegree must be [k, l]");
    return terms_from_json(field(j, "terms"), {bd[0].get<int>(), bd[1].get<int>()});
}

Json certificate_to_json(const KernelCertificate& c) {
    Json out;
    out["k"] = c.bidegree.k;
    out["l"] = c.bidegree.l;
    out["A"] = terms_to_json(c.A);
    out["B"] = terms_to_json(c.B);
    out["source"] = c.source;
    out["verified"] = c.verified;
    return out;
}

KernelCertificate certificate_from_json(const Json& j) {
    KernelCertificate c;
    c.bidegree = {int_field(j, "k"), int_field(j, "l")};
    if (c.bidegree.k < 0 || c.bidegree.l < 0 || c.bidegree.weight() < 1) {
        throw InvalidInput("certificate bidegree must be nonnegative and not (0,0)");
    }
    c.A = terms_from_json(field(j, "A"), {c.bidegree.k - 1, c.bidegree.l});
    c.B = terms_from_json(field(j, "B"), {c.bidegree.k, c.bidegree.l - 1});
    if (j.contains("source")) {
        if (!j["source"].is_string()) throw InvalidInput("field 'source' must be a string");
        c.source = j["source"].get<std::string>();
    }
    if (j.contains("verified")) {
        if (!j["verified"].is_boolean()) throw InvalidInput("field 'verified' must be a boolean");
        c.verified = j["verified"].get<bool>();
    }
    return c;
}

Json matrix_to_json(const IntMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& x : m.row(i)) entries.push_back(x.get_str());
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const Json& j) {
    const int rows = int_field(j, "rows");
    const int cols = int_field(j, "cols");
    if (rows < 0 || cols < 0) throw InvalidInput("matrix dimensions must be nonnegative");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows) * cols) {
        throw InvalidInput("matrix record must have rows*cols entries");
    }
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) m(i, k) = integer_from_json(entries[static_cast<std::size_t>(i) * cols + k]);
    }
    return m;
}

Json theta_to_json(const ThetaMatrix& t) {
    Json out = matrix_to_json(t.matrix);
    out["k"] = t.bidegree.k;
    out["l"] = t.bidegree.l;
    Json dom = Json::array();
    for (const auto& w : t.a_block) dom.push_back(Json::array({w.to_string(), "a"}));
    for (const auto& w : t.b_block) dom.push_back(Json::array({w.to_string(), "b"}));
    Json cod = Json::array();
    for (const auto& w : t.codomain) cod.push_back(w.to_string());
    out["domain"] = dom;
    out["codomain"] = cod;
    return out;
}

Json oracle_report_to_json(const OracleReport& r) {
    Json out;
    out["certificate"] = r.certificate_id;
    out["dim"] = r.dim;
    out["trials"] = r.trials;
    out["seed"] = r.seed;
    out["modulus"] = r.modulus ? Json(r.modulus->get_str()) : Json(nullptr);
    out["verdict"] = r.passed ? "pass" : "fail";
    if (r.counterexample) {
        out["counterexample"] = Json{{"trial", *r.failing_trial},
                                     {"a", matrix_to_json(r.counterexample->a)},
                                     {"b", matrix_to_json(r.counterexample->b)},
                                     {"value", matrix_to_json(*r.witness_value)}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

Json dim_records_to_json(const std::vector<DimRecord>& records) {
    Json out = Json::array();
    for (const auto& r : records) {
        out.push_back(Json{{"weight", r.weight}, {"k", r.k}, {"l", r.l}, {"dimL", r.dim_L}, {"dimI", r.dim_I}});
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace twolie
