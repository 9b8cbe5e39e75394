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

// JSON records: certificates, Lie elements, matrices, oracle reports and
// dimension tables. Coefficients and matrix entries are decimal strings.

#ifndef TWOLIE_SERIALIZE_HPP
#define TWOLIE_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "twolie/dims.hpp"
#include "twolie/oracle.hpp"

namespace twolie {

using Json = nlohmann::json;

/// [[coeff, word], ...] in basis order.
Json terms_to_json(const LieElement& x);
/// Parses [[coeff, word], ...]; coefficients may be strings or integers.
/// The result lives in bidegree d (words of other bidegrees are rejected).
LieElement terms_from_json(const Json& j, Bidegree d);

/// {"bidegree": [k, l], "terms": [[coeff, word], ...]}
Json lie_element_to_json(const LieElement& x);
LieElement lie_element_from_json(const Json& j);

/// {"k", "l", "A", "B", "source", "verified"}
Json certificate_to_json(const KernelCertificate& c);
/// Throws InvalidInput on malformed records.
KernelCertificate certificate_from_json(const Json& j);

/// {"rows", "cols", "entries": [row-major decimal strings]}
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// Matrix record plus the domain and codomain labels.
Json theta_to_json(const ThetaMatrix& t);

Json oracle_report_to_json(const OracleReport& r);

Json dim_records_to_json(const std::vector<DimRecord>& records);

/// Canonical text form: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace twolie

#endif  // TWOLIE_SERIALIZE_HPP
