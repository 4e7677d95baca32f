// Copyright 2026 The jacwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JACWIT_CERTIFICATE_JSON_HPP
#define JACWIT_CERTIFICATE_JSON_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "jacwit/error.hpp"
#include "jacwit/parse.hpp"
#include "jacwit/witness.hpp"

namespace jacwit {

using Json = nlohmann::ordered_json;

// {
//   "nvars": 2,
//   "modulus": "t + 1/2",
//   "point": ["0", "-1/2"],
//   "target": "x1^2 + 2*x1*x2 + x2^2 + x1 + x2",
//   "claimed_zero": [1, 2],
//   "provenance": {
//     "pipeline": "theorem_tame",
//     "sigma_shift": {"variable": 1, "by": 2, "map": "x1 -> x1 + x2"} | null,
//     "permutation": [1],
//     "split_lineage": [{"original": .., "factors": [.., ..], "branch": "cofactor"}],
//     "zero_jacobian": false,
//     "notes": []
//   }
// }
//
// Variable indices are 1-based; every polynomial is in canonical text form.

inline Json to_json(const Certificate& cert) {
    Json j;
    j["nvars"] = cert.nvars;
    j["modulus"] = to_string(cert.modulus);
    Json point = Json::array();
    for (const auto& r : cert.point) point.push_back(to_string(r));
    j["point"] = point;
    j["target"] = print_canonical(cert.target);
    Json claimed = Json::array();
    for (auto k : cert.claimed_zero) claimed.push_back(k + 1);
    j["claimed_zero"] = claimed;

    const Provenance& p = cert.provenance;
    Json prov;
    prov["pipeline"] = p.pipeline;
    if (p.sigma_shift) {
        const auto v = std::to_string(p.sigma_shift->variable + 1);
        const auto by = std::to_string(p.sigma_shift->by + 1);
        prov["sigma_shift"] = {{"variable", p.sigma_shift->variable + 1},
                               {"by", p.sigma_shift->by + 1},
                               {"map", "x" + v + " -> x" + v + " + x" + by}};
    } else {
        prov["sigma_shift"] = nullptr;
    }
    Json perm = Json::array();
    for (auto k : p.permutation) perm.push_back(k + 1);
    prov["permutation"] = perm;
    Json lineage = Json::array();
    for (const auto& ev : p.split_lineage) {
        lineage.push_back({{"original", to_string(ev.original)},
                           {"factors", {to_string(ev.gcd_factor), to_string(ev.cofactor)}},
                           {"branch", ev.branch == SplitEvent::Branch::gcd_factor ? "gcd_factor" : "cofactor"}});
    }
    prov["split_lineage"] = lineage;
    prov["zero_jacobian"] = p.zero_jacobian;
    prov["notes"] = p.notes;
    j["provenance"] = prov;
    return j;
}

inline std::string certificate_text(const Certificate& cert) {
    return to_json(cert).dump(2) + "\n";
}

namespace detail {

inline std::size_t one_based(const Json& v, const char* what) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
        throw FormatError(std::string(what) + " must hold positive integers");
    return v.get<std::size_t>() - 1;
}

}  // namespace detail

/// Throws FormatError on any schema violation or unparsable polynomial.
inline Certificate certificate_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw FormatError("certificate must be a JSON object");
        for (const char* key : {"nvars", "modulus", "point", "target", "claimed_zero"})
            if (!j.contains(key)) throw FormatError(std::string("certificate is missing '") + key + "'");
        Certificate cert;
        if (!j["nvars"].is_number_unsigned()) throw FormatError("nvars must be a non-negative integer");
        cert.nvars = j["nvars"].get<std::size_t>();
        if (cert.nvars == 0) throw FormatError("nvars must be positive");
        cert.modulus = parse_upoly(j["modulus"].get<std::string>());
        if (!j["point"].is_array()) throw FormatError("point must be an array");
        for (const auto& x : j["point"]) cert.point.push_back(parse_upoly(x.get<std::string>()));
        cert.target = parse_poly(j["target"].get<std::string>(), cert.nvars);
        if (!j["claimed_zero"].is_array()) throw FormatError("claimed_zero must be an array");
        for (const auto& k : j["claimed_zero"]) cert.claimed_zero.push_back(detail::one_based(k, "claimed_zero"));

        if (j.contains("provenance") && j["provenance"].is_object()) {
            const Json& p = j["provenance"];
            Provenance& prov = cert.provenance;
            prov.pipeline = p.value("pipeline", "");
            if (p.contains("sigma_shift") && p["sigma_shift"].is_object()) {
                prov.sigma_shift = SigmaRecord{detail::one_based(p["sigma_shift"].at("variable"), "sigma_shift"),
                                               detail::one_based(p["sigma_shift"].at("by"), "sigma_shift")};
            }
            if (p.contains("permutation"))
                for (const auto& k : p["permutation"]) prov.permutation.push_back(detail::one_based(k, "permutation"));
            if (p.contains("split_lineage")) {
                for (const auto& ev : p["split_lineage"]) {
                    SplitEvent s{parse_upoly(ev.at("original").get<std::string>()),
                                 parse_upoly(ev.at("factors").at(0).get<std::string>()),
                                 parse_upoly(ev.at("factors").at(1).get<std::string>()),
                                 ev.at("branch").get<std::string>() == "gcd_factor" ? SplitEvent::Branch::gcd_factor
                                                                                    : SplitEvent::Branch::cofactor};
                    prov.split_lineage.push_back(std::move(s));
                }
            }
            prov.zero_jacobian = p.value("zero_jacobian", false);
            if (p.contains("notes")) prov.notes = p["notes"].get<std::vector<std::string>>();
        }
        return cert;
    } catch (const FormatError&) {
        throw;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed certificate: ") + e.what());
    } catch (const ParseError& e) {
        throw FormatError(std::string("malformed polynomial in certificate: ") + e.what());
    } catch (const Error& e) {
        throw FormatError(std::string("malformed certificate: ") + e.what());
    }
}

inline Certificate parse_certificate(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw FormatError(std::string("certificate is not valid JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

}  // namespace jacwit

#endif  // JACWIT_CERTIFICATE_JSON_HPP
