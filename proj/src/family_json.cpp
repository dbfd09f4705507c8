/*
   Copyright 2026 The bwfam Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <limits>
#include <string>

#include "bwfam/error.hpp"
#include "bwfam/json_io.hpp"

namespace bwfam {

namespace {

Json optional_degree(const std::optional<std::size_t>& d) { return d ? Json(*d) : Json(nullptr); }

const Json& require(const Json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) throw Error(ErrorCode::kParse, std::string("family document is missing \"") + key + "\"");
    return *it;
}

long read_positive(const Json& doc, const char* key) {
    const Json& v = require(doc, key);
    if (!v.is_number_integer()) throw Error(ErrorCode::kParse, std::string("\"") + key + "\" must be an integer");
    const auto n = v.get<long long>();
    if (n < 1 || n > std::numeric_limits<int>::max()) {
        throw Error(ErrorCode::kParse, std::string("\"") + key + "\" must be a positive integer");
    }
    return static_cast<long>(n);
}

std::optional<std::string> read_string(const Json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw Error(ErrorCode::kParse, std::string("\"") + key + "\" must be a string");
    return it->get<std::string>();
}

QPoly read_poly(const Json& doc, const char* key) {
    const auto text = read_string(doc, key);
    if (!text) throw Error(ErrorCode::kParse, std::string("family document is missing \"") + key + "\"");
    return QPoly::parse(*text);
}

}  // namespace

Json family_to_json(const FamilyCandidate& c) {
    Json doc = Json::object();
    doc["k"] = c.k;
    doc["D"] = c.D;
    doc["t"] = c.t.to_string();
    doc["r"] = c.r.to_string();
    doc["q"] = c.q.to_string();
    doc["y"] = c.y.to_string();
    doc["h"] = c.h.to_string();
    if (!c.name.empty()) doc["name"] = c.name;
    if (!c.source.empty()) doc["source"] = c.source;
    if (c.zeta) doc["zeta"] = c.zeta->to_string();
    return doc;
}

FamilyCandidate family_from_json(const Json& doc, bool diagnostic) {
    if (!doc.is_object()) throw Error(ErrorCode::kParse, "family document must be a JSON object");
    const auto k = static_cast<unsigned>(read_positive(doc, "k"));
    const long D = read_positive(doc, "D");
    QPoly t = read_poly(doc, "t");
    QPoly r = read_poly(doc, "r");
    QPoly q = read_poly(doc, "q");

    QPoly y;
    if (read_string(doc, "y")) {
        y = read_poly(doc, "y");
    } else if (auto root = exact_sqrt((q * Rational(4) - t * t) / Rational(D))) {
        y = std::move(*root);
    }

    QPoly h;
    if (read_string(doc, "h")) {
        h = read_poly(doc, "h");
    } else if (!r.is_zero()) {
        h = divmod(q + QPoly::constant(1) - t, r).quotient;
    }

    FamilyCandidate c = FamilyCandidate::from_parts(k, D, std::move(t), std::move(r), std::move(q), std::move(y),
                                                    std::move(h), diagnostic);
    c.name = read_string(doc, "name").value_or("");
    c.source = read_string(doc, "source").value_or("");
    if (auto z = read_string(doc, "zeta")) c.zeta = QPoly::parse(*z);
    return c;
}

FamilyCandidate family_from_json_text(std::string_view text, bool diagnostic) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
    }
    return family_from_json(doc, diagnostic);
}

Json diagnosis_to_json(const FamilyDiagnosis& d) {
    static constexpr const char* kLabels[] = {"i", "ii", "iii", "iv", "v"};
    Json conditions = Json::array();
    for (std::size_t i = 0; i < d.conditions.size(); ++i) {
        const ConditionResult& c = d.conditions[i];
        conditions.push_back({{"condition", kLabels[i]},
                              {"status", to_string(c.status)},
                              {"summary", c.summary},
                              {"witness", c.witness}});
    }
    Json degrees = {{"t", optional_degree(d.degrees.t)},
                    {"r", optional_degree(d.degrees.r)},
                    {"q", optional_degree(d.degrees.q)},
                    {"y", optional_degree(d.degrees.y)},
                    {"h", optional_degree(d.degrees.h)},
                    {"phi_k", d.degrees.phi_k},
                    {"n", optional_degree(d.degrees.n)},
                    {"deg_r_equals_2deg_t", d.degrees.deg_r_equals_2deg_t}};
    return {{"conditions", conditions},
            {"rho", d.rho ? Json(d.rho->to_string()) : Json(nullptr)},
            {"degrees", degrees},
            {"is_complete_family", d.is_complete_family},
            {"is_ideal", d.is_ideal},
            {"notes", d.notes}};
}

Json curve_params_to_json(const CurveParams& p) {
    return {{"x0", p.x0.get_str()},
            {"t0", p.t0.get_str()},
            {"r0", p.r0.get_str()},
            {"q0", p.q0.get_str()},
            {"y0", p.y0.get_str()},
            {"h0", p.h0.get_str()},
            {"k", p.k},
            {"D", p.D},
            {"rho_numeric", p.rho_numeric},
            {"r_bits", mpz_sizeinbase(p.r0.get_mpz_t(), 2)},
            {"q_bits", mpz_sizeinbase(p.q0.get_mpz_t(), 2)},
            {"k_bound_ok", p.k_bound_ok},
            {"r_at_least_sqrt_q", p.r_at_least_sqrt_q},
            {"supersingular_boundary", p.supersingular_boundary},
            {"embedding_degree_set", p.embedding_degree_set},
            {"primality", p.regime == PrimalityRegime::kDeterministic ? "deterministic" : "probabilistic"}};
}

Json scan_report_to_json(const ScanReport& r) {
    Json skipped = Json::object();
    for (const auto& [reason, count] : r.skipped) skipped[to_string(reason)] = count;
    Json near = Json::object();
    for (const auto& [reason, count] : r.near_misses) near[to_string(reason)] = count;
    Json hits = Json::array();
    for (const CurveParams& p : r.hits) hits.push_back(curve_params_to_json(p));

    Json doc = {{"family", r.family_name},
                {"seed", std::to_string(r.seed)},
                {"scanned", r.scanned},
                {"skipped", skipped},
                {"near_misses", near},
                {"hits", hits},
                {"hit_count", r.hits.size()},
                {"supersingular_hits", r.supersingular_hits}};
    if (r.mode == ScanReport::Mode::kRange) {
        doc["mode"] = "range";
        doc["range"] = {{"lo", r.lo.get_str()}, {"hi", r.hi.get_str()}};
    } else {
        doc["mode"] = "bits";
        doc["bits"] = r.bits;
        doc["count"] = r.count;
        doc["window"] = {{"lo", r.lo.get_str()}, {"hi", r.hi.get_str()}};
        doc["exhausted"] = r.exhausted;
    }
    return doc;
}

}  // namespace bwfam
