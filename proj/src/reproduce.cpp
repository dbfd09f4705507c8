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

#include "bwfam/reproduce.hpp"

#include "bwfam/cyclo_ring.hpp"
#include "bwfam/error.hpp"
#include "bwfam/irreducibility.hpp"
#include "bwfam/registry.hpp"

namespace bwfam {

namespace {

FamilyCandidate construct_from(unsigned k, long D, const QPoly& r, const QPoly& zeta) {
    const ResidueRing ring = ResidueRing::create(r);
    return bw_construct(k, D, ZetaImage::create(k, ring.element(zeta)));
}

void diff_field(std::vector<FieldDiff>& out, const char* field, const QPoly& expected, const QPoly& actual) {
    if (!(expected == actual)) out.push_back({field, expected.to_string(), actual.to_string()});
}

}  // namespace

RegistryReproduction reproduce_registry(std::string_view name) {
    FamilyCandidate expected = registry_family(name);
    if (!expected.zeta) throw Error(ErrorCode::kInvalidArgument, "registry family has no zeta image");
    FamilyCandidate rebuilt = construct_from(expected.k, expected.D, expected.r, *expected.zeta);
    rebuilt.name = expected.name;
    rebuilt.source = expected.source;

    RegistryReproduction out{std::string(name), expected, rebuilt, {}, validate(rebuilt)};
    diff_field(out.mismatches, "t", expected.t, rebuilt.t);
    diff_field(out.mismatches, "r", expected.r, rebuilt.r);
    diff_field(out.mismatches, "q", expected.q, rebuilt.q);
    diff_field(out.mismatches, "y", expected.y, rebuilt.y);
    diff_field(out.mismatches, "h", expected.h, rebuilt.h);
    return out;
}

ForcedFormsReproduction reproduce_forced_forms() {
    ForcedFormsReproduction out;
    out.certified = true;
    for (unsigned k : {3U, 4U, 6U}) {
        out.reports.push_back(forced_form_obstruction(k));
        out.certified = out.certified && out.reports.back().certified;
    }
    return out;
}

std::vector<CatalogEntry> catalog_candidates() {
    struct Field {
        unsigned k;
        std::vector<long> discriminants;
        std::vector<std::pair<std::string, QPoly>> roots;  // primitive roots in Q[x]/(Phi_k)
    };
    const QPoly x = QPoly::x();
    const QPoly x3 = pow(x, 3);
    const std::vector<Field> fields = {
        {8, {1, 2}, {{"x", x}, {"x^3", x3}, {"-x", -x}, {"-x^3", -x3}}},
        {12, {1, 3}, {{"x", x}, {"x^3-x", x3 - x}, {"-x", -x}, {"x-x^3", x - x3}}},
    };
    const std::vector<QPoly> substitutions = {
        QPoly::parse("x^2"),     QPoly::parse("x^2+1"),   QPoly::parse("x^2+x"),
        QPoly::parse("x^2+2"),   QPoly::parse("2*x^2+1"), QPoly::parse("x^2-x+1"),
    };

    std::vector<CatalogEntry> out;
    for (const Field& f : fields) {
        const QPoly phi = cyclotomic(f.k);
        const std::string tag = "Phi_" + std::to_string(f.k);
        for (long D : f.discriminants) {
            for (const auto& [label, z] : f.roots) {
                out.push_back({tag + ", zeta = " + label + ", D = " + std::to_string(D), f.k, D, phi, z});
            }
        }
        for (const QPoly& u : substitutions) {
            const QPoly r = phi.compose(u).primitive_part();
            if (check_irreducible(r).verdict != Irreducibility::kIrreducible) continue;
            for (long D : f.discriminants) {
                out.push_back({tag + "(" + u.to_string() + "), zeta = " + u.to_string() + ", D = " + std::to_string(D),
                               f.k, D, r, u});
            }
        }
    }
    return out;
}

CatalogReproduction reproduce_catalog_scan() {
    CatalogReproduction out;
    out.no_ideal = true;
    for (CatalogEntry& entry : catalog_candidates()) {
        CatalogOutcome o{std::move(entry), std::nullopt, std::nullopt, {}, false, false};
        try {
            o.family = construct_from(o.entry.k, o.entry.D, o.entry.r, o.entry.zeta);
            o.diagnosis = validate(*o.family);
            ++out.constructed;
            o.excluded = o.diagnosis->degrees.deg_r_equals_2deg_t;
            o.ideal = o.diagnosis->is_ideal;
            if (o.ideal && !o.excluded) out.no_ideal = false;
        } catch (const Error& e) {
            o.error = std::string(to_string(e.code())) + ": " + e.what();
        }
        out.outcomes.push_back(std::move(o));
    }
    return out;
}

SmallSearchReport exhaustive_small_search(int bound) {
    SmallSearchReport report;
    report.coefficient_bound = bound;
    const QPoly one = QPoly::constant(1);
    for (unsigned k : {3U, 4U, 6U}) {
        const QPoly phi = cyclotomic(k);
        for (int a = -bound; a <= bound; ++a) {
            for (int b = -bound; b <= bound; ++b) {
                for (int c = -bound; c <= bound; ++c) {
                    const QPoly t{Rational(c), Rational(b), Rational(a)};
                    if (t.is_constant()) continue;
                    ++report.substitutions;
                    const QPoly r = phi.compose(t - one).primitive_part();
                    const IrreducibilityResult irr = check_irreducible(r);
                    if (irr.verdict == Irreducibility::kInconclusive) ++report.inconclusive;
                    if (irr.verdict != Irreducibility::kIrreducible) continue;
                    ++report.irreducible;

                    const ResidueRing ring = ResidueRing::create(r);
                    const ZetaImage zeta = ZetaImage::create(k, ring.element(t - one));
                    for (long D : {1L, 2L, 3L}) {
                        if (!find_sqrt_minus_d(D, zeta)) continue;
                        const FamilyCandidate family = bw_construct(k, D, zeta);
                        const FamilyDiagnosis d = validate(family);
                        ++report.constructed;
                        if (d.is_complete_family) ++report.complete;
                        if (d.is_ideal) {
                            report.ideal.push_back({k, D, family.t, family.r, d.rho.value_or(Rational(0)),
                                                    d.is_complete_family, d.is_ideal});
                        }
                    }
                }
            }
        }
    }
    return report;
}

Json registry_reproduction_to_json(const RegistryReproduction& r) {
    Json diffs = Json::array();
    for (const FieldDiff& d : r.mismatches) {
        diffs.push_back({{"field", d.field}, {"expected", d.expected}, {"actual", d.actual}});
    }
    return {{"target", r.name},
            {"matches", r.matches()},
            {"mismatches", diffs},
            {"registry", family_to_json(r.expected)},
            {"reconstructed", family_to_json(r.rebuilt)},
            {"diagnosis", diagnosis_to_json(r.diagnosis)}};
}

Json forced_forms_to_json(const ForcedFormsReproduction& r) {
    Json reports = Json::array();
    for (const ObstructionReport& o : r.reports) {
        Json table = Json::array();
        for (const ResidueRow& row : o.residue_table) {
            table.push_back({{"X_mod_4", row.residue.get_str()}, {"four_q_mod_4", row.numerator_mod.get_str()}});
        }
        reports.push_back({{"k", o.forms.k},
                           {"D", o.forms.D},
                           {"supersingular_q", o.forms.supersingular.to_string('X')},
                           {"noncyclotomic_q", o.forms.noncyclotomic.to_string('X')},
                           {"noncyclotomic_Dy2", o.forms.dy2.to_string('X')},
                           {"profile_modulus", o.profile_modulus.get_str()},
                           {"residue_table", table},
                           {"never_integral", o.never_integral},
                           {"square_constant", o.square_constant.to_string()},
                           {"square_root", o.square_root.to_string('X')},
                           {"constant_times_square", o.constant_times_square},
                           {"reducible", o.reducible},
                           {"certified", o.certified}});
    }
    return {{"target", "theorem1"}, {"reports", reports}, {"certified", r.certified}};
}

Json catalog_reproduction_to_json(const CatalogReproduction& r) {
    Json outcomes = Json::array();
    for (const CatalogOutcome& o : r.outcomes) {
        Json item = {{"label", o.entry.label},
                     {"k", o.entry.k},
                     {"D", o.entry.D},
                     {"r", o.entry.r.to_string()},
                     {"zeta", o.entry.zeta.to_string()},
                     {"excluded", o.excluded},
                     {"ideal", o.ideal}};
        if (o.family) {
            item["t"] = o.family->t.to_string();
            item["q"] = o.family->q.to_string();
            item["y"] = o.family->y.to_string();
        }
        if (o.diagnosis) {
            item["rho"] = o.diagnosis->rho ? Json(o.diagnosis->rho->to_string()) : Json(nullptr);
            item["is_complete_family"] = o.diagnosis->is_complete_family;
        }
        if (!o.error.empty()) item["error"] = o.error;
        outcomes.push_back(std::move(item));
    }
    return {{"target", "theorem3-scan"},
            {"catalog_size", r.outcomes.size()},
            {"constructed", r.constructed},
            {"outcomes", outcomes},
            {"no_ideal", r.no_ideal}};
}

}  // namespace bwfam
