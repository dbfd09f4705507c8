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

// bwfam command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 negative mathematical verdict, 2 usage or parse
// error, 3 internal inconsistency.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bwfam/bwfam.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code_for(bwf_status status) {
    switch (status) {
        case BWF_OK: return kExitOk;
        case BWF_ERR_REDUCIBLE:
        case BWF_ERR_INCONCLUSIVE:
        case BWF_ERR_NOT_PRIMITIVE_ROOT:
        case BWF_ERR_NO_SQRT_RULE:
        case BWF_ERR_BAD_SQRT:
        case BWF_ERR_NOT_INTEGRAL: return kExitNegative;
        case BWF_ERR_INVALID_ARGUMENT:
        case BWF_ERR_PARSE:
        case BWF_ERR_UNKNOWN_NAME: return kExitUsage;
        default: return kExitInternal;
    }
}

int report_error(bwf_status status) {
    std::cerr << "error (" << bwf_status_name(status) << "): " << bwf_last_error() << "\n";
    const std::string witness = bwf_last_witness();
    if (!witness.empty()) std::cerr << "witness: " << witness << "\n";
    return exit_code_for(status);
}

struct StringDeleter {
    void operator()(char* s) const { bwf_string_free(s); }
};
struct FamilyDeleter {
    void operator()(bwf_family* f) const { bwf_family_free(f); }
};
struct DiagnosisDeleter {
    void operator()(bwf_diagnosis* d) const { bwf_diagnosis_free(d); }
};
struct ScanDeleter {
    void operator()(bwf_scan* s) const { bwf_scan_free(s); }
};
using FamilyPtr = std::unique_ptr<bwf_family, FamilyDeleter>;

std::string take(char* s) {
    const std::unique_ptr<char, StringDeleter> owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

// Internal failure if the library hands back something that does not parse.
Json parse_payload(const std::string& text) { return Json::parse(text); }

const char* kLabels[] = {"(i)   r(x) represents primes", "(ii)  q(x) represents primes", "(iii) r(x) | q(x)+1-t(x)",
                         "(iv)  r(x) | Phi_k(t(x)-1)", "(v)   D*y(x)^2 = 4q(x)-t(x)^2"};

void print_family(const Json& f) {
    if (f.contains("name")) std::cout << "family " << f["name"].get<std::string>() << "\n";
    std::cout << "k = " << f["k"] << ", D = " << f["D"] << "\n";
    for (const char* key : {"t", "r", "q", "y", "h"}) {
        std::cout << key << "(x) = " << f[key].get<std::string>() << "\n";
    }
    if (f.contains("zeta")) std::cout << "zeta -> " << f["zeta"].get<std::string>() << "\n";
}

void print_diagnosis(const Json& d) {
    const Json& conditions = d["conditions"];
    for (std::size_t i = 0; i < conditions.size(); ++i) {
        const Json& c = conditions[i];
        std::cout << kLabels[i] << ": " << c["status"].get<std::string>() << "  [" << c["summary"].get<std::string>()
                  << "]\n";
        const std::string witness = c["witness"].get<std::string>();
        if (!witness.empty()) std::cout << "      witness: " << witness << "\n";
    }
    std::cout << "rho = " << (d["rho"].is_null() ? std::string("undefined") : d["rho"].get<std::string>()) << "\n";
    std::cout << "complete family: " << (d["is_complete_family"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "ideal (rho = 1): " << (d["is_ideal"].get<bool>() ? "yes" : "no") << "\n";
    for (const Json& note : d["notes"]) std::cout << "note: " << note.get<std::string>() << "\n";
}

// Validates a loaded family and prints it; exit 0 iff it is a complete family.
int diagnose(bwf_family* family, bool json) {
    bwf_diagnosis* raw = nullptr;
    if (const bwf_status s = bwf_validate(family, &raw); s != BWF_OK) return report_error(s);
    const std::unique_ptr<bwf_diagnosis, DiagnosisDeleter> diagnosis(raw);

    char* family_text = nullptr;
    char* diagnosis_text = nullptr;
    if (const bwf_status s = bwf_family_to_json(family, &family_text); s != BWF_OK) return report_error(s);
    const Json f = parse_payload(take(family_text));
    if (const bwf_status s = bwf_diagnosis_to_json(diagnosis.get(), &diagnosis_text); s != BWF_OK) {
        return report_error(s);
    }
    const Json d = parse_payload(take(diagnosis_text));

    if (json) {
        std::cout << Json{{"family", f}, {"diagnosis", d}}.dump(2) << "\n";
    } else {
        print_family(f);
        print_diagnosis(d);
    }
    return bwf_diagnosis_is_complete(diagnosis.get()) != 0 ? kExitOk : kExitNegative;
}

// A registry name, or else a path to a family JSON document.
int load_family(const std::string& source, bool diagnostic, FamilyPtr& out) {
    bwf_family* raw = nullptr;
    bwf_status s = bwf_family_load_registry(source.c_str(), &raw);
    if (s == BWF_ERR_UNKNOWN_NAME) {
        std::ifstream in(source);
        if (!in) {
            std::cerr << "error: " << source << " is neither a registry family nor a readable file\n";
            return kExitUsage;
        }
        std::ostringstream text;
        text << in.rdbuf();
        s = bwf_family_load_json(text.str().c_str(), diagnostic ? 1 : 0, &raw);
    }
    if (s != BWF_OK) {
        return report_error(s);
    }
    out.reset(raw);
    return kExitOk;
}

void print_scan(const Json& r) {
    std::cout << "family " << r["family"].get<std::string>() << ", seed " << r["seed"].get<std::string>() << "\n";
    if (r["mode"] == "range") {
        std::cout << "range [" << r["range"]["lo"].get<std::string>() << ", " << r["range"]["hi"].get<std::string>()
                  << "]\n";
    } else {
        std::cout << "target " << r["bits"] << " bits, " << r["count"] << " hit(s) wanted, |x0| window ["
                  << r["window"]["lo"].get<std::string>() << ", " << r["window"]["hi"].get<std::string>() << "]"
                  << (r["exhausted"].get<bool>() ? ", window exhausted" : "") << "\n";
    }
    std::cout << "scanned " << r["scanned"] << ", hits " << r["hit_count"] << ", supersingular hits "
              << r["supersingular_hits"] << "\n";
    for (const Json& h : r["hits"]) {
        std::cout << "hit x0 = " << h["x0"].get<std::string>() << "\n"
                  << "  t0 = " << h["t0"].get<std::string>() << "\n"
                  << "  r0 = " << h["r0"].get<std::string>() << "  (" << h["r_bits"] << " bits)\n"
                  << "  q0 = " << h["q0"].get<std::string>() << "  (" << h["q_bits"] << " bits)\n"
                  << "  y0 = " << h["y0"].get<std::string>() << "\n"
                  << "  h0 = " << h["h0"].get<std::string>() << "\n"
                  << "  embedding degree set = " << h["embedding_degree_set"].dump() << "\n"
                  << "  log q0 / log r0 = " << std::setprecision(12) << h["rho_numeric"].get<double>() << "\n"
                  << "  k < log2(r0)/8: " << (h["k_bound_ok"].get<bool>() ? "yes" : "no")
                  << ", r0 >= sqrt(q0): " << (h["r_at_least_sqrt_q"].get<bool>() ? "yes" : "no")
                  << ", primality: " << h["primality"].get<std::string>() << "\n";
    }
    for (const char* group : {"skipped", "near_misses"}) {
        if (r[group].empty()) continue;
        std::cout << (std::string(group) == "skipped" ? "skipped (outside integrality profile):" : "near misses:")
                  << "\n";
        for (const auto& [reason, count] : r[group].items()) std::cout << "  " << reason << ": " << count << "\n";
    }
}

void print_reproduction(const std::string& target, const Json& r) {
    if (target == "theorem1") {
        for (const Json& rep : r["reports"]) {
            std::cout << "k = " << rep["k"] << "\n"
                      << "  sqrt(-D) in Q(zeta_k), D = " << rep["D"] << ": q = "
                      << rep["supersingular_q"].get<std::string>() << " = " << rep["square_constant"].get<std::string>()
                      << " * (" << rep["square_root"].get<std::string>() << ")^2"
                      << (rep["reducible"].get<bool>() ? "  -> constant x square, not irreducible" : "") << "\n"
                      << "  otherwise: q = " << rep["noncyclotomic_q"].get<std::string>() << ", 4q mod 4 by X mod 4:";
            for (const Json& row : rep["residue_table"]) {
                std::cout << " " << row["X_mod_4"].get<std::string>() << "->" << row["four_q_mod_4"].get<std::string>();
            }
            std::cout << (rep["never_integral"].get<bool>() ? "  -> never integral" : "") << "\n"
                      << "  certified: " << (rep["certified"].get<bool>() ? "yes" : "no") << "\n";
        }
        std::cout << "forced-form obstruction " << (r["certified"].get<bool>() ? "certified" : "NOT certified") << "\n";
        return;
    }
    if (target == "theorem3-scan") {
        for (const Json& o : r["outcomes"]) {
            std::cout << o["label"].get<std::string>() << ": ";
            if (o.contains("error")) {
                std::cout << "not constructed (" << o["error"].get<std::string>() << ")\n";
                continue;
            }
            std::cout << "rho = " << (o["rho"].is_null() ? std::string("undefined") : o["rho"].get<std::string>())
                      << ", complete = " << (o["is_complete_family"].get<bool>() ? "yes" : "no")
                      << ", ideal = " << (o["ideal"].get<bool>() ? "yes" : "no")
                      << (o["excluded"].get<bool>() ? " (deg r = 2 deg t)" : "") << "\n";
        }
        std::cout << r["constructed"] << " of " << r["catalog_size"] << " catalog entries constructed; "
                  << (r["no_ideal"].get<bool>() ? "no ideal family found" : "IDEAL FAMILY FOUND") << "\n";
        return;
    }
    if (r["matches"].get<bool>()) {
        std::cout << "reconstructed = registry\n";
        print_family(r["reconstructed"]);
    } else {
        std::cout << "reconstructed != registry\n";
        for (const Json& d : r["mismatches"]) {
            std::cout << "  " << d["field"].get<std::string>() << ": registry " << d["expected"].get<std::string>()
                      << ", reconstructed " << d["actual"].get<std::string>() << "\n";
        }
    }
}

int run_cyclotomic(long k) {
    if (k < 1) {
        std::cerr << "error: k must be at least 1\n";
        return kExitUsage;
    }
    char* out = nullptr;
    if (const bwf_status s = bwf_cyclotomic(static_cast<unsigned>(k), &out); s != BWF_OK) return report_error(s);
    std::cout << take(out) << "\n";
    return kExitOk;
}

struct ConstructArgs {
    long k = 0;
    long D = 0;
    std::string r, zeta;
    std::optional<std::string> sqrt;
    bool json = false;
};

int run_construct(const ConstructArgs& a) {
    if (a.k < 1 || a.D < 1) {
        std::cerr << "error: --k and --D must be positive\n";
        return kExitUsage;
    }
    bwf_family* raw = nullptr;
    const bwf_status s = bwf_family_construct(static_cast<unsigned>(a.k), a.D, a.r.c_str(), a.zeta.c_str(),
                                              a.sqrt ? a.sqrt->c_str() : nullptr, &raw);
    if (s != BWF_OK) return report_error(s);
    const FamilyPtr family(raw);
    return diagnose(family.get(), a.json);
}

int run_validate(const std::string& source, bool json) {
    FamilyPtr family;
    if (const int code = load_family(source, true, family); code != kExitOk) return code;
    return diagnose(family.get(), json);
}

struct InstantiateArgs {
    std::string family;
    std::optional<std::string> x_start, x_end;
    std::optional<long> bits, count;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool json = false;
};

int run_instantiate(const InstantiateArgs& a) {
    const bool range = a.x_start || a.x_end;
    const bool bits = a.bits || a.count;
    if (range == bits || (range && !(a.x_start && a.x_end))) {
        std::cerr << "error: give either --x-start and --x-end, or --bits (with optional --count)\n";
        return kExitUsage;
    }
    if (bits && (!a.bits || *a.bits < 0 || a.count.value_or(1) < 0)) {
        std::cerr << "error: --bits is required and must be nonnegative\n";
        return kExitUsage;
    }
    FamilyPtr family;
    if (const int code = load_family(a.family, false, family); code != kExitOk) return code;

    bwf_scan* raw = nullptr;
    const bwf_status s =
        range ? bwf_scan_range(family.get(), a.x_start->c_str(), a.x_end->c_str(), a.seed, a.threads, &raw)
              : bwf_scan_bits(family.get(), static_cast<unsigned>(*a.bits), static_cast<unsigned>(a.count.value_or(1)),
                              a.seed, a.threads, &raw);
    if (s != BWF_OK) return report_error(s);
    const std::unique_ptr<bwf_scan, ScanDeleter> scan(raw);
    char* text = nullptr;
    if (const bwf_status e = bwf_scan_to_json(scan.get(), &text); e != BWF_OK) return report_error(e);
    const Json report = parse_payload(take(text));
    if (a.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        print_scan(report);
    }
    return kExitOk;
}

int run_reproduce(const std::string& target, bool json) {
    char* text = nullptr;
    int passed = 0;
    if (const bwf_status s = bwf_reproduce(target.c_str(), &text, &passed); s != BWF_OK) return report_error(s);
    const Json report = parse_payload(take(text));
    if (json) {
        std::cout << report.dump(2) << "\n";
    } else {
        print_reproduction(target, report);
    }
    if (passed != 0) return kExitOk;
    // A registry family that the constructor cannot reproduce is a bug.
    return (target == "theorem1" || target == "theorem3-scan") ? kExitNegative : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brezing-Weng pairing-friendly curve families"};
    app.set_version_flag("--version", std::string(bwf_version()));
    app.require_subcommand(1);

    long cyclo_k = 0;
    auto* cyclo = app.add_subcommand("cyclotomic", "Print the k-th cyclotomic polynomial");
    cyclo->add_option("k", cyclo_k, "Order k >= 1")->required();

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "Build a family from a field presentation and validate it");
    construct->add_option("--k", construct_args.k, "Embedding degree")->required();
    construct->add_option("--D", construct_args.D, "CM discriminant (square-free, positive)")->required();
    construct->add_option("--r", construct_args.r, "Irreducible r(x) defining the field")->required();
    construct->add_option("--zeta", construct_args.zeta, "Image of a primitive k-th root of unity")->required();
    construct->add_option("--sqrt", construct_args.sqrt, "Square root of -D in the field");
    construct->add_flag("--json", construct_args.json, "Emit JSON");

    std::string validate_source;
    bool validate_json = false;
    auto* validate = app.add_subcommand("validate", "Check the complete-family conditions");
    validate->add_option("family", validate_source, "Registry name or family JSON file")->required();
    validate->add_flag("--json", validate_json, "Emit JSON");

    InstantiateArgs inst;
    auto* instantiate = app.add_subcommand("instantiate", "Search integer points for certified curve parameters");
    instantiate->add_option("family", inst.family, "Registry name or family JSON file")->required();
    instantiate->add_option("--x-start", inst.x_start, "First x0 of a range scan");
    instantiate->add_option("--x-end", inst.x_end, "Last x0 of a range scan");
    instantiate->add_option("--bits", inst.bits, "Target bit length of r(x0)");
    instantiate->add_option("--count", inst.count, "Hits wanted in bit-targeted mode (default 1)");
    instantiate->add_option("--seed", inst.seed, "Primality seed");
    instantiate->add_option("--threads", inst.threads, "Worker threads (0: all cores)");
    instantiate->add_flag("--json", inst.json, "Emit JSON");

    std::string target;
    bool reproduce_json = false;
    auto* reproduce = app.add_subcommand("reproduce", "Reproduce a registry family or an obstruction check");
    reproduce->add_option("target", target, "bn | example-k4-d2 | example-k6-d1 | theorem1 | theorem3-scan")
        ->required();
    reproduce->add_flag("--json", reproduce_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cyclo) return run_cyclotomic(cyclo_k);
        if (*construct) return run_construct(construct_args);
        if (*validate) return run_validate(validate_source, validate_json);
        if (*instantiate) return run_instantiate(inst);
        if (*reproduce) return run_reproduce(target, reproduce_json);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
