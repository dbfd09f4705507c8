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

// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bwfam/cyclo_ring.hpp"
#include "bwfam/family.hpp"
#include "bwfam/instantiate.hpp"
#include "bwfam/integrality.hpp"
#include "bwfam/registry.hpp"
#include "bwfam/reproduce.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "support.hpp"

using bwfam::ConditionStatus;
using bwfam::Integer;
using bwfam::QPoly;
using bwfam::Rational;
using nlohmann::json;
using testing::P;

namespace {

// Collects the first few failed expectations of a criterion.
class Checker {
   public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures_;
        if (failures_ <= 5) notes_ << (failures_ > 1 ? "; " : "") << what;
    }
    bool ok() const { return failures_ == 0; }
    std::string notes() const { return notes_.str(); }

   private:
    int failures_ = 0;
    std::ostringstream notes_;
};

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun cli(const std::string& args) {
    const std::string command = std::string(BWFAM_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

json parse_or_null(const std::string& text) {
    return json::parse(text, nullptr, false);
}

bwfam::FamilyCandidate build(unsigned k, long D, const char* r, const char* z) {
    const auto ring = bwfam::ResidueRing::create(P(r));
    return bwfam::bw_construct(k, D, bwfam::ZetaImage::create(k, ring.element(P(z))));
}

bool all_pass(const bwfam::FamilyDiagnosis& d) {
    for (const auto& c : d.conditions) {
        if (c.status != ConditionStatus::kPass) return false;
    }
    return true;
}

bool any_fail(const bwfam::FamilyDiagnosis& d) {
    for (const auto& c : d.conditions) {
        if (c.status == ConditionStatus::kFail) return true;
    }
    return false;
}

void certify_point(Checker& c, const bwfam::FamilyCandidate& f, const bwfam::CurveParams& p) {
    const mpq_class x(p.x0);
    c.expect(oracle::evaluate(testing::to_coeffs(f.t), x) == mpq_class(p.t0), "t(x0)");
    c.expect(oracle::evaluate(testing::to_coeffs(f.r), x) == mpq_class(p.r0), "r(x0)");
    c.expect(oracle::evaluate(testing::to_coeffs(f.q), x) == mpq_class(p.q0), "q(x0)");
    c.expect(oracle::gmp_prime(p.r0) && oracle::gmp_prime(p.q0), "r0 and q0 prime");
    c.expect(f.D * p.y0 * p.y0 == 4 * p.q0 - p.t0 * p.t0, "D y0^2 = 4 q0 - t0^2");
    c.expect(p.q0 + 1 - p.t0 == p.h0 * p.r0, "h0 r0 = q0 + 1 - t0");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.t0.get_mpz_t(), p.q0.get_mpz_t());
    c.expect(g == 1, "gcd(t0, q0) = 1");
    c.expect(oracle::embedding_degree_set(p.q0, p.r0, f.k) == std::vector<unsigned>{f.k}, "embedding degree set");
}

Checker bn_reproduction() {
    Checker c;
    const auto r = cli("construct --k 12 --D 3 --r '36*x^4+36*x^3+18*x^2+6*x+1' --zeta '6*x^2' --json");
    c.expect(r.code == 0, "CLI exit code " + std::to_string(r.code));
    const json doc = parse_or_null(r.out);
    c.expect(!doc.is_discarded(), "CLI output is JSON");
    if (!doc.is_discarded()) {
        const json& f = doc["family"];
        c.expect(f["t"] == "6*x^2+1", "t");
        c.expect(f["r"] == "36*x^4+36*x^3+18*x^2+6*x+1", "r");
        c.expect(f["q"] == "36*x^4+36*x^3+24*x^2+6*x+1", "q");
        c.expect(f["y"] == "6*x^2+4*x+1", "y");
        c.expect(f["h"] == "1", "h");
        c.expect(doc["diagnosis"]["rho"] == "1", "rho");
        for (const auto& cond : doc["diagnosis"]["conditions"]) c.expect(cond["status"] == "pass", "condition");
    }
    const auto family = build(12, 3, "36*x^4+36*x^3+18*x^2+6*x+1", "6*x^2");
    c.expect(family.q == P("36*x^4+36*x^3+24*x^2+6*x+1"), "library q");
    const auto d = bwfam::validate(family);
    c.expect(all_pass(d) && d.rho == Rational(1) && d.is_ideal, "library diagnosis");
    return c;
}

Checker worked_examples() {
    Checker c;
    struct Case {
        unsigned k;
        long D;
        const char* r;
        const char* q;
    };
    for (const Case& e : {Case{4, 2, "x^4+1", "1/4*x^4+x^2+1/4"}, Case{6, 1, "x^4-x^2+1", "1/4*x^4+3/4*x^2+1/4"}}) {
        const std::string label = "k = " + std::to_string(e.k) + ": ";
        const auto r = cli("construct --k " + std::to_string(e.k) + " --D " + std::to_string(e.D) + " --r '" + e.r +
                           "' --zeta 'x^2' --json");
        c.expect(r.code == 1, label + "CLI exit code " + std::to_string(r.code));
        const json doc = parse_or_null(r.out);
        c.expect(!doc.is_discarded() && doc["family"]["y"] == "x" && doc["family"]["q"] == e.q, label + "CLI family");

        const auto family = build(e.k, e.D, e.r, "x^2");
        c.expect(family.y == P("x"), label + "y");
        c.expect(family.q == P(e.q), label + "q");
        const auto d = bwfam::validate(family);
        c.expect(d.conditions[1].status == ConditionStatus::kFail, label + "condition (ii)");
        c.expect(!bwfam::integrality_profile(family.q).represents_integers(), label + "empty profile");
        c.expect(oracle::integral_residues_by_scan(testing::to_coeffs(family.q)).empty(), label + "scan");
        c.expect(!d.is_complete_family, label + "not complete");
    }
    return c;
}

Checker forced_forms() {
    Checker c;
    const auto r = cli("reproduce theorem1 --json");
    c.expect(r.code == 0, "CLI exit code " + std::to_string(r.code));
    const json doc = parse_or_null(r.out);
    c.expect(!doc.is_discarded() && doc["certified"] == true, "CLI certificate");

    const std::array<std::pair<unsigned, const char*>, 3> expected{
        {{3, "1/4*x^2+5/4*x+1/4"}, {4, "1/4*x^2+x+1/4"}, {6, "1/4*x^2+3/4*x+1/4"}}};
    for (const auto& [k, q] : expected) {
        const std::string label = "k = " + std::to_string(k) + ": ";
        const auto report = bwfam::forced_form_obstruction(k);
        c.expect(report.forms.noncyclotomic == P(q), label + "form");
        c.expect(report.never_integral && report.certified, label + "certificate");
        c.expect(report.constant_times_square && report.reducible, label + "supersingular branch");
        const auto four_q = testing::to_coeffs(report.forms.noncyclotomic * Rational(4));
        for (const auto& row : report.residue_table) {
            const mpz_class value = oracle::evaluate(four_q, mpq_class(row.residue)).get_num();
            const mpz_class expected_mod = ((value % 4) + 4) % 4;
            c.expect(expected_mod == row.numerator_mod && row.numerator_mod != 0, label + "residue row");
        }
        c.expect(oracle::integral_residues_by_scan(testing::to_coeffs(report.forms.noncyclotomic)).empty(),
                 label + "scan");
        const auto root = report.square_root;
        c.expect(report.forms.supersingular == root * root * report.square_constant, label + "c g^2");
    }
    return c;
}

Checker catalog_scan() {
    Checker c;
    const auto r = cli("reproduce theorem3-scan --json");
    c.expect(r.code == 0, "CLI exit code " + std::to_string(r.code));
    const json doc = parse_or_null(r.out);
    c.expect(!doc.is_discarded() && doc["no_ideal"] == true, "CLI verdict");

    const auto result = bwfam::reproduce_catalog_scan();
    c.expect(result.outcomes.size() >= 12, "catalog size");
    c.expect(result.no_ideal, "no ideal family");
    bool saw8 = false, saw12 = false;
    for (const auto& o : result.outcomes) {
        const auto& e = o.entry;
        saw8 = saw8 || e.k == 8;
        saw12 = saw12 || e.k == 12;
        c.expect((e.k == 8 && (e.D == 1 || e.D == 2)) || (e.k == 12 && (e.D == 1 || e.D == 3)), e.label + " D");
        c.expect(!o.excluded, e.label + " has deg r = 2 deg t");
        c.expect(!o.ideal, e.label + " ideal");
        if (o.diagnosis) {
            const bool rho_above = o.diagnosis->rho && *o.diagnosis->rho > Rational(1);
            c.expect(rho_above || any_fail(*o.diagnosis), e.label + " neither rho > 1 nor a failing condition");
        }
    }
    c.expect(saw8 && saw12, "both k = 8 and k = 12");
    return c;
}

Checker small_search() {
    Checker c;
    const auto report = bwfam::exhaustive_small_search(3);
    c.expect(report.substitutions > 0 && report.constructed > 0, "search ran");
    c.expect(report.inconclusive == 0, std::to_string(report.inconclusive) + " inconclusive irreducibility checks");
    c.expect(report.ideal.empty(), std::to_string(report.ideal.size()) + " ideal families");
    return c;
}

Checker instantiation() {
    Checker c;
    const auto bn = bwfam::registry_family("bn");
    const auto result = bwfam::instantiate_at(bn, Integer(1));
    c.expect(result.ok(), "x0 = 1 certified");
    if (result.ok()) {
        const auto& p = *result.params;
        c.expect(p.t0 == 7 && p.r0 == 97 && p.q0 == 103 && p.y0 == 11 && p.h0 == 1, "(t, r, q, y, h)");
        c.expect(3 * 121 == 4 * 103 - 49, "3 * 121 = 4 * 103 - 49");
        c.expect(p.embedding_degree_set == std::vector<unsigned>{12}, "embedding degree set");
        certify_point(c, bn, p);
    }
    const auto start = std::chrono::steady_clock::now();
    const auto scan = bwfam::scan_bits(bn, 32, 1);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(!scan.hits.empty(), "32-bit scan hit");
    c.expect(seconds < 30, "32-bit scan took " + std::to_string(seconds) + " s");
    for (const auto& h : scan.hits) certify_point(c, bn, h);
    return c;
}

Checker algebra_suite() {
    Checker c;
    for (unsigned k = 1; k <= 30; ++k) {
        QPoly product = P("1");
        for (unsigned d = 1; d <= k; ++d) {
            if (k % d == 0) product *= bwfam::cyclotomic(d);
        }
        c.expect(product == QPoly::monomial(Rational(1), k) - P("1"), "product identity k = " + std::to_string(k));
    }
    std::mt19937_64 rng(701);
    for (int i = 0; i < 500; ++i) {
        const auto common = oracle::random_coeffs(rng, rng() % 3, 9, 5);
        const QPoly a = testing::to_poly(oracle::multiply(common, oracle::random_coeffs(rng, rng() % 6, 20, 10)));
        const QPoly b = testing::to_poly(oracle::multiply(common, oracle::random_coeffs(rng, rng() % 5, 20, 10)));
        const auto [q, r] = bwfam::divmod(a, b);
        c.expect(q * b + r == a && (r.is_zero() || r.deg() < b.deg()), "divmod law");
        const QPoly g = bwfam::gcd(a, b);
        c.expect(bwfam::divides(g, a) && bwfam::divides(g, b) && g.deg() + 1 >= common.size(), "gcd law");
        const auto e = bwfam::extended_gcd(a, b);
        c.expect(e.g == g && e.u * a + e.v * b == g, "Bezout law");
    }
    for (const char* modulus : {"x^2+1", "x^4+1", "x^4-x^2+1", "36*x^4+36*x^3+18*x^2+6*x+1", "x^6+x^3+1"}) {
        const auto ring = bwfam::ResidueRing::create(P(modulus));
        for (int tested = 0; tested < 200;) {
            const auto a = ring.element(testing::to_poly(oracle::random_coeffs(rng, rng() % ring.degree(), 15, 7)));
            if (a.is_zero()) continue;
            c.expect((a * a.inverse()).is_one(), std::string("inverse law in ") + modulus);
            ++tested;
        }
    }
    for (int i = 0; i < 500; ++i) {
        const QPoly f = testing::to_poly(oracle::random_coeffs(rng, rng() % 7, 40, 10));
        const auto root = bwfam::exact_sqrt(f * f);
        c.expect(root && (*root == f || *root == -f), "sqrt round-trip");
    }
    return c;
}

Checker oracle_equivalence() {
    Checker c;
    std::mt19937_64 rng(801);
    for (int i = 0; i < 200; ++i) {
        const auto f = oracle::random_coeffs(rng, rng() % 7, 30, 12);
        const auto profile = bwfam::integrality_profile(testing::to_poly(f));
        std::vector<long> residues;
        for (const auto& g : profile.good_residues) residues.push_back(g.get_si());
        c.expect(profile.modulus == oracle::denominator_lcm(f) && residues == oracle::integral_residues_by_scan(f),
                 "integrality profile");
    }
    for (int tested = 0; tested < 200;) {
        auto f = oracle::random_coeffs(rng, rng() % 5, 20, 1 + rng() % 6);
        if (tested % 3 == 0) f = oracle::multiply(f, {mpq_class(0), mpq_class(1), mpq_class(1)});
        if (oracle::integral_residues_by_scan(f).empty()) continue;
        c.expect(bwfam::value_gcd(testing::to_poly(f)) == oracle::value_gcd_by_scan(f, -200, 200), "value gcd");
        ++tested;
    }
    for (std::uint64_t n = 0; n < 1000000; ++n) {
        c.expect(bwfam::is_prime(Integer(static_cast<unsigned long>(n))) == oracle::trial_division_prime(n),
                 "is_prime(" + std::to_string(n) + ")");
    }
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double limit_seconds;
        std::function<Checker()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "BN reproduction", 1, bn_reproduction},
        {2, "worked examples for k = 4 and k = 6", 1, worked_examples},
        {3, "forced forms for k = 3, 4, 6", 1, forced_forms},
        {4, "catalog scan for k = 8, 12", 10, catalog_scan},
        {5, "exhaustive small search for k = 3, 4, 6", 60, small_search},
        {6, "instantiation certificate", 30, instantiation},
        {7, "algebra suite", 30, algebra_suite},
        {8, "oracle equivalence", 60, oracle_equivalence},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Checker result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.expect(seconds < criterion.limit_seconds, "over the time limit");
        const bool pass = result.ok();
        if (!pass) ++failed;
        std::printf("criterion %d: %s  %s  (%.3f s, limit %.0f s)%s%s\n", criterion.number, pass ? "PASS" : "FAIL",
                    criterion.name, seconds, criterion.limit_seconds, pass ? "" : "  ",
                    pass ? "" : result.notes().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
