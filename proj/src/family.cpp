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

#include "bwfam/family.hpp"

#include <algorithm>
#include <utility>

#include "bwfam/error.hpp"
#include "bwfam/integrality.hpp"
#include "bwfam/irreducibility.hpp"

namespace bwfam {

bool is_squarefree(long n) {
    if (n <= 0) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Square roots of -D

std::span<const SqrtMinusDRule> sqrt_minus_d_table() {
    static const std::vector<SqrtMinusDRule> table{
        {3, 3, QPoly{1, 2}},           // 2z + 1
        {4, 1, QPoly{0, 1}},           // z
        {6, 3, QPoly{-1, 2}},          // 2z - 1
        {8, 1, QPoly{0, 0, 1}},        // z^2
        {8, 2, QPoly{0, 1, 0, 1}},     // z + z^3
        {12, 1, QPoly{0, 0, 0, 1}},    // z^3
        {12, 3, QPoly{-1, 0, 2}},      // 2z^2 - 1
    };
    return table;
}

const SqrtMinusDRule* find_sqrt_rule(unsigned k, long D) {
    for (const auto& rule : sqrt_minus_d_table()) {
        if (rule.k == k && rule.D == D) return &rule;
    }
    return nullptr;
}

namespace {

ResidueElement positive_leading(const ResidueElement& e) {
    if (!e.is_zero() && e.representative().leading().sign() < 0) return -e;
    return e;
}

ResidueElement apply_rule(const SqrtMinusDRule& rule, const ResidueElement& root) {
    ResidueElement s = positive_leading(root.substitute_into(rule.expression));
    if (!verify_sqrt(s, rule.D)) {
        throw Error(ErrorCode::kInconsistent, "tabulated square root of -" + std::to_string(rule.D) +
                                                  " failed at a verified root of unity");
    }
    return s;
}

}  // namespace

ResidueElement sqrt_minus_d(unsigned k, long D, const ZetaImage& z) {
    const SqrtMinusDRule* rule = find_sqrt_rule(k, D);
    if (rule == nullptr) {
        throw Error(ErrorCode::kNoSqrtRule, "no tabulated square root of -" + std::to_string(D) + " for k = " +
                                                std::to_string(k) + "; supply one explicitly");
    }
    if (z.k() != k) throw Error(ErrorCode::kInvalidArgument, "root of unity order does not match k");
    return apply_rule(*rule, z.z());
}

bool verify_sqrt(const ResidueElement& s, long D) {
    return s * s == s.ring().element(QPoly::constant(Rational(-D)));
}

std::optional<ResidueElement> find_sqrt_minus_d(long D, const ZetaImage& z) {
    if (find_sqrt_rule(z.k(), D) != nullptr) return sqrt_minus_d(z.k(), D, z);

    const ResidueRing& ring = z.ring();
    std::vector<ResidueElement> roots{z.z()};
    for (unsigned j = 2; j < z.k(); ++j) roots.push_back(z.z().pow(j));
    ResidueElement power = ring.one();
    for (unsigned j = 1; j <= 24; ++j) {
        power = power * ring.generator();
        roots.push_back(power);
    }
    for (const auto& w : roots) {
        for (const auto& rule : sqrt_minus_d_table()) {
            if (rule.D != D) continue;
            if (!w.substitute_into(cyclotomic(rule.k)).is_zero()) continue;
            return apply_rule(rule, w);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Construction

FamilyCandidate FamilyCandidate::from_parts(unsigned k, long D, QPoly t, QPoly r, QPoly q, QPoly y, QPoly h,
                                            bool diagnostic) {
    FamilyCandidate c{k, D, std::move(t), std::move(r), std::move(q), std::move(y), std::move(h), {}, {}, {}};
    if (diagnostic) return c;
    if (c.r.is_constant() || c.r.leading().sign() < 0) {
        throw Error(ErrorCode::kInconsistent, "r must be nonconstant with a positive leading coefficient");
    }
    if (!(c.h * c.r == c.q + QPoly::constant(1) - c.t)) {
        throw Error(ErrorCode::kInconsistent, "h*r != q + 1 - t",
                    (c.q + QPoly::constant(1) - c.t - c.h * c.r).to_string());
    }
    if (k == 0) throw Error(ErrorCode::kInconsistent, "k must be positive");
    const QPoly phi_t = cyclotomic(k).compose(c.t - QPoly::constant(1));
    const QPoly rem = divmod(phi_t, c.r).remainder;
    if (!rem.is_zero()) throw Error(ErrorCode::kInconsistent, "r does not divide Phi_k(t-1)", rem.to_string());
    const QPoly residual = c.q * Rational(4) - c.t * c.t - c.y * c.y * Rational(D);
    if (!residual.is_zero()) throw Error(ErrorCode::kInconsistent, "D*y^2 != 4q - t^2", residual.to_string());
    return c;
}

FamilyCandidate bw_construct(unsigned k, long D, const ZetaImage& z, const std::optional<ResidueElement>& s_in) {
    if (!is_squarefree(D)) {
        throw Error(ErrorCode::kInvalidArgument, "D must be a square-free positive integer, got " + std::to_string(D));
    }
    if (k != z.k()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "zeta image has order " + std::to_string(z.k()) + " but k = " + std::to_string(k));
    }
    const ResidueRing& ring = z.ring();

    std::optional<ResidueElement> s;
    if (s_in) {
        if (!(s_in->ring() == ring)) throw Error(ErrorCode::kRingMismatch, "square root lives in a different ring");
        if (!verify_sqrt(*s_in, D)) {
            throw Error(ErrorCode::kBadSqrt,
                        s_in->representative().to_string() + " does not square to -" + std::to_string(D),
                        (*s_in * *s_in).representative().to_string());
        }
        s = s_in;
    } else {
        s = find_sqrt_minus_d(D, z);
        if (!s) {
            throw Error(ErrorCode::kNoSqrtRule, "no square root of -" + std::to_string(D) + " found for k = " +
                                                    std::to_string(k) + "; supply one explicitly");
        }
    }

    const ResidueElement one = ring.one();
    const QPoly t = (z.z() + one).representative();
    const ResidueElement y_elem = (z.z() - one) * *s * Rational(-1, D);
    QPoly y = y_elem.representative();
    if (!y.is_zero() && y.leading().sign() < 0) y = -y;

    const QPoly q = (t * t + y * y * Rational(D)) / Rational(4);

    QPoly r = ring.modulus();
    if (r.leading().sign() < 0) r = -r;
    DivMod hr = divmod(q + QPoly::constant(1) - t, r);
    if (!hr.remainder.is_zero()) {
        throw Error(ErrorCode::kInconsistent, "q + 1 - t is not divisible by r", hr.remainder.to_string());
    }
    FamilyCandidate c{k, D, t, std::move(r), q, std::move(y), std::move(hr.quotient), {}, {}, {}};
    c.zeta = z.z().representative();
    return c;
}

// ---------------------------------------------------------------------------
// Validation

const char* to_string(ConditionStatus status) noexcept {
    switch (status) {
        case ConditionStatus::kPass: return "pass";
        case ConditionStatus::kFail: return "fail";
        case ConditionStatus::kUnknown: return "unknown";
    }
    return "unknown";
}

namespace {

ConditionResult check_represents_primes(const QPoly& f, const char* name) {
    ConditionResult out;
    const std::string who = std::string(name) + "(x)";
    if (f.is_zero()) return {ConditionStatus::kFail, who + " is zero", "0"};
    PrimesVerdict v;
    try {
        v = represents_primes(f);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::kInconclusive) throw;
        return {ConditionStatus::kUnknown, who + ": " + e.what(), {}};
    }
    if (v.verdict) return {ConditionStatus::kPass, who + " represents primes", {}};
    out.status = ConditionStatus::kFail;
    if (!v.nonconstant) {
        out.summary = who + " is constant";
        out.witness = f.to_string();
    } else if (!v.represents_integers) {
        const IntegralityProfile p = integrality_profile(f);
        out.summary = who + " takes no integer value";
        out.witness = "no residue modulo " + to_string(p.modulus) + " gives an integer";
    } else if (!v.irreducible) {
        out.summary = who + " is reducible";
        out.witness = v.factor ? v.factor->to_string() : std::string();
    } else if (!v.positive_leading) {
        out.summary = who + " has a negative leading coefficient";
        out.witness = f.leading().to_string();
    } else {
        out.summary = who + " has a common value divisor";
        out.witness = "value gcd " + to_string(v.value_gcd);
    }
    return out;
}

}  // namespace

FamilyDiagnosis validate(const FamilyCandidate& c) {
    FamilyDiagnosis d;
    d.conditions[0] = check_represents_primes(c.r, "r");
    d.conditions[1] = check_represents_primes(c.q, "q");

    if (c.r.is_zero()) {
        d.conditions[2] = {ConditionStatus::kFail, "r(x) is zero", "0"};
        d.conditions[3] = {ConditionStatus::kFail, "r(x) is zero", "0"};
    } else {
        const DivMod hr = divmod(c.q + QPoly::constant(1) - c.t, c.r);
        if (hr.remainder.is_zero()) {
            d.conditions[2] = {ConditionStatus::kPass, "h(x) = " + hr.quotient.to_string(), {}};
            if (!(hr.quotient == c.h)) {
                d.notes.push_back("stored h(x) = " + c.h.to_string() + " differs from (q+1-t)/r = " +
                                  hr.quotient.to_string());
            }
        } else {
            d.conditions[2] = {ConditionStatus::kFail, "r(x) does not divide q(x)+1-t(x)",
                               "remainder " + hr.remainder.to_string()};
        }
        if (c.k == 0) {
            d.conditions[3] = {ConditionStatus::kFail, "k must be positive", {}};
        } else {
            const QPoly rem = divmod(cyclotomic(c.k).compose(c.t - QPoly::constant(1)), c.r).remainder;
            if (rem.is_zero()) {
                d.conditions[3] = {ConditionStatus::kPass, "r(x) divides Phi_" + std::to_string(c.k) + "(t(x)-1)", {}};
            } else {
                d.conditions[3] = {ConditionStatus::kFail,
                                   "r(x) does not divide Phi_" + std::to_string(c.k) + "(t(x)-1)",
                                   "remainder " + rem.to_string()};
            }
        }
    }

    if (!is_squarefree(c.D)) {
        d.conditions[4] = {ConditionStatus::kFail, "D is not a square-free positive integer", std::to_string(c.D)};
    } else {
        const QPoly target = c.q * Rational(4) - c.t * c.t;
        const QPoly residual = target - c.y * c.y * Rational(c.D);
        if (residual.is_zero()) {
            d.conditions[4] = {ConditionStatus::kPass, "D*y(x)^2 = 4q(x)-t(x)^2", {}};
        } else if (auto root = exact_sqrt(target / Rational(c.D))) {
            d.conditions[4] = {ConditionStatus::kPass, "D*y(x)^2 = 4q(x)-t(x)^2 with y(x) = " + root->to_string(), {}};
            d.notes.push_back("stored y(x) = " + c.y.to_string() + " is inconsistent; recovered y(x) = " +
                              root->to_string());
        } else {
            d.conditions[4] = {ConditionStatus::kFail, "(4q(x)-t(x)^2)/D is not a square in Q[x]",
                               "4q-t^2-D*y^2 = " + residual.to_string()};
        }
    }

    d.degrees.t = c.t.degree();
    d.degrees.r = c.r.degree();
    d.degrees.q = c.q.degree();
    d.degrees.y = c.y.degree();
    d.degrees.h = c.h.degree();
    if (c.k > 0) {
        d.degrees.phi_k = totient(c.k);
        if (d.degrees.r && *d.degrees.r % d.degrees.phi_k == 0) d.degrees.n = *d.degrees.r / d.degrees.phi_k;
    }
    d.degrees.deg_r_equals_2deg_t = d.degrees.r && d.degrees.t && *d.degrees.r == 2 * *d.degrees.t;

    if (!c.r.is_constant() && !c.q.is_zero()) {
        d.rho = rho(c);
    } else {
        d.notes.push_back("rho undefined: r(x) constant or q(x) zero");
    }

    d.is_complete_family = std::all_of(d.conditions.begin(), d.conditions.end(),
                                       [](const ConditionResult& r) { return r.status == ConditionStatus::kPass; });
    d.is_ideal = d.is_complete_family && d.rho && *d.rho == Rational(1);
    return d;
}

Rational rho(const FamilyCandidate& c) {
    if (c.r.is_constant()) throw Error(ErrorCode::kInvalidArgument, "rho needs a nonconstant r(x)");
    if (c.q.is_zero()) throw Error(ErrorCode::kInvalidArgument, "rho needs a nonzero q(x)");
    const Rational value(Integer(static_cast<unsigned long>(c.q.deg())), Integer(static_cast<unsigned long>(c.r.deg())));

    // With D > 0 both t^2 and D y^2 have positive leading coefficients, so
    // deg q = 2 max(deg y, deg t) whenever 4q = t^2 + D y^2.
    if (c.D > 0 && c.q * Rational(4) == c.t * c.t + c.y * c.y * Rational(c.D)) {
        std::size_t top = 0;
        if (!c.t.is_zero()) top = std::max(top, c.t.deg());
        if (!c.y.is_zero()) top = std::max(top, c.y.deg());
        if (2 * top != c.q.deg()) throw Error(ErrorCode::kInconsistent, "rho expressions disagree");
    }
    return value;
}

// ---------------------------------------------------------------------------
// Forced forms for k = 3, 4, 6

ForcedForms forced_q_forms(unsigned k) {
    if (k != 3 && k != 4 && k != 6) throw Error(ErrorCode::kInvalidArgument, "forced forms exist only for k = 3, 4, 6");
    const long D = k == 4 ? 1 : 3;

    // sqrt(-D) in Q(zeta_k): take r = Phi_k(X) and zeta = X itself.
    const ResidueRing ring = ResidueRing::create(cyclotomic(k));
    const ZetaImage z = ZetaImage::create(k, ring.generator());
    const FamilyCandidate c = bw_construct(k, D, z);

    // sqrt(-D) outside Q(zeta_k): rho = 1 forces r = Phi_k(X), h = 1/4, and
    // D y^2 = 4 h r - (t - 2)^2 with t = X + 1.
    const QPoly X = QPoly::x();
    const QPoly t = X + QPoly::constant(1);
    const QPoly dy2 = cyclotomic(k) - pow(X - QPoly::constant(1), 2);
    const QPoly q = (t * t + dy2) / Rational(4);
    return {k, D, c.q, q, dy2};
}

ObstructionReport forced_form_obstruction(unsigned k) {
    ObstructionReport report{forced_q_forms(k), {}, {}, false, {}, {}, false, false, false};
    const QPoly& nc = report.forms.noncyclotomic;
    const IntegralityProfile profile = integrality_profile(nc);
    report.profile_modulus = profile.modulus;
    report.never_integral = !profile.represents_integers();
    const QPoly scaled = nc * Rational(profile.modulus);
    for (Integer a = 0; a < profile.modulus; ++a) {
        Integer v = scaled.eval(Rational(a)).numerator() % profile.modulus;
        if (sgn(v) < 0) v += profile.modulus;
        report.residue_table.push_back({a, v});
    }

    const QPoly& ss = report.forms.supersingular;
    report.square_constant = ss.leading();
    if (auto root = exact_sqrt(ss / report.square_constant)) {
        report.square_root = *root;
        report.constant_times_square = !root->is_constant();
    }
    report.reducible = check_irreducible(ss).verdict == Irreducibility::kReducible;
    report.certified = report.never_integral && report.constant_times_square && report.reducible;
    return report;
}

}  // namespace bwfam
