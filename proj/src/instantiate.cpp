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

#include "bwfam/instantiate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "bwfam/error.hpp"

namespace bwfam {

const char* to_string(FailureReason reason) noexcept {
    switch (reason) {
        case FailureReason::kRNonIntegral: return "r_non_integral";
        case FailureReason::kQNonIntegral: return "q_non_integral";
        case FailureReason::kTNonIntegral: return "t_non_integral";
        case FailureReason::kYNonIntegral: return "y_non_integral";
        case FailureReason::kRNotPositive: return "r_not_positive";
        case FailureReason::kRComposite: return "r_composite";
        case FailureReason::kQNotPositive: return "q_not_positive";
        case FailureReason::kQComposite: return "q_composite";
        case FailureReason::kQPrimePower: return "q_prime_power";
        case FailureReason::kGcdTQ: return "gcd_t_q";
        case FailureReason::kOrderNotDivisible: return "r_not_dividing_order";
        case FailureReason::kCmEquation: return "cm_equation";
        case FailureReason::kEmbeddingDegree: return "embedding_degree";
    }
    return "unknown";
}

namespace {

std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

// Per-point primality seed, so results never depend on how a scan is split.
std::uint64_t point_seed(std::uint64_t seed, const Integer& x0) {
    std::uint64_t h = mix(seed);
    for (char c : x0.get_str(16)) h = mix(h ^ static_cast<unsigned char>(c));
    return h;
}

double log_of(const Integer& n) {
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

Instantiation fail(FailureReason reason) { return {std::nullopt, reason}; }

std::optional<Integer> integral_value(const QPoly& f, const Integer& x0) {
    const Rational v = f.eval(Rational(x0));
    if (!v.is_integer()) return std::nullopt;
    return v.numerator();
}

}  // namespace

Instantiation instantiate_at(const FamilyCandidate& c, const Integer& x0, std::uint64_t seed) {
    const auto r0 = integral_value(c.r, x0);
    if (!r0) return fail(FailureReason::kRNonIntegral);
    const auto q0 = integral_value(c.q, x0);
    if (!q0) return fail(FailureReason::kQNonIntegral);
    const auto t0 = integral_value(c.t, x0);
    if (!t0) return fail(FailureReason::kTNonIntegral);
    const auto y0 = integral_value(c.y, x0);
    if (!y0) return fail(FailureReason::kYNonIntegral);

    const std::uint64_t s = point_seed(seed, x0);
    if (sgn(*r0) <= 0) return fail(FailureReason::kRNotPositive);
    const PrimalityResult r_prime = test_prime(*r0, s);
    if (!r_prime.prime) return fail(FailureReason::kRComposite);
    if (sgn(*q0) <= 0) return fail(FailureReason::kQNotPositive);
    const PrimalityResult q_prime = test_prime(*q0, s);
    if (!q_prime.prime) {
        return fail(is_prime_power(*q0, s) ? FailureReason::kQPrimePower : FailureReason::kQComposite);
    }
    if (gcd(*t0, *q0) != 1) return fail(FailureReason::kGcdTQ);

    const Integer order = *q0 + 1 - *t0;
    if (mpz_divisible_p(order.get_mpz_t(), r0->get_mpz_t()) == 0) return fail(FailureReason::kOrderNotDivisible);
    if (Integer(*y0 * *y0 * c.D) != Integer(4 * *q0 - *t0 * *t0)) return fail(FailureReason::kCmEquation);

    std::vector<unsigned> hits;
    const Integer q_mod = *q0 % *r0;
    Integer power = 1;
    for (unsigned i = 1; i <= c.k; ++i) {
        power = power * q_mod % *r0;
        if (power == 1 % *r0) hits.push_back(i);
    }
    if (hits != std::vector<unsigned>{c.k}) return fail(FailureReason::kEmbeddingDegree);

    CurveParams p;
    p.x0 = x0;
    p.t0 = *t0;
    p.r0 = *r0;
    p.q0 = *q0;
    p.y0 = abs(*y0);
    p.h0 = order / *r0;
    p.k = c.k;
    p.D = c.D;
    const double log_r = log_of(*r0);
    p.rho_numeric = log_of(*q0) / log_r;
    p.k_bound_ok = static_cast<double>(c.k) < (log_r / std::log(2.0)) / 8.0;
    p.r_at_least_sqrt_q = Integer(*r0 * *r0) >= *q0;
    p.supersingular_boundary = *t0 == 2;
    p.embedding_degree_set = std::move(hits);
    p.regime = (r_prime.regime == PrimalityRegime::kProbabilistic || q_prime.regime == PrimalityRegime::kProbabilistic)
                   ? PrimalityRegime::kProbabilistic
                   : PrimalityRegime::kDeterministic;
    return {std::move(p), std::nullopt};
}

std::uint64_t ScanReport::accounted() const {
    std::uint64_t n = hits.size();
    for (const auto& [reason, count] : skipped) n += count;
    for (const auto& [reason, count] : near_misses) n += count;
    return n;
}

namespace {

unsigned worker_count(const ScanOptions& options, std::size_t work) {
    unsigned n = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

struct PointOutcome {
    bool skipped = false;
    Instantiation result;
};

class PointEvaluator {
   public:
    PointEvaluator(const FamilyCandidate& c, std::uint64_t seed)
        : family_(c), seed_(seed), r_profile_(integrality_profile(c.r)), q_profile_(integrality_profile(c.q)) {}

    PointOutcome operator()(const Integer& x0) const {
        if (!r_profile_.admits(x0)) return {true, fail(FailureReason::kRNonIntegral)};
        if (!q_profile_.admits(x0)) return {true, fail(FailureReason::kQNonIntegral)};
        return {false, instantiate_at(family_, x0, seed_)};
    }

   private:
    const FamilyCandidate& family_;
    std::uint64_t seed_;
    IntegralityProfile r_profile_;
    IntegralityProfile q_profile_;
};

void tally(ScanReport& report, const PointOutcome& outcome) {
    ++report.scanned;
    if (outcome.result.ok()) {
        if (outcome.result.params->supersingular_boundary) ++report.supersingular_hits;
        report.hits.push_back(*outcome.result.params);
    } else if (outcome.skipped) {
        ++report.skipped[*outcome.result.failure];
    } else {
        ++report.near_misses[*outcome.result.failure];
    }
}

// Evaluates points in parallel, preserving input order in the output.
std::vector<PointOutcome> evaluate_all(const PointEvaluator& eval, const std::vector<Integer>& points,
                                       const ScanOptions& options) {
    std::vector<PointOutcome> out(points.size());
    const unsigned workers = worker_count(options, points.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = eval(points[i]);
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < points.size(); i += workers) out[i] = eval(points[i]);
        });
    }
    pool.clear();  // joins
    return out;
}

void require_scannable(const FamilyCandidate& c) {
    if (c.r.is_zero() || c.q.is_zero()) throw Error(ErrorCode::kInvalidArgument, "family has a zero r(x) or q(x)");
}

}  // namespace

ScanReport scan_range(const FamilyCandidate& c, const Integer& lo, const Integer& hi, const ScanOptions& options) {
    if (lo > hi) throw Error(ErrorCode::kInvalidArgument, "scan range is empty (lo > hi)");
    require_scannable(c);
    ScanReport report;
    report.mode = ScanReport::Mode::kRange;
    report.family_name = c.name;
    report.lo = lo;
    report.hi = hi;
    report.seed = options.seed;

    const PointEvaluator eval(c, options.seed);
    constexpr std::size_t kBatch = 4096;
    std::vector<Integer> batch;
    batch.reserve(kBatch);
    Integer x = lo;
    while (x <= hi) {
        batch.clear();
        for (; x <= hi && batch.size() < kBatch; ++x) batch.push_back(x);
        for (const auto& outcome : evaluate_all(eval, batch, options)) tally(report, outcome);
    }
    std::sort(report.hits.begin(), report.hits.end(),
              [](const CurveParams& a, const CurveParams& b) { return a.x0 < b.x0; });
    return report;
}

namespace {

// floor((num/den)^(1/n)) for num/den >= 0.
Integer rational_root_floor(const Integer& num, const Integer& den, unsigned long n) {
    Integer v = num / den;
    Integer root;
    mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
    return root;
}

}  // namespace

ScanReport scan_bits(const FamilyCandidate& c, unsigned bits, unsigned count, const ScanOptions& options) {
    if (bits < 8) throw Error(ErrorCode::kInvalidArgument, "bits must be at least 8");
    if (count < 1) throw Error(ErrorCode::kInvalidArgument, "count must be at least 1");
    require_scannable(c);
    if (c.r.is_constant() || c.r.leading().sign() <= 0) {
        throw Error(ErrorCode::kInvalidArgument, "bit targeting needs a nonconstant r(x) with positive leading coefficient");
    }

    ScanReport report;
    report.mode = ScanReport::Mode::kBits;
    report.family_name = c.name;
    report.bits = bits;
    report.count = count;
    report.seed = options.seed;

    // r(x) ~ lead * x^n, so |x0| ~ (2^bits / lead)^(1/n).
    const unsigned long n = c.r.deg();
    const Integer lead_num = c.r.leading().numerator();
    const Integer lead_den = c.r.leading().denominator();
    const Integer two = 2;
    const Integer center = rational_root_floor(pow(two, bits) * lead_den, lead_num, n);
    const Integer lower_value = pow(two, bits - 1);
    const Integer upper_value = pow(two, bits + 1);
    Integer x_lo = rational_root_floor(lower_value * lead_den, lead_num, n) - 2;
    if (sgn(x_lo) < 0) x_lo = 0;
    const Integer x_hi = rational_root_floor(upper_value * lead_den, lead_num, n) + 2;
    report.lo = x_lo;
    report.hi = x_hi;

    auto in_window = [&](const Integer& x0) {
        const Rational v = c.r.eval(Rational(x0));
        return v >= Rational(lower_value) && v <= Rational(upper_value);
    };

    // Magnitudes outward from the center, each tried as +m then -m.
    Integer distance = 0;
    auto next_batch = [&](std::vector<Integer>& out, std::size_t want) {
        while (out.size() < want) {
            const Integer up = center + distance;
            const Integer down = center - distance;
            if (up > x_hi && down < x_lo) return false;
            std::vector<Integer> magnitudes;
            if (up <= x_hi) magnitudes.push_back(up);
            if (sgn(distance) > 0 && down >= x_lo) magnitudes.push_back(down);
            for (const Integer& m : magnitudes) {
                if (in_window(m)) out.push_back(m);
                if (sgn(m) != 0 && in_window(Integer(-m))) out.push_back(-m);
            }
            ++distance;
        }
        return true;
    };

    const PointEvaluator eval(c, options.seed);
    const std::size_t batch_size = 16 * static_cast<std::size_t>(worker_count(options, 16));
    std::vector<Integer> batch;
    while (report.hits.size() < count) {
        batch.clear();
        const bool more = next_batch(batch, batch_size);
        const auto outcomes = evaluate_all(eval, batch, options);
        for (const auto& outcome : outcomes) {
            if (report.hits.size() >= count) break;
            tally(report, outcome);
        }
        if (!more) {
            report.exhausted = report.hits.size() < count;
            break;
        }
    }
    return report;
}

}  // namespace bwfam
