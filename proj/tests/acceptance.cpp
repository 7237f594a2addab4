// Acceptance checks 1-8. Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "icl/analysis.hpp"
#include "icl/construct.hpp"
#include "icl/fixtures.hpp"
#include "icl/lifting.hpp"
#include "test_support.hpp"

using namespace icl;

namespace {

// Runtime ceilings (seconds) and sweep sizes.
constexpr double kGoldenSeconds = 1.0;
constexpr double kSweepSeconds = 30.0;
constexpr double kOracleSeconds = 120.0;
constexpr int kSweepMaxK = 40;
constexpr int kSweepMaxM = 3;
constexpr int kOracleMaxFreeBits = 20;
constexpr int kOracleCrossCheckBits = 12;
constexpr int kCapacityMaxK = 60;
constexpr int kProp1MaxK = 30;
constexpr int kClosureMaxK = 30;
constexpr int kPropertyTrials = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool all_ok = true;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
}

std::string first_failure;

void note_failure(const std::string& what) {
    if (first_failure.empty()) first_failure = what;
}

std::string failure_suffix() {
    std::string s = first_failure.empty() ? "" : "; first failure: " + first_failure;
    first_failure.clear();
    return s;
}

void golden() {
    const auto t0 = Clock::now();
    int passed = 0, total = 0;
    for (const auto& f : demo_fixtures()) {
        ++total;
        const auto rep = demo(f.example, f.m);
        if (rep.passed()) {
            ++passed;
        } else {
            note_failure("example " + std::to_string(f.example) + " m=" + std::to_string(f.m));
        }
    }
    const double secs = seconds_since(t0);
    report(1, "golden reproduction", passed == total && total == 17 && secs < kGoldenSeconds,
           std::to_string(passed) + "/" + std::to_string(total) + " fixtures, " + std::to_string(secs) + " s" +
               failure_suffix());
}

void validity_sweep() {
    const auto t0 = Clock::now();
    long instances = 0, failures = 0;
    for (const auto& desc : icl::testing::family_sweep(kSweepMaxK)) {
        const auto base = construct(desc);
        for (int m = 1; m <= kSweepMaxM; ++m) {
            ++instances;
            const auto p = lift_problem(base.problem, m);
            const auto c = lift_code(base.problem, base.code, m);
            const bool ok = c.length() == static_cast<std::size_t>(desc.k() - desc.d()) && verify(p, c).overall;
            if (!ok) {
                ++failures;
                note_failure(desc.with_m(m).to_string());
            }
        }
    }
    const double secs = seconds_since(t0);
    report(2, "validity sweep", failures == 0 && secs < kSweepSeconds,
           std::to_string(instances) + " instances (K <= 40, m <= 3), " + std::to_string(failures) + " failures, " +
               std::to_string(secs) + " s" + failure_suffix());
}

void oracle() {
    const auto t0 = Clock::now();
    long checked = 0, cross = 0, failures = 0;
    for (const auto& desc : icl::testing::family_sweep(kSweepMaxK)) {
        const auto base = construct_problem_only(desc);
        for (int m = 1; m <= kSweepMaxM; ++m) {
            const auto p = lift_problem(base, m);
            if (p.side_information_size() > static_cast<std::size_t>(kOracleMaxFreeBits)) continue;
            ++checked;
            const auto r = minrank(p, kOracleMaxFreeBits, 0);
            bool ok = r.status == MinrankStatus::exact && r.value == desc.k() - desc.d();
            if (p.side_information_size() <= static_cast<std::size_t>(kOracleCrossCheckBits)) {
                ++cross;
                ok = ok && icl::testing::brute_force_minrank(p) == r.value;
            }
            if (!ok) {
                ++failures;
                note_failure(desc.with_m(m).to_string() + " minrank " + std::to_string(r.value));
            }
        }
    }
    const double secs = seconds_since(t0);
    report(3, "minrank oracle", failures == 0 && checked > 0 && secs < kOracleSeconds,
           std::to_string(checked) + " instances with <= 20 free bits (" + std::to_string(cross) +
               " also brute-forced), " + std::to_string(failures) + " failures, " + std::to_string(secs) + " s" +
               failure_suffix());
}

void capacity_formulas() {
    long checked = 0, failures = 0;
    for (int k = 2; k <= kCapacityMaxK; ++k) {
        for (int d = 1; d <= k - 2; ++d) {
            ++checked;
            if (!(capacity({k, 0, d}) == RationalCapacity{1, k - d})) {
                ++failures;
                note_failure("K=" + std::to_string(k) + " D=" + std::to_string(d));
            }
        }
        for (int u = 0; u <= k - 1; ++u) {
            ++checked;
            if (!(capacity({k, u, k - 1 - u}) == RationalCapacity{1, 1})) {
                ++failures;
                note_failure("K=" + std::to_string(k) + " U=" + std::to_string(u) + " full");
            }
        }
    }
    const bool spot = capacity({21, 0, 17}) == RationalCapacity{1, 4};
    report(4, "capacity formulas", failures == 0 && spot,
           std::to_string(checked) + " values, capacity(21,0,17) = " + capacity({21, 0, 17}).to_string() +
               failure_suffix());
}

void doubling() {
    long checked = 0, failures = 0;
    for (int k = 2; k <= kProp1MaxK; ++k) {
        for (int d = 1; d < k; ++d) {
            if (ClassDescriptor::violation(Family::case1, k, d, std::nullopt)) continue;
            ++checked;
            const auto base = construct(ClassDescriptor::make(Family::case1, k, d));
            const auto lp = lift_problem(base.problem, 2);
            const auto expected = ClassDescriptor::make(Family::case_b, 2 * k, k + d);
            const auto found = classify(lp);
            const bool classified = std::ranges::find(found, expected) != found.end();
            const bool same_code = construct(expected).code == lift_code(base.problem, base.code, 2);
            if (!classified || !same_code) {
                ++failures;
                note_failure("case1 K=" + std::to_string(k) + " D=" + std::to_string(d));
            }
        }
    }
    report(5, "case1 doubled is case-b", failures == 0 && checked > 0,
           std::to_string(checked) + " case1 instances, " + std::to_string(failures) + " failures" + failure_suffix());
}

void closure() {
    long checked = 0, failures = 0;
    for (const auto& desc : icl::testing::family_sweep(kClosureMaxK, true)) {
        if (desc.family() != Family::case2 && desc.family() != Family::case8) continue;
        for (int m = 2; m <= kSweepMaxM; ++m) {
            ++checked;
            try {
                const auto res = check_closure(desc, m);
                const auto got = construct_problem_only(res.output);
                const auto want = lift_problem(construct_problem_only(desc), m);
                const bool ok = res.output.family() == desc.family() && got == want &&
                                !ClassDescriptor::violation(res.output.family(), res.output.k(), res.output.d(),
                                                            res.output.lambda());
                if (!ok) {
                    ++failures;
                    note_failure(desc.to_string() + " m=" + std::to_string(m));
                }
            } catch (const std::exception& e) {
                ++failures;
                note_failure(desc.to_string() + " m=" + std::to_string(m) + ": " + e.what());
            }
        }
    }
    report(6, "case2/case8 closure", failures == 0 && checked > 0,
           std::to_string(checked) + " (descriptor, m) pairs, " + std::to_string(failures) + " failures" +
               failure_suffix());
}

bool symmetric_lift(const IndexCodingProblem& base, const IndexCodingProblem& lifted, int m) {
    for (int k = 1; k <= lifted.k(); ++k) {
        auto with_self = lifted.antidote_indices(k);
        with_self.push_back(k);
        for (int j = 0; j < m; ++j) {
            const int other = wrap_index(static_cast<long long>(k) + static_cast<long long>(j) * base.k(), lifted.k());
            auto expect = with_self;
            std::erase(expect, other);
            std::ranges::sort(expect);
            if (lifted.antidote_indices(other) != expect) return false;
        }
    }
    return true;
}

void properties() {
    std::mt19937 rng(20260101);
    std::uniform_int_distribution<int> md(1, 4);
    long failures = 0;
    for (int trial = 0; trial < kPropertyTrials; ++trial) {
        const auto p = icl::testing::random_problem(rng, 16, 5);
        const auto c = icl::testing::random_code(rng, p.k(), 10);
        const int m = md(rng), n = md(rng);
        const auto lp = lift_problem(p, m);
        const auto lc = lift_code(p, c, m);
        const bool ok = lc.length() == c.length() &&
                        lift_problem(lift_problem(p, n), m) == lift_problem(p, m * n) &&
                        lift_code(lift_problem(p, n), lift_code(p, c, n), m) == lift_code(p, c, m * n) &&
                        length_lower_bound(lp) == length_lower_bound(p) && symmetric_lift(p, lp, m);
        if (!ok) {
            ++failures;
            note_failure("trial " + std::to_string(trial));
        }
    }
    report(7, "lifting invariants", failures == 0,
           std::to_string(kPropertyTrials) + " randomized trials, " + std::to_string(failures) + " failures" +
               failure_suffix());
}

} // namespace

int main() {
    golden();
    validity_sweep();
    oracle();
    capacity_formulas();
    doubling();
    closure();
    properties();
    std::printf("NOTE criterion 8: capacity converses are not re-proved here; optimality is checked against the "
                "exhaustive minrank oracle only on instances with at most %d free bits (criterion 3).\n",
                kOracleMaxFreeBits);
    return all_ok ? 0 : 1;
}
