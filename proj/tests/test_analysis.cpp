#include <random>

#include "doctest.h"
#include "icl/analysis.hpp"
#include "icl/construct.hpp"
#include "icl/lifting.hpp"
#include "test_support.hpp"

using namespace icl;

namespace {

bool contains(const std::vector<ClassDescriptor>& v, const ClassDescriptor& d) {
    return std::ranges::find(v, d) != v.end();
}

} // namespace

TEST_CASE("verify") {
    const auto ex1 = construct(ClassDescriptor::make(Family::case1, 20, 4));
    const auto r1 = verify(ex1.problem, ex1.code);
    CHECK(r1.overall);
    CHECK(r1.decodable.size() == 20);

    CHECK(verify(IndexCodingProblem::uniform(2, {1}), LinearIndexCode::make(2, {{1, 2}})).overall);

    const auto r3 = verify(IndexCodingProblem::uniform(3, {}), LinearIndexCode::make(3, {{1, 2}}));
    CHECK_FALSE(r3.overall);
    CHECK(r3.failing_receivers() == std::vector<int>{1, 2, 3});

    // without x1+x5, receiver 1 loses its symbol and receiver 17 loses the last link of x17+x13, ..., x5+x1
    auto symbols = ex1.code.symbols();
    symbols.erase(symbols.begin());
    const auto broken = verify(ex1.problem, LinearIndexCode::make(20, symbols));
    CHECK_FALSE(broken.overall);
    CHECK(broken.failing_receivers() == std::vector<int>{1, 17});

    CHECK_THROWS_AS(verify(ex1.problem, LinearIndexCode::make(5, {{1}})), std::invalid_argument);
}

TEST_CASE("property: verify agrees with an augmented-rank oracle") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = icl::testing::random_problem(rng, 10, 4);
        const auto c = icl::testing::random_code(rng, p.k(), 6);
        const auto rep = verify(p, c);
        const auto k = static_cast<std::size_t>(p.k());
        for (int r = 1; r <= p.k(); ++r) {
            // columns: symbols, antidote units; decodable iff appending e_r keeps the rank
            icl::testing::ByteMatrix m(k);
            for (const auto& s : c.symbols()) {
                for (std::size_t i = 0; i < k; ++i) m[i].push_back(0);
                for (int i : s) m[static_cast<std::size_t>(i - 1)].back() = 1;
            }
            for (int j : p.antidote_indices(r)) {
                for (std::size_t i = 0; i < k; ++i) m[i].push_back(i + 1 == static_cast<std::size_t>(j));
            }
            auto with = m;
            for (std::size_t i = 0; i < k; ++i) with[i].push_back(i + 1 == static_cast<std::size_t>(r));
            const bool expected = icl::testing::naive_rank(m) == icl::testing::naive_rank(with);
            REQUIRE(rep.decodable[static_cast<std::size_t>(r - 1)] == expected);
        }
    }
}

TEST_CASE("minrank") {
    SUBCASE("case1 K=3 D=1") {
        const auto p = IndexCodingProblem::uniform(3, {1});
        CHECK(icl::testing::brute_force_minrank(p) == 2);
        const auto r = minrank(p);
        CHECK(r.status == MinrankStatus::exact);
        CHECK(r.value == 2);
        CHECK(r.free_bits == 3);
    }
    SUBCASE("complete side information") {
        CHECK(minrank(IndexCodingProblem::uniform(3, {1, 2})).value == 1);
    }
    SUBCASE("no side information") {
        const auto r = minrank(IndexCodingProblem::uniform(3, {}));
        CHECK(r.value == 3);
        CHECK(r.free_bits == 0);
        CHECK(r.evaluated == 1);
    }
    SUBCASE("lifted case1 K=3 D=1, m=2") {
        const auto p = lift_problem(IndexCodingProblem::uniform(3, {1}), 2);
        CHECK(p == IndexCodingProblem::uniform(6, {1, 3, 4}));
        CHECK(icl::testing::brute_force_minrank(p) == 2);
        const auto r = minrank(p);
        CHECK(r.free_bits == 18);
        CHECK(r.value == 2);
    }
    SUBCASE("no early exit when the bound is not tight") {
        // receiver 1 knows x2 only: bound 2, but receivers 2 and 3 need their own symbols
        const auto p = IndexCodingProblem::per_receiver(3, {{1}, {}, {}});
        CHECK(minrank(p).value == icl::testing::brute_force_minrank(p));
    }
    SUBCASE("budget") {
        const auto p = IndexCodingProblem::uniform(7, {1, 2, 3});
        const auto r = minrank(p, 20);
        CHECK(r.status == MinrankStatus::budget_exceeded);
        CHECK(r.free_bits == 21);
        CHECK(minrank_status_name(r.status) == "budget_exceeded");
        CHECK(minrank(p, 21, 0).value == 4);
    }
}

TEST_CASE("property: minrank matches brute force, serial and parallel") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const auto p = icl::testing::random_problem(rng, 6, 3);
        if (p.side_information_size() > 12) continue;
        CAPTURE(trial);
        const int expected = icl::testing::brute_force_minrank(p);
        const auto serial = minrank(p, 24, 1);
        const auto parallel = minrank(p, 24, 4);
        REQUIRE(serial.value == expected);
        REQUIRE(parallel.value == expected);
        REQUIRE(serial.value >= length_lower_bound(p));
    }
}

TEST_CASE("property: adding an antidote never increases minrank") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 150; ++trial) {
        const auto p = icl::testing::random_problem(rng, 7, 2);
        if (p.k() < 2) continue;
        auto offs = p.all_offsets();
        std::uniform_int_distribution<int> rd(0, p.k() - 1), od(1, p.k() - 1);
        offs[static_cast<std::size_t>(rd(rng))].push_back(od(rng));
        const auto q = IndexCodingProblem::per_receiver(p.k(), offs);
        REQUIRE(minrank(q).value <= minrank(p).value);
    }
}

TEST_CASE("classify") {
    const auto ex1 = construct_problem_only(ClassDescriptor::make(Family::case1, 20, 4));
    const auto found = classify(ex1);
    // lambda = D collapses case8, class-ii and class-iv onto the single offset D
    CHECK(found == std::vector<ClassDescriptor>{ClassDescriptor::make(Family::case1, 20, 4),
                                                ClassDescriptor::make(Family::case8, 20, 4, 4),
                                                ClassDescriptor::make(Family::class_ii, 20, 4, 4),
                                                ClassDescriptor::make(Family::class_iv, 20, 4, 4)});

    const auto lifted = construct_problem_only(ClassDescriptor::make(Family::case1, 10, 2, std::nullopt, 2));
    CHECK(contains(classify(lifted), ClassDescriptor::make(Family::case_b, 20, 12)));
    CHECK(contains(classify(lifted), ClassDescriptor::make(Family::case1, 10, 2, std::nullopt, 2)));

    CHECK(contains(classify(IndexCodingProblem::uniform(6, {2, 4})), ClassDescriptor::make(Family::case2, 6, 4)));
    CHECK(classify(IndexCodingProblem::uniform(7, {1, 3})).empty());
}

TEST_CASE("property: a generated pattern classifies as its own descriptor") {
    for (const auto& desc : icl::testing::family_sweep(20, true)) {
        for (int m = 1; m <= 2; ++m) {
            const auto d = desc.with_m(m);
            CAPTURE(d.to_string());
            REQUIRE(contains(classify(construct_problem_only(d)), d));
        }
    }
}

TEST_CASE("check_closure") {
    const auto c2 = check_closure(ClassDescriptor::make(Family::case2, 6, 4), 2);
    CHECK(c2.output == ClassDescriptor::make(Family::case2, 12, 10));
    CHECK(c2.m == 2);

    CHECK(check_closure(ClassDescriptor::make(Family::case1, 10, 2), 2).output ==
          ClassDescriptor::make(Family::case_b, 20, 12));

    const auto c8 = check_closure(ClassDescriptor::make(Family::case8, 8, 5, 1), 3);
    CHECK(c8.output == ClassDescriptor::make(Family::case8, 24, 21, 1));
    CHECK(construct_problem_only(c8.output).offsets(1) == OffsetSet{1, 4, 5, 8, 9, 12, 13, 16, 17, 20, 21});

    CHECK_THROWS_WITH_AS(check_closure(ClassDescriptor::make(Family::case6, 21, 17, 1), 2),
                         doctest::Contains("no closure theorem"), std::invalid_argument);
    CHECK_THROWS_AS(check_closure(ClassDescriptor::make(Family::case1, 10, 2), 3), std::invalid_argument);
    CHECK_THROWS_AS(check_closure(ClassDescriptor::make(Family::case2, 6, 4), 1), std::invalid_argument);
}
