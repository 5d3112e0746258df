#include <gtest/gtest.h>

#include <algorithm>

#include "fibercalc/error.hpp"
#include "fibercalc/ledger.hpp"
#include "oracle/oracles.hpp"

using namespace fibercalc;

namespace {

using R = StabilizationRecord;

}  // namespace

TEST(Ledger, RecordFromCounts) {
    EXPECT_EQ(record_from_counts(FiberState(0, -1), 0, 0), (R{0, 0, 0, 1}));
    EXPECT_EQ(record_from_counts(disk(), 0, 0), (R{0, 0, 0, 0}));
    EXPECT_EQ(record_from_counts(FiberState(-3, -2), 0, 0), (R{0, 0, 2, 2}));
}

TEST(Ledger, RecordFromCountsInfeasible) {
    // alpha_minus must reach H.
    try {
        record_from_counts(FiberState(0, 3), 5, 2);
        FAIL() << "expected Infeasible";
    } catch (const FeasibilityError& e) {
        EXPECT_NE(std::string(e.what()).find("alpha_minus"), std::string::npos);
    }
    // H(mirror) of (-1, -5) is 3, so alpha_plus must reach 3.
    try {
        record_from_counts(FiberState(-1, -5), 2, 0);
        FAIL() << "expected Infeasible";
    } catch (const FeasibilityError& e) {
        EXPECT_NE(std::string(e.what()).find("alpha_plus"), std::string::npos);
    }
    EXPECT_THROW(record_from_counts(disk(), -1, 0), FeasibilityError);
}

TEST(Ledger, FeasibleStabilizations) {
    EXPECT_EQ(feasible_stabilizations(disk(), 1), (std::vector<R>{{0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}}));
    EXPECT_TRUE(feasible_stabilizations(FiberState(0, 3), 2).empty());
    EXPECT_EQ(feasible_stabilizations(FiberState(-3, -2), 0), (std::vector<R>{{0, 0, 2, 2}}));
    EXPECT_TRUE(feasible_stabilizations(disk(), -1).empty());
}

TEST(Ledger, HeightLowerBound) {
    EXPECT_EQ(height_lower_bound(disk()), 0);
    EXPECT_EQ(height_lower_bound(FiberState(-3, -2)), 0);
    EXPECT_EQ(height_lower_bound(FiberState(-3, 4)), 4);
}

TEST(Ledger, Oracle) {
    BoundReport d = height_lower_bound_oracle(disk(), 3);
    EXPECT_EQ(d.closed_form, 0);
    EXPECT_EQ(d.brute_force, 0);
    EXPECT_EQ(d.witness, (R{0, 0, 0, 0}));

    // Witness frozen from simulate_stabilizations below.
    BoundReport f2 = height_lower_bound_oracle(FiberState(-3, 4), 10);
    EXPECT_EQ(f2.closed_form, 4);
    EXPECT_EQ(f2.brute_force, 4);
    EXPECT_EQ(f2.witness, (R{0, 4, 8, 0}));

    BoundReport hm = height_lower_bound_oracle(FiberState(0, -1), 5);
    EXPECT_EQ(hm.brute_force, 0);
    EXPECT_EQ(hm.witness, (R{0, 0, 0, 1}));

    EXPECT_THROW(height_lower_bound_oracle(FiberState(-3, 4), 3), FeasibilityError);
}

// The band-by-band simulation and the closed-form record construction
// produce the same record sets.
TEST(LedgerProperties, EnumerationMatchesSimulation) {
    for (std::int64_t chi = -4; chi <= 1; ++chi) {
        for (std::int64_t h = -4; h <= 4; ++h) {
            const FiberState s(chi, h);
            const std::int64_t budget = 5;
            auto sim = oracle::simulate_stabilizations(s, budget, 16);
            auto got = feasible_stabilizations(s, budget);
            std::vector<R> expected = sim;
            std::stable_sort(expected.begin(), expected.end(), [](const R& a, const R& b) {
                return std::pair(a.b1_growth(), a.alpha_plus) < std::pair(b.b1_growth(), b.alpha_plus);
            });
            EXPECT_EQ(got, expected) << "state " << s;
        }
    }
    auto sim = oracle::simulate_stabilizations(FiberState(-3, 4), 4, 12);
    ASSERT_EQ(sim.size(), 1u);
    EXPECT_EQ(sim[0], (R{0, 4, 8, 0}));
}

TEST(LedgerProperties, BoundLaws) {
    for (std::int64_t chi = -12; chi <= 1; ++chi) {
        for (std::int64_t h = -15; h <= 15; ++h) {
            const FiberState s(chi, h);
            const std::int64_t b = height_lower_bound(s);
            const std::int64_t hm = mirror(s).hopf;
            EXPECT_EQ(b, height_lower_bound(mirror(s)));
            EXPECT_GE(b, std::max({h, hm, h + hm, std::int64_t{0}}));
            for (const auto& r : feasible_stabilizations(s, b + 3)) {
                EXPECT_TRUE(is_consistent(s, r)) << s << " " << r;
                EXPECT_GE(r.b1_growth(), b);
            }
        }
    }
}
