#include <gtest/gtest.h>

#include "fibercalc/error.hpp"
#include "fibercalc/family.hpp"
#include "fibercalc/ledger.hpp"

using namespace fibercalc;

TEST(Family, ApplyTwisting) {
    const FiberedFamily fam = six_three_family();
    const MonodromyWord& f0 = fam.base_word;
    EXPECT_EQ(apply_twisting(f0, fam.scene, "c'1", 0), f0);
    EXPECT_THROW(apply_twisting(f0, fam.scene, "zz", 1), DomainError);

    const std::int64_t n = 5;
    MonodromyWord w = apply_twisting(apply_twisting(f0, fam.scene, "c'2", -n), fam.scene, "c'1", n);
    MonodromyWord expected{{"c'1", -n}, {"c'2", n}, {"d", -1}, {"b", 1}, {"c", -1}, {"a", 1}};
    EXPECT_EQ(w, expected);

    MonodromyWord once = apply_twisting(f0, fam.scene, "c", 1);
    EXPECT_NE(evaluate_word(once, fam.scene), evaluate_word(f0, fam.scene));
}

TEST(Family, Members) {
    const FiberedFamily fam = six_three_family();
    FamilyMember m0 = family_member(fam, 0);
    EXPECT_EQ(m0.state, FiberState(-3, -2));
    EXPECT_EQ(m0.word, fam.base_word);
    EXPECT_EQ(family_member(fam, 1).state.hopf, 0);
    EXPECT_EQ(family_member(fam, -3).state.hopf, 4);
    for (std::int64_t n = -8; n <= 8; ++n) {
        FamilyMember m = family_member(fam, n);
        EXPECT_EQ(m.state.euler_char, -3);
        EXPECT_EQ(d3(m.state), HalfInteger::from_twice(-2 * n * n - 2 * n + 3));
        EXPECT_EQ(m.word.length(), fam.base_word.length() + (n == 0 ? 0 : 2));
    }
}

TEST(Family, SixThreeConstruction) {
    const FiberedFamily fam = six_three_family();
    EXPECT_EQ(fam.base_state, FiberState(-3, -2));
    EXPECT_EQ(fam.policy.hopf_at(0, fam.base_state.hopf), -2);
    EXPECT_EQ(fam.base_word, (MonodromyWord{{"d", -1}, {"b", 1}, {"c", -1}, {"a", 1}}));
    EXPECT_EQ(alexander_polynomial(evaluate_word(family_member(fam, 0).word, fam.scene)).normalized,
              (IntPolynomial{1, -3, 5, -3, 1}));
    // Chain intersection pattern of a, b, c, d.
    const auto& t = fam.scene;
    EXPECT_EQ(abs(pairing(t.at("a"), t.at("b"))), 1);
    EXPECT_EQ(abs(pairing(t.at("b"), t.at("c"))), 1);
    EXPECT_EQ(abs(pairing(t.at("c"), t.at("d"))), 1);
    EXPECT_EQ(pairing(t.at("a"), t.at("c")), 0);
    EXPECT_EQ(pairing(t.at("a"), t.at("d")), 0);
    EXPECT_EQ(pairing(t.at("b"), t.at("d")), 0);
    EXPECT_EQ(pairing(t.at("c'1"), t.at("c'2")), 0);
}

TEST(Family, Validation) {
    FiberedFamily fam = six_three_family();
    fam.policy = HopfUpdatePolicy::quadratic(1, 1, 0);
    EXPECT_THROW(fam.validate(), DomainError);

    fam = six_three_family();
    fam.scene.add("sep", HomologyClass::zero(2));
    fam.loop2 = "sep";
    EXPECT_THROW(fam.validate(), DomainError);
}

TEST(Family, PreservePolicy) {
    FiberedFamily fam = six_three_family();
    fam.policy = HopfUpdatePolicy::preserve();
    for (std::int64_t n = -4; n <= 4; ++n) {
        FamilyMember m = family_member(fam, n);
        EXPECT_EQ(m.state, fam.base_state);
        if (n != 0) EXPECT_NE(m.word, fam.base_word);
    }
}

TEST(Family, BoundarySum) {
    const FiberedFamily fam = six_three_family();
    FiberedFamily with_disk = boundary_sum_family(fam, disk(), {}, std::nullopt);
    EXPECT_EQ(with_disk.policy, fam.policy);
    EXPECT_EQ(with_disk.base_state, fam.base_state);
    EXPECT_FALSE(with_disk.homological_placeholder);

    FiberedFamily sigma = boundary_sum_family(fam, default_companion(), {}, std::nullopt);
    EXPECT_EQ(sigma.base_state, FiberState(-5, -2));
    EXPECT_EQ(sigma.policy, HopfUpdatePolicy::quadratic(1, 1, -2));
    EXPECT_TRUE(sigma.homological_placeholder);

    CurveTable tref(1);
    tref.add("x", {1, 0});
    tref.add("y", {0, 1});
    const FiberState f(-1, 3, "F");
    FiberedFamily s2 = boundary_sum_family(fam, f, {{"x", 1}, {"y", 1}}, tref);
    EXPECT_EQ(s2.scene.genus(), 3u);
    EXPECT_EQ(s2.scene.at("x"), (HomologyClass{0, 0, 0, 0, 1, 0}));
    EXPECT_EQ(s2.base_word.length(), 6u);
    for (std::int64_t n = -5; n <= 5; ++n)
        EXPECT_EQ(family_member(s2, n).state.hopf, family_member(fam, n).state.hopf + f.hopf);
    // psi_0 = f_0 o f acts block-diagonally.
    SymplecticMatrix psi = evaluate_word(s2.base_word, s2.scene);
    EXPECT_EQ(alexander_polynomial(psi).normalized, (IntPolynomial{1, -4, 9, -11, 9, -4, 1}));

    CurveTable clash(1);
    clash.add("a", {1, 0});
    EXPECT_THROW(boundary_sum_family(fam, f, {}, clash), DomainError);
    EXPECT_THROW(boundary_sum_family(fam, FiberState(0, 0), {}, std::nullopt), DomainError);
}

TEST(Family, Table) {
    const FiberedFamily fam = six_three_family();
    auto r0 = family_table(fam, 0, 0);
    ASSERT_EQ(r0.size(), 1u);
    EXPECT_EQ(r0[0], (FamilyRow{0, -2, HalfInteger::from_twice(3), 2, 0, 4}));
    auto r2 = family_table(fam, 2, 2);
    EXPECT_EQ(r2[0], (FamilyRow{2, 4, HalfInteger::from_twice(-9), -4, 4, 6}));
    auto r = family_table(fam, -1, 1);
    ASSERT_EQ(r.size(), 3u);
    for (const auto& row : r) EXPECT_EQ(row.height_lb, 0);
    EXPECT_THROW(family_table(fam, 2, 1), FeasibilityError);
}

TEST(FamilyProperties, DivergentBound) {
    const FiberedFamily fam = six_three_family();
    auto rows = family_table(fam, -40, 40);
    for (const auto& row : rows) {
        const std::int64_t n = row.n;
        EXPECT_EQ(row.height_lb, std::max<std::int64_t>(n * n + n - 2, 0));
        EXPECT_EQ(row.lambda, -row.hopf);
        // mirror term chi - 1 - H is always negative here
        EXPECT_LT(-3 - 1 - row.hopf, 0);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].n >= 2) EXPECT_GT(rows[i].height_lb, rows[i - 1].height_lb);
        if (rows[i].n <= -2) EXPECT_LT(rows[i].height_lb, rows[i - 1].height_lb);
    }
}

TEST(FamilyProperties, PolicyOverflow) {
    EXPECT_THROW(HopfUpdatePolicy::quadratic(1, 0, 0).hopf_at(INT64_C(4000000000), 0), DomainError);
}
