#include <gtest/gtest.h>

#include "fibercalc/error.hpp"
#include "fibercalc/fiber_state.hpp"

using namespace fibercalc;

namespace {

FiberState st(std::int64_t chi, std::int64_t h) { return FiberState(chi, h); }

}  // namespace

TEST(FiberState, Disk) {
    EXPECT_EQ(disk(), st(1, 0));
    EXPECT_EQ(mirror(disk()), st(1, 0));
    EXPECT_EQ(plumb(disk(), HopfSign::Positive), st(0, 0));
}

TEST(FiberState, Plumb) {
    EXPECT_EQ(plumb(st(1, 0), HopfSign::Negative), st(0, -1));
    EXPECT_EQ(plumb(st(-3, -2), HopfSign::Positive), st(-4, -2));
    FiberState s = disk();
    s = plumb(plumb(s, HopfSign::Positive), HopfSign::Positive);
    s = plumb(plumb(s, HopfSign::Negative), HopfSign::Negative);
    EXPECT_EQ(s, st(-3, -2));
}

TEST(FiberState, Deplumb) {
    EXPECT_EQ(deplumb(st(0, -1), HopfSign::Negative), st(1, 0));
    EXPECT_EQ(deplumb(st(0, 0), HopfSign::Positive), st(1, 0));
    EXPECT_EQ(deplumb(st(-4, -2), HopfSign::Positive), st(-3, -2));
    // Below the disk there is no fiber surface.
    EXPECT_THROW(deplumb(disk(), HopfSign::Positive), DomainError);
}

TEST(FiberState, Mirror) {
    EXPECT_EQ(mirror(st(0, 0)), st(0, -1));
    EXPECT_EQ(mirror(st(1, 0)), st(1, 0));
    EXPECT_EQ(mirror(st(-3, -2)), st(-3, -2));
}

TEST(FiberState, BoundarySum) {
    EXPECT_EQ(boundary_sum(disk(), st(-7, 3)), st(-7, 3));
    EXPECT_EQ(boundary_sum(st(0, 0), st(0, -1)), st(-1, -1));
    for (std::int64_t hf : {-3, 0, 5}) EXPECT_EQ(boundary_sum(st(-3, -2), st(-1, hf)), st(-5, -2 + hf));
}

TEST(FiberState, D3AndLambda) {
    EXPECT_EQ(d3(st(0, 0)), HalfInteger::from_twice(-1));
    EXPECT_EQ(d3(st(1, 0)).to_string(), "-1/2");
    for (std::int64_t n = -6; n <= 6; ++n) {
        // -n^2 - n + 3/2
        EXPECT_EQ(d3(st(-3, n * n + n - 2)), HalfInteger::from_twice(-2 * n * n - 2 * n + 3));
    }
    EXPECT_EQ(lambda_invariant(st(0, -1)), 1);
    EXPECT_EQ(lambda_invariant(st(1, 0)), 0);
    EXPECT_EQ(lambda_invariant(st(-3, 4)), -4);
}

TEST(FiberState, HalfIntegerFormatting) {
    EXPECT_EQ(HalfInteger::from_twice(3).to_string(), "3/2");
    EXPECT_EQ(HalfInteger::from_twice(-11).to_string(), "-11/2");
    EXPECT_EQ(HalfInteger::from_integer(4).to_string(), "4");
    EXPECT_EQ(HalfInteger::from_twice(3).numerator(), 3);
    EXPECT_EQ(HalfInteger::from_twice(3).denominator(), 2);
    EXPECT_THROW(hopf_from_d3(HalfInteger::from_integer(1)), DomainError);
}

TEST(FiberState, RejectsPositiveEulerAboveOne) {
    EXPECT_THROW(FiberState(2, 0), DomainError);
}

TEST(FiberState, OverflowThrows) {
    FiberState big(-1, INT64_MAX);
    EXPECT_THROW(d3(big), DomainError);
    EXPECT_THROW(boundary_sum(big, FiberState(-1, 1)), DomainError);
}

TEST(Surface, EulerAndBetti) {
    Surface s(2, 1);
    EXPECT_EQ(s.euler_char(), -3);
    EXPECT_EQ(s.first_betti(), 4);
    EXPECT_EQ(Surface::from_genus_and_euler(0, 0), Surface(0, 2));
    EXPECT_THROW(Surface(1, 0), DomainError);
    EXPECT_THROW(Surface::from_genus_and_euler(2, -2), DomainError);
    for (int g = 0; g < 5; ++g)
        for (int r = 1; r < 5; ++r) EXPECT_EQ(Surface(g, r).euler_char() + Surface(g, r).first_betti(), 1);
}

// Exhaustive over a grid of states.
TEST(FiberStateProperties, AlgebraicLaws) {
    for (std::int64_t chi = -10; chi <= 1; ++chi) {
        for (std::int64_t h = -12; h <= 12; ++h) {
            const FiberState s(chi, h);
            const FiberState m = mirror(s);
            EXPECT_EQ(mirror(m), s);
            EXPECT_EQ(1 - s.euler_char + s.hopf + m.hopf, 0);
            EXPECT_EQ(hopf_from_d3(d3(s)), s.hopf);
            EXPECT_EQ(d3(s).twice_value(), -2 * h - 1);
            EXPECT_EQ(lambda_invariant(s), -h);
            for (HopfSign sign : {HopfSign::Positive, HopfSign::Negative}) {
                EXPECT_EQ(deplumb(plumb(s, sign), sign), s);
                if (chi <= 0) EXPECT_EQ(plumb(deplumb(s, sign), sign), s);
                EXPECT_EQ(mirror(plumb(s, sign)), plumb(m, flip(sign)));
            }
        }
    }
}

TEST(FiberStateProperties, BoundarySumMonoid) {
    for (std::int64_t c1 = -4; c1 <= 1; ++c1)
        for (std::int64_t h1 = -3; h1 <= 3; ++h1)
            for (std::int64_t c2 = -4; c2 <= 1; ++c2)
                for (std::int64_t h2 = -3; h2 <= 3; ++h2) {
                    const FiberState a(c1, h1), b(c2, h2), c(-1, 2);
                    EXPECT_EQ(boundary_sum(a, b), boundary_sum(b, a));
                    EXPECT_EQ(boundary_sum(boundary_sum(a, b), c), boundary_sum(a, boundary_sum(b, c)));
                    EXPECT_EQ(boundary_sum(a, disk()), a);
                }
}
