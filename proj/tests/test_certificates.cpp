#include <gtest/gtest.h>

#include <random>

#include "fibercalc/certificates.hpp"
#include "fibercalc/error.hpp"
#include "oracle/oracles.hpp"

using namespace fibercalc;

TEST(Certificates, EqualCurves) {
    HomologyClass c{0, 1, 1, 0};
    for (std::int64_t n : {-3, 0, 4}) {
        CommutatorCertificate cert = commutator_certificate(c, c, n);
        EXPECT_TRUE(cert.verified);
        EXPECT_TRUE(cert.lhs.is_identity());
        EXPECT_TRUE(cert.rhs.is_identity());
    }
}

TEST(Certificates, DisjointHandles) {
    HomologyClass c1{1, 0, 0, 0}, c2{0, 0, 1, 0};
    CommutatorCertificate cert = commutator_certificate(c1, c2, 3);
    EXPECT_TRUE(cert.verified);
    EXPECT_EQ(cert.transporter * c1, c2);
    // T_{c1}^{-3} T_{c2}^{3}, computed twist by twist.
    IntMatrix expected(4, 4);
    for (std::size_t col = 0; col < 4; ++col) {
        std::vector<BigInt> x(4);
        x[col] = 1;
        x = oracle::twist_vector(oracle::twist_vector(x, c2.coords(), 3), c1.coords(), -3);
        for (std::size_t r = 0; r < 4; ++r) expected(r, col) = x[r];
    }
    EXPECT_EQ(cert.lhs.matrix(), expected);
}

TEST(Certificates, Errors) {
    EXPECT_THROW(commutator_certificate({2, 0, 0, 0}, {1, 0, 0, 0}, 1), DomainError);
    EXPECT_THROW(commutator_certificate({1, 0}, {1, 0, 0, 0}, 1), DomainError);
    EXPECT_THROW(scl_upper_bound(six_three_family(), 1, -1), FeasibilityError);
}

TEST(Certificates, SixThreeFamilyBatch) {
    const FiberedFamily fam = six_three_family();
    for (std::int64_t n = -10; n <= 10; ++n) {
        SclBoundReport r = scl_upper_bound(fam, n, 5);
        EXPECT_TRUE(r.certificate.verified);
        EXPECT_EQ(r.numeric_bound, 6);
        EXPECT_EQ(r.bound_form, "cl(ψ₀) + 1");
        EXPECT_TRUE(r.uniform_in_n);
    }
    SclBoundReport r7 = scl_upper_bound(fam, 7, std::nullopt);
    EXPECT_FALSE(r7.numeric_bound.has_value());
    EXPECT_TRUE(r7.certificate.verified);
    SclBoundReport r0 = scl_upper_bound(fam, 0, std::nullopt);
    EXPECT_TRUE(r0.certificate.lhs.is_identity());
}

TEST(Certificates, Deterministic) {
    HomologyClass c1{3, -2, 5, 1}, c2{0, 7, 2, -1};
    CommutatorCertificate a = commutator_certificate(c1, c2, -6);
    CommutatorCertificate b = commutator_certificate(c1, c2, -6);
    EXPECT_EQ(a.transporter, b.transporter);
    EXPECT_EQ(a.lhs, b.lhs);
}

TEST(CertificatesProperties, RandomPairs) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> genus_d(1, 4), n_d(-10, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t g = static_cast<std::size_t>(genus_d(rng));
        HomologyClass c1 = oracle::random_primitive(rng, g), c2 = oracle::random_primitive(rng, g);
        const std::int64_t n = n_d(rng);
        CommutatorCertificate cert = commutator_certificate(c1, c2, n);
        EXPECT_TRUE(cert.verified);
        EXPECT_EQ(cert.lhs, cert.rhs);
        EXPECT_EQ(cert.transporter * c1, c2);
    }
}
