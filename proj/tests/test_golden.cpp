#include <gtest/gtest.h>

#include <cstdlib>

#include "golden_cases.hpp"

// FIBERCALC_UPDATE_GOLDEN=1 rewrites the files instead of comparing.
TEST(Golden, ByteIdenticalReports) {
    const bool update = std::getenv("FIBERCALC_UPDATE_GOLDEN") != nullptr;
    for (const auto& c : golden::cases()) {
        int code1 = -1, code2 = -1;
        const std::string first = golden::run_case(c, code1);
        const std::string second = golden::run_case(c, code2);
        ASSERT_EQ(code1, 0) << c.file;
        EXPECT_EQ(first, second) << c.file;
        if (update) {
            std::ofstream(golden::kSource / "tests" / "golden" / c.file, std::ios::binary) << first;
            continue;
        }
        EXPECT_EQ(first, golden::read_golden(c)) << c.file;
    }
}
