#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "fibercalc/fiber_state.hpp"

namespace fibercalc {

// Hopf-band counts for a hypothetical common stabilization S of a fiber
// surface and the disk: alpha counts plumbings onto the surface, beta
// plumbings onto the disk.
struct StabilizationRecord {
    std::int64_t alpha_plus = 0;
    std::int64_t alpha_minus = 0;
    std::int64_t beta_plus = 0;
    std::int64_t beta_minus = 0;

    // b1(S) - b1(surface)
    std::int64_t b1_growth() const { return alpha_plus + alpha_minus; }

    auto operator<=>(const StabilizationRecord&) const = default;
};

std::ostream& operator<<(std::ostream& os, const StabilizationRecord& r);

// True iff all counts are non-negative and both Euler characteristic
// routes to chi(S) agree.
bool is_consistent(const FiberState& s, const StabilizationRecord& r);

struct BoundReport {
    std::int64_t closed_form = 0;
    std::optional<std::int64_t> brute_force;
    std::optional<StabilizationRecord> witness;
};

// Throws FeasibilityError naming the violated constraint when
// alpha_minus < H(s) or alpha_plus < H(mirror(s)).
StabilizationRecord record_from_counts(const FiberState& s, std::int64_t alpha_plus,
                                       std::int64_t alpha_minus);

// Every feasible record with alpha_plus + alpha_minus <= b1_budget, ordered
// by (alpha_plus + alpha_minus, alpha_plus).
std::vector<StabilizationRecord> feasible_stabilizations(const FiberState& s,
                                                         std::int64_t b1_budget);

// max{H, 0} + max{H(mirror), 0}; a lower bound for the stabilization height.
std::int64_t height_lower_bound(const FiberState& s);

// Closed form cross-checked against exhaustive enumeration. Throws
// FeasibilityError (BudgetTooSmall) if b1_budget < height_lower_bound(s),
// VerificationError if the two routes disagree.
BoundReport height_lower_bound_oracle(const FiberState& s, std::int64_t b1_budget);

}  // namespace fibercalc
