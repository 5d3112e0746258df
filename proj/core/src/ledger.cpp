#include "fibercalc/ledger.hpp"

#include <algorithm>
#include <sstream>

#include "fibercalc/checked.hpp"
#include "fibercalc/error.hpp"

namespace fibercalc {

std::ostream& operator<<(std::ostream& os, const StabilizationRecord& r) {
    return os << "(" << r.alpha_plus << "," << r.alpha_minus << "," << r.beta_plus << ","
              << r.beta_minus << ")";
}

bool is_consistent(const FiberState& s, const StabilizationRecord& r) {
    if (r.alpha_plus < 0 || r.alpha_minus < 0 || r.beta_plus < 0 || r.beta_minus < 0)
        return false;
    // chi(S) computed from the surface side and from the disk side.
    return s.euler_char - r.alpha_plus - r.alpha_minus == 1 - r.beta_plus - r.beta_minus;
}

StabilizationRecord record_from_counts(const FiberState& s, std::int64_t alpha_plus,
                                       std::int64_t alpha_minus) {
    if (alpha_plus < 0 || alpha_minus < 0)
        throw FeasibilityError("Infeasible: plumbing counts must be non-negative");
    const std::int64_t h = s.hopf;
    const std::int64_t h_mirror = mirror(s).hopf;
    if (alpha_minus < h) {
        std::ostringstream os;
        os << "Infeasible: alpha_minus = " << alpha_minus << " < H = " << h;
        throw FeasibilityError(os.str());
    }
    if (alpha_plus < h_mirror) {
        std::ostringstream os;
        os << "Infeasible: alpha_plus = " << alpha_plus << " < H(mirror) = " << h_mirror;
        throw FeasibilityError(os.str());
    }
    StabilizationRecord r{alpha_plus, alpha_minus, detail::sub(alpha_plus, h_mirror),
                          detail::sub(alpha_minus, h)};
    if (!is_consistent(s, r)) {
        std::ostringstream os;
        os << "Euler characteristic identity fails for record " << r << " on " << s;
        throw VerificationError(os.str());
    }
    return r;
}

std::vector<StabilizationRecord> feasible_stabilizations(const FiberState& s,
                                                         std::int64_t b1_budget) {
    std::vector<StabilizationRecord> out;
    if (b1_budget < 0) return out;
    const std::int64_t min_minus = std::max<std::int64_t>(s.hopf, 0);
    const std::int64_t min_plus = std::max<std::int64_t>(mirror(s).hopf, 0);
    for (std::int64_t total = min_minus + min_plus; total <= b1_budget; ++total) {
        for (std::int64_t plus = min_plus; plus <= total - min_minus; ++plus)
            out.push_back(record_from_counts(s, plus, total - plus));
    }
    return out;
}

std::int64_t height_lower_bound(const FiberState& s) {
    return detail::add(std::max<std::int64_t>(s.hopf, 0),
                       std::max<std::int64_t>(mirror(s).hopf, 0));
}

BoundReport height_lower_bound_oracle(const FiberState& s, std::int64_t b1_budget) {
    BoundReport report;
    report.closed_form = height_lower_bound(s);
    if (b1_budget < report.closed_form) {
        std::ostringstream os;
        os << "BudgetTooSmall: budget " << b1_budget << " is below the closed-form bound "
           << report.closed_form;
        throw FeasibilityError(os.str());
    }
    for (const auto& r : feasible_stabilizations(s, b1_budget)) {
        // Canonical order puts the first minimal record first.
        if (!report.brute_force || r.b1_growth() < *report.brute_force) {
            report.brute_force = r.b1_growth();
            report.witness = r;
        }
    }
    if (!report.brute_force || *report.brute_force != report.closed_form) {
        std::ostringstream os;
        os << "closed-form bound " << report.closed_form << " disagrees with enumeration on " << s;
        throw VerificationError(os.str());
    }
    return report;
}

}  // namespace fibercalc
