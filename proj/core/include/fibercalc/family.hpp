#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibercalc/fiber_state.hpp"
#include "fibercalc/homology.hpp"

namespace fibercalc {

// How the Hopf invariant of a twisted family member depends on n. The
// update under a general twisting is not derivable from homological data,
// so it is carried as declared data.
class HopfUpdatePolicy {
public:
    // H(n) = H(0) for all n, as for Stallings twists of type (0,1).
    struct Preserve {
        bool operator==(const Preserve&) const = default;
    };
    // H(n) = c2 n^2 + c1 n + c0
    struct QuadraticInN {
        std::int64_t c2 = 0;
        std::int64_t c1 = 0;
        std::int64_t c0 = 0;
        bool operator==(const QuadraticInN&) const = default;
    };

    HopfUpdatePolicy() = default;
    HopfUpdatePolicy(Preserve p) : rule_(p) {}
    HopfUpdatePolicy(QuadraticInN q) : rule_(q) {}

    static HopfUpdatePolicy preserve() { return Preserve{}; }
    static HopfUpdatePolicy quadratic(std::int64_t c2, std::int64_t c1, std::int64_t c0) {
        return QuadraticInN{c2, c1, c0};
    }

    bool is_preserve() const { return std::holds_alternative<Preserve>(rule_); }
    const QuadraticInN* as_quadratic() const { return std::get_if<QuadraticInN>(&rule_); }

    // Throws DomainError on int64 overflow.
    std::int64_t hopf_at(std::int64_t n, std::int64_t base_hopf) const;
    HopfUpdatePolicy shifted(std::int64_t offset) const;

    bool operator==(const HopfUpdatePolicy&) const = default;

private:
    std::variant<Preserve, QuadraticInN> rule_;
};

struct FiberedFamily {
    FiberState base_state;
    MonodromyWord base_word;
    std::string loop1;
    std::string loop2;
    HopfUpdatePolicy policy;
    CurveTable scene;
    // Declared geometric type of the twisting loops; trusted, not checked.
    std::string twist_type = "unspecified";
    // Set when a summand was included without homological data.
    bool homological_placeholder = false;

    // Throws DomainError unless policy(0) equals the base Hopf invariant,
    // both loops resolve to primitive classes and every word letter resolves.
    void validate() const;
};

struct FamilyMember {
    FiberState state;
    MonodromyWord word;
};

struct FamilyRow {
    std::int64_t n = 0;
    std::int64_t hopf = 0;
    HalfInteger d3;
    std::int64_t lambda = 0;
    std::int64_t height_lb = 0;
    std::size_t word_length = 0;

    bool operator==(const FamilyRow&) const = default;
};

// Stallings' twisting of order n along c: prepends t_c^{-n}. n = 0 returns
// w unchanged. Throws DomainError (UnknownCurve) if c is not in the table.
MonodromyWord apply_twisting(const MonodromyWord& w, const CurveTable& curves,
                             const std::string& c, std::int64_t n);

// state = (base chi, policy(n)); word = t_{loop1}^{-n} o t_{loop2}^{n} o base.
FamilyMember family_member(const FiberedFamily& fam, std::int64_t n);

// Genus-2 chain a, b, c, d plus the twisting loops c'1, c'2.
CurveTable six_three_curves();
// The fiber of 6_3 (two positive and two negative Hopf bands on a disk),
// monodromy t_d^{-1} t_b t_c^{-1} t_a, twisted along c'1 and c'2 of orders
// n and -n, with H(n) = n^2 + n - 2.
FiberedFamily six_three_family();

// Genus-1 companion (chi = -1, H = 0) with no homological data.
FiberState default_companion();

// Boundary sum with a fixed fiber F: chi and H add, words concatenate with
// F's monodromy acting first, and F's curves occupy the handles after the
// family's. Without other_curves the summand carries no homology and the
// result is flagged as a placeholder. Throws DomainError for a summand with
// chi = 0 or chi > 1, and NamespaceCollision for shared curve names.
FiberedFamily boundary_sum_family(const FiberedFamily& fam, const FiberState& other,
                                  const MonodromyWord& other_word,
                                  const std::optional<CurveTable>& other_curves);

// Throws FeasibilityError if n_from > n_to.
std::vector<FamilyRow> family_table(const FiberedFamily& fam, std::int64_t n_from,
                                    std::int64_t n_to);

}  // namespace fibercalc
