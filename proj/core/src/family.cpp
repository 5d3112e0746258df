#include "fibercalc/family.hpp"

#include <sstream>

#include "fibercalc/checked.hpp"
#include "fibercalc/error.hpp"
#include "fibercalc/ledger.hpp"

namespace fibercalc {

std::int64_t HopfUpdatePolicy::hopf_at(std::int64_t n, std::int64_t base_hopf) const {
    if (const auto* q = as_quadratic()) {
        using namespace detail;
        return add(add(mul(q->c2, mul(n, n)), mul(q->c1, n)), q->c0);
    }
    return base_hopf;
}

HopfUpdatePolicy HopfUpdatePolicy::shifted(std::int64_t offset) const {
    if (const auto* q = as_quadratic())
        return QuadraticInN{q->c2, q->c1, detail::add(q->c0, offset)};
    return *this;
}

void FiberedFamily::validate() const {
    const std::int64_t at_zero = policy.hopf_at(0, base_state.hopf);
    if (at_zero != base_state.hopf) {
        std::ostringstream os;
        os << "Hopf policy gives H(0) = " << at_zero << " but the base state has H = "
           << base_state.hopf;
        throw DomainError(os.str());
    }
    for (const auto* loop : {&loop1, &loop2}) {
        const HomologyClass& c = scene.at(*loop);
        if (!c.is_primitive()) {
            std::ostringstream os;
            os << "NotPrimitive: twisting loop '" << *loop << "' has class " << c
               << "; loops must be non-separating";
            throw DomainError(os.str());
        }
    }
    for (const auto& letter : base_word.letters()) scene.at(letter.curve);
}

MonodromyWord apply_twisting(const MonodromyWord& w, const CurveTable& curves,
                             const std::string& c, std::int64_t n) {
    curves.at(c);
    if (n == 0) return w;
    return w.prepended({c, detail::neg(n)});
}

FamilyMember family_member(const FiberedFamily& fam, std::int64_t n) {
    MonodromyWord w = apply_twisting(fam.base_word, fam.scene, fam.loop2, detail::neg(n));
    w = apply_twisting(w, fam.scene, fam.loop1, n);
    FiberState state(fam.base_state.euler_char, fam.policy.hopf_at(n, fam.base_state.hopf),
                     fam.base_state.label);
    return {std::move(state), std::move(w)};
}

CurveTable six_three_curves() {
    CurveTable t(2);
    t.add("a", {1, 0, 0, 0});
    t.add("b", {0, 1, 0, 0});
    t.add("c", {1, 0, 1, 0});
    t.add("d", {0, 0, 0, 1});
    t.add("c'1", {1, 0, 0, 0});
    t.add("c'2", {0, 0, 1, 0});
    return t;
}

FiberedFamily six_three_family() {
    FiberState f0 = disk();
    f0 = plumb(plumb(f0, HopfSign::Positive), HopfSign::Positive);
    f0 = plumb(plumb(f0, HopfSign::Negative), HopfSign::Negative);
    f0.label = "F_0";

    FiberedFamily fam;
    fam.base_state = f0;
    fam.base_word = MonodromyWord{{"d", -1}, {"b", 1}, {"c", -1}, {"a", 1}};
    fam.loop1 = "c'1";
    fam.loop2 = "c'2";
    fam.policy = HopfUpdatePolicy::quadratic(1, 1, -2);
    fam.scene = six_three_curves();
    fam.validate();
    return fam;
}

FiberState default_companion() { return FiberState(-1, 0, "F"); }

FiberedFamily boundary_sum_family(const FiberedFamily& fam, const FiberState& other,
                                  const MonodromyWord& other_word,
                                  const std::optional<CurveTable>& other_curves) {
    if (other.euler_char == 0) {
        throw DomainError(
            "boundary-sum summand must be the disk or have positive genus (chi <= -1), got chi = 0");
    }
    if (!other_curves && !other_word.empty())
        throw DomainError("summand word given without a curve table");

    FiberedFamily out = fam;
    out.base_state = boundary_sum(fam.base_state, other);
    out.base_state.label = fam.base_state.label + " # " + (other.label.empty() ? "F" : other.label);
    out.policy = fam.policy.shifted(other.hopf);

    if (other_curves) {
        const std::size_t g1 = fam.scene.genus();
        const std::size_t total = g1 + other_curves->genus();
        CurveTable merged(total);
        for (const auto& c : fam.scene.curves()) merged.add(c.name, c.homology.embed(total, 0));
        for (const auto& c : other_curves->curves()) {
            if (fam.scene.contains(c.name))
                throw DomainError("NamespaceCollision: curve '" + c.name + "' appears in both summands");
            merged.add(c.name, c.homology.embed(total, g1));
        }
        out.scene = std::move(merged);
    } else if (other.euler_char != 1) {
        out.homological_placeholder = true;
    }
    out.base_word = fam.base_word.then_after(other_word);
    out.validate();
    return out;
}

std::vector<FamilyRow> family_table(const FiberedFamily& fam, std::int64_t n_from,
                                    std::int64_t n_to) {
    if (n_from > n_to) {
        std::ostringstream os;
        os << "empty range: from " << n_from << " > to " << n_to;
        throw FeasibilityError(os.str());
    }
    std::vector<FamilyRow> rows;
    for (std::int64_t n = n_from;; ++n) {
        FamilyMember m = family_member(fam, n);
        rows.push_back({n, m.state.hopf, d3(m.state), lambda_invariant(m.state),
                        height_lower_bound(m.state), m.word.length()});
        if (n == n_to) break;
    }
    return rows;
}

}  // namespace fibercalc
