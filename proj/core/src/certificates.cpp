#include "fibercalc/certificates.hpp"

#include <sstream>

#include "fibercalc/checked.hpp"
#include "fibercalc/error.hpp"

namespace fibercalc {

CommutatorCertificate commutator_certificate(const HomologyClass& c1, const HomologyClass& c2,
                                             std::int64_t n) {
    SymplecticMatrix g = symplectic_transporter(c1, c2);
    SymplecticMatrix t1_minus = transvection_power(c1, detail::neg(n));
    SymplecticMatrix lhs = t1_minus * transvection_power(c2, n);
    SymplecticMatrix rhs = t1_minus * g * transvection_power(c1, n) * g.inverse();
    if (lhs != rhs) {
        std::ostringstream os;
        os << "commutator identity failed for c1=" << c1 << ", c2=" << c2 << ", n=" << n;
        throw VerificationError(os.str());
    }
    return {n, c1, c2, std::move(g), std::move(lhs), std::move(rhs), true};
}

SclBoundReport scl_upper_bound(const FiberedFamily& fam, std::int64_t n,
                               std::optional<std::int64_t> cl0) {
    if (cl0 && *cl0 < 0) throw FeasibilityError("cl0 must be non-negative");
    CommutatorCertificate cert =
        commutator_certificate(fam.scene.at(fam.loop1), fam.scene.at(fam.loop2), n);
    std::optional<std::int64_t> numeric;
    if (cl0) numeric = detail::add(*cl0, 1);
    SclBoundReport report{n, kSclBoundForm, numeric, std::move(cert), true};
    return report;
}

}  // namespace fibercalc
