#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fibercalc/family.hpp"
#include "fibercalc/homology.hpp"

namespace fibercalc {

// Homological certificate that T_{c1}^{-n} T_{c2}^{n} equals the single
// commutator [T_{c1}^{-n}, G] for a symplectic G with G c1 = c2. This is a
// necessary condition for the mapping-class identity; it does not
// construct the diffeomorphism.
struct CommutatorCertificate {
    std::int64_t n = 0;
    HomologyClass c1;
    HomologyClass c2;
    SymplecticMatrix transporter;
    SymplecticMatrix lhs;  // T_{c1}^{-n} T_{c2}^{n}
    SymplecticMatrix rhs;  // T_{c1}^{-n} G T_{c1}^{n} G^{-1}
    bool verified = false;
};

// Throws DomainError (NotPrimitive, GenusMismatch) on bad inputs and
// VerificationError when the two sides differ.
CommutatorCertificate commutator_certificate(const HomologyClass& c1, const HomologyClass& c2,
                                             std::int64_t n);

inline constexpr const char* kSclBoundForm = "cl(ψ₀) + 1";

struct SclBoundReport {
    std::int64_t n = 0;
    std::string bound_form = kSclBoundForm;
    // cl0 + 1 when an upper bound cl0 on cl(psi_0) is supplied.
    std::optional<std::int64_t> numeric_bound;
    CommutatorCertificate certificate;
    // The bound does not depend on n.
    bool uniform_in_n = true;
};

// cl(psi_0) is an input; no algorithm computes it here. A single Dehn
// twist is never a single commutator (Korkmaz-Ozbagci), so cl is not
// generally small. Throws FeasibilityError for a negative cl0.
SclBoundReport scl_upper_bound(const FiberedFamily& fam, std::int64_t n,
                               std::optional<std::int64_t> cl0);

}  // namespace fibercalc
