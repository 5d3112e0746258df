#include "fibercalc/fiber_state.hpp"

#include <sstream>

#include "fibercalc/checked.hpp"
#include "fibercalc/error.hpp"

namespace fibercalc {

using detail::add;
using detail::sub;

HalfInteger HalfInteger::from_integer(std::int64_t value) {
    return HalfInteger(detail::mul(value, 2));
}

HalfInteger HalfInteger::operator+(HalfInteger other) const {
    return HalfInteger(add(twice_, other.twice_));
}

HalfInteger HalfInteger::operator-(HalfInteger other) const {
    return HalfInteger(sub(twice_, other.twice_));
}

HalfInteger HalfInteger::operator-() const { return HalfInteger(detail::neg(twice_)); }

std::string HalfInteger::to_string() const {
    std::ostringstream os;
    os << numerator();
    if (!is_integer()) os << "/2";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, HalfInteger h) { return os << h.to_string(); }

Surface::Surface(std::int64_t genus, std::int64_t boundary_components)
    : genus_(genus), boundary_(boundary_components) {
    if (genus < 0) throw DomainError("surface genus must be non-negative");
    if (boundary_components < 1)
        throw DomainError("fiber surfaces need at least one boundary component");
}

Surface Surface::from_genus_and_euler(std::int64_t genus, std::int64_t euler_char) {
    if (genus < 0) throw DomainError("surface genus must be non-negative");
    std::int64_t boundary = sub(sub(2, detail::mul(2, genus)), euler_char);
    if (boundary < 1) {
        std::ostringstream os;
        os << "genus " << genus << " and euler characteristic " << euler_char
           << " imply " << boundary << " boundary components";
        throw DomainError(os.str());
    }
    return Surface(genus, boundary);
}

FiberState::FiberState(std::int64_t chi, std::int64_t h, std::string name)
    : label(std::move(name)), euler_char(chi), hopf(h) {
    if (chi > 1) throw DomainError("euler characteristic of a fiber surface is at most 1");
}

std::ostream& operator<<(std::ostream& os, const FiberState& s) {
    return os << "(chi=" << s.euler_char << ", H=" << s.hopf << ")";
}

FiberState disk() { return FiberState(1, 0, "D"); }

FiberState plumb(const FiberState& s, HopfSign sign) {
    // H(H+) = 0, H(H-) = -1, additive under plumbing.
    std::int64_t band = sign == HopfSign::Positive ? 0 : -1;
    return FiberState(sub(s.euler_char, 1), add(s.hopf, band));
}

FiberState deplumb(const FiberState& s, HopfSign sign) {
    std::int64_t band = sign == HopfSign::Positive ? 0 : -1;
    return FiberState(add(s.euler_char, 1), sub(s.hopf, band));
}

FiberState mirror(const FiberState& s) {
    return FiberState(s.euler_char, sub(sub(s.euler_char, 1), s.hopf));
}

FiberState boundary_sum(const FiberState& s1, const FiberState& s2) {
    return FiberState(sub(add(s1.euler_char, s2.euler_char), 1), add(s1.hopf, s2.hopf));
}

HalfInteger d3(const FiberState& s) {
    // -H - 1/2 = (-2H - 1) / 2
    return HalfInteger::from_twice(sub(detail::mul(-2, s.hopf), 1));
}

std::int64_t lambda_invariant(const FiberState& s) { return detail::neg(s.hopf); }

std::int64_t hopf_from_d3(HalfInteger d3_value) {
    if (d3_value.is_integer())
        throw DomainError("d3 of a plane field on S^3 lies in Z + 1/2, got " + d3_value.to_string());
    // H = -d3 - 1/2 = (-(2 d3) - 1) / 2
    return sub(detail::neg(d3_value.twice_value()), 1) / 2;
}

}  // namespace fibercalc
