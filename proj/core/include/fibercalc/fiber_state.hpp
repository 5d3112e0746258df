#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace fibercalc {

// An exact element of Z/2, stored as twice its value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(std::int64_t twice) { return HalfInteger(twice); }
    static HalfInteger from_integer(std::int64_t value);

    constexpr std::int64_t twice_value() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    // Reduced numerator/denominator pair; denominator is 1 or 2.
    std::int64_t numerator() const { return is_integer() ? twice_ / 2 : twice_; }
    std::int64_t denominator() const { return is_integer() ? 1 : 2; }

    HalfInteger operator+(HalfInteger other) const;
    HalfInteger operator-(HalfInteger other) const;
    HalfInteger operator-() const;

    std::string to_string() const;

    constexpr auto operator<=>(const HalfInteger&) const = default;

private:
    constexpr explicit HalfInteger(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInteger h);

enum class HopfSign { Positive, Negative };

constexpr HopfSign flip(HopfSign s) {
    return s == HopfSign::Positive ? HopfSign::Negative : HopfSign::Positive;
}

// Compact connected oriented surface with at least one boundary circle.
class Surface {
public:
    Surface(std::int64_t genus, std::int64_t boundary_components);

    // Recovers the surface from (genus, euler characteristic); throws
    // DomainError when the implied boundary count is < 1.
    static Surface from_genus_and_euler(std::int64_t genus, std::int64_t euler_char);

    std::int64_t genus() const { return genus_; }
    std::int64_t boundary_components() const { return boundary_; }
    std::int64_t euler_char() const { return 2 - 2 * genus_ - boundary_; }
    std::int64_t first_betti() const { return 2 * genus_ + boundary_ - 1; }

    bool operator==(const Surface&) const = default;

private:
    std::int64_t genus_;
    std::int64_t boundary_;
};

// A fiber surface reduced to its Euler characteristic and the Hopf
// invariant of the plane field it supports. Genus and boundary count are
// forgotten on purpose; plumbing can raise either one.
struct FiberState {
    std::string label;
    std::int64_t euler_char = 1;
    std::int64_t hopf = 0;

    FiberState() = default;
    FiberState(std::int64_t chi, std::int64_t h, std::string name = {});

    std::int64_t first_betti() const { return 1 - euler_char; }

    // Label is descriptive only and does not take part in comparison.
    bool operator==(const FiberState& other) const {
        return euler_char == other.euler_char && hopf == other.hopf;
    }
};

std::ostream& operator<<(std::ostream& os, const FiberState& s);

FiberState disk();
FiberState plumb(const FiberState& s, HopfSign sign);
// Arithmetic inverse of plumb. Geometric realizability is not checked.
FiberState deplumb(const FiberState& s, HopfSign sign);
// H(mirror) = chi - 1 - H, from 1 - chi + H + H(mirror) = 0.
FiberState mirror(const FiberState& s);
FiberState boundary_sum(const FiberState& s1, const FiberState& s2);

// d3 = -H - 1/2
HalfInteger d3(const FiberState& s);
// Rudolph's enhancement to the Milnor number, -H.
std::int64_t lambda_invariant(const FiberState& s);
// Inverse of d3: H = -d3 - 1/2. Throws DomainError if d3 is an integer.
std::int64_t hopf_from_d3(HalfInteger d3_value);

}  // namespace fibercalc
