#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fibercalc/int_matrix.hpp"

namespace fibercalc {

// Largest genus accepted for dense homological computations.
inline constexpr std::size_t kMaxGenus = 64;

// First homology class of a curve on a genus-g surface, in the symplectic
// basis a_1, b_1, ..., a_g, b_g. The zero class marks a separating curve.
class HomologyClass {
public:
    HomologyClass() = default;
    explicit HomologyClass(IntVector coords);
    HomologyClass(std::initializer_list<long long> coords);

    // Unit vector at coordinate `index` (2i -> a_{i+1}, 2i+1 -> b_{i+1}).
    static HomologyClass basis(std::size_t genus, std::size_t index);
    static HomologyClass zero(std::size_t genus);

    std::size_t genus() const { return coords_.size() / 2; }
    std::size_t dimension() const { return coords_.size(); }
    const IntVector& coords() const { return coords_; }
    const BigInt& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    // gcd of the coordinates equals 1.
    bool is_primitive() const;
    BigInt content() const;

    // Embeds into a larger surface, placing these coordinates at handle
    // offset `first_handle`.
    HomologyClass embed(std::size_t total_genus, std::size_t first_handle) const;

    bool operator==(const HomologyClass&) const = default;

private:
    IntVector coords_;
};

std::ostream& operator<<(std::ostream& os, const HomologyClass& c);

struct Curve {
    std::string name;
    HomologyClass homology;

    bool operator==(const Curve&) const = default;
};

// Named curves on a fixed-genus surface, in insertion order.
class CurveTable {
public:
    CurveTable() = default;
    explicit CurveTable(std::size_t genus);

    std::size_t genus() const { return genus_; }
    const std::vector<Curve>& curves() const { return curves_; }

    // Throws DomainError on a duplicate name (NamespaceCollision) or a
    // class of the wrong genus (GenusMismatch).
    void add(std::string name, HomologyClass homology);
    bool contains(std::string_view name) const;
    const HomologyClass* find(std::string_view name) const;
    // Throws DomainError (UnknownCurve).
    const HomologyClass& at(std::string_view name) const;

    bool operator==(const CurveTable&) const = default;

private:
    std::size_t genus_ = 0;
    std::vector<Curve> curves_;
};

struct WordLetter {
    std::string curve;
    std::int64_t exponent = 1;

    bool operator==(const WordLetter&) const = default;
};

// A product of Dehn twist powers written as a function composition: the
// last letter acts first.
class MonodromyWord {
public:
    MonodromyWord() = default;
    MonodromyWord(std::initializer_list<WordLetter> letters) : letters_(letters) {}
    explicit MonodromyWord(std::vector<WordLetter> letters) : letters_(std::move(letters)) {}

    const std::vector<WordLetter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // t^e_c composed on the left (applied last).
    MonodromyWord prepended(WordLetter letter) const;
    // this ∘ other: other acts first.
    MonodromyWord then_after(const MonodromyWord& other) const;
    // Same word with zero-exponent letters dropped.
    MonodromyWord normalized() const;

    bool operator==(const MonodromyWord&) const = default;

private:
    std::vector<WordLetter> letters_;
};

std::ostream& operator<<(std::ostream& os, const MonodromyWord& w);

// The standard form J: block diagonal with blocks [[0, 1], [-1, 0]].
IntMatrix symplectic_form(std::size_t genus);

// Integer matrix M with M^T J M = J, checked on construction.
class SymplecticMatrix {
public:
    // Throws DomainError (NotSymplectic) when the check fails.
    explicit SymplecticMatrix(IntMatrix m);
    static SymplecticMatrix identity(std::size_t genus);

    std::size_t genus() const { return m_.rows() / 2; }
    const IntMatrix& matrix() const { return m_; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    // J^{-1} M^T J, exact.
    SymplecticMatrix inverse() const;
    SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;
    HomologyClass operator*(const HomologyClass& x) const;
    SymplecticMatrix pow(std::int64_t n) const;

    bool is_identity() const { return m_.is_identity(); }
    bool operator==(const SymplecticMatrix&) const = default;

private:
    IntMatrix m_;
};

bool is_symplectic(const IntMatrix& m);

// Integer polynomial, lowest degree first, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    // -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    BigInt evaluate(const BigInt& t) const;
    bool is_palindromic() const;
    IntPolynomial negated() const;
    IntPolynomial reversed() const;
    // Strips the largest power of t dividing the polynomial.
    IntPolynomial without_t_power() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Equality in Z[t, t^-1] modulo the units ±t^k and the substitution t -> 1/t.
bool equal_up_to_units(const IntPolynomial& p, const IntPolynomial& q);

struct AlexanderReport {
    IntPolynomial characteristic;  // det(tI - M)
    // Sign-normalized so the value at 1 is positive when nonzero; read as
    // t^{laurent_shift} times these coefficients for the symmetric form.
    IntPolynomial normalized;
    std::int64_t laurent_shift = 0;
    BigInt at_one;
    BigInt at_minus_one;
};

// <x, y> = x^T J y. Throws DomainError (GenusMismatch).
BigInt pairing(const HomologyClass& x, const HomologyClass& y);

// x -> x + <x, c> c, the action of a right-handed Dehn twist.
SymplecticMatrix transvection(const HomologyClass& c);
// x -> x + n <x, c> c
SymplecticMatrix transvection_power(const HomologyClass& c, std::int64_t n);

// Throws DomainError (UnknownCurve) for an unresolved letter.
SymplecticMatrix evaluate_word(const MonodromyWord& w, const CurveTable& curves);

// Symplectic S with S v = a_1. Throws DomainError (NotPrimitive).
SymplecticMatrix reduce_to_first_basis_vector(const HomologyClass& v);

// Integer symplectic G with G v1 = v2. Throws DomainError (NotPrimitive,
// GenusMismatch).
SymplecticMatrix symplectic_transporter(const HomologyClass& v1, const HomologyClass& v2);

// det(tI - M) by Faddeev-LeVerrier.
IntPolynomial characteristic_polynomial(const IntMatrix& m);
AlexanderReport alexander_polynomial(const SymplecticMatrix& m);

}  // namespace fibercalc
