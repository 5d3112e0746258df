#include "fibercalc/homology.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fibercalc/error.hpp"

namespace fibercalc {

namespace {

void check_dimension(std::size_t dim) {
    if (dim == 0 || dim % 2 != 0) {
        std::ostringstream os;
        os << "homology vector length must be 2*genus with genus >= 1, got " << dim;
        throw DomainError(os.str());
    }
    if (dim / 2 > kMaxGenus) {
        std::ostringstream os;
        os << "genus " << dim / 2 << " exceeds the supported maximum " << kMaxGenus;
        throw DomainError(os.str());
    }
}

void check_same_genus(const HomologyClass& x, const HomologyClass& y) {
    if (x.genus() != y.genus()) {
        std::ostringstream os;
        os << "GenusMismatch: genus " << x.genus() << " vs genus " << y.genus();
        throw DomainError(os.str());
    }
}

// Row operations on a matrix S paired with the same operation on a vector
// v, so that S_new = E S and v_new = E v for a symplectic elementary E.
struct Reducer {
    IntMatrix s;
    IntVector v;

    void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < s.cols(); ++j) s(dst, j) += k * s(src, j);
        v[dst] += k * v[src];
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < s.cols(); ++j) s(r, j) = -s(r, j);
        v[r] = -v[r];
    }

    // a_i += k b_i, or b_i += k a_i: SL(2, Z) inside one handle.
    void in_handle(std::size_t handle, bool onto_a, const BigInt& k) {
        if (onto_a)
            add_row(2 * handle, 2 * handle + 1, k);
        else
            add_row(2 * handle + 1, 2 * handle, k);
    }
    // a_i += k a_j together with b_j -= k b_i: the symplectic lift
    // A (+) A^{-T} of an elementary A in GL(g, Z).
    void across_handles(std::size_t i, std::size_t j, const BigInt& k) {
        add_row(2 * i, 2 * j, k);
        add_row(2 * j + 1, 2 * i + 1, -k);
    }
};

// Euclid on the pair (x, y) using x += k y and y += k x until y == 0.
template <typename AddToX, typename AddToY>
void euclid(const BigInt& x0, const BigInt& y0, AddToX add_to_x, AddToY add_to_y) {
    BigInt x = x0;
    BigInt y = y0;
    while (y != 0) {
        BigInt q = x / y;  // truncating
        if (q != 0) {
            add_to_x(-q);
            x -= q * y;
        }
        if (x == 0) {
            // (0, y) -> (y, y) -> (y, 0)
            add_to_x(BigInt(1));
            x = y;
            add_to_y(BigInt(-1));
            y = 0;
            break;
        }
        BigInt r = y / x;
        add_to_y(-r);
        y -= r * x;
    }
}

}  // namespace

// ---------------------------------------------------------------- classes

HomologyClass::HomologyClass(IntVector coords) : coords_(std::move(coords)) {
    check_dimension(coords_.size());
}

HomologyClass::HomologyClass(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
    check_dimension(coords_.size());
}

HomologyClass HomologyClass::basis(std::size_t genus, std::size_t index) {
    IntVector v(2 * genus);
    if (index >= v.size()) throw DomainError("basis index out of range");
    v[index] = 1;
    return HomologyClass(std::move(v));
}

HomologyClass HomologyClass::zero(std::size_t genus) { return HomologyClass(IntVector(2 * genus)); }

bool HomologyClass::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& x) { return x == 0; });
}

BigInt HomologyClass::content() const {
    BigInt g = 0;
    for (const auto& x : coords_) g = boost::multiprecision::gcd(g, BigInt(abs(x)));
    return g;
}

bool HomologyClass::is_primitive() const { return content() == 1; }

HomologyClass HomologyClass::embed(std::size_t total_genus, std::size_t first_handle) const {
    if (first_handle + genus() > total_genus)
        throw DomainError("embedding does not fit in the target genus");
    IntVector v(2 * total_genus);
    std::copy(coords_.begin(), coords_.end(), v.begin() + 2 * first_handle);
    return HomologyClass(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const HomologyClass& c) {
    os << "(";
    for (std::size_t i = 0; i < c.dimension(); ++i) os << (i ? "," : "") << c[i];
    return os << ")";
}

CurveTable::CurveTable(std::size_t genus) : genus_(genus) {
    if (genus == 0 || genus > kMaxGenus) {
        std::ostringstream os;
        os << "curve table genus must be in [1, " << kMaxGenus << "], got " << genus;
        throw DomainError(os.str());
    }
}

void CurveTable::add(std::string name, HomologyClass homology) {
    if (contains(name)) throw DomainError("NamespaceCollision: duplicate curve name '" + name + "'");
    if (homology.genus() != genus_) {
        std::ostringstream os;
        os << "GenusMismatch: curve '" << name << "' has genus " << homology.genus()
           << ", table has genus " << genus_;
        throw DomainError(os.str());
    }
    curves_.push_back({std::move(name), std::move(homology)});
}

bool CurveTable::contains(std::string_view name) const { return find(name) != nullptr; }

const HomologyClass* CurveTable::find(std::string_view name) const {
    auto it = std::find_if(curves_.begin(), curves_.end(),
                           [&](const Curve& c) { return c.name == name; });
    return it == curves_.end() ? nullptr : &it->homology;
}

const HomologyClass& CurveTable::at(std::string_view name) const {
    if (const auto* c = find(name)) return *c;
    throw DomainError("UnknownCurve: '" + std::string(name) + "'");
}

MonodromyWord MonodromyWord::prepended(WordLetter letter) const {
    std::vector<WordLetter> out;
    out.reserve(letters_.size() + 1);
    out.push_back(std::move(letter));
    out.insert(out.end(), letters_.begin(), letters_.end());
    return MonodromyWord(std::move(out));
}

MonodromyWord MonodromyWord::then_after(const MonodromyWord& other) const {
    std::vector<WordLetter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return MonodromyWord(std::move(out));
}

MonodromyWord MonodromyWord::normalized() const {
    std::vector<WordLetter> out;
    std::copy_if(letters_.begin(), letters_.end(), std::back_inserter(out),
                 [](const WordLetter& l) { return l.exponent != 0; });
    return MonodromyWord(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const MonodromyWord& w) {
    if (w.empty()) return os << "id";
    for (std::size_t i = 0; i < w.length(); ++i) {
        const auto& l = w.letters()[i];
        os << (i ? " o " : "") << "t_" << l.curve;
        if (l.exponent != 1) os << "^" << l.exponent;
    }
    return os;
}

// ---------------------------------------------------------------- matrices

IntMatrix symplectic_form(std::size_t genus) {
    IntMatrix j(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        j(2 * i, 2 * i + 1) = 1;
        j(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

bool is_symplectic(const IntMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) return false;
    // (M^T J M)_{pq} = sum_i M_{2i,p} M_{2i+1,q} - M_{2i+1,p} M_{2i,q}
    const std::size_t n = m.rows();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p; q < n; ++q) {
            BigInt acc = 0;
            for (std::size_t i = 0; i < n; i += 2)
                acc += m(i, p) * m(i + 1, q) - m(i + 1, p) * m(i, q);
            BigInt expected = 0;
            if (p % 2 == 0 && q == p + 1) expected = 1;
            if (acc != expected) return false;
        }
    }
    return true;
}

SymplecticMatrix::SymplecticMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DomainError("NotSymplectic: matrix is not square");
    check_dimension(m_.rows());
    if (!is_symplectic(m_)) throw DomainError("NotSymplectic: M^T J M != J");
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t genus) {
    return SymplecticMatrix(IntMatrix::identity(2 * genus));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    // J^{-1} = -J, so M^{-1} = -J M^T J. Entrywise: (M^{-1})_{pq} =
    // s(p) s(q) M_{q', p'} where ' swaps a_i <-> b_i and s is +1 on b rows.
    const std::size_t n = m_.rows();
    IntMatrix inv(n, n);
    auto partner = [](std::size_t i) { return i ^ std::size_t{1}; };
    auto sign = [](std::size_t i) { return i % 2 == 0 ? 1 : -1; };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const BigInt& v = m_(partner(q), partner(p));
            inv(p, q) = sign(p) * sign(q) == 1 ? v : BigInt(-v);
        }
    return SymplecticMatrix(std::move(inv));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
    if (genus() != rhs.genus()) throw DomainError("GenusMismatch in symplectic product");
    return SymplecticMatrix(m_ * rhs.m_);
}

HomologyClass SymplecticMatrix::operator*(const HomologyClass& x) const {
    if (genus() != x.genus()) throw DomainError("GenusMismatch applying symplectic matrix");
    return HomologyClass(m_ * std::span<const BigInt>(x.coords()));
}

SymplecticMatrix SymplecticMatrix::pow(std::int64_t n) const {
    SymplecticMatrix base = n < 0 ? inverse() : *this;
    std::uint64_t e = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    SymplecticMatrix acc = identity(genus());
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return acc;
}

BigInt pairing(const HomologyClass& x, const HomologyClass& y) {
    check_same_genus(x, y);
    BigInt acc = 0;
    for (std::size_t i = 0; i < x.dimension(); i += 2) acc += x[i] * y[i + 1] - x[i + 1] * y[i];
    return acc;
}

SymplecticMatrix transvection_power(const HomologyClass& c, std::int64_t n) {
    // T^n = I + n c (Jc)^T, since <c, c> = 0.
    const std::size_t dim = c.dimension();
    IntVector jc(dim);
    for (std::size_t i = 0; i < dim; i += 2) {
        jc[i] = c[i + 1];
        jc[i + 1] = -c[i];
    }
    IntMatrix m = IntMatrix::identity(dim);
    const BigInt scale = n;
    for (std::size_t i = 0; i < dim; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) m(i, j) += scale * c[i] * jc[j];
    }
    return SymplecticMatrix(std::move(m));
}

SymplecticMatrix transvection(const HomologyClass& c) { return transvection_power(c, 1); }

SymplecticMatrix evaluate_word(const MonodromyWord& w, const CurveTable& curves) {
    SymplecticMatrix acc = SymplecticMatrix::identity(curves.genus());
    for (const auto& letter : w.letters()) {
        const HomologyClass& c = curves.at(letter.curve);
        acc = acc * transvection_power(c, letter.exponent);
    }
    return acc;
}

SymplecticMatrix reduce_to_first_basis_vector(const HomologyClass& v) {
    if (!v.is_primitive()) {
        std::ostringstream os;
        os << "NotPrimitive: class " << v << " has content " << v.content();
        throw DomainError(os.str());
    }
    const std::size_t g = v.genus();
    Reducer red{IntMatrix::identity(2 * g), v.coords()};

    // Clear every b coordinate, leaving gcd(a_i, b_i) in a_i.
    for (std::size_t h = 0; h < g; ++h) {
        euclid(
            red.v[2 * h], red.v[2 * h + 1],
            [&](const BigInt& k) { red.in_handle(h, true, k); },
            [&](const BigInt& k) { red.in_handle(h, false, k); });
    }
    // Gather the a coordinates into a_1.
    for (std::size_t h = 1; h < g; ++h) {
        euclid(
            red.v[0], red.v[2 * h],
            [&](const BigInt& k) { red.across_handles(0, h, k); },
            [&](const BigInt& k) { red.across_handles(h, 0, k); });
    }
    if (red.v[0] == -1) {
        red.negate_row(0);
        red.negate_row(1);
    }
    if (red.v[0] != 1) throw VerificationError("symplectic reduction did not reach a_1");
    return SymplecticMatrix(std::move(red.s));
}

SymplecticMatrix symplectic_transporter(const HomologyClass& v1, const HomologyClass& v2) {
    check_same_genus(v1, v2);
    if (!v1.is_primitive()) throw DomainError("NotPrimitive: first class is not primitive");
    if (!v2.is_primitive()) throw DomainError("NotPrimitive: second class is not primitive");
    // S_i v_i = a_1, so G = S_2^{-1} S_1 carries v1 to v2.
    SymplecticMatrix g = reduce_to_first_basis_vector(v2).inverse() * reduce_to_first_basis_vector(v1);
    if (g * v1 != v2) throw VerificationError("transporter does not carry v1 to v2");
    return g;
}

// ---------------------------------------------------------------- polynomials

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

bool IntPolynomial::is_palindromic() const {
    IntPolynomial stripped = without_t_power();
    return std::equal(stripped.coeffs_.begin(), stripped.coeffs_.end(), stripped.coeffs_.rbegin());
}

IntPolynomial IntPolynomial::negated() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reversed() const {
    return IntPolynomial(std::vector<BigInt>(coeffs_.rbegin(), coeffs_.rend()));
}

IntPolynomial IntPolynomial::without_t_power() const {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
    return IntPolynomial(std::vector<BigInt>(first, coeffs_.end()));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    os << "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? ", " : "") << p.coeffs()[i];
    return os << "]";
}

bool equal_up_to_units(const IntPolynomial& p, const IntPolynomial& q) {
    const IntPolynomial a = p.without_t_power();
    const IntPolynomial b = q.without_t_power().reversed().without_t_power();
    const IntPolynomial c = q.without_t_power();
    return a == c || a == c.negated() || a == b || a == b.negated();
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = 1;
    // N_1 = I; N_k = M N_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(M N_k) / k.
    IntMatrix acc = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            acc = m * acc;
            for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeffs[n - k + 1];
        }
        BigInt tr = (m * acc).trace();
        BigInt kk = static_cast<unsigned long long>(k);
        if (tr % kk != 0) throw VerificationError("non-integral Faddeev-LeVerrier step");
        coeffs[n - k] = -tr / kk;
    }
    return IntPolynomial(std::move(coeffs));
}

AlexanderReport alexander_polynomial(const SymplecticMatrix& m) {
    AlexanderReport r;
    r.characteristic = characteristic_polynomial(m.matrix());
    r.at_one = r.characteristic.evaluate(1);
    r.normalized = r.at_one < 0 ? r.characteristic.negated() : r.characteristic;
    r.at_one = r.normalized.evaluate(1);
    r.at_minus_one = r.normalized.evaluate(-1);
    r.laurent_shift = -static_cast<std::int64_t>(m.genus());
    return r;
}

}  // namespace fibercalc
