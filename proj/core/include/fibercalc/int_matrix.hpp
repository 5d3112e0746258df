#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibercalc {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

// Dense square-or-rectangular matrix of arbitrary-precision integers,
// row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const BigInt> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(std::span<const BigInt> v) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;

    bool is_identity() const;
    // Fraction-free Gaussian elimination.
    BigInt determinant() const;
    BigInt trace() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace fibercalc
