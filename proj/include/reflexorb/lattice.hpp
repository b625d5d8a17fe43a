#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reflexorb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix to_rational(const IntMatrix& m);

struct HermiteForm {
    IntMatrix h;
    IntMatrix u;  // unimodular, u * m == h
};

struct SmithForm {
    IntMatrix d;
    IntMatrix u;  // unimodular, u * m * v == d
    IntMatrix v;
};

/// Row-style Hermite normal form: pivots positive, entries above a pivot
/// reduced into [0, pivot), zero rows last.
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Smith normal form with nonnegative diagonal d_1 | d_2 | ... .
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

std::size_t rational_rank(const RatMatrix& m);
std::size_t integer_rank(const IntMatrix& m);

/// Exact determinant via Bareiss elimination. Throws on non-square input.
Integer integer_determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column of the reduced echelon form.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

/// Unique solution of m x = b, or nullopt when the system is inconsistent or
/// underdetermined.
std::optional<std::vector<Rational>> solve_unique(const RatMatrix& m, std::span<const Rational> b);

Integer gcd_of(std::span<const Integer> values);

std::string to_string(const Rational& q);

}  // namespace reflexorb
