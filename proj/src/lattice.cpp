#include "reflexorb/lattice.hpp"

#include "reflexorb/error.hpp"

#include <algorithm>
#include <utility>

namespace reflexorb {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorCode::invalid_argument, "ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

template class Matrix<Integer>;
template class Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::invalid_argument, "matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            q(i, j) = m(i, j);
    return q;
}

namespace {

// row[target] -= factor * row[source], mirrored on the transform.
void row_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor)
{
    if (sgn(factor) == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(target, j) -= factor * m(source, j);
}

void col_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor)
{
    if (sgn(factor) == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, target) -= factor * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t i)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = -m(i, j);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer trunc_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Clears denominators row by row so the rank is preserved.
IntMatrix integral_rows(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& x : m.row(i))
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return out;
}

// Fraction-free row echelon reduction in place. Returns the rank and the
// number of row swaps performed.
std::pair<std::size_t, std::size_t> bareiss_eliminate(IntMatrix& a)
{
    Integer prev = 1;
    std::size_t rank = 0;
    std::size_t swaps = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && sgn(a(pivot, col)) == 0)
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != rank) {
            a.swap_rows(pivot, rank);
            ++swaps;
        }
        const Integer& p = a(rank, col);
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            const Integer f = a(i, col);
            for (std::size_t j = col + 1; j < a.cols(); ++j) {
                Integer t = p * a(i, j) - f * a(rank, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    return {rank, swaps};
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m)
{
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
        // Euclid on the column below pivot_row until a single nonzero survives.
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = pivot_row; i < h.rows(); ++i) {
                if (sgn(h(i, col)) == 0)
                    continue;
                if (best == h.rows() || abs(h(i, col)) < abs(h(best, col)))
                    best = i;
            }
            if (best == h.rows())
                break;
            h.swap_rows(best, pivot_row);
            u.swap_rows(best, pivot_row);
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
                if (sgn(h(i, col)) == 0)
                    continue;
                const Integer q = floor_div(h(i, col), h(pivot_row, col));
                row_axpy(h, i, pivot_row, q);
                row_axpy(u, i, pivot_row, q);
                if (sgn(h(i, col)) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (sgn(h(pivot_row, col)) == 0)
            continue;
        if (sgn(h(pivot_row, col)) < 0) {
            negate_row(h, pivot_row);
            negate_row(u, pivot_row);
        }
        for (std::size_t i = 0; i < pivot_row; ++i) {
            const Integer q = floor_div(h(i, col), h(pivot_row, col));
            row_axpy(h, i, pivot_row, q);
            row_axpy(u, i, pivot_row, q);
        }
        ++pivot_row;
    }
    return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntMatrix& m)
{
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t limit = std::min(d.rows(), d.cols());

    for (std::size_t t = 0; t < limit; ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t bi = d.rows(), bj = d.cols();
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j)
                    if (sgn(d(i, j)) != 0 && (bi == d.rows() || abs(d(i, j)) < abs(d(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == d.rows())
                goto done;
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                const Integer q = trunc_div(d(i, t), d(t, t));
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                dirty = dirty || sgn(d(i, t)) != 0;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                const Integer q = trunc_div(d(t, j), d(t, t));
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                dirty = dirty || sgn(d(t, j)) != 0;
            }
            if (dirty)
                continue;

            // Divisibility: fold an offending row into row t and retry.
            std::size_t offender = d.rows();
            for (std::size_t i = t + 1; i < d.rows() && offender == d.rows(); ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        offender = i;
                        break;
                    }
            if (offender == d.rows())
                break;
            row_axpy(d, t, offender, Integer(-1));
            row_axpy(u, t, offender, Integer(-1));
        }
        if (sgn(d(t, t)) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
done:
    return {std::move(d), std::move(u), std::move(v)};
}

std::vector<Integer> elementary_divisors(const IntMatrix& m)
{
    const SmithForm s = smith_normal_form(m);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
        if (sgn(s.d(i, i)) != 0)
            out.push_back(s.d(i, i));
    return out;
}

std::size_t integer_rank(const IntMatrix& m)
{
    // Eliminate along the shorter side.
    IntMatrix a = m.rows() <= m.cols() ? m : m.transpose();
    return bareiss_eliminate(a).first;
}

std::size_t rational_rank(const RatMatrix& m)
{
    return integer_rank(integral_rows(m));
}

Integer integer_determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorCode::invalid_argument, "determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    IntMatrix a = m;
    const auto [rank, swaps] = bareiss_eliminate(a);
    if (rank < a.rows())
        return 0;
    Integer det = a(a.rows() - 1, a.cols() - 1);
    return swaps % 2 ? Integer(-det) : det;
}

bool is_unimodular(const IntMatrix& m)
{
    return m.rows() == m.cols() && abs(integer_determinant(m)) == 1;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, col)) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(p, r);
        const Rational inv = 1 / a(r, col);
        for (auto& x : a.row(r))
            x *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, col)) == 0)
                continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m)
{
    RatMatrix a = m;
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> x(a.cols());
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -a(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_unique(const RatMatrix& m, std::span<const Rational> b)
{
    if (b.size() != m.rows())
        throw Error(ErrorCode::invalid_argument, "right-hand side length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    if (pivots.size() != m.cols())
        return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, m.cols());
    return x;
}

Integer gcd_of(std::span<const Integer> values)
{
    Integer g = 0;
    for (const auto& x : values)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace reflexorb
