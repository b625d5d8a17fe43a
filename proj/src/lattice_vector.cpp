#include "reflexorb/lattice_vector.hpp"

#include "reflexorb/error.hpp"

#include <algorithm>

namespace reflexorb {

LatticeVector::LatticeVector(std::initializer_list<long> coords)
{
    coords_.reserve(coords.size());
    for (long x : coords)
        coords_.emplace_back(x);
}

bool LatticeVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

Integer LatticeVector::content() const
{
    return gcd_of(coords_);
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o)
{
    if (o.dim() != dim())
        throw Error(ErrorCode::invalid_argument, "lattice vector dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o)
{
    if (o.dim() != dim())
        throw Error(ErrorCode::invalid_argument, "lattice vector dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

LatticeVector operator-(LatticeVector a)
{
    for (auto& x : a.coords_)
        x = -x;
    return a;
}

LatticeVector operator*(const Integer& k, LatticeVector a)
{
    for (auto& x : a.coords_)
        x *= k;
    return a;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b)
{
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.dim() <=> b.dim();
}

std::string LatticeVector::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ',';
        s += coords_[i].get_str();
    }
    return s + ")";
}

Integer dot(const LatticeVector& a, const LatticeVector& b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorCode::invalid_argument, "pairing of vectors with different dimensions");
    Integer s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        s += a[i] * b[i];
    return s;
}

IntMatrix rows_matrix(std::span<const LatticeVector> vs)
{
    const std::size_t cols = vs.empty() ? 0 : vs.front().dim();
    IntMatrix m(vs.size(), cols);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = vs[i][j];
    return m;
}

int affine_dimension(std::span<const LatticeVector> pts)
{
    if (pts.empty())
        return -1;
    const std::size_t n = pts.front().dim();
    IntMatrix lifted(pts.size(), n + 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            lifted(i, j) = pts[i][j];
        lifted(i, n) = 1;
    }
    return static_cast<int>(integer_rank(lifted)) - 1;
}

}  // namespace reflexorb
