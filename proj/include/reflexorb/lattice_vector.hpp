#pragma once

#include "reflexorb/lattice.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace reflexorb {

/// Integer point of N = Z^n or M = Z^n. Both lattices use the dot pairing.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t dim) : coords_(dim) {}
    explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<long> coords);

    std::size_t dim() const { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Integer> coords() const { return coords_; }

    bool is_zero() const;
    /// gcd of the coordinates; zero for the zero vector.
    Integer content() const;
    bool is_primitive() const { return content() == 1; }

    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator-(LatticeVector a);
    friend LatticeVector operator*(const Integer& k, LatticeVector a);

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
    /// Lexicographic order, first coordinate most significant.
    friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

    std::string str() const;

private:
    std::vector<Integer> coords_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);

/// Matrix whose rows are the given vectors.
IntMatrix rows_matrix(std::span<const LatticeVector> vs);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(std::span<const LatticeVector> pts);

}  // namespace reflexorb
