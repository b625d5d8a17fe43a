#pragma once

#include "reflexorb/polytope.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace reflexorb {

/// Monomials x^m of the anticanonical degree, one per lattice point of Δ.
struct MonomialBasis {
    std::vector<LatticeVector> points;  // lexicographic
    std::map<LatticeVector, std::size_t> index;

    static MonomialBasis of(const ReflexivePair& pair);
    std::size_t size() const { return points.size(); }
};

/// Nonzero coefficients λ_m of f = Σ λ_m x^m.
struct GenericCoefficients {
    MonomialBasis basis;
    std::vector<Integer> lambda;  // aligned with basis.points

    /// Uniform integers in [1, 10^6] from a seeded mt19937_64.
    static GenericCoefficients draw(const ReflexivePair& pair, std::uint64_t seed);
    const Integer& at(const LatticeVector& m) const { return lambda[basis.index.at(m)]; }
};

/// Lexicographically first n+1 rays whose lifts (v, 1) are linearly independent.
std::vector<std::size_t> independent_rays(const ReflexivePair& pair);

/// Rows of x_k ∂f/∂x_k for the selected rays: entry λ_m (<m, v_k> + 1).
IntMatrix euler_rows(const ReflexivePair& pair, const GenericCoefficients& coeffs);
/// Same for every ray of the fan.
IntMatrix all_euler_rows(const ReflexivePair& pair, const GenericCoefficients& coeffs);

/// One row per ray v_i and interior point m* of the dual facet F_i of Δ:
/// entry λ_{m-m*} (<m - m*, v_i> + 1) when m - m* lies in Δ, else 0.
IntMatrix facet_interior_rows(const ReflexivePair& pair, const GenericCoefficients& coeffs);

struct JacobianPiece {
    IntMatrix generators;
    std::size_t gamma = 0;  // n + 1 + Σ l*(F_i)
};

JacobianPiece jacobian_piece(const ReflexivePair& pair, const GenericCoefficients& coeffs);

struct JacobianReport {
    std::uint64_t seed = 0;      // seed of the accepted draw
    std::size_t attempts = 0;
    std::size_t rank = 0;
    std::size_t gamma = 0;
    std::size_t l_delta = 0;
    std::size_t quotient = 0;    // l(Δ) - rank
    std::int64_t formula = 0;    // closed formula for h^{n-2,1}
    bool generic = false;        // rank reached gamma within the allowed redraws
    bool agrees = false;
};

/// Exact rank of the degree-β₀ piece of the Jacobian ideal. Redraws up to five
/// further seeds when a draw falls short of gamma.
JacobianReport jacobian_rank_check(const ReflexivePair& pair, std::uint64_t seed, bool force = false);

/// E with E(i, j) = <m_i, v_j> + 1 for the given points and rays.
IntMatrix incidence_matrix_e(std::span<const LatticeVector> points, std::span<const LatticeVector> rays);

/// Builds E from n independent vertices of Δ plus the origin and the selected
/// rays, and checks det P = Π λ_{m_i} det E != 0.
bool verify_matrix_p_nonsingular(const ReflexivePair& pair, const GenericCoefficients& coeffs);

}  // namespace reflexorb
