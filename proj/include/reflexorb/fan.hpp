#pragma once

#include "reflexorb/polytope.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace reflexorb {

/// Rational polyhedral cone spanned by primitive rays of a fan.
struct Cone {
    std::vector<std::size_t> ray_ids;         // sorted
    std::vector<LatticeVector> generators;    // rays in ray_ids order
    std::size_t dim = 0;                      // dimension of the linear span
    std::optional<std::size_t> face_ref;      // face of Δ° coned over, if any

    bool simplicial() const { return generators.size() == dim; }
    /// Generator coordinates sorted lexicographically; stable identity across runs.
    std::vector<LatticeVector> key() const;
};

class Fan {
public:
    Fan(std::size_t n, std::vector<LatticeVector> rays, std::vector<Cone> cones);

    std::size_t dim() const { return n_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    std::size_t ray_count() const { return rays_.size(); }
    /// All cones including the zero cone, sorted by (dim, key).
    const std::vector<Cone>& cones() const { return cones_; }
    std::vector<const Cone*> cones_of_dim(std::size_t d) const;
    std::optional<std::size_t> find_cone(const std::vector<std::size_t>& ray_ids) const;

private:
    std::size_t n_;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> cones_;
    std::map<std::vector<std::size_t>, std::size_t> lookup_;
};

/// Fan over the proper faces of Δ°: one ray per vertex of Δ°.
Fan normal_fan(const ReflexivePair& pair);

/// Simplicial fan from its maximal cones; every subset of a maximal cone's
/// generators is a face. Throws ErrorCode::not_simplicial on dependent generators.
Fan fan_from_cones(std::size_t n, std::span<const std::vector<LatticeVector>> maximal);

bool is_simplicial(const Fan& fan);

/// Lattice point κ = Σ a_i v_i with every a_i in [0, 1).
struct BoxElement {
    std::vector<Rational> coeffs;
    LatticeVector point;
    Rational age;

    bool interior() const;
};

/// Index of the generated sublattice in its saturation (Smith normal form).
Integer quotient_group_order(const Cone& cone);

/// Box elements of a simplicial cone, sorted by point. With interior_only the
/// elements with a zero coefficient are dropped.
std::vector<BoxElement> box_elements(const Cone& cone, bool interior_only);

struct ToricSector {
    std::size_t cone = 0;  // index into Fan::cones()
    BoxElement box;
    std::size_t support_dim = 0;  // dimension of the orbit closure
    Integer group_order;
};

/// One sector per (cone, interior box element), ordered by cone key then point.
std::vector<ToricSector> toric_twisted_sectors(const Fan& fan);

bool is_gorenstein_fan(const Fan& fan);

}  // namespace reflexorb
