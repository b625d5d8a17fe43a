#pragma once

#include "reflexorb/lattice_vector.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace reflexorb {

/// Supporting half-space <m, normal> + offset >= 0 with a primitive normal.
struct FacetInequality {
    LatticeVector normal;
    Integer offset;

    Integer evaluate(const LatticeVector& m) const { return dot(m, normal) + offset; }
    friend bool operator==(const FacetInequality&, const FacetInequality&) = default;
};

/// A face of a lattice polytope. Identified within its polytope by the sorted
/// vertex id set.
struct Face {
    int dim = 0;
    std::vector<std::size_t> vertex_ids;
    std::vector<std::size_t> active_facets;
    std::vector<LatticeVector> lattice_points;
    /// Lattice points in the relative interior; l*(F) is their count.
    std::vector<LatticeVector> interior_points;

    std::size_t l() const { return lattice_points.size(); }
    std::size_t l_star() const { return interior_points.size(); }
};

/// Full-dimensional lattice polytope with facets and the complete face lattice.
///
/// Faces are stored sorted by (dim, vertex_ids); the last entry is the polytope
/// itself. Vertices keep the order of their first appearance in the input and
/// facets are sorted lexicographically by normal.
class LatticePolytope {
public:
    /// Exact convex hull by double description. Throws ErrorCode::not_full_dimensional
    /// when the points do not affinely span Z^n.
    static LatticePolytope from_vertices(std::span<const LatticeVector> points);

    std::size_t dim() const { return n_; }
    const std::vector<LatticeVector>& vertices() const { return vertices_; }
    const std::vector<FacetInequality>& facets() const { return facets_; }
    const std::vector<Face>& faces() const { return faces_; }
    std::span<const Face> faces_of_dim(int d) const;
    const Face& whole() const { return faces_.back(); }
    bool is_proper(std::size_t face_index) const { return face_index + 1 < faces_.size(); }
    std::optional<std::size_t> find_face(const std::vector<std::size_t>& vertex_ids) const;
    std::size_t face_index(const Face& f) const;
    /// The (n-1)-face cut out by facet inequality `facet`.
    const Face& facet_face(std::size_t facet) const { return faces_[facet_faces_.at(facet)]; }

    /// All lattice points, lexicographic.
    const std::vector<LatticeVector>& points() const { return points_; }
    bool contains(const LatticeVector& m) const;
    std::vector<std::size_t> saturated_facets(const LatticeVector& m) const;

    /// Number of faces per dimension 0..n-1.
    std::vector<std::size_t> f_vector() const;

private:
    std::size_t n_ = 0;
    std::vector<LatticeVector> vertices_;
    std::vector<FacetInequality> facets_;
    std::vector<Face> faces_;
    std::vector<std::size_t> dim_begin_;  // faces_of_dim(d) = [dim_begin_[d], dim_begin_[d+1])
    std::map<std::vector<std::size_t>, std::size_t> face_lookup_;
    std::vector<std::size_t> facet_faces_;
    std::vector<LatticeVector> points_;
};

/// Origin strictly interior and every facet at lattice distance one.
bool is_reflexive(const LatticePolytope& p);

/// Polar dual of a reflexive polytope; its vertices are the facet normals of p
/// in facet order. Throws ErrorCode::not_reflexive otherwise.
LatticePolytope polar_dual(const LatticePolytope& p);

/// Lattice points of the k-th dilate: bounding box scan filtered by the facet
/// inequalities, lexicographic.
std::vector<LatticeVector> lattice_points(const LatticePolytope& p, unsigned k = 1);

const std::vector<LatticeVector>& interior_lattice_points(const Face& f);

/// A reflexive polytope Δ in M together with its polar Δ° in N and the
/// inclusion-reversing bijection of their proper faces.
class ReflexivePair {
public:
    static ReflexivePair from_polar(LatticePolytope polar);
    static ReflexivePair from_delta(LatticePolytope delta);

    std::size_t dim() const { return delta_.dim(); }
    const LatticePolytope& delta() const { return delta_; }
    const LatticePolytope& polar() const { return polar_; }

    /// F° (index into polar().faces()) -> F̂° (index into delta().faces()).
    std::size_t dual_of_polar_face(std::size_t face) const { return polar_to_delta_.at(face); }
    std::size_t dual_of_delta_face(std::size_t face) const { return delta_to_polar_.at(face); }

    /// Facet of Δ dual to the vertex (ray) v_i of Δ°.
    std::size_t delta_facet_of_ray(std::size_t ray) const { return ray_to_delta_facet_.at(ray); }

    /// Exchanges the roles of Δ and Δ°.
    ReflexivePair swapped() const;

private:
    ReflexivePair(LatticePolytope delta, LatticePolytope polar);

    LatticePolytope delta_;
    LatticePolytope polar_;
    std::vector<std::size_t> polar_to_delta_;
    std::vector<std::size_t> delta_to_polar_;
    std::vector<std::size_t> ray_to_delta_facet_;
};

/// Pair built from Δ° (the N-side polytope whose faces the fan cones over).
ReflexivePair build_reflexive_pair(const LatticePolytope& polar);

}  // namespace reflexorb
