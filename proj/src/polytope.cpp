#include "reflexorb/polytope.hpp"

#include "reflexorb/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace reflexorb {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<std::size_t> bits_to_ids(const Bits& b)
{
    std::vector<std::size_t> ids;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
        ids.push_back(i);
    return ids;
}

LatticeVector lift(const LatticeVector& p)
{
    LatticeVector l(p.dim() + 1);
    for (std::size_t i = 0; i < p.dim(); ++i)
        l[i] = p[i];
    l[p.dim()] = 1;
    return l;
}

void make_primitive(LatticeVector& v)
{
    const Integer g = v.content();
    if (g > 1)
        for (std::size_t i = 0; i < v.dim(); ++i)
            mpz_divexact(v[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
}

// Extreme ray of the cone {y : <p~, y> >= 0 for all processed points}
// together with the processed points it is tight on.
struct Ray {
    LatticeVector y;
    Bits zeros;
};

// Double description of the cone dual to the homogenized point set. Its
// extreme rays (a, b) are exactly the facet inequalities <x, a> + b >= 0.
std::vector<FacetInequality> hull_facets(const std::vector<LatticeVector>& pts)
{
    const std::size_t n = pts.front().dim();
    const std::size_t d = n + 1;
    std::vector<LatticeVector> lifted;
    lifted.reserve(pts.size());
    for (const auto& p : pts)
        lifted.push_back(lift(p));

    // Greedy affinely independent start.
    std::vector<std::size_t> basis;
    std::vector<LatticeVector> chosen;
    for (std::size_t i = 0; i < lifted.size() && basis.size() < d; ++i) {
        chosen.push_back(lifted[i]);
        if (integer_rank(rows_matrix(chosen)) == chosen.size())
            basis.push_back(i);
        else
            chosen.pop_back();
    }
    if (basis.size() < d)
        throw Error(ErrorCode::not_full_dimensional, "points are not full-dimensional");

    // Initial rays: columns of the inverse of the basis matrix.
    const RatMatrix a = to_rational(rows_matrix(chosen));
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> e(d);
        e[j] = 1;
        const auto col = solve_unique(a, e);
        Integer den = 1;
        for (const auto& q : *col)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        LatticeVector y(d);
        for (std::size_t k = 0; k < d; ++k)
            y[k] = (*col)[k].get_num() * (den / (*col)[k].get_den());
        make_primitive(y);
        Bits zeros(pts.size());
        for (std::size_t k = 0; k < d; ++k)
            if (k != j)
                zeros.set(basis[k]);
        rays.push_back({std::move(y), std::move(zeros)});
    }

    Bits processed(pts.size());
    for (auto b : basis)
        processed.set(b);

    for (std::size_t q = 0; q < pts.size(); ++q) {
        if (processed.test(q))
            continue;
        processed.set(q);
        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(rays[i].y, lifted[q]);
            const int sg = sgn(s[i]);
            if (sg > 0)
                pos.push_back(i);
            else if (sg < 0)
                neg.push_back(i);
            else
                rays[i].zeros.set(q);
        }
        if (neg.empty())
            continue;

        std::vector<Ray> created;
        for (auto ip : pos)
            for (auto in : neg) {
                Bits common = rays[ip].zeros & rays[in].zeros;
                if (common.count() + 2 < d)
                    continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
                    if (k != ip && k != in && common.is_subset_of(rays[k].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                LatticeVector y = s[ip] * rays[in].y - s[in] * rays[ip].y;
                make_primitive(y);
                common.set(q);
                created.push_back({std::move(y), std::move(common)});
            }

        std::vector<Ray> kept;
        kept.reserve(rays.size() - neg.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (sgn(s[i]) >= 0)
                kept.push_back(std::move(rays[i]));
        for (auto& r : created)
            kept.push_back(std::move(r));
        rays = std::move(kept);
    }

    std::vector<FacetInequality> facets;
    facets.reserve(rays.size());
    for (const auto& r : rays) {
        LatticeVector normal(n);
        for (std::size_t i = 0; i < n; ++i)
            normal[i] = r.y[i];
        Integer offset = r.y[n];
        const Integer g = normal.content();
        // Affine hulls of facets contain lattice points, so g divides the offset.
        for (std::size_t i = 0; i < n; ++i)
            mpz_divexact(normal[i].get_mpz_t(), normal[i].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(offset.get_mpz_t(), offset.get_mpz_t(), g.get_mpz_t());
        facets.push_back({std::move(normal), std::move(offset)});
    }
    std::sort(facets.begin(), facets.end(), [](const auto& x, const auto& y) {
        if (x.normal != y.normal)
            return x.normal < y.normal;
        return x.offset < y.offset;
    });
    return facets;
}

std::vector<LatticeVector> box_scan(const std::vector<LatticeVector>& vertices,
                                    const std::vector<FacetInequality>& facets, unsigned k)
{
    const std::size_t n = vertices.front().dim();
    const Integer kk = k;
    std::vector<Integer> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = hi[i] = vertices.front()[i];
        for (const auto& v : vertices) {
            if (v[i] < lo[i])
                lo[i] = v[i];
            if (v[i] > hi[i])
                hi[i] = v[i];
        }
        lo[i] *= kk;
        hi[i] *= kk;
    }
    std::vector<Integer> scaled_offsets;
    for (const auto& f : facets)
        scaled_offsets.push_back(f.offset * kk);

    std::vector<LatticeVector> out;
    LatticeVector p(lo);
    for (;;) {
        bool inside = true;
        for (std::size_t f = 0; f < facets.size() && inside; ++f)
            inside = dot(p, facets[f].normal) + scaled_offsets[f] >= 0;
        if (inside)
            out.push_back(p);
        // Odometer with the last coordinate fastest keeps lexicographic order.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (p[i] < hi[i]) {
                ++p[i];
                break;
            }
            p[i] = lo[i];
            if (i == 0)
                return out;
        }
    }
}

}  // namespace

LatticePolytope LatticePolytope::from_vertices(std::span<const LatticeVector> points)
{
    if (points.empty())
        throw Error(ErrorCode::not_full_dimensional, "empty point set is not full-dimensional");
    const std::size_t n = points.front().dim();
    if (n == 0)
        throw Error(ErrorCode::invalid_argument, "ambient dimension must be at least 1");

    std::vector<LatticeVector> pts;
    std::set<LatticeVector> seen;
    for (const auto& p : points) {
        if (p.dim() != n)
            throw Error(ErrorCode::invalid_argument, "points have mixed dimensions");
        if (seen.insert(p).second)
            pts.push_back(p);
    }
    if (affine_dimension(pts) != static_cast<int>(n))
        throw Error(ErrorCode::not_full_dimensional, "points are not full-dimensional");

    LatticePolytope poly;
    poly.n_ = n;
    poly.facets_ = hull_facets(pts);

    // A point is extreme iff the normals of its tight facets have rank n.
    for (const auto& p : pts) {
        std::vector<LatticeVector> tight;
        for (const auto& f : poly.facets_)
            if (sgn(f.evaluate(p)) == 0)
                tight.push_back(f.normal);
        if (tight.size() >= n && integer_rank(rows_matrix(tight)) == n)
            poly.vertices_.push_back(p);
    }

    const std::size_t nv = poly.vertices_.size();
    const std::size_t nf = poly.facets_.size();
    std::vector<Bits> facet_vertices(nf, Bits(nv));
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t v = 0; v < nv; ++v)
            if (sgn(poly.facets_[f].evaluate(poly.vertices_[v])) == 0)
                facet_vertices[f].set(v);

    // Faces are the nonempty intersections of facets.
    std::set<Bits> found(facet_vertices.begin(), facet_vertices.end());
    std::deque<Bits> queue(found.begin(), found.end());
    while (!queue.empty()) {
        const Bits x = queue.front();
        queue.pop_front();
        for (const auto& fv : facet_vertices) {
            Bits y = x & fv;
            if (y.none() || y == x)
                continue;
            if (found.insert(y).second)
                queue.push_back(std::move(y));
        }
    }
    Bits all(nv);
    all.set();
    found.insert(all);

    for (const auto& vs : found) {
        Face face;
        face.vertex_ids = bits_to_ids(vs);
        std::vector<LatticeVector> fverts;
        for (auto id : face.vertex_ids)
            fverts.push_back(poly.vertices_[id]);
        face.dim = affine_dimension(fverts);
        for (std::size_t f = 0; f < nf; ++f)
            if (vs.is_subset_of(facet_vertices[f]))
                face.active_facets.push_back(f);
        poly.faces_.push_back(std::move(face));
    }
    std::sort(poly.faces_.begin(), poly.faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });
    poly.dim_begin_.assign(n + 2, poly.faces_.size());
    for (std::size_t i = poly.faces_.size(); i-- > 0;)
        poly.dim_begin_[poly.faces_[i].dim] = i;
    for (std::size_t d = n + 1; d-- > 0;)
        poly.dim_begin_[d] = std::min(poly.dim_begin_[d], poly.dim_begin_[d + 1]);
    poly.facet_faces_.assign(nf, 0);
    for (std::size_t i = 0; i < poly.faces_.size(); ++i) {
        poly.face_lookup_.emplace(poly.faces_[i].vertex_ids, i);
        if (poly.faces_[i].dim + 1 == static_cast<int>(n)) {
            if (poly.faces_[i].active_facets.size() != 1)
                throw std::logic_error("facet face must lie on exactly one facet");
            poly.facet_faces_[poly.faces_[i].active_facets.front()] = i;
        }
    }

    // Distribute lattice points: a point lies in the relative interior of the
    // face whose active facets are exactly the facets it saturates.
    poly.points_ = box_scan(poly.vertices_, poly.facets_, 1);
    std::vector<Bits> face_active(poly.faces_.size(), Bits(nf));
    for (std::size_t i = 0; i < poly.faces_.size(); ++i)
        for (auto f : poly.faces_[i].active_facets)
            face_active[i].set(f);
    for (const auto& p : poly.points_) {
        Bits sat(nf);
        for (std::size_t f = 0; f < nf; ++f)
            if (sgn(poly.facets_[f].evaluate(p)) == 0)
                sat.set(f);
        for (std::size_t i = 0; i < poly.faces_.size(); ++i) {
            if (!face_active[i].is_subset_of(sat))
                continue;
            poly.faces_[i].lattice_points.push_back(p);
            if (face_active[i] == sat)
                poly.faces_[i].interior_points.push_back(p);
        }
    }
    return poly;
}

std::span<const Face> LatticePolytope::faces_of_dim(int d) const
{
    if (d < 0 || static_cast<std::size_t>(d) > n_)
        return {};
    return std::span<const Face>(faces_).subspan(dim_begin_[d], dim_begin_[d + 1] - dim_begin_[d]);
}

std::optional<std::size_t> LatticePolytope::find_face(const std::vector<std::size_t>& vertex_ids) const
{
    const auto it = face_lookup_.find(vertex_ids);
    if (it == face_lookup_.end())
        return std::nullopt;
    return it->second;
}

std::size_t LatticePolytope::face_index(const Face& f) const
{
    return static_cast<std::size_t>(&f - faces_.data());
}

bool LatticePolytope::contains(const LatticeVector& m) const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const FacetInequality& f) { return sgn(f.evaluate(m)) >= 0; });
}

std::vector<std::size_t> LatticePolytope::saturated_facets(const LatticeVector& m) const
{
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < facets_.size(); ++f)
        if (sgn(facets_[f].evaluate(m)) == 0)
            out.push_back(f);
    return out;
}

std::vector<std::size_t> LatticePolytope::f_vector() const
{
    std::vector<std::size_t> fv;
    for (std::size_t d = 0; d < n_; ++d)
        fv.push_back(faces_of_dim(static_cast<int>(d)).size());
    return fv;
}

bool is_reflexive(const LatticePolytope& p)
{
    return std::all_of(p.facets().begin(), p.facets().end(),
                       [](const FacetInequality& f) { return f.offset == 1; });
}

LatticePolytope polar_dual(const LatticePolytope& p)
{
    if (!is_reflexive(p))
        throw Error(ErrorCode::not_reflexive, "polytope is not reflexive");
    std::vector<LatticeVector> normals;
    for (const auto& f : p.facets())
        normals.push_back(f.normal);
    return LatticePolytope::from_vertices(normals);
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p, unsigned k)
{
    if (k == 0)
        throw Error(ErrorCode::invalid_argument, "dilation factor must be positive");
    if (k == 1)
        return p.points();
    return box_scan(p.vertices(), p.facets(), k);
}

const std::vector<LatticeVector>& interior_lattice_points(const Face& f)
{
    return f.interior_points;
}

namespace {

std::vector<std::size_t> match_normals(const LatticePolytope& facets_of, const LatticePolytope& vertices_of)
{
    std::map<LatticeVector, std::size_t> index;
    for (std::size_t i = 0; i < vertices_of.vertices().size(); ++i)
        index.emplace(vertices_of.vertices()[i], i);
    std::vector<std::size_t> out;
    for (const auto& f : facets_of.facets()) {
        const auto it = index.find(f.normal);
        if (it == index.end())
            throw std::logic_error("facet normal is not a vertex of the polar polytope");
        out.push_back(it->second);
    }
    return out;
}

std::vector<std::size_t> dual_faces(const LatticePolytope& from, const LatticePolytope& to,
                                    const std::vector<std::size_t>& facet_to_vertex)
{
    std::vector<std::size_t> out;
    const std::size_t n = from.dim();
    for (std::size_t i = 0; i + 1 < from.faces().size(); ++i) {
        const Face& f = from.faces()[i];
        std::vector<std::size_t> ids;
        for (auto a : f.active_facets)
            ids.push_back(facet_to_vertex[a]);
        std::sort(ids.begin(), ids.end());
        const auto j = to.find_face(ids);
        if (!j || static_cast<std::size_t>(f.dim + to.faces()[*j].dim) != n - 1)
            throw std::logic_error("face duality broken");
        out.push_back(*j);
    }
    return out;
}

}  // namespace

ReflexivePair::ReflexivePair(LatticePolytope delta, LatticePolytope polar)
    : delta_(std::move(delta)), polar_(std::move(polar))
{
    const auto polar_facet_to_delta_vertex = match_normals(polar_, delta_);
    const auto delta_facet_to_polar_vertex = match_normals(delta_, polar_);
    polar_to_delta_ = dual_faces(polar_, delta_, polar_facet_to_delta_vertex);
    delta_to_polar_ = dual_faces(delta_, polar_, delta_facet_to_polar_vertex);
    ray_to_delta_facet_.assign(polar_.vertices().size(), 0);
    for (std::size_t f = 0; f < delta_facet_to_polar_vertex.size(); ++f)
        ray_to_delta_facet_[delta_facet_to_polar_vertex[f]] = f;
}

ReflexivePair ReflexivePair::from_polar(LatticePolytope polar)
{
    LatticePolytope delta = polar_dual(polar);
    return ReflexivePair(std::move(delta), std::move(polar));
}

ReflexivePair ReflexivePair::from_delta(LatticePolytope delta)
{
    LatticePolytope polar = polar_dual(delta);
    return ReflexivePair(std::move(delta), std::move(polar));
}

ReflexivePair ReflexivePair::swapped() const
{
    return ReflexivePair(polar_, delta_);
}

ReflexivePair build_reflexive_pair(const LatticePolytope& polar)
{
    return ReflexivePair::from_polar(polar);
}

}  // namespace reflexorb
