#include "reflexorb/cy_hodge.hpp"

#include "reflexorb/error.hpp"
#include "reflexorb/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace reflexorb {

namespace {

void require_lefschetz_range(const ReflexivePair& pair, bool force)
{
    if (pair.dim() < 4 && !force)
        throw Error(ErrorCode::hypothesis_violation,
                    "Lefschetz range: Hodge formulas need n >= 4 (got n = " + std::to_string(pair.dim()) + ")");
}

std::int64_t as_int64(std::size_t x)
{
    return static_cast<std::int64_t>(x);
}

// Σ over faces of dimension d of `p` of l*(F), optionally times l*(F^).
std::int64_t sum_lstar(const LatticePolytope& p, int d)
{
    std::int64_t s = 0;
    for (const auto& f : p.faces_of_dim(d))
        s += as_int64(f.l_star());
    return s;
}

std::int64_t sum_polar_products(const ReflexivePair& pair, int d)
{
    std::int64_t s = 0;
    const auto& polar = pair.polar();
    for (const auto& f : polar.faces_of_dim(d)) {
        const Face& dual = pair.delta().faces()[pair.dual_of_polar_face(polar.face_index(f))];
        s += as_int64(f.l_star() * dual.l_star());
    }
    return s;
}

std::int64_t sum_delta_products(const ReflexivePair& pair, int d)
{
    std::int64_t s = 0;
    const auto& delta = pair.delta();
    for (const auto& f : delta.faces_of_dim(d)) {
        const Face& dual = pair.polar().faces()[pair.dual_of_delta_face(delta.face_index(f))];
        s += as_int64(f.l_star() * dual.l_star());
    }
    return s;
}

}  // namespace

std::vector<CySector> cy_twisted_sectors(const ReflexivePair& pair)
{
    const std::size_t n = pair.dim();
    if (n < 2)
        throw Error(ErrorCode::invalid_argument, "hypersurface sectors need n >= 2");
    const Fan fan = normal_fan(pair);
    if (!is_simplicial(fan))
        throw Error(ErrorCode::not_simplicial, "normal fan is not simplicial");

    const auto& polar = pair.polar();
    const auto& cones = fan.cones();
    auto per_cone = parallel_map(cones.size(), [&](std::size_t ci) {
        std::vector<CySector> out;
        const Cone& cone = cones[ci];
        if (!cone.face_ref)
            return out;
        const Face& face = polar.faces()[*cone.face_ref];
        if (face.dim < 1 || face.dim > static_cast<int>(n) - 2)
            return out;
        const Face& dual = pair.delta().faces()[pair.dual_of_polar_face(*cone.face_ref)];
        for (auto& b : box_elements(cone, true)) {
            if (b.age.get_den() != 1)
                throw std::logic_error("non-integral age in a reflexive normal fan");
            CySector s;
            s.face = *cone.face_ref;
            s.face_dim = face.dim;
            s.cone = ci;
            s.age = b.age.get_num();
            // Age one exactly when κ lies in the relative interior of F° itself.
            const bool on_face = std::binary_search(face.interior_points.begin(), face.interior_points.end(), b.point);
            if (on_face != (s.age == 1))
                throw std::logic_error("age-one sector not matching an interior point of its face");
            s.components = face.dim == static_cast<int>(n) - 2 ? Integer(dual.l_star() + 1) : Integer(1);
            if (face.dim == 1)
                s.h_top = Integer(dual.l_star());
            s.box = std::move(b);
            out.push_back(std::move(s));
        }
        return out;
    });

    std::vector<std::size_t> order(cones.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::vector<std::vector<LatticeVector>> keys;
    for (const auto& c : cones)
        keys.push_back(c.key());
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });

    std::vector<CySector> sectors;
    for (auto i : order)
        for (auto& s : per_cone[i])
            sectors.push_back(std::move(s));
    return sectors;
}

std::int64_t h11_untwisted(const ReflexivePair& pair, bool force)
{
    require_lefschetz_range(pair, force);
    return as_int64(pair.polar().vertices().size()) - as_int64(pair.dim());
}

OrbifoldValue h11_orb(const ReflexivePair& pair, bool force)
{
    require_lefschetz_range(pair, force);
    const int n = static_cast<int>(pair.dim());
    OrbifoldValue v;
    v.value = as_int64(pair.polar().points().size()) - n - 1 - sum_lstar(pair.polar(), n - 1) +
              sum_polar_products(pair, n - 2);
    v.untwisted = h11_untwisted(pair, force);
    v.twisted = v.value - v.untwisted;
    return v;
}

std::int64_t hn21_untwisted(const ReflexivePair& pair, bool force)
{
    require_lefschetz_range(pair, force);
    const int n = static_cast<int>(pair.dim());
    return as_int64(pair.delta().points().size()) - n - 1 - sum_lstar(pair.delta(), n - 1);
}

OrbifoldValue hn21_orb(const ReflexivePair& pair, bool force)
{
    const int n = static_cast<int>(pair.dim());
    OrbifoldValue v;
    v.untwisted = hn21_untwisted(pair, force);
    v.value = v.untwisted + sum_delta_products(pair, n - 2);
    v.twisted = v.value - v.untwisted;
    // Same correction read off the edges of Δ°.
    if (v.twisted != sum_polar_products(pair, 1))
        throw std::logic_error("edge correction differs between Δ and Δ° face data");
    return v;
}

Integer sector_h_top(const CySector& sector, const ReflexivePair& pair)
{
    if (sector.face_dim > 1)
        return 0;
    if (sector.face_dim != 1 || sector.age != 1)
        throw Error(ErrorCode::invalid_argument, "h^{n-3,0} is defined for age-one sectors over edges");
    return pair.delta().faces()[pair.dual_of_polar_face(sector.face)].l_star();
}

std::int64_t HodgeDiamond::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            chi += ((p + q) % 2 ? -1 : 1) * h[p][q];
    return chi;
}

HodgeDiamond hodge_diamond_n4(const ReflexivePair& pair)
{
    if (pair.dim() != 4)
        throw Error(ErrorCode::invalid_argument, "Hodge diamond needs n = 4");
    const std::int64_t h11 = h11_orb(pair).value;
    const std::int64_t h21 = hn21_orb(pair).value;
    HodgeDiamond d;
    d.h[0][0] = d.h[3][3] = d.h[3][0] = d.h[0][3] = 1;
    d.h[1][1] = d.h[2][2] = h11;
    d.h[2][1] = d.h[1][2] = h21;
    return d;
}

HodgeReport hodge_report(const ReflexivePair& pair, bool force)
{
    require_lefschetz_range(pair, force);
    HodgeReport rep;
    rep.n = pair.dim();
    rep.r = pair.polar().vertices().size();
    rep.l_delta = pair.delta().points().size();
    rep.l_polar = pair.polar().points().size();
    rep.forced = rep.n < 4;
    rep.sectors = cy_twisted_sectors(pair);

    const OrbifoldValue h11 = h11_orb(pair, force);
    const OrbifoldValue hn21 = hn21_orb(pair, force);
    rep.h11_untwisted = h11.untwisted;
    rep.h11_orb = h11.value;
    rep.hn21_untwisted = hn21.untwisted;
    rep.hn21_orb = hn21.value;

    for (const auto& s : rep.sectors) {
        if (!s.used_by_formulas())
            continue;
        rep.age_one_components += s.components.get_si();
        if (s.h_top)
            rep.edge_correction += s.h_top->get_si();
    }
    if (rep.age_one_components != h11.twisted)
        throw std::logic_error("age-one sector count disagrees with the h11 formula");
    if (rep.edge_correction != hn21.twisted)
        throw std::logic_error("edge sector contributions disagree with the hn21 formula");
    if (rep.n == 4)
        rep.diamond = hodge_diamond_n4(pair);
    return rep;
}

MirrorReport mirror_check(const ReflexivePair& pair, bool force)
{
    MirrorReport rep;
    const ReflexivePair other = pair.swapped();
    if (!is_simplicial(normal_fan(pair))) {
        rep.reason = "mirror hypothesis unmet: normal fan of the input pair is not simplicial";
        return rep;
    }
    if (!is_simplicial(normal_fan(other))) {
        rep.reason = "mirror hypothesis unmet: normal fan of the swapped pair is not simplicial";
        return rep;
    }
    rep.hypothesis_met = true;
    rep.original = hodge_report(pair, force);
    rep.swapped = hodge_report(other, force);
    rep.h11_matches = rep.original->h11_orb == rep.swapped->hn21_orb;
    rep.hn21_matches = rep.original->hn21_orb == rep.swapped->h11_orb;
    return rep;
}

}  // namespace reflexorb
