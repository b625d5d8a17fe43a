#include "reflexorb/jacobian.hpp"

#include "reflexorb/cy_hodge.hpp"
#include "reflexorb/error.hpp"
#include "reflexorb/parallel.hpp"

#include <random>
#include <stdexcept>

namespace reflexorb {

MonomialBasis MonomialBasis::of(const ReflexivePair& pair)
{
    MonomialBasis b;
    b.points = pair.delta().points();
    for (std::size_t i = 0; i < b.points.size(); ++i)
        b.index.emplace(b.points[i], i);
    return b;
}

GenericCoefficients GenericCoefficients::draw(const ReflexivePair& pair, std::uint64_t seed)
{
    GenericCoefficients c;
    c.basis = MonomialBasis::of(pair);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned long> dist(1, 1000000);
    c.lambda.reserve(c.basis.size());
    for (std::size_t i = 0; i < c.basis.size(); ++i)
        c.lambda.emplace_back(dist(rng));
    return c;
}

std::vector<std::size_t> independent_rays(const ReflexivePair& pair)
{
    const auto& rays = pair.polar().vertices();
    const std::size_t n = pair.dim();
    std::vector<std::size_t> picked;
    std::vector<LatticeVector> lifted;
    for (std::size_t i = 0; i < rays.size() && picked.size() < n + 1; ++i) {
        LatticeVector l(n + 1);
        for (std::size_t j = 0; j < n; ++j)
            l[j] = rays[i][j];
        l[n] = 1;
        lifted.push_back(std::move(l));
        if (integer_rank(rows_matrix(lifted)) == lifted.size())
            picked.push_back(i);
        else
            lifted.pop_back();
    }
    if (picked.size() != n + 1)
        throw std::logic_error("lifted rays do not span Z^{n+1}");
    return picked;
}

namespace {

IntMatrix euler_rows_for(const ReflexivePair& pair, const GenericCoefficients& coeffs,
                         const std::vector<std::size_t>& ray_ids)
{
    const auto& rays = pair.polar().vertices();
    const auto& pts = coeffs.basis.points;
    IntMatrix m(ray_ids.size(), pts.size());
    for (std::size_t r = 0; r < ray_ids.size(); ++r)
        for (std::size_t c = 0; c < pts.size(); ++c)
            m(r, c) = coeffs.lambda[c] * (dot(pts[c], rays[ray_ids[r]]) + 1);
    return m;
}

}  // namespace

IntMatrix euler_rows(const ReflexivePair& pair, const GenericCoefficients& coeffs)
{
    return euler_rows_for(pair, coeffs, independent_rays(pair));
}

IntMatrix all_euler_rows(const ReflexivePair& pair, const GenericCoefficients& coeffs)
{
    std::vector<std::size_t> ids(pair.polar().vertices().size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        ids[i] = i;
    return euler_rows_for(pair, coeffs, ids);
}

IntMatrix facet_interior_rows(const ReflexivePair& pair, const GenericCoefficients& coeffs)
{
    const auto& rays = pair.polar().vertices();
    const auto& pts = coeffs.basis.points;

    struct RowKey {
        std::size_t ray;
        LatticeVector shift;
    };
    std::vector<RowKey> keys;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const Face& facet = pair.delta().facet_face(pair.delta_facet_of_ray(i));
        for (const auto& m_star : facet.interior_points)
            keys.push_back({i, m_star});
    }

    auto rows = parallel_map(keys.size(), [&](std::size_t k) {
        const RowKey& s = keys[k];
        std::vector<Integer> row(pts.size());
        for (std::size_t c = 0; c < pts.size(); ++c) {
            const LatticeVector q = pts[c] - s.shift;
            const auto it = coeffs.basis.index.find(q);
            if (it != coeffs.basis.index.end())
                row[c] = coeffs.lambda[it->second] * (dot(q, rays[s.ray]) + 1);
        }
        return row;
    });

    IntMatrix m(keys.size(), pts.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < pts.size(); ++c)
            m(r, c) = std::move(rows[r][c]);
    return m;
}

JacobianPiece jacobian_piece(const ReflexivePair& pair, const GenericCoefficients& coeffs)
{
    const IntMatrix euler = euler_rows(pair, coeffs);
    const IntMatrix facet = facet_interior_rows(pair, coeffs);
    JacobianPiece piece;
    piece.generators = IntMatrix(euler.rows() + facet.rows(), euler.cols());
    for (std::size_t r = 0; r < euler.rows(); ++r)
        for (std::size_t c = 0; c < euler.cols(); ++c)
            piece.generators(r, c) = euler(r, c);
    for (std::size_t r = 0; r < facet.rows(); ++r)
        for (std::size_t c = 0; c < facet.cols(); ++c)
            piece.generators(euler.rows() + r, c) = facet(r, c);
    piece.gamma = euler.rows() + facet.rows();
    return piece;
}

JacobianReport jacobian_rank_check(const ReflexivePair& pair, std::uint64_t seed, bool force)
{
    JacobianReport rep;
    rep.formula = hn21_untwisted(pair, force);
    rep.l_delta = pair.delta().points().size();
    constexpr std::size_t max_redraws = 5;
    for (std::size_t attempt = 0; attempt <= max_redraws; ++attempt) {
        rep.seed = seed + attempt;
        rep.attempts = attempt + 1;
        const JacobianPiece piece = jacobian_piece(pair, GenericCoefficients::draw(pair, rep.seed));
        rep.gamma = piece.gamma;
        rep.rank = integer_rank(piece.generators);
        if (rep.rank == rep.gamma) {
            rep.generic = true;
            break;
        }
    }
    rep.quotient = rep.l_delta - rep.rank;
    rep.agrees = rep.generic && static_cast<std::int64_t>(rep.quotient) == rep.formula;
    return rep;
}

IntMatrix incidence_matrix_e(std::span<const LatticeVector> points, std::span<const LatticeVector> rays)
{
    IntMatrix e(points.size(), rays.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < rays.size(); ++j)
            e(i, j) = dot(points[i], rays[j]) + 1;
    return e;
}

bool verify_matrix_p_nonsingular(const ReflexivePair& pair, const GenericCoefficients& coeffs)
{
    const std::size_t n = pair.dim();
    std::vector<LatticeVector> ms;
    for (const auto& w : pair.delta().vertices()) {
        ms.push_back(w);
        if (integer_rank(rows_matrix(ms)) != ms.size())
            ms.pop_back();
        if (ms.size() == n)
            break;
    }
    ms.emplace_back(n);  // origin
    std::vector<LatticeVector> rays;
    for (auto i : independent_rays(pair))
        rays.push_back(pair.polar().vertices()[i]);

    const IntMatrix e = incidence_matrix_e(ms, rays);
    IntMatrix p = e;
    Integer scale = 1;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const Integer& lam = coeffs.at(ms[i]);
        scale *= lam;
        for (std::size_t j = 0; j < p.cols(); ++j)
            p(i, j) *= lam;
    }
    const Integer det_e = integer_determinant(e);
    if (integer_determinant(p) != scale * det_e)
        throw std::logic_error("det P does not factor as Π λ · det E");
    return sgn(det_e) != 0;
}

}  // namespace reflexorb
