#include "reflexorb/fan.hpp"

#include "reflexorb/error.hpp"
#include "reflexorb/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace reflexorb {

std::vector<LatticeVector> Cone::key() const
{
    std::vector<LatticeVector> k = generators;
    std::sort(k.begin(), k.end());
    return k;
}

Fan::Fan(std::size_t n, std::vector<LatticeVector> rays, std::vector<Cone> cones)
    : n_(n), rays_(std::move(rays)), cones_(std::move(cones))
{
    std::vector<std::pair<std::vector<LatticeVector>, std::size_t>> keyed;
    for (std::size_t i = 0; i < cones_.size(); ++i)
        keyed.emplace_back(cones_[i].key(), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        const auto& ca = cones_[a.second];
        const auto& cb = cones_[b.second];
        if (ca.dim != cb.dim)
            return ca.dim < cb.dim;
        return a.first < b.first;
    });
    std::vector<Cone> sorted;
    sorted.reserve(cones_.size());
    for (const auto& [key, i] : keyed)
        sorted.push_back(std::move(cones_[i]));
    cones_ = std::move(sorted);
    for (std::size_t i = 0; i < cones_.size(); ++i)
        lookup_.emplace(cones_[i].ray_ids, i);
}

std::vector<const Cone*> Fan::cones_of_dim(std::size_t d) const
{
    std::vector<const Cone*> out;
    for (const auto& c : cones_)
        if (c.dim == d)
            out.push_back(&c);
    return out;
}

std::optional<std::size_t> Fan::find_cone(const std::vector<std::size_t>& ray_ids) const
{
    const auto it = lookup_.find(ray_ids);
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

Fan normal_fan(const ReflexivePair& pair)
{
    const LatticePolytope& polar = pair.polar();
    std::vector<Cone> cones;
    cones.push_back(Cone{});  // zero cone
    for (std::size_t i = 0; i + 1 < polar.faces().size(); ++i) {
        const Face& f = polar.faces()[i];
        Cone c;
        c.ray_ids = f.vertex_ids;
        for (auto v : f.vertex_ids)
            c.generators.push_back(polar.vertices()[v]);
        c.dim = static_cast<std::size_t>(f.dim) + 1;
        c.face_ref = i;
        cones.push_back(std::move(c));
    }
    return Fan(polar.dim(), polar.vertices(), std::move(cones));
}

Fan fan_from_cones(std::size_t n, std::span<const std::vector<LatticeVector>> maximal)
{
    std::vector<LatticeVector> rays;
    std::map<LatticeVector, std::size_t> ray_index;
    std::map<std::vector<std::size_t>, Cone> cones;
    cones.emplace(std::vector<std::size_t>{}, Cone{});
    for (const auto& gens : maximal) {
        for (const auto& g : gens) {
            if (g.dim() != n || !g.is_primitive())
                throw Error(ErrorCode::invalid_argument, "cone generators must be primitive vectors of Z^n");
        }
        if (integer_rank(rows_matrix(gens)) != gens.size())
            throw Error(ErrorCode::not_simplicial, "cone generators are linearly dependent");
        std::vector<std::size_t> ids;
        for (const auto& g : gens) {
            auto [it, fresh] = ray_index.emplace(g, rays.size());
            if (fresh)
                rays.push_back(g);
            ids.push_back(it->second);
        }
        const std::size_t k = gens.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            Cone c;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b))
                    c.ray_ids.push_back(ids[b]);
            std::sort(c.ray_ids.begin(), c.ray_ids.end());
            for (auto id : c.ray_ids)
                c.generators.push_back(rays[id]);
            c.dim = c.ray_ids.size();
            cones.emplace(c.ray_ids, std::move(c));
        }
    }
    std::vector<Cone> list;
    for (auto& [ids, c] : cones)
        list.push_back(std::move(c));
    return Fan(n, std::move(rays), std::move(list));
}

bool is_simplicial(const Fan& fan)
{
    return std::all_of(fan.cones().begin(), fan.cones().end(), [](const Cone& c) { return c.simplicial(); });
}

bool BoxElement::interior() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& a) { return sgn(a) > 0; });
}

namespace {

void require_simplicial(const Cone& c)
{
    if (!c.simplicial() || integer_rank(rows_matrix(c.generators)) != c.generators.size())
        throw Error(ErrorCode::not_simplicial, "cone is not simplicial");
}

Rational fractional_part(const Rational& q)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rational(fl);
}

}  // namespace

Integer quotient_group_order(const Cone& cone)
{
    require_simplicial(cone);
    Integer order = 1;
    for (const auto& d : elementary_divisors(rows_matrix(cone.generators)))
        order *= d;
    return order;
}

std::vector<BoxElement> box_elements(const Cone& cone, bool interior_only)
{
    require_simplicial(cone);
    const std::size_t k = cone.generators.size();
    if (k == 0)
        return interior_only ? std::vector<BoxElement>{} : std::vector<BoxElement>{BoxElement{}};
    const std::size_t n = cone.generators.front().dim();

    // U G V = D. Points of the saturation are a G with a = b U and b_i = c_i / d_i,
    // c_i in Z; the classes modulo the generated lattice are c_i in [0, d_i).
    const IntMatrix g = rows_matrix(cone.generators);
    const SmithForm snf = smith_normal_form(g);
    std::vector<Integer> divisors(k);
    for (std::size_t i = 0; i < k; ++i)
        divisors[i] = snf.d(i, i);

    std::vector<BoxElement> out;
    std::vector<Integer> c(k, 0);
    for (;;) {
        std::vector<Rational> a(k);
        for (std::size_t j = 0; j < k; ++j) {
            Rational s = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (sgn(c[i]) != 0)
                    s += Rational(c[i], divisors[i]) * Rational(snf.u(i, j));
            s.canonicalize();
            a[j] = fractional_part(s);
        }
        BoxElement b;
        b.coeffs = std::move(a);
        b.age = 0;
        for (const auto& x : b.coeffs)
            b.age += x;
        LatticeVector p(n);
        for (std::size_t col = 0; col < n; ++col) {
            Rational s = 0;
            for (std::size_t j = 0; j < k; ++j)
                s += b.coeffs[j] * Rational(g(j, col));
            if (s.get_den() != 1)
                throw std::logic_error("box element is not integral");
            p[col] = s.get_num();
        }
        b.point = std::move(p);
        if (!interior_only || b.interior())
            out.push_back(std::move(b));

        std::size_t i = 0;
        while (i < k) {
            if (++c[i] < divisors[i])
                break;
            c[i] = 0;
            ++i;
        }
        if (i == k)
            break;
    }
    std::sort(out.begin(), out.end(), [](const BoxElement& x, const BoxElement& y) { return x.point < y.point; });
    return out;
}

std::vector<ToricSector> toric_twisted_sectors(const Fan& fan)
{
    if (!is_simplicial(fan))
        throw Error(ErrorCode::not_simplicial, "fan is not simplicial");
    const auto& cones = fan.cones();
    auto per_cone = parallel_map(cones.size(), [&](std::size_t i) {
        std::vector<ToricSector> sectors;
        const Cone& c = cones[i];
        auto boxes = box_elements(c, true);
        if (c.dim <= 1 && !boxes.empty())
            throw std::logic_error("cone of dimension <= 1 has an interior box element");
        if (boxes.empty())
            return sectors;
        const Integer order = quotient_group_order(c);
        for (auto& b : boxes)
            sectors.push_back({i, std::move(b), fan.dim() - c.dim, order});
        return sectors;
    });

    std::vector<std::size_t> order(cones.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::vector<std::vector<LatticeVector>> keys;
    for (const auto& c : cones)
        keys.push_back(c.key());
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });

    std::vector<ToricSector> out;
    for (auto i : order)
        for (auto& s : per_cone[i])
            out.push_back(std::move(s));
    return out;
}

bool is_gorenstein_fan(const Fan& fan)
{
    if (!is_simplicial(fan))
        throw Error(ErrorCode::not_simplicial, "fan is not simplicial");
    for (const auto& c : fan.cones())
        for (const auto& b : box_elements(c, true))
            if (b.age.get_den() != 1)
                return false;
    return true;
}

}  // namespace reflexorb
