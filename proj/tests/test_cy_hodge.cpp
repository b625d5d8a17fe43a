#include "fixtures.hpp"

#include "reflexorb/cy_hodge.hpp"
#include "reflexorb/error.hpp"

#include <doctest.h>

using namespace reflexorb;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::invalid_argument;
}

std::vector<LatticeVector> hexagon()
{
    return {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
}

}  // namespace

TEST_CASE("twisted sectors of the hypersurface in P(1,1,2,2,2)")
{
    const auto pair = fixtures::pair_of(fixtures::wps({1, 1, 2, 2, 2}));
    const auto sectors = cy_twisted_sectors(pair);
    REQUIRE(sectors.size() == 1);
    const auto& s = sectors[0];
    CHECK(s.face_dim == 1);
    CHECK(s.age == 1);
    CHECK(s.components == 1);
    CHECK(s.box.point == LatticeVector{0, -1, -1, -1});
    CHECK(s.box.coeffs == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    REQUIRE(s.h_top);
    CHECK(*s.h_top == 3);
    CHECK(sector_h_top(s, pair) == 3);
    CHECK(s.used_by_formulas());
}

TEST_CASE("quintic has no twisted sectors")
{
    CHECK(cy_twisted_sectors(fixtures::pair_of(fixtures::wps({1, 1, 1, 1, 1}))).empty());
}

TEST_CASE("sectors of the mirror side of P(1,1,2,2,2)")
{
    const auto pair = fixtures::pair_of(fixtures::wps({1, 1, 2, 2, 2})).swapped();
    const auto sectors = cy_twisted_sectors(pair);
    std::int64_t age_one = 0;
    bool saw_two_face = false;
    for (const auto& s : sectors) {
        if (s.face_dim == 2) {
            saw_two_face = true;
            const Face& dual = pair.delta().faces()[pair.dual_of_polar_face(s.face)];
            CHECK(s.components == dual.l_star() + 1);
            if (s.age == 1)
                CHECK(sector_h_top(s, pair) == 0);
        } else {
            CHECK(s.components == 1);
        }
        if (s.used_by_formulas())
            age_one += s.components.get_si();
        else if (s.face_dim == 1)
            CHECK_THROWS_AS(sector_h_top(s, pair), Error);
        else
            CHECK(sector_h_top(s, pair) == 0);
    }
    CHECK(saw_two_face);
    CHECK(age_one == h11_orb(pair).twisted);
    CHECK(h11_orb(pair).value == 86);
    CHECK(hn21_orb(pair).value == 2);
}

TEST_CASE("edge sectors in dimension five")
{
    const auto pair = fixtures::pair_of(fixtures::wps({1, 1, 2, 2, 2, 2}));
    const auto& want = fixtures::expected()["p112222"]["edge_sectors"];
    std::vector<std::vector<std::size_t>> got;
    for (const auto& s : cy_twisted_sectors(pair))
        if (s.face_dim == 1 && s.age == 1)
            got.push_back({pair.polar().faces()[s.face].l_star(), sector_h_top(s, pair).get_ui()});
    CHECK(got == want.get<std::vector<std::vector<std::size_t>>>());
    CHECK(got == std::vector<std::vector<std::size_t>>{{1, 4}});
}

TEST_CASE("Hodge numbers agree with the oracle")
{
    for (const auto& c : fixtures::oracle_cases()) {
        CAPTURE(c.name);
        const auto pair = fixtures::pair_of(c.polar);
        const auto& want = fixtures::expected()[c.name];
        CHECK(h11_untwisted(pair) == want["h11"].get<std::int64_t>());
        CHECK(h11_orb(pair).value == want["h11_orb"].get<std::int64_t>());
        CHECK(hn21_untwisted(pair) == want["hn21"].get<std::int64_t>());
        CHECK(hn21_orb(pair).value == want["hn21_orb"].get<std::int64_t>());
    }
}

TEST_CASE("named examples")
{
    SUBCASE("P(1,1,2,2,2)")
    {
        const auto rep = hodge_report(fixtures::pair_of(fixtures::wps({1, 1, 2, 2, 2})));
        CHECK(rep.h11_untwisted == 1);
        CHECK(rep.h11_orb == 2);
        CHECK(rep.hn21_untwisted == 83);
        CHECK(rep.hn21_orb == 86);
        CHECK(rep.age_one_components == 1);
        CHECK(rep.edge_correction == 3);
        REQUIRE(rep.diamond);
        CHECK(rep.diamond->h[1][1] == 2);
        CHECK(rep.diamond->h[2][1] == 86);
        CHECK(rep.diamond->h[1][2] == 86);
        CHECK(rep.diamond->h[3][0] == 1);
        CHECK(rep.diamond->h[1][0] == 0);
        CHECK(rep.diamond->euler_characteristic() == -168);
    }
    SUBCASE("quintic")
    {
        const auto rep = hodge_report(fixtures::pair_of(fixtures::wps({1, 1, 1, 1, 1})));
        CHECK(rep.h11_orb == 1);
        CHECK(rep.hn21_orb == 101);
        CHECK(rep.diamond->euler_characteristic() == -200);
        CHECK(rep.sectors.empty());
    }
    SUBCASE("cross-polytope as Δ°")
    {
        const auto rep = hodge_report(fixtures::pair_of(fixtures::cross(4)));
        CHECK(rep.r == 8);
        CHECK(rep.h11_untwisted == 4);
        CHECK(rep.h11_orb == 4);
        CHECK(rep.hn21_untwisted == 68);
        CHECK(rep.hn21_orb == 68);
        CHECK(rep.l_delta == 81);
    }
    SUBCASE("dimension five has no diamond")
    {
        const auto pair = fixtures::pair_of(fixtures::wps({1, 1, 2, 2, 2, 2}));
        const auto rep = hodge_report(pair);
        CHECK_FALSE(rep.diamond);
        CHECK(rep.hn21_orb == 350);
        CHECK(code_of([&] { hodge_diamond_n4(pair); }) == ErrorCode::invalid_argument);
    }
}

TEST_CASE("audit identities hold on every oracle case")
{
    for (const auto& c : fixtures::oracle_cases()) {
        CAPTURE(c.name);
        const auto pair = fixtures::pair_of(c.polar);
        if (!is_simplicial(normal_fan(pair)))
            continue;
        const auto rep = hodge_report(pair);
        CHECK(rep.age_one_components == rep.h11_orb - rep.h11_untwisted);
        CHECK(rep.edge_correction == rep.hn21_orb - rep.hn21_untwisted);
        for (const auto& s : rep.sectors) {
            const Face& f = pair.polar().faces()[s.face];
            CHECK(s.age >= 1);
            CHECK(s.age <= f.dim);
        }
    }
}

TEST_CASE("non-simplicial fans are rejected")
{
    const auto pair = fixtures::pair_of(fixtures::cube(4));
    CHECK(code_of([&] { cy_twisted_sectors(pair); }) == ErrorCode::not_simplicial);
    CHECK(code_of([&] { hodge_report(pair); }) == ErrorCode::not_simplicial);
    // The closed formulas need only face data.
    CHECK(h11_untwisted(pair) == 12);
}

TEST_CASE("formulas outside n >= 4 need force")
{
    const auto octa = fixtures::pair_of(fixtures::cross(3));
    CHECK(code_of([&] { h11_orb(octa); }) == ErrorCode::hypothesis_violation);
    CHECK(code_of([&] { hn21_orb(octa); }) == ErrorCode::hypothesis_violation);
    CHECK(code_of([&] { hodge_report(octa); }) == ErrorCode::hypothesis_violation);
    const auto rep = hodge_report(octa, true);
    CHECK(rep.forced);
    CHECK(rep.h11_untwisted == 3);
    CHECK_FALSE(rep.diamond);
}

TEST_CASE("mirror check")
{
    SUBCASE("P(1,1,2,2,2) swaps (2, 86)")
    {
        const auto rep = mirror_check(fixtures::pair_of(fixtures::wps({1, 1, 2, 2, 2})));
        REQUIRE(rep.hypothesis_met);
        CHECK(rep.passed());
        CHECK(rep.swapped->h11_orb == 86);
        CHECK(rep.swapped->hn21_orb == 2);
    }
    SUBCASE("quintic swaps (1, 101)")
    {
        const auto rep = mirror_check(fixtures::pair_of(fixtures::wps({1, 1, 1, 1, 1})));
        CHECK(rep.passed());
        CHECK(rep.swapped->h11_orb == 101);
    }
    SUBCASE("cube side is not simplicial")
    {
        const auto rep = mirror_check(fixtures::pair_of(fixtures::cross(4)));
        CHECK_FALSE(rep.hypothesis_met);
        CHECK_FALSE(rep.passed());
        CHECK(rep.reason.find("hypothesis unmet") != std::string::npos);
        CHECK_FALSE(mirror_check(fixtures::pair_of(fixtures::cube(4))).hypothesis_met);
    }
    SUBCASE("self-dual hexagon, forced")
    {
        const auto pair = fixtures::pair_of(hexagon());
        CHECK(pair.delta().vertices().size() == 6);
        const auto rep = mirror_check(pair, true);
        REQUIRE(rep.hypothesis_met);
        CHECK(rep.passed());
        CHECK(rep.original->h11_orb == rep.original->hn21_orb);
        CHECK(code_of([&] { mirror_check(pair); }) == ErrorCode::hypothesis_violation);
    }
}
