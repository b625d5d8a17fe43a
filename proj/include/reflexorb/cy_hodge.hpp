#pragma once

#include "reflexorb/fan.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace reflexorb {

/// Twisted sector datum of the generic anticanonical hypersurface: a face F° of
/// Δ° with 1 <= dim F° <= n-2 and an interior box element of the cone over it.
struct CySector {
    std::size_t face = 0;  // index into pair.polar().faces()
    int face_dim = 0;
    std::size_t cone = 0;  // index into normal_fan(pair).cones()
    BoxElement box;
    Integer age;
    /// l*(F̂°)+1 when dim F° = n-2, otherwise 1.
    Integer components;
    /// h^{n-3,0} of one component; only set when dim F° = 1.
    std::optional<Integer> h_top;

    bool used_by_formulas() const { return age == 1; }
};

std::vector<CySector> cy_twisted_sectors(const ReflexivePair& pair);

/// Value of an orbifold Hodge number with its untwisted/twisted split.
struct OrbifoldValue {
    std::int64_t value = 0;
    std::int64_t untwisted = 0;
    std::int64_t twisted = 0;
};

// The closed formulas below hold for n >= 4. For smaller n they throw
// ErrorCode::hypothesis_violation unless force is set.
std::int64_t h11_untwisted(const ReflexivePair& pair, bool force = false);
OrbifoldValue h11_orb(const ReflexivePair& pair, bool force = false);
std::int64_t hn21_untwisted(const ReflexivePair& pair, bool force = false);
OrbifoldValue hn21_orb(const ReflexivePair& pair, bool force = false);

/// h^{n-3,0} of one component of the sector: l*(F̂°) for an edge, 0 otherwise.
Integer sector_h_top(const CySector& sector, const ReflexivePair& pair);

/// Orbifold Hodge diamond of a Calabi-Yau threefold, h[p][q].
struct HodgeDiamond {
    std::array<std::array<std::int64_t, 4>, 4> h{};

    std::int64_t euler_characteristic() const;
};

HodgeDiamond hodge_diamond_n4(const ReflexivePair& pair);

struct HodgeReport {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t l_delta = 0;
    std::size_t l_polar = 0;
    std::int64_t h11_untwisted = 0;
    std::int64_t h11_orb = 0;
    std::int64_t hn21_untwisted = 0;
    std::int64_t hn21_orb = 0;
    std::int64_t age_one_components = 0;
    std::int64_t edge_correction = 0;
    std::vector<CySector> sectors;
    std::optional<HodgeDiamond> diamond;
    bool forced = false;  // evaluated outside n >= 4
};

/// Requires a simplicial normal fan (ErrorCode::not_simplicial otherwise).
HodgeReport hodge_report(const ReflexivePair& pair, bool force = false);

struct MirrorReport {
    bool hypothesis_met = false;
    std::string reason;
    std::optional<HodgeReport> original;
    std::optional<HodgeReport> swapped;
    bool h11_matches = false;  // h11_orb(V) == hn21_orb(V°)
    bool hn21_matches = false; // hn21_orb(V) == h11_orb(V°)

    bool passed() const { return hypothesis_met && h11_matches && hn21_matches; }
};

MirrorReport mirror_check(const ReflexivePair& pair, bool force = false);

}  // namespace reflexorb
