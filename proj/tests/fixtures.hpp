#pragma once

#include "reflexorb/io.hpp"
#include "reflexorb/polytope.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace fixtures {

using reflexorb::LatticePolytope;
using reflexorb::LatticeVector;
using reflexorb::ReflexivePair;

inline std::vector<LatticeVector> wps(std::vector<std::uint64_t> w)
{
    return reflexorb::wps_rays(w);
}

inline std::vector<LatticeVector> cross(std::size_t n)
{
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < n; ++i)
        for (long s : {1L, -1L}) {
            LatticeVector v(n);
            v[i] = s;
            out.push_back(v);
        }
    return out;
}

inline std::vector<LatticeVector> cube(std::size_t n)
{
    std::vector<LatticeVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        LatticeVector v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = (mask >> i) & 1 ? 1 : -1;
        out.push_back(v);
    }
    return out;
}

inline std::vector<LatticeVector> p1xp3()
{
    return {{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, -1, -1, -1}};
}

inline std::vector<LatticeVector> p2xp2()
{
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, -1, -1}};
}

struct Case {
    std::string name;
    std::vector<LatticeVector> polar;
};

/// The polytopes frozen in tests/oracle/expected.json, as Δ° vertex lists.
inline std::vector<Case> oracle_cases()
{
    return {
        {"p11222", wps({1, 1, 2, 2, 2})},
        {"quintic", wps({1, 1, 1, 1, 1})},
        {"cube_cross", cross(4)},
        {"p11112", wps({1, 1, 1, 1, 2})},
        {"p11114", wps({1, 1, 1, 1, 4})},
        {"p112222", wps({1, 1, 2, 2, 2, 2})},
        {"p1xp3", p1xp3()},
        {"p2xp2", p2xp2()},
    };
}

inline ReflexivePair pair_of(const std::vector<LatticeVector>& polar)
{
    return reflexorb::build_reflexive_pair(LatticePolytope::from_vertices(polar));
}

inline const nlohmann::json& expected()
{
    static const nlohmann::json data = [] {
        std::ifstream in(REFLEXORB_ORACLE_JSON);
        return nlohmann::json::parse(in);
    }();
    return data;
}

inline std::string data_file(const std::string& name)
{
    return std::string(REFLEXORB_DATA_DIR) + "/" + name;
}

}  // namespace fixtures
