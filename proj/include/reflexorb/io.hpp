#pragma once

#include "reflexorb/polytope.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace reflexorb {

// Vertex matrix text format: a header line "V n", then V rows of n
// whitespace-separated integers. Lines whose first non-blank character is '#'
// and blank lines are ignored.

std::vector<LatticeVector> parse_vertex_text(std::istream& in);
LatticePolytope parse_vertex_file(const std::filesystem::path& path);
std::string format_vertex_matrix(std::span<const LatticeVector> rows);

/// Rays of P(w_0, ..., w_n) with the minimal weight rotated to the front:
/// v_0 = -(w_1 e_1 + ... + w_n e_n) followed by e_1..e_n. Requires the
/// minimal weight to be 1 and every n-subset of weights to be coprime.
std::vector<LatticeVector> wps_rays(std::span<const std::uint64_t> weights);

/// Convex hull of wps_rays; throws ErrorCode::not_reflexive when that hull is
/// not reflexive.
LatticePolytope wps_polytope(std::span<const std::uint64_t> weights);

}  // namespace reflexorb
