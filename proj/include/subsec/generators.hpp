#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "subsec/graph.hpp"

namespace subsec {

enum class Family { Path, Cycle, Star, Complete, Wheel, Random };

/// Parses "path", "cycle", "star", "complete", "wheel" or "random".
Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Named graph families.
///
/// `n` is the vertex count for every family except the wheel, where it is the
/// rim length: wheel(6) is a 6-cycle 0..5 plus hub 6 joined to every rim vertex.
/// The random family includes edge (u, v), u < v, visited in lexicographic order,
/// iff the next uniform draw from a seeded mt19937_64 stream is below `p`.
Graph generate(Family family, std::size_t n, std::optional<double> p = std::nullopt,
               std::optional<std::uint64_t> seed = std::nullopt);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t n);  // S_n = K_{1,n-1}, center 0
Graph complete_graph(std::size_t n);
Graph wheel_graph(std::size_t rim);
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace subsec
