#pragma once

#include <cstdint>
#include <vector>

#include "subsec/graph.hpp"

namespace subsec {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// Upper-triangle adjacency bits in graph6 order ((0,1), (0,2), (1,2), (0,3), ...),
/// first pair in the most significant position. Requires n <= 7.
std::uint32_t adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint32_t code);

/// Minimum adjacency_code over all n! relabelings. Two graphs on the same
/// vertex count are isomorphic iff their canonical codes are equal.
std::uint32_t canonical_code(const Graph& g);

/// One representative (the canonical relabeling) per isomorphism class of
/// graphs on n vertices, sorted by canonical code. 1 <= n <= 7.
std::vector<Graph> enumerate_all(std::size_t n);

/// As enumerate_all, restricted to connected graphs.
std::vector<Graph> enumerate_connected(std::size_t n);

}  // namespace subsec
