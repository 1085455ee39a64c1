#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsec/domination.hpp"
#include "subsec/subdivision.hpp"

namespace subsec {

/// Splits a subdivision parameter n >= 6 as n = 7k + r with r in {-1, 1, 3, 5}.
/// Residues 0, 2 and 4 mod 7 have no such split and are flagged instead.
struct Decomposition {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<int> r;  // absent for the 0/2/4 residue class

    bool residue_024() const { return !r.has_value(); }
};

Decomposition decompose(std::size_t n);

/// A concrete vertex set of a subdivided graph built by one of the proof
/// constructions. `validated` always comes from is_secure_dominating.
struct Certificate {
    std::string theorem_id;
    VertexSet set;
    std::size_t claimed_size = 0;
    bool validated = false;
};

/// Both constructions for G^{1/2}: every internal vertex (size m) and every
/// original vertex (size n). Requires a connected non-star base with edges.
std::pair<Certificate, Certificate> cert_half(const SubdivisionMap& map);

/// Star S_n with center w: k = 2 takes {w} and x_1 on every spoke, k = 3 takes
/// {w} and x_2 on every spoke (the vertex next to the leaf).
Certificate cert_star(const SubdivisionMap& map);

/// x_1 and x_2 on every superedge of G^{1/3}.
Certificate cert_third(const SubdivisionMap& map);

/// x_1 and x_3 on every superedge of G^{1/4}.
Certificate cert_quarter(const SubdivisionMap& map);

/// x_1, x_2, x_4 on every superedge of G^{1/5}; then, for the smallest-id vertex w
/// of maximum degree, the internal vertex adjacent to w on each of its
/// superedges is swapped out and w is added. Claimed size 3m - Δ + 1.
Certificate cert_fifth(const SubdivisionMap& map);

/// Union over superedges of E_uv ∪ F_uv for n = k_sub with n mod 7 in {6, 1, 3, 5};
/// E_uv holds x_{7i+1}, x_{7i+3}, x_{7i+5} for i < k and F_uv the r-dependent tail.
Certificate cert_general(const SubdivisionMap& map);

/// Indices l (measured from the smaller endpoint) that cert_general picks on each superedge.
std::vector<std::size_t> general_positions(const Decomposition& d);

}  // namespace subsec
