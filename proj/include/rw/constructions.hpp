#pragma once

// Builders for K_{n,k} and B_{n,k}, and the embedding of an arbitrary
// bipartite graph as an induced subgraph of some B_{a,b}.

#include <rw/combinatorics.hpp>
#include <rw/error.hpp>
#include <rw/graph.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rw {

/// K_{n,k}: left [n], right vertices with opaque labels 1..k, all n*k edges.
inline auto complete_bipartite(int n, int k) -> BipartiteGraph
{
    if (n < 1 || k < 1)
        throw ParameterError("complete_bipartite: sizes must be positive, got " + std::to_string(n) + "," + std::to_string(k));
    auto g = detail::GraphAccess::shaped(n, k);
    std::vector<int> labels(static_cast<std::size_t>(k));
    for (int r = 1; r <= k; ++r) {
        labels[static_cast<std::size_t>(r - 1)] = r;
        for (int l = 1; l <= n; ++l)
            detail::GraphAccess::add_edge(g, l, r);
    }
    detail::GraphAccess::set_opaque_labels(g, std::move(labels));
    return g;
}

/// B_{n,k}: left [n], right vertices the k-subsets of [n] in lexicographic
/// order, edge (x, X) iff x is in X.
inline auto set_bipartite(int n, int k) -> BipartiteGraph
{
    if (k < 1 || k > n)
        throw ParameterError("set_bipartite: need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    auto count = binomial(n, k);
    if (count > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw ParameterError("set_bipartite: C(" + std::to_string(n) + "," + std::to_string(k) + ") right vertices is too many");

    auto g = detail::GraphAccess::shaped(n, static_cast<int>(count));
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(k));
    Subset x = first_combination(k);
    int r = 1;
    do {
        flat.insert(flat.end(), x.begin(), x.end());
        for (int v : x)
            detail::GraphAccess::add_edge(g, v, r);
        ++r;
    } while (next_combination(x, n));
    detail::GraphAccess::set_uniform_subset_labels(g, std::move(flat), static_cast<std::size_t>(k));
    detail::GraphAccess::mark_full_family(g, k);
    return g;
}

/// Where a pattern lands inside B_{a,b}.
struct EmbeddingResult
{
    int a = 0;
    int b = 0;
    /// left_map[i-1]: host left of pattern left i (always i).
    std::vector<int> left_map;
    /// right_map[j-1]: the b-subset of [a] standing for pattern right j.
    std::vector<Subset> right_map;
    /// Against set_bipartite(a, b).
    InducedCopyWitness witness;
};

/// Embeds a pattern with c left and d right vertices into B_{a,b} with
/// a = 2c + d and b = c + 1.
///
/// Host lefts are numbered so that pattern left i is i, the primed vertex i'
/// is c + i and the double-primed j'' is 2c + j. Pattern right j with
/// neighbours z_1..z_L becomes {z_1..z_L} + {j''} + {1'..(b-L-1)'}: the
/// double-primed element keeps rights with equal neighbourhoods apart, and
/// the primed fillers pad to size b without touching any pattern left.
inline auto embed_into_set_bipartite(const BipartiteGraph & pattern) -> EmbeddingResult
{
    const int c = pattern.left_count();
    const int d = pattern.right_count();
    if (c < 1 || d < 1)
        throw ValidationError("embed: pattern needs at least one vertex on each side, got " + std::to_string(c) + "+" + std::to_string(d));

    EmbeddingResult out;
    out.a = 2 * c + d;
    out.b = c + 1;
    for (int i = 1; i <= c; ++i)
        out.left_map.push_back(i);

    SubsetRanker ranker(out.a, out.b);
    std::vector<int> host_right;
    for (int j = 1; j <= d; ++j) {
        Subset image = pattern.left_neighbors(j);
        const int fillers = out.b - static_cast<int>(image.size()) - 1;
        for (int f = 1; f <= fillers; ++f)
            image.push_back(c + f);
        image.push_back(2 * c + j);
        // neighbours <= c < fillers <= 2c < 2c + j, so already sorted
        if (static_cast<int>(image.size()) != out.b || ! ranker.valid(image))
            throw std::logic_error("embed: image of right " + std::to_string(j) + " is not a " + std::to_string(out.b) + "-subset");
        host_right.push_back(static_cast<int>(ranker.rank(image)) + 1);
        out.right_map.push_back(std::move(image));
    }

    // Inducedness in B_{a,b} is membership: i in image(j) iff (i, j) is a
    // pattern edge. Fillers and distinguishers are > c, so only the neighbour
    // part can contain a pattern left.
    for (int j = 1; j <= d; ++j)
        for (int i = 1; i <= c; ++i) {
            const auto & image = out.right_map[static_cast<std::size_t>(j - 1)];
            const bool member = std::ranges::binary_search(image, i);
            if (member != pattern.has_edge(i, j))
                throw std::logic_error("embed: membership does not reproduce pattern adjacency");
        }

    out.witness = InducedCopyWitness{pattern, out.left_map, std::move(host_right), std::nullopt};
    return out;
}

}
