#pragma once

// Small graphs that appear throughout the tests.

#include <rw/graph.hpp>

#include <functional>
#include <vector>

namespace rw::fixtures {

/// Left 1,2,3; right vertices labelled 4,5,6; edges 1-4 1-5 1-6 2-5 3-4 3-5 3-6.
inline auto six_vertex_host() -> BipartiteGraph
{
    std::vector<Edge> edges{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
    return BipartiteGraph::with_opaque_labels(3, {4, 5, 6}, edges);
}

/// Three lefts, two rights: 1-1 2-1 3-1 1-2 3-2.
inline auto small_pattern() -> BipartiteGraph
{
    std::vector<Edge> edges{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}};
    return BipartiteGraph(3, 2, edges);
}

inline auto k11() -> BipartiteGraph
{
    std::vector<Edge> edges{{1, 1}};
    return BipartiteGraph(1, 1, edges);
}

/// Colouring of a B_{n,2b-1} host: for every right vertex X inside H the
/// edge into its p-th smallest element gets `at_position(p)`; everything
/// else gets `other`.
inline auto coloring_on_set(const BipartiteGraph & host, const std::vector<int> & h, std::function<Color(int)> at_position,
    Color other = Color::red) -> EdgeColoring
{
    std::vector<char> in_h(static_cast<std::size_t>(host.left_count()) + 1, 0);
    for (int x : h)
        in_h[static_cast<std::size_t>(x)] = 1;
    return EdgeColoring(host, [&](int l, int r) {
        auto label = host.right_label(r);
        for (int x : label)
            if (! in_h[static_cast<std::size_t>(x)])
                return other;
        int p = 1;
        while (label[static_cast<std::size_t>(p - 1)] != l)
            ++p;
        return at_position(p);
    });
}

}
