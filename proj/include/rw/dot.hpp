#pragma once

// Graphviz export: left vertices in one rank, right vertices in another,
// edges coloured red/blue (black when uncoloured). Witness vertices and the
// edges between them are drawn bold.

#include <rw/graph.hpp>
#include <rw/graph_core.hpp>

#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace rw {

inline constexpr int highlight_penwidth = 3;

namespace detail {
    // "2, 3, 4"
    inline auto vertex_label(std::span<const int> label) -> std::string
    {
        std::string s;
        for (std::size_t i = 0; i < label.size(); ++i) {
            if (i != 0)
                s += ", ";
            s += std::to_string(label[i]);
        }
        return s;
    }
}

inline auto export_dot(const BipartiteGraph & graph, const EdgeColoring * coloring = nullptr, const InducedCopyWitness * witness = nullptr)
    -> std::string
{
    if (coloring)
        require_fits(graph, *coloring);
    std::vector<char> mark_left(static_cast<std::size_t>(graph.left_count()) + 1, 0);
    std::vector<char> mark_right(static_cast<std::size_t>(graph.right_count()) + 1, 0);
    if (witness) {
        detail::validate_witness_shape(graph, *witness);
        for (int l : witness->host_left)
            mark_left[static_cast<std::size_t>(l)] = 1;
        for (int r : witness->host_right)
            mark_right[static_cast<std::size_t>(r)] = 1;
    }

    std::ostringstream out;
    out << "graph bipartite {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";

    auto vertex = [&](char side, int v, const std::string & label, bool marked) {
        out << "    " << side << v << " [label=\"" << label << "\"";
        if (marked)
            out << ", penwidth=" << highlight_penwidth << ", style=bold";
        out << "];\n";
    };

    if (graph.left_count() > 0) {
        out << "  {\n    rank=same;\n";
        for (int l = 1; l <= graph.left_count(); ++l)
            vertex('l', l, std::to_string(l), mark_left[static_cast<std::size_t>(l)]);
        out << "  }\n";
    }
    if (graph.right_count() > 0) {
        out << "  {\n    rank=same;\n";
        for (int r = 1; r <= graph.right_count(); ++r)
            vertex('r', r, detail::vertex_label(graph.right_label(r)), mark_right[static_cast<std::size_t>(r)]);
        out << "  }\n";
    }

    for (auto e : graph.edges()) {
        out << "  l" << e.left << " -- r" << e.right << " [color=";
        out << (coloring ? color_name(coloring->color(e.left, e.right)) : "black");
        if (mark_left[static_cast<std::size_t>(e.left)] && mark_right[static_cast<std::size_t>(e.right)])
            out << ", penwidth=" << highlight_penwidth;
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}
