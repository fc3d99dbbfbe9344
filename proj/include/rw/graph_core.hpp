#pragma once

// Induced-copy checking and the brute-force induced monochromatic copy
// search that every constructive algorithm in the library is tested against.

#include <rw/combinatorics.hpp>
#include <rw/error.hpp>
#include <rw/graph.hpp>

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rw {

namespace detail {
    inline auto check_injective_into(std::span<const int> xs, int upper, const char * side) -> void
    {
        std::vector<char> seen(static_cast<std::size_t>(upper) + 1, 0);
        for (int x : xs) {
            if (x < 1 || x > upper)
                throw ValidationError(std::string("witness: ") + side + " vertex " + std::to_string(x) + " is not in the host");
            if (seen[static_cast<std::size_t>(x)])
                throw ValidationError(std::string("witness: ") + side + " vertex " + std::to_string(x) + " used twice");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }

    inline auto validate_witness_shape(const BipartiteGraph & host, const InducedCopyWitness & w) -> void
    {
        if (w.host_left.size() != static_cast<std::size_t>(w.pattern.left_count()))
            throw ValidationError("witness: " + std::to_string(w.host_left.size()) + " left images for a pattern with " +
                std::to_string(w.pattern.left_count()) + " left vertices");
        if (w.host_right.size() != static_cast<std::size_t>(w.pattern.right_count()))
            throw ValidationError("witness: " + std::to_string(w.host_right.size()) + " right images for a pattern with " +
                std::to_string(w.pattern.right_count()) + " right vertices");
        check_injective_into(w.host_left, host.left_count(), "left");
        check_injective_into(w.host_right, host.right_count(), "right");
    }

    inline auto induced_check(const BipartiteGraph & host, const EdgeColoring * coloring, const InducedCopyWitness & w) -> bool
    {
        validate_witness_shape(host, w);
        if (coloring)
            require_fits(host, *coloring);
        for (int j = 1; j <= w.pattern.right_count(); ++j) {
            const int r = w.host_right[static_cast<std::size_t>(j - 1)];
            for (int i = 1; i <= w.pattern.left_count(); ++i) {
                const int l = w.host_left[static_cast<std::size_t>(i - 1)];
                const bool edge = host.has_edge(l, r);
                if (edge != w.pattern.has_edge(i, j))
                    return false;
                if (edge && coloring && w.claimed_color && coloring->color(l, r) != *w.claimed_color)
                    return false;
            }
        }
        return true;
    }
}

/// True iff the witness maps the pattern onto an induced copy in `host`:
/// pattern edge (i, j) exists exactly when the host has the edge between the
/// images. Malformed witnesses throw ValidationError.
inline auto verify_witness(const BipartiteGraph & host, const InducedCopyWitness & witness) -> bool
{
    return detail::induced_check(host, nullptr, witness);
}

/// As above; additionally, when the witness claims a colour, every host edge
/// between mapped vertices must carry it.
inline auto verify_witness(const BipartiteGraph & host, const EdgeColoring & coloring, const InducedCopyWitness & witness) -> bool
{
    return detail::induced_check(host, &coloring, witness);
}

/// The subgraph of `host` on the given left and right vertices, with every
/// host edge between them. Lefts are renumbered 1.. in ascending order;
/// rights keep their labels.
inline auto induced_subgraph(const BipartiteGraph & host, std::span<const int> lefts, std::span<const int> rights) -> BipartiteGraph
{
    std::vector<int> ls(lefts.begin(), lefts.end());
    std::vector<int> rs(rights.begin(), rights.end());
    std::ranges::sort(ls);
    std::ranges::sort(rs);
    detail::check_injective_into(ls, host.left_count(), "left");
    detail::check_injective_into(rs, host.right_count(), "right");

    auto g = detail::GraphAccess::shaped(static_cast<int>(ls.size()), static_cast<int>(rs.size()));
    if (host.label_kind() == LabelKind::opaque) {
        std::vector<int> labels;
        labels.reserve(rs.size());
        for (int r : rs)
            labels.push_back(host.right_label(r)[0]);
        detail::GraphAccess::set_opaque_labels(g, std::move(labels));
    }
    else {
        std::vector<Subset> labels;
        labels.reserve(rs.size());
        for (int r : rs) {
            auto l = host.right_label(r);
            labels.emplace_back(l.begin(), l.end());
        }
        detail::GraphAccess::set_subset_labels(g, labels);
    }
    for (std::size_t j = 0; j < rs.size(); ++j)
        for (std::size_t i = 0; i < ls.size(); ++i)
            if (host.has_edge(ls[i], rs[j]))
                detail::GraphAccess::add_edge(g, static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return g;
}

/// Brute-force search for an induced copy of `pattern` in `host` whose edges
/// all share one colour.
///
/// Left images are enumerated as lexicographic combinations of host lefts,
/// each in every order (lexicographic permutations). For a fixed left image
/// and colour the right images are forced up to choice: a host right can
/// stand in for pattern right j only if its trace on the left image is
/// exactly the image of N(j) with the right colour, and host rights for
/// different traces never compete, so taking the smallest unused candidate
/// for each j in turn is complete and gives the lexicographically first
/// right tuple. RED is tried before BLUE. A pattern without edges is reported
/// with claimed colour RED.
///
/// Throws BudgetExceeded after `budget` candidate right checks.
inline auto find_induced_monochromatic(const BipartiteGraph & host, const EdgeColoring & coloring, const BipartiteGraph & pattern,
    std::uint64_t budget = default_budget) -> std::optional<InducedCopyWitness>
{
    require_fits(host, coloring);
    const int pl = pattern.left_count();
    const int pr = pattern.right_count();
    if (pl > host.left_count() || pr > host.right_count())
        return std::nullopt;

    BudgetMeter meter("induced monochromatic copy search", budget);
    const bool edgeless = pattern.edge_count() == 0;
    std::vector<char> used(static_cast<std::size_t>(host.right_count()) + 1);
    std::vector<int> chosen(static_cast<std::size_t>(pr));

    auto fits_right = [&](const std::vector<int> & image, int j, int r, Color c) {
        for (int i = 1; i <= pl; ++i) {
            const int l = image[static_cast<std::size_t>(i - 1)];
            const bool edge = host.has_edge(l, r);
            if (edge != pattern.has_edge(i, j))
                return false;
            if (edge && coloring.color(l, r) != c)
                return false;
        }
        return true;
    };

    auto assign_rights = [&](const std::vector<int> & image, Color c) {
        std::ranges::fill(used, 0);
        for (int j = 1; j <= pr; ++j) {
            bool found = false;
            for (int r = 1; r <= host.right_count() && ! found; ++r) {
                if (used[static_cast<std::size_t>(r)])
                    continue;
                meter.charge();
                if (fits_right(image, j, r, c)) {
                    used[static_cast<std::size_t>(r)] = 1;
                    chosen[static_cast<std::size_t>(j - 1)] = r;
                    found = true;
                }
            }
            if (! found)
                return false;
        }
        return true;
    };

    Subset combination = first_combination(pl);
    do {
        std::vector<int> image = combination;
        do {
            for (Color c : both_colors) {
                if (assign_rights(image, c))
                    return InducedCopyWitness{pattern, image, chosen, edgeless ? Color::red : c};
                if (edgeless)
                    break;
            }
        } while (std::ranges::next_permutation(image).found);
    } while (next_combination(combination, host.left_count()));
    return std::nullopt;
}

}
