#pragma once

// Induced monochromatic B_{a,b} inside a 2-coloured B_{n,2b-1}, given a set H
// that is homogeneous for the derived colouring.
//
// With s = ab + b - 1, rank the first s elements of H as 1..s and use ranks
// b, 2b, ..., ab as the left vertices. A b-subset S of those ranks becomes the
// (2b-1)-subset X of ranks that has s_j at sorted position i_j for every j,
// where I = {i_1 < ... < i_b} are the positions of the derived colour. The
// other b-1 elements of X ("fillers") sit in the gaps around the s_j and are
// never multiples of b, so the chosen lefts inside X are exactly S.

#include <rw/combinatorics.hpp>
#include <rw/constructions.hpp>
#include <rw/error.hpp>
#include <rw/graph.hpp>
#include <rw/graph_core.hpp>
#include <rw/hyper_ramsey.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rw {

struct ExtractionPlan
{
    int a = 0;
    int b = 0;
    /// ab + b - 1
    int s = 0;
    /// b, 2b, ..., ab
    std::vector<int> chosen_ranks;
    Subset positions;
    Color color = Color::red;
};

inline auto make_plan(int a, int b, const DerivedColor & derived) -> ExtractionPlan
{
    if (b < 1 || a < b)
        throw ParameterError("extraction plan: need 1 <= b <= a, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    if (! SubsetRanker(2 * b - 1, b).valid(derived.positions))
        throw ParameterError("extraction plan: positions must be a sorted " + std::to_string(b) + "-subset of [" + std::to_string(2 * b - 1) + "]");
    ExtractionPlan plan{a, b, a * b + b - 1, {}, derived.positions, derived.color};
    for (int t = 1; t <= a; ++t)
        plan.chosen_ranks.push_back(t * b);
    return plan;
}

/// The (2b-1)-subset of [ab+b-1] whose sorted element at position i_j is s_j.
///
/// Fillers: the i_1 - 1 slots before s_1 take s_1 - g, ..., s_1 - 1; the slots
/// after s_j (up to the next chosen position, or to the end after s_b) take
/// s_j + 1, s_j + 2, ....
inline auto build_right_vertex(std::span<const int> chosen, std::span<const int> positions, int a, int b) -> Subset
{
    if (b < 1 || a < b)
        throw ParameterError("build_right_vertex: need 1 <= b <= a");
    if (static_cast<int>(chosen.size()) != b || ! is_sorted_subset_of_range(chosen, 1, a * b))
        throw ParameterError("build_right_vertex: S must be a sorted " + std::to_string(b) + "-subset of {b, 2b, ..., ab}");
    for (int x : chosen)
        if (x % b != 0)
            throw ParameterError("build_right_vertex: " + std::to_string(x) + " is not a chosen rank");
    const int k = 2 * b - 1;
    if (static_cast<int>(positions.size()) != b || ! is_sorted_subset_of_range(positions, 1, k))
        throw ParameterError("build_right_vertex: I must be a sorted " + std::to_string(b) + "-subset of [" + std::to_string(k) + "]");

    const int s = a * b + b - 1;
    auto at = [](std::span<const int> xs, int j) { return xs[static_cast<std::size_t>(j - 1)]; };
    auto internal = [](bool ok, const char * what) {
        if (! ok)
            throw std::logic_error(std::string("build_right_vertex: ") + what);
    };

    Subset x;
    x.reserve(static_cast<std::size_t>(k));

    const int before = at(positions, 1) - 1;
    internal(before <= b - 1, "gap larger than b-1");
    internal(at(chosen, 1) - before >= 1, "before-gap runs below 1");
    for (int f = before; f >= 1; --f)
        x.push_back(at(chosen, 1) - f);

    for (int j = 1; j <= b; ++j) {
        const int sj = at(chosen, j);
        x.push_back(sj);
        const int gap = (j < b ? at(positions, j + 1) : k + 1) - at(positions, j) - 1;
        internal(gap <= b - 1, "gap larger than b-1");
        if (j < b)
            internal(sj + gap < at(chosen, j + 1), "fillers reach the next chosen rank");
        else
            internal(sj + gap <= s, "after-gap runs past ab+b-1");
        for (int f = 1; f <= gap; ++f)
            x.push_back(sj + f);
    }

    internal(static_cast<int>(x.size()) == k, "wrong size");
    for (int j = 1; j <= b; ++j)
        internal(at(x, at(positions, j)) == at(chosen, j), "chosen rank at the wrong position");
    return x;
}

/// Induced monochromatic B_{a,b} in `host` = B_{n,2b-1} from a set H whose
/// (2b-1)-subsets all have derived colour `derived`.
///
/// Only the first s = ab + b - 1 elements of sorted H are used; their
/// homogeneity is re-checked against `coloring` first. Pattern left t maps
/// to H[tb]; pattern right T maps to H applied to
/// build_right_vertex({tb : t in T}, derived.positions).
inline auto extract_induced(std::span<const int> h, const DerivedColor & derived, int a, int b, const BipartiteGraph & host,
    const EdgeColoring & coloring) -> InducedCopyWitness
{
    const auto plan = make_plan(a, b, derived);
    detail::require_set_host(host, b, "extract_induced");
    require_fits(host, coloring);

    Subset sorted(h.begin(), h.end());
    std::ranges::sort(sorted);
    if (! is_sorted_subset_of_range(sorted, 1, host.left_count()))
        throw ParameterError("extract_induced: H must be a set of host left vertices");
    if (static_cast<int>(sorted.size()) < plan.s)
        throw ParameterError("extract_induced: |H| = " + std::to_string(sorted.size()) + " but ab+b-1 = " + std::to_string(plan.s));
    sorted.resize(static_cast<std::size_t>(plan.s));

    auto host_right_of = [&](std::span<const int> ranks) {
        Subset label;
        label.reserve(ranks.size());
        for (int x : ranks)
            label.push_back(sorted[static_cast<std::size_t>(x - 1)]);
        auto r = host.find_right(label);
        if (! r)
            throw std::logic_error("extract_induced: host has no right vertex {" + join(label) + "}");
        return *r;
    };

    const int k = 2 * b - 1;
    for_each_subset_of(first_combination(plan.s), k, [&](const Subset & ranks) {
        if (derived_color_of(host, coloring, host_right_of(ranks), b) != derived)
            throw ParameterError("extract_induced: H is not homogeneous with the given derived colour");
        return true;
    });

    auto pattern = set_bipartite(a, b);
    std::vector<int> lefts;
    for (int rank : plan.chosen_ranks)
        lefts.push_back(sorted[static_cast<std::size_t>(rank - 1)]);

    std::vector<int> rights;
    rights.reserve(static_cast<std::size_t>(pattern.right_count()));
    Subset chosen(static_cast<std::size_t>(b));
    for (int t = 1; t <= pattern.right_count(); ++t) {
        auto members = pattern.right_label(t);
        for (int j = 0; j < b; ++j)
            chosen[static_cast<std::size_t>(j)] = members[static_cast<std::size_t>(j)] * b;
        rights.push_back(host_right_of(build_right_vertex(chosen, plan.positions, a, b)));
    }

    InducedCopyWitness w{std::move(pattern), std::move(lefts), std::move(rights), plan.color};
    if (! verify_witness(host, coloring, w))
        throw std::logic_error("extract_induced: constructed copy failed verification");
    return w;
}

}
