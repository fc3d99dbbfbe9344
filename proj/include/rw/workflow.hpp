#pragma once

// Induced monochromatic copies of an arbitrary bipartite pattern: embed the
// pattern into B_{a,b}, find an induced monochromatic B_{a,b} in the coloured
// B_{n,2b-1} host, and compose the two maps.

#include <rw/combinatorics.hpp>
#include <rw/constructions.hpp>
#include <rw/error.hpp>
#include <rw/graph.hpp>
#include <rw/graph_core.hpp>
#include <rw/hyper_ramsey.hpp>
#include <rw/induced_extract.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace rw {

struct ParameterReport
{
    int c = 0;
    int d = 0;
    /// 2c + d
    int a = 0;
    /// c + 1
    int b = 0;
    /// 2b - 1, the host's right arity
    int k = 0;
    /// ab + b - 1, the homogeneous set size needed
    int s = 0;
    /// 2 * C(2b-1, b)
    std::uint64_t palette = 0;
    /// Host size that guarantees a copy, as a Ramsey number: "R_{k,palette}(s)".
    std::string n_formula;
    /// Never computed; far out of reach for every non-trivial pattern.
    std::optional<std::uint64_t> n_value;
};

inline auto required_parameters(const BipartiteGraph & pattern) -> ParameterReport
{
    ParameterReport p;
    p.c = pattern.left_count();
    p.d = pattern.right_count();
    if (p.c < 1 || p.d < 1)
        throw ValidationError("pattern needs at least one vertex on each side, got " + std::to_string(p.c) + "+" + std::to_string(p.d));
    p.a = 2 * p.c + p.d;
    p.b = p.c + 1;
    p.k = 2 * p.b - 1;
    p.s = p.a * p.b + p.b - 1;
    p.palette = saturating_mul(2, binomial(p.k, p.b));
    p.n_formula = "R_{" + std::to_string(p.k) + "," + std::to_string(p.palette) + "}(" + std::to_string(p.s) + ")";
    return p;
}

/// Runs the constructive pipeline on `coloring` of `host` = B_{n,2b-1} with
/// b = c + 1. Returns nothing when [n] has no homogeneous s-set for the
/// derived colouring (always so when n < s); success is only guaranteed for
/// n at least the Ramsey number in required_parameters().
inline auto find_induced_mono_pattern(const BipartiteGraph & pattern, const BipartiteGraph & host, const EdgeColoring & coloring,
    std::uint64_t budget = default_budget) -> std::optional<InducedCopyWitness>
{
    const auto params = required_parameters(pattern);
    if (! host.is_set_graph(params.k))
        throw ValidationError("find_induced_mono_pattern: host is not B_{n," + std::to_string(params.k) + "}");
    require_fits(host, coloring);
    if (host.left_count() < params.s)
        return std::nullopt;

    const auto embedding = embed_into_set_bipartite(pattern);
    const auto derived = derive_coloring(host, coloring, params.b);
    const auto homogeneous = find_homogeneous_set(derived, params.s, budget);
    if (! homogeneous)
        return std::nullopt;

    const auto big = extract_induced(homogeneous->vertices, decode(*homogeneous->value, params.b), params.a, params.b, host, coloring);

    // pattern left i -> B_{a,b} left i -> host; pattern right j -> b-subset
    // of [a] -> B_{a,b} right of that label -> host
    InducedCopyWitness w{pattern, {}, {}, big.claimed_color};
    for (int i : embedding.left_map)
        w.host_left.push_back(big.host_left[static_cast<std::size_t>(i - 1)]);
    for (const auto & label : embedding.right_map) {
        auto t = big.pattern.find_right(label);
        if (! t)
            throw std::logic_error("find_induced_mono_pattern: embedding label missing from B_{a,b}");
        w.host_right.push_back(big.host_right[static_cast<std::size_t>(*t - 1)]);
    }

    if (! verify_witness(host, coloring, w))
        throw std::logic_error("find_induced_mono_pattern: composed copy failed verification");
    return w;
}

}
