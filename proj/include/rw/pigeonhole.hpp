#pragma once

// Monochromatic K_{a,b} extraction from a 2-coloured K_{n,k}.
//
// Each left vertex x has a signature: the colours of (x,1), ..., (x,k). Some
// signature is shared by at least ceil(n / 2^k) left vertices, and some colour
// fills at least ceil(k / 2) of its positions; those vertices and positions
// span a monochromatic complete subgraph. With n >= a * 2^k and k >= 2b both
// counts are large enough.

#include <rw/combinatorics.hpp>
#include <rw/constructions.hpp>
#include <rw/error.hpp>
#include <rw/graph.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rw {

struct ColorSignature
{
    std::vector<Color> entries;

    auto operator<=>(const ColorSignature &) const = default;
    auto operator==(const ColorSignature &) const -> bool = default;
};

inline auto signature_of(const BipartiteGraph & host, const EdgeColoring & coloring, int x) -> ColorSignature
{
    if (! host.is_complete())
        throw ParameterError("signature_of: host is not complete bipartite");
    if (! host.has_left(x))
        throw ParameterError("signature_of: left vertex " + std::to_string(x) + " is not in the host");
    require_fits(host, coloring);
    ColorSignature sig;
    sig.entries.reserve(static_cast<std::size_t>(host.right_count()));
    for (int p = 1; p <= host.right_count(); ++p)
        sig.entries.push_back(coloring.color(x, p));
    return sig;
}

/// Finds a monochromatic K_{a,b} in a 2-coloured complete host K_{n,k}.
///
/// Requires n >= a * 2^k and k >= 2b. Deterministic: the largest signature
/// class wins, ties going to the lexicographically least signature (RED <
/// BLUE); its a smallest members are the lefts; RED is used when it fills at
/// least b positions, otherwise BLUE, and the b smallest such positions are
/// the rights.
inline auto extract_monochromatic_complete(const BipartiteGraph & host, const EdgeColoring & coloring, int a, int b)
    -> InducedCopyWitness
{
    if (a < 1 || b < 1)
        throw ParameterError("extract_monochromatic_complete: a and b must be positive");
    if (! host.is_complete())
        throw ParameterError("extract_monochromatic_complete: host is not complete bipartite");
    require_fits(host, coloring);
    const int n = host.left_count();
    const int k = host.right_count();
    if (k < 2 * b)
        throw ParameterError("extract_monochromatic_complete: need k >= 2b, got k=" + std::to_string(k) + " b=" + std::to_string(b));
    const auto classes_bound = saturating_pow(2, static_cast<std::uint64_t>(k));
    if (saturating_mul(static_cast<std::uint64_t>(a), classes_bound) > static_cast<std::uint64_t>(n))
        throw ParameterError("extract_monochromatic_complete: need n >= a*2^k, got n=" + std::to_string(n) + " a=" +
            std::to_string(a) + " k=" + std::to_string(k));

    std::map<ColorSignature, std::vector<int>> classes;
    for (int x = 1; x <= n; ++x)
        classes[signature_of(host, coloring, x)].push_back(x);

    auto best = classes.begin();
    for (auto it = classes.begin(); it != classes.end(); ++it)
        if (it->second.size() > best->second.size())
            best = it;

    const auto & [signature, members] = *best;
    const auto min_class = (static_cast<std::uint64_t>(n) + classes_bound - 1) / classes_bound;
    if (members.size() < min_class || members.size() < static_cast<std::size_t>(a))
        throw std::logic_error("extract_monochromatic_complete: largest signature class below the pigeonhole bound");

    const auto reds = std::ranges::count(signature.entries, Color::red);
    const Color chosen = reds >= b ? Color::red : Color::blue;
    const auto chosen_count = chosen == Color::red ? reds : k - reds;
    if (std::max(reds, k - reds) < (k + 1) / 2 || chosen_count < b)
        throw std::logic_error("extract_monochromatic_complete: majority colour below the pigeonhole bound");

    std::vector<int> lefts(members.begin(), members.begin() + a);
    std::vector<int> positions;
    for (int p = 1; p <= k && static_cast<int>(positions.size()) < b; ++p)
        if (signature.entries[static_cast<std::size_t>(p - 1)] == chosen)
            positions.push_back(p);

    return InducedCopyWitness{complete_bipartite(a, b), std::move(lefts), std::move(positions), chosen};
}

}
