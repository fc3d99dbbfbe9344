#pragma once

// Colourings of the a-subsets of [n], homogeneous sets, the derived colouring
// of a 2-coloured B_{n,2b-1}, and exact Ramsey numbers at micro scale.

#include <rw/combinatorics.hpp>
#include <rw/error.hpp>
#include <rw/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rw {

/// A colouring of every arity-subset of [n] with values in [1, palette].
/// Values are stored densely by lexicographic rank of the subset.
class SubsetColoring
{
  public:
    SubsetColoring(int n, int arity, std::uint32_t palette, std::vector<std::uint32_t> values) :
        n_(n), arity_(arity), palette_(palette), values_(std::move(values))
    {
        if (n < 0 || arity < 1 || palette < 1)
            throw ValidationError("subset colouring: need n >= 0, arity >= 1, palette >= 1");
        const auto expected = binomial(n, arity);
        if (expected == saturated || values_.size() != expected)
            throw ValidationError("subset colouring: expected " + std::to_string(expected) + " values, got " + std::to_string(values_.size()));
        for (auto v : values_)
            if (v < 1 || v > palette_)
                throw ValidationError("subset colouring: value " + std::to_string(v) + " outside palette [1," + std::to_string(palette_) + "]");
        if (arity <= n)
            ranker_ = std::make_shared<const SubsetRanker>(n, arity);
    }

    /// Every subset gets `value`.
    static auto constant(int n, int arity, std::uint32_t palette, std::uint32_t value) -> SubsetColoring
    {
        return {n, arity, palette, std::vector<std::uint32_t>(binomial(n, arity), value)};
    }

    /// Value of subset X is f(X), X enumerated in lexicographic order.
    template <typename F>
    static auto from_function(int n, int arity, std::uint32_t palette, F && f) -> SubsetColoring
    {
        std::vector<std::uint32_t> values;
        if (arity >= 1 && arity <= n) {
            values.reserve(binomial(n, arity));
            Subset x = first_combination(arity);
            do
                values.push_back(f(std::as_const(x)));
            while (next_combination(x, n));
        }
        return {n, arity, palette, std::move(values)};
    }

    auto n() const noexcept -> int { return n_; }
    auto arity() const noexcept -> int { return arity_; }
    auto palette() const noexcept -> std::uint32_t { return palette_; }
    auto size() const noexcept -> std::size_t { return values_.size(); }
    auto values() const noexcept -> std::span<const std::uint32_t> { return values_; }

    /// Value of a sorted arity-subset of [n]; no validation.
    auto value(std::span<const int> subset) const noexcept -> std::uint32_t { return values_[ranker_->rank(subset)]; }

    auto value_at_rank(std::uint64_t rank) const noexcept -> std::uint32_t { return values_[rank]; }

    friend auto operator==(const SubsetColoring & a, const SubsetColoring & b) -> bool
    {
        return a.n_ == b.n_ && a.arity_ == b.arity_ && a.palette_ == b.palette_ && a.values_ == b.values_;
    }

  private:
    int n_;
    int arity_;
    std::uint32_t palette_;
    std::vector<std::uint32_t> values_;
    std::shared_ptr<const SubsetRanker> ranker_;
};

/// The colour a (2b-1)-subset X receives from the edges into it: a colour
/// that at least b of the 2b-1 edges carry, and the b smallest positions (in
/// sorted X) carrying it.
struct DerivedColor
{
    Color color = Color::red;
    Subset positions;

    friend auto operator==(const DerivedColor &, const DerivedColor &) -> bool = default;
};

/// 2 * C(2b-1, b)
inline auto derived_palette_size(int b) -> std::uint32_t
{
    if (b < 1)
        throw ParameterError("derived palette: b must be positive");
    auto c = binomial(2 * b - 1, b);
    if (c > 0x7fffffffULL)
        throw ParameterError("derived palette: b too large");
    return static_cast<std::uint32_t>(2 * c);
}

/// Palette value in [1, 2*C(2b-1,b)]: RED values first, then BLUE, each block
/// ordered by the lexicographic rank of the positions.
inline auto encode(const DerivedColor & d, int b) -> std::uint32_t
{
    SubsetRanker positions(2 * b - 1, b);
    if (! positions.valid(d.positions))
        throw ParameterError("derived colour: positions must be a sorted " + std::to_string(b) + "-subset of [" + std::to_string(2 * b - 1) + "]");
    const auto block = static_cast<std::uint32_t>(positions.count());
    return 1 + (d.color == Color::blue ? block : 0) + static_cast<std::uint32_t>(positions.rank(d.positions));
}

inline auto decode(std::uint32_t value, int b) -> DerivedColor
{
    SubsetRanker positions(2 * b - 1, b);
    const auto block = positions.count();
    if (value < 1 || value > 2 * block)
        throw ParameterError("derived colour: value " + std::to_string(value) + " outside palette");
    const auto index = static_cast<std::uint64_t>(value - 1);
    return {index >= block ? Color::blue : Color::red, positions.unrank(index % block)};
}

namespace detail {
    inline auto derive_from_row(const EdgeColoring & coloring, std::span<const int> x, int right, int b, Subset & positions) -> Color
    {
        int reds = 0;
        for (int z : x)
            if (coloring.color(z, right) == Color::red)
                ++reds;
        const int blues = static_cast<int>(x.size()) - reds;
        // 2b-1 edges: exactly one colour reaches b
        if ((reds >= b) == (blues >= b))
            throw std::logic_error("derive_coloring: colour counts do not have a unique majority");
        const Color c = reds >= b ? Color::red : Color::blue;
        positions.clear();
        for (int p = 1; p <= static_cast<int>(x.size()) && static_cast<int>(positions.size()) < b; ++p)
            if (coloring.color(x[static_cast<std::size_t>(p - 1)], right) == c)
                positions.push_back(p);
        return c;
    }

    inline auto require_set_host(const BipartiteGraph & host, int b, const char * who) -> void
    {
        if (b < 1)
            throw ParameterError(std::string(who) + ": b must be positive");
        if (! host.is_set_graph(2 * b - 1))
            throw ValidationError(std::string(who) + ": host is not B_{n," + std::to_string(2 * b - 1) + "} with all right vertices");
    }
}

/// The derived colour of one right vertex of a 2-coloured B_{n,2b-1}.
inline auto derived_color_of(const BipartiteGraph & host, const EdgeColoring & coloring, int right, int b) -> DerivedColor
{
    if (! host.has_right(right))
        throw ParameterError("derived_color_of: right vertex out of range");
    DerivedColor d;
    d.color = detail::derive_from_row(coloring, host.right_label(right), right, b, d.positions);
    return d;
}

/// Colours every (2b-1)-subset X of [n] by the majority colour of the edges
/// (z, X) and the b smallest positions realising it.
inline auto derive_coloring(const BipartiteGraph & host, const EdgeColoring & coloring, int b) -> SubsetColoring
{
    detail::require_set_host(host, b, "derive_coloring");
    require_fits(host, coloring);
    const int k = 2 * b - 1;
    SubsetRanker positions_ranker(k, b);
    const auto block = static_cast<std::uint32_t>(positions_ranker.count());

    std::vector<std::uint32_t> values(static_cast<std::size_t>(host.right_count()));
    Subset positions;
    for (int r = 1; r <= host.right_count(); ++r) {
        const Color c = detail::derive_from_row(coloring, host.right_label(r), r, b, positions);
        values[static_cast<std::size_t>(r - 1)] =
            1 + (c == Color::blue ? block : 0) + static_cast<std::uint32_t>(positions_ranker.rank(positions));
    }
    return {host.left_count(), k, 2 * block, std::move(values)};
}

/// Whether every arity-subset of H gets the same value. Vacuously true when
/// |H| < arity.
inline auto is_homogeneous(const SubsetColoring & coloring, std::span<const int> h) -> bool
{
    Subset sorted(h.begin(), h.end());
    std::ranges::sort(sorted);
    if (! is_sorted_subset_of_range(sorted, 1, coloring.n()))
        throw ValidationError("is_homogeneous: H must be a set of vertices in [1," + std::to_string(coloring.n()) + "]");
    std::optional<std::uint32_t> seen;
    return for_each_subset_of(sorted, coloring.arity(), [&](const Subset & x) {
        auto v = coloring.value(x);
        if (! seen)
            seen = v;
        return *seen == v;
    });
}

struct HomogeneousSet
{
    Subset vertices;
    /// The common value; absent when |vertices| < arity.
    std::optional<std::uint32_t> value;
};

/// The lexicographically first homogeneous s-subset of [n], if any.
///
/// Depth-first over increasing vertices; a prefix is abandoned as soon as an
/// arity-subset through its newest vertex disagrees, which loses nothing
/// because subsets of homogeneous sets are homogeneous. Throws
/// BudgetExceeded after `budget` value lookups.
inline auto find_homogeneous_set(const SubsetColoring & coloring, int s, std::uint64_t budget = default_budget)
    -> std::optional<HomogeneousSet>
{
    const int n = coloring.n();
    const int arity = coloring.arity();
    if (s < 0 || s > n)
        throw ParameterError("find_homogeneous_set: need 0 <= s <= n, got s=" + std::to_string(s) + " n=" + std::to_string(n));

    BudgetMeter meter("homogeneous set search", budget);
    Subset current;
    current.reserve(static_cast<std::size_t>(s));
    Subset x(static_cast<std::size_t>(arity));
    std::optional<std::uint32_t> common;

    std::function<bool(int)> extend = [&](int from) -> bool {
        if (static_cast<int>(current.size()) == s)
            return true;
        const int last = n - (s - static_cast<int>(current.size())) + 1;
        for (int v = from; v <= last; ++v) {
            auto value = common;
            bool ok = for_each_subset_of(current, arity - 1, [&](const Subset & base) {
                meter.charge();
                std::ranges::copy(base, x.begin());
                x.back() = v;
                auto got = coloring.value(x);
                if (! value)
                    value = got;
                return *value == got;
            });
            if (! ok)
                continue;
            auto saved = common;
            common = value;
            current.push_back(v);
            if (extend(v + 1))
                return true;
            current.pop_back();
            common = saved;
        }
        return false;
    };

    if (! extend(1))
        return std::nullopt;
    return HomogeneousSet{current, common};
}

struct RamseyResult
{
    /// Least n <= max_n at which every colouring has a homogeneous s-set.
    std::optional<int> n;
    /// A colouring without a homogeneous s-set at the largest failing n.
    std::optional<SubsetColoring> counterexample;
};

namespace detail {
    // Rough count of primitive checks to enumerate every colouring of
    // C([n], arity) and search each for a homogeneous s-set.
    inline auto ramsey_estimate(int arity, std::uint32_t palette, int s, int n) -> std::uint64_t
    {
        auto colorings = saturating_pow(palette, binomial(n, arity));
        auto per = saturating_add(saturating_mul(binomial(n, s), binomial(s, arity)), 1);
        return saturating_mul(colorings, per);
    }

    // Returns a colouring of C([n], arity) with no homogeneous s-set, or
    // nothing if every colouring has one. Colourings are visited in odometer
    // order over the value vector indexed by subset rank, last rank fastest.
    inline auto find_ramsey_counterexample(int arity, std::uint32_t palette, int s, int n) -> std::optional<SubsetColoring>
    {
        std::vector<std::uint32_t> values(binomial(n, arity), 1);
        for (;;) {
            SubsetColoring c(n, arity, palette, values);
            if (! find_homogeneous_set(c, s, saturated))
                return c;
            std::size_t i = values.size();
            while (i > 0 && values[i - 1] == palette)
                values[--i] = 1;
            if (i == 0)
                return std::nullopt;
            ++values[i - 1];
        }
    }
}

/// R_{arity,palette}(s), searched for exhaustively over n = 1..max_n.
///
/// Refuses (BudgetExceeded, carrying the estimate) any n whose enumeration
/// would exceed `budget` checks. After the first success at n, n+1 is also
/// enumerated when affordable, and a counterexample there is an internal error.
inline auto ramsey_number_exact(int arity, std::uint32_t palette, int s, int max_n, std::uint64_t budget = default_budget)
    -> RamseyResult
{
    if (arity < 1 || palette < 1 || s < 1 || max_n < 1)
        throw ParameterError("ramsey_number_exact: all parameters must be positive");

    RamseyResult result;
    for (int n = 1; n <= max_n; ++n) {
        if (n < s) {
            // no s-subsets at all, so every colouring is a counterexample
            result.counterexample = SubsetColoring::constant(n, arity, palette, 1);
            continue;
        }
        const auto estimate = detail::ramsey_estimate(arity, palette, s, n);
        if (estimate > budget)
            throw BudgetExceeded("ramsey_number_exact at n=" + std::to_string(n), estimate, budget);
        if (auto bad = detail::find_ramsey_counterexample(arity, palette, s, n)) {
            result.counterexample = std::move(bad);
            continue;
        }
        result.n = n;
        if (n + 1 <= max_n && detail::ramsey_estimate(arity, palette, s, n + 1) <= budget)
            if (detail::find_ramsey_counterexample(arity, palette, s, n + 1))
                throw std::logic_error("ramsey_number_exact: counterexample at n+1 after success at n");
        return result;
    }
    return result;
}

}
