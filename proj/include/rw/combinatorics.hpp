#pragma once

// k-subsets of [n] = {1, ..., n}: counting, lexicographic enumeration and
// ranking. All subsets are sorted ascending and 1-based.

#include <rw/error.hpp>

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rw {

using Subset = std::vector<int>;

inline constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

inline auto saturating_mul(std::uint64_t x, std::uint64_t y) -> std::uint64_t
{
    if (x != 0 && y > saturated / x)
        return saturated;
    return x * y;
}

inline auto saturating_add(std::uint64_t x, std::uint64_t y) -> std::uint64_t
{
    return y > saturated - x ? saturated : x + y;
}

inline auto saturating_pow(std::uint64_t base, std::uint64_t exp) -> std::uint64_t
{
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        result = saturating_mul(result, base);
        if (result == saturated)
            break;
    }
    return result;
}

/// C(n, k), saturating at `saturated` on overflow; zero when k < 0 or k > n.
inline auto binomial(std::int64_t n, std::int64_t k) -> std::uint64_t
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step
        auto wide = static_cast<unsigned __int128>(result) * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (wide > saturated)
            return saturated;
        result = static_cast<std::uint64_t>(wide);
    }
    return result;
}

/// {1, ..., k}
inline auto first_combination(int k) -> Subset
{
    Subset s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        s[static_cast<std::size_t>(i)] = i + 1;
    return s;
}

/// Advances `c` to the lexicographically next k-subset of [n]. Returns false
/// (leaving `c` unspecified) after the last one.
inline auto next_combination(Subset & c, int n) -> bool
{
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1)
        --i;
    if (i < 0)
        return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

/// Calls f(subset) for every k-subset of `ground` (sorted), in lexicographic
/// order of positions. Stops early if f returns false; returns whether it ran
/// to completion.
template <typename F>
auto for_each_subset_of(std::span<const int> ground, int k, F && f) -> bool
{
    const int n = static_cast<int>(ground.size());
    if (k < 0 || k > n)
        return true;
    Subset pos = first_combination(k);
    Subset picked(static_cast<std::size_t>(k));
    do {
        for (int i = 0; i < k; ++i)
            picked[static_cast<std::size_t>(i)] = ground[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)] - 1)];
        if (! f(std::as_const(picked)))
            return false;
    } while (next_combination(pos, n));
    return true;
}

/// Lexicographic ranking of the k-subsets of [n]. Ranks are 0-based.
class SubsetRanker
{
  public:
    SubsetRanker(int n, int k) : n_(n), k_(k)
    {
        if (n < 0 || k < 0 || k > n)
            throw ParameterError("SubsetRanker: need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
        count_ = binomial(n, k);
        if (count_ == saturated)
            throw ParameterError("SubsetRanker: C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
        // prefix_[j][v] = sum_{u=1}^{v-1} C(n-u, j)
        prefix_.assign(static_cast<std::size_t>(k + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 2), 0));
        for (int j = 0; j <= k; ++j)
            for (int v = 2; v <= n + 1; ++v)
                prefix_[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] =
                    prefix_[static_cast<std::size_t>(j)][static_cast<std::size_t>(v - 1)] + binomial(n - (v - 1), j);
    }

    auto n() const noexcept -> int { return n_; }
    auto k() const noexcept -> int { return k_; }
    auto count() const noexcept -> std::uint64_t { return count_; }

    /// Rank of a sorted k-subset of [n]; no validation.
    auto rank(std::span<const int> s) const noexcept -> std::uint64_t
    {
        std::uint64_t r = 0;
        int prev = 0;
        for (int i = 1; i <= k_; ++i) {
            const auto & row = prefix_[static_cast<std::size_t>(k_ - i)];
            const int x = s[static_cast<std::size_t>(i - 1)];
            r += row[static_cast<std::size_t>(x)] - row[static_cast<std::size_t>(prev + 1)];
            prev = x;
        }
        return r;
    }

    /// Whether `s` is a sorted k-subset of [n].
    auto valid(std::span<const int> s) const noexcept -> bool
    {
        if (static_cast<int>(s.size()) != k_)
            return false;
        int prev = 0;
        for (int x : s) {
            if (x <= prev || x > n_)
                return false;
            prev = x;
        }
        return true;
    }

    auto unrank(std::uint64_t r) const -> Subset
    {
        if (r >= count_)
            throw ParameterError("SubsetRanker::unrank: rank out of range");
        Subset s;
        s.reserve(static_cast<std::size_t>(k_));
        int v = 1;
        for (int i = 1; i <= k_; ++i) {
            for (;; ++v) {
                auto block = binomial(n_ - v, k_ - i);
                if (r < block)
                    break;
                r -= block;
            }
            s.push_back(v++);
        }
        return s;
    }

  private:
    int n_;
    int k_;
    std::uint64_t count_ = 0;
    std::vector<std::vector<std::uint64_t>> prefix_;
};

inline auto join(std::span<const int> xs, char sep = ',') -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0)
            out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

inline auto is_sorted_subset_of_range(std::span<const int> s, int lo, int hi) -> bool
{
    int prev = lo - 1;
    for (int x : s) {
        if (x <= prev || x > hi)
            return false;
        prev = x;
    }
    return true;
}

}
