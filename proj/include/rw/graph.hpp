#pragma once

// Bipartite graphs with labelled right vertices, 2-colourings of their edges,
// and induced-copy witnesses.
//
// Vertices are 1-based on both sides. Left vertices are plain indices
// 1..left_count. Right vertices are indices 1..right_count, each carrying a
// label: either an opaque integer or a sorted subset of positive integers (the
// latter for set-membership graphs B_{n,k}).

#include <rw/combinatorics.hpp>
#include <rw/error.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rw {

enum class Color : std::uint8_t
{
    red = 0,
    blue = 1
};

inline constexpr std::array<Color, 2> both_colors{Color::red, Color::blue};

constexpr auto to_char(Color c) noexcept -> char { return c == Color::red ? 'R' : 'B'; }

constexpr auto color_name(Color c) noexcept -> std::string_view { return c == Color::red ? "red" : "blue"; }

inline auto parse_color(std::string_view s) -> std::optional<Color>
{
    if (s == "R" || s == "r" || s == "red" || s == "RED")
        return Color::red;
    if (s == "B" || s == "b" || s == "blue" || s == "BLUE")
        return Color::blue;
    return std::nullopt;
}

enum class LabelKind
{
    opaque,
    subset
};

struct Edge
{
    int left;
    int right;

    auto operator<=>(const Edge &) const = default;
};

namespace detail {
    struct GraphAccess;

    inline auto bit_index(int one_based) noexcept -> std::size_t { return static_cast<std::size_t>(one_based - 1); }
}

class BipartiteGraph
{
  public:
    /// The empty graph.
    BipartiteGraph() = default;

    /// Right labels are the opaque integers 1..right_count.
    BipartiteGraph(int left_count, int right_count, std::span<const Edge> edges)
    {
        if (right_count < 0)
            throw ValidationError("bipartite graph: negative right count");
        std::vector<int> labels(static_cast<std::size_t>(right_count));
        std::iota(labels.begin(), labels.end(), 1);
        *this = with_opaque_labels(left_count, std::move(labels), edges);
    }

    static auto with_opaque_labels(int left_count, std::vector<int> labels, std::span<const Edge> edges) -> BipartiteGraph
    {
        BipartiteGraph g;
        g.init_shape(left_count, static_cast<int>(labels.size()));
        g.kind_ = LabelKind::opaque;
        g.label_stride_ = 1;
        g.label_elems_ = std::move(labels);
        g.check_labels_distinct();
        g.add_checked_edges(edges);
        return g;
    }

    static auto with_subset_labels(int left_count, std::span<const Subset> labels, std::span<const Edge> edges) -> BipartiteGraph
    {
        BipartiteGraph g;
        g.init_shape(left_count, static_cast<int>(labels.size()));
        g.kind_ = LabelKind::subset;
        for (const auto & l : labels)
            if (! is_sorted_subset_of_range(l, 1, std::numeric_limits<int>::max()))
                throw ValidationError("bipartite graph: subset label {" + join(l) + "} is not a sorted set of positive integers");
        g.store_subset_labels(labels);
        g.check_labels_distinct();
        g.detect_full_family();
        g.add_checked_edges(edges);
        return g;
    }

    auto left_count() const noexcept -> int { return left_count_; }
    auto right_count() const noexcept -> int { return right_count_; }
    auto edge_count() const noexcept -> std::size_t { return edge_count_; }
    auto label_kind() const noexcept -> LabelKind { return kind_; }

    auto has_left(int l) const noexcept -> bool { return l >= 1 && l <= left_count_; }
    auto has_right(int r) const noexcept -> bool { return r >= 1 && r <= right_count_; }

    /// Both endpoints must be in range.
    auto has_edge(int l, int r) const noexcept -> bool
    {
        auto bit = detail::bit_index(l);
        return (adj_[detail::bit_index(r) * words_ + bit / 64] >> (bit % 64)) & 1U;
    }

    auto right_label(int r) const noexcept -> std::span<const int>
    {
        if (label_stride_ != 0)
            return {label_elems_.data() + detail::bit_index(r) * label_stride_, label_stride_};
        auto b = label_offsets_[detail::bit_index(r)];
        auto e = label_offsets_[detail::bit_index(r) + 1];
        return {label_elems_.data() + b, e - b};
    }

    /// "{1,2,3}" for subset labels, "4" for opaque ones.
    auto right_label_string(int r) const -> std::string
    {
        if (kind_ == LabelKind::opaque)
            return std::to_string(right_label(r)[0]);
        return "{" + join(right_label(r)) + "}";
    }

    /// Right index carrying this label.
    auto find_right(std::span<const int> label) const -> std::optional<int>
    {
        if (ranker_) {
            if (! ranker_->valid(label))
                return std::nullopt;
            return static_cast<int>(ranker_->rank(label)) + 1;
        }
        for (int r = 1; r <= right_count_; ++r) {
            auto l = right_label(r);
            if (std::ranges::equal(l, label))
                return r;
        }
        return std::nullopt;
    }

    /// Adjacency bits of right vertex r: bit (l-1) is set iff (l, r) is an edge.
    auto adjacency_row(int r) const noexcept -> std::span<const std::uint64_t>
    {
        return {adj_.data() + detail::bit_index(r) * words_, words_};
    }

    /// Left neighbours of right vertex r, ascending.
    auto left_neighbors(int r) const -> std::vector<int>
    {
        std::vector<int> out;
        const auto * row = adj_.data() + detail::bit_index(r) * words_;
        for (std::size_t w = 0; w < words_; ++w)
            for (auto bits = row[w]; bits != 0; bits &= bits - 1)
                out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))) + 1);
        return out;
    }

    /// All edges ordered by (left, right).
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (int l = 1; l <= left_count_; ++l)
            for (int r = 1; r <= right_count_; ++r)
                if (has_edge(l, r))
                    out.push_back({l, r});
        return out;
    }

    auto is_complete() const noexcept -> bool
    {
        return edge_count_ == static_cast<std::size_t>(left_count_) * static_cast<std::size_t>(right_count_);
    }

    /// k when the right labels are exactly the k-subsets of [left_count] in
    /// lexicographic order (right index = rank + 1).
    auto full_family_arity() const noexcept -> std::optional<int>
    {
        if (! ranker_)
            return std::nullopt;
        return ranker_->k();
    }

    /// Whether this graph is exactly B_{left_count, k}: full family of
    /// k-subsets as labels, and edge (x, X) iff x is in X.
    auto is_set_graph(int k) const -> bool
    {
        if (full_family_arity() != k)
            return false;
        if (edge_count_ != static_cast<std::size_t>(k) * static_cast<std::size_t>(right_count_))
            return false;
        for (int r = 1; r <= right_count_; ++r)
            for (int x : right_label(r))
                if (! has_edge(x, r))
                    return false;
        return true;
    }

    friend auto operator==(const BipartiteGraph & a, const BipartiteGraph & b) -> bool
    {
        if (a.left_count_ != b.left_count_ || a.right_count_ != b.right_count_ || a.kind_ != b.kind_ || a.edge_count_ != b.edge_count_)
            return false;
        for (int r = 1; r <= a.right_count_; ++r)
            if (! std::ranges::equal(a.right_label(r), b.right_label(r)))
                return false;
        return a.adj_ == b.adj_;
    }

  private:
    friend struct detail::GraphAccess;

    auto init_shape(int left_count, int right_count) -> void
    {
        if (left_count < 0 || right_count < 0)
            throw ValidationError("bipartite graph: negative vertex count");
        left_count_ = left_count;
        right_count_ = right_count;
        words_ = (static_cast<std::size_t>(left_count) + 63) / 64;
        adj_.assign(words_ * static_cast<std::size_t>(right_count), 0);
    }

    auto store_subset_labels(std::span<const Subset> labels) -> void
    {
        std::size_t stride = labels.empty() ? 0 : labels.front().size();
        bool uniform = std::ranges::all_of(labels, [&](const Subset & l) { return l.size() == stride; }) && stride != 0;
        label_elems_.clear();
        label_offsets_.clear();
        if (uniform) {
            label_stride_ = stride;
        }
        else {
            label_stride_ = 0;
            label_offsets_.push_back(0);
        }
        for (const auto & l : labels) {
            label_elems_.insert(label_elems_.end(), l.begin(), l.end());
            if (! uniform)
                label_offsets_.push_back(label_elems_.size());
        }
    }

    auto check_labels_distinct() const -> void
    {
        std::vector<int> order(static_cast<std::size_t>(right_count_));
        std::iota(order.begin(), order.end(), 1);
        auto less = [&](int x, int y) { return std::ranges::lexicographical_compare(right_label(x), right_label(y)); };
        std::ranges::sort(order, less);
        for (std::size_t i = 1; i < order.size(); ++i)
            if (std::ranges::equal(right_label(order[i - 1]), right_label(order[i])))
                throw ValidationError("bipartite graph: right label " + right_label_string(order[i]) + " used twice");
    }

    auto detect_full_family() -> void
    {
        ranker_.reset();
        if (kind_ != LabelKind::subset || label_stride_ == 0 || right_count_ == 0)
            return;
        const int k = static_cast<int>(label_stride_);
        if (k > left_count_ || binomial(left_count_, k) != static_cast<std::uint64_t>(right_count_))
            return;
        auto ranker = std::make_shared<const SubsetRanker>(left_count_, k);
        for (int r = 1; r <= right_count_; ++r) {
            auto l = right_label(r);
            if (! ranker->valid(l) || ranker->rank(l) != static_cast<std::uint64_t>(r - 1))
                return;
        }
        ranker_ = std::move(ranker);
    }

    auto set_edge(int l, int r) noexcept -> bool
    {
        auto bit = detail::bit_index(l);
        auto & word = adj_[detail::bit_index(r) * words_ + bit / 64];
        auto mask = std::uint64_t{1} << (bit % 64);
        if (word & mask)
            return false;
        word |= mask;
        ++edge_count_;
        return true;
    }

    auto add_checked_edges(std::span<const Edge> edges) -> void
    {
        for (auto e : edges) {
            if (! has_left(e.left) || ! has_right(e.right))
                throw ValidationError("bipartite graph: edge (" + std::to_string(e.left) + ", " + std::to_string(e.right) + ") references a missing vertex");
            if (! set_edge(e.left, e.right))
                throw ValidationError("bipartite graph: duplicate edge (" + std::to_string(e.left) + ", " + std::to_string(e.right) + ")");
        }
    }

    int left_count_ = 0;
    int right_count_ = 0;
    std::size_t edge_count_ = 0;
    LabelKind kind_ = LabelKind::opaque;

    // Labels are stored flat: fixed stride when every label has the same
    // size, offsets otherwise.
    std::vector<int> label_elems_;
    std::size_t label_stride_ = 1;
    std::vector<std::size_t> label_offsets_;

    // One bit row of `words_` words per right vertex.
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;

    std::shared_ptr<const SubsetRanker> ranker_;
};

namespace detail {
    // Trusted construction for builders that produce valid graphs by
    // construction (B_{n,k}, induced subgraphs).
    struct GraphAccess
    {
        static auto shaped(int left_count, int right_count) -> BipartiteGraph
        {
            BipartiteGraph g;
            g.init_shape(left_count, right_count);
            return g;
        }

        static auto set_opaque_labels(BipartiteGraph & g, std::vector<int> labels) -> void
        {
            g.kind_ = LabelKind::opaque;
            g.label_stride_ = 1;
            g.label_offsets_.clear();
            g.label_elems_ = std::move(labels);
        }

        static auto set_uniform_subset_labels(BipartiteGraph & g, std::vector<int> flat, std::size_t stride) -> void
        {
            g.kind_ = LabelKind::subset;
            g.label_stride_ = stride;
            g.label_offsets_.clear();
            g.label_elems_ = std::move(flat);
            if (stride == 0) {
                g.label_offsets_.assign(static_cast<std::size_t>(g.right_count_) + 1, 0);
            }
        }

        static auto set_subset_labels(BipartiteGraph & g, std::span<const Subset> labels) -> void
        {
            g.kind_ = LabelKind::subset;
            g.store_subset_labels(labels);
            if (labels.empty())
                g.label_stride_ = 1;
        }

        static auto mark_full_family(BipartiteGraph & g, int k) -> void
        {
            g.ranker_ = std::make_shared<const SubsetRanker>(g.left_count_, k);
        }

        static auto add_edge(BipartiteGraph & g, int l, int r) noexcept -> void { g.set_edge(l, r); }
    };
}

class EdgeColoring
{
  public:
    EdgeColoring() = default;

    /// Every edge of `g` gets `fill`.
    EdgeColoring(const BipartiteGraph & g, Color fill) : EdgeColoring(g, [fill](int, int) { return fill; }) {}

    /// Colour of edge (l, r) is f(l, r).
    template <typename F>
        requires std::invocable<F &, int, int>
    EdgeColoring(const BipartiteGraph & g, F && f) :
        left_count_(g.left_count()),
        right_count_(g.right_count()),
        words_((static_cast<std::size_t>(g.left_count()) + 63) / 64),
        blue_(words_ * static_cast<std::size_t>(g.right_count()), 0)
    {
        for (int r = 1; r <= right_count_; ++r)
            for (int l : g.left_neighbors(r))
                if (f(l, r) == Color::blue)
                    set_blue(l, r);
    }

    struct Assignment
    {
        int left;
        int right;
        Color color;
    };

    /// Builds a colouring from explicit per-edge colours. Edges not listed
    /// take `fill` when given; otherwise every edge must be listed exactly once.
    static auto from_assignments(const BipartiteGraph & g, std::span<const Assignment> assignments, std::optional<Color> fill = std::nullopt)
        -> EdgeColoring
    {
        EdgeColoring c(g, fill.value_or(Color::red));
        std::vector<std::uint64_t> seen(c.blue_.size(), 0);
        std::size_t listed = 0;
        for (const auto & a : assignments) {
            if (! g.has_left(a.left) || ! g.has_right(a.right) || ! g.has_edge(a.left, a.right))
                throw ValidationError("colouring: (" + std::to_string(a.left) + ", " + std::to_string(a.right) + ") is not an edge");
            auto [w, mask] = c.locate(a.left, a.right);
            if (seen[w] & mask)
                throw ValidationError("colouring: edge (" + std::to_string(a.left) + ", " + std::to_string(a.right) + ") coloured twice");
            seen[w] |= mask;
            ++listed;
            if (a.color == Color::blue)
                c.blue_[w] |= mask;
            else
                c.blue_[w] &= ~mask;
        }
        if (! fill && listed != g.edge_count())
            throw ValidationError("colouring: " + std::to_string(g.edge_count() - listed) + " edge(s) left uncoloured");
        return c;
    }

    auto left_count() const noexcept -> int { return left_count_; }
    auto right_count() const noexcept -> int { return right_count_; }

    /// Colour of edge (l, r); (l, r) must be an edge of the coloured graph.
    auto color(int l, int r) const noexcept -> Color
    {
        auto [w, mask] = locate(l, r);
        return (blue_[w] & mask) ? Color::blue : Color::red;
    }

    /// Whether this colouring belongs to a graph of g's shape and colours
    /// only its edges.
    auto fits(const BipartiteGraph & g) const -> bool
    {
        if (g.left_count() != left_count_ || g.right_count() != right_count_)
            return false;
        for (int r = 1; r <= right_count_; ++r) {
            auto row = g.adjacency_row(r);
            for (std::size_t w = 0; w < words_; ++w)
                if (blue_[detail::bit_index(r) * words_ + w] & ~row[w])
                    return false;
        }
        return true;
    }

    friend auto operator==(const EdgeColoring &, const EdgeColoring &) -> bool = default;

  private:
    auto locate(int l, int r) const noexcept -> std::pair<std::size_t, std::uint64_t>
    {
        auto bit = detail::bit_index(l);
        return {detail::bit_index(r) * words_ + bit / 64, std::uint64_t{1} << (bit % 64)};
    }

    auto set_blue(int l, int r) noexcept -> void
    {
        auto [w, mask] = locate(l, r);
        blue_[w] |= mask;
    }

    int left_count_ = 0;
    int right_count_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> blue_;
};

inline auto require_fits(const BipartiteGraph & g, const EdgeColoring & c) -> void
{
    if (! c.fits(g))
        throw ValidationError("colouring does not belong to this graph (shape " + std::to_string(c.left_count()) + "x" +
            std::to_string(c.right_count()) + " vs " + std::to_string(g.left_count()) + "x" + std::to_string(g.right_count()) + ")");
}

/// A claimed copy of `pattern` inside some host: pattern left i maps to
/// host_left[i-1], pattern right j to host right index host_right[j-1].
struct InducedCopyWitness
{
    BipartiteGraph pattern;
    std::vector<int> host_left;
    std::vector<int> host_right;
    std::optional<Color> claimed_color;

    friend auto operator==(const InducedCopyWitness &, const InducedCopyWitness &) -> bool = default;
};

}
