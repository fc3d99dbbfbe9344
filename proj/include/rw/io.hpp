#pragma once

// Line-oriented text formats.
//
//   graph:            bipartite <left_count> <right_count>
//                     rlabel <right> <comma-separated ints>     (subset labels; all or none)
//                     olabel <right> <int>                      (opaque labels other than 1..R)
//                     e <left> <right>
//   edge colouring:   host complete|setgraph <n> <k>            (optional)
//                     fill R|B                                  (optional; colours unlisted edges)
//                     c <left> <right> R|B
//   subset colouring: subsetcoloring <n> <arity> <palette>
//                     sc <comma-separated subset> <value>
//   witness:          a pattern graph, then
//                     witness
//                     wleft <pattern_left> <host_left>
//                     wright <pattern_right> <comma-separated host label>
//                     wcolor R|B                                (optional)
//   homogeneous set:  homogeneous <comma-separated set>
//                     value <v>                                 (optional)
//                     derived R|B <comma-separated positions>   (optional)
//
// Blank lines and lines starting with '#' are ignored.

#include <rw/combinatorics.hpp>
#include <rw/constructions.hpp>
#include <rw/error.hpp>
#include <rw/graph.hpp>
#include <rw/hyper_ramsey.hpp>

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace rw {

namespace detail {
    class LineReader
    {
      public:
        LineReader(std::istream & in, std::string what) : in_(in), what_(std::move(what)) {}

        /// Next non-blank, non-comment line split on whitespace; empty at EOF.
        auto peek() -> const std::vector<std::string> &
        {
            while (! have_ && std::getline(in_, line_)) {
                ++number_;
                tokens_.clear();
                std::istringstream ss(line_);
                for (std::string t; ss >> t;)
                    tokens_.push_back(t);
                if (! tokens_.empty() && tokens_.front()[0] != '#')
                    have_ = true;
            }
            if (! have_)
                tokens_.clear();
            return tokens_;
        }

        auto next() -> std::vector<std::string>
        {
            auto t = peek();
            have_ = false;
            return t;
        }

        [[noreturn]] auto fail(const std::string & msg) const -> void
        {
            throw ValidationError(what_ + " line " + std::to_string(number_) + ": " + msg);
        }

        auto expect_arity(const std::vector<std::string> & t, std::size_t n) const -> void
        {
            if (t.size() != n)
                fail("expected " + std::to_string(n - 1) + " field(s) after '" + t[0] + "'");
        }

        auto integer(std::string_view s) const -> long long
        {
            long long v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size())
                fail("'" + std::string(s) + "' is not an integer");
            return v;
        }

        auto int32(std::string_view s) const -> int
        {
            auto v = integer(s);
            if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
                fail("'" + std::string(s) + "' is out of range");
            return static_cast<int>(v);
        }

        auto subset(std::string_view s) const -> Subset
        {
            Subset out;
            std::size_t start = 0;
            while (start <= s.size()) {
                auto comma = s.find(',', start);
                auto end = comma == std::string_view::npos ? s.size() : comma;
                out.push_back(int32(s.substr(start, end - start)));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
            return out;
        }

        auto color(std::string_view s) const -> Color
        {
            auto c = parse_color(s);
            if (! c)
                fail("'" + std::string(s) + "' is not a colour (R or B)");
            return *c;
        }

      private:
        std::istream & in_;
        std::string what_;
        std::string line_;
        std::vector<std::string> tokens_;
        bool have_ = false;
        int number_ = 0;
    };

    inline auto read_graph_block(LineReader & in) -> BipartiteGraph
    {
        auto head = in.next();
        if (head.empty() || head[0] != "bipartite")
            in.fail("expected 'bipartite <left_count> <right_count>'");
        in.expect_arity(head, 3);
        const int lc = in.int32(head[1]);
        const int rc = in.int32(head[2]);
        if (lc < 0 || rc < 0)
            in.fail("negative vertex count");

        std::map<int, Subset> subset_labels;
        std::map<int, int> opaque_labels;
        std::vector<Edge> edges;
        for (;;) {
            const auto & t = in.peek();
            if (t.empty() || (t[0] != "rlabel" && t[0] != "olabel" && t[0] != "e"))
                break;
            auto line = in.next();
            in.expect_arity(line, 3);
            if (line[0] == "e") {
                Edge e{in.int32(line[1]), in.int32(line[2])};
                if (e.left < 1 || e.left > lc || e.right < 1 || e.right > rc)
                    in.fail("edge " + line[1] + " " + line[2] + " leaves the vertex range");
                edges.push_back(e);
                continue;
            }
            const int r = in.int32(line[1]);
            if (r < 1 || r > rc)
                in.fail("label for missing right vertex " + line[1]);
            bool fresh = line[0] == "rlabel" ? subset_labels.emplace(r, in.subset(line[2])).second
                                             : opaque_labels.emplace(r, in.int32(line[2])).second;
            if (! fresh)
                in.fail("right vertex " + line[1] + " labelled twice");
        }
        if (! subset_labels.empty() && ! opaque_labels.empty())
            in.fail("graph mixes rlabel and olabel");
        if (! subset_labels.empty()) {
            if (static_cast<int>(subset_labels.size()) != rc)
                in.fail("rlabel given for " + std::to_string(subset_labels.size()) + " of " + std::to_string(rc) + " right vertices");
            std::vector<Subset> labels;
            for (auto & [r, l] : subset_labels)
                labels.push_back(std::move(l));
            return BipartiteGraph::with_subset_labels(lc, labels, edges);
        }
        std::vector<int> labels(static_cast<std::size_t>(rc));
        for (int r = 1; r <= rc; ++r) {
            auto it = opaque_labels.find(r);
            labels[static_cast<std::size_t>(r - 1)] = it == opaque_labels.end() ? r : it->second;
        }
        return BipartiteGraph::with_opaque_labels(lc, std::move(labels), edges);
    }

    inline auto expect_end(LineReader & in) -> void
    {
        if (! in.peek().empty())
            in.fail("unexpected '" + in.peek()[0] + "'");
    }
}

inline auto read_graph(std::istream & in) -> BipartiteGraph
{
    detail::LineReader reader(in, "graph");
    auto g = detail::read_graph_block(reader);
    detail::expect_end(reader);
    return g;
}

inline auto write_graph(std::ostream & out, const BipartiteGraph & g) -> void
{
    out << "bipartite " << g.left_count() << ' ' << g.right_count() << '\n';
    for (int r = 1; r <= g.right_count(); ++r) {
        if (g.label_kind() == LabelKind::subset)
            out << "rlabel " << r << ' ' << join(g.right_label(r)) << '\n';
        else if (g.right_label(r)[0] != r)
            out << "olabel " << r << ' ' << g.right_label(r)[0] << '\n';
    }
    for (auto e : g.edges())
        out << "e " << e.left << ' ' << e.right << '\n';
}

/// A host named by shape instead of listed edge by edge.
struct HostSpec
{
    enum class Kind
    {
        complete,
        setgraph
    };

    Kind kind = Kind::complete;
    int n = 0;
    int k = 0;

    auto build() const -> BipartiteGraph { return kind == Kind::complete ? complete_bipartite(n, k) : set_bipartite(n, k); }

    auto to_string() const -> std::string
    {
        return std::string(kind == Kind::complete ? "complete " : "setgraph ") + std::to_string(n) + " " + std::to_string(k);
    }
};

struct ColoringFile
{
    std::optional<HostSpec> host;
    std::optional<Color> fill;
    std::vector<EdgeColoring::Assignment> entries;

    /// Checks totality against `g` (unless a fill colour is given).
    auto apply(const BipartiteGraph & g) const -> EdgeColoring { return EdgeColoring::from_assignments(g, entries, fill); }
};

inline auto read_coloring(std::istream & in) -> ColoringFile
{
    detail::LineReader reader(in, "colouring");
    ColoringFile file;
    for (auto t = reader.next(); ! t.empty(); t = reader.next()) {
        if (t[0] == "host") {
            reader.expect_arity(t, 4);
            if (file.host)
                reader.fail("host given twice");
            HostSpec h;
            if (t[1] == "complete")
                h.kind = HostSpec::Kind::complete;
            else if (t[1] == "setgraph")
                h.kind = HostSpec::Kind::setgraph;
            else
                reader.fail("host kind must be 'complete' or 'setgraph'");
            h.n = reader.int32(t[2]);
            h.k = reader.int32(t[3]);
            file.host = h;
        }
        else if (t[0] == "fill") {
            reader.expect_arity(t, 2);
            file.fill = reader.color(t[1]);
        }
        else if (t[0] == "c") {
            reader.expect_arity(t, 4);
            file.entries.push_back({reader.int32(t[1]), reader.int32(t[2]), reader.color(t[3])});
        }
        else {
            reader.fail("unknown record '" + t[0] + "'");
        }
    }
    return file;
}

inline auto write_coloring(std::ostream & out, const BipartiteGraph & g, const EdgeColoring & coloring,
    const std::optional<HostSpec> & host = std::nullopt) -> void
{
    require_fits(g, coloring);
    if (host)
        out << "host " << host->to_string() << '\n';
    for (auto e : g.edges())
        out << "c " << e.left << ' ' << e.right << ' ' << to_char(coloring.color(e.left, e.right)) << '\n';
}

inline auto read_subset_coloring(std::istream & in) -> SubsetColoring
{
    detail::LineReader reader(in, "subset colouring");
    auto head = reader.next();
    if (head.empty() || head[0] != "subsetcoloring")
        reader.fail("expected 'subsetcoloring <n> <arity> <palette>'");
    reader.expect_arity(head, 4);
    const int n = reader.int32(head[1]);
    const int arity = reader.int32(head[2]);
    const auto palette = reader.integer(head[3]);
    if (n < 0 || arity < 1 || arity > n || palette < 1 || palette > 0xffffffffLL)
        reader.fail("need 1 <= arity <= n and palette >= 1");
    SubsetRanker ranker(n, arity);
    if (ranker.count() > 100'000'000)
        reader.fail("too many subsets");
    std::vector<std::uint32_t> values(ranker.count(), 0);
    for (auto t = reader.next(); ! t.empty(); t = reader.next()) {
        if (t[0] != "sc")
            reader.fail("unknown record '" + t[0] + "'");
        reader.expect_arity(t, 3);
        auto x = reader.subset(t[1]);
        if (! ranker.valid(x))
            reader.fail("{" + t[1] + "} is not a sorted " + std::to_string(arity) + "-subset of [" + std::to_string(n) + "]");
        auto v = reader.integer(t[2]);
        if (v < 1 || v > palette)
            reader.fail("value " + t[2] + " outside palette");
        auto & slot = values[ranker.rank(x)];
        if (slot != 0)
            reader.fail("{" + t[1] + "} coloured twice");
        slot = static_cast<std::uint32_t>(v);
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == 0)
            reader.fail("subset {" + join(ranker.unrank(i)) + "} has no colour");
    return {n, arity, static_cast<std::uint32_t>(palette), std::move(values)};
}

inline auto write_subset_coloring(std::ostream & out, const SubsetColoring & c) -> void
{
    out << "subsetcoloring " << c.n() << ' ' << c.arity() << ' ' << c.palette() << '\n';
    if (c.arity() > c.n())
        return;
    Subset x = first_combination(c.arity());
    std::size_t i = 0;
    do
        out << "sc " << join(x) << ' ' << c.value_at_rank(i++) << '\n';
    while (next_combination(x, c.n()));
}

/// A witness as written on disk: host rights are named by label.
struct WitnessRecord
{
    BipartiteGraph pattern;
    std::vector<int> host_left;
    std::vector<Subset> host_right_labels;
    std::optional<Color> claimed_color;

    auto resolve(const BipartiteGraph & host) const -> InducedCopyWitness
    {
        InducedCopyWitness w{pattern, host_left, {}, claimed_color};
        for (const auto & label : host_right_labels) {
            auto r = host.find_right(label);
            if (! r)
                throw ValidationError("witness: host has no right vertex labelled " + join(label));
            w.host_right.push_back(*r);
        }
        return w;
    }
};

inline auto read_witness(std::istream & in) -> WitnessRecord
{
    detail::LineReader reader(in, "witness");
    WitnessRecord rec;
    rec.pattern = detail::read_graph_block(reader);
    auto head = reader.next();
    if (head.empty() || head[0] != "witness")
        reader.fail("expected 'witness'");
    std::map<int, int> lefts;
    std::map<int, Subset> rights;
    for (auto t = reader.next(); ! t.empty(); t = reader.next()) {
        if (t[0] == "wcolor") {
            reader.expect_arity(t, 2);
            rec.claimed_color = reader.color(t[1]);
            continue;
        }
        reader.expect_arity(t, 3);
        const int p = reader.int32(t[1]);
        bool fresh = true;
        if (t[0] == "wleft")
            fresh = lefts.emplace(p, reader.int32(t[2])).second;
        else if (t[0] == "wright")
            fresh = rights.emplace(p, reader.subset(t[2])).second;
        else
            reader.fail("unknown record '" + t[0] + "'");
        if (! fresh)
            reader.fail("pattern vertex " + t[1] + " mapped twice");
    }
    for (int i = 1; i <= rec.pattern.left_count(); ++i) {
        auto it = lefts.find(i);
        if (it == lefts.end())
            throw ValidationError("witness: pattern left " + std::to_string(i) + " has no image");
        rec.host_left.push_back(it->second);
    }
    for (int j = 1; j <= rec.pattern.right_count(); ++j) {
        auto it = rights.find(j);
        if (it == rights.end())
            throw ValidationError("witness: pattern right " + std::to_string(j) + " has no image");
        rec.host_right_labels.push_back(it->second);
    }
    if (lefts.size() != rec.host_left.size() || rights.size() != rec.host_right_labels.size())
        throw ValidationError("witness: image given for a vertex the pattern does not have");
    return rec;
}

inline auto write_witness(std::ostream & out, const BipartiteGraph & host, const InducedCopyWitness & w) -> void
{
    write_graph(out, w.pattern);
    out << "witness\n";
    for (std::size_t i = 0; i < w.host_left.size(); ++i)
        out << "wleft " << i + 1 << ' ' << w.host_left[i] << '\n';
    for (std::size_t j = 0; j < w.host_right.size(); ++j)
        out << "wright " << j + 1 << ' ' << join(host.right_label(w.host_right[j])) << '\n';
    if (w.claimed_color)
        out << "wcolor " << to_char(*w.claimed_color) << '\n';
}

struct HomogeneousRecord
{
    Subset vertices;
    std::optional<std::uint32_t> value;
    std::optional<DerivedColor> derived;
};

inline auto read_homogeneous(std::istream & in) -> HomogeneousRecord
{
    detail::LineReader reader(in, "homogeneous set");
    HomogeneousRecord rec;
    bool have_set = false;
    for (auto t = reader.next(); ! t.empty(); t = reader.next()) {
        if (t[0] == "homogeneous") {
            reader.expect_arity(t, 2);
            rec.vertices = reader.subset(t[1]);
            have_set = true;
        }
        else if (t[0] == "value") {
            reader.expect_arity(t, 2);
            auto v = reader.integer(t[1]);
            if (v < 1 || v > 0xffffffffLL)
                reader.fail("value out of range");
            rec.value = static_cast<std::uint32_t>(v);
        }
        else if (t[0] == "derived") {
            reader.expect_arity(t, 3);
            rec.derived = DerivedColor{reader.color(t[1]), reader.subset(t[2])};
        }
        else {
            reader.fail("unknown record '" + t[0] + "'");
        }
    }
    if (! have_set)
        throw ValidationError("homogeneous set: missing 'homogeneous' line");
    return rec;
}

inline auto write_homogeneous(std::ostream & out, const HomogeneousRecord & rec) -> void
{
    out << "homogeneous " << join(rec.vertices) << '\n';
    if (rec.value)
        out << "value " << *rec.value << '\n';
    if (rec.derived)
        out << "derived " << to_char(rec.derived->color) << ' ' << join(rec.derived->positions) << '\n';
}

}
