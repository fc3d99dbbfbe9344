// rw: command-line front end for the induced bipartite Ramsey toolkit.
//
// Exit codes: 0 witness found / verified, 1 definitively absent or invalid,
// 2 budget exceeded, 3 input error.

#include <rw/rw.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace {

constexpr int exit_found = 0;
constexpr int exit_absent = 1;
constexpr int exit_budget = 2;
constexpr int exit_input = 3;

auto budget_from_env() -> std::uint64_t
{
    const char * env = std::getenv("RW_BUDGET");
    if (! env || ! *env)
        return rw::default_budget;
    char * end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw rw::ValidationError("RW_BUDGET must be a positive integer");
    return v;
}

auto open_input(const std::string & path) -> std::ifstream
{
    std::ifstream in(path);
    if (! in)
        throw rw::ValidationError("cannot open " + path);
    return in;
}

auto parse_host_spec(const std::string & text) -> rw::HostSpec
{
    std::istringstream ss(text);
    std::string kind;
    rw::HostSpec spec;
    if (! (ss >> kind >> spec.n >> spec.k) || (kind != "complete" && kind != "setgraph"))
        throw rw::ValidationError("--host expects 'complete N K' or 'setgraph N K'");
    spec.kind = kind == "complete" ? rw::HostSpec::Kind::complete : rw::HostSpec::Kind::setgraph;
    return spec;
}

struct HostOptions
{
    std::string graph_file;
    std::string host_spec;

    auto add_to(CLI::App * cmd) -> void
    {
        cmd->add_option("--graph", graph_file, "Host graph file");
        cmd->add_option("--host", host_spec, "Host by shape: 'complete N K' or 'setgraph N K'");
    }

    /// Host from --graph, --host, or the colouring file's host line.
    auto resolve(const std::optional<rw::HostSpec> & from_coloring = std::nullopt) const -> rw::BipartiteGraph
    {
        if (! graph_file.empty()) {
            auto in = open_input(graph_file);
            return rw::read_graph(in);
        }
        if (! host_spec.empty())
            return parse_host_spec(host_spec).build();
        if (from_coloring)
            return from_coloring->build();
        throw rw::ValidationError("no host: give --graph, --host, or a 'host' line in the colouring file");
    }
};

struct ColoredHost
{
    rw::BipartiteGraph graph;
    rw::EdgeColoring coloring;
};

auto load_colored_host(const HostOptions & host, const std::string & coloring_file) -> ColoredHost
{
    auto in = open_input(coloring_file);
    auto file = rw::read_coloring(in);
    auto g = host.resolve(file.host);
    auto c = file.apply(g);
    return {std::move(g), std::move(c)};
}

auto load_graph(const std::string & path) -> rw::BipartiteGraph
{
    auto in = open_input(path);
    return rw::read_graph(in);
}

auto write_dot_file(const std::string & path, const rw::BipartiteGraph & g, const rw::EdgeColoring * c, const rw::InducedCopyWitness * w)
    -> void
{
    if (path.empty())
        return;
    std::ofstream out(path);
    if (! out)
        throw rw::ValidationError("cannot write " + path);
    out << rw::export_dot(g, c, w);
}

auto report_witness(const rw::BipartiteGraph & host, const rw::EdgeColoring & coloring, const rw::InducedCopyWitness & w,
    const std::string & dot_path) -> int
{
    rw::write_witness(std::cout, host, w);
    write_dot_file(dot_path, host, &coloring, &w);
    return exit_found;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"Constructive bipartite and induced bipartite Ramsey witnesses"};
    app.require_subcommand(1);

    std::function<int()> action;

    // build
    auto * build = app.add_subcommand("build", "Print K_{n,k} or B_{n,k}, or a colouring of it");
    std::string build_kind;
    int build_n = 0;
    int build_k = 0;
    std::string build_coloring;
    std::uint64_t build_seed = 1;
    build->add_option("kind", build_kind, "complete | setgraph")->required()->check(CLI::IsMember({"complete", "setgraph"}));
    build->add_option("--n", build_n, "Left vertices")->required();
    build->add_option("--k", build_k, "Right side size (complete) or subset size (setgraph)")->required();
    build->add_option("--coloring", build_coloring, "Emit a colouring instead: red | blue | random")
        ->check(CLI::IsMember({"red", "blue", "random"}));
    build->add_option("--seed", build_seed, "Seed for --coloring random");
    build->callback([&] {
        action = [&] {
            rw::HostSpec spec{build_kind == "complete" ? rw::HostSpec::Kind::complete : rw::HostSpec::Kind::setgraph, build_n, build_k};
            auto g = spec.build();
            if (build_coloring.empty()) {
                rw::write_graph(std::cout, g);
                return exit_found;
            }
            if (build_coloring == "random") {
                std::mt19937_64 rng(build_seed);
                rw::EdgeColoring c(g, [&](int, int) { return (rng() & 1) ? rw::Color::blue : rw::Color::red; });
                rw::write_coloring(std::cout, g, c, spec);
            }
            else {
                std::cout << "host " << spec.to_string() << "\nfill " << (build_coloring == "red" ? 'R' : 'B') << '\n';
            }
            return exit_found;
        };
    });

    // embed
    auto * embed = app.add_subcommand("embed", "Embed a pattern as an induced subgraph of B_{2c+d, c+1}");
    std::string embed_pattern;
    embed->add_option("pattern", embed_pattern, "Pattern graph file")->required();
    embed->callback([&] {
        action = [&] {
            auto pattern = load_graph(embed_pattern);
            auto e = rw::embed_into_set_bipartite(pattern);
            std::cout << "# host setgraph " << e.a << ' ' << e.b << '\n';
            auto host = rw::set_bipartite(e.a, e.b);
            rw::write_witness(std::cout, host, e.witness);
            return rw::verify_witness(host, e.witness) ? exit_found : exit_absent;
        };
    });

    // extract-complete
    auto * xc = app.add_subcommand("extract-complete", "Monochromatic K_{a,b} from a 2-coloured K_{n,k}");
    int xc_a = 0;
    int xc_b = 0;
    std::string xc_coloring;
    std::string xc_dot;
    HostOptions xc_host;
    xc->add_option("--a", xc_a)->required();
    xc->add_option("--b", xc_b)->required();
    xc->add_option("coloring", xc_coloring, "Edge colouring file")->required();
    xc->add_option("--dot", xc_dot, "Also write a DOT rendering here");
    xc_host.add_to(xc);
    xc->callback([&] {
        action = [&] {
            auto [g, c] = load_colored_host(xc_host, xc_coloring);
            auto w = rw::extract_monochromatic_complete(g, c, xc_a, xc_b);
            return report_witness(g, c, w, xc_dot);
        };
    });

    // derive-coloring
    auto * dc = app.add_subcommand("derive-coloring", "Derived colouring of the (2b-1)-subsets from a coloured B_{n,2b-1}");
    int dc_b = 0;
    std::string dc_coloring;
    HostOptions dc_host;
    dc->add_option("--b", dc_b)->required();
    dc->add_option("coloring", dc_coloring, "Edge colouring file")->required();
    dc_host.add_to(dc);
    dc->callback([&] {
        action = [&] {
            auto [g, c] = load_colored_host(dc_host, dc_coloring);
            rw::write_subset_coloring(std::cout, rw::derive_coloring(g, c, dc_b));
            return exit_found;
        };
    });

    // find-homogeneous
    auto * fh = app.add_subcommand("find-homogeneous", "Lexicographically first homogeneous s-set of a subset colouring");
    int fh_s = 0;
    int fh_b = 0;
    std::string fh_file;
    fh->add_option("--s", fh_s)->required();
    fh->add_option("--b", fh_b, "Annotate the value as a derived colour for this b");
    fh->add_option("subset_coloring", fh_file, "Subset colouring file")->required();
    fh->callback([&] {
        action = [&] {
            auto in = open_input(fh_file);
            auto coloring = rw::read_subset_coloring(in);
            auto h = rw::find_homogeneous_set(coloring, fh_s, budget_from_env());
            if (! h) {
                std::cout << "# no homogeneous " << fh_s << "-set\n";
                return exit_absent;
            }
            rw::HomogeneousRecord rec{h->vertices, h->value, std::nullopt};
            if (fh_b > 0 && h->value)
                rec.derived = rw::decode(*h->value, fh_b);
            rw::write_homogeneous(std::cout, rec);
            return exit_found;
        };
    });

    // extract-induced
    auto * xi = app.add_subcommand("extract-induced", "Induced monochromatic B_{a,b} from a homogeneous set");
    int xi_a = 0;
    int xi_b = 0;
    std::string xi_h;
    std::string xi_coloring;
    std::string xi_dot;
    HostOptions xi_host;
    xi->add_option("--a", xi_a)->required();
    xi->add_option("--b", xi_b)->required();
    xi->add_option("--homogeneous", xi_h, "Homogeneous set file")->required();
    xi->add_option("coloring", xi_coloring, "Edge colouring file")->required();
    xi->add_option("--dot", xi_dot, "Also write a DOT rendering here");
    xi_host.add_to(xi);
    xi->callback([&] {
        action = [&] {
            auto [g, c] = load_colored_host(xi_host, xi_coloring);
            auto in = open_input(xi_h);
            auto rec = rw::read_homogeneous(in);
            auto derived = rec.derived;
            if (! derived && rec.value)
                derived = rw::decode(*rec.value, xi_b);
            if (! derived) {
                // the colour of the first (2b-1)-subset of H
                auto h = rec.vertices;
                std::ranges::sort(h);
                if (static_cast<int>(h.size()) < 2 * xi_b - 1)
                    throw rw::ParameterError("homogeneous set smaller than 2b-1");
                h.resize(static_cast<std::size_t>(2 * xi_b - 1));
                auto r = g.find_right(h);
                if (! r)
                    throw rw::ValidationError("host has no right vertex {" + rw::join(h) + "}");
                derived = rw::derived_color_of(g, c, *r, xi_b);
            }
            auto w = rw::extract_induced(rec.vertices, *derived, xi_a, xi_b, g, c);
            return report_witness(g, c, w, xi_dot);
        };
    });

    // find-induced
    auto * fi = app.add_subcommand("find-induced", "Induced monochromatic copy of a pattern in a coloured B_{n,2c+1}");
    std::string fi_pattern;
    std::string fi_coloring;
    std::string fi_dot;
    bool fi_oracle = false;
    HostOptions fi_host;
    fi->add_option("pattern", fi_pattern, "Pattern graph file")->required();
    fi->add_option("coloring", fi_coloring, "Edge colouring file")->required();
    fi->add_option("--dot", fi_dot, "Also write a DOT rendering here");
    fi->add_flag("--brute-force", fi_oracle, "Use the exhaustive search instead of the construction (any host)");
    fi_host.add_to(fi);
    fi->callback([&] {
        action = [&] {
            auto pattern = load_graph(fi_pattern);
            auto [g, c] = load_colored_host(fi_host, fi_coloring);
            auto w = fi_oracle ? rw::find_induced_monochromatic(g, c, pattern, budget_from_env())
                               : rw::find_induced_mono_pattern(pattern, g, c, budget_from_env());
            if (! w) {
                std::cout << "# no induced monochromatic copy found\n";
                return exit_absent;
            }
            return report_witness(g, c, *w, fi_dot);
        };
    });

    // verify
    auto * vf = app.add_subcommand("verify", "Check a witness against a host (and colouring)");
    std::string vf_witness;
    std::string vf_coloring;
    HostOptions vf_host;
    vf->add_option("witness", vf_witness, "Witness file")->required();
    vf->add_option("--coloring", vf_coloring, "Edge colouring file; checks the claimed colour");
    vf_host.add_to(vf);
    vf->callback([&] {
        action = [&] {
            auto in = open_input(vf_witness);
            auto rec = rw::read_witness(in);
            bool ok = false;
            if (vf_coloring.empty()) {
                auto g = vf_host.resolve();
                ok = rw::verify_witness(g, rec.resolve(g));
            }
            else {
                auto [g, c] = load_colored_host(vf_host, vf_coloring);
                ok = rw::verify_witness(g, c, rec.resolve(g));
            }
            std::cout << (ok ? "valid" : "invalid") << '\n';
            return ok ? exit_found : exit_absent;
        };
    });

    // ramsey-number
    auto * rn = app.add_subcommand("ramsey-number", "Exact R_{arity,palette}(size) by exhaustive enumeration");
    int rn_arity = 0;
    std::uint32_t rn_palette = 0;
    int rn_size = 0;
    int rn_max_n = 0;
    bool rn_show = false;
    rn->add_option("--arity", rn_arity)->required();
    rn->add_option("--palette", rn_palette)->required();
    rn->add_option("--size", rn_size)->required();
    rn->add_option("--max-n", rn_max_n)->required();
    rn->add_flag("--counterexample", rn_show, "Print the largest colouring found without a homogeneous set");
    rn->callback([&] {
        action = [&] {
            auto r = rw::ramsey_number_exact(rn_arity, rn_palette, rn_size, rn_max_n, budget_from_env());
            if (r.n)
                std::cout << "R_{" << rn_arity << ',' << rn_palette << "}(" << rn_size << ") = " << *r.n << '\n';
            else
                std::cout << "R_{" << rn_arity << ',' << rn_palette << "}(" << rn_size << ") > " << rn_max_n << '\n';
            if (rn_show && r.counterexample)
                rw::write_subset_coloring(std::cout, *r.counterexample);
            return r.n ? exit_found : exit_absent;
        };
    });

    // params
    auto * pr = app.add_subcommand("params", "Constants of the construction for a pattern");
    std::string pr_pattern;
    pr->add_option("pattern", pr_pattern, "Pattern graph file")->required();
    pr->callback([&] {
        action = [&] {
            auto p = rw::required_parameters(load_graph(pr_pattern));
            std::cout << "c " << p.c << "\nd " << p.d << "\na " << p.a << "\nb " << p.b << "\nk " << p.k << "\ns " << p.s
                      << "\npalette " << p.palette << "\nn " << p.n_formula << '\n';
            return exit_found;
        };
    });

    // dot
    auto * dt = app.add_subcommand("dot", "Graphviz rendering of a host, colouring and witness");
    std::string dt_coloring;
    std::string dt_witness;
    HostOptions dt_host;
    dt->add_option("--coloring", dt_coloring, "Edge colouring file");
    dt->add_option("--witness", dt_witness, "Witness file to highlight");
    dt_host.add_to(dt);
    dt->callback([&] {
        action = [&] {
            std::optional<ColoredHost> colored;
            std::optional<rw::BipartiteGraph> plain;
            if (! dt_coloring.empty())
                colored = load_colored_host(dt_host, dt_coloring);
            else
                plain = dt_host.resolve();
            const auto & g = colored ? colored->graph : *plain;
            std::optional<rw::InducedCopyWitness> w;
            if (! dt_witness.empty()) {
                auto in = open_input(dt_witness);
                w = rw::read_witness(in).resolve(g);
            }
            std::cout << rw::export_dot(g, colored ? &colored->coloring : nullptr, w ? &*w : nullptr);
            return exit_found;
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    try {
        return action();
    }
    catch (const rw::BudgetExceeded & e) {
        std::cerr << "rw: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const rw::Error & e) {
        std::cerr << "rw: " << e.what() << '\n';
        return exit_input;
    }
}
