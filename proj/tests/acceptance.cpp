// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. `--slow` adds the large constant-host pipeline run to criterion 7.

#include <rw/rw.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace rw;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string & what)
    {
        if (! cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void run(int id, const char * name, double limit_seconds, const std::function<void(Outcome &)> & body)
{
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception & e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream limit;
    limit << "limit " << limit_seconds << " s";
    out.require(secs < limit_seconds, "took longer than " + limit.str());
    if (! out.ok)
        ++failures;
    std::printf("[%s] %d %s (%.2f s, %s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, limit.str().c_str(), out.ok ? "" : ": ",
        out.detail.c_str());
    std::fflush(stdout);
}

auto labels_of(const BipartiteGraph & host, const InducedCopyWitness & w) -> std::vector<Subset>
{
    std::vector<Subset> out;
    for (int r : w.host_right) {
        auto l = host.right_label(r);
        out.emplace_back(l.begin(), l.end());
    }
    return out;
}

auto realising(const BipartiteGraph & host, const std::vector<int> & h, const DerivedColor & d) -> EdgeColoring
{
    const Color other = d.color == Color::red ? Color::blue : Color::red;
    return fixtures::coloring_on_set(host, h, [&](int p) { return std::ranges::binary_search(d.positions, p) ? d.color : other; });
}

void b2_cases(Outcome & out)
{
    auto host = set_bipartite(9, 3);
    std::vector<int> h{1, 2, 3, 4, 5, 6, 7, 8, 9};
    struct Case
    {
        DerivedColor d;
        std::vector<Subset> rights;
    };
    std::vector<Case> cases{
        {{Color::red, {1, 3}}, {{2, 3, 4}, {2, 3, 6}, {2, 3, 8}, {4, 5, 6}, {4, 5, 8}, {6, 7, 8}}},
        {{Color::red, {1, 2}}, {{2, 4, 5}, {2, 6, 7}, {2, 8, 9}, {4, 6, 7}, {4, 8, 9}, {6, 8, 9}}},
        {{Color::red, {2, 3}}, {{1, 2, 4}, {1, 2, 6}, {1, 2, 8}, {3, 4, 6}, {3, 4, 8}, {5, 6, 8}}},
    };
    for (const auto & c : cases) {
        auto coloring = realising(host, h, c.d);
        auto w = extract_induced(h, c.d, 4, 2, host, coloring);
        const auto tag = "positions {" + join(c.d.positions) + "}";
        out.require(w.host_left == std::vector<int>{2, 4, 6, 8}, tag + ": lefts differ");
        out.require(labels_of(host, w) == c.rights, tag + ": rights differ");
        out.require(w.claimed_color == Color::red, tag + ": colour");
        out.require(verify_witness(host, coloring, w), tag + ": witness rejected");
    }
}

void pigeonhole(Outcome & out)
{
    std::mt19937_64 rng(2024);
    for (auto [a, b] : {std::pair{2, 2}, std::pair{3, 2}}) {
        const int k = 2 * b, n = a * (1 << k);
        auto host = complete_bipartite(n, k);
        for (int trial = 0; trial < 1000; ++trial) {
            auto c = oracle::random_coloring(host, rng);
            auto w = extract_monochromatic_complete(host, c, a, b);
            if (! w.claimed_color || ! verify_witness(host, c, w)) {
                out.require(false, "a=" + std::to_string(a) + " trial " + std::to_string(trial) + " rejected");
                return;
            }
        }
    }
}

void micro_ramsey(Outcome & out)
{
    auto r = ramsey_number_exact(2, 2, 3, 6);
    out.require(r.n == 6, "value is not 6");
    out.require(r.counterexample && r.counterexample->n() == 5, "no counterexample at n=5");
    if (r.counterexample)
        out.require(! find_homogeneous_set(*r.counterexample, 3), "counterexample has a homogeneous 3-set");
    bool k5_escape = false, k6_forced = true;
    for (std::uint32_t m = 0; m < (1U << 10); ++m)
        k5_escape = k5_escape || ! oracle::has_mono_triangle(5, m);
    for (std::uint32_t m = 0; m < (1U << 15); ++m)
        k6_forced = k6_forced && oracle::has_mono_triangle(6, m);
    out.require(k5_escape && k6_forced, "independent enumeration disagrees");
}

void embedding(Outcome & out)
{
    std::mt19937_64 rng(6);
    bool saw_isolated = false, saw_full = false;
    for (int trial = 0; trial < 200; ++trial) {
        const int c = 1 + static_cast<int>(rng() % 5), d = 1 + static_cast<int>(rng() % 5);
        auto pattern = oracle::random_pattern(c, d, rng, (trial % 5) / 4.0);
        for (int j = 1; j <= d; ++j) {
            int deg = 0;
            for (int i = 1; i <= c; ++i)
                deg += pattern.has_edge(i, j);
            saw_isolated = saw_isolated || deg == 0;
            saw_full = saw_full || deg == c;
        }
        auto e = embed_into_set_bipartite(pattern);
        out.require(e.a == 2 * c + d && e.b == c + 1, "parameters");
        out.require(verify_witness(set_bipartite(e.a, e.b), e.witness), "witness rejected at trial " + std::to_string(trial));
    }
    out.require(saw_isolated && saw_full, "degree-0 or degree-c rights never generated");
}

void right_vertices(Outcome & out)
{
    long checked = 0;
    for (int b = 1; b <= 4; ++b)
        for (int a = b; a <= 5; ++a) {
            const int k = 2 * b - 1, s = a * b + b - 1;
            for (const auto & I : oracle::all_subsets(k, b))
                for (const auto & T : oracle::all_subsets(a, b)) {
                    Subset S;
                    for (int t : T)
                        S.push_back(t * b);
                    auto x = build_right_vertex(S, I, a, b);
                    const auto tag = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " S={" + join(S) + "} I={" + join(I) + "}";
                    bool ok = static_cast<int>(x.size()) == k && std::ranges::is_sorted(x) && x.front() >= 1 && x.back() <= s;
                    for (int j = 0; ok && j < b; ++j)
                        ok = x[static_cast<std::size_t>(I[static_cast<std::size_t>(j)] - 1)] == S[static_cast<std::size_t>(j)];
                    Subset hit;
                    for (int v : x)
                        if (v % b == 0 && v >= b && v <= a * b)
                            hit.push_back(v);
                    out.require(ok && hit == S, tag);
                    ++checked;
                }
        }
    out.require(checked > 0, "nothing checked");
}

void complete_hosts(Outcome & out)
{
    std::mt19937_64 rng(77);
    auto b42 = set_bipartite(4, 2);
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k) {
            auto host = complete_bipartite(n, k);
            for (int trial = 0; trial < 100; ++trial) {
                auto c = oracle::random_coloring(host, rng);
                if (oracle::induced_mono_exists(host, c, b42) || find_induced_monochromatic(host, c, b42)) {
                    out.require(false, "found a copy in K_{" + std::to_string(n) + "," + std::to_string(k) + "}");
                    return;
                }
            }
        }
}

void pipeline(Outcome & out)
{
    auto host = set_bipartite(7, 3);
    EdgeColoring red(host, Color::red);
    auto w = find_induced_mono_pattern(fixtures::k11(), host, red);
    out.require(w.has_value(), "no witness");
    if (w) {
        out.require(w->claimed_color == Color::red, "colour");
        out.require(verify_witness(host, red, *w), "witness rejected");
    }
}

void pipeline_slow(Outcome & out)
{
    auto host = set_bipartite(35, 7);
    EdgeColoring red(host, Color::red);
    auto w = find_induced_mono_pattern(fixtures::small_pattern(), host, red, 1'000'000'000);
    out.require(w.has_value(), "no witness");
    if (w) {
        out.require(w->claimed_color == Color::red, "colour");
        out.require(verify_witness(host, red, *w), "witness rejected");
    }
}

void oracle_agreement(Outcome & out)
{
    auto host = set_bipartite(9, 3);
    EdgeColoring red(host, Color::red);
    auto derived = derive_coloring(host, red, 2);
    auto h = find_homogeneous_set(derived, 9);
    out.require(h && h->value, "no homogeneous 9-set");
    if (! h || ! h->value)
        return;
    auto w = extract_induced(h->vertices, decode(*h->value, 2), 4, 2, host, red);
    out.require(verify_witness(host, red, w), "constructive witness rejected");
    auto b42 = set_bipartite(4, 2);
    out.require(oracle::induced_mono_exists_sdr(host, red, b42) == Color::red, "brute-force oracle found nothing");
    auto found = find_induced_monochromatic(host, red, b42);
    out.require(found && verify_witness(host, red, *found), "search witness missing or rejected");
}

}

int main(int argc, char ** argv)
{
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        slow = slow || std::strcmp(argv[i], "--slow") == 0;

    if (slow) {
        run(7, "pipeline on all-red B_{35,7} with the 3+2 pattern", 600, pipeline_slow);
    }
    else {
        run(1, "the three b=2 extraction cases on [9]", 1, b2_cases);
        run(2, "complete-host extraction on 2x1000 random colourings", 5, pigeonhole);
        run(3, "exact two-colour triangle number", 60, micro_ramsey);
        run(4, "embedding property suite", 5, embedding);
        run(5, "right-vertex construction, exhaustive", 10, right_vertices);
        run(6, "no induced B_{4,2} in complete hosts", 30, complete_hosts);
        run(7, "pipeline on all-red B_{7,3}", 1, pipeline);
        run(8, "constructive and brute-force agreement on B_{9,3}", 10, oracle_agreement);
    }
    return failures == 0 ? 0 : 1;
}
