#include "whisk/explore.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "whisk/decompose.hpp"
#include "whisk/gen.hpp"
#include "whisk/io.hpp"

namespace whisk {

namespace {

int pair_bit(int i, int j, int n) {
    // upper-triangle position of (i < j) among all pairs on n vertices
    int before = i * n - i * (i + 1) / 2;
    return before + (j - i - 1);
}

} // namespace

uint64_t graph_canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > 7) throw std::invalid_argument("canonical codes support at most 7 vertices");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t code = 0;
        for (auto [u, v] : g.edges()) {
            int a = perm[static_cast<size_t>(u)], b = perm[static_cast<size_t>(v)];
            if (a > b) std::swap(a, b);
            code |= uint64_t{1} << pair_bit(a, b, n);
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("exhaustive enumeration covers 1..7 vertices");
    auto labels = [](int k) {
        std::vector<std::string> out;
        for (int i = 1; i <= k; ++i) out.push_back("v" + std::to_string(i));
        return out;
    };
    std::vector<Graph> current{Graph::build(labels(1), {})};
    for (int k = 1; k < n; ++k) {
        std::map<uint64_t, Graph> next;
        for (const Graph& g : current) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
                std::vector<std::pair<int, int>> edges = g.edges();
                for (int u = 0; u < k; ++u)
                    if ((mask >> u) & 1) edges.emplace_back(u, k);
                Graph extended = Graph::build(labels(k + 1), edges);
                uint64_t code = graph_canonical_code(extended);
                next.emplace(code, std::move(extended));
            }
        }
        current.clear();
        current.reserve(next.size());
        for (auto& [code, g] : next) current.push_back(std::move(g));
    }
    return current;
}

namespace {

struct GraphVerdict {
    bool chordal = false;
    bool unmixed = false;
    bool forward = false;
    bool reverse = false;
    std::vector<std::string> violations;
};

std::string describe(const Graph& g) {
    std::ostringstream out;
    out << "graph n=" << g.vertex_count() << " edges";
    for (auto [u, v] : g.edges()) out << ' ' << g.label(u) << '-' << g.label(v);
    return out.str();
}

GraphVerdict examine(const Graph& g) {
    GraphVerdict verdict;
    auto fail = [&](const std::string& what) {
        verdict.violations.push_back(describe(g) + ": " + what);
    };

    if (!is_chordal(g).chordal) return verdict;
    verdict.chordal = true;

    SimplicialComplex ind = independence_complex(g);
    int d = ind.dimension();

    // forward: f(Ind(G)) arises as the h-vector of a pure, balanced,
    // vertex decomposable complex, witnessed by the whisker construction
    std::optional<Coloring> chi;
    for (int s = d + 1; s <= g.vertex_count() && !chi; ++s) chi = min_coloring(ind, s);
    if (!chi) {
        fail("no proper colouring found");
        return verdict;
    }
    try {
        WhiskerComplex w = whisker(ind, *chi);
        bool ok = true;
        if (!w.complex.is_pure()) {
            fail("whisker complex is not pure");
            ok = false;
        }
        if (!is_balanced(w.complex)) {
            fail("whisker complex is not balanced");
            ok = false;
        }
        VDResult vd = is_vertex_decomposable(w.complex);
        if (!vd.decomposable || !verify_certificate(w.complex, vd.certificate)) {
            fail("whisker complex is not verifiably vertex decomposable");
            ok = false;
        }
        ShellingOrder so = whisker_shelling_order(w);  // asserts internally
        if (!sequences_equal_up_to_trailing_zeros(h_vector_from_shelling(w.complex, so),
                                                  ind.f_vector())) {
            fail("shelling h-vector differs from the source f-vector");
            ok = false;
        }
        if (!sequences_equal_up_to_trailing_zeros(w.complex.h_vector(), ind.f_vector())) {
            fail("whisker h-vector differs from the source f-vector");
            ok = false;
        }
        verdict.forward = ok;
    } catch (const std::exception& e) {
        fail(std::string("forward direction: ") + e.what());
    }

    if (!is_unmixed(g)) return verdict;
    verdict.unmixed = true;

    // reverse: h(Ind(G)) is again the f-vector of a chordal graph's
    // independence complex, witnessed by the free-vertex facet restriction
    try {
        bool ok = true;
        VDResult vd = is_vertex_decomposable(ind);
        if (!vd.decomposable || !verify_certificate(ind, vd.certificate)) {
            fail("pure chordal independence complex is not vertex decomposable");
            ok = false;
        }
        std::optional<Coloring> balanced_chi = min_coloring(ind, d + 1);
        if (!balanced_chi) {
            fail("pure chordal independence complex is not balanced");
            ok = false;
        }
        hhz_check(g);  // asserts the two clauses agree
        Face witness = chordal_free_vertex_facet(g);
        if (balanced_chi && ok) {
            ReverseWhiskerResult rw = reverse_whisker(ind, *balanced_chi, witness);
            Face kept = ind.universe_face().minus(witness);
            Graph sub = g.induced_subgraph(kept);
            if (!is_chordal(sub).chordal) {
                fail("residual graph is not chordal");
                ok = false;
            }
            if (!(rw.source == independence_complex(sub))) {
                fail("reversal source differs from the residual independence complex");
                ok = false;
            }
        }
        verdict.reverse = ok;
    } catch (const std::exception& e) {
        fail(std::string("reverse direction: ") + e.what());
    }
    return verdict;
}

} // namespace

std::string ExploreReport::to_text() const {
    std::ostringstream out;
    for (const auto& row : sizes) {
        out << "n=" << row.n << (row.exhaustive ? " exhaustive" : " sampled") << ": graphs="
            << row.graphs << " chordal=" << row.chordal << " unmixed=" << row.unmixed_chordal
            << " forward-ok=" << row.forward_checked << " reverse-ok=" << row.reverse_checked
            << "\n";
    }
    for (const auto& v : violations) out << "VIOLATION " << v << "\n";
    out << "violations: " << violations.size() << "\n";
    return out.str();
}

ExploreReport explore_chordal(int max_n, std::optional<uint64_t> seed, int samples_per_n,
                              int workers) {
    if (max_n < 1) throw std::invalid_argument("max-n must be at least 1");
    if (max_n > 7 && !seed)
        throw std::invalid_argument("a seed is required beyond the exhaustive range (n > 7)");
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : static_cast<int>(hw);
    }

    ExploreReport report;
    for (int n = 1; n <= max_n; ++n) {
        ExploreReport::PerSize row;
        row.n = n;
        std::vector<Graph> graphs;
        if (n <= 7) {
            graphs = all_graphs_up_to_iso(n);
        } else {
            row.exhaustive = false;
            Rng rng(*seed + static_cast<uint64_t>(n));
            for (int i = 0; i < samples_per_n; ++i)
                graphs.push_back(random_chordal_graph(rng, n));
        }
        row.graphs = static_cast<long long>(graphs.size());

        std::vector<GraphVerdict> verdicts(graphs.size());
        std::atomic<size_t> cursor{0};
        auto work = [&]() {
            while (true) {
                size_t i = cursor.fetch_add(1);
                if (i >= graphs.size()) break;
                verdicts[i] = examine(graphs[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();

        for (const auto& v : verdicts) {
            row.chordal += v.chordal;
            row.unmixed_chordal += v.unmixed;
            row.forward_checked += v.forward;
            row.reverse_checked += v.reverse;
            for (const auto& violation : v.violations)
                report.violations.push_back("n=" + std::to_string(n) + " " + violation);
        }
        report.sizes.push_back(row);
    }
    return report;
}

} // namespace whisk
