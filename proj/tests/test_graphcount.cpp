#include "ec/error.hpp"
#include "ec/graphcount.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <sstream>

using namespace ec;
using namespace ec::testing;

namespace {

// Each parallel copy of an edge as its own (from, to) pair.
std::vector<std::pair<VertexId, VertexId>> expanded_edges(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& e : g.edges())
        for (long k = 0; k < e.multiplicity; ++k) out.emplace_back(e.from, e.to);
    return out;
}

// Subsets of |V|-1 edges that form a forest.
long brute_spanning_trees(const Graph& g) {
    auto edges = expanded_edges(g);
    std::size_t n = g.vertex_count(), m = edges.size();
    long count = 0;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != n - 1) continue;
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        bool forest = true;
        for (std::size_t i = 0; i < m && forest; ++i) {
            if (!((mask >> i) & 1)) continue;
            auto a = find(edges[i].first), b = find(edges[i].second);
            if (a == b) forest = false;
            else parent[a] = b;
        }
        if (forest) ++count;
    }
    return count;
}

// Choose one outgoing non-loop edge per non-root vertex; keep choices where all reach the root.
long brute_in_trees(const Graph& g, VertexId root) {
    auto edges = expanded_edges(g);
    std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> choices(n);
    for (auto [u, v] : edges)
        if (u != v) choices[u].push_back(v);
    std::vector<VertexId> next(n);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t u) {
        if (u == n) {
            for (std::size_t s = 0; s < n; ++s) {
                std::size_t x = s, steps = 0;
                while (x != root && steps <= n) {
                    x = next[x];
                    ++steps;
                }
                if (x != root) return;
            }
            ++count;
            return;
        }
        if (u == root) return rec(u + 1);
        for (VertexId v : choices[u]) {
            next[u] = v;
            rec(u + 1);
        }
    };
    rec(0);
    return count;
}

// Eulerian circuits as edge sequences beginning with edge copy 0.
long brute_eulerian(const Graph& g) {
    auto edges = expanded_edges(g);
    std::size_t m = edges.size();
    if (m == 0) return 0;
    std::vector<bool> used(m);
    used[0] = true;
    long count = 0;
    std::function<void(VertexId, std::size_t)> rec = [&](VertexId at, std::size_t depth) {
        if (depth == m) {
            if (at == edges[0].first) ++count;
            return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i] || edges[i].first != at) continue;
            used[i] = true;
            rec(edges[i].second, depth + 1);
            used[i] = false;
        }
    };
    rec(edges[0].second, 1);
    return count;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, int max_edges, bool directed) {
    Graph g(directed);
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> count(1, max_edges);
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
        VertexId a = pick(rng), b = pick(rng);
        if (!directed && a == b) continue;
        g.add_edge(a, b);
    }
    return g;
}

}  // namespace

TEST(GraphMatrices, CompleteGraphAdjacencyAndLaplacian) {
    Graph k3 = complete_graph(3);
    QMatrix a = graph_matrix(k3, GraphMatrixKind::Adjacency);
    QMatrix l = graph_matrix(k3, GraphMatrixKind::Laplacian);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_EQ(a(i, j), i == j ? 0 : 1);
            EXPECT_EQ(l(i, j), i == j ? 2 : -1);
        }
}

TEST(GraphMatrices, DirectedCycleLaplacian) {
    QMatrix l = graph_matrix(directed_cycle(3), GraphMatrixKind::DirectedLaplacian);
    QMatrix expected = QMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i) expected(i, (i + 1) % 3) = -1;
    EXPECT_EQ(l, expected);
}

TEST(GraphMatrices, KindMismatch) {
    try {
        graph_matrix(directed_cycle(3), GraphMatrixKind::Laplacian);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::KindMismatch);
    }
    EXPECT_THROW(graph_matrix(complete_graph(3), GraphMatrixKind::DirectedLaplacian), Error);
}

TEST(GraphMatrices, IncidenceTimesTransposeIsLaplacian) {
    for (const char* spec : {"complete:4", "bipartite:2,3", "cube:3", "wheel:5"}) {
        Graph g = build_named_graph(spec);
        QMatrix b = graph_matrix(g, GraphMatrixKind::Incidence);
        EXPECT_EQ(b * b.transpose(), graph_matrix(g, GraphMatrixKind::Laplacian)) << spec;
    }
}

TEST(GraphMatrices, MultiEdgesCountInAdjacency) {
    Graph g(false);
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("a", "b", 3);
    EXPECT_EQ(graph_matrix(g, GraphMatrixKind::Adjacency)(0, 1), 3);
    EXPECT_EQ(spanning_tree_count(g), 3);
}

TEST(Walks, CompleteGraphClosedWalks) {
    Graph k3 = complete_graph(3);
    EXPECT_EQ(count_walks(k3, 0, 0, 2), 2);
    for (int n = 3; n <= 6; ++n) {
        Graph kn = complete_graph(n);
        for (unsigned k = 1; k <= 8; ++k) {
            Integer total = 0;
            for (VertexId v = 0; v < kn.vertex_count(); ++v) total += count_walks(kn, v, v, k);
            Integer expected = ipow(n - 1, k) + (k % 2 ? -1 : 1) * Integer(n - 1);
            EXPECT_EQ(total, expected) << n << " " << k;
        }
    }
}

TEST(Walks, ZeroLengthIsIndicator) {
    Graph g = build_named_graph("grid:2,3");
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(count_walks(g, u, v, 0), u == v ? 1 : 0);
    EXPECT_THROW(count_walks(g, 0, 99, 1), Error);
}

TEST(Walks, AvoidingAaGivesFibonacci) {
    Graph g = forbidden_word_automaton("ab", {"aa"});
    EXPECT_EQ(g.vertex_count(), 2u);
    Integer total = 0;
    for (VertexId u = 0; u < 2; ++u)
        for (VertexId v = 0; v < 2; ++v) total += count_walks(g, u, v, 3);
    EXPECT_EQ(total, 8);
    RationalGF gf = walk_gf(g, g.vertex("b"), g.vertex("b"));
    // Words starting and ending with b.
    Series s = gf.series(8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(s[n], Rational(count_walks(g, 1, 1, n)));
}

TEST(Walks, SingleLetterAutomaton) {
    Graph g = forbidden_word_automaton("a", {"aa"});
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0);
    EXPECT_EQ(count_walks(g, 0, 0, 0), 1);
    EXPECT_EQ(count_walks(g, 0, 0, 1), 0);
}

TEST(Walks, LoopVertexGf) {
    Graph g(true);
    g.add_vertex("v");
    g.add_edge("v", "v");
    RationalGF w = walk_gf(g, 0, 0);
    EXPECT_EQ(w.numerator, Poly(1));
    EXPECT_EQ(w.denominator, Poly(Q({1, -1})));
    Series c = closed_walk_gf(g).series(6);
    EXPECT_EQ(c, S({0, 1, 1, 1, 1, 1, 1}, 6));
}

TEST(Walks, WalkGfMatchesCountsOnRandomGraphs) {
    std::mt19937_64 rng(kDefaultSeed);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 2 + trial % 7;
        Graph g = random_graph(rng, n, 14, trial % 2 == 0);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v) {
                Series s = walk_gf(g, u, v).series(19);
                for (unsigned k = 0; k < 20; ++k) ASSERT_EQ(s[k], Rational(count_walks(g, u, v, k)));
            }
    }
}

TEST(Walks, ThreeRowMonomerDimer) {
    Graph t = strip_transfer_graph(3, true);
    VertexId full = t.vertex("111");
    RationalGF gf = walk_gf(t, full, full);
    Series s = gf.series(7);
    EXPECT_EQ(s.coeffs(), Q({1, 3, 22, 131, 823, 5096, 31687, 196785}));
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(s[n], count_rectangle_tilings(3, n, true)) << n;
    LinearRecurrence r = gf_to_rec(gf);
    EXPECT_EQ(nth_term(r, 7), 196785);
    EXPECT_NEAR(dominant_growth(gf), 6.21207, 1e-5);
}

TEST(Walks, StripTransferDominoOnly) {
    Graph t = strip_transfer_graph(2, false);
    VertexId full = t.vertex("11");
    Series s = walk_gf(t, full, full).series(10);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(s[n], count_rectangle_tilings(2, n, false)) << n;
    Graph t4 = strip_transfer_graph(4, false);
    Series s4 = walk_gf(t4, t4.vertex("1111"), t4.vertex("1111")).series(6);
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(s4[n], count_rectangle_tilings(4, n, false)) << n;
}

TEST(Walks, CyclicWordsAvoidingAaAndAbba) {
    Graph g = forbidden_word_automaton("ab", {"aa", "abba"});
    EXPECT_EQ(g.vertex_count(), 5u);
    for (const char* w : {"aba", "abb", "bab", "bba", "bbb"}) EXPECT_TRUE(g.find_vertex(w)) << w;
    EXPECT_EQ(transfer_denominator(g), Poly(Q({1, -1, -1, 1, -1})));
    Series c = closed_walk_gf(g).series(9);
    EXPECT_EQ(c.coeffs(), Q({0, 1, 3, 1, 7, 6, 15, 15, 31, 37}));
    for (unsigned n = 1; n <= 9; ++n) {
        Integer trace = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) trace += count_walks(g, v, v, n);
        EXPECT_EQ(c[static_cast<int>(n)], Rational(trace));
    }
}

TEST(Walks, ClosedWalksOfTriangle) {
    Series c = closed_walk_gf(complete_graph(3)).series(10);
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(c[n], Rational(ipow(2, n) + 2 * (n % 2 ? -1 : 1)));
}

TEST(SpanningTrees, TheoremList) {
    EXPECT_EQ(spanning_tree_count(complete_graph(4)), 16);
    EXPECT_EQ(spanning_tree_count(complete_graph(5)), 125);
    EXPECT_EQ(spanning_tree_count(complete_bipartite_graph(2, 3)), 12);
    EXPECT_EQ(spanning_tree_count(cube_graph(3)), 384);
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(spanning_tree_count(complete_graph(n)), ipow(n, n - 2));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            EXPECT_EQ(spanning_tree_count(complete_bipartite_graph(m, n)), ipow(m, n - 1) * ipow(n, m - 1));
    for (int n = 2; n <= 5; ++n)
        EXPECT_EQ(spanning_tree_count(hyperoctahedral_graph(n)), ipow(2, 2 * n - 2) * ipow(n - 1, n) * ipow(n, n - 2));
    for (int n = 1; n <= 5; ++n) {
        Integer expected = ipow(2, (1 << n) - n - 1);
        for (int k = 1; k <= n; ++k) expected *= ipow(k, static_cast<unsigned>(binomial(Integer(n), k).get_ui()));
        EXPECT_EQ(spanning_tree_count(cube_graph(n)), expected) << n;
    }
}

TEST(SpanningTrees, WheelsAndCycles) {
    EXPECT_EQ(spanning_tree_count(wheel_graph(3)), 16);
    EXPECT_EQ(spanning_tree_count(wheel_graph(4)), 45);
    EXPECT_EQ(spanning_tree_count(cycle_graph(7)), 7);
    EXPECT_EQ(spanning_tree_count(path_graph(5)), 1);
}

TEST(SpanningTrees, BruteForceAndCofactorIndependence) {
    std::vector<Graph> graphs{complete_graph(4), wheel_graph(4), complete_bipartite_graph(2, 3), grid_graph(2, 3),
                              hyperoctahedral_graph(2), cycle_graph(5)};
    std::mt19937_64 rng(kDefaultSeed + 5);
    for (int i = 0; i < 20; ++i) graphs.push_back(random_graph(rng, 3 + i % 4, 10, false));
    for (const auto& g : graphs) {
        if (g.edge_count() > 10) continue;
        Integer expected = brute_spanning_trees(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(spanning_tree_count(g, v), expected);
    }
}

TEST(SpanningTrees, DisconnectedAndLoops) {
    Graph g(false);
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge("a", "b");
    EXPECT_EQ(spanning_tree_count(g), 0);
    EXPECT_FALSE(is_connected(g));
    g.add_edge("c", "c");
    try {
        spanning_tree_count(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LoopPresent);
    }
}

TEST(RootedTrees, Examples) {
    EXPECT_EQ(rooted_tree_count(directed_cycle(3), 0), 1);
    Graph db = de_bruijn_graph(2, 3);
    for (VertexId v = 0; v < db.vertex_count(); ++v) EXPECT_EQ(rooted_tree_count(db, v), 2);
    Graph k3 = complete_digraph(3);
    for (VertexId v = 0; v < 3; ++v) {
        EXPECT_EQ(brute_in_trees(k3, v), 3);
        EXPECT_EQ(rooted_tree_count(k3, v), 3);
    }
}

TEST(RootedTrees, BruteForceOnRandomDigraphs) {
    std::mt19937_64 rng(kDefaultSeed + 6);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 2 + trial % 5, 10, true);
        for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(rooted_tree_count(g, v), brute_in_trees(g, v));
    }
}

TEST(Eulerian, DeBruijnCounts) {
    Graph db3 = de_bruijn_graph(2, 3);
    EXPECT_EQ(db3.vertex_count(), 4u);
    EXPECT_EQ(db3.edge_count(), 8);
    EXPECT_EQ(eulerian_count(db3), 2);
    EXPECT_EQ(brute_eulerian(db3), 2);
    EXPECT_EQ(eulerian_count(de_bruijn_graph(2, 2)), 1);
    EXPECT_EQ(eulerian_count(de_bruijn_graph(2, 4)), 16);
    EXPECT_EQ(eulerian_count(directed_cycle(3)), 1);
    // (k!)^{k^{n-1}} / k^n
    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 3; ++n) {
            Integer expected = ipow(factorial(k), static_cast<unsigned>(ipow(k, n - 1).get_ui())) / ipow(k, n);
            EXPECT_EQ(eulerian_count(de_bruijn_graph(k, n)), expected) << k << "," << n;
        }
}

TEST(Eulerian, RootedTreeCountIndependentOfRoot) {
    for (const Graph& g : {de_bruijn_graph(2, 4), de_bruijn_graph(3, 2), complete_digraph(4)}) {
        Integer first = rooted_tree_count(g, 0);
        for (VertexId v = 1; v < g.vertex_count(); ++v) EXPECT_EQ(rooted_tree_count(g, v), first);
    }
}

TEST(Eulerian, BruteForceOnSmallEulerianDigraphs) {
    std::vector<Graph> graphs{complete_digraph(3), de_bruijn_graph(2, 3), de_bruijn_graph(3, 2)};
    // Unions of random directed cycles are Eulerian.
    std::mt19937_64 rng(kDefaultSeed + 7);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g(true);
        std::size_t n = 3 + trial % 3;
        for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
        std::vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
        std::shuffle(order.begin(), order.end(), rng);
        std::size_t len = 2 + trial % (n - 1);
        if (n + len > 10) len = 10 - n;
        for (std::size_t i = 0; i < len; ++i) g.add_edge(order[i], order[(i + 1) % len]);
        graphs.push_back(g);
    }
    for (const auto& g : graphs) {
        if (g.edge_count() > 10) continue;
        EXPECT_EQ(eulerian_count(g), brute_eulerian(g));
    }
}

TEST(Eulerian, NotEulerianNamesVertex) {
    Graph g(true);
    g.add_vertex("x");
    g.add_vertex("y");
    g.add_edge("x", "y");
    try {
        eulerian_count(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotEulerian);
        EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos);
    }
}

TEST(NamedGraphs, Shapes) {
    EXPECT_EQ(build_named_graph("complete:4").edge_count(), 6);
    Graph oct = build_named_graph("hyperoctahedral:2");
    EXPECT_EQ(oct.vertex_count(), 4u);
    EXPECT_EQ(oct.edge_count(), 4);
    Graph db = build_named_graph("debruijn:2,3");
    EXPECT_EQ(db.vertex_count(), 4u);
    EXPECT_EQ(db.edge_count(), 8);
    EXPECT_EQ(build_named_graph("cube:3").edge_count(), 12);
    EXPECT_EQ(build_named_graph("wheel:4").vertex_count(), 5u);
    EXPECT_EQ(build_named_graph("grid:2,3").edge_count(), 7);
    for (const char* bad : {"complete", "complete:x", "nosuch:3", "bipartite:2", "cycle:2"}) {
        try {
            build_named_graph(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::BadSpec) << bad;
        }
    }
}

TEST(GraphFile, RoundTrip) {
    std::istringstream in("directed\n# comment\na b\nb c 2\nc a\nd\n");
    Graph g = read_graph(in);
    EXPECT_TRUE(g.directed());
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 4);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream again(out.str());
    Graph h = read_graph(again);
    EXPECT_EQ(graph_matrix(h, GraphMatrixKind::Adjacency), graph_matrix(g, GraphMatrixKind::Adjacency));
    std::istringstream bad("sideways\na b\n");
    EXPECT_THROW(read_graph(bad), Error);
}
