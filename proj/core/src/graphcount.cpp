#include "ec/graphcount.hpp"

#include "ec/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace ec {

long Graph::edge_count() const {
    long total = 0;
    for (const auto& e : edges_) total += e.multiplicity;
    return total;
}

bool Graph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const GraphEdge& e) { return e.from == e.to; });
}

VertexId Graph::add_vertex(const std::string& label) {
    if (index_.count(label)) throw Error(ErrorKind::BadArgument, "duplicate vertex label '" + label + "'");
    index_[label] = labels_.size();
    labels_.push_back(label);
    return labels_.size() - 1;
}

VertexId Graph::ensure_vertex(const std::string& label) {
    auto it = index_.find(label);
    return it == index_.end() ? add_vertex(label) : it->second;
}

std::optional<VertexId> Graph::find_vertex(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::vertex(const std::string& label) const {
    auto v = find_vertex(label);
    if (!v) throw Error(ErrorKind::UnknownVertex, "no vertex '" + label + "'");
    return *v;
}

void Graph::add_edge(VertexId from, VertexId to, long multiplicity) {
    if (from >= labels_.size() || to >= labels_.size())
        throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    if (multiplicity <= 0) throw Error(ErrorKind::BadArgument, "edge multiplicity must be positive");
    edges_.push_back({from, to, multiplicity});
}

void Graph::add_edge(const std::string& from, const std::string& to, long multiplicity) {
    add_edge(vertex(from), vertex(to), multiplicity);
}

long Graph::out_degree(VertexId v) const {
    long d = 0;
    for (const auto& e : edges_)
        if (e.from == v || (!directed_ && e.to == v)) d += e.multiplicity;
    return d;
}

long Graph::in_degree(VertexId v) const {
    long d = 0;
    for (const auto& e : edges_)
        if (e.to == v || (!directed_ && e.from == v)) d += e.multiplicity;
    return d;
}

long Graph::degree(VertexId v) const {
    long d = 0;
    for (const auto& e : edges_) {
        if (e.from == v) d += e.multiplicity;
        if (e.to == v) d += e.multiplicity;
    }
    return d;
}

Graph read_graph(std::istream& in) {
    std::string line;
    std::optional<Graph> g;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!g) {
            if (tok.size() != 1 || (tok[0] != "directed" && tok[0] != "undirected"))
                throw Error(ErrorKind::BadSpec, "first line must be 'directed' or 'undirected'");
            g.emplace(tok[0] == "directed");
            continue;
        }
        if (tok.size() == 1) {
            g->ensure_vertex(tok[0]);
            continue;
        }
        if (tok.size() > 3) throw Error(ErrorKind::BadSpec, "line " + std::to_string(line_no) + ": too many fields");
        long mult = 1;
        if (tok.size() == 3) {
            try {
                mult = std::stol(tok[2]);
            } catch (const std::exception&) {
                throw Error(ErrorKind::BadSpec, "line " + std::to_string(line_no) + ": bad multiplicity");
            }
        }
        VertexId u = g->ensure_vertex(tok[0]);
        VertexId v = g->ensure_vertex(tok[1]);
        g->add_edge(u, v, mult);
    }
    if (!g) throw Error(ErrorKind::BadSpec, "empty graph file");
    return *g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << (g.directed() ? "directed" : "undirected") << "\n";
    // Declaring every vertex first keeps the vertex order stable on re-reading.
    for (const auto& label : g.labels()) out << label << "\n";
    for (const auto& e : g.edges()) {
        out << g.label(e.from) << " " << g.label(e.to);
        if (e.multiplicity != 1) out << " " << e.multiplicity;
        out << "\n";
    }
}

namespace {

QMatrix adjacency(const Graph& g) {
    std::size_t n = g.vertex_count();
    QMatrix a(n, n);
    for (const auto& e : g.edges()) {
        a(e.from, e.to) += e.multiplicity;
        if (!g.directed() && e.from != e.to) a(e.to, e.from) += e.multiplicity;
    }
    return a;
}

// D - A where loops cancel out of the diagonal.
QMatrix laplacian_of(const QMatrix& a) {
    std::size_t n = a.rows();
    QMatrix l(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        Rational row = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (v != u) {
                row += a(u, v);
                l(u, v) = -a(u, v);
            }
        l(u, u) = row;
    }
    return l;
}

}  // namespace

QMatrix graph_matrix(const Graph& g, GraphMatrixKind kind) {
    switch (kind) {
        case GraphMatrixKind::Adjacency: return adjacency(g);
        case GraphMatrixKind::Laplacian:
            if (g.directed()) throw Error(ErrorKind::KindMismatch, "laplacian requires an undirected graph");
            return laplacian_of(adjacency(g));
        case GraphMatrixKind::DirectedLaplacian:
            if (!g.directed()) throw Error(ErrorKind::KindMismatch, "directed laplacian requires a directed graph");
            return laplacian_of(adjacency(g));
        case GraphMatrixKind::Incidence: {
            QMatrix m(g.vertex_count(), static_cast<std::size_t>(g.edge_count()));
            std::size_t col = 0;
            for (const auto& e : g.edges())
                for (long k = 0; k < e.multiplicity; ++k, ++col) {
                    if (e.from == e.to) continue;
                    m(e.to, col) = 1;
                    m(e.from, col) = -1;
                }
            return m;
        }
    }
    throw Error(ErrorKind::BadArgument, "unknown matrix kind");
}

bool is_connected(const Graph& g, bool include_isolated) {
    std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> touched(n);
    for (const auto& e : g.edges()) {
        parent[find(e.from)] = find(e.to);
        touched[e.from] = touched[e.to] = true;
    }
    std::optional<std::size_t> root;
    for (std::size_t v = 0; v < n; ++v) {
        if (!include_isolated && !touched[v]) continue;
        if (!root) root = find(v);
        else if (find(v) != *root) return false;
    }
    return true;
}

Integer count_walks(const Graph& g, VertexId u, VertexId v, unsigned n) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "vertex out of range");
    // Row vector times A, n times.
    std::size_t size = g.vertex_count();
    QMatrix a = adjacency(g);
    std::vector<Integer> row(size);
    row[u] = 1;
    for (unsigned step = 0; step < n; ++step) {
        std::vector<Integer> next(size);
        for (std::size_t i = 0; i < size; ++i) {
            if (row[i] == 0) continue;
            for (std::size_t j = 0; j < size; ++j)
                if (a(i, j) != 0) next[j] += row[i] * a(i, j).get_num();
        }
        row = std::move(next);
    }
    return row[v];
}

namespace {

PolyMatrix identity_minus_xa(const Graph& g) {
    QMatrix a = adjacency(g);
    std::size_t n = a.rows();
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly entry = Poly::monomial(-a(i, j), 1);
            if (i == j) entry += Poly(1);
            m(i, j) = entry;
        }
    return m;
}

}  // namespace

Poly transfer_denominator(const Graph& g) { return det(identity_minus_xa(g)); }

RationalGF walk_gf(const Graph& g, VertexId u, VertexId v) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "vertex out of range");
    PolyMatrix m = identity_minus_xa(g);
    Poly q = det(m);
    Poly p = det(m.minor(v, u));
    if ((u + v) % 2) p = -p;
    return RationalGF(p, q).reduced();
}

RationalGF closed_walk_gf(const Graph& g) {
    Poly q = transfer_denominator(g);
    Poly p = -(Poly::x() * q.derivative());
    return RationalGF(p, q);
}

Integer spanning_tree_count(const Graph& g, std::optional<VertexId> cofactor) {
    if (g.directed()) throw Error(ErrorKind::KindMismatch, "spanning trees require an undirected graph");
    if (g.has_loops()) throw Error(ErrorKind::LoopPresent, "graph has a loop");
    std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    if (!is_connected(g)) return 0;
    VertexId drop = cofactor.value_or(n - 1);
    if (drop >= n) throw Error(ErrorKind::UnknownVertex, "cofactor index out of range");
    return to_integer(det(graph_matrix(g, GraphMatrixKind::Laplacian).minor(drop, drop)));
}

Integer rooted_tree_count(const Graph& g, VertexId root) {
    if (!g.directed()) throw Error(ErrorKind::KindMismatch, "rooted trees require a directed graph");
    if (root >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "root out of range");
    return to_integer(det(graph_matrix(g, GraphMatrixKind::DirectedLaplacian).minor(root, root)));
}

Integer eulerian_count(const Graph& g) {
    if (!g.directed()) throw Error(ErrorKind::KindMismatch, "Eulerian count requires a directed graph");
    std::optional<VertexId> start;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        long out = g.out_degree(v), in = g.in_degree(v);
        if (out != in) throw Error(ErrorKind::NotEulerian, "indeg != outdeg at vertex '" + g.label(v) + "'");
        if (out > 0 && !start) start = v;
    }
    if (!start || !is_connected(g, false)) return 0;
    // Restrict to vertices that carry edges.
    Graph core(true);
    std::vector<std::optional<VertexId>> map(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) > 0) map[v] = core.add_vertex(g.label(v));
    for (const auto& e : g.edges()) core.add_edge(*map[e.from], *map[e.to], e.multiplicity);
    Integer count = rooted_tree_count(core, 0);
    for (VertexId v = 0; v < core.vertex_count(); ++v) count *= factorial(static_cast<unsigned>(core.out_degree(v) - 1));
    return count;
}

Graph complete_graph(int n) {
    Graph g(false);
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int m, int n) {
    Graph g(false);
    for (int i = 0; i < m; ++i) g.add_vertex("a" + std::to_string(i));
    for (int j = 0; j < n; ++j) g.add_vertex("b" + std::to_string(j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph cube_graph(int n) {
    Graph g(false);
    int size = 1 << n;
    for (int v = 0; v < size; ++v) {
        std::string label;
        for (int b = n - 1; b >= 0; --b) label += ((v >> b) & 1) ? '1' : '0';
        g.add_vertex(label);
    }
    for (int v = 0; v < size; ++v)
        for (int b = 0; b < n; ++b)
            if (!((v >> b) & 1)) g.add_edge(v, v | (1 << b));
    return g;
}

Graph hyperoctahedral_graph(int n) {
    Graph g(false);
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i) + "'");
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v)
            if (v != u + n) g.add_edge(u, v);
    return g;
}

Graph grid_graph(int rows, int cols) {
    Graph g(false);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) g.add_vertex(std::to_string(r) + "," + std::to_string(c));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            VertexId v = static_cast<VertexId>(r * cols + c);
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + static_cast<VertexId>(cols));
        }
    return g;
}

Graph cycle_graph(int n) {
    Graph g(false);
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(false);
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph wheel_graph(int rim) {
    Graph g = cycle_graph(rim);
    VertexId hub = g.add_vertex("hub");
    for (int i = 0; i < rim; ++i) g.add_edge(hub, i);
    return g;
}

Graph de_bruijn_graph(int k, int n) {
    Graph g(true);
    int len = n - 1;
    long count = 1;
    for (int i = 0; i < len; ++i) count *= k;
    auto word = [&](long code) {
        std::string s(static_cast<std::size_t>(len), '0');
        for (int i = len - 1; i >= 0; --i) {
            s[static_cast<std::size_t>(i)] = static_cast<char>('0' + code % k);
            code /= k;
        }
        return s;
    };
    for (long v = 0; v < count; ++v) g.add_vertex(len ? word(v) : std::string("()"));
    for (long v = 0; v < count; ++v)
        for (int c = 0; c < k; ++c) g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>((v * k + c) % count));
    return g;
}

Graph directed_cycle(int n) {
    Graph g(true);
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_digraph(int n) {
    Graph g(true);
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.add_edge(i, j);
    return g;
}

Graph strip_transfer_graph(int rows, bool monomers) {
    Graph g(true);
    int states = 1 << rows;
    auto label = [&](int mask) {
        // mask bit i set: cell i is covered from the left (printed as '0').
        std::string s;
        for (int i = 0; i < rows; ++i) s += ((mask >> i) & 1) ? '0' : '1';
        return s;
    };
    for (int s = 0; s < states; ++s) g.add_vertex(label(s));
    // Ways to fill the free cells of one column with vertical dominoes (and monomers).
    auto fillings = [&](int free_mask) {
        std::vector<long> ways(static_cast<std::size_t>(rows) + 1);
        ways[0] = 1;
        for (int i = 1; i <= rows; ++i) {
            bool free_i = (free_mask >> (i - 1)) & 1;
            if (!free_i) {
                ways[static_cast<std::size_t>(i)] = ways[static_cast<std::size_t>(i - 1)];
                continue;
            }
            // A free cell must be a monomer or part of a vertical domino with the cell above.
            long w = monomers ? ways[static_cast<std::size_t>(i - 1)] : 0;
            if (i >= 2 && ((free_mask >> (i - 2)) & 1)) w += ways[static_cast<std::size_t>(i - 2)];
            ways[static_cast<std::size_t>(i)] = w;
        }
        return ways[static_cast<std::size_t>(rows)];
    };
    for (int covered = 0; covered < states; ++covered)
        for (int outgoing = 0; outgoing < states; ++outgoing) {
            if (covered & outgoing) continue;
            int free_mask = (states - 1) & ~covered & ~outgoing;
            long w = fillings(free_mask);
            if (w > 0) g.add_edge(static_cast<VertexId>(covered), static_cast<VertexId>(outgoing), w);
        }
    return g;
}

Graph forbidden_word_automaton(const std::string& alphabet, const std::vector<std::string>& forbidden) {
    if (forbidden.empty()) throw Error(ErrorKind::BadSpec, "need at least one forbidden word");
    std::size_t len = 0;
    for (const auto& w : forbidden) {
        if (w.empty()) throw Error(ErrorKind::BadSpec, "empty forbidden word");
        for (char ch : w)
            if (alphabet.find(ch) == std::string::npos) throw Error(ErrorKind::BadSpec, "letter outside alphabet");
        len = std::max(len, w.size());
    }
    auto allowed = [&](const std::string& s) {
        for (const auto& w : forbidden)
            if (s.find(w) != std::string::npos) return false;
        return true;
    };
    Graph g(true);
    std::vector<std::string> words{""};
    for (std::size_t i = 0; i + 1 < len; ++i) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char ch : alphabet)
                if (allowed(w + ch)) next.push_back(w + ch);
        words = std::move(next);
    }
    for (const auto& w : words) g.add_vertex(w.empty() ? std::string("()") : w);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (char ch : alphabet) {
            std::string window = words[i] + ch;
            if (!allowed(window)) continue;
            std::string target = window.substr(1);
            auto it = std::find(words.begin(), words.end(), target);
            if (it != words.end()) g.add_edge(i, static_cast<VertexId>(it - words.begin()));
        }
    return g;
}

Graph build_named_graph(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        for (std::string item; std::getline(ss, item, ',');) {
            try {
                std::size_t used = 0;
                args.push_back(std::stoi(item, &used));
                if (used != item.size()) throw Error(ErrorKind::BadSpec, "bad number in '" + spec + "'");
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::BadSpec, "bad number in '" + spec + "'");
            }
        }
    }
    auto need = [&](std::size_t count, int minimum) {
        if (args.size() != count) throw Error(ErrorKind::BadSpec, "'" + name + "' takes " + std::to_string(count) + " parameter(s)");
        for (int a : args)
            if (a < minimum) throw Error(ErrorKind::BadSpec, "parameter out of range in '" + spec + "'");
        for (int a : args)
            if (a > 4096) throw Error(ErrorKind::BadSpec, "parameter too large in '" + spec + "'");
    };
    if (name == "complete") {
        need(1, 1);
        return complete_graph(args[0]);
    }
    if (name == "bipartite") {
        need(2, 1);
        return complete_bipartite_graph(args[0], args[1]);
    }
    if (name == "cube") {
        need(1, 0);
        if (args[0] > 12) throw Error(ErrorKind::BadSpec, "cube dimension too large");
        return cube_graph(args[0]);
    }
    if (name == "hyperoctahedral") {
        need(1, 1);
        return hyperoctahedral_graph(args[0]);
    }
    if (name == "grid") {
        need(2, 1);
        return grid_graph(args[0], args[1]);
    }
    if (name == "cycle") {
        need(1, 3);
        return cycle_graph(args[0]);
    }
    if (name == "path") {
        need(1, 1);
        return path_graph(args[0]);
    }
    if (name == "wheel") {
        need(1, 3);
        return wheel_graph(args[0]);
    }
    if (name == "dcycle") {
        need(1, 1);
        return directed_cycle(args[0]);
    }
    if (name == "dcomplete") {
        need(1, 1);
        return complete_digraph(args[0]);
    }
    if (name == "debruijn") {
        need(2, 1);
        double size = std::pow(static_cast<double>(args[0]), args[1] - 1);
        if (size > 1e5) throw Error(ErrorKind::BadSpec, "de Bruijn graph too large");
        return de_bruijn_graph(args[0], args[1]);
    }
    if (name == "monomer-dimer" || name == "domino") {
        need(1, 1);
        if (args[0] > 10) throw Error(ErrorKind::BadSpec, "strip height too large");
        return strip_transfer_graph(args[0], name == "monomer-dimer");
    }
    throw Error(ErrorKind::BadSpec, "unknown graph family '" + name + "'");
}

}  // namespace ec
