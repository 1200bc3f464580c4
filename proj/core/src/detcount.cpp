#include "ec/detcount.hpp"

#include "ec/error.hpp"
#include "ec/powser.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <sstream>

namespace ec {

Rational pfaffian(const QMatrix& input) {
    if (!input.square()) throw Error(ErrorKind::NotSquare, "pfaffian of a non-square matrix");
    std::size_t n = input.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (input(i, j) != -input(j, i)) throw Error(ErrorKind::NotSkewSymmetric, "matrix is not skew-symmetric");
    if (n % 2) throw Error(ErrorKind::OddDimension, "pfaffian needs even dimension");
    QMatrix a = input;
    auto swap_index = [&](std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(x, c), a(y, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, x), a(r, y));
    };
    // index target -= t * index source, applied to rows and columns.
    auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& t) {
        for (std::size_t c = 0; c < n; ++c) a(target, c) -= t * a(source, c);
        for (std::size_t r = 0; r < n; ++r) a(r, target) -= t * a(r, source);
    };
    Rational pf = 1;
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) return 0;
        if (j != k + 1) {
            swap_index(k + 1, j);
            pf = -pf;
        }
        Rational p = a(k, k + 1);
        pf *= p;
        for (std::size_t i = k + 2; i < n; ++i) {
            if (a(k, i) != 0) add_multiple(i, k + 1, a(k, i) / p);
            if (a(k + 1, i) != 0) add_multiple(i, k, a(k + 1, i) / a(k + 1, k));
        }
    }
    return pf;
}

GridRegion GridRegion::rectangle(int rows, int cols) {
    std::set<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) cells.insert({r, c});
    return GridRegion(std::move(cells));
}

GridRegion GridRegion::parse(const std::string& art) {
    std::set<Cell> cells;
    std::istringstream in(art);
    std::string line;
    int r = 0;
    while (std::getline(in, line)) {
        for (int c = 0; c < static_cast<int>(line.size()); ++c) {
            char ch = line[static_cast<std::size_t>(c)];
            if (ch == '#') cells.insert({r, c});
            else if (ch != '.' && ch != ' ' && ch != '\r')
                throw Error(ErrorKind::BadSpec, std::string("unexpected character '") + ch + "' in region");
        }
        ++r;
    }
    return GridRegion(std::move(cells));
}

std::string GridRegion::to_string() const {
    if (cells_.empty()) return "";
    int r0 = cells_.begin()->first, r1 = cells_.rbegin()->first, c0 = 1 << 30, c1 = -(1 << 30);
    for (auto [r, c] : cells_) {
        c0 = std::min(c0, c);
        c1 = std::max(c1, c);
    }
    std::string out;
    for (int r = r0; r <= r1; ++r) {
        for (int c = c0; c <= c1; ++c) out += cells_.count({r, c}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

namespace {

constexpr int kRowStep[4] = {0, 1, 0, -1};  // E, S, W, N: clockwise order
constexpr int kColStep[4] = {1, 0, -1, 0};

struct GridGraph {
    std::vector<GridRegion::Cell> cells;
    std::map<GridRegion::Cell, std::size_t> index;
    std::vector<std::array<long, 4>> neighbor;  // -1 when absent

    explicit GridGraph(const GridRegion& region) : cells(region.cells().begin(), region.cells().end()) {
        for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
        neighbor.resize(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (int d = 0; d < 4; ++d) {
                auto it = index.find({cells[i].first + kRowStep[d], cells[i].second + kColStep[d]});
                neighbor[i][static_cast<std::size_t>(d)] = it == index.end() ? -1 : static_cast<long>(it->second);
            }
    }
};

using EdgeKey = std::pair<std::size_t, std::size_t>;  // (smaller, larger)

EdgeKey key_of(std::size_t u, std::size_t v) { return {std::min(u, v), std::max(u, v)}; }

// Faces of the plane embedding, each traversed with the face on the left.
struct FaceTrace {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> faces;  // half-edges (u, v)
    std::vector<std::size_t> component;
    std::vector<bool> outer;
};

FaceTrace trace_faces(const GridGraph& g) {
    std::size_t n = g.cells.size();
    std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
    FaceTrace out;
    // Components for outer-face bookkeeping.
    std::vector<long> comp(n, -1);
    std::size_t comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<long>(comps);
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (long v : g.neighbor[u])
                if (v >= 0 && comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = static_cast<long>(comps);
                    stack.push_back(static_cast<std::size_t>(v));
                }
        }
        ++comps;
    }
    for (std::size_t u0 = 0; u0 < n; ++u0)
        for (int d0 = 0; d0 < 4; ++d0) {
            if (g.neighbor[u0][static_cast<std::size_t>(d0)] < 0 || used[u0][static_cast<std::size_t>(d0)]) continue;
            std::vector<std::pair<std::size_t, std::size_t>> face;
            std::size_t u = u0;
            int d = d0;
            while (!used[u][static_cast<std::size_t>(d)]) {
                used[u][static_cast<std::size_t>(d)] = true;
                auto v = static_cast<std::size_t>(g.neighbor[u][static_cast<std::size_t>(d)]);
                face.emplace_back(u, v);
                int back = (d + 2) % 4;
                int next = back;
                for (int k = 1; k <= 4; ++k) {
                    int cand = (back + k) % 4;
                    if (g.neighbor[v][static_cast<std::size_t>(cand)] >= 0) {
                        next = cand;
                        break;
                    }
                }
                u = v;
                d = next;
            }
            out.faces.push_back(std::move(face));
            out.component.push_back(static_cast<std::size_t>(comp[u0]));
        }
    // Twice the signed area with x = col, y = -row; bounded faces are positive.
    std::vector<long> area2(out.faces.size());
    for (std::size_t f = 0; f < out.faces.size(); ++f) {
        long acc = 0;
        for (auto [u, v] : out.faces[f]) {
            long x1 = g.cells[u].second, y1 = -g.cells[u].first;
            long x2 = g.cells[v].second, y2 = -g.cells[v].first;
            acc += x1 * y2 - x2 * y1;
        }
        area2[f] = acc;
    }
    out.outer.assign(out.faces.size(), false);
    std::vector<bool> has_outer(comps, false);
    for (std::size_t f = 0; f < out.faces.size(); ++f)
        if (area2[f] <= 0) {
            if (has_outer[out.component[f]]) throw std::logic_error("two outer faces in one component");
            has_outer[out.component[f]] = true;
            out.outer[f] = true;
        }
    // Euler's formula per component: V - E + F = 2.
    std::vector<long> chi(comps, 0);
    for (std::size_t u = 0; u < n; ++u) {
        chi[static_cast<std::size_t>(comp[u])] += 1;
        for (int d = 0; d < 2; ++d)  // E and S edges counted once
            if (g.neighbor[u][static_cast<std::size_t>(d)] >= 0) chi[static_cast<std::size_t>(comp[u])] -= 1;
    }
    for (std::size_t f = 0; f < out.faces.size(); ++f) chi[out.component[f]] += 1;
    std::vector<std::size_t> comp_size(comps, 0);
    for (std::size_t u = 0; u < n; ++u) ++comp_size[static_cast<std::size_t>(comp[u])];
    for (std::size_t c = 0; c < comps; ++c) {
        if (comp_size[c] == 1) continue;  // isolated cell, no faces
        if (chi[c] != 2) throw std::logic_error("face tracing violates Euler's formula");
        if (!has_outer[c]) throw std::logic_error("component without an outer face");
    }
    return out;
}

}  // namespace

QMatrix kasteleyn_matrix(const GridRegion& region) {
    GridGraph g(region);
    std::size_t n = g.cells.size();
    // forward[key] is true when the edge points from the smaller to the larger index.
    std::map<EdgeKey, bool> forward;
    for (std::size_t u = 0; u < n; ++u) {
        auto [r, c] = g.cells[u];
        long east = g.neighbor[u][0], south = g.neighbor[u][1];
        if (east >= 0) forward[key_of(u, static_cast<std::size_t>(east))] = (r % 2 == 0);
        if (south >= 0) forward[key_of(u, static_cast<std::size_t>(south))] = false;  // columns point up
    }
    FaceTrace faces = trace_faces(g);
    auto clockwise_count = [&](std::size_t f) {
        long count = 0;
        for (auto [u, v] : faces.faces[f]) {
            bool along = forward[key_of(u, v)] == (u < v);
            if (!along) ++count;
        }
        return count;
    };
    // Dual adjacency across each edge.
    std::map<EdgeKey, std::vector<std::size_t>> edge_faces;
    for (std::size_t f = 0; f < faces.faces.size(); ++f)
        for (auto [u, v] : faces.faces[f]) edge_faces[key_of(u, v)].push_back(f);
    std::vector<std::vector<std::pair<std::size_t, EdgeKey>>> dual(faces.faces.size());
    for (const auto& [key, fs] : edge_faces)
        if (fs.size() == 2 && fs[0] != fs[1]) {
            dual[fs[0]].emplace_back(fs[1], key);
            dual[fs[1]].emplace_back(fs[0], key);
        }
    for (std::size_t f = 0; f < faces.faces.size(); ++f) {
        if (faces.outer[f] || clockwise_count(f) % 2 == 1) continue;
        // Flip the edges crossed by a dual path to the outer face.
        std::vector<long> prev(faces.faces.size(), -1);
        std::vector<EdgeKey> via(faces.faces.size());
        std::queue<std::size_t> q;
        q.push(f);
        prev[f] = static_cast<long>(f);
        std::optional<std::size_t> target;
        while (!q.empty() && !target) {
            std::size_t x = q.front();
            q.pop();
            for (auto [y, key] : dual[x]) {
                if (prev[y] >= 0) continue;
                prev[y] = static_cast<long>(x);
                via[y] = key;
                if (faces.outer[y]) {
                    target = y;
                    break;
                }
                q.push(y);
            }
        }
        if (!target) throw std::logic_error("bounded face not connected to the outer face");
        for (std::size_t y = *target; y != f; y = static_cast<std::size_t>(prev[y])) forward[via[y]] = !forward[via[y]];
    }
    for (std::size_t f = 0; f < faces.faces.size(); ++f)
        if (!faces.outer[f] && clockwise_count(f) % 2 == 0) throw std::logic_error("orientation repair failed");
    QMatrix s(n, n);
    for (const auto& [key, fwd] : forward) {
        s(key.first, key.second) = fwd ? 1 : -1;
        s(key.second, key.first) = fwd ? -1 : 1;
    }
    return s;
}

Integer kasteleyn_match_count(const GridRegion& region) {
    if (region.size() % 2) return 0;
    if (region.size() == 0) return 1;
    Rational pf = pfaffian(kasteleyn_matrix(region));
    return to_integer(abs(pf));
}

WeightedDag::WeightedDag(Graph graph, std::vector<Rational> weights, std::vector<VertexId> sources,
                         std::vector<VertexId> sinks)
    : graph_(std::move(graph)), weights_(std::move(weights)), sources_(std::move(sources)), sinks_(std::move(sinks)) {
    if (!graph_.directed()) throw Error(ErrorKind::KindMismatch, "routing graph must be directed");
    if (weights_.size() != graph_.edges().size()) throw Error(ErrorKind::BadArgument, "one weight per edge required");
    if (sources_.empty() || sources_.size() != sinks_.size())
        throw Error(ErrorKind::BadArgument, "sources and sinks must be nonempty and of equal length");
    for (VertexId v : sources_)
        if (v >= graph_.vertex_count()) throw Error(ErrorKind::UnknownVertex, "source out of range");
    for (VertexId v : sinks_)
        if (v >= graph_.vertex_count()) throw Error(ErrorKind::UnknownVertex, "sink out of range");
    std::size_t n = graph_.vertex_count();
    std::vector<long> indeg(n, 0);
    for (const auto& e : graph_.edges()) ++indeg[e.to];
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        VertexId u = ready.back();
        ready.pop_back();
        topo_.push_back(u);
        for (const auto& e : graph_.edges())
            if (e.from == u && --indeg[e.to] == 0) ready.push_back(e.to);
    }
    if (topo_.size() != n) throw Error(ErrorKind::CyclicGraph, "routing graph has a directed cycle");
}

WeightedDag::WeightedDag(Graph graph, std::vector<VertexId> sources, std::vector<VertexId> sinks)
    : WeightedDag(graph, std::vector<Rational>(graph.edges().size(), Rational(1)), std::move(sources), std::move(sinks)) {}

QMatrix WeightedDag::path_matrix() const {
    std::size_t n = graph_.vertex_count(), k = sources_.size();
    std::vector<std::vector<std::pair<VertexId, Rational>>> out(n);
    for (std::size_t i = 0; i < graph_.edges().size(); ++i) {
        const auto& e = graph_.edges()[i];
        out[e.from].emplace_back(e.to, weights_[i] * e.multiplicity);
    }
    QMatrix q(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> paths(n);
        paths[sources_[i]] = 1;
        for (VertexId u : topo_) {
            if (paths[u] == 0) continue;
            for (const auto& [v, w] : out[u]) paths[v] += paths[u] * w;
        }
        for (std::size_t j = 0; j < k; ++j) q(i, j) = paths[sinks_[j]];
    }
    return q;
}

Rational lgv_routing_count(const WeightedDag& dag) { return det(dag.path_matrix()); }

WeightedDag hexagon_routing_dag(int n) {
    if (n < 1) throw Error(ErrorKind::BadArgument, "hexagon side must be positive");
    Graph g(true);
    int x0 = -(n - 1), x1 = n, y0 = 0, y1 = 2 * n - 1;
    auto label = [](int x, int y) { return std::to_string(x) + "," + std::to_string(y); };
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y) g.add_vertex(label(x, y));
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y) {
            if (x + 1 <= x1) g.add_edge(label(x, y), label(x + 1, y));
            if (y + 1 <= y1) g.add_edge(label(x, y), label(x, y + 1));
        }
    std::vector<VertexId> sources, sinks;
    for (int i = 0; i < n; ++i) sources.push_back(g.vertex(label(-i, i)));
    for (int j = 0; j < n; ++j) sinks.push_back(g.vertex(label(n - j, n + j)));
    return WeightedDag(std::move(g), std::move(sources), std::move(sinks));
}

Rational hankel_det(const std::vector<Rational>& seq, int n, bool shifted) {
    if (n < 0) throw Error(ErrorKind::BadArgument, "negative Hankel size");
    if (n == 0) return 1;
    std::size_t need = static_cast<std::size_t>(2 * n - 1 + (shifted ? 1 : 0));
    if (seq.size() < need)
        throw Error(ErrorKind::WindowTooShort, "Hankel determinant of size " + std::to_string(n) + " needs " + std::to_string(need) + " terms");
    QMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = seq[i + j + (shifted ? 1 : 0)];
    return det(h);
}

std::optional<std::vector<QMatrix>> dodgson_pyramid(const QMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
    std::size_t n = m.rows();
    std::vector<QMatrix> levels{m};
    if (n == 0) return levels;
    QMatrix below(n + 1, n + 1, Rational(1));
    while (levels.back().rows() > 1) {
        const QMatrix& cur = levels.back();
        std::size_t s = cur.rows() - 1;
        QMatrix next(s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                const Rational& e = below(i + 1, j + 1);
                if (e == 0) return std::nullopt;
                next(i, j) = (cur(i, j) * cur(i + 1, j + 1) - cur(i, j + 1) * cur(i + 1, j)) / e;
            }
        below = cur;
        levels.push_back(std::move(next));
    }
    return levels;
}

Rational dodgson_det(const QMatrix& m) {
    if (m.rows() == 0 && m.square()) return 1;
    auto pyramid = dodgson_pyramid(m);
    if (!pyramid) return det(m);
    return pyramid->back()(0, 0);
}

std::vector<Rational> schroder_numbers(int count) {
    if (count <= 0) return {};
    int order = count + 1;
    Series root = ps_sqrt(Series(std::vector<Rational>{1, -6, 1}, order));
    Series r = ps_shift(Rational(1, 2) * (Series(std::vector<Rational>{1, -1}, order) - root), -1);
    return std::vector<Rational>(r.coeffs().begin(), r.coeffs().begin() + count);
}

std::vector<Rational> catalan_numbers(int count) {
    std::vector<Rational> out;
    for (int n = 0; n < count; ++n) out.emplace_back(binomial(Integer(2 * n), static_cast<unsigned>(n)) / (n + 1));
    return out;
}

Integer aztec_count(int n) {
    if (n < 0) throw Error(ErrorKind::BadArgument, "negative Aztec diamond order");
    return to_integer(hankel_det(schroder_numbers(2 * n + 1), n, true));
}

}  // namespace ec
