#pragma once

#include "ec/cfinite.hpp"
#include "ec/matrix.hpp"
#include "ec/rational.hpp"

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ec {

using VertexId = std::size_t;

struct GraphEdge {
    VertexId from;
    VertexId to;
    long multiplicity;
};

// Finite graph with labelled vertices; parallel edges are stored as multiplicities.
class Graph {
public:
    explicit Graph(bool directed = false) : directed_(directed) {}

    bool directed() const { return directed_; }
    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    long edge_count() const;
    bool has_loops() const;

    VertexId add_vertex(const std::string& label);
    // Adds the vertex if missing.
    VertexId ensure_vertex(const std::string& label);
    // Throws Error(UnknownVertex).
    VertexId vertex(const std::string& label) const;
    std::optional<VertexId> find_vertex(const std::string& label) const;

    void add_edge(VertexId from, VertexId to, long multiplicity = 1);
    void add_edge(const std::string& from, const std::string& to, long multiplicity = 1);

    long out_degree(VertexId v) const;
    long in_degree(VertexId v) const;
    // Undirected degree counts a loop twice.
    long degree(VertexId v) const;

private:
    bool directed_;
    std::vector<std::string> labels_;
    std::map<std::string, VertexId> index_;
    std::vector<GraphEdge> edges_;
};

// "directed|undirected" header, then "u v [multiplicity]" or a lone "u" per line.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

enum class GraphMatrixKind { Adjacency, Laplacian, DirectedLaplacian, Incidence };
QMatrix graph_matrix(const Graph& g, GraphMatrixKind kind);

// Connectivity of the underlying undirected graph restricted to vertices with edges
// (all vertices when include_isolated).
bool is_connected(const Graph& g, bool include_isolated = true);

Integer count_walks(const Graph& g, VertexId u, VertexId v, unsigned n);
RationalGF walk_gf(const Graph& g, VertexId u, VertexId v);
// sum_{n >= 1} tr(A^n) x^n = -x Q'(x) / Q(x), Q = det(I - xA); not reduced.
RationalGF closed_walk_gf(const Graph& g);
Poly transfer_denominator(const Graph& g);

// Kirchhoff; 0 for disconnected graphs. Cofactor index defaults to the last vertex.
Integer spanning_tree_count(const Graph& g, std::optional<VertexId> cofactor = std::nullopt);
// Oriented spanning trees with all edges pointing toward the root.
Integer rooted_tree_count(const Graph& g, VertexId root);
// BEST theorem; cycles counted as edge sequences up to rotation.
Integer eulerian_count(const Graph& g);

// Named families, e.g. "complete:5", "bipartite:2,3", "cube:3", "hyperoctahedral:2",
// "grid:2,3", "cycle:5", "path:4", "wheel:4", "debruijn:2,3", "dcycle:3",
// "dcomplete:3", "monomer-dimer:3", "domino:3".
Graph build_named_graph(const std::string& spec);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph cube_graph(int n);
Graph hyperoctahedral_graph(int n);
Graph grid_graph(int rows, int cols);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph wheel_graph(int rim);
Graph de_bruijn_graph(int k, int n);
Graph directed_cycle(int n);
Graph complete_digraph(int n);
// Column-by-column transfer graph for m-row strips. Labels are bit strings with '1'
// for a cell not covered by a domino from the previous column. Walks 1..1 -> 1..1 of
// length n count tilings of the m x n rectangle.
Graph strip_transfer_graph(int rows, bool monomers);

Graph forbidden_word_automaton(const std::string& alphabet, const std::vector<std::string>& forbidden);

}  // namespace ec
