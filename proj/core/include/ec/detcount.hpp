#pragma once

#include "ec/graphcount.hpp"
#include "ec/matrix.hpp"
#include "ec/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ec {

// Pfaffian by skew-symmetric elimination (simultaneous row/column operations).
Rational pfaffian(const QMatrix& m);

// Unit cells (row, col) of a subregion of the square grid.
class GridRegion {
public:
    using Cell = std::pair<int, int>;

    GridRegion() = default;
    explicit GridRegion(std::set<Cell> cells) : cells_(std::move(cells)) {}
    static GridRegion rectangle(int rows, int cols);
    // '#' marks a cell, '.' or ' ' a hole; one text line per grid row.
    static GridRegion parse(const std::string& art);

    const std::set<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    std::string to_string() const;

private:
    std::set<Cell> cells_;
};

// Skew matrix of the grid graph under a Kasteleyn orientation, cells in row-major order.
// Faces around holes are repaired so that every bounded face has an odd clockwise count.
QMatrix kasteleyn_matrix(const GridRegion& region);
Integer kasteleyn_match_count(const GridRegion& region);

// Directed acyclic graph with rational edge weights (a multi-edge multiplies its weight).
class WeightedDag {
public:
    WeightedDag(Graph graph, std::vector<Rational> weights, std::vector<VertexId> sources, std::vector<VertexId> sinks);
    // Unit weights.
    WeightedDag(Graph graph, std::vector<VertexId> sources, std::vector<VertexId> sinks);

    const Graph& graph() const { return graph_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const std::vector<VertexId>& sources() const { return sources_; }
    const std::vector<VertexId>& sinks() const { return sinks_; }
    const std::vector<VertexId>& topological_order() const { return topo_; }

    // q_ij = weighted number of paths sources[i] -> sinks[j].
    QMatrix path_matrix() const;

private:
    Graph graph_;
    std::vector<Rational> weights_;
    std::vector<VertexId> sources_;
    std::vector<VertexId> sinks_;
    std::vector<VertexId> topo_;
};

Rational lgv_routing_count(const WeightedDag& dag);

// East/north lattice with sources (-i, i) and sinks (n - j, n + j), i, j < n.
// Nonintersecting routings are rhombus tilings of the regular hexagon of side n.
WeightedDag hexagon_routing_dag(int n);

// n x n Hankel determinant det(a_{i+j}) or, shifted, det(a_{i+j+1}), 0 <= i, j < n.
Rational hankel_det(const std::vector<Rational>& seq, int n, bool shifted);

// Condensation pyramid levels A, A^(1), ..., [det]; nullopt when a divisor vanishes.
std::optional<std::vector<QMatrix>> dodgson_pyramid(const QMatrix& m);
// Condensation with fallback to fraction-free elimination on a zero divisor.
Rational dodgson_det(const QMatrix& m);

std::vector<Rational> schroder_numbers(int count);
std::vector<Rational> catalan_numbers(int count);
// Domino tilings of the Aztec diamond as det H'_n of the large Schroder numbers.
Integer aztec_count(int n);

}  // namespace ec
