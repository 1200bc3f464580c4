#pragma once

#include "ec/matrix.hpp"
#include "ec/poly.hpp"
#include "ec/posetkit.hpp"
#include "ec/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ec {

inline constexpr std::uint64_t kDefaultScanBudget = 10000000;

// { x in Z^d : A x <= b, C x = e }. The inequalities must not force extra equations;
// the polytope's dimension is d - rank(C).
class LatticePolytope {
public:
    // Throws BadArgument on shape mismatch or when C x = e has no integer solution,
    // Unbounded when some coordinate of the affine-hull lattice is unbounded.
    LatticePolytope(int ambient_dimension, ZMatrix inequalities, std::vector<Integer> bounds,
                    ZMatrix equations = {}, std::vector<Integer> equation_values = {});

    int ambient_dimension() const { return ambient_; }
    int dimension() const { return static_cast<int>(lattice_basis_.cols()); }
    const ZMatrix& inequalities() const { return a_; }
    const std::vector<Integer>& bounds() const { return b_; }
    const ZMatrix& equations() const { return c_; }
    const std::vector<Integer>& equation_values() const { return e_; }

    // Points of the affine hull are origin + basis * y for integer y.
    const std::vector<Integer>& lattice_origin() const { return origin_; }
    const ZMatrix& lattice_basis() const { return lattice_basis_; }

    bool contains(const std::vector<Integer>& x, const Integer& dilation = 1) const;

    struct Projection;

private:
    int ambient_;
    ZMatrix a_;
    std::vector<Integer> b_;
    ZMatrix c_;
    std::vector<Integer> e_;
    std::vector<Integer> origin_;
    ZMatrix lattice_basis_;
    std::shared_ptr<const Projection> projection_;

    friend Integer count_points(const LatticePolytope&, std::uint64_t, bool, std::uint64_t);
};

// Delta_k = { x in R^{k+1} : x >= 0, sum x = 1 }.
LatticePolytope standard_simplex(int k);
// [0, 1]^d.
LatticePolytope unit_cube(int d);
// sum |x_i| <= 1, as 2^d inequalities.
LatticePolytope crosspolytope(int d);
// { x in [0, 1]^d : sum x = r }.
LatticePolytope hypersimplex(int r, int d);
// 0 <= x <= 1 and x_a <= x_b for each cover a < b.
LatticePolytope order_polytope(const Poset& p);
// x >= 0 and the sum over each maximal chain at most 1.
LatticePolytope chain_polytope(const Poset& p);
// Convex hull of integer points in the plane. Throws NotLatticePolygon when degenerate.
LatticePolytope lattice_polygon(const std::vector<std::pair<long, long>>& points);
// simplex:k, cube:d, cross:d, hypersimplex:r,d, order:<poset spec>, chain:<poset spec>,
// polygon:x,y;x,y;...
LatticePolytope build_named_polytope(const std::string& spec);

// |nP ∩ Z^d| or, with interior, the relative interior count. Throws ScanTooLarge.
Integer count_points(const LatticePolytope& p, std::uint64_t n, bool interior = false,
                     std::uint64_t budget = kDefaultScanBudget);

struct EhrhartData {
    int dimension = 0;
    Poly closed;    // L_P
    Poly interior;  // L_{P°}, interpolated from direct counts
    std::vector<Integer> h_star;
    Rational volume;           // leading coefficient of L_P
    Integer normalized_volume;  // dimension! * volume
    bool reciprocity = false;  // (-1)^dim L_P(-x) == L_{P°}(x)
};

// Interpolates from n = 0..dim and re-checks at dim + 1 (BadArgument on mismatch).
EhrhartData ehrhart_polynomial(const LatticePolytope& p, std::uint64_t budget = kDefaultScanBudget);

struct ReciprocityRow {
    std::uint64_t n = 0;
    Integer predicted;  // (-1)^dim L_P(-n)
    Integer counted;
};
struct ReciprocityReport {
    std::vector<ReciprocityRow> rows;
    bool holds = false;
};
ReciprocityReport reciprocity_check(const LatticePolytope& p, std::uint64_t upto,
                                    std::uint64_t budget = kDefaultScanBudget);

// Numerator of the Ehrhart series over (1 - z)^{dim+1}. Throws NonIntegralHStar unless
// nonnegative with h*_0 = 1.
std::vector<Integer> h_star(const LatticePolytope& p, std::uint64_t budget = kDefaultScanBudget);
std::vector<Integer> h_star_from_counts(const std::vector<Integer>& counts, int dimension);

struct PickReport {
    Rational area;
    Integer interior;
    Integer boundary;
    std::vector<Rational> coefficients;  // L_P coefficients, constant first
    bool consistent = false;             // L_P = area n^2 + B/2 n + 1 and area = I + B/2 - 1
};
// Throws NotTwoDimensional.
PickReport pick_check(const LatticePolytope& polygon, std::uint64_t budget = kDefaultScanBudget);

struct PosetPolytopeReport {
    EhrhartData order;
    EhrhartData chain;
    Poly shifted_order_polynomial;  // Omega_P(n + 1)
    Integer linear_extensions;
    Rational expected_volume;  // e(P) / |P|!
    bool ehrhart_match = false;
    bool volume_match = false;
};
PosetPolytopeReport poset_polytope_bridge(const Poset& p, std::uint64_t budget = kDefaultScanBudget);

}  // namespace ec
