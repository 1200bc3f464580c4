#pragma once

#include "ec/graphcount.hpp"
#include "ec/poly.hpp"
#include "ec/posetkit.hpp"
#include "ec/rational.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace ec {

// normal . x = offset
struct Hyperplane {
    std::vector<Integer> normal;
    Integer offset;

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

// Affine arrangement in Q^d with integer data. Hyperplanes are stored primitive,
// first nonzero normal entry positive; zero normals and repeats are rejected.
class Arrangement {
public:
    explicit Arrangement(int dimension, std::vector<Hyperplane> hyperplanes = {});

    int dimension() const { return dimension_; }
    std::size_t size() const { return hyperplanes_.size(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_.at(i); }

    bool is_central() const;
    Arrangement without(std::size_t index) const;

private:
    int dimension_;
    std::vector<Hyperplane> hyperplanes_;
};

Hyperplane normalize(Hyperplane h);

// First line d, then "a_1 ... a_d b" per hyperplane.
Arrangement read_arrangement(std::istream& in);
void write_arrangement(std::ostream& out, const Arrangement& a);

Arrangement coordinate_arrangement(int n);
Arrangement braid_arrangement(int n);
Arrangement shi_arrangement(int n);
Arrangement ish_arrangement(int n);
Arrangement catalan_arrangement(int n);
Arrangement linial_arrangement(int n);
Arrangement threshold_arrangement(int n);
Arrangement bc_arrangement(int n);
Arrangement d_arrangement(int n);
// x_i = x_j per edge; throws LoopPresent.
Arrangement graphical_arrangement(const Graph& g);
// Normals (1, t, ..., t^{r-1}) and offset t^r for n distinct t drawn from {1..3n} by a
// seeded generator, so any r + 1 augmented rows are independent.
Arrangement generic_arrangement(int n, int r, std::uint64_t seed = 20240601);
// v.x = b becomes v.x - b x_{d+1} = 0, plus x_{d+1} = 0.
Arrangement cone(const Arrangement& a);
// Arrangement induced on hyperplane `index`, in d - 1 free coordinates.
Arrangement restriction(const Arrangement& a, std::size_t index);
// coordinate:n, braid:n, shi:n, ish:n, catalan:n, linial:n, threshold:n, bc:n, d:n,
// generic:n,r, graphical:<graph spec>, cone:<arrangement spec>.
Arrangement build_named_arrangement(const std::string& spec);

struct CharPoly {
    Poly poly;
    int rank = 0;

    Rational operator()(const Rational& q) const { return poly(q); }
    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.poly == b.poly && a.rank == b.rank; }
};

// Throws if the polynomial is not monic of the given degree with alternating signs.
CharPoly make_char_poly(Poly p, int dimension);

inline constexpr std::uint64_t kDefaultScanCap = 100000000;

// Points of F_q^d on no hyperplane. Throws NotPrime, ScanTooLarge.
Integer complement_count(const Arrangement& a, std::uint64_t q, std::uint64_t cap = kDefaultScanCap);
// sum over F_q^d of t^{number of hyperplanes through the point}.
Poly coboundary_histogram(const Arrangement& a, std::uint64_t q, std::uint64_t cap = kDefaultScanCap);

enum class CharPolyBackend { FiniteField, IntersectionPoset, Whitney };

struct FiniteFieldOptions {
    // Explicit primes (at least d + 1); the first d + 1 interpolate and the rest re-check.
    std::vector<std::uint64_t> primes;
    std::uint64_t scan_cap = kDefaultScanCap;
};

// Primes dividing no nonzero minor of the cone matrix (falls back to primes above the
// Hadamard bound when there are too many minors); d + 3 of them.
std::vector<std::uint64_t> stable_primes(const Arrangement& a);

CharPoly char_poly(const Arrangement& a, CharPolyBackend backend = CharPolyBackend::IntersectionPoset,
                   const FiniteFieldOptions& options = {});

struct RegionCount {
    Integer regions;
    Integer bounded;
};
RegionCount regions(const Arrangement& a);

struct Flat {
    std::vector<std::size_t> hyperplanes;  // all hyperplanes containing the flat
    int dimension = 0;
};

struct IntersectionLattice {
    std::vector<Flat> flats;  // same indexing as the poset elements
    Poset poset;              // reverse inclusion; labels list hyperplane numbers (1-based)
};
IntersectionLattice intersection_lattice(const Arrangement& a);
Poset intersection_poset(const Arrangement& a);
// sum over flats F inside hyperplane `index` of mu(H, F) q^{dim F}.
CharPoly contraction_char_poly(const Arrangement& a, std::size_t index);

CharPoly chromatic_polynomial(const Graph& g);
Integer acyclic_orientations(const Graph& g);

// omega: each "ab" becomes 2d, each remaining letter c.
CdPolynomial omega(const AbPolynomial& ab);
// cd-index of the zonotope: omega(a * ab-index of the intersection lattice). Throws NotCentral.
CdPolynomial arrangement_cd_index(const Arrangement& a);

}  // namespace ec
