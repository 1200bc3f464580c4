#pragma once

#include "ec/arrkit.hpp"
#include "ec/graphcount.hpp"
#include "ec/matrix.hpp"
#include "ec/poly.hpp"
#include "ec/posetkit.hpp"
#include "ec/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ec {

// Subset of the ground set, bit i for element i.
using ElementSet = std::uint64_t;
inline constexpr std::size_t kMaxGroundSize = 64;

// Integer polynomial in two variables; terms keyed by (deg x, deg y).
class BivariatePoly {
public:
    using Exponents = std::pair<int, int>;

    BivariatePoly() = default;
    BivariatePoly(const Integer& constant);
    BivariatePoly(int constant) : BivariatePoly(Integer(constant)) {}
    static BivariatePoly monomial(const Integer& c, int x_degree, int y_degree);
    static BivariatePoly x() { return monomial(1, 1, 0); }
    static BivariatePoly y() { return monomial(1, 0, 1); }

    const std::map<Exponents, Integer>& terms() const { return terms_; }
    Integer coeff(int x_degree, int y_degree) const;
    bool is_zero() const { return terms_.empty(); }
    int x_degree() const;
    int y_degree() const;

    Rational operator()(const Rational& x, const Rational& y) const;
    // Univariate slices: fix one variable, return a polynomial in the other.
    Poly at_x(const Rational& x) const;  // polynomial in y
    Poly at_y(const Rational& y) const;  // polynomial in x
    BivariatePoly swapped() const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

    // Descending in x, then ascending in y, e.g. "x^2+2x+2y+y^2".
    std::string to_string(const std::string& xvar = "x", const std::string& yvar = "y") const;

private:
    void add_term(const Exponents& e, const Integer& c);
    std::map<Exponents, Integer> terms_;
};

BivariatePoly pow(const BivariatePoly& p, unsigned e);

// Rank function on subsets of {0, ..., size-1}. Implementations are immutable.
class RankOracle {
public:
    virtual ~RankOracle() = default;
    virtual std::size_t size() const = 0;
    virtual int rank(ElementSet set) const = 0;
};

struct GraphData {
    std::size_t vertices = 0;
    std::size_t components = 0;  // isolated vertices included
};

class Matroid {
public:
    Matroid(std::vector<std::string> labels, std::shared_ptr<const RankOracle> oracle,
            std::optional<GraphData> graph = std::nullopt);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    ElementSet ground() const;
    // Throws BadSubset for unknown labels.
    ElementSet subset(const std::vector<std::string>& labels) const;
    std::vector<std::string> names(ElementSet set) const;

    int rank(ElementSet set) const;
    int rank() const { return rank(ground()); }
    ElementSet closure(ElementSet set) const;
    bool is_independent(ElementSet set) const;
    bool is_basis(ElementSet set) const;

    const std::shared_ptr<const RankOracle>& oracle() const { return oracle_; }
    // Present for matroids built directly from a graph.
    const std::optional<GraphData>& graph() const { return graph_; }

private:
    std::vector<std::string> labels_;
    std::shared_ptr<const RankOracle> oracle_;
    std::optional<GraphData> graph_;
    struct Cache {
        std::mutex mutex;
        std::unordered_map<ElementSet, int> ranks;
    };
    std::shared_ptr<Cache> cache_;
};

// Throws AxiomViolation unless the list is nonempty, equicardinal and satisfies basis exchange.
Matroid matroid_from_bases(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& bases);
// Columns are the elements; default labels "1".."n".
Matroid matroid_from_matrix(const QMatrix& columns, std::vector<std::string> labels = {});
// Entries reduced mod p; throws NotPrime.
Matroid matroid_from_matrix_mod(const ZMatrix& columns, std::uint64_t p, std::vector<std::string> labels = {});
// One element per edge copy, labelled "u-v" ("u-v#2" for further parallel copies).
Matroid matroid_from_graph(const Graph& g);
Matroid uniform_matroid(int k, int n);
// Seven nonzero vectors of F_2^3.
Matroid fano_matroid();
// Matroid of the normals; throws NotCentral.
Matroid matroid_from_arrangement(const Arrangement& a);
// uniform:k,n, fano, graphic:<graph spec>, arrangement:<arrangement spec>.
Matroid build_named_matroid(const std::string& spec);

struct MatroidQueries {
    std::vector<ElementSet> bases;
    std::vector<ElementSet> circuits;
    std::vector<ElementSet> flats;  // by rank, then bitwise
    ElementSet loops = 0;
    ElementSet coloops = 0;
    std::vector<ElementSet> components;
    Poset lattice_of_flats;  // labels "{a,b}"
    bool geometric = false;  // atomic and semimodular
};

std::vector<ElementSet> matroid_bases(const Matroid& m);
std::vector<ElementSet> matroid_circuits(const Matroid& m);
std::vector<ElementSet> matroid_flats(const Matroid& m);
std::vector<ElementSet> matroid_components(const Matroid& m);
MatroidQueries matroid_queries(const Matroid& m);

Matroid dual(const Matroid& m);
// Both throw BadSubset when the set is not inside the ground set.
Matroid delete_elements(const Matroid& m, ElementSet set);
Matroid contract_elements(const Matroid& m, ElementSet set);
// Labels of the second summand get primes appended on clashes.
Matroid direct_sum(const Matroid& a, const Matroid& b);

enum class TutteBackend { SubsetSum, DeletionContraction, Activities };

inline constexpr std::size_t kSubsetSumLimit = 24;

// SubsetSum throws TooLarge above kSubsetSumLimit elements.
BivariatePoly tutte(const Matroid& m, TutteBackend backend = TutteBackend::DeletionContraction);
// Activities relative to the given element order (a permutation of 0..n-1).
BivariatePoly tutte_by_activities(const Matroid& m, const std::vector<std::size_t>& order);

struct GraphEvaluations {
    std::size_t vertices = 0;
    std::size_t components = 0;
    Poly chromatic;
    Integer acyclic_orientations;
    Integer totally_cyclic_orientations;
    Poly flow;
    std::optional<Poly> reliability;  // connected graphs only
};

struct TutteReport {
    BivariatePoly tutte;
    int rank = 0;
    std::size_t elements = 0;
    Integer bases;
    Integer independent_sets;
    Integer spanning_sets;
    Integer mobius;
    Integer beta;
    Integer reduced_euler;
    std::vector<Integer> f_vector;
    std::vector<Integer> h_vector;
    // Degree rank; an arrangement of this matroid in dimension d has q^{d - rank} times this.
    Poly characteristic;
    std::optional<GraphEvaluations> graph;
};

TutteReport tutte_evaluations(const Matroid& m);
TutteReport tutte_evaluations(const Matroid& m, const BivariatePoly& t);

// (Y - 1)^r T((X + Y - 1)/(Y - 1), Y) and its inverse.
BivariatePoly coboundary_from_tutte(const BivariatePoly& t, int rank);
BivariatePoly tutte_from_coboundary(const BivariatePoly& coboundary, int rank);
BivariatePoly coboundary(const Matroid& m);

// Coboundary histograms at several primes, interpolated in q. Throws NotCentral, PrimeInstability.
BivariatePoly tutte_via_finite_fields(const Arrangement& a, const FiniteFieldOptions& options = {});

}  // namespace ec
