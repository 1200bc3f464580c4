#pragma once

#include "ec/poly.hpp"
#include "ec/rational.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ec {

using ElementId = std::size_t;

// Finite partial order; immutable once built. Elements are indexed 0..size()-1.
class Poset {
public:
    Poset() = default;

    // Throws NotAntisymmetric or CycleDetected.
    static Poset from_covers(std::vector<std::string> labels, const std::vector<std::pair<ElementId, ElementId>>& covers);
    // Any generating relation; its reflexive-transitive closure is taken.
    static Poset from_relation(std::vector<std::string> labels, const std::vector<std::pair<ElementId, ElementId>>& less);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(ElementId x) const { return labels_.at(x); }
    std::optional<ElementId> find(const std::string& label) const;
    // Throws Error(BadArgument).
    ElementId element(const std::string& label) const;

    bool leq(ElementId a, ElementId b) const { return (up_[a][b >> 6] >> (b & 63)) & 1U; }
    bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
    bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }

    const std::vector<std::pair<ElementId, ElementId>>& covers() const { return covers_; }
    const std::vector<std::vector<ElementId>>& upper_covers() const { return upper_; }
    const std::vector<std::vector<ElementId>>& lower_covers() const { return lower_; }
    // A linear extension, fixed at construction.
    const std::vector<ElementId>& linear_order() const { return order_; }

    std::optional<ElementId> bottom() const;
    std::optional<ElementId> top() const;
    // rank(x) = length of chains from a minimal element, when every cover raises it by one
    // and all minimal elements have rank 0.
    std::optional<std::vector<int>> rank_function() const;

    Poset dual() const;
    Poset induced(const std::vector<ElementId>& keep) const;

private:
    void finish();

    std::vector<std::string> labels_;
    std::map<std::string, ElementId> index_;
    std::vector<std::vector<std::uint64_t>> up_;  // up_[a] has bit b iff a <= b
    std::vector<std::pair<ElementId, ElementId>> covers_;
    std::vector<std::vector<ElementId>> upper_, lower_;
    std::vector<ElementId> order_;
};

// "u < v" per line (a lone label declares an element); '#' starts a comment.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

// Function on the intervals [x, y], x <= y, of a fixed poset.
class IncidenceFunction {
public:
    explicit IncidenceFunction(const Poset& p);

    std::size_t size() const { return n_; }
    bool defined(ElementId x, ElementId y) const { return leq_[x * n_ + y]; }
    // Throws Error(NotComparable) outside the intervals.
    const Rational& operator()(ElementId x, ElementId y) const;
    Rational& operator()(ElementId x, ElementId y);

    friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
        return a.leq_ == b.leq_ && a.values_ == b.values_;
    }

private:
    std::size_t n_ = 0;
    std::vector<bool> leq_;
    std::vector<Rational> values_;
};

IncidenceFunction zeta_function(const Poset& p);
IncidenceFunction delta_function(const Poset& p);
IncidenceFunction convolve(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g);

enum class MobiusRecursion { Lower, Upper };
IncidenceFunction mobius(const Poset& p, MobiusRecursion recursion = MobiusRecursion::Lower);

enum class InversionDirection { Up, Down };
// g(x) = sum of f(y) over y >= x (Up) or y <= x (Down).
std::vector<Rational> order_sum(const Poset& p, const std::vector<Rational>& f, InversionDirection dir);
// Recovers f from g = order_sum(f) via the Möbius function, then re-sums to check.
std::vector<Rational> mobius_inversion(const Poset& p, const std::vector<Rational>& g, InversionDirection dir);

// counts[i] = number of chains with i + 1 elements.
std::vector<Integer> chain_counts(const Poset& p);
// Number of multichains x_1 <= ... <= x_{k-1}, as a polynomial in k.
Poly zeta_polynomial(const Poset& p);

// Default cap on |P| for bitmask ideal computations.
inline constexpr std::size_t kDefaultIdealCap = 24;

// Order ideals ordered by inclusion; labels list ideal members as "{a,b}".
Poset ideal_lattice(const Poset& p, std::size_t cap = kDefaultIdealCap);
// Subposet of elements covering exactly one element.
Poset join_irreducibles(const Poset& lattice);
Poly order_polynomial(const Poset& p, std::size_t cap = kDefaultIdealCap);
Integer linear_extensions(const Poset& p, std::size_t cap = kDefaultIdealCap);

struct LatticeReport {
    bool is_lattice = false;
    bool is_distributive = false;
    // Indexed [x][y]; nullopt where no meet or join exists.
    std::vector<std::vector<std::optional<ElementId>>> meets;
    std::vector<std::vector<std::optional<ElementId>>> joins;
};
LatticeReport lattice_ops(const Poset& p);

using AbPolynomial = std::map<std::string, Integer>;
using CdPolynomial = std::map<std::string, Integer>;

std::string to_string_ab(const AbPolynomial& ab);
std::string to_string_cd(const CdPolynomial& cd);
// Expands c = a + b, d = ab + ba.
AbPolynomial expand_cd(const CdPolynomial& cd);
// Throws NotEulerian when no cd-form exists.
CdPolynomial ab_to_cd(const AbPolynomial& ab);

// Subsets of {1..rank-1} ordered by size, then lexicographically.
std::vector<std::vector<int>> rank_subsets(int rank);

struct FlagData {
    int rank = 0;
    std::vector<std::vector<int>> sets;
    std::vector<Integer> flag_f;
    std::vector<Integer> flag_h;
    AbPolynomial ab;
    std::optional<CdPolynomial> cd;  // nullopt when not Eulerian
};

// Letter i of a word is 'b' exactly when rank i + 1 is in the set.
FlagData flag_data_from_f(int rank, const std::vector<Integer>& flag_f);
// Requires a graded poset with bottom and top (NotGraded otherwise).
FlagData flag_and_cd(const Poset& p);
bool is_eulerian(const Poset& p);
// Throws NotEulerian.
CdPolynomial cd_index(const Poset& p);

// Named builders.
Poset chain_poset(int n);
Poset antichain_poset(int n);
Poset boolean_lattice(int n);
Poset divisor_lattice(long n);
Poset partition_lattice(int n);
Poset noncrossing_lattice(int n);
Poset bruhat_order(int n);
Poset product(const Poset& a, const Poset& b);
Poset disjoint_sum(const Poset& a, const Poset& b);
// Face lattice of the prism over a k-gon, with empty face and whole polytope.
Poset prism_face_lattice(int k);
// chain, antichain, boolean, divisor, partition, noncrossing, bruhat, prism, grid:a,b.
Poset build_named_poset(const std::string& spec);

}  // namespace ec
