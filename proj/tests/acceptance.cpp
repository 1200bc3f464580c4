// Acceptance run: one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails that is not listed as unattainable.

#include "cli.hpp"

#include "ec/arrkit.hpp"
#include "ec/cfinite.hpp"
#include "ec/detcount.hpp"
#include "ec/ehrhartkit.hpp"
#include "ec/graphcount.hpp"
#include "ec/matroidkit.hpp"
#include "ec/posetkit.hpp"
#include "ec/powser.hpp"
#include "poset_testing.hpp"
#include "test_util.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace ec;
using namespace ec::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string group;
    std::string name;
    std::function<Outcome()> check;
    std::optional<std::string> unattainable;
};

template <typename T>
std::string text(const T& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + ec::to_string(v[i]);
    return s;
}

Outcome equal(const std::string& expected, const std::string& got) {
    return {expected == got, expected == got ? got : "expected " + expected + ", got " + got};
}

Outcome all_of(const std::vector<Outcome>& parts, const std::string& summary) {
    for (const auto& p : parts)
        if (!p.pass) return p;
    return {true, summary};
}

std::vector<Rational> head(const Series& s, int count) {
    return std::vector<Rational>(s.coeffs().begin(), s.coeffs().begin() + count);
}

// ---- oracles ----

// Sum over compositions of n into parts 1 and 2 of the number of 1-parts.
Integer brute_unit_parts(int n) {
    Integer total = 0;
    std::function<void(int, int)> rec = [&](int left, int ones) {
        if (left == 0) {
            total += ones;
            return;
        }
        rec(left - 1, ones + 1);
        if (left >= 2) rec(left - 2, ones);
    };
    rec(n, 0);
    return total;
}

// Words of length n over {a, b} with no forbidden factor read cyclically.
long brute_cyclic_words(int n, const std::vector<std::string>& forbidden) {
    long count = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        auto at = [&](int i) { return (mask >> (i % n)) & 1U ? 'b' : 'a'; };
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (const auto& w : forbidden) {
                bool match = true;
                for (std::size_t j = 0; j < w.size() && match; ++j) match = at(i + static_cast<int>(j)) == w[j];
                if (match) ok = false;
            }
        count += ok;
    }
    return count;
}

// Eulerian circuits by backtracking, as edge sequences starting with edge copy 0.
long brute_eulerian(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : g.edges())
        for (long k = 0; k < e.multiplicity; ++k) edges.emplace_back(e.from, e.to);
    std::vector<bool> used(edges.size());
    used[0] = true;
    long count = 0;
    std::function<void(VertexId, std::size_t)> rec = [&](VertexId at, std::size_t depth) {
        if (depth == edges.size()) {
            count += at == edges[0].first;
            return;
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (used[i] || edges[i].first != at) continue;
            used[i] = true;
            rec(edges[i].second, depth + 1);
            used[i] = false;
        }
    };
    rec(edges[0].second, 1);
    return count;
}

Integer brute_linear_extensions(const Poset& p) {
    Integer count = 0;
    for_each_permutation(static_cast<int>(p.size()), [&](const std::vector<int>& perm) {
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (p.less(static_cast<ElementId>(perm[j]), static_cast<ElementId>(perm[i]))) return;
        ++count;
    });
    return count;
}

QMatrix random_skew(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> entry(-4, 4);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = entry(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

Rational hexagon_product(int n) {
    Rational p = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) p *= make_rational(i + j + k - 1, i + j + k - 2);
    return p;
}

Integer brute_lattice_count(const LatticePolytope& p, long n, bool interior, long radius) {
    std::size_t d = static_cast<std::size_t>(p.ambient_dimension());
    std::vector<long> x(d, -n * radius);
    Integer count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < p.inequalities().rows() && ok; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < d; ++j) s += p.inequalities()(i, j) * x[j];
            Integer rhs = p.bounds()[i] * n;
            ok = interior ? s < rhs : s <= rhs;
        }
        for (std::size_t i = 0; i < p.equations().rows() && ok; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < d; ++j) s += p.equations()(i, j) * x[j];
            ok = s == p.equation_values()[i] * n;
        }
        count += ok;
        std::size_t j = 0;
        while (j < d && x[j] == n * radius) x[j++] = -n * radius;
        if (j == d) break;
        ++x[j];
    }
    return count;
}

// ---- criteria ----

std::vector<Criterion> fibonacci() {
    std::vector<Criterion> c;
    c.push_back({"fibonacci", "nth_term(11) = 144",
                 [] { return equal("144", ec::to_string(nth_term(fibonacci_recurrence(), 11))); }});
    c.push_back({"fibonacci", "inverse of 1-x-x^2 gives the first 20 terms", [] {
                     Series inv = ps_inverse(Series::from_poly(Poly(Q({1, -1, -1})), 19));
                     return equal(join(fibonacci_recurrence().terms(20)), join(head(inv, 20)));
                 }});
    c.push_back({"fibonacci", "binomial sum by composition", [] {
                     Series composed = ps_compose(Series::geometric(1, 19), Series::from_poly(Poly(Q({0, 1, 1})), 19));
                     std::vector<Rational> sums;
                     for (int n = 0; n < 20; ++n) {
                         Integer s = 0;
                         for (int k = 0; 2 * k <= n; ++k) s += binomial(Integer(n - k), static_cast<unsigned>(k));
                         sums.emplace_back(s);
                     }
                     return equal(join(sums), join(head(composed, 20)));
                 }});
    c.push_back({"fibonacci", "dominant growth within 1e-4 of the golden ratio", [] {
                     double g = dominant_growth(rec_to_gf(fibonacci_recurrence()));
                     double phi = (1 + std::sqrt(5.0)) / 2;
                     return Outcome{std::abs(g - phi) < 1e-4, text(g)};
                 }});
    c.push_back({"fibonacci", "vertical-tile expectation x/(1-x-x^2)^2, 10 terms", [] {
                     auto family = [](const Rational& v) {
                         return ps_inverse(Series::from_poly(Poly({Rational(1), -v, Rational(-1)}), 9));
                     };
                     Series derivative = parameter_derivative(family, 1, 10);
                     Series closed = ps_shift(ps_inverse(ps_pow(Series::from_poly(Poly(Q({1, -1, -1})), 9), 2)), 1);
                     std::vector<Rational> brute;
                     for (int n = 0; n < 10; ++n) brute.emplace_back(brute_unit_parts(n));
                     return all_of({equal(join(head(closed, 10)), join(head(derivative, 10))),
                                    equal(join(brute), join(head(derivative, 10)))},
                                   join(head(derivative, 10)));
                 }});
    return c;
}

std::vector<Criterion> tilings() {
    std::vector<Criterion> c;
    c.push_back({"tilings", "2 x n Kasteleyn counts are shifted Fibonacci, n <= 10", [] {
                     std::vector<Rational> fib = fibonacci_recurrence().terms(11);
                     std::vector<Outcome> parts;
                     for (int n = 1; n <= 10; ++n) {
                         Integer k = kasteleyn_match_count(GridRegion::rectangle(2, n));
                         parts.push_back(equal(ec::to_string(fib[static_cast<std::size_t>(n)]), ec::to_string(k)));
                         parts.push_back(equal(std::to_string(count_rectangle_tilings(2, n, false)), ec::to_string(k)));
                     }
                     return all_of(parts, "n = 1..10");
                 }});
    c.push_back({"tilings", "3 x n monomer-dimer walk GF", [] {
                     Graph t = strip_transfer_graph(3, true);
                     VertexId full = t.vertex("111");
                     Series s = walk_gf(t, full, full).series(7);
                     std::vector<Outcome> parts{equal("1,3,22,131,823,5096,31687,196785", join(head(s, 8)))};
                     for (int n = 0; n <= 6; ++n)
                         parts.push_back(equal(std::to_string(count_rectangle_tilings(3, n, true)), ec::to_string(s[n])));
                     return all_of(parts, join(head(s, 8)));
                 }});
    c.push_back({"tilings", "gf_to_rec of (1-x)/(1-3x-x^2+x^3) predicts 2 x n tiler, n <= 8", [] {
                     LinearRecurrence r = gf_to_rec(RationalGF(Poly(Q({1, -1})), Poly(Q({1, -3, -1, 1}))));
                     std::vector<Rational> brute;
                     for (int n = 0; n <= 8; ++n) brute.emplace_back(count_rectangle_tilings(2, n, true));
                     return equal(join(brute), join(r.terms(9)));
                 }});
    return c;
}

std::vector<Criterion> forbidden() {
    return {{"words", "closed walks of the aa/abba automaton", [] {
                 Graph g = forbidden_word_automaton("ab", {"aa", "abba"});
                 Series s = closed_walk_gf(g).series(9);
                 std::vector<Rational> brute{0};
                 for (int n = 1; n <= 9; ++n) brute.emplace_back(brute_cyclic_words(n, {"aa", "abba"}));
                 return all_of({equal("0,1,3,1,7,6,15,15,31,37", join(head(s, 10))), equal(join(brute), join(head(s, 10)))},
                               join(head(s, 10)));
             }}};
}

std::vector<Criterion> trees() {
    std::vector<Criterion> c;
    for (auto [spec, expected] : std::vector<std::pair<std::string, std::string>>{
             {"complete:4", "16"}, {"complete:5", "125"}, {"bipartite:2,3", "12"}, {"cube:3", "384"}})
        c.push_back({"trees", "spanning trees of " + spec,
                     [spec = spec, expected = expected] { return equal(expected, ec::to_string(spanning_tree_count(build_named_graph(spec)))); }});
    c.push_back({"trees", "Eulerian circuits of B(2,3) = 2, by BEST and backtracking", [] {
                     Graph g = de_bruijn_graph(2, 3);
                     return all_of({equal("2", ec::to_string(eulerian_count(g))), equal("2", std::to_string(brute_eulerian(g)))}, "2");
                 }});
    c.push_back({"trees", "Eulerian circuits of B(2,4) = (2!)^8/2^4 = 16",
                 [] { return equal("16", ec::to_string(eulerian_count(de_bruijn_graph(2, 4)))); }});
    return c;
}

std::vector<Criterion> determinants() {
    std::vector<Criterion> c;
    c.push_back({"determinants", "Pf^2 = det on 100 random skew matrices to dimension 10", [] {
                     std::mt19937_64 rng(kDefaultSeed);
                     for (int t = 0; t < 100; ++t) {
                         std::size_t n = 2 + 2 * static_cast<std::size_t>(t % 5);
                         QMatrix m = random_skew(rng, n);
                         Rational pf = pfaffian(m);
                         if (pf * pf != det(m)) return Outcome{false, "trial " + std::to_string(t)};
                     }
                     return Outcome{true, "100 matrices"};
                 }});
    c.push_back({"determinants", "Catalan Hankel determinants are 1, n <= 6", [] {
                     std::vector<Rational> cat = catalan_numbers(14);
                     std::vector<Outcome> parts;
                     for (int n = 1; n <= 6; ++n) parts.push_back(equal("1", ec::to_string(hankel_det(cat, n, false))));
                     return all_of(parts, "n = 1..6");
                 }});
    c.push_back({"determinants", "Aztec counts 2, 8, 64, 1024, 32768 with condensation recurrence", [] {
                     std::vector<Outcome> parts;
                     std::string got;
                     for (int n = 1; n <= 5; ++n) {
                         got += (n > 1 ? "," : "") + ec::to_string(aztec_count(n));
                         Integer prev = aztec_count(n - 1), cur = aztec_count(n), next = aztec_count(n + 1);
                         parts.push_back(equal(ec::to_string(Integer(2 * cur * cur)), ec::to_string(Integer(prev * next))));
                     }
                     parts.insert(parts.begin(), equal("2,8,64,1024,32768", got));
                     return all_of(parts, got);
                 }});
    c.push_back({"determinants", "hexagon routings match the triple product, n <= 4", [] {
                     std::vector<Outcome> parts;
                     for (int n = 1; n <= 4; ++n)
                         parts.push_back(equal(ec::to_string(hexagon_product(n)), ec::to_string(lgv_routing_count(hexagon_routing_dag(n)))));
                     return all_of(parts, "n = 1..4");
                 }});
    c.push_back({"determinants", "condensation example matrix gives 21",
                 [] {
                     QMatrix a{{2, 7, 5, 4}, {1, 9, 7, 7}, {2, 3, 2, 1}, {5, 7, 6, 3}};
                     return equal("21", ec::to_string(dodgson_det(a)));
                 },
                 "condensation, elimination and cofactor expansion all give -7"});
    return c;
}

std::vector<Criterion> posets() {
    std::vector<Criterion> c;
    c.push_back({"posets", "mu(Pi_n) = (-1)^(n-1) (n-1)!, n <= 6", [] {
                     std::vector<Outcome> parts;
                     for (int n = 1; n <= 6; ++n) {
                         Poset p = partition_lattice(n);
                         Integer expected = factorial(static_cast<unsigned>(n - 1));
                         if (n % 2 == 0) expected = -expected;
                         parts.push_back(equal(ec::to_string(expected), ec::to_string(mobius(p)(*p.bottom(), *p.top()))));
                     }
                     return all_of(parts, "n = 1..6");
                 }});
    c.push_back({"posets", "mu(NC_n) = +-Catalan via Z(-1), n <= 6", [] {
                     std::vector<Rational> cat = catalan_numbers(7);
                     std::vector<Outcome> parts;
                     for (int n = 1; n <= 6; ++n) {
                         Poset p = noncrossing_lattice(n);
                         Rational expected = n % 2 ? cat[static_cast<std::size_t>(n - 1)] : Rational(-cat[static_cast<std::size_t>(n - 1)]);
                         parts.push_back(equal(ec::to_string(expected), ec::to_string(zeta_polynomial(p)(-1))));
                         parts.push_back(equal(ec::to_string(expected), ec::to_string(mobius(p)(*p.bottom(), *p.top()))));
                     }
                     return all_of(parts, "n = 1..6");
                 }});
    c.push_back({"posets", "linear extensions of 2 x n grids are Catalan, n <= 6", [] {
                     std::vector<Rational> cat = catalan_numbers(7);
                     std::vector<Outcome> parts;
                     for (int n = 1; n <= 6; ++n) {
                         Poset p = product(chain_poset(2), chain_poset(n));
                         Integer e = linear_extensions(p);
                         parts.push_back(equal(ec::to_string(cat[static_cast<std::size_t>(n)]), ec::to_string(e)));
                         if (n <= 4) parts.push_back(equal(ec::to_string(brute_linear_extensions(p)), ec::to_string(e)));
                     }
                     return all_of(parts, "n = 1..6");
                 }});
    c.push_back({"posets", "prism flag data gives c^3+6cd+10dc", [] {
                     FlagData d = flag_and_cd(prism_face_lattice(6));
                     if (!d.cd) return Outcome{false, "not Eulerian"};
                     return equal("c^3+6cd+10dc", to_string_cd(*d.cd));
                 }});
    return c;
}

Arrangement four_planes() {
    return Arrangement(3, {Hyperplane{{1, 0, 0}, 0}, Hyperplane{{0, 1, 0}, 0}, Hyperplane{{1, -1, 0}, 0},
                           Hyperplane{{0, 0, 1}, 0}});
}

std::vector<Criterion> arrangements() {
    std::vector<Criterion> c;
    c.push_back({"arrangements", "three characteristic polynomial backends agree", [] {
                     std::vector<Outcome> parts;
                     for (const char* spec : {"braid:2", "braid:3", "braid:4", "shi:2", "shi:3", "shi:4", "catalan:2", "catalan:3",
                                              "coordinate:2", "coordinate:3", "coordinate:4", "bc:2", "d:3"}) {
                         Arrangement a = build_named_arrangement(spec);
                         std::string poset = char_poly(a, CharPolyBackend::IntersectionPoset).poly.to_string("q");
                         parts.push_back(equal(poset, char_poly(a, CharPolyBackend::Whitney).poly.to_string("q")));
                         parts.push_back(equal(poset, char_poly(a, CharPolyBackend::FiniteField).poly.to_string("q")));
                     }
                     return all_of(parts, "13 arrangements");
                 }});
    c.push_back({"arrangements", "region counts: braid n!, Shi (n+1)^(n-1) and (n-1)^(n-1), BC 2^n n!, D 2^(n-1) n!", [] {
                     std::vector<Outcome> parts;
                     for (int n = 2; n <= 4; ++n) {
                         unsigned u = static_cast<unsigned>(n);
                         parts.push_back(equal(ec::to_string(factorial(u)), ec::to_string(regions(braid_arrangement(n)).regions)));
                         RegionCount shi = regions(shi_arrangement(n));
                         parts.push_back(equal(ec::to_string(ipow(n + 1, u - 1)), ec::to_string(shi.regions)));
                         parts.push_back(equal(ec::to_string(ipow(n - 1, u - 1)), ec::to_string(shi.bounded)));
                         parts.push_back(equal(ec::to_string(Integer(ipow(2, u) * factorial(u))), ec::to_string(regions(bc_arrangement(n)).regions)));
                         if (n >= 2)
                             parts.push_back(equal(ec::to_string(Integer(ipow(2, u - 1) * factorial(u))), ec::to_string(regions(d_arrangement(n)).regions)));
                     }
                     return all_of(parts, "n = 2..4");
                 }});
    c.push_back({"arrangements", "four planes: q^3-4q^2+5q-2 and c^3+6cd+10dc", [] {
                     Arrangement a = four_planes();
                     Poly expected(Q({-2, 5, -4, 1}));
                     return all_of({equal(expected.to_string("q"), char_poly(a).poly.to_string("q")),
                                    equal("c^3+6cd+10dc", to_string_cd(arrangement_cd_index(a)))},
                                   expected.to_string("q"));
                 }});
    return c;
}

std::vector<std::pair<std::string, Matroid>> matroid_corpus() {
    std::vector<std::pair<std::string, Matroid>> out;
    for (const char* spec : {"uniform:2,4", "uniform:3,6", "uniform:4,8", "fano", "graphic:complete:4", "graphic:wheel:4",
                             "graphic:complete:5", "graphic:cycle:6", "graphic:bipartite:3,3", "arrangement:braid:4",
                             "arrangement:bc:3", "arrangement:coordinate:3"})
        out.emplace_back(spec, build_named_matroid(spec));
    return out;
}

std::vector<Criterion> matroids() {
    std::vector<Criterion> c;
    c.push_back({"matroids", "three Tutte backends agree on the corpus (<= 12 elements)", [] {
                     std::vector<Outcome> parts;
                     for (const auto& [name, m] : matroid_corpus()) {
                         if (m.size() > 12) return Outcome{false, name + " exceeds 12 elements"};
                         std::string dc = tutte(m, TutteBackend::DeletionContraction).to_string();
                         parts.push_back(equal(dc, tutte(m, TutteBackend::SubsetSum).to_string()));
                         parts.push_back(equal(dc, tutte(m, TutteBackend::Activities).to_string()));
                     }
                     return all_of(parts, std::to_string(matroid_corpus().size()) + " matroids");
                 }});
    c.push_back({"matroids", "T(U_{2,4}) = x^2+2x+2y+y^2",
                 [] { return equal("x^2+2x+2y+y^2", tutte(uniform_matroid(2, 4)).to_string()); }});
    c.push_back({"matroids", "duality swaps x and y; direct sums multiply", [] {
                     std::vector<Outcome> parts;
                     auto corpus = matroid_corpus();
                     for (const auto& [name, m] : corpus)
                         parts.push_back(equal(tutte(m).swapped().to_string(), tutte(dual(m)).to_string()));
                     for (std::size_t i = 0; i + 1 < corpus.size(); i += 3) {
                         const Matroid& a = corpus[i].second;
                         const Matroid& b = uniform_matroid(1, 3);
                         parts.push_back(equal((tutte(a) * tutte(b)).to_string(), tutte(direct_sum(a, b)).to_string()));
                     }
                     return all_of(parts, "corpus");
                 }});
    c.push_back({"matroids", "Fano plane has 28 bases",
                 [] { return equal("28", std::to_string(matroid_bases(fano_matroid()).size())); }});
    c.push_back({"matroids", "T(1,1) equals spanning trees on K_4 and W_4", [] {
                     std::vector<Outcome> parts;
                     for (const char* spec : {"complete:4", "wheel:4"}) {
                         Graph g = build_named_graph(spec);
                         parts.push_back(equal(ec::to_string(spanning_tree_count(g)), ec::to_string(tutte(matroid_from_graph(g))(1, 1))));
                     }
                     return all_of(parts, "K_4, W_4");
                 }});
    c.push_back({"matroids", "finite-field Tutte equals subset-sum Tutte on braid(3), coordinate(2), BC_2", [] {
                     std::vector<Outcome> parts;
                     for (const char* spec : {"braid:3", "coordinate:2", "bc:2"}) {
                         Arrangement a = build_named_arrangement(spec);
                         parts.push_back(equal(tutte(matroid_from_arrangement(a), TutteBackend::SubsetSum).to_string(),
                                               tutte_via_finite_fields(a).to_string()));
                     }
                     return all_of(parts, "3 arrangements");
                 }});
    return c;
}

struct PolytopeCase {
    std::string spec;
    long radius;
};

std::vector<PolytopeCase> polytope_corpus() {
    return {{"simplex:1", 1}, {"simplex:2", 1}, {"simplex:3", 1}, {"simplex:4", 1}, {"cube:1", 1},
            {"cube:2", 1},    {"cube:3", 1},    {"cross:1", 1},   {"cross:2", 1},   {"cross:3", 1},
            {"hypersimplex:2,4", 1}, {"order:grid:2,2", 1}, {"chain:grid:2,2", 1}, {"polygon:0,0;3,1;1,2", 3}};
}

std::vector<Criterion> ehrhart() {
    std::vector<Criterion> c;
    c.push_back({"ehrhart", "closed forms for simplices (d <= 4), cubes (d <= 3), crosspolytopes (d <= 3)", [] {
                     std::vector<Outcome> parts;
                     for (int d = 1; d <= 4; ++d)
                         parts.push_back(equal(binomial_poly(Poly::x() + Poly(d), static_cast<unsigned>(d)).to_string("n"),
                                               ehrhart_polynomial(standard_simplex(d)).closed.to_string("n")));
                     for (int d = 1; d <= 3; ++d)
                         parts.push_back(equal(pow(Poly::x() + Poly(1), static_cast<unsigned>(d)).to_string("n"),
                                               ehrhart_polynomial(unit_cube(d)).closed.to_string("n")));
                     for (int d = 1; d <= 3; ++d) {
                         Poly expected;
                         for (int k = 0; k <= d; ++k)
                             expected += Poly(Rational(binomial(Integer(d), static_cast<unsigned>(k)) * ipow(2, static_cast<unsigned>(k)))) *
                                         binomial_poly(Poly::x(), static_cast<unsigned>(k));
                         parts.push_back(equal(expected.to_string("n"), ehrhart_polynomial(crosspolytope(d)).closed.to_string("n")));
                     }
                     return all_of(parts, "10 polytopes");
                 }});
    c.push_back({"ehrhart", "reciprocity against direct interior scans to dilation 4", [] {
                     std::vector<Outcome> parts;
                     for (const auto& pc : polytope_corpus()) {
                         LatticePolytope p = build_named_polytope(pc.spec);
                         ReciprocityReport r = reciprocity_check(p, 4);
                         for (const auto& row : r.rows) {
                             parts.push_back(equal(ec::to_string(row.predicted), ec::to_string(row.counted)));
                             if (row.n <= 2)
                                 parts.push_back(equal(ec::to_string(brute_lattice_count(p, static_cast<long>(row.n), true, pc.radius)),
                                                       ec::to_string(row.counted)));
                         }
                     }
                     return all_of(parts, std::to_string(polytope_corpus().size()) + " polytopes");
                 }});
    c.push_back({"ehrhart", "h* nonnegative with h*_0 = 1 everywhere", [] {
                     for (const auto& pc : polytope_corpus()) {
                         std::vector<Integer> h = ehrhart_polynomial(build_named_polytope(pc.spec)).h_star;
                         if (h.empty() || h[0] != 1) return Outcome{false, pc.spec};
                         for (const auto& v : h)
                             if (v < 0) return Outcome{false, pc.spec};
                     }
                     return Outcome{true, std::to_string(polytope_corpus().size()) + " polytopes"};
                 }});
    c.push_back({"ehrhart", "L_O(P)(n) = Omega_P(n+1) for posets with <= 6 elements", [] {
                     std::vector<Poset> posets;
                     for (const char* spec : {"chain:1", "chain:4", "antichain:3", "boolean:2", "divisor:12", "grid:2,3",
                                              "partition:3", "bruhat:3", "noncrossing:3"})
                         posets.push_back(build_named_poset(spec));
                     std::mt19937_64 rng(kDefaultSeed);
                     for (int n = 2; n <= 6; ++n)
                         for (int t = 0; t < 4; ++t) posets.push_back(random_poset(rng, n, 0.35));
                     std::vector<Outcome> parts;
                     for (const auto& p : posets) {
                         if (p.size() > 6) return Outcome{false, "corpus poset with " + std::to_string(p.size()) + " elements"};
                         PosetPolytopeReport r = poset_polytope_bridge(p);
                         parts.push_back(equal(r.shifted_order_polynomial.to_string("n"), r.order.closed.to_string("n")));
                         parts.push_back(equal(r.shifted_order_polynomial.to_string("n"), r.chain.closed.to_string("n")));
                         parts.push_back(equal(ec::to_string(r.expected_volume), ec::to_string(r.order.volume)));
                     }
                     return all_of(parts, std::to_string(posets.size()) + " posets");
                 }});
    c.push_back({"ehrhart", "Pick's formula on 20 random lattice polygons", [] {
                     std::mt19937_64 rng(kDefaultSeed);
                     std::uniform_int_distribution<long> coord(-4, 4);
                     int done = 0;
                     std::vector<Outcome> parts;
                     while (done < 20) {
                         std::vector<std::pair<long, long>> pts;
                         for (int i = 0; i < 5; ++i) pts.emplace_back(coord(rng), coord(rng));
                         std::optional<LatticePolytope> poly;
                         try {
                             poly = lattice_polygon(pts);
                         } catch (const Error&) {
                             continue;
                         }
                         ++done;
                         PickReport r = pick_check(*poly);
                         Integer interior = brute_lattice_count(*poly, 1, true, 4);
                         Integer total = brute_lattice_count(*poly, 1, false, 4);
                         Rational pick_area = Rational(interior) + Rational(total - interior) / 2 - 1;
                         parts.push_back(equal(ec::to_string(pick_area), ec::to_string(r.area)));
                         parts.push_back(Outcome{r.consistent, "polygon " + std::to_string(done)});
                     }
                     return all_of(parts, "20 polygons");
                 }});
    return c;
}

std::vector<Criterion> reproduce() {
    return {{"cli", "ec reproduce --all exits 0", [] {
                 std::ostringstream out, err;
                 int code = ec::cli::run({"reproduce", "--all"}, out, err);
                 return Outcome{code == 0, "exit " + std::to_string(code)};
             }}};
}

}  // namespace

int main() {
    std::vector<Criterion> all;
    for (auto group : {fibonacci, tilings, forbidden, trees, determinants, posets, arrangements, matroids, ehrhart, reproduce})
        for (auto& c : group()) all.push_back(std::move(c));
    int unexpected = 0, failed = 0;
    for (const auto& c : all) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.group << "] " << c.name << " (" << o.detail << ")";
        if (!o.pass && c.unattainable) std::cout << " unattainable: " << *c.unattainable;
        std::cout << "\n";
        if (!o.pass) {
            ++failed;
            if (!c.unattainable) ++unexpected;
        }
    }
    std::cout << all.size() - static_cast<std::size_t>(failed) << "/" << all.size() << " criteria pass";
    if (failed != unexpected) std::cout << ", " << failed - unexpected << " unattainable";
    std::cout << "\n";
    return unexpected == 0 ? 0 : 1;
}
