#include "recipes.hpp"

#include "ec/arrkit.hpp"
#include "ec/cfinite.hpp"
#include "ec/detcount.hpp"
#include "ec/ehrhartkit.hpp"
#include "ec/graphcount.hpp"
#include "ec/matroidkit.hpp"
#include "ec/posetkit.hpp"
#include "ec/powser.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace ec::cli {

bool RecipeResult::pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const RecipeCheck& c) { return c.pass; });
}

namespace {

std::string str(const Integer& v) { return ec::to_string(v); }
std::string str(const Rational& v) { return ec::to_string(v); }
std::string str(long v) { return std::to_string(v); }
std::string str(const std::string& v) { return v; }

template <typename A, typename B>
void check(RecipeResult& r, std::string what, const A& expected, const B& computed) {
    r.checks.push_back({std::move(what), str(expected), str(computed), str(expected) == str(computed)});
}

std::string join(const std::vector<Rational>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << ec::to_string(values[i]);
    return out.str();
}

std::string join(const std::vector<Integer>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << ec::to_string(values[i]);
    return out.str();
}

std::vector<Rational> head(const Series& s, int count) {
    return std::vector<Rational>(s.coeffs().begin(), s.coeffs().begin() + count);
}

Series series_of(std::initializer_list<long> values, int order) {
    std::vector<Rational> c;
    for (long v : values) c.emplace_back(v);
    return Series::from_poly(Poly(c), order);
}

RecipeResult fibonacci_five_ways(const RecipeOptions& o) {
    RecipeResult r;
    int terms = 20;
    int n = o.n.value_or(11);
    LinearRecurrence rec = fibonacci_recurrence();
    check(r, "recurrence a(" + std::to_string(n) + ")", n == 11 ? Rational(144) : nth_term(rec, static_cast<unsigned long>(n)),
          nth_term(rec, static_cast<unsigned long>(n)));
    std::vector<Rational> by_rec = rec.terms(terms);
    check(r, "1/(1-x-x^2)", join(by_rec), join(head(ps_inverse(series_of({1, -1, -1}, terms - 1)), terms)));
    check(r, "1/(1-u) at u = x+x^2", join(by_rec),
          join(head(ps_compose(Series::geometric(1, terms - 1), series_of({0, 1, 1}, terms - 1)), terms)));
    std::vector<Rational> binomial_sum;
    for (int m = 0; m < terms; ++m) {
        Integer s = 0;
        for (int k = 0; 2 * k <= m; ++k) s += binomial(Integer(m - k), static_cast<unsigned>(k));
        binomial_sum.emplace_back(s);
    }
    check(r, "sum_k C(n-k,k)", join(by_rec), join(binomial_sum));
    Graph strip = strip_transfer_graph(1, true);
    VertexId v = strip.vertex("1");
    check(r, "1 x n monomer-dimer walks", join(by_rec), join(head(walk_gf(strip, v, v).series(terms - 1), terms)));
    double growth = dominant_growth(rec_to_gf(rec));
    r.checks.push_back({"dominant growth", "1.6180", std::to_string(growth), std::abs(growth - 1.6180339887) < 1e-4});
    // Expected number of vertical tiles: derivative in the tile weight.
    auto family = [](const Rational& v) { return ps_inverse(Series::from_poly(Poly({Rational(1), -v, Rational(-1)}), 9)); };
    Series expected = ps_shift(ps_inverse(ps_pow(series_of({1, -1, -1}, 9), 2)), 1);
    check(r, "x/(1-x-x^2)^2", join(head(expected, 10)), join(head(parameter_derivative(family, 1, 10), 10)));
    return r;
}

RecipeResult monomer_dimer(const RecipeOptions&) {
    RecipeResult r;
    Graph t = strip_transfer_graph(3, true);
    VertexId full = t.vertex("111");
    check(r, "3 x n monomer-dimer", std::string("1,3,22,131,823,5096,31687,196785"), join(head(walk_gf(t, full, full).series(7), 8)));
    Graph t2 = strip_transfer_graph(2, true);
    VertexId full2 = t2.vertex("11");
    LinearRecurrence rec = gf_to_rec(RationalGF(Poly({Rational(1), Rational(-1)}), Poly({Rational(1), Rational(-3), Rational(-1), Rational(1)})));
    check(r, "2 x n via (1-x)/(1-3x-x^2+x^3)", join(head(walk_gf(t2, full2, full2).series(8), 9)), join(rec.terms(9)));
    std::vector<Integer> dominoes, shifted_fib;
    std::vector<Rational> fib = fibonacci_recurrence().terms(11);
    for (int n = 1; n <= 10; ++n) {
        dominoes.push_back(kasteleyn_match_count(GridRegion::rectangle(2, n)));
        shifted_fib.push_back(to_integer(fib[static_cast<std::size_t>(n)]));
    }
    check(r, "2 x n domino tilings", join(shifted_fib), join(dominoes));
    return r;
}

RecipeResult forbidden_words(const RecipeOptions&) {
    RecipeResult r;
    Graph g = forbidden_word_automaton("ab", {"aa", "abba"});
    std::vector<Rational> c = head(closed_walk_gf(g).series(9), 10);
    check(r, "cyclic words avoiding aa, abba", std::string("0,1,3,1,7,6,15,15,31,37"), join(c));
    return r;
}

RecipeResult spanning_trees(const RecipeOptions&) {
    RecipeResult r;
    check(r, "K_4", Integer(16), spanning_tree_count(complete_graph(4)));
    check(r, "K_5", Integer(125), spanning_tree_count(complete_graph(5)));
    check(r, "K_{2,3}", Integer(12), spanning_tree_count(complete_bipartite_graph(2, 3)));
    check(r, "3-cube", Integer(384), spanning_tree_count(cube_graph(3)));
    return r;
}

RecipeResult de_bruijn(const RecipeOptions&) {
    RecipeResult r;
    check(r, "B(2,3)", Integer(2), eulerian_count(de_bruijn_graph(2, 3)));
    check(r, "B(2,4) = (2!)^8/2^4", Integer(16), eulerian_count(de_bruijn_graph(2, 4)));
    return r;
}

RecipeResult aztec(const RecipeOptions& o) {
    RecipeResult r;
    int last = o.n.value_or(5);
    for (int n = 1; n <= last; ++n) {
        Integer expected = Integer(1) << static_cast<unsigned>(n * (n + 1) / 2);
        check(r, "AD_" + std::to_string(n), expected, aztec_count(n));
    }
    return r;
}

RecipeResult hexagon(const RecipeOptions& o) {
    RecipeResult r;
    int last = o.n.value_or(4);
    for (int n = 1; n <= last; ++n) {
        Rational product = 1;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) product *= make_rational(i + j + k - 1, i + j + k - 2);
        check(r, "hexagon side " + std::to_string(n), product, lgv_routing_count(hexagon_routing_dag(n)));
    }
    return r;
}

RecipeResult catalan_hankel(const RecipeOptions&) {
    RecipeResult r;
    std::vector<Rational> cat = catalan_numbers(14);
    for (int n = 1; n <= 6; ++n) check(r, "det(C_{i+j}), n = " + std::to_string(n), Rational(1), hankel_det(cat, n, false));
    for (int n = 1; n <= 6; ++n) check(r, "det(C_{i+j+1}), n = " + std::to_string(n), Rational(1), hankel_det(cat, n, true));
    return r;
}

RecipeResult dodgson(const RecipeOptions&) {
    RecipeResult r;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 5; ++trial) {
        std::size_t n = 3 + static_cast<std::size_t>(trial);
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        check(r, "condensation vs elimination, " + std::to_string(n) + "x" + std::to_string(n), det(m), dodgson_det(m));
    }
    return r;
}

RecipeResult partition_mobius(const RecipeOptions& o) {
    RecipeResult r;
    int last = o.n.value_or(5);
    for (int n = 1; n <= last; ++n) {
        Poset p = partition_lattice(n);
        Rational mu = mobius(p)(*p.bottom(), *p.top());
        Integer expected = factorial(static_cast<unsigned>(n - 1));
        if (n % 2 == 0) expected = -expected;
        check(r, "mu(Pi_" + std::to_string(n) + ")", Rational(expected), mu);
    }
    return r;
}

RecipeResult noncrossing_mobius(const RecipeOptions& o) {
    RecipeResult r;
    int last = o.n.value_or(6);
    std::vector<Rational> cat = catalan_numbers(last + 1);
    for (int n = 1; n <= last; ++n) {
        Rational expected = cat[static_cast<std::size_t>(n - 1)];
        if (n % 2 == 0) expected = -expected;
        check(r, "Z(NC_" + std::to_string(n) + ", -1)", expected, zeta_polynomial(noncrossing_lattice(n))(-1));
    }
    return r;
}

RecipeResult grid_linext(const RecipeOptions& o) {
    RecipeResult r;
    int last = o.n.value_or(6);
    std::vector<Rational> cat = catalan_numbers(last + 1);
    for (int n = 1; n <= last; ++n)
        check(r, "e(2 x " + std::to_string(n) + ")", cat[static_cast<std::size_t>(n)],
              Rational(linear_extensions(product(chain_poset(2), chain_poset(n)))));
    return r;
}

Arrangement four_planes() {
    return Arrangement(3, {Hyperplane{{1, 0, 0}, 0}, Hyperplane{{0, 1, 0}, 0}, Hyperplane{{1, -1, 0}, 0},
                           Hyperplane{{0, 0, 1}, 0}});
}

RecipeResult prism_cdindex(const RecipeOptions&) {
    RecipeResult r;
    check(r, "hexagonal prism", std::string("c^3+6cd+10dc"), to_string_cd(cd_index(prism_face_lattice(6))));
    check(r, "four planes in R^3", std::string("c^3+6cd+10dc"), to_string_cd(arrangement_cd_index(four_planes())));
    return r;
}

RecipeResult four_planes_recipe(const RecipeOptions&) {
    RecipeResult r;
    Arrangement a = four_planes();
    std::string expected = Poly({Rational(-2), Rational(5), Rational(-4), Rational(1)}).to_string("q");
    for (auto [name, backend] : {std::pair{"intersection poset", CharPolyBackend::IntersectionPoset},
                                 std::pair{"Whitney", CharPolyBackend::Whitney},
                                 std::pair{"finite field", CharPolyBackend::FiniteField}})
        check(r, std::string("chi, ") + name, expected, char_poly(a, backend).poly.to_string("q"));
    check(r, "regions", Integer(12), regions(a).regions);
    return r;
}

RecipeResult shi_regions(const RecipeOptions& o) {
    RecipeResult r;
    int n = o.n.value_or(3);
    RegionCount rc = regions(shi_arrangement(n));
    check(r, "regions of Shi_" + std::to_string(n), ipow(Integer(n + 1), static_cast<unsigned>(n - 1)), rc.regions);
    check(r, "bounded regions", ipow(Integer(n - 1), static_cast<unsigned>(n - 1)), rc.bounded);
    return r;
}

RecipeResult zaslavsky(const RecipeOptions&) {
    RecipeResult r;
    for (int n = 2; n <= 4; ++n) {
        std::string tag = std::to_string(n);
        check(r, "braid_" + tag, factorial(static_cast<unsigned>(n)), regions(braid_arrangement(n)).regions);
        check(r, "Shi_" + tag, ipow(Integer(n + 1), static_cast<unsigned>(n - 1)), regions(shi_arrangement(n)).regions);
        check(r, "BC_" + tag, Integer((Integer(1) << static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n))),
              regions(bc_arrangement(n)).regions);
        check(r, "D_" + tag, Integer((Integer(1) << static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n))),
              regions(d_arrangement(n)).regions);
    }
    return r;
}

RecipeResult arrangement_backends(const RecipeOptions&) {
    RecipeResult r;
    for (const char* spec : {"braid:3", "braid:4", "shi:3", "catalan:3", "coordinate:3", "bc:2", "d:3"}) {
        Arrangement a = build_named_arrangement(spec);
        std::string poset = char_poly(a, CharPolyBackend::IntersectionPoset).poly.to_string("q");
        check(r, std::string(spec) + " Whitney", poset, char_poly(a, CharPolyBackend::Whitney).poly.to_string("q"));
        check(r, std::string(spec) + " finite field", poset, char_poly(a, CharPolyBackend::FiniteField).poly.to_string("q"));
    }
    return r;
}

RecipeResult uniform_tutte(const RecipeOptions&) {
    RecipeResult r;
    Matroid u = uniform_matroid(2, 4);
    for (auto [name, backend] : {std::pair{"subset sum", TutteBackend::SubsetSum},
                                 std::pair{"deletion-contraction", TutteBackend::DeletionContraction},
                                 std::pair{"activities", TutteBackend::Activities}})
        check(r, std::string("U_{2,4}, ") + name, std::string("x^2+2x+2y+y^2"), tutte(u, backend).to_string());
    return r;
}

RecipeResult fano(const RecipeOptions&) {
    RecipeResult r;
    check(r, "Fano bases", Integer(28), Integer(static_cast<unsigned long>(matroid_bases(fano_matroid()).size())));
    return r;
}

RecipeResult tutte_trees(const RecipeOptions&) {
    RecipeResult r;
    for (const char* spec : {"complete:4", "wheel:4"}) {
        Graph g = build_named_graph(spec);
        Rational t11 = tutte(matroid_from_graph(g))(1, 1);
        check(r, std::string("T(1,1) of ") + spec, Rational(spanning_tree_count(g)), t11);
    }
    return r;
}

RecipeResult finite_field_tutte(const RecipeOptions&) {
    RecipeResult r;
    for (const char* spec : {"braid:3", "coordinate:2", "bc:2"}) {
        Arrangement a = build_named_arrangement(spec);
        check(r, spec, tutte(matroid_from_arrangement(a), TutteBackend::SubsetSum).to_string(),
              tutte_via_finite_fields(a).to_string());
    }
    return r;
}

RecipeResult ehrhart_families(const RecipeOptions&) {
    RecipeResult r;
    for (int d = 1; d <= 4; ++d)
        check(r, "simplex " + std::to_string(d), binomial_poly(Poly::x() + Poly(d), static_cast<unsigned>(d)).to_string("n"),
              ehrhart_polynomial(standard_simplex(d)).closed.to_string("n"));
    for (int d = 1; d <= 3; ++d)
        check(r, "cube " + std::to_string(d), pow(Poly::x() + Poly(1), static_cast<unsigned>(d)).to_string("n"),
              ehrhart_polynomial(unit_cube(d)).closed.to_string("n"));
    for (int d = 1; d <= 3; ++d) {
        Poly expected;
        for (int k = 0; k <= d; ++k)
            expected += Poly(Rational(binomial(Integer(d), static_cast<unsigned>(k)) << static_cast<unsigned>(k))) *
                        binomial_poly(Poly::x(), static_cast<unsigned>(k));
        LatticePolytope p = crosspolytope(d);
        check(r, "crosspolytope " + std::to_string(d), expected.to_string("n"), ehrhart_polynomial(p).closed.to_string("n"));
        check(r, "crosspolytope " + std::to_string(d) + " reciprocity to 4", std::string("holds"),
              std::string(reciprocity_check(p, 4).holds ? "holds" : "fails"));
    }
    return r;
}

RecipeResult ehrhart_bridge(const RecipeOptions&) {
    RecipeResult r;
    for (const char* spec : {"chain:2", "antichain:2", "chain:3", "boolean:2", "grid:2,3", "divisor:12", "bruhat:3"}) {
        PosetPolytopeReport rep = poset_polytope_bridge(build_named_poset(spec));
        check(r, std::string(spec) + " order polytope", rep.shifted_order_polynomial.to_string("n"), rep.order.closed.to_string("n"));
        check(r, std::string(spec) + " chain polytope", rep.shifted_order_polynomial.to_string("n"), rep.chain.closed.to_string("n"));
        check(r, std::string(spec) + " volume", rep.expected_volume, rep.order.volume);
    }
    return r;
}

RecipeResult pick(const RecipeOptions& o) {
    RecipeResult r;
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> coord(-4, 4);
    int done = 0;
    while (done < 20) {
        std::vector<std::pair<long, long>> pts;
        for (int i = 0; i < 5; ++i) pts.emplace_back(coord(rng), coord(rng));
        std::optional<PickReport> rep;
        try {
            rep = pick_check(lattice_polygon(pts));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotLatticePolygon) continue;
            throw;
        }
        ++done;
        Rational pick_area = Rational(rep->interior) + Rational(rep->boundary) / 2 - 1;
        check(r, "polygon " + std::to_string(done) + " area", pick_area, rep->area);
    }
    return r;
}

std::vector<Recipe> build_recipes() {
    return {
        {"fibonacci-five-ways", "Fibonacci numbers by recurrence, inverse, composition, binomial sum and walks", fibonacci_five_ways},
        {"monomer-dimer", "strip tilings by transfer matrices and Pfaffians", monomer_dimer},
        {"forbidden-words", "cyclic words avoiding aa and abba", forbidden_words},
        {"spanning-trees", "Kirchhoff counts for K_4, K_5, K_{2,3} and the 3-cube", spanning_trees},
        {"de-bruijn", "Eulerian circuits of de Bruijn graphs", de_bruijn},
        {"aztec", "Aztec diamond tilings 2^{n(n+1)/2}", aztec},
        {"hexagon", "rhombus tilings of a hexagon by nonintersecting routings", hexagon},
        {"catalan-hankel", "Hankel determinants of Catalan numbers", catalan_hankel},
        {"dodgson", "condensation against elimination on random matrices", dodgson},
        {"partition-mobius", "Mobius function of the partition lattice", partition_mobius},
        {"noncrossing-mobius", "Mobius function of noncrossing partitions via Z(-1)", noncrossing_mobius},
        {"grid-linext", "linear extensions of 2 x n grids are Catalan numbers", grid_linext},
        {"prism-cdindex", "cd-index of the hexagonal prism and of four planes", prism_cdindex},
        {"four-planes", "characteristic polynomial of four planes in R^3", four_planes_recipe},
        {"shi-regions", "regions and bounded regions of the Shi arrangement", shi_regions},
        {"zaslavsky", "region counts of braid, Shi, BC and D arrangements", zaslavsky},
        {"arrangement-backends", "three characteristic polynomial backends agree", arrangement_backends},
        {"uniform-tutte", "Tutte polynomial of U_{2,4} by three backends", uniform_tutte},
        {"fano", "bases of the Fano plane", fano},
        {"tutte-trees", "T(1,1) against Kirchhoff", tutte_trees},
        {"finite-field-tutte", "Tutte polynomials from finite-field histograms", finite_field_tutte},
        {"ehrhart-families", "Ehrhart polynomials of simplices, cubes and crosspolytopes", ehrhart_families},
        {"ehrhart-bridge", "order and chain polytopes against order polynomials", ehrhart_bridge},
        {"pick", "Pick's formula on random lattice polygons", pick},
    };
}

}  // namespace

const std::vector<Recipe>& recipes() {
    static const std::vector<Recipe> list = build_recipes();
    return list;
}

const Recipe* find_recipe(const std::string& name) {
    for (const auto& r : recipes())
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace ec::cli
