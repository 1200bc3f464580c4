#include "ec/arrkit.hpp"

#include "ec/error.hpp"
#include "ec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace ec {

Hyperplane normalize(Hyperplane h) {
    Integer g = 0;
    for (const auto& v : h.normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0) throw Error(ErrorKind::BadArgument, "hyperplane with zero normal vector");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.offset.get_mpz_t());
    auto lead = std::find_if(h.normal.begin(), h.normal.end(), [](const Integer& v) { return v != 0; });
    if (*lead < 0) g = -g;
    for (auto& v : h.normal) v /= g;
    h.offset /= g;
    return h;
}

Arrangement::Arrangement(int dimension, std::vector<Hyperplane> hyperplanes) : dimension_(dimension) {
    if (dimension < 0) throw Error(ErrorKind::BadArgument, "negative dimension");
    std::set<std::pair<std::vector<Integer>, Integer>> seen;
    for (auto& h : hyperplanes) {
        if (h.normal.size() != static_cast<std::size_t>(dimension))
            throw Error(ErrorKind::BadArgument, "hyperplane has " + std::to_string(h.normal.size()) +
                                                    " coefficients in dimension " + std::to_string(dimension));
        Hyperplane n = normalize(std::move(h));
        if (!seen.insert({n.normal, n.offset}).second) throw Error(ErrorKind::BadArgument, "repeated hyperplane");
        hyperplanes_.push_back(std::move(n));
    }
}

namespace {

QMatrix augmented(const Arrangement& a, const std::vector<std::size_t>& rows) {
    QMatrix m(rows.size(), static_cast<std::size_t>(a.dimension()) + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Hyperplane& h = a[rows[i]];
        for (int j = 0; j < a.dimension(); ++j) m(i, static_cast<std::size_t>(j)) = h.normal[static_cast<std::size_t>(j)];
        m(i, static_cast<std::size_t>(a.dimension())) = h.offset;
    }
    return m;
}

QMatrix normals(const Arrangement& a, const std::vector<std::size_t>& rows) {
    QMatrix m(rows.size(), static_cast<std::size_t>(a.dimension()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < a.dimension(); ++j) m(i, static_cast<std::size_t>(j)) = a[rows[i]].normal[static_cast<std::size_t>(j)];
    return m;
}

std::vector<std::size_t> all_indices(const Arrangement& a) {
    std::vector<std::size_t> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

}  // namespace

bool Arrangement::is_central() const {
    auto rows = all_indices(*this);
    return rank(augmented(*this, rows)) == rank(normals(*this, rows));
}

Arrangement Arrangement::without(std::size_t index) const {
    if (index >= size()) throw Error(ErrorKind::BadArgument, "no hyperplane " + std::to_string(index));
    std::vector<Hyperplane> rest;
    for (std::size_t i = 0; i < size(); ++i)
        if (i != index) rest.push_back(hyperplanes_[i]);
    return Arrangement(dimension_, rest);
}

Arrangement read_arrangement(std::istream& in) {
    std::vector<std::vector<Integer>> rows;
    std::string line;
    std::optional<int> dim;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<Integer> values;
        for (std::string t; ls >> t;) values.push_back(parse_integer(t));
        if (values.empty()) continue;
        if (!dim) {
            if (values.size() != 1 || values[0] < 0 || values[0] > 64)
                throw Error(ErrorKind::BadArgument, "arrangement file must start with the dimension");
            dim = static_cast<int>(values[0].get_si());
            continue;
        }
        if (values.size() != static_cast<std::size_t>(*dim) + 1)
            throw Error(ErrorKind::BadArgument, "hyperplane line needs " + std::to_string(*dim + 1) + " integers");
        rows.push_back(values);
    }
    if (!dim) throw Error(ErrorKind::BadArgument, "empty arrangement file");
    std::vector<Hyperplane> hs;
    for (auto& r : rows) {
        Integer b = r.back();
        r.pop_back();
        hs.push_back({r, b});
    }
    return Arrangement(*dim, hs);
}

void write_arrangement(std::ostream& out, const Arrangement& a) {
    out << a.dimension() << '\n';
    for (const auto& h : a.hyperplanes()) {
        for (const auto& v : h.normal) out << v << ' ';
        out << h.offset << '\n';
    }
}

namespace {

Hyperplane difference(int d, int i, int j, long offset, long sign = -1) {
    std::vector<Integer> v(static_cast<std::size_t>(d), 0);
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(j)] = sign;
    return {v, offset};
}

void need_positive(int n, const char* family) {
    if (n < 1) throw Error(ErrorKind::BadSpec, std::string(family) + " arrangement needs n >= 1");
}

}  // namespace

Arrangement coordinate_arrangement(int n) {
    need_positive(n, "coordinate");
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i) {
        std::vector<Integer> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(i)] = 1;
        hs.push_back({v, 0});
    }
    return Arrangement(n, hs);
}

Arrangement braid_arrangement(int n) {
    need_positive(n, "braid");
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) hs.push_back(difference(n, i, j, 0));
    return Arrangement(n, hs);
}

Arrangement shi_arrangement(int n) {
    need_positive(n, "Shi");
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (long b : {0L, 1L}) hs.push_back(difference(n, i, j, b));
    return Arrangement(n, hs);
}

Arrangement ish_arrangement(int n) {
    need_positive(n, "Ish");
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) hs.push_back(difference(n, i, j, 0));
    // x_1 - x_j = i for 1 <= i < j <= n (1-based).
    for (int j = 1; j < n; ++j)
        for (long i = 1; i <= j; ++i) hs.push_back(difference(n, 0, j, i));
    return Arrangement(n, hs);
}

Arrangement catalan_arrangement(int n) {
    need_positive(n, "Catalan");
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (long b : {-1L, 0L, 1L}) hs.push_back(difference(n, i, j, b));
    return Arrangement(n, hs);
}

Arrangement linial_arrangement(int n) {
    need_positive(n, "Linial");
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) hs.push_back(difference(n, i, j, 1));
    return Arrangement(n, hs);
}

Arrangement threshold_arrangement(int n) {
    need_positive(n, "threshold");
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) hs.push_back(difference(n, i, j, 0, 1));
    return Arrangement(n, hs);
}

Arrangement d_arrangement(int n) {
    need_positive(n, "D");
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            hs.push_back(difference(n, i, j, 0));
            hs.push_back(difference(n, i, j, 0, 1));
        }
    return Arrangement(n, hs);
}

Arrangement bc_arrangement(int n) {
    need_positive(n, "BC");
    std::vector<Hyperplane> hs = d_arrangement(n).hyperplanes();
    Arrangement coordinates = coordinate_arrangement(n);
    for (const auto& h : coordinates.hyperplanes()) hs.push_back(h);
    return Arrangement(n, hs);
}

Arrangement graphical_arrangement(const Graph& g) {
    int n = static_cast<int>(g.vertex_count());
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : g.edges()) {
        if (e.from == e.to) throw Error(ErrorKind::LoopPresent, "graph has a loop at " + g.label(e.from));
        edges.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
    }
    std::vector<Hyperplane> hs;
    for (auto [u, v] : edges) hs.push_back(difference(n, static_cast<int>(u), static_cast<int>(v), 0));
    return Arrangement(n, hs);
}

Arrangement generic_arrangement(int n, int r, std::uint64_t seed) {
    if (n < 0 || r < 1) throw Error(ErrorKind::BadSpec, "generic arrangement needs n >= 0 and r >= 1");
    std::mt19937_64 rng(seed);
    std::vector<long> pool(static_cast<std::size_t>(3 * std::max(n, 1)));
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<long>(i) + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Hyperplane> hs;
    for (int i = 0; i < n; ++i) {
        long t = pool[static_cast<std::size_t>(i)];
        std::vector<Integer> v;
        Integer power = 1;
        for (int k = 0; k < r; ++k) {
            v.push_back(power);
            power *= t;
        }
        hs.push_back({v, power});
    }
    return Arrangement(r, hs);
}

Arrangement cone(const Arrangement& a) {
    int d = a.dimension();
    std::vector<Hyperplane> hs;
    for (const auto& h : a.hyperplanes()) {
        std::vector<Integer> v = h.normal;
        v.push_back(-h.offset);
        hs.push_back({v, 0});
    }
    std::vector<Integer> last(static_cast<std::size_t>(d) + 1, 0);
    last.back() = 1;
    hs.push_back({last, 0});
    return Arrangement(d + 1, hs);
}

Arrangement restriction(const Arrangement& a, std::size_t index) {
    const Hyperplane& h = a[index];
    std::size_t d = static_cast<std::size_t>(a.dimension());
    std::size_t pivot = 0;
    while (h.normal[pivot] == 0) ++pivot;
    std::set<std::pair<std::vector<Integer>, Integer>> seen;
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == index) continue;
        const Hyperplane& g = a[i];
        // Substitute x_pivot = (b - sum v_k x_k) / v_pivot and clear the denominator.
        std::vector<Integer> v;
        bool zero = true;
        for (std::size_t k = 0; k < d; ++k) {
            if (k == pivot) continue;
            Integer c = h.normal[pivot] * g.normal[k] - g.normal[pivot] * h.normal[k];
            zero = zero && c == 0;
            v.push_back(c);
        }
        if (zero) continue;  // parallel to h, so disjoint from it
        Hyperplane n = normalize({v, h.normal[pivot] * g.offset - g.normal[pivot] * h.offset});
        if (seen.insert({n.normal, n.offset}).second) hs.push_back(n);
    }
    return Arrangement(a.dimension() - 1, hs);
}

Arrangement build_named_arrangement(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::BadSpec, "arrangement spec '" + spec + "' needs kind:args");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
    try {
        if (kind == "graphical") return graphical_arrangement(build_named_graph(rest));
        if (kind == "cone") return cone(build_named_arrangement(rest));
        std::vector<long> args;
        std::stringstream ss(rest);
        for (std::string part; std::getline(ss, part, ',');) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != part.size() || v < 0 || v > 64)
                throw Error(ErrorKind::BadSpec, "bad number '" + part + "' in arrangement spec '" + spec + "'");
            args.push_back(v);
        }
        auto one = [&]() {
            if (args.size() != 1) throw Error(ErrorKind::BadSpec, "arrangement spec '" + spec + "' takes one argument");
            return static_cast<int>(args[0]);
        };
        if (kind == "coordinate") return coordinate_arrangement(one());
        if (kind == "braid") return braid_arrangement(one());
        if (kind == "shi") return shi_arrangement(one());
        if (kind == "ish") return ish_arrangement(one());
        if (kind == "catalan") return catalan_arrangement(one());
        if (kind == "linial") return linial_arrangement(one());
        if (kind == "threshold") return threshold_arrangement(one());
        if (kind == "bc") return bc_arrangement(one());
        if (kind == "d") return d_arrangement(one());
        if (kind == "generic") {
            if (args.size() != 2 && args.size() != 3)
                throw Error(ErrorKind::BadSpec, "generic arrangement spec is generic:n,r[,seed]");
            std::uint64_t seed = args.size() == 3 ? static_cast<std::uint64_t>(args[2]) : 20240601;
            return generic_arrangement(static_cast<int>(args[0]), static_cast<int>(args[1]), seed);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BadSpec) throw;
        throw Error(ErrorKind::BadSpec, e.what());
    }
    throw Error(ErrorKind::BadSpec, "unknown arrangement kind '" + kind + "'");
}

CharPoly make_char_poly(Poly p, int dimension) {
    if (p.degree() != dimension || p.leading() != 1)
        throw Error(ErrorKind::BadArgument, "characteristic polynomial must be monic of degree " + std::to_string(dimension));
    int lowest = -1;
    for (int k = 0; k <= dimension; ++k) {
        Rational c = p.coeff(k);
        if (!is_integer(c)) throw Error(ErrorKind::BadArgument, "non-integer characteristic polynomial coefficient");
        if (c != 0 && lowest < 0) lowest = k;
        int sign = (dimension - k) % 2 ? -1 : 1;
        if (c * sign < 0) throw Error(ErrorKind::BadArgument, "characteristic polynomial signs do not alternate");
    }
    return {std::move(p), dimension - lowest};
}

namespace {

struct ScanSetup {
    std::uint64_t q;
    std::size_t d;
    std::uint64_t points;
    std::vector<std::vector<std::uint64_t>> coeff;  // per hyperplane, reduced mod q
    std::vector<std::uint64_t> rhs;
};

std::uint64_t reduce_mod(const Integer& v, std::uint64_t q) {
    Integer r = v % static_cast<unsigned long>(q);
    if (r < 0) r += static_cast<unsigned long>(q);
    return r.get_ui();
}

ScanSetup scan_setup(const Arrangement& a, std::uint64_t q, std::uint64_t cap) {
    if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
    if (q >= (std::uint64_t{1} << 31)) throw Error(ErrorKind::ScanTooLarge, "prime too large for a point scan");
    ScanSetup s{q, static_cast<std::size_t>(a.dimension()), 1, {}, {}};
    for (std::size_t i = 0; i < s.d; ++i) {
        if (s.points > cap / q) throw Error(ErrorKind::ScanTooLarge, std::to_string(q) + "^" + std::to_string(s.d) +
                                                                        " points exceed the scan cap");
        s.points *= q;
    }
    for (const auto& h : a.hyperplanes()) {
        std::vector<std::uint64_t> row;
        for (const auto& v : h.normal) row.push_back(reduce_mod(v, q));
        s.coeff.push_back(row);
        s.rhs.push_back(reduce_mod(h.offset, q));
    }
    return s;
}

// Calls visit(hits) for every point, hits = number of hyperplanes through it.
template <typename Visit>
void scan_points(const ScanSetup& s, Visit&& visit) {
    std::size_t m = s.coeff.size();
    std::vector<std::uint64_t> value(m, 0), digits(s.d, 0);
    // Every digit change (increment or wrap to 0) adds that coordinate's coefficient mod q.
    std::vector<std::vector<std::uint64_t>> step(s.d, std::vector<std::uint64_t>(m, 0));
    for (std::size_t k = 0; k < s.d; ++k)
        for (std::size_t h = 0; h < m; ++h) step[k][h] = (k ? step[k - 1][h] : 0) + s.coeff[h][k];
    for (std::uint64_t p = 0; p < s.points; ++p) {
        std::size_t hits = 0;
        for (std::size_t h = 0; h < m; ++h) hits += value[h] == s.rhs[h];
        visit(hits);
        std::size_t k = 0;
        while (k < s.d && digits[k] == s.q - 1) digits[k++] = 0;
        if (k == s.d) break;
        ++digits[k];
        for (std::size_t h = 0; h < m; ++h) value[h] = (value[h] + step[k][h]) % s.q;
    }
}

}  // namespace

Integer complement_count(const Arrangement& a, std::uint64_t q, std::uint64_t cap) {
    ScanSetup s = scan_setup(a, q, cap);
    std::uint64_t count = 0;
    scan_points(s, [&](std::size_t hits) { count += hits == 0; });
    return Integer(static_cast<unsigned long>(count));
}

Poly coboundary_histogram(const Arrangement& a, std::uint64_t q, std::uint64_t cap) {
    ScanSetup s = scan_setup(a, q, cap);
    std::vector<std::uint64_t> tally(a.size() + 1, 0);
    scan_points(s, [&](std::size_t hits) { ++tally[hits]; });
    std::vector<Rational> c;
    for (auto t : tally) c.emplace_back(Integer(static_cast<unsigned long>(t)));
    return Poly(c);
}

std::vector<std::uint64_t> stable_primes(const Arrangement& a) {
    std::size_t d = static_cast<std::size_t>(a.dimension());
    std::size_t needed = d + 3;
    // Cone matrix: rows (v, -b) and e_{d+1}.
    std::vector<std::vector<Integer>> rows;
    for (const auto& h : a.hyperplanes()) {
        auto r = h.normal;
        r.push_back(-h.offset);
        rows.push_back(r);
    }
    std::vector<Integer> last(d + 1, 0);
    last.back() = 1;
    rows.push_back(last);
    std::size_t m = rows.size(), cols = d + 1;
    Integer work = 0;
    for (std::size_t k = 1; k <= std::min(m, cols); ++k)
        work += binomial(Integer(static_cast<unsigned long>(m)), static_cast<unsigned>(k)) *
                binomial(Integer(static_cast<unsigned long>(cols)), static_cast<unsigned>(k));
    std::vector<std::uint64_t> primes;
    if (work <= 200000) {
        std::set<Integer> minors;
        std::vector<std::size_t> rs, cs;
        std::function<void(std::size_t, std::size_t, std::size_t)> pick_cols;
        std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t k) {
            if (rs.size() == k) {
                pick_cols(0, k, 0);
                return;
            }
            for (std::size_t i = start; i < m; ++i) {
                rs.push_back(i);
                pick_rows(i + 1, k);
                rs.pop_back();
            }
        };
        pick_cols = [&](std::size_t start, std::size_t k, std::size_t) {
            if (cs.size() == k) {
                ZMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = rows[rs[i]][cs[j]];
                Integer v = abs(det(sub));
                if (v > 1) minors.insert(v);
                return;
            }
            for (std::size_t j = start; j < cols; ++j) {
                cs.push_back(j);
                pick_cols(j + 1, k, 0);
                cs.pop_back();
            }
        };
        for (std::size_t k = 1; k <= std::min(m, cols); ++k) pick_rows(0, k);
        for (std::uint64_t p = 2; primes.size() < needed; p = next_prime(p + 1)) {
            bool divides = false;
            for (const auto& v : minors)
                if (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
                    divides = true;
                    break;
                }
            if (!divides) primes.push_back(p);
        }
        return primes;
    }
    // Hadamard: every minor is at most the product of the d + 1 largest row norms.
    std::vector<double> norms;
    for (const auto& r : rows) {
        double s = 0;
        for (const auto& v : r) s += v.get_d() * v.get_d();
        norms.push_back(std::max(1.0, std::sqrt(s)));
    }
    std::sort(norms.rbegin(), norms.rend());
    double bound = 1;
    for (std::size_t i = 0; i < std::min(cols, norms.size()); ++i) bound *= norms[i];
    if (bound > 1e12) throw Error(ErrorKind::ScanTooLarge, "Hadamard bound too large for finite-field counting");
    std::uint64_t p = next_prime(static_cast<std::uint64_t>(std::floor(bound)) + 1);
    while (primes.size() < needed) {
        primes.push_back(p);
        p = next_prime(p + 1);
    }
    return primes;
}

namespace {

// Depth-first over subsets with an incremental echelon basis of augmented rows;
// inconsistent subsets prune their supersets.
Poly whitney_sum(const Arrangement& a) {
    if (a.size() > 26) throw Error(ErrorKind::TooLarge, "Whitney expansion limited to 26 hyperplanes");
    std::size_t d = static_cast<std::size_t>(a.dimension());
    std::vector<std::vector<Rational>> rows;
    for (const auto& h : a.hyperplanes()) {
        std::vector<Rational> r;
        for (const auto& v : h.normal) r.emplace_back(v);
        r.emplace_back(h.offset);
        rows.push_back(r);
    }
    std::vector<Integer> by_rank_sign(d + 1, 0);  // sum of (-1)^{|B|} per rank
    struct Basis {
        std::vector<std::vector<Rational>> rows;
        std::vector<std::size_t> pivots;
    };
    std::function<void(std::size_t, const Basis&, int)> rec = [&](std::size_t i, const Basis& basis, int sign) {
        if (i == rows.size()) {
            by_rank_sign[basis.rows.size()] += sign;
            return;
        }
        rec(i + 1, basis, sign);
        std::vector<Rational> r = rows[i];
        for (std::size_t k = 0; k < basis.rows.size(); ++k) {
            std::size_t p = basis.pivots[k];
            if (r[p] == 0) continue;
            Rational f = r[p] / basis.rows[k][p];
            for (std::size_t j = 0; j <= d; ++j) r[j] -= f * basis.rows[k][j];
        }
        std::size_t pivot = 0;
        while (pivot <= d && r[pivot] == 0) ++pivot;
        if (pivot == d) return;  // 0 = c with c != 0: empty intersection
        if (pivot > d) {
            rec(i + 1, basis, -sign);
            return;
        }
        Basis next = basis;
        next.rows.push_back(r);
        next.pivots.push_back(pivot);
        rec(i + 1, next, -sign);
    };
    rec(0, Basis{}, 1);
    Poly chi;
    for (std::size_t r = 0; r <= d; ++r) chi += Poly::monomial(Rational(by_rank_sign[r]), static_cast<int>(d - r));
    return chi;
}

}  // namespace

IntersectionLattice intersection_lattice(const Arrangement& a) {
    std::size_t n = a.size();
    int d = a.dimension();
    std::map<std::vector<bool>, std::size_t> index;
    IntersectionLattice out;
    auto closure = [&](const std::vector<std::size_t>& gens) -> std::optional<Flat> {
        QMatrix aug = augmented(a, gens);
        std::size_t r = rank(aug);
        if (r != rank(normals(a, gens))) return std::nullopt;
        Flat f;
        f.dimension = d - static_cast<int>(r);
        for (std::size_t h = 0; h < n; ++h) {
            std::vector<std::size_t> more = gens;
            more.push_back(h);
            if (rank(augmented(a, more)) == r) f.hyperplanes.push_back(h);
        }
        return f;
    };
    auto key_of = [&](const Flat& f) {
        std::vector<bool> k(n, false);
        for (auto h : f.hyperplanes) k[h] = true;
        return k;
    };
    out.flats.push_back(Flat{{}, d});
    index[std::vector<bool>(n, false)] = 0;
    for (std::size_t i = 0; i < out.flats.size(); ++i) {
        for (std::size_t h = 0; h < n; ++h) {
            const Flat& base = out.flats[i];
            if (std::find(base.hyperplanes.begin(), base.hyperplanes.end(), h) != base.hyperplanes.end()) continue;
            std::vector<std::size_t> gens = base.hyperplanes;
            gens.push_back(h);
            auto f = closure(gens);
            if (!f) continue;
            auto k = key_of(*f);
            if (index.emplace(k, out.flats.size()).second) out.flats.push_back(*f);
        }
    }
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> keys;
    for (const auto& f : out.flats) {
        std::string label = "{";
        for (std::size_t j = 0; j < f.hyperplanes.size(); ++j)
            label += (j ? "," : "") + std::to_string(f.hyperplanes[j] + 1);
        labels.push_back(label + "}");
        keys.push_back(key_of(f));
    }
    std::vector<std::pair<ElementId, ElementId>> rel;
    for (std::size_t x = 0; x < out.flats.size(); ++x)
        for (std::size_t y = 0; y < out.flats.size(); ++y) {
            if (x == y || out.flats[x].hyperplanes.size() >= out.flats[y].hyperplanes.size()) continue;
            bool sub = true;
            for (auto h : out.flats[x].hyperplanes) sub = sub && keys[y][h];
            if (sub) rel.emplace_back(x, y);
        }
    out.poset = Poset::from_relation(std::move(labels), rel);
    return out;
}

Poset intersection_poset(const Arrangement& a) { return intersection_lattice(a).poset; }

namespace {

Poly upper_interval_sum(const IntersectionLattice& lat, ElementId from) {
    IncidenceFunction mu = mobius(lat.poset);
    Poly chi;
    for (ElementId f = 0; f < lat.flats.size(); ++f)
        if (lat.poset.leq(from, f)) chi += Poly::monomial(mu(from, f), lat.flats[f].dimension);
    return chi;
}

}  // namespace

CharPoly contraction_char_poly(const Arrangement& a, std::size_t index) {
    if (index >= a.size()) throw Error(ErrorKind::BadArgument, "no hyperplane " + std::to_string(index));
    IntersectionLattice lat = intersection_lattice(a);
    for (ElementId f = 0; f < lat.flats.size(); ++f)
        if (lat.flats[f].dimension == a.dimension() - 1 &&
            std::find(lat.flats[f].hyperplanes.begin(), lat.flats[f].hyperplanes.end(), index) !=
                lat.flats[f].hyperplanes.end())
            return make_char_poly(upper_interval_sum(lat, f), a.dimension() - 1);
    throw std::logic_error("hyperplane missing from its own intersection lattice");
}

CharPoly char_poly(const Arrangement& a, CharPolyBackend backend, const FiniteFieldOptions& options) {
    int d = a.dimension();
    switch (backend) {
        case CharPolyBackend::IntersectionPoset:
            return make_char_poly(upper_interval_sum(intersection_lattice(a), 0), d);
        case CharPolyBackend::Whitney:
            return make_char_poly(whitney_sum(a), d);
        case CharPolyBackend::FiniteField: {
            std::vector<std::uint64_t> primes = options.primes.empty() ? stable_primes(a) : options.primes;
            std::size_t fit = static_cast<std::size_t>(d) + 1;
            if (primes.size() < fit)
                throw Error(ErrorKind::BadArgument, "finite-field backend needs at least " + std::to_string(fit) + " primes");
            std::vector<Rational> xs, ys;
            for (std::size_t i = 0; i < fit; ++i) {
                xs.emplace_back(Integer(static_cast<unsigned long>(primes[i])));
                ys.emplace_back(complement_count(a, primes[i], options.scan_cap));
            }
            Poly chi = interpolate(xs, ys);
            for (std::size_t i = fit; i < primes.size(); ++i) {
                Rational q{Integer(static_cast<unsigned long>(primes[i]))};
                if (chi(q) != Rational(complement_count(a, primes[i], options.scan_cap)))
                    throw Error(ErrorKind::PrimeInstability,
                                "point count at q = " + std::to_string(primes[i]) + " disagrees with the interpolant");
            }
            try {
                return make_char_poly(chi, d);
            } catch (const Error& e) {
                throw Error(ErrorKind::PrimeInstability, std::string("interpolated polynomial is invalid: ") + e.what());
            }
        }
    }
    throw std::logic_error("unknown backend");
}

RegionCount regions(const Arrangement& a) {
    CharPoly chi = char_poly(a);
    Rational at_minus = chi(-1), at_one = chi(1);
    Integer r = to_integer(at_minus), b = to_integer(at_one);
    if (a.dimension() % 2) r = -r;
    if (chi.rank % 2) b = -b;
    return {r, b};
}

CharPoly chromatic_polynomial(const Graph& g) { return char_poly(graphical_arrangement(g)); }

Integer acyclic_orientations(const Graph& g) { return abs(to_integer(chromatic_polynomial(g)(-1))); }

CdPolynomial omega(const AbPolynomial& ab) {
    CdPolynomial out;
    for (const auto& [word, coeff] : ab) {
        std::string cd;
        Integer scale = coeff;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (word[i] == 'a' && i + 1 < word.size() && word[i + 1] == 'b') {
                cd += 'd';
                scale *= 2;
                ++i;
            } else {
                cd += 'c';
            }
        }
        out[cd] += scale;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

CdPolynomial arrangement_cd_index(const Arrangement& a) {
    if (!a.is_central()) throw Error(ErrorKind::NotCentral, "arrangement has no common point");
    FlagData flags = flag_and_cd(intersection_poset(a));
    AbPolynomial shifted;
    for (const auto& [w, c] : flags.ab) shifted["a" + w] = c;
    return omega(shifted);
}

}  // namespace ec
