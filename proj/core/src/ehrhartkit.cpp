#include "ec/ehrhartkit.hpp"

#include "ec/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ec {

namespace {

constexpr std::size_t kProjectionRowLimit = 200000;

// coef . y <= per_n * n - per_strict * s, with s = 1 for interior counts.
struct Row {
    std::vector<Integer> coef;
    Integer per_n;
    Integer per_strict;

    friend bool operator<(const Row& a, const Row& b) {
        if (a.coef != b.coef) return a.coef < b.coef;
        if (a.per_n != b.per_n) return a.per_n < b.per_n;
        return a.per_strict < b.per_strict;
    }
};

Row normalized(Row r) {
    Integer g = 0;
    for (const auto& c : r.coef) g = gcd(g, c);
    g = gcd(g, r.per_n);
    g = gcd(g, r.per_strict);
    if (g > 1) {
        for (auto& c : r.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r.per_n.get_mpz_t(), r.per_n.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r.per_strict.get_mpz_t(), r.per_strict.get_mpz_t(), g.get_mpz_t());
    }
    return r;
}

bool all_zero(const std::vector<Integer>& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; });
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void swap_columns(ZMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// col[target] -= q * col[source]
void subtract_column(ZMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) -= q * m(r, source);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

long parse_long(const std::string& text, const std::string& spec) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadSpec, "bad number in polytope spec '" + spec + "'");
    }
}

ZMatrix rows_to_matrix(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    ZMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
}

std::vector<Integer> unit_row(std::size_t d, std::size_t i, long v) {
    std::vector<Integer> row(d, 0);
    row[i] = v;
    return row;
}

}  // namespace

// Fourier-Motzkin shadows: levels[j] constrains y_0..y_j.
struct LatticePolytope::Projection {
    std::vector<std::vector<Row>> levels;
    std::vector<Row> constant_rows;
};

LatticePolytope::LatticePolytope(int ambient_dimension, ZMatrix inequalities, std::vector<Integer> bounds,
                                 ZMatrix equations, std::vector<Integer> equation_values)
    : ambient_(ambient_dimension), a_(std::move(inequalities)), b_(std::move(bounds)), c_(std::move(equations)),
      e_(std::move(equation_values)) {
    if (ambient_ < 0) throw Error(ErrorKind::BadArgument, "negative dimension");
    std::size_t d = static_cast<std::size_t>(ambient_);
    if (a_.rows() == 0) a_ = ZMatrix(0, d);
    if (c_.rows() == 0) c_ = ZMatrix(0, d);
    if (a_.cols() != d || c_.cols() != d || b_.size() != a_.rows() || e_.size() != c_.rows())
        throw Error(ErrorKind::BadArgument, "polytope system has inconsistent shapes");

    // Column reduction C U = [H | 0]; the last columns of U span the integer kernel.
    ZMatrix m = c_;
    ZMatrix u = ZMatrix::identity(d);
    std::size_t p = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::vector<std::size_t> dependent;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        while (true) {
            std::size_t best = d;
            for (std::size_t j = p; j < d; ++j)
                if (m(i, j) != 0 && (best == d || abs(m(i, j)) < abs(m(i, best)))) best = j;
            if (best == d) break;
            swap_columns(m, best, p);
            swap_columns(u, best, p);
            bool done = true;
            for (std::size_t j = p + 1; j < d; ++j) {
                if (m(i, j) == 0) continue;
                Integer q = m(i, j) / m(i, p);
                subtract_column(m, j, p, q);
                subtract_column(u, j, p, q);
                done = done && m(i, j) == 0;
            }
            if (done) break;
        }
        if (p < d && m(i, p) != 0) {
            pivots.emplace_back(i, p);
            ++p;
        } else {
            dependent.push_back(i);
        }
    }
    std::vector<Integer> y(d, 0);
    for (auto [i, col] : pivots) {
        Integer s = e_[i];
        for (std::size_t q = 0; q < col; ++q) s -= m(i, q) * y[q];
        if (s % m(i, col) != 0) throw Error(ErrorKind::BadArgument, "equations have no integer solution");
        y[col] = s / m(i, col);
    }
    for (std::size_t i : dependent) {
        Integer s = 0;
        for (std::size_t q = 0; q < p; ++q) s += m(i, q) * y[q];
        if (s != e_[i]) throw Error(ErrorKind::BadArgument, "equations are inconsistent");
    }
    origin_.assign(d, 0);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t q = 0; q < p; ++q) origin_[r] += u(r, q) * y[q];
    std::size_t k = d - p;
    lattice_basis_ = ZMatrix(d, k);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t q = 0; q < k; ++q) lattice_basis_(r, q) = u(r, p + q);

    // Inequalities in lattice coordinates, then successive projections.
    auto proj = std::make_shared<Projection>();
    std::set<Row> current;
    for (std::size_t i = 0; i < a_.rows(); ++i) {
        Row row{std::vector<Integer>(k, 0), b_[i], 1};
        for (std::size_t c = 0; c < d; ++c) {
            row.per_n -= a_(i, c) * origin_[c];
            for (std::size_t q = 0; q < k; ++q) row.coef[q] += a_(i, c) * lattice_basis_(c, q);
        }
        current.insert(normalized(row));
    }
    proj->levels.resize(k);
    for (std::size_t level = k; level-- > 0;) {
        std::vector<Row> kept, pos, neg;
        for (const Row& r : current) {
            if (all_zero(r.coef)) {
                proj->constant_rows.push_back(r);
                continue;
            }
            kept.push_back(r);
            if (r.coef[level] > 0) pos.push_back(r);
            if (r.coef[level] < 0) neg.push_back(r);
        }
        if (pos.empty() || neg.empty()) throw Error(ErrorKind::Unbounded, "polytope is unbounded");
        proj->levels[level] = kept;
        std::set<Row> next;
        for (const Row& r : kept)
            if (r.coef[level] == 0) {
                Row t = r;
                t.coef.pop_back();
                next.insert(t);
            }
        for (const Row& a : pos)
            for (const Row& b : neg) {
                Integer fa = -b.coef[level], fb = a.coef[level];
                Row t{std::vector<Integer>(level), fa * a.per_n + fb * b.per_n, fa * a.per_strict + fb * b.per_strict};
                for (std::size_t q = 0; q < level; ++q) t.coef[q] = fa * a.coef[q] + fb * b.coef[q];
                next.insert(normalized(t));
                if (next.size() > kProjectionRowLimit) throw Error(ErrorKind::ScanTooLarge, "projection has too many rows");
            }
        current = std::move(next);
    }
    for (const Row& r : current) proj->constant_rows.push_back(r);
    projection_ = std::move(proj);
}

bool LatticePolytope::contains(const std::vector<Integer>& x, const Integer& dilation) const {
    if (x.size() != static_cast<std::size_t>(ambient_)) return false;
    for (std::size_t i = 0; i < a_.rows(); ++i) {
        Integer s = 0;
        for (std::size_t c = 0; c < x.size(); ++c) s += a_(i, c) * x[c];
        if (s > dilation * b_[i]) return false;
    }
    for (std::size_t i = 0; i < c_.rows(); ++i) {
        Integer s = 0;
        for (std::size_t c = 0; c < x.size(); ++c) s += c_(i, c) * x[c];
        if (s != dilation * e_[i]) return false;
    }
    return true;
}

Integer count_points(const LatticePolytope& p, std::uint64_t n, bool interior, std::uint64_t budget) {
    const auto& proj = *p.projection_;
    Integer dil(static_cast<unsigned long>(n));
    Integer strict = interior ? 1 : 0;
    auto rhs = [&](const Row& r) -> Integer { return r.per_n * dil - r.per_strict * strict; };
    for (const Row& r : proj.constant_rows)
        if (rhs(r) < 0) return 0;
    std::size_t k = proj.levels.size();
    if (k == 0) return 1;
    std::vector<Integer> y(k);
    std::uint64_t visited = 0;
    Integer count = 0;
    auto scan = [&](auto&& self, std::size_t level) -> void {
        std::optional<Integer> lo, hi;
        for (const Row& r : proj.levels[level]) {
            Integer s = rhs(r);
            for (std::size_t q = 0; q < level; ++q) s -= r.coef[q] * y[q];
            const Integer& a = r.coef[level];
            if (a > 0) {
                Integer b = floor_div(s, a);
                if (!hi || b < *hi) hi = b;
            } else if (a < 0) {
                Integer b = ceil_div(s, a);
                if (!lo || b > *lo) lo = b;
            } else if (s < 0) {
                return;
            }
        }
        for (Integer v = *lo; v <= *hi; ++v) {
            if (++visited > budget)
                throw Error(ErrorKind::ScanTooLarge, "scan exceeds the budget of " + std::to_string(budget) + " points");
            y[level] = v;
            if (level + 1 == k) {
                ++count;
            } else {
                self(self, level + 1);
            }
        }
    };
    scan(scan, 0);
    return count;
}

// ---- families ----

LatticePolytope standard_simplex(int k) {
    if (k < 0) throw Error(ErrorKind::BadArgument, "simplex dimension must be nonnegative");
    std::size_t d = static_cast<std::size_t>(k) + 1;
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < d; ++i) rows.push_back(unit_row(d, i, -1));
    ZMatrix eq(1, d, Integer(1));
    return LatticePolytope(static_cast<int>(d), rows_to_matrix(rows, d), std::vector<Integer>(d, 0), eq, {Integer(1)});
}

LatticePolytope unit_cube(int d) {
    if (d < 0) throw Error(ErrorKind::BadArgument, "cube dimension must be nonnegative");
    std::size_t n = static_cast<std::size_t>(d);
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> b;
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(unit_row(n, i, -1));
        b.emplace_back(0);
        rows.push_back(unit_row(n, i, 1));
        b.emplace_back(1);
    }
    return LatticePolytope(d, rows_to_matrix(rows, n), b);
}

LatticePolytope crosspolytope(int d) {
    if (d < 1 || d > 20) throw Error(ErrorKind::BadArgument, "crosspolytope dimension must be in 1..20");
    std::size_t n = static_cast<std::size_t>(d);
    std::vector<std::vector<Integer>> rows;
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
        std::vector<Integer> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = (signs >> i & 1) ? -1 : 1;
        rows.push_back(row);
    }
    return LatticePolytope(d, rows_to_matrix(rows, n), std::vector<Integer>(rows.size(), 1));
}

LatticePolytope hypersimplex(int r, int d) {
    if (d < 1 || r < 0 || r > d) throw Error(ErrorKind::BadArgument, "hypersimplex needs 0 <= r <= d, d >= 1");
    LatticePolytope cube = unit_cube(d);
    ZMatrix eq(1, static_cast<std::size_t>(d), Integer(1));
    return LatticePolytope(d, cube.inequalities(), cube.bounds(), eq, {Integer(r)});
}

LatticePolytope order_polytope(const Poset& p) {
    std::size_t n = p.size();
    LatticePolytope cube = unit_cube(static_cast<int>(n));
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> b = cube.bounds();
    for (std::size_t r = 0; r < cube.inequalities().rows(); ++r) {
        std::vector<Integer> row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = cube.inequalities()(r, c);
        rows.push_back(row);
    }
    for (auto [lo, hi] : p.covers()) {
        std::vector<Integer> row(n, 0);
        row[lo] = 1;
        row[hi] = -1;
        rows.push_back(row);
        b.emplace_back(0);
    }
    return LatticePolytope(static_cast<int>(n), rows_to_matrix(rows, n), b);
}

LatticePolytope chain_polytope(const Poset& p) {
    std::size_t n = p.size();
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> b;
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(unit_row(n, i, -1));
        b.emplace_back(0);
    }
    std::vector<ElementId> chain;
    auto walk = [&](auto&& self, ElementId x) -> void {
        chain.push_back(x);
        if (p.upper_covers()[x].empty()) {
            std::vector<Integer> row(n, 0);
            for (ElementId c : chain) row[c] = 1;
            rows.push_back(row);
            b.emplace_back(1);
        }
        for (ElementId y : p.upper_covers()[x]) self(self, y);
        chain.pop_back();
    };
    for (ElementId x = 0; x < n; ++x)
        if (p.lower_covers()[x].empty()) walk(walk, x);
    return LatticePolytope(static_cast<int>(n), rows_to_matrix(rows, n), b);
}

LatticePolytope lattice_polygon(const std::vector<std::pair<long, long>>& points) {
    std::vector<std::pair<long, long>> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) -> Integer {
        return Integer(a.first - o.first) * (b.second - o.second) - Integer(a.second - o.second) * (b.first - o.first);
    };
    // Monotone chain, counter-clockwise, collinear points dropped.
    std::vector<std::pair<long, long>> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (const auto& pt : pts) {
            while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
            hull.push_back(pt);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    if (hull.size() < 3) throw Error(ErrorKind::NotLatticePolygon, "points do not span a polygon");
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> b;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        auto [px, py] = hull[i];
        auto [qx, qy] = hull[(i + 1) % hull.size()];
        Integer nx = qy - py, ny = px - qx;
        Integer g = gcd(nx, ny);
        nx /= g;
        ny /= g;
        rows.push_back({nx, ny});
        b.push_back(nx * px + ny * py);
    }
    return LatticePolytope(2, rows_to_matrix(rows, 2), b);
}

LatticePolytope build_named_polytope(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::BadSpec, "polytope spec needs kind:args, got '" + spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
    try {
        if (kind == "simplex") return standard_simplex(static_cast<int>(parse_long(rest, spec)));
        if (kind == "cube") return unit_cube(static_cast<int>(parse_long(rest, spec)));
        if (kind == "cross") return crosspolytope(static_cast<int>(parse_long(rest, spec)));
        if (kind == "hypersimplex") {
            auto parts = split(rest, ',');
            if (parts.size() != 2) throw Error(ErrorKind::BadSpec, "hypersimplex needs r,d");
            return hypersimplex(static_cast<int>(parse_long(parts[0], spec)), static_cast<int>(parse_long(parts[1], spec)));
        }
        if (kind == "order") return order_polytope(build_named_poset(rest));
        if (kind == "chain") return chain_polytope(build_named_poset(rest));
        if (kind == "polygon") {
            std::vector<std::pair<long, long>> pts;
            for (const auto& item : split(rest, ';')) {
                auto xy = split(item, ',');
                if (xy.size() != 2) throw Error(ErrorKind::BadSpec, "polygon points are x,y pairs separated by ';'");
                pts.emplace_back(parse_long(xy[0], spec), parse_long(xy[1], spec));
            }
            return lattice_polygon(pts);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BadArgument) throw Error(ErrorKind::BadSpec, e.what());
        throw;
    }
    throw Error(ErrorKind::BadSpec, "unknown polytope kind '" + kind + "'");
}

// ---- Ehrhart data ----

std::vector<Integer> h_star_from_counts(const std::vector<Integer>& counts, int dimension) {
    if (dimension < 0 || counts.size() < static_cast<std::size_t>(dimension) + 1)
        throw Error(ErrorKind::BadArgument, "need counts for n = 0..dimension");
    std::vector<Integer> h;
    for (int j = 0; j <= dimension; ++j) {
        Integer s = 0;
        for (int i = 0; i <= j; ++i) {
            Integer term = binomial(Integer(dimension + 1), static_cast<unsigned>(i)) * counts[static_cast<std::size_t>(j - i)];
            s += i % 2 ? -term : term;
        }
        h.push_back(s);
    }
    if (h[0] != 1) throw Error(ErrorKind::NonIntegralHStar, "h*_0 is " + h[0].get_str() + ", expected 1");
    for (const auto& v : h)
        if (v < 0) throw Error(ErrorKind::NonIntegralHStar, "negative h* entry " + v.get_str());
    return h;
}

EhrhartData ehrhart_polynomial(const LatticePolytope& p, std::uint64_t budget) {
    EhrhartData data;
    int k = p.dimension();
    data.dimension = k;
    std::vector<Integer> counts;
    std::vector<Rational> xs, ys, ixs, iys;
    for (int n = 0; n <= k + 1; ++n) counts.push_back(count_points(p, static_cast<std::uint64_t>(n), false, budget));
    for (int n = 0; n <= k; ++n) {
        xs.emplace_back(n);
        ys.emplace_back(counts[static_cast<std::size_t>(n)]);
    }
    data.closed = interpolate(xs, ys);
    if (data.closed(Rational(k + 1)) != Rational(counts.back()))
        throw Error(ErrorKind::BadArgument, "counts are not polynomial of degree dim; not a lattice polytope?");
    for (int n = 1; n <= k + 1; ++n) {
        ixs.emplace_back(n);
        iys.emplace_back(count_points(p, static_cast<std::uint64_t>(n), true, budget));
    }
    data.interior = interpolate(ixs, iys);
    data.reciprocity = data.closed.compose(-Poly::x()) * Rational(k % 2 ? -1 : 1) == data.interior;
    data.volume = data.closed.coeff(k);
    data.normalized_volume = to_integer(data.volume * Rational(factorial(static_cast<unsigned>(k))));
    data.h_star = h_star_from_counts(counts, k);
    return data;
}

ReciprocityReport reciprocity_check(const LatticePolytope& p, std::uint64_t upto, std::uint64_t budget) {
    EhrhartData data = ehrhart_polynomial(p, budget);
    ReciprocityReport rep;
    rep.holds = true;
    for (std::uint64_t n = 1; n <= upto; ++n) {
        ReciprocityRow row;
        row.n = n;
        Rational at = data.closed(-Rational(static_cast<unsigned long>(n)));
        row.predicted = to_integer(data.dimension % 2 ? -at : at);
        row.counted = count_points(p, n, true, budget);
        rep.holds = rep.holds && row.predicted == row.counted;
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<Integer> h_star(const LatticePolytope& p, std::uint64_t budget) {
    std::vector<Integer> counts;
    for (int n = 0; n <= p.dimension(); ++n) counts.push_back(count_points(p, static_cast<std::uint64_t>(n), false, budget));
    return h_star_from_counts(counts, p.dimension());
}

PickReport pick_check(const LatticePolytope& polygon, std::uint64_t budget) {
    if (polygon.dimension() != 2)
        throw Error(ErrorKind::NotTwoDimensional, "polytope has dimension " + std::to_string(polygon.dimension()));
    EhrhartData data = ehrhart_polynomial(polygon, budget);
    PickReport rep;
    rep.area = data.volume;
    Integer total = count_points(polygon, 1, false, budget);
    rep.interior = count_points(polygon, 1, true, budget);
    rep.boundary = total - rep.interior;
    for (int i = 0; i <= 2; ++i) rep.coefficients.push_back(data.closed.coeff(i));
    Rational half_b = Rational(rep.boundary) / 2;
    rep.consistent = rep.coefficients[2] == rep.area && rep.coefficients[1] == half_b && rep.coefficients[0] == 1 &&
                     rep.area == Rational(rep.interior) + half_b - 1;
    return rep;
}

PosetPolytopeReport poset_polytope_bridge(const Poset& p, std::uint64_t budget) {
    PosetPolytopeReport rep;
    rep.order = ehrhart_polynomial(order_polytope(p), budget);
    rep.chain = ehrhart_polynomial(chain_polytope(p), budget);
    rep.shifted_order_polynomial = order_polynomial(p).compose(Poly::x() + Poly(1));
    rep.linear_extensions = linear_extensions(p);
    rep.expected_volume = make_rational(rep.linear_extensions, factorial(static_cast<unsigned>(p.size())));
    rep.ehrhart_match = rep.order.closed == rep.chain.closed && rep.order.closed == rep.shifted_order_polynomial;
    rep.volume_match = rep.order.volume == rep.expected_volume && rep.chain.volume == rep.expected_volume;
    return rep;
}

}  // namespace ec
