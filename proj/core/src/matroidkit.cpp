#include "ec/matroidkit.hpp"

#include "ec/error.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace ec {

namespace {

int popcount(ElementSet s) { return std::popcount(s); }

ElementSet bit(std::size_t i) { return ElementSet{1} << i; }

ElementSet full_set(std::size_t n) { return n >= 64 ? ~ElementSet{0} : bit(n) - 1; }

void check_ground_size(std::size_t n) {
    if (n > kMaxGroundSize) throw Error(ErrorKind::TooLarge, "ground set has " + std::to_string(n) + " elements (limit 64)");
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

class BasisOracle final : public RankOracle {
public:
    BasisOracle(std::size_t n, std::vector<ElementSet> bases) : n_(n), bases_(std::move(bases)) {}
    std::size_t size() const override { return n_; }
    int rank(ElementSet set) const override {
        int best = 0;
        for (ElementSet b : bases_) best = std::max(best, popcount(set & b));
        return best;
    }

private:
    std::size_t n_;
    std::vector<ElementSet> bases_;
};

// Integer columns; rank by fraction-free elimination.
class RationalColumnsOracle final : public RankOracle {
public:
    explicit RationalColumnsOracle(std::vector<std::vector<Integer>> columns) : columns_(std::move(columns)) {}
    std::size_t size() const override { return columns_.size(); }
    int rank(ElementSet set) const override {
        std::vector<std::vector<Integer>> rows;
        for (std::size_t i = 0; i < columns_.size(); ++i)
            if (set & bit(i)) rows.push_back(columns_[i]);
        if (rows.empty()) return 0;
        std::size_t width = rows[0].size();
        int r = 0;
        Integer prev = 1;
        for (std::size_t col = 0; col < width && r < static_cast<int>(rows.size()); ++col) {
            std::size_t ur = static_cast<std::size_t>(r);
            std::size_t pivot = ur;
            while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[pivot], rows[ur]);
            for (std::size_t i = ur + 1; i < rows.size(); ++i) {
                for (std::size_t j = col + 1; j < width; ++j) {
                    Integer v = rows[ur][col] * rows[i][j] - rows[i][col] * rows[ur][j];
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                    rows[i][j] = v;
                }
                rows[i][col] = 0;
            }
            prev = rows[ur][col];
            ++r;
        }
        return r;
    }

private:
    std::vector<std::vector<Integer>> columns_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
        if (e & 1) result = mul_mod(result, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return result;
}

class ModColumnsOracle final : public RankOracle {
public:
    ModColumnsOracle(std::vector<std::vector<std::uint64_t>> columns, std::uint64_t p)
        : columns_(std::move(columns)), p_(p) {}
    std::size_t size() const override { return columns_.size(); }
    int rank(ElementSet set) const override {
        std::vector<std::vector<std::uint64_t>> rows;
        for (std::size_t i = 0; i < columns_.size(); ++i)
            if (set & bit(i)) rows.push_back(columns_[i]);
        if (rows.empty()) return 0;
        std::size_t width = rows[0].size();
        std::size_t r = 0;
        for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
            std::size_t pivot = r;
            while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[pivot], rows[r]);
            std::uint64_t inv = inverse_mod(rows[r][col], p_);
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                std::uint64_t f = mul_mod(rows[i][col], inv, p_);
                if (f == 0) continue;
                for (std::size_t j = col; j < width; ++j)
                    rows[i][j] = (rows[i][j] + p_ - mul_mod(f, rows[r][j], p_)) % p_;
            }
            ++r;
        }
        return static_cast<int>(r);
    }

private:
    std::vector<std::vector<std::uint64_t>> columns_;
    std::uint64_t p_;
};

class GraphOracle final : public RankOracle {
public:
    GraphOracle(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
        : vertices_(vertices), edges_(std::move(edges)) {}
    std::size_t size() const override { return edges_.size(); }
    int rank(ElementSet set) const override {
        std::vector<std::size_t> parent(vertices_);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int r = 0;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (!(set & bit(i))) continue;
            std::size_t a = find(edges_[i].first), b = find(edges_[i].second);
            if (a != b) {
                parent[a] = b;
                ++r;
            }
        }
        return r;
    }

private:
    std::size_t vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

class UniformOracle final : public RankOracle {
public:
    UniformOracle(int k, std::size_t n) : k_(k), n_(n) {}
    std::size_t size() const override { return n_; }
    int rank(ElementSet set) const override { return std::min(popcount(set), k_); }

private:
    int k_;
    std::size_t n_;
};

class MinorOracle final : public RankOracle {
public:
    MinorOracle(std::shared_ptr<const RankOracle> parent, std::vector<std::size_t> kept, ElementSet contracted)
        : parent_(std::move(parent)), kept_(std::move(kept)), contracted_(contracted),
          contracted_rank_(parent_->rank(contracted)) {}
    std::size_t size() const override { return kept_.size(); }
    int rank(ElementSet set) const override {
        ElementSet lifted = contracted_;
        for (std::size_t i = 0; i < kept_.size(); ++i)
            if (set & bit(i)) lifted |= bit(kept_[i]);
        return parent_->rank(lifted) - contracted_rank_;
    }

private:
    std::shared_ptr<const RankOracle> parent_;
    std::vector<std::size_t> kept_;
    ElementSet contracted_;
    int contracted_rank_;
};

class DualOracle final : public RankOracle {
public:
    explicit DualOracle(std::shared_ptr<const RankOracle> parent)
        : parent_(std::move(parent)), full_(full_set(parent_->size())), full_rank_(parent_->rank(full_)) {}
    std::size_t size() const override { return parent_->size(); }
    int rank(ElementSet set) const override { return popcount(set) + parent_->rank(full_ & ~set) - full_rank_; }

private:
    std::shared_ptr<const RankOracle> parent_;
    ElementSet full_;
    int full_rank_;
};

class SumOracle final : public RankOracle {
public:
    SumOracle(std::shared_ptr<const RankOracle> a, std::shared_ptr<const RankOracle> b)
        : a_(std::move(a)), b_(std::move(b)) {}
    std::size_t size() const override { return a_->size() + b_->size(); }
    int rank(ElementSet set) const override {
        std::size_t na = a_->size();
        return a_->rank(set & full_set(na)) + b_->rank(na >= 64 ? 0 : set >> na);
    }

private:
    std::shared_ptr<const RankOracle> a_;
    std::shared_ptr<const RankOracle> b_;
};

constexpr std::size_t kRankCacheLimit = 1 << 20;

std::string set_label(const Matroid& m, ElementSet s) {
    std::string out = "{";
    bool first = true;
    for (const auto& name : m.names(s)) {
        if (!first) out += ",";
        out += name;
        first = false;
    }
    return out + "}";
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

int parse_int(const std::string& text, const std::string& spec) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadSpec, "bad number in matroid spec '" + spec + "'");
    }
}

}  // namespace

// ---- BivariatePoly ----

BivariatePoly::BivariatePoly(const Integer& constant) { add_term({0, 0}, constant); }

BivariatePoly BivariatePoly::monomial(const Integer& c, int x_degree, int y_degree) {
    BivariatePoly p;
    p.add_term({x_degree, y_degree}, c);
    return p;
}

void BivariatePoly::add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer BivariatePoly::coeff(int x_degree, int y_degree) const {
    auto it = terms_.find({x_degree, y_degree});
    return it == terms_.end() ? Integer(0) : it->second;
}

int BivariatePoly::x_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int BivariatePoly::y_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

Rational BivariatePoly::operator()(const Rational& x, const Rational& y) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += Rational(c) * rpow(x, e.first) * rpow(y, e.second);
    return sum;
}

Poly BivariatePoly::at_x(const Rational& x) const {
    Poly out;
    for (const auto& [e, c] : terms_) out += Poly::monomial(Rational(c) * rpow(x, e.first), e.second);
    return out;
}

Poly BivariatePoly::at_y(const Rational& y) const {
    Poly out;
    for (const auto& [e, c] : terms_) out += Poly::monomial(Rational(c) * rpow(y, e.second), e.first);
    return out;
}

BivariatePoly BivariatePoly::swapped() const {
    BivariatePoly out;
    for (const auto& [e, c] : terms_) out.add_term({e.second, e.first}, c);
    return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
    BivariatePoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return *this = std::move(out);
}

std::string BivariatePoly::to_string(const std::string& xvar, const std::string& yvar) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
        std::string mono;
        auto var = [&](const std::string& v, int d) {
            if (d == 0) return;
            mono += v;
            if (d > 1) mono += "^" + std::to_string(d);
        };
        var(xvar, e.first);
        var(yvar, e.second);
        Integer mag = abs(c);
        std::string sign = c < 0 ? "-" : (out.empty() ? "" : "+");
        std::string num = (mag == 1 && !mono.empty()) ? "" : mag.get_str();
        out += sign + num + mono;
    }
    return out;
}

BivariatePoly pow(const BivariatePoly& p, unsigned e) {
    BivariatePoly result(1), base = p;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

// ---- Matroid ----

Matroid::Matroid(std::vector<std::string> labels, std::shared_ptr<const RankOracle> oracle, std::optional<GraphData> graph)
    : labels_(std::move(labels)), oracle_(std::move(oracle)), graph_(graph), cache_(std::make_shared<Cache>()) {
    check_ground_size(labels_.size());
    if (!oracle_ || oracle_->size() != labels_.size())
        throw Error(ErrorKind::BadArgument, "rank oracle size does not match the labels");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error(ErrorKind::BadArgument, "duplicate element labels");
}

ElementSet Matroid::ground() const { return full_set(size()); }

ElementSet Matroid::subset(const std::vector<std::string>& names) const {
    ElementSet out = 0;
    for (const auto& name : names) {
        auto it = std::find(labels_.begin(), labels_.end(), name);
        if (it == labels_.end()) throw Error(ErrorKind::BadSubset, "no element '" + name + "'");
        out |= bit(static_cast<std::size_t>(it - labels_.begin()));
    }
    return out;
}

std::vector<std::string> Matroid::names(ElementSet set) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (set & bit(i)) out.push_back(labels_[i]);
    return out;
}

int Matroid::rank(ElementSet set) const {
    if (set & ~ground()) throw Error(ErrorKind::BadSubset, "set is not inside the ground set");
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->ranks.find(set);
        if (it != cache_->ranks.end()) return it->second;
    }
    int r = oracle_->rank(set);
    std::lock_guard lock(cache_->mutex);
    if (cache_->ranks.size() < kRankCacheLimit) cache_->ranks.emplace(set, r);
    return r;
}

ElementSet Matroid::closure(ElementSet set) const {
    int r = rank(set);
    ElementSet out = set;
    for (std::size_t i = 0; i < size(); ++i)
        if (!(set & bit(i)) && rank(set | bit(i)) == r) out |= bit(i);
    return out;
}

bool Matroid::is_independent(ElementSet set) const { return rank(set) == popcount(set); }

bool Matroid::is_basis(ElementSet set) const { return popcount(set) == rank() && is_independent(set); }

// ---- constructors ----

Matroid matroid_from_bases(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& bases) {
    check_ground_size(labels.size());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], i).second) throw Error(ErrorKind::BadArgument, "duplicate label '" + labels[i] + "'");
    if (bases.empty()) throw Error(ErrorKind::AxiomViolation, "a matroid needs at least one basis");
    std::set<ElementSet> sets;
    for (const auto& b : bases) {
        ElementSet s = 0;
        for (const auto& name : b) {
            auto it = index.find(name);
            if (it == index.end()) throw Error(ErrorKind::BadSubset, "no element '" + name + "'");
            if (s & bit(it->second)) throw Error(ErrorKind::AxiomViolation, "basis repeats '" + name + "'");
            s |= bit(it->second);
        }
        sets.insert(s);
    }
    int size = popcount(*sets.begin());
    for (ElementSet s : sets)
        if (popcount(s) != size) throw Error(ErrorKind::AxiomViolation, "bases have different sizes");
    for (ElementSet b1 : sets)
        for (ElementSet b2 : sets)
            for (ElementSet rest = b1 & ~b2; rest; rest &= rest - 1) {
                ElementSet out = rest & -rest;
                bool found = false;
                for (ElementSet cand = b2 & ~b1; cand && !found; cand &= cand - 1)
                    found = sets.count((b1 & ~out) | (cand & -cand)) > 0;
                if (!found) throw Error(ErrorKind::AxiomViolation, "basis exchange fails");
            }
    std::size_t n = labels.size();
    return Matroid(std::move(labels), std::make_shared<BasisOracle>(n, std::vector<ElementSet>(sets.begin(), sets.end())));
}

Matroid matroid_from_matrix(const QMatrix& columns, std::vector<std::string> labels) {
    if (labels.empty()) labels = default_labels(columns.cols());
    if (labels.size() != columns.cols()) throw Error(ErrorKind::BadArgument, "one label per column required");
    std::vector<std::vector<Integer>> cols(columns.cols());
    for (std::size_t c = 0; c < columns.cols(); ++c) {
        Integer scale = 1;
        for (std::size_t r = 0; r < columns.rows(); ++r) scale = lcm(scale, columns(r, c).get_den());
        for (std::size_t r = 0; r < columns.rows(); ++r) cols[c].push_back(to_integer(columns(r, c) * Rational(scale)));
    }
    return Matroid(std::move(labels), std::make_shared<RationalColumnsOracle>(std::move(cols)));
}

Matroid matroid_from_matrix_mod(const ZMatrix& columns, std::uint64_t p, std::vector<std::string> labels) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (labels.empty()) labels = default_labels(columns.cols());
    if (labels.size() != columns.cols()) throw Error(ErrorKind::BadArgument, "one label per column required");
    std::vector<std::vector<std::uint64_t>> cols(columns.cols());
    Integer modulus(static_cast<unsigned long>(p));
    for (std::size_t c = 0; c < columns.cols(); ++c)
        for (std::size_t r = 0; r < columns.rows(); ++r) {
            Integer v = columns(r, c) % modulus;
            if (v < 0) v += modulus;
            cols[c].push_back(v.get_ui());
        }
    return Matroid(std::move(labels), std::make_shared<ModColumnsOracle>(std::move(cols), p));
}

Matroid matroid_from_graph(const Graph& g) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::map<std::string, int> copies;
    for (const auto& e : g.edges())
        for (long k = 0; k < e.multiplicity; ++k) {
            std::string base = g.label(e.from) + "-" + g.label(e.to);
            int count = ++copies[base];
            labels.push_back(count == 1 ? base : base + "#" + std::to_string(count));
            edges.emplace_back(e.from, e.to);
        }
    check_ground_size(labels.size());
    auto oracle = std::make_shared<GraphOracle>(g.vertex_count(), std::move(edges));
    // Components of the whole graph: vertices minus the rank of all edges.
    std::size_t components = g.vertex_count() - static_cast<std::size_t>(oracle->rank(full_set(oracle->size())));
    return Matroid(std::move(labels), oracle, GraphData{g.vertex_count(), components});
}

Matroid uniform_matroid(int k, int n) {
    if (n < 0 || k < 0 || k > n) throw Error(ErrorKind::BadArgument, "uniform matroid needs 0 <= k <= n");
    check_ground_size(static_cast<std::size_t>(n));
    return Matroid(default_labels(static_cast<std::size_t>(n)), std::make_shared<UniformOracle>(k, static_cast<std::size_t>(n)));
}

Matroid fano_matroid() {
    ZMatrix m(3, 7);
    for (std::size_t v = 1; v <= 7; ++v)
        for (std::size_t r = 0; r < 3; ++r) m(r, v - 1) = (v >> r) & 1;
    return matroid_from_matrix_mod(m, 2);
}

Matroid matroid_from_arrangement(const Arrangement& a) {
    if (!a.is_central()) throw Error(ErrorKind::NotCentral, "arrangement has no common point");
    QMatrix cols(static_cast<std::size_t>(a.dimension()), a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < cols.rows(); ++i) cols(i, j) = Rational(a[j].normal[i]);
    return matroid_from_matrix(cols);
}

Matroid build_named_matroid(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
    try {
        if (kind == "fano" && colon == std::string::npos) return fano_matroid();
        if (kind == "uniform") {
            auto parts = split(rest, ',');
            if (parts.size() != 2) throw Error(ErrorKind::BadSpec, "uniform needs k,n");
            return uniform_matroid(parse_int(parts[0], spec), parse_int(parts[1], spec));
        }
        if (kind == "graphic" && !rest.empty()) return matroid_from_graph(build_named_graph(rest));
        if (kind == "arrangement" && !rest.empty()) return matroid_from_arrangement(build_named_arrangement(rest));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BadArgument) throw Error(ErrorKind::BadSpec, e.what());
        throw;
    }
    throw Error(ErrorKind::BadSpec, "unknown matroid spec '" + spec + "'");
}

// ---- queries ----

std::vector<ElementSet> matroid_bases(const Matroid& m) {
    std::vector<ElementSet> out;
    int r = m.rank();
    std::size_t n = m.size();
    std::function<void(std::size_t, ElementSet, int)> grow = [&](std::size_t from, ElementSet cur, int size) {
        if (size == r) {
            out.push_back(cur);
            return;
        }
        if (n - from < static_cast<std::size_t>(r - size)) return;
        for (std::size_t i = from; i < n; ++i)
            if (m.rank(cur | bit(i)) == size + 1) grow(i + 1, cur | bit(i), size + 1);
    };
    grow(0, 0, 0);
    return out;
}

std::vector<ElementSet> matroid_circuits(const Matroid& m) {
    std::vector<ElementSet> out;
    std::size_t n = m.size();
    // A circuit is an independent set plus a larger element that it spans minimally.
    std::function<void(std::size_t, ElementSet, int)> grow = [&](std::size_t from, ElementSet cur, int size) {
        for (std::size_t e = from; e < n; ++e) {
            ElementSet c = cur | bit(e);
            if (m.rank(c) == size + 1) continue;
            bool minimal = true;
            for (ElementSet rest = cur; rest && minimal; rest &= rest - 1)
                minimal = m.rank(c & ~(rest & -rest)) == size;
            if (minimal) out.push_back(c);
        }
        for (std::size_t i = from; i < n; ++i)
            if (m.rank(cur | bit(i)) == size + 1) grow(i + 1, cur | bit(i), size + 1);
    };
    grow(0, 0, 0);
    std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    return out;
}

std::vector<ElementSet> matroid_flats(const Matroid& m) {
    std::set<ElementSet> seen{m.closure(0)};
    std::vector<ElementSet> queue(seen.begin(), seen.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        ElementSet f = queue[head];
        for (std::size_t e = 0; e < m.size(); ++e)
            if (!(f & bit(e))) {
                ElementSet g = m.closure(f | bit(e));
                if (seen.insert(g).second) queue.push_back(g);
            }
    }
    std::vector<ElementSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](ElementSet a, ElementSet b) {
        int ra = m.rank(a), rb = m.rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    return out;
}

std::vector<ElementSet> matroid_components(const Matroid& m) {
    std::size_t n = m.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    ElementSet basis = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (m.rank(basis | bit(i)) > popcount(basis)) basis |= bit(i);
    int r = popcount(basis);
    // Fundamental circuits with respect to one basis link exactly the connected elements.
    for (std::size_t e = 0; e < n; ++e) {
        if (basis & bit(e)) continue;
        for (std::size_t b = 0; b < n; ++b)
            if ((basis & bit(b)) && m.rank((basis & ~bit(b)) | bit(e)) == r) parent[find(b)] = find(e);
    }
    std::map<std::size_t, ElementSet> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)] |= bit(i);
    std::vector<ElementSet> out;
    for (const auto& [root, set] : groups) out.push_back(set);
    std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return (a & -a) < (b & -b); });
    return out;
}

MatroidQueries matroid_queries(const Matroid& m) {
    MatroidQueries q;
    q.bases = matroid_bases(m);
    q.circuits = matroid_circuits(m);
    q.flats = matroid_flats(m);
    q.components = matroid_components(m);
    int r = m.rank();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.rank(bit(i)) == 0) q.loops |= bit(i);
        if (m.rank(m.ground() & ~bit(i)) < r) q.coloops |= bit(i);
    }
    std::vector<std::string> labels;
    for (ElementSet f : q.flats) labels.push_back(set_label(m, f));
    std::vector<std::pair<ElementId, ElementId>> less;
    for (std::size_t i = 0; i < q.flats.size(); ++i)
        for (std::size_t j = 0; j < q.flats.size(); ++j)
            if (i != j && (q.flats[i] & ~q.flats[j]) == 0) less.emplace_back(i, j);
    q.lattice_of_flats = Poset::from_relation(labels, less);

    bool atomic = true;
    std::vector<ElementSet> atoms;
    for (ElementSet f : q.flats)
        if (m.rank(f) == 1) atoms.push_back(f);
    for (ElementSet f : q.flats) {
        ElementSet join = 0;
        for (ElementSet a : atoms)
            if ((a & ~f) == 0) join |= a;
        atomic = atomic && m.closure(join) == f;
    }
    bool semimodular = true;
    for (ElementSet f : q.flats)
        for (ElementSet g : q.flats)
            semimodular = semimodular && m.rank(f) + m.rank(g) >= m.rank(f & g) + m.rank(m.closure(f | g));
    q.geometric = atomic && semimodular;
    return q;
}

// ---- operations ----

Matroid dual(const Matroid& m) { return Matroid(m.labels(), std::make_shared<DualOracle>(m.oracle())); }

namespace {

Matroid minor(const Matroid& m, ElementSet removed, ElementSet contracted) {
    if (removed & ~m.ground()) throw Error(ErrorKind::BadSubset, "set is not inside the ground set");
    std::vector<std::size_t> kept;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!(removed & bit(i))) {
            kept.push_back(i);
            labels.push_back(m.label(i));
        }
    return Matroid(std::move(labels), std::make_shared<MinorOracle>(m.oracle(), std::move(kept), contracted));
}

}  // namespace

Matroid delete_elements(const Matroid& m, ElementSet set) { return minor(m, set, 0); }

Matroid contract_elements(const Matroid& m, ElementSet set) { return minor(m, set, set); }

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    check_ground_size(a.size() + b.size());
    std::vector<std::string> labels = a.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (std::string name : b.labels()) {
        while (used.count(name)) name += "'";
        used.insert(name);
        labels.push_back(name);
    }
    return Matroid(std::move(labels), std::make_shared<SumOracle>(a.oracle(), b.oracle()));
}

// ---- Tutte polynomial ----

namespace {

BivariatePoly expand_corank_nullity(const std::map<std::pair<int, int>, Integer>& counts) {
    BivariatePoly xm1 = BivariatePoly::x() - BivariatePoly(1);
    BivariatePoly ym1 = BivariatePoly::y() - BivariatePoly(1);
    BivariatePoly out;
    for (const auto& [e, c] : counts)
        out += BivariatePoly(c) * pow(xm1, static_cast<unsigned>(e.first)) * pow(ym1, static_cast<unsigned>(e.second));
    return out;
}

BivariatePoly tutte_subset_sum(const Matroid& m) {
    std::size_t n = m.size();
    if (n > kSubsetSumLimit)
        throw Error(ErrorKind::TooLarge, "subset sum is limited to " + std::to_string(kSubsetSumLimit) + " elements");
    const RankOracle& oracle = *m.oracle();
    int r = oracle.rank(m.ground());
    std::map<std::pair<int, int>, Integer> counts;
    for (ElementSet a = 0; a <= m.ground(); ++a) {
        int ra = oracle.rank(a);
        ++counts[{r - ra, popcount(a) - ra}];
        if (a == m.ground()) break;
    }
    return expand_corank_nullity(counts);
}

// States are minors: remaining elements R of M / F for a flat F of M.
BivariatePoly tutte_deletion_contraction(const Matroid& m) {
    std::map<std::pair<ElementSet, ElementSet>, BivariatePoly> memo;
    const BivariatePoly x = BivariatePoly::x(), y = BivariatePoly::y();
    std::function<BivariatePoly(ElementSet, ElementSet)> solve = [&](ElementSet remaining, ElementSet flat) {
        if (remaining == 0) return BivariatePoly(1);
        auto key = std::make_pair(remaining, flat);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        ElementSet e = remaining & -remaining;
        ElementSet rest = remaining & ~e;
        BivariatePoly result;
        if (flat & e) {
            result = y * solve(rest, flat);
        } else if (m.rank(rest | flat) < m.rank(remaining | flat)) {
            result = x * solve(rest, flat);
        } else {
            result = solve(rest, flat) + solve(rest, m.closure(flat | e));
        }
        memo.emplace(key, result);
        return result;
    };
    ElementSet base = m.closure(0);
    // Loops are elements of the closure of the empty set.
    return solve(m.ground(), base);
}

}  // namespace

BivariatePoly tutte_by_activities(const Matroid& m, const std::vector<std::size_t>& order) {
    std::size_t n = m.size();
    std::vector<std::size_t> position(n, n);
    if (order.size() != n) throw Error(ErrorKind::BadArgument, "order must list every element once");
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || position[order[i]] != n) throw Error(ErrorKind::BadArgument, "order must be a permutation");
        position[order[i]] = i;
    }
    BivariatePoly out;
    for (ElementSet basis : matroid_bases(m)) {
        int internal = 0, external = 0;
        for (std::size_t e = 0; e < n; ++e) {
            bool active = true;
            if (basis & bit(e)) {
                // e is smallest in its fundamental cocircuit.
                for (std::size_t f = 0; f < n && active; ++f)
                    if (!(basis & bit(f)) && position[f] < position[e] && m.is_basis((basis & ~bit(e)) | bit(f)))
                        active = false;
                internal += active;
            } else {
                // e is smallest in its fundamental circuit.
                for (std::size_t f = 0; f < n && active; ++f)
                    if ((basis & bit(f)) && position[f] < position[e] && m.is_basis((basis & ~bit(f)) | bit(e)))
                        active = false;
                external += active;
            }
        }
        out += BivariatePoly::monomial(1, internal, external);
    }
    return out;
}

BivariatePoly tutte(const Matroid& m, TutteBackend backend) {
    switch (backend) {
        case TutteBackend::SubsetSum:
            return tutte_subset_sum(m);
        case TutteBackend::DeletionContraction:
            return tutte_deletion_contraction(m);
        case TutteBackend::Activities: {
            std::vector<std::size_t> order(m.size());
            std::iota(order.begin(), order.end(), 0);
            return tutte_by_activities(m, order);
        }
    }
    throw Error(ErrorKind::BadArgument, "unknown Tutte backend");
}

// ---- evaluations ----

TutteReport tutte_evaluations(const Matroid& m) { return tutte_evaluations(m, tutte(m)); }

TutteReport tutte_evaluations(const Matroid& m, const BivariatePoly& t) {
    TutteReport rep;
    rep.tutte = t;
    rep.rank = m.rank();
    rep.elements = m.size();
    int r = rep.rank;
    auto at = [&](long x, long y) { return to_integer(t(Rational(x), Rational(y))); };
    rep.bases = at(1, 1);
    rep.independent_sets = at(2, 1);
    rep.spanning_sets = at(1, 2);
    rep.mobius = (r % 2 ? -1 : 1) * at(1, 0);
    rep.beta = t.coeff(1, 0);
    rep.reduced_euler = (r % 2 ? 1 : -1) * at(0, 1);

    // Coefficients of T(x, 1) give the f- and h-vectors.
    Poly shelling = t.at_y(1);
    Poly f_poly;
    for (int i = 0; i <= r; ++i)
        f_poly += shelling.coeff(i) * pow(Poly::x() + Poly(1), static_cast<unsigned>(i)) * Poly::monomial(1, r - i);
    for (int k = 0; k <= r; ++k) {
        rep.f_vector.push_back(to_integer(f_poly.coeff(k)));
        rep.h_vector.push_back(to_integer(shelling.coeff(r - k)));
    }

    Poly one_minus_q = Poly(1) - Poly::x();
    Poly at_y0 = t.at_y(0);
    rep.characteristic = at_y0.compose(one_minus_q) * Rational(r % 2 ? -1 : 1);

    if (m.graph()) {
        GraphEvaluations g;
        g.vertices = m.graph()->vertices;
        g.components = m.graph()->components;
        long v = static_cast<long>(g.vertices), c = static_cast<long>(g.components), e = static_cast<long>(m.size());
        g.chromatic = at_y0.compose(one_minus_q) * Poly::monomial((v - c) % 2 ? -1 : 1, static_cast<int>(c));
        g.acyclic_orientations = at(2, 0);
        g.totally_cyclic_orientations = at(0, 2);
        g.flow = t.at_x(0).compose(one_minus_q) * Rational((e - v + c) % 2 ? -1 : 1);
        if (c == 1) {
            Poly p = Poly::x();
            Poly reliability;
            Poly at_x1 = t.at_x(1);
            int nullity = static_cast<int>(e) - r;
            for (int j = 0; j <= nullity; ++j)
                reliability += at_x1.coeff(j) * pow(Poly(1) - p, static_cast<unsigned>(nullity - j)) *
                               pow(p, static_cast<unsigned>(r));
            g.reliability = reliability;
        }
        rep.graph = g;
    }
    return rep;
}

// ---- coboundary ----

BivariatePoly coboundary_from_tutte(const BivariatePoly& t, int rank) {
    BivariatePoly shift = BivariatePoly::x() + BivariatePoly::y() - BivariatePoly(1);
    BivariatePoly ym1 = BivariatePoly::y() - BivariatePoly(1);
    BivariatePoly out;
    for (const auto& [e, c] : t.terms()) {
        if (e.first > rank) throw Error(ErrorKind::BadArgument, "x-degree exceeds the rank");
        out += BivariatePoly(c) * pow(shift, static_cast<unsigned>(e.first)) *
               pow(ym1, static_cast<unsigned>(rank - e.first)) * BivariatePoly::monomial(1, 0, e.second);
    }
    return out;
}

BivariatePoly tutte_from_coboundary(const BivariatePoly& coboundary, int rank) {
    // Substitute X = (x - 1)(y - 1), then divide by (y - 1)^rank.
    BivariatePoly big_x = (BivariatePoly::x() - BivariatePoly(1)) * (BivariatePoly::y() - BivariatePoly(1));
    BivariatePoly sub;
    for (const auto& [e, c] : coboundary.terms())
        sub += BivariatePoly(c) * pow(big_x, static_cast<unsigned>(e.first)) * BivariatePoly::monomial(1, 0, e.second);
    std::map<int, std::vector<Integer>> by_x;
    for (const auto& [e, c] : sub.terms()) {
        auto& row = by_x[e.first];
        if (row.size() <= static_cast<std::size_t>(e.second)) row.resize(static_cast<std::size_t>(e.second) + 1);
        row[static_cast<std::size_t>(e.second)] = c;
    }
    BivariatePoly out;
    for (auto& [xd, row] : by_x) {
        for (int step = 0; step < rank; ++step) {
            // Synthetic division by (y - 1).
            if (row.empty()) break;
            std::vector<Integer> quotient(row.size() - 1);
            Integer carry = 0;
            for (std::size_t k = row.size(); k-- > 1;) {
                carry += row[k];
                quotient[k - 1] = carry;
            }
            if (carry + row[0] != 0) throw Error(ErrorKind::BadArgument, "not divisible by (y - 1)^rank");
            row = std::move(quotient);
        }
        for (std::size_t k = 0; k < row.size(); ++k) out += BivariatePoly::monomial(row[k], xd, static_cast<int>(k));
    }
    return out;
}

BivariatePoly coboundary(const Matroid& m) { return coboundary_from_tutte(tutte(m), m.rank()); }

BivariatePoly tutte_via_finite_fields(const Arrangement& a, const FiniteFieldOptions& options) {
    if (!a.is_central()) throw Error(ErrorKind::NotCentral, "arrangement has no common point");
    int d = a.dimension();
    int r = matroid_from_arrangement(a).rank();
    std::vector<std::uint64_t> primes = options.primes.empty() ? stable_primes(a) : options.primes;
    std::size_t needed = static_cast<std::size_t>(r) + 1;
    if (primes.size() < needed)
        throw Error(ErrorKind::BadArgument, "need at least " + std::to_string(needed) + " primes");

    // values[j][i]: coefficient of t^j in the reduced histogram at primes[i].
    std::size_t tdeg = a.size() + 1;
    std::vector<std::vector<Rational>> values(tdeg);
    for (std::uint64_t p : primes) {
        Poly hist = coboundary_histogram(a, p, options.scan_cap);
        Rational scale = rpow(Rational(static_cast<unsigned long>(p)), r - d);
        for (std::size_t j = 0; j < tdeg; ++j) {
            Rational v = hist.coeff(static_cast<int>(j)) * scale;
            if (!is_integer(v)) throw Error(ErrorKind::PrimeInstability, "histogram not divisible at p = " + std::to_string(p));
            values[j].push_back(v);
        }
    }
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < needed; ++i) xs.emplace_back(static_cast<unsigned long>(primes[i]));
    BivariatePoly cob;
    for (std::size_t j = 0; j < tdeg; ++j) {
        std::vector<Rational> ys(values[j].begin(), values[j].begin() + static_cast<long>(needed));
        Poly in_q = interpolate(xs, ys);
        for (std::size_t i = needed; i < primes.size(); ++i)
            if (in_q(Rational(static_cast<unsigned long>(primes[i]))) != values[j][i])
                throw Error(ErrorKind::PrimeInstability, "re-check failed at p = " + std::to_string(primes[i]));
        for (int k = 0; k <= in_q.degree(); ++k) {
            if (!is_integer(in_q.coeff(k))) throw Error(ErrorKind::PrimeInstability, "non-integral interpolant");
            cob += BivariatePoly::monomial(to_integer(in_q.coeff(k)), k, static_cast<int>(j));
        }
    }
    BivariatePoly t;
    try {
        t = tutte_from_coboundary(cob, r);
    } catch (const Error&) {
        throw Error(ErrorKind::PrimeInstability, "interpolated coboundary is not a Tutte transform");
    }
    for (const auto& [e, c] : t.terms())
        if (c < 0) throw Error(ErrorKind::PrimeInstability, "interpolated Tutte polynomial has a negative coefficient");
    return t;
}

}  // namespace ec
