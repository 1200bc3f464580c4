#include "ec/posetkit.hpp"

#include "ec/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ec {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<std::pair<ElementId, ElementId>>& covers) {
    return from_relation(std::move(labels), covers);
}

Poset Poset::from_relation(std::vector<std::string> labels, const std::vector<std::pair<ElementId, ElementId>>& less) {
    Poset p;
    p.labels_ = std::move(labels);
    std::size_t n = p.labels_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!p.index_.emplace(p.labels_[i], i).second)
            throw Error(ErrorKind::BadArgument, "duplicate element label '" + p.labels_[i] + "'");
    std::vector<std::vector<ElementId>> succ(n);
    std::set<std::pair<ElementId, ElementId>> seen;
    for (auto [a, b] : less) {
        if (a >= n || b >= n) throw Error(ErrorKind::BadArgument, "relation refers to a missing element");
        if (a == b) continue;
        if (seen.count({b, a}))
            throw Error(ErrorKind::NotAntisymmetric, p.labels_[a] + " and " + p.labels_[b] + " are related both ways");
        if (seen.insert({a, b}).second) succ[a].push_back(b);
    }
    // Kahn's algorithm; leftovers lie on a cycle.
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& s : succ)
        for (ElementId b : s) ++indeg[b];
    std::queue<ElementId> ready;
    for (ElementId x = 0; x < n; ++x)
        if (indeg[x] == 0) ready.push(x);
    while (!ready.empty()) {
        ElementId x = ready.front();
        ready.pop();
        p.order_.push_back(x);
        for (ElementId y : succ[x])
            if (--indeg[y] == 0) ready.push(y);
    }
    if (p.order_.size() != n) throw Error(ErrorKind::CycleDetected, "the relation contains a cycle");
    p.up_.assign(n, make_bits(n));
    for (auto it = p.order_.rbegin(); it != p.order_.rend(); ++it) {
        ElementId x = *it;
        set_bit(p.up_[x], x);
        for (ElementId y : succ[x])
            for (std::size_t w = 0; w < p.up_[x].size(); ++w) p.up_[x][w] |= p.up_[y][w];
    }
    // Covers are the direct edges not implied through another successor.
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y : succ[x]) {
            bool implied = false;
            for (ElementId z : succ[x])
                if (z != y && p.leq(z, y)) {
                    implied = true;
                    break;
                }
            if (!implied) p.covers_.emplace_back(x, y);
        }
    p.finish();
    return p;
}

void Poset::finish() {
    std::sort(covers_.begin(), covers_.end());
    upper_.assign(size(), {});
    lower_.assign(size(), {});
    for (auto [a, b] : covers_) {
        upper_[a].push_back(b);
        lower_[b].push_back(a);
    }
}

std::optional<ElementId> Poset::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ElementId Poset::element(const std::string& label) const {
    auto id = find(label);
    if (!id) throw Error(ErrorKind::BadArgument, "no element '" + label + "'");
    return *id;
}

std::optional<ElementId> Poset::bottom() const {
    if (size() == 0) return std::nullopt;
    ElementId x = order_.front();
    for (ElementId y = 0; y < size(); ++y)
        if (!leq(x, y)) return std::nullopt;
    return x;
}

std::optional<ElementId> Poset::top() const {
    if (size() == 0) return std::nullopt;
    ElementId x = order_.back();
    for (ElementId y = 0; y < size(); ++y)
        if (!leq(y, x)) return std::nullopt;
    return x;
}

std::optional<std::vector<int>> Poset::rank_function() const {
    std::vector<int> rank(size(), 0);
    for (ElementId x : order_)
        for (ElementId y : upper_[x]) rank[y] = std::max(rank[y], rank[x] + 1);
    for (auto [a, b] : covers_)
        if (rank[b] != rank[a] + 1) return std::nullopt;
    return rank;
}

Poset Poset::dual() const {
    std::vector<std::pair<ElementId, ElementId>> flipped;
    for (auto [a, b] : covers_) flipped.emplace_back(b, a);
    return from_covers(labels_, flipped);
}

Poset Poset::induced(const std::vector<ElementId>& keep) const {
    std::vector<std::string> labels;
    for (ElementId x : keep) labels.push_back(labels_.at(x));
    std::vector<std::pair<ElementId, ElementId>> rel;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (i != j && leq(keep[i], keep[j])) rel.emplace_back(i, j);
    return from_relation(std::move(labels), rel);
}

Poset read_poset(std::istream& in) {
    std::vector<std::string> labels;
    std::map<std::string, ElementId> index;
    std::vector<std::pair<ElementId, ElementId>> rel;
    auto id = [&](const std::string& s) {
        auto [it, added] = index.emplace(s, labels.size());
        if (added) labels.push_back(s);
        return it->second;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() == 1) {
            id(tok[0]);
        } else if (tok.size() == 3 && tok[1] == "<") {
            ElementId a = id(tok[0]);
            rel.emplace_back(a, id(tok[2]));
        } else {
            throw Error(ErrorKind::BadArgument, "poset line " + std::to_string(lineno) + ": expected 'u < v'");
        }
    }
    return Poset::from_relation(std::move(labels), rel);
}

void write_poset(std::ostream& out, const Poset& p) {
    std::vector<bool> mentioned(p.size(), false);
    for (auto [a, b] : p.covers()) mentioned[a] = mentioned[b] = true;
    for (ElementId x = 0; x < p.size(); ++x)
        if (!mentioned[x]) out << p.label(x) << '\n';
    for (auto [a, b] : p.covers()) out << p.label(a) << " < " << p.label(b) << '\n';
}

IncidenceFunction::IncidenceFunction(const Poset& p) : n_(p.size()), leq_(n_ * n_), values_(n_ * n_) {
    for (ElementId x = 0; x < n_; ++x)
        for (ElementId y = 0; y < n_; ++y) leq_[x * n_ + y] = p.leq(x, y);
}

const Rational& IncidenceFunction::operator()(ElementId x, ElementId y) const {
    if (x >= n_ || y >= n_ || !defined(x, y)) throw Error(ErrorKind::NotComparable, "not an interval");
    return values_[x * n_ + y];
}

Rational& IncidenceFunction::operator()(ElementId x, ElementId y) {
    if (x >= n_ || y >= n_ || !defined(x, y)) throw Error(ErrorKind::NotComparable, "not an interval");
    return values_[x * n_ + y];
}

IncidenceFunction zeta_function(const Poset& p) {
    IncidenceFunction z(p);
    for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y = 0; y < p.size(); ++y)
            if (p.leq(x, y)) z(x, y) = 1;
    return z;
}

IncidenceFunction delta_function(const Poset& p) {
    IncidenceFunction d(p);
    for (ElementId x = 0; x < p.size(); ++x) d(x, x) = 1;
    return d;
}

IncidenceFunction convolve(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g) {
    IncidenceFunction h(p);
    std::size_t n = p.size();
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (!p.leq(x, y)) continue;
            Rational acc = 0;
            for (ElementId z = 0; z < n; ++z)
                if (p.leq(x, z) && p.leq(z, y)) acc += f(x, z) * g(z, y);
            h(x, y) = acc;
        }
    return h;
}

IncidenceFunction mobius(const Poset& p, MobiusRecursion recursion) {
    IncidenceFunction mu(p);
    const auto& order = p.linear_order();
    std::size_t n = p.size();
    if (recursion == MobiusRecursion::Lower) {
        for (ElementId x = 0; x < n; ++x)
            for (std::size_t i = 0; i < n; ++i) {
                ElementId y = order[i];
                if (!p.leq(x, y)) continue;
                if (x == y) {
                    mu(x, y) = 1;
                    continue;
                }
                Rational acc = 0;
                for (std::size_t j = 0; j < i; ++j)
                    if (p.leq(x, order[j]) && p.leq(order[j], y)) acc += mu(x, order[j]);
                mu(x, y) = -acc;
            }
    } else {
        for (ElementId y = 0; y < n; ++y)
            for (std::size_t i = n; i-- > 0;) {
                ElementId x = order[i];
                if (!p.leq(x, y)) continue;
                if (x == y) {
                    mu(x, y) = 1;
                    continue;
                }
                Rational acc = 0;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (p.leq(x, order[j]) && p.leq(order[j], y)) acc += mu(order[j], y);
                mu(x, y) = -acc;
            }
    }
    return mu;
}

std::vector<Rational> order_sum(const Poset& p, const std::vector<Rational>& f, InversionDirection dir) {
    if (f.size() != p.size()) throw Error(ErrorKind::BadArgument, "one value per element required");
    std::vector<Rational> g(p.size());
    for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y = 0; y < p.size(); ++y)
            if (dir == InversionDirection::Up ? p.leq(x, y) : p.leq(y, x)) g[x] += f[y];
    return g;
}

std::vector<Rational> mobius_inversion(const Poset& p, const std::vector<Rational>& g, InversionDirection dir) {
    if (g.size() != p.size()) throw Error(ErrorKind::BadArgument, "one value per element required");
    IncidenceFunction mu = mobius(p);
    std::vector<Rational> f(p.size());
    for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y = 0; y < p.size(); ++y) {
            if (dir == InversionDirection::Up && p.leq(x, y)) f[x] += mu(x, y) * g[y];
            if (dir == InversionDirection::Down && p.leq(y, x)) f[x] += mu(y, x) * g[y];
        }
    if (order_sum(p, f, dir) != g) throw std::logic_error("Möbius inversion failed to round-trip");
    return f;
}

std::vector<Integer> chain_counts(const Poset& p) {
    std::size_t n = p.size();
    std::vector<std::vector<Integer>> ending(n);  // ending[y][i]: chains of i + 1 elements topped by y
    std::vector<Integer> totals;
    for (ElementId y : p.linear_order()) {
        std::vector<Integer>& cur = ending[y];
        cur.assign(1, 1);
        for (ElementId x = 0; x < n; ++x) {
            if (!p.less(x, y)) continue;
            if (cur.size() < ending[x].size() + 1) cur.resize(ending[x].size() + 1);
            for (std::size_t i = 0; i < ending[x].size(); ++i) cur[i + 1] += ending[x][i];
        }
        if (totals.size() < cur.size()) totals.resize(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) totals[i] += cur[i];
    }
    return totals;
}

Poly zeta_polynomial(const Poset& p) {
    // A multichain of k - 1 elements with i distinct values: choose the i - 1 strict steps among k - 2.
    std::vector<Integer> a = chain_counts(p);
    Poly shifted(Rational(-2));
    shifted += Poly::x();
    Poly z;
    for (std::size_t i = 0; i < a.size(); ++i) z += binomial_poly(shifted, static_cast<unsigned>(i)) * Rational(a[i]);
    return z;
}

namespace {

struct IdealData {
    std::vector<std::uint64_t> ideals;  // by size, then discovery order
    std::unordered_map<std::uint64_t, std::size_t> index;
    std::vector<std::uint64_t> below;  // strict down-set of each element
};

constexpr std::size_t kMaxIdeals = std::size_t{1} << 22;

std::vector<std::uint64_t> strict_down_masks(const Poset& p, std::size_t cap) {
    if (p.size() > cap || p.size() > 63)
        throw Error(ErrorKind::TooLarge, "poset has " + std::to_string(p.size()) + " elements, cap is " +
                                             std::to_string(std::min<std::size_t>(cap, 63)));
    std::vector<std::uint64_t> below(p.size(), 0);
    for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y = 0; y < p.size(); ++y)
            if (p.less(y, x)) below[x] |= std::uint64_t{1} << y;
    return below;
}

IdealData enumerate_ideals(const Poset& p, std::size_t cap) {
    IdealData d;
    d.below = strict_down_masks(p, cap);
    d.ideals.push_back(0);
    d.index[0] = 0;
    for (std::size_t i = 0; i < d.ideals.size(); ++i) {
        std::uint64_t ideal = d.ideals[i];
        for (ElementId x = 0; x < p.size(); ++x) {
            std::uint64_t bit = std::uint64_t{1} << x;
            if ((ideal & bit) || (d.below[x] & ~ideal)) continue;
            std::uint64_t next = ideal | bit;
            if (d.index.emplace(next, d.ideals.size()).second) {
                d.ideals.push_back(next);
                if (d.ideals.size() > kMaxIdeals) throw Error(ErrorKind::TooLarge, "too many order ideals");
            }
        }
    }
    return d;
}

}  // namespace

Poset ideal_lattice(const Poset& p, std::size_t cap) {
    IdealData d = enumerate_ideals(p, cap);
    std::vector<std::string> labels;
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (std::size_t i = 0; i < d.ideals.size(); ++i) {
        std::string label = "{";
        bool first = true;
        for (ElementId x = 0; x < p.size(); ++x)
            if (d.ideals[i] >> x & 1U) {
                label += (first ? "" : ",") + p.label(x);
                first = false;
            }
        labels.push_back(label + "}");
        for (ElementId x = 0; x < p.size(); ++x) {
            std::uint64_t bit = std::uint64_t{1} << x;
            if ((d.ideals[i] & bit) || (d.below[x] & ~d.ideals[i])) continue;
            covers.emplace_back(i, d.index.at(d.ideals[i] | bit));
        }
    }
    return Poset::from_covers(std::move(labels), covers);
}

Poset join_irreducibles(const Poset& lattice) {
    std::vector<ElementId> keep;
    for (ElementId x = 0; x < lattice.size(); ++x)
        if (lattice.lower_covers()[x].size() == 1) keep.push_back(x);
    return lattice.induced(keep);
}

Poly order_polynomial(const Poset& p, std::size_t cap) { return zeta_polynomial(ideal_lattice(p, cap)); }

Integer linear_extensions(const Poset& p, std::size_t cap) {
    std::vector<std::uint64_t> below = strict_down_masks(p, cap);
    // Ideals are generated in order of size, so every predecessor is final before use.
    std::unordered_map<std::uint64_t, Integer> count{{0, 1}};
    std::vector<std::uint64_t> layer{0};
    for (std::size_t size = 0; size < p.size(); ++size) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t ideal : layer) {
            const Integer& c = count.at(ideal);
            for (ElementId x = 0; x < p.size(); ++x) {
                std::uint64_t bit = std::uint64_t{1} << x;
                if ((ideal & bit) || (below[x] & ~ideal)) continue;
                auto [it, added] = count.try_emplace(ideal | bit, 0);
                if (added) next.push_back(ideal | bit);
                it->second += c;
            }
        }
        for (std::uint64_t ideal : layer) count.erase(ideal);
        layer = std::move(next);
    }
    return p.size() == 0 ? Integer(1) : count.at(layer.front());
}

LatticeReport lattice_ops(const Poset& p) {
    std::size_t n = p.size();
    LatticeReport r;
    r.meets.assign(n, std::vector<std::optional<ElementId>>(n));
    r.joins.assign(n, std::vector<std::optional<ElementId>>(n));
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[p.linear_order()[i]] = i;
    bool all = n > 0;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            std::optional<ElementId> lub, glb;
            for (ElementId z = 0; z < n; ++z) {
                if (p.leq(x, z) && p.leq(y, z) && (!lub || position[z] < position[*lub])) lub = z;
                if (p.leq(z, x) && p.leq(z, y) && (!glb || position[z] > position[*glb])) glb = z;
            }
            // The extreme bound in the linear order is the only candidate.
            for (ElementId z = 0; z < n && lub; ++z)
                if (p.leq(x, z) && p.leq(y, z) && !p.leq(*lub, z)) lub.reset();
            for (ElementId z = 0; z < n && glb; ++z)
                if (p.leq(z, x) && p.leq(z, y) && !p.leq(z, *glb)) glb.reset();
            r.joins[x][y] = lub;
            r.meets[x][y] = glb;
            all = all && lub && glb;
        }
    r.is_lattice = all;
    if (r.is_lattice) {
        r.is_distributive = true;
        for (ElementId x = 0; x < n && r.is_distributive; ++x)
            for (ElementId y = 0; y < n && r.is_distributive; ++y)
                for (ElementId z = 0; z < n; ++z) {
                    ElementId lhs = *r.joins[x][*r.meets[y][z]];
                    ElementId rhs = *r.meets[*r.joins[x][y]][*r.joins[x][z]];
                    if (lhs != rhs) {
                        r.is_distributive = false;
                        break;
                    }
                }
    }
    return r;
}

namespace {

std::string monomial_string(const std::string& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size();) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        out += word[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string poly_string(const std::map<std::string, Integer>& terms) {
    std::string out;
    for (const auto& [word, c] : terms) {
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        bool unit = mag == 1 && !word.empty();
        if (!unit) out += mag.get_str();
        out += monomial_string(word);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string_ab(const AbPolynomial& ab) { return poly_string(ab); }
std::string to_string_cd(const CdPolynomial& cd) { return poly_string(cd); }

AbPolynomial expand_cd(const CdPolynomial& cd) {
    AbPolynomial out;
    for (const auto& [word, coeff] : cd) {
        std::vector<std::string> words{""};
        for (char letter : word) {
            std::vector<std::string> next;
            for (const auto& w : words) {
                if (letter == 'c') {
                    next.push_back(w + "a");
                    next.push_back(w + "b");
                } else if (letter == 'd') {
                    next.push_back(w + "ab");
                    next.push_back(w + "ba");
                } else {
                    throw Error(ErrorKind::BadArgument, "cd-word with letter '" + std::string(1, letter) + "'");
                }
            }
            words = std::move(next);
        }
        for (const auto& w : words) out[w] += coeff;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

CdPolynomial ab_to_cd(const AbPolynomial& ab) {
    // The lexicographically first word of c^.. d^.. expansions is the image of c -> a, d -> ab.
    AbPolynomial rest;
    for (const auto& [w, c] : ab)
        if (c != 0) rest[w] = c;
    CdPolynomial cd;
    while (!rest.empty()) {
        auto [word, coeff] = *rest.begin();
        std::string cdword;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (word[i] != 'a') throw Error(ErrorKind::NotEulerian, "ab-index has no cd-form (word " + word + ")");
            if (i + 1 < word.size() && word[i + 1] == 'b') {
                cdword += 'd';
                ++i;
            } else {
                cdword += 'c';
            }
        }
        cd[cdword] += coeff;
        for (const auto& [w, c] : expand_cd({{cdword, coeff}})) {
            Integer& slot = rest[w];
            slot -= c;
            if (slot == 0) rest.erase(w);
        }
    }
    return cd;
}

std::vector<std::vector<int>> rank_subsets(int rank) {
    int m = std::max(rank - 1, 0);
    std::vector<std::vector<int>> out;
    for (int size = 0; size <= m; ++size) {
        std::vector<bool> pick(static_cast<std::size_t>(m), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<int> s;
            for (int i = 0; i < m; ++i)
                if (pick[static_cast<std::size_t>(i)]) s.push_back(i + 1);
            out.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

FlagData flag_data_from_f(int rank, const std::vector<Integer>& flag_f) {
    FlagData d;
    d.rank = rank;
    d.sets = rank_subsets(rank);
    if (flag_f.size() != d.sets.size())
        throw Error(ErrorKind::BadArgument, "flag f-vector needs " + std::to_string(d.sets.size()) + " entries");
    d.flag_f = flag_f;
    std::map<std::vector<int>, std::size_t> where;
    for (std::size_t i = 0; i < d.sets.size(); ++i) where[d.sets[i]] = i;
    for (const auto& s : d.sets) {
        Integer h = 0;
        for (unsigned mask = 0; mask < (1U << s.size()); ++mask) {
            std::vector<int> t;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (mask >> j & 1U) t.push_back(s[j]);
            Integer f = flag_f[where.at(t)];
            if ((s.size() - t.size()) % 2) h -= f;
            else h += f;
        }
        d.flag_h.push_back(h);
        std::string word(static_cast<std::size_t>(std::max(rank - 1, 0)), 'a');
        for (int r : s) word[static_cast<std::size_t>(r - 1)] = 'b';
        if (h != 0) d.ab[word] = h;
    }
    try {
        d.cd = ab_to_cd(d.ab);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotEulerian) throw;
    }
    return d;
}

namespace {

struct GradedView {
    std::vector<int> rank;
    int top_rank;
};

GradedView graded_view(const Poset& p) {
    auto bottom = p.bottom();
    auto top = p.top();
    auto rank = p.rank_function();
    if (!bottom || !top || !rank) throw Error(ErrorKind::NotGraded, "poset is not graded with a bottom and a top");
    return {*rank, (*rank)[*top]};
}

}  // namespace

bool is_eulerian(const Poset& p) {
    GradedView g = graded_view(p);
    IncidenceFunction mu = mobius(p);
    for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && mu(x, y) != ((g.rank[y] - g.rank[x]) % 2 ? -1 : 1)) return false;
    return true;
}

FlagData flag_and_cd(const Poset& p) {
    GradedView g = graded_view(p);
    std::vector<Integer> f;
    for (const auto& s : rank_subsets(g.top_rank)) {
        std::vector<Integer> ways(p.size());
        bool first = true;
        for (int r : s) {
            std::vector<Integer> next(p.size());
            for (ElementId y = 0; y < p.size(); ++y) {
                if (g.rank[y] != r) continue;
                if (first) {
                    next[y] = 1;
                    continue;
                }
                for (ElementId x = 0; x < p.size(); ++x)
                    if (ways[x] != 0 && p.less(x, y)) next[y] += ways[x];
            }
            ways = std::move(next);
            first = false;
        }
        f.push_back(first ? Integer(1) : std::accumulate(ways.begin(), ways.end(), Integer(0)));
    }
    FlagData d = flag_data_from_f(g.top_rank, f);
    if (!is_eulerian(p)) d.cd.reset();
    return d;
}

CdPolynomial cd_index(const Poset& p) {
    FlagData d = flag_and_cd(p);
    if (!d.cd) throw Error(ErrorKind::NotEulerian, "poset is not Eulerian");
    return *d.cd;
}

Poset chain_poset(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        if (i > 0) covers.emplace_back(i - 1, i);
    }
    return Poset::from_covers(std::move(labels), covers);
}

Poset antichain_poset(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    return Poset::from_covers(std::move(labels), {});
}

Poset boolean_lattice(int n) {
    if (n < 0 || n > 16) throw Error(ErrorKind::TooLarge, "boolean lattice rank must be in 0..16");
    std::size_t count = std::size_t{1} << n;
    std::vector<std::string> labels;
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (std::size_t s = 0; s < count; ++s) {
        std::string label = "{";
        for (int i = 0; i < n; ++i)
            if (s >> i & 1U) label += (label.size() > 1 ? "," : "") + std::to_string(i + 1);
        labels.push_back(label + "}");
        for (int i = 0; i < n; ++i)
            if (!(s >> i & 1U)) covers.emplace_back(s, s | (std::size_t{1} << i));
    }
    return Poset::from_covers(std::move(labels), covers);
}

Poset divisor_lattice(long n) {
    if (n < 1) throw Error(ErrorKind::BadArgument, "divisor lattice needs n >= 1");
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<std::string> labels;
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        labels.push_back(std::to_string(divisors[i]));
        for (std::size_t j = 0; j < divisors.size(); ++j)
            if (divisors[j] % divisors[i] == 0 && is_prime(static_cast<std::uint64_t>(divisors[j] / divisors[i])))
                covers.emplace_back(i, j);
    }
    return Poset::from_covers(std::move(labels), covers);
}

namespace {

using Blocks = std::vector<std::vector<int>>;

std::vector<Blocks> set_partitions(int n) {
    std::vector<Blocks> out;
    Blocks cur;
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < cur.size(); ++b) {
            cur[b].push_back(i);
            rec(i + 1);
            cur[b].pop_back();
        }
        cur.push_back({i});
        rec(i + 1);
        cur.pop_back();
    };
    rec(1);
    return out;
}

std::string blocks_label(Blocks b) {
    for (auto& blk : b) std::sort(blk.begin(), blk.end());
    std::sort(b.begin(), b.end());
    std::string out;
    for (const auto& blk : b) {
        if (!out.empty()) out += "|";
        for (int v : blk) out += std::to_string(v);
    }
    return out;
}

bool noncrossing(const Blocks& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == j) continue;
            for (int a1 : b[i])
                for (int c1 : b[i])
                    for (int b1 : b[j])
                        for (int d1 : b[j])
                            if (a1 < b1 && b1 < c1 && c1 < d1) return false;
        }
    return true;
}

Poset partition_poset(int n, bool only_noncrossing) {
    if (n < 1 || n > 8) throw Error(ErrorKind::TooLarge, "partition lattices are built for 1 <= n <= 8");
    std::vector<Blocks> parts = set_partitions(n);
    std::vector<std::string> labels;
    std::map<std::string, ElementId> index;
    std::vector<Blocks> kept;
    for (const auto& b : parts) {
        if (only_noncrossing && !noncrossing(b)) continue;
        index[blocks_label(b)] = labels.size();
        labels.push_back(blocks_label(b));
        kept.push_back(b);
    }
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        const Blocks& b = kept[k];
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                Blocks merged;
                for (std::size_t t = 0; t < b.size(); ++t)
                    if (t != i && t != j) merged.push_back(b[t]);
                std::vector<int> u = b[i];
                u.insert(u.end(), b[j].begin(), b[j].end());
                merged.push_back(u);
                auto it = index.find(blocks_label(merged));
                if (it != index.end()) covers.emplace_back(k, it->second);
            }
    }
    return Poset::from_covers(std::move(labels), covers);
}

}  // namespace

Poset partition_lattice(int n) { return partition_poset(n, false); }
Poset noncrossing_lattice(int n) { return partition_poset(n, true); }

Poset bruhat_order(int n) {
    if (n < 1 || n > 6) throw Error(ErrorKind::TooLarge, "Bruhat order is built for 1 <= n <= 6");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::string> labels;
    std::map<std::vector<int>, ElementId> index;
    std::vector<std::vector<int>> perms;
    do {
        std::string label;
        for (int v : w) label += std::to_string(v);
        index[w] = labels.size();
        labels.push_back(label);
        perms.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    // w < w(i j) is a cover when w(i) < w(j) and no value between them sits between positions i and j.
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (std::size_t k = 0; k < perms.size(); ++k) {
        const auto& p = perms[k];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (p[i] > p[j]) continue;
                bool blocked = false;
                for (int t = i + 1; t < j; ++t)
                    if (p[t] > p[i] && p[t] < p[j]) blocked = true;
                if (blocked) continue;
                auto q = p;
                std::swap(q[i], q[j]);
                covers.emplace_back(k, index.at(q));
            }
    }
    return Poset::from_covers(std::move(labels), covers);
}

Poset product(const Poset& a, const Poset& b) {
    std::vector<std::string> labels;
    std::vector<std::pair<ElementId, ElementId>> covers;
    auto id = [&](ElementId x, ElementId y) { return x * b.size() + y; };
    for (ElementId x = 0; x < a.size(); ++x)
        for (ElementId y = 0; y < b.size(); ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    for (auto [x1, x2] : a.covers())
        for (ElementId y = 0; y < b.size(); ++y) covers.emplace_back(id(x1, y), id(x2, y));
    for (ElementId x = 0; x < a.size(); ++x)
        for (auto [y1, y2] : b.covers()) covers.emplace_back(id(x, y1), id(x, y2));
    return Poset::from_covers(std::move(labels), covers);
}

Poset disjoint_sum(const Poset& a, const Poset& b) {
    std::vector<std::string> labels = a.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (const auto& l : b.labels()) {
        std::string name = l;
        while (used.count(name)) name += "'";
        used.insert(name);
        labels.push_back(name);
    }
    std::vector<std::pair<ElementId, ElementId>> covers = a.covers();
    for (auto [x, y] : b.covers()) covers.emplace_back(x + a.size(), y + a.size());
    return Poset::from_covers(std::move(labels), covers);
}

Poset prism_face_lattice(int k) {
    if (k < 3) throw Error(ErrorKind::BadArgument, "prism needs a polygon with k >= 3");
    std::vector<std::string> labels{"empty"};
    std::vector<std::pair<ElementId, ElementId>> covers;
    auto add = [&](const std::string& label) {
        labels.push_back(label);
        return labels.size() - 1;
    };
    std::vector<ElementId> top_v, bot_v, top_e, bot_e, side_e, side_f;
    for (int i = 0; i < k; ++i) top_v.push_back(add("t" + std::to_string(i)));
    for (int i = 0; i < k; ++i) bot_v.push_back(add("b" + std::to_string(i)));
    for (ElementId v : top_v) covers.emplace_back(0, v);
    for (ElementId v : bot_v) covers.emplace_back(0, v);
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        top_e.push_back(add("t" + std::to_string(i) + "t" + std::to_string(j)));
        covers.emplace_back(top_v[i], top_e.back());
        covers.emplace_back(top_v[j], top_e.back());
        bot_e.push_back(add("b" + std::to_string(i) + "b" + std::to_string(j)));
        covers.emplace_back(bot_v[i], bot_e.back());
        covers.emplace_back(bot_v[j], bot_e.back());
        side_e.push_back(add("t" + std::to_string(i) + "b" + std::to_string(i)));
        covers.emplace_back(top_v[i], side_e.back());
        covers.emplace_back(bot_v[i], side_e.back());
    }
    ElementId top_f = add("top"), bot_f = add("bottom");
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        covers.emplace_back(top_e[i], top_f);
        covers.emplace_back(bot_e[i], bot_f);
        side_f.push_back(add("s" + std::to_string(i)));
        covers.emplace_back(top_e[i], side_f.back());
        covers.emplace_back(bot_e[i], side_f.back());
        covers.emplace_back(side_e[i], side_f.back());
        covers.emplace_back(side_e[j], side_f.back());
    }
    ElementId whole = add("prism");
    covers.emplace_back(top_f, whole);
    covers.emplace_back(bot_f, whole);
    for (ElementId f : side_f) covers.emplace_back(f, whole);
    return Poset::from_covers(std::move(labels), covers);
}

Poset build_named_poset(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::vector<long> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        for (std::string part; std::getline(ss, part, ',');) {
            try {
                std::size_t used = 0;
                args.push_back(std::stol(part, &used));
                if (used != part.size()) throw std::invalid_argument(part);
            } catch (const std::exception&) {
                throw Error(ErrorKind::BadSpec, "bad number '" + part + "' in poset spec '" + spec + "'");
            }
        }
    }
    auto need = [&](std::size_t count) {
        if (args.size() != count) throw Error(ErrorKind::BadSpec, "poset spec '" + spec + "' takes " + std::to_string(count) + " argument(s)");
        for (long a : args)
            if (a < 0 || a > 1000000) throw Error(ErrorKind::BadSpec, "poset spec argument out of range");
    };
    try {
        if (kind == "chain") {
            need(1);
            return chain_poset(static_cast<int>(args[0]));
        }
        if (kind == "antichain") {
            need(1);
            return antichain_poset(static_cast<int>(args[0]));
        }
        if (kind == "boolean") {
            need(1);
            return boolean_lattice(static_cast<int>(args[0]));
        }
        if (kind == "divisor") {
            need(1);
            return divisor_lattice(args[0]);
        }
        if (kind == "partition") {
            need(1);
            return partition_lattice(static_cast<int>(args[0]));
        }
        if (kind == "noncrossing") {
            need(1);
            return noncrossing_lattice(static_cast<int>(args[0]));
        }
        if (kind == "bruhat") {
            need(1);
            return bruhat_order(static_cast<int>(args[0]));
        }
        if (kind == "prism") {
            need(1);
            return prism_face_lattice(static_cast<int>(args[0]));
        }
        if (kind == "grid") {
            need(2);
            return product(chain_poset(static_cast<int>(args[0])), chain_poset(static_cast<int>(args[1])));
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BadSpec) throw;
        throw Error(ErrorKind::BadSpec, std::string(e.what()));
    }
    throw Error(ErrorKind::BadSpec, "unknown poset kind '" + kind + "'");
}

}  // namespace ec
