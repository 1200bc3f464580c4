#include "cli.hpp"

#include "recipes.hpp"

#include "ec/arrkit.hpp"
#include "ec/cfinite.hpp"
#include "ec/detcount.hpp"
#include "ec/ehrhartkit.hpp"
#include "ec/error.hpp"
#include "ec/graphcount.hpp"
#include "ec/matroidkit.hpp"
#include "ec/posetkit.hpp"
#include "ec/powser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace ec::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for malformed inputs that CLI11 cannot see (inline lists, files).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int order = 10;
    std::uint64_t budget = 0;
    std::uint64_t seed = 20240601;
    std::string primes;

    std::string verb;
    std::string file;
    std::string spec;

    // series
    std::string coeffs, with, exponent = "1/2";
    // cfinite
    std::string rec, init, num, den, seq;
    long n = -1;
    int count = 10;
    int max_order = 4;
    // graph
    std::string from, to, kind = "adjacency";
    unsigned length = 1;
    // count
    std::string rect, matrix, family;
    bool shifted = false;
    // arr, matroid
    std::string backend;
    std::uint64_t q = 0;
    // ehrhart
    bool interior = false;
    std::uint64_t upto = 4;
    std::string poset;
    // reproduce
    bool all = false;
    bool list = false;
};

std::string str(const Integer& v) { return ec::to_string(v); }
std::string str(const Rational& v) { return ec::to_string(v); }

template <typename T>
Json strings(const std::vector<T>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(str(v));
    return out;
}

Json poly_json(const Poly& p, const std::string& var) {
    return Json{{"text", p.to_string(var)}, {"coeffs", strings(p.coeffs())}};
}

Json series_json(const Series& s) { return Json{{"order", s.order()}, {"coeffs", strings(s.coeffs())}}; }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
}

std::vector<Rational> rationals(const std::string& text, const std::string& flag) {
    if (text.empty()) throw InputError(flag + " needs a comma-separated list");
    std::vector<Rational> out;
    for (const auto& part : split(text, ',')) {
        try {
            out.push_back(parse_rational(part));
        } catch (const Error&) {
            throw InputError("bad number '" + part + "' in " + flag);
        }
    }
    return out;
}

std::vector<std::uint64_t> prime_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    for (const auto& part : split(text, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InputError("bad prime '" + part + "' in --primes");
        }
    }
    return out;
}

QMatrix matrix_arg(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : split(text, ';')) rows.push_back(rationals(row, "--matrix"));
    if (rows.empty()) throw InputError("--matrix needs rows separated by ';'");
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw InputError("--matrix rows differ in length");
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

Integer json_integer(const Json& v) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_integer(v.get<std::string>());
        } catch (const Error&) {
        }
    }
    throw InputError("expected an integer, got " + v.dump());
}

Rational json_rational(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error&) {
        }
    }
    throw InputError("expected a rational, got " + v.dump());
}

std::vector<std::vector<Integer>> json_int_rows(const Json& v, const char* key) {
    std::vector<std::vector<Integer>> rows;
    if (!v.is_array()) throw InputError(std::string("'") + key + "' must be an array of rows");
    for (const auto& row : v) {
        if (!row.is_array()) throw InputError(std::string("'") + key + "' must be an array of rows");
        std::vector<Integer> r;
        for (const auto& x : row) r.push_back(json_integer(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

ZMatrix to_zmatrix(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    ZMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("matrix rows differ in length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

// ---- text rendering ----

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_flat_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
        if (x.is_structured()) return false;
    return true;
}

std::string flat_array_text(const Json& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s;
}

void render_text(std::ostream& out, const Json& v, const std::string& prefix) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            render_text(out, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else if (is_flat_array(v)) {
        out << prefix << ": " << flat_array_text(v) << "\n";
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) render_text(out, v[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        out << prefix << ": " << scalar_text(v) << "\n";
    }
}

void emit(std::ostream& out, const Options& o, const Json& result) {
    if (o.format == "json") {
        out << result.dump(2) << "\n";
        return;
    }
    if (result.is_object() && result.size() == 1) {
        const Json& only = result.begin().value();
        if (!only.is_structured()) {
            out << scalar_text(only) << "\n";
            return;
        }
        if (is_flat_array(only)) {
            out << flat_array_text(only) << "\n";
            return;
        }
    }
    render_text(out, result, "");
}

// ---- series ----

Series series_input(const Options& o, const std::string& list, const std::string& flag) {
    if (!o.file.empty() && flag == "--coeffs") {
        Json j = read_json_file(o.file);
        if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw InputError("series file needs a 'coeffs' array");
        std::vector<Rational> c;
        for (const auto& x : j["coeffs"]) c.push_back(json_rational(x));
        int order = j.contains("order") ? j["order"].get<int>() : static_cast<int>(c.size()) - 1;
        return Series::from_poly(Poly(c), order);
    }
    return Series::from_poly(Poly(rationals(list, flag)), o.order);
}

Json cmd_series(const Options& o) {
    Series a = series_input(o, o.coeffs, "--coeffs");
    auto other = [&] { return series_input(o, o.with, "--with"); };
    Series r;
    const std::string& v = o.verb;
    if (v == "show") r = a;
    else if (v == "inverse") r = ps_inverse(a);
    else if (v == "exp") r = ps_exp(a);
    else if (v == "log") r = ps_log(a);
    else if (v == "sqrt") r = ps_sqrt(a);
    else if (v == "pow") r = ps_pow(a, rationals(o.exponent, "--exponent").at(0));
    else if (v == "sin") r = ps_sin(a);
    else if (v == "cos") r = ps_cos(a);
    else if (v == "derivative") r = ps_derivative(a);
    else if (v == "integrate") r = ps_integrate(a);
    else if (v == "lagrange") r = lagrange_inverse(a);
    else if (v == "compose") r = ps_compose(a, other());
    else if (v == "mul") r = a * other();
    else if (v == "add") r = a + other();
    else if (v == "hadamard") r = ps_hadamard(a, other());
    else if (v == "egf2ogf") r = egf_ogf_convert(GfConvert::EgfToOgf, a);
    else r = egf_ogf_convert(GfConvert::OgfToEgf, a);
    Json j = series_json(r);
    j["text"] = r.to_string();
    return j;
}

// ---- cfinite ----

LinearRecurrence recurrence_input(const Options& o) {
    if (o.rec == "fib" || o.rec == "fibonacci") return fibonacci_recurrence();
    if (!o.rec.empty()) throw InputError("unknown --rec '" + o.rec + "' (use fib, or --coeffs with --init)");
    try {
        return LinearRecurrence(rationals(o.coeffs, "--coeffs"), rationals(o.init, "--init"));
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

RationalGF gf_input(const Options& o) { return RationalGF(Poly(rationals(o.num, "--num")), Poly(rationals(o.den, "--den"))); }

Json recurrence_json(const LinearRecurrence& r) {
    return Json{{"order", r.order()}, {"coeffs", strings(r.coeffs)}, {"initial", strings(r.initial)}};
}

Json cmd_cfinite(const Options& o) {
    const std::string& v = o.verb;
    if (v == "nth") {
        if (o.n < 0) throw InputError("nth needs --n");
        return Json{{"value", str(nth_term(recurrence_input(o), static_cast<unsigned long>(o.n)))}};
    }
    if (v == "terms") return Json{{"terms", strings(recurrence_input(o).terms(o.count))}};
    if (v == "gf") {
        RationalGF g = rec_to_gf(recurrence_input(o));
        return Json{{"numerator", poly_json(g.numerator, "x")}, {"denominator", poly_json(g.denominator, "x")}};
    }
    if (v == "rec") return recurrence_json(gf_to_rec(gf_input(o)));
    if (v == "growth") return Json{{"growth", std::to_string(dominant_growth(gf_input(o)))}};
    if (v == "guess") {
        auto r = guess_recurrence(rationals(o.seq, "--seq"), o.max_order);
        if (!r) throw Error(ErrorKind::NoRecurrenceFound, "no recurrence of order <= " + std::to_string(o.max_order));
        return recurrence_json(*r);
    }
    auto fit = detect_polynomial(rationals(o.seq, "--seq"));
    if (!fit) return Json{{"polynomial", "none"}};
    return Json{{"degree", fit->degree}, {"polynomial", poly_json(fit->polynomial, "n")}};
}

// ---- graph ----

Graph graph_input(const Options& o) {
    if (!o.file.empty()) {
        std::istringstream in(read_file(o.file));
        return read_graph(in);
    }
    if (o.spec.empty()) throw InputError("give --graph <spec> or --file <path>");
    return build_named_graph(o.spec);
}

Json rational_gf_json(const RationalGF& g, int order) {
    return Json{{"numerator", poly_json(g.numerator, "x")},
                {"denominator", poly_json(g.denominator, "x")},
                {"series", strings(g.series(order).coeffs())}};
}

Json matrix_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(str(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json cmd_graph(const Options& o) {
    Graph g = graph_input(o);
    const std::string& v = o.verb;
    if (v == "info")
        return Json{{"directed", g.directed()},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"connected", is_connected(g)}};
    if (v == "trees") return Json{{"spanning_trees", str(spanning_tree_count(g))}};
    if (v == "rooted") return Json{{"rooted_trees", str(rooted_tree_count(g, g.vertex(o.from)))}};
    if (v == "euler") return Json{{"eulerian_circuits", str(eulerian_count(g))}};
    if (v == "walks") return Json{{"walks", str(count_walks(g, g.vertex(o.from), g.vertex(o.to), o.length))}};
    if (v == "walkgf") return rational_gf_json(walk_gf(g, g.vertex(o.from), g.vertex(o.to)), o.order);
    if (v == "closedgf") return rational_gf_json(closed_walk_gf(g), o.order);
    if (v == "chromatic") return Json{{"chromatic", poly_json(chromatic_polynomial(g).poly, "q")}};
    if (v == "acyclic") return Json{{"acyclic_orientations", str(acyclic_orientations(g))}};
    static const std::map<std::string, GraphMatrixKind> kinds{{"adjacency", GraphMatrixKind::Adjacency},
                                                              {"laplacian", GraphMatrixKind::Laplacian},
                                                              {"dlaplacian", GraphMatrixKind::DirectedLaplacian},
                                                              {"incidence", GraphMatrixKind::Incidence}};
    auto it = kinds.find(o.kind);
    if (it == kinds.end()) throw InputError("unknown --kind '" + o.kind + "'");
    return Json{{"labels", g.labels()}, {"matrix", matrix_json(graph_matrix(g, it->second))}};
}

// ---- count ----

Json cmd_count(const Options& o) {
    const std::string& v = o.verb;
    if (v == "matchings") {
        GridRegion region;
        if (!o.file.empty()) {
            region = GridRegion::parse(read_file(o.file));
        } else {
            auto dims = split(o.rect, ',');
            if (dims.size() != 2) throw InputError("give --rect rows,cols or --file <ascii art>");
            try {
                region = GridRegion::rectangle(std::stoi(dims[0]), std::stoi(dims[1]));
            } catch (const std::logic_error&) {
                throw InputError("bad --rect '" + o.rect + "'");
            }
        }
        return Json{{"matchings", str(kasteleyn_match_count(region))}};
    }
    if (v == "routings") {
        if (o.n < 0) throw InputError("routings needs --n (hexagon side)");
        return Json{{"routings", str(lgv_routing_count(hexagon_routing_dag(static_cast<int>(o.n))))}};
    }
    if (v == "aztec") {
        if (o.n < 0) throw InputError("aztec needs --n");
        return Json{{"tilings", str(aztec_count(static_cast<int>(o.n)))}};
    }
    if (v == "hankel") {
        if (o.n < 0) throw InputError("hankel needs --n");
        std::vector<Rational> seq;
        int need = 2 * static_cast<int>(o.n) + 1;
        if (o.family == "catalan") seq = catalan_numbers(need);
        else if (o.family == "schroder") seq = schroder_numbers(need);
        else if (o.family.empty()) seq = rationals(o.seq, "--seq");
        else throw InputError("unknown --family '" + o.family + "'");
        return Json{{"determinant", str(hankel_det(seq, static_cast<int>(o.n), o.shifted))}};
    }
    QMatrix m = matrix_arg(o.matrix);
    if (v == "pfaffian") return Json{{"pfaffian", str(pfaffian(m))}};
    Json levels = Json::array();
    if (auto pyramid = dodgson_pyramid(m))
        for (const auto& level : *pyramid) levels.push_back(matrix_json(level));
    return Json{{"determinant", str(dodgson_det(m))}, {"elimination", str(det(m))}, {"condensation", levels}};
}

// ---- poset ----

Poset poset_from(const std::string& file, const std::string& spec) {
    if (!file.empty()) {
        std::istringstream in(read_file(file));
        return read_poset(in);
    }
    if (spec.empty()) throw InputError("give --poset <spec> or --file <path>");
    return build_named_poset(spec);
}

Json cmd_poset(const Options& o) {
    Poset p = poset_from(o.file, o.spec);
    const std::string& v = o.verb;
    if (v == "mobius") {
        std::optional<ElementId> x = o.from.empty() ? p.bottom() : std::optional<ElementId>(p.element(o.from));
        std::optional<ElementId> y = o.to.empty() ? p.top() : std::optional<ElementId>(p.element(o.to));
        if (!x || !y) throw Error(ErrorKind::BadArgument, "poset has no bottom/top; give --from and --to");
        IncidenceFunction mu = mobius(p);
        return Json{{"from", p.label(*x)}, {"to", p.label(*y)}, {"mobius", str(mu(*x, *y))}};
    }
    if (v == "zeta") {
        Poly z = zeta_polynomial(p);
        return Json{{"zeta", poly_json(z, "k")}, {"at_minus_one", str(z(-1))}};
    }
    if (v == "omega") return Json{{"order_polynomial", poly_json(order_polynomial(p), "n")}};
    if (v == "linext") return Json{{"linear_extensions", str(linear_extensions(p))}};
    if (v == "lattice") {
        LatticeReport r = lattice_ops(p);
        return Json{{"elements", p.size()}, {"lattice", r.is_lattice}, {"distributive", r.is_distributive}};
    }
    if (v == "flag") {
        FlagData d = flag_and_cd(p);
        Json sets = Json::array();
        for (const auto& s : d.sets) sets.push_back(s);
        Json j{{"rank", d.rank}, {"sets", sets}, {"flag_f", strings(d.flag_f)}, {"flag_h", strings(d.flag_h)},
               {"ab", to_string_ab(d.ab)}};
        if (d.cd) j["cd"] = to_string_cd(*d.cd);
        return j;
    }
    return Json{{"cd_index", to_string_cd(cd_index(p))}};
}

// ---- arr ----

Arrangement arrangement_input(const Options& o) {
    if (!o.file.empty()) {
        std::istringstream in(read_file(o.file));
        return read_arrangement(in);
    }
    if (o.spec.empty()) throw InputError("give --arr <spec> or --file <path>");
    return build_named_arrangement(o.spec);
}

FiniteFieldOptions field_options(const Options& o) {
    FiniteFieldOptions f;
    f.primes = prime_list(o.primes);
    if (o.budget) f.scan_cap = o.budget;
    return f;
}

Json cmd_arr(const Options& o) {
    Arrangement a = arrangement_input(o);
    const std::string& v = o.verb;
    if (v == "charpoly") {
        static const std::map<std::string, CharPolyBackend> backends{{"", CharPolyBackend::IntersectionPoset},
                                                                     {"poset", CharPolyBackend::IntersectionPoset},
                                                                     {"whitney", CharPolyBackend::Whitney},
                                                                     {"ff", CharPolyBackend::FiniteField}};
        auto it = backends.find(o.backend);
        if (it == backends.end()) throw InputError("unknown --backend '" + o.backend + "' (poset, whitney, ff)");
        CharPoly chi = char_poly(a, it->second, field_options(o));
        return Json{{"dimension", a.dimension()}, {"rank", chi.rank}, {"hyperplanes", a.size()},
                    {"characteristic", poly_json(chi.poly, "q")}};
    }
    if (v == "regions") {
        RegionCount rc = regions(a);
        return Json{{"regions", str(rc.regions)}, {"bounded", str(rc.bounded)}};
    }
    if (v == "count") {
        if (o.q == 0) throw InputError("count needs --q <prime>");
        FiniteFieldOptions f = field_options(o);
        return Json{{"q", o.q}, {"complement", str(complement_count(a, o.q, f.scan_cap))}};
    }
    if (v == "flats") {
        IntersectionLattice lat = intersection_lattice(a);
        std::map<int, std::size_t> by_dim;
        for (const auto& f : lat.flats) ++by_dim[f.dimension];
        Json counts = Json::object();
        for (auto it = by_dim.rbegin(); it != by_dim.rend(); ++it) counts[std::to_string(it->first)] = it->second;
        return Json{{"flats", lat.flats.size()}, {"by_dimension", counts}};
    }
    return Json{{"cd_index", to_string_cd(arrangement_cd_index(a))}};
}

// ---- matroid ----

std::vector<std::string> json_labels(const Json& j, const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    for (const auto& x : j[key]) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return out;
}

Matroid matroid_from_json(const Json& j) {
    if (j.contains("spec")) return build_named_matroid(j["spec"].get<std::string>());
    std::string backend = j.value("backend", "");
    if (backend == "bases") {
        std::vector<std::vector<std::string>> bases;
        for (const auto& b : j.at("bases")) bases.push_back(json_labels(Json{{"b", b}}, "b"));
        return matroid_from_bases(json_labels(j, "ground"), bases);
    }
    if (backend == "matrix") {
        auto rows = json_int_rows(j.at("rows"), "rows");
        std::size_t cols = rows.empty() ? 0 : rows[0].size();
        std::vector<std::string> labels = json_labels(j, "labels");
        Json field = j.value("field", Json("Q"));
        if (field.is_string() && (field == "Q" || field == "q")) {
            QMatrix m(rows.size(), cols);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != cols) throw InputError("matrix rows differ in length");
                for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(rows[r][c]);
            }
            return matroid_from_matrix(m, labels);
        }
        Integer p = json_integer(field);
        if (p <= 1 || !p.fits_ulong_p()) throw InputError("field must be \"Q\" or a prime");
        return matroid_from_matrix_mod(to_zmatrix(rows, cols), p.get_ui(), labels);
    }
    if (backend == "graph") {
        Graph g;
        for (const auto& v : json_labels(j, "vertices")) g.ensure_vertex(v);
        for (const auto& e : j.at("edges")) {
            auto ends = json_labels(Json{{"e", e}}, "e");
            if (ends.size() != 2) throw InputError("graph edges are [u, v] pairs");
            g.add_edge(g.ensure_vertex(ends[0]), g.ensure_vertex(ends[1]));
        }
        return matroid_from_graph(g);
    }
    if (backend == "uniform") return uniform_matroid(j.at("k").get<int>(), j.at("n").get<int>());
    throw InputError("matroid JSON needs backend bases, matrix, graph or uniform (or a spec)");
}

Matroid matroid_input(const Options& o) {
    if (!o.file.empty()) {
        try {
            return matroid_from_json(read_json_file(o.file));
        } catch (const Json::exception& e) {
            throw InputError(std::string("bad matroid JSON: ") + e.what());
        }
    }
    if (o.spec.empty()) throw InputError("give --matroid <spec> or --file <path>");
    return build_named_matroid(o.spec);
}

Json sets_json(const Matroid& m, const std::vector<ElementSet>& sets) {
    Json out = Json::array();
    for (ElementSet s : sets) out.push_back(m.names(s));
    return out;
}

Json cmd_matroid(const Options& o) {
    Matroid m = matroid_input(o);
    const std::string& v = o.verb;
    if (v == "tutte") {
        static const std::map<std::string, TutteBackend> backends{{"", TutteBackend::DeletionContraction},
                                                                  {"dc", TutteBackend::DeletionContraction},
                                                                  {"subset", TutteBackend::SubsetSum},
                                                                  {"activities", TutteBackend::Activities}};
        auto it = backends.find(o.backend);
        if (it == backends.end()) throw InputError("unknown --backend '" + o.backend + "' (dc, subset, activities)");
        return Json{{"tutte", tutte(m, it->second).to_string()}};
    }
    if (v == "eval") {
        TutteReport r = tutte_evaluations(m);
        Json j{{"tutte", r.tutte.to_string()},
               {"rank", r.rank},
               {"elements", r.elements},
               {"bases", str(r.bases)},
               {"independent_sets", str(r.independent_sets)},
               {"spanning_sets", str(r.spanning_sets)},
               {"mobius", str(r.mobius)},
               {"beta", str(r.beta)},
               {"reduced_euler", str(r.reduced_euler)},
               {"f_vector", strings(r.f_vector)},
               {"h_vector", strings(r.h_vector)},
               {"characteristic", poly_json(r.characteristic, "q")}};
        if (r.graph) {
            Json g{{"vertices", r.graph->vertices},
                   {"components", r.graph->components},
                   {"chromatic", poly_json(r.graph->chromatic, "q")},
                   {"acyclic_orientations", str(r.graph->acyclic_orientations)},
                   {"totally_cyclic_orientations", str(r.graph->totally_cyclic_orientations)},
                   {"flow", poly_json(r.graph->flow, "t")}};
            if (r.graph->reliability) g["reliability"] = poly_json(*r.graph->reliability, "p");
            j["graph"] = g;
        }
        return j;
    }
    if (v == "bases") return Json{{"count", matroid_bases(m).size()}, {"bases", sets_json(m, matroid_bases(m))}};
    if (v == "circuits") return Json{{"count", matroid_circuits(m).size()}, {"circuits", sets_json(m, matroid_circuits(m))}};
    if (v == "flats") return Json{{"count", matroid_flats(m).size()}, {"flats", sets_json(m, matroid_flats(m))}};
    if (v == "coboundary") return Json{{"rank", m.rank()}, {"coboundary", coboundary(m).to_string("q", "t")}};
    throw InputError("unknown matroid verb");
}

// ---- ehrhart ----

LatticePolytope polytope_input(const Options& o) {
    if (!o.file.empty()) {
        Json j = read_json_file(o.file);
        try {
            auto a = json_int_rows(j.value("A", Json::array()), "A");
            auto c = json_int_rows(j.value("C", Json::array()), "C");
            std::size_t d = j.contains("dimension") ? j["dimension"].get<std::size_t>()
                            : !a.empty()            ? a[0].size()
                            : !c.empty()            ? c[0].size()
                                                    : 0;
            std::vector<Integer> b, e;
            for (const auto& x : j.value("b", Json::array())) b.push_back(json_integer(x));
            for (const auto& x : j.value("e", Json::array())) e.push_back(json_integer(x));
            return LatticePolytope(static_cast<int>(d), to_zmatrix(a, d), b, to_zmatrix(c, d), e);
        } catch (const Json::exception& e) {
            throw InputError(std::string("bad polytope JSON: ") + e.what());
        }
    }
    if (o.spec.empty()) throw InputError("give --polytope <spec> or --file <path>");
    return build_named_polytope(o.spec);
}

Json ehrhart_json(const EhrhartData& d) {
    return Json{{"dimension", d.dimension},
                {"closed", poly_json(d.closed, "n")},
                {"interior", poly_json(d.interior, "n")},
                {"h_star", strings(d.h_star)},
                {"volume", str(d.volume)},
                {"normalized_volume", str(d.normalized_volume)},
                {"reciprocity", d.reciprocity}};
}

Json cmd_ehrhart(const Options& o) {
    std::uint64_t budget = o.budget ? o.budget : kDefaultScanBudget;
    if (o.verb == "bridge") {
        PosetPolytopeReport r = poset_polytope_bridge(poset_from(o.file, o.poset), budget);
        return Json{{"order", ehrhart_json(r.order)},
                    {"chain", ehrhart_json(r.chain)},
                    {"shifted_order_polynomial", poly_json(r.shifted_order_polynomial, "n")},
                    {"linear_extensions", str(r.linear_extensions)},
                    {"expected_volume", str(r.expected_volume)},
                    {"ehrhart_match", r.ehrhart_match},
                    {"volume_match", r.volume_match}};
    }
    LatticePolytope p = polytope_input(o);
    const std::string& v = o.verb;
    if (v == "poly") return ehrhart_json(ehrhart_polynomial(p, budget));
    if (v == "count") {
        if (o.n < 0) throw InputError("count needs --n");
        return Json{{"points", str(count_points(p, static_cast<std::uint64_t>(o.n), o.interior, budget))}};
    }
    if (v == "hstar") return Json{{"h_star", strings(h_star(p, budget))}};
    if (v == "reciprocity") {
        ReciprocityReport r = reciprocity_check(p, o.upto, budget);
        Json rows = Json::array();
        for (const auto& row : r.rows)
            rows.push_back(Json{{"n", row.n}, {"predicted", str(row.predicted)}, {"counted", str(row.counted)}});
        return Json{{"holds", r.holds}, {"rows", rows}};
    }
    PickReport r = pick_check(p, budget);
    return Json{{"area", str(r.area)},
                {"interior", str(r.interior)},
                {"boundary", str(r.boundary)},
                {"coefficients", strings(r.coefficients)},
                {"consistent", r.consistent}};
}

// ---- reproduce ----

int cmd_reproduce(const Options& o, std::ostream& out) {
    if (o.list) {
        Json j = Json::array();
        for (const auto& r : recipes()) j.push_back(Json{{"name", r.name}, {"summary", r.summary}});
        if (o.format == "json") {
            out << j.dump(2) << "\n";
        } else {
            for (const auto& r : recipes()) out << r.name << "  " << r.summary << "\n";
        }
        return 0;
    }
    std::vector<const Recipe*> chosen;
    if (o.all) {
        for (const auto& r : recipes()) chosen.push_back(&r);
    } else {
        if (o.verb.empty()) throw InputError("reproduce needs a recipe name, --all or --list");
        const Recipe* r = find_recipe(o.verb);
        if (!r) throw InputError("unknown recipe '" + o.verb + "' (see reproduce --list)");
        chosen.push_back(r);
    }
    RecipeOptions ro;
    if (o.n >= 0) ro.n = static_cast<int>(o.n);
    ro.seed = o.seed;
    bool all_pass = true;
    Json report = Json::array();
    for (const Recipe* r : chosen) {
        RecipeResult res;
        std::string failure;
        try {
            res = r->run(ro);
        } catch (const std::exception& e) {
            failure = e.what();
        }
        bool pass = failure.empty() && res.pass();
        all_pass = all_pass && pass;
        if (o.format == "json") {
            Json checks = Json::array();
            for (const auto& c : res.checks)
                checks.push_back(Json{{"what", c.what}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
            Json entry{{"recipe", r->name}, {"pass", pass}, {"checks", checks}};
            if (!failure.empty()) entry["error"] = failure;
            report.push_back(entry);
        } else {
            out << (pass ? "PASS " : "FAIL ") << r->name << "\n";
            for (const auto& c : res.checks)
                out << "  " << (c.pass ? "ok   " : "FAIL ") << c.what << ": expected " << c.expected << ", got " << c.computed
                    << "\n";
            if (!failure.empty()) out << "  error: " << failure << "\n";
        }
    }
    if (o.format == "json") out << report.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

void diagnose(std::ostream& err, const Options& o, const std::string& kind, const std::string& message) {
    if (o.format == "json") {
        err << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump() << "\n";
    } else {
        err << "error [" << kind << "]: " << message << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact enumerative combinatorics: series, recurrences, graphs, determinants, posets, "
                 "arrangements, matroids and lattice polytopes."};
    app.name("ec");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--order", o.order, "Series truncation order")->check(CLI::NonNegativeNumber);
    app.add_option("--budget", o.budget, "Scan budget (lattice points, field points)");
    app.add_option("--seed", o.seed, "Seed for randomized recipes");
    app.add_option("--primes", o.primes, "Comma-separated primes for finite-field methods");

    auto verb = [&](CLI::App* sub, std::vector<std::string> verbs) {
        sub->add_option("verb", o.verb, "Operation")->required()->check(CLI::IsMember(verbs));
    };

    auto* series = app.add_subcommand("series", "Truncated power series");
    verb(series, {"show", "inverse", "exp", "log", "sqrt", "pow", "sin", "cos", "derivative", "integrate", "lagrange",
                  "compose", "mul", "add", "hadamard", "egf2ogf", "ogf2egf"});
    series->add_option("--coeffs", o.coeffs, "Coefficients a0,a1,...");
    series->add_option("--with", o.with, "Second operand coefficients");
    series->add_option("--exponent", o.exponent, "Exponent for pow");
    series->add_option("--file", o.file, "JSON series {coeffs, order}");

    auto* cfinite = app.add_subcommand("cfinite", "Linear recurrences and rational generating functions");
    verb(cfinite, {"nth", "terms", "gf", "rec", "growth", "guess", "poly"});
    cfinite->add_option("--rec", o.rec, "Named recurrence (fib)");
    cfinite->add_option("--coeffs", o.coeffs, "c1,...,cd in a_n + c1 a_{n-1} + ... = 0");
    cfinite->add_option("--init", o.init, "a0,...,a_{d-1}");
    cfinite->add_option("--num", o.num, "GF numerator coefficients");
    cfinite->add_option("--den", o.den, "GF denominator coefficients");
    cfinite->add_option("--seq", o.seq, "Sequence terms");
    cfinite->add_option("--n", o.n, "Index");
    cfinite->add_option("--count", o.count, "Number of terms");
    cfinite->add_option("--max-order", o.max_order, "Largest recurrence order to try");

    auto* graph = app.add_subcommand("graph", "Walks, trees and circuits");
    verb(graph, {"info", "trees", "rooted", "euler", "walks", "walkgf", "closedgf", "chromatic", "acyclic", "matrix"});
    graph->add_option("--graph", o.spec, "Named graph, e.g. complete:4");
    graph->add_option("--file", o.file, "Graph file");
    graph->add_option("--from", o.from, "Start vertex (root for rooted)");
    graph->add_option("--to", o.to, "End vertex");
    graph->add_option("--length", o.length, "Walk length");
    graph->add_option("--kind", o.kind, "adjacency, laplacian, dlaplacian or incidence");

    auto* count = app.add_subcommand("count", "Determinant-based counts");
    verb(count, {"matchings", "routings", "hankel", "aztec", "dodgson", "pfaffian"});
    count->add_option("--rect", o.rect, "Rectangle rows,cols");
    count->add_option("--file", o.file, "Region as ASCII art");
    count->add_option("--n", o.n, "Size parameter");
    count->add_option("--family", o.family, "catalan or schroder");
    count->add_option("--seq", o.seq, "Sequence for hankel");
    count->add_flag("--shifted", o.shifted, "Use a_{i+j+1}");
    count->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','");

    auto* poset = app.add_subcommand("poset", "Posets and incidence algebra");
    verb(poset, {"mobius", "zeta", "omega", "linext", "cdindex", "lattice", "flag"});
    poset->add_option("--poset", o.spec, "Named poset, e.g. boolean:3");
    poset->add_option("--file", o.file, "Poset file");
    poset->add_option("--from", o.from, "Lower element");
    poset->add_option("--to", o.to, "Upper element");

    auto* arr = app.add_subcommand("arr", "Hyperplane arrangements");
    verb(arr, {"charpoly", "regions", "count", "flats", "cdindex"});
    arr->add_option("--arr", o.spec, "Named arrangement, e.g. shi:3");
    arr->add_option("--file", o.file, "Arrangement file");
    arr->add_option("--backend", o.backend, "poset, whitney or ff");
    arr->add_option("--q", o.q, "Prime field size");

    auto* matroid = app.add_subcommand("matroid", "Matroids and Tutte polynomials");
    verb(matroid, {"tutte", "eval", "bases", "circuits", "flats", "coboundary"});
    matroid->add_option("--matroid", o.spec, "Named matroid, e.g. uniform:2,4");
    matroid->add_option("--file", o.file, "Matroid JSON");
    matroid->add_option("--backend", o.backend, "dc, subset or activities");

    auto* ehrhart = app.add_subcommand("ehrhart", "Lattice points in polytopes");
    verb(ehrhart, {"poly", "count", "hstar", "reciprocity", "pick", "bridge"});
    ehrhart->add_option("--polytope", o.spec, "Named polytope, e.g. cube:3");
    ehrhart->add_option("--file", o.file, "Polytope JSON {A, b, C, e}");
    ehrhart->add_option("--n", o.n, "Dilation");
    ehrhart->add_flag("--interior", o.interior, "Count interior points");
    ehrhart->add_option("--upto", o.upto, "Largest dilation for reciprocity");
    ehrhart->add_option("--poset", o.poset, "Poset spec for bridge");

    auto* reproduce = app.add_subcommand("reproduce", "Run named checks");
    reproduce->add_option("recipe", o.verb, "Recipe name");
    reproduce->add_option("--n", o.n, "Size parameter");
    reproduce->add_flag("--all", o.all, "Run every recipe");
    reproduce->add_flag("--list", o.list, "List recipes");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        diagnose(err, o, "ParseError", e.what());
        return 2;
    }

    try {
        if (reproduce->parsed()) return cmd_reproduce(o, out);
        Json result;
        if (series->parsed()) result = cmd_series(o);
        else if (cfinite->parsed()) result = cmd_cfinite(o);
        else if (graph->parsed()) result = cmd_graph(o);
        else if (count->parsed()) result = cmd_count(o);
        else if (poset->parsed()) result = cmd_poset(o);
        else if (arr->parsed()) result = cmd_arr(o);
        else if (matroid->parsed()) result = cmd_matroid(o);
        else result = cmd_ehrhart(o);
        emit(out, o, result);
        return 0;
    } catch (const InputError& e) {
        diagnose(err, o, "ParseError", e.what());
        return 2;
    } catch (const Error& e) {
        std::string kind(error_kind_name(e.kind()));
        std::string message = e.what();
        if (message.rfind(kind + ": ", 0) == 0) message.erase(0, kind.size() + 2);
        diagnose(err, o, kind, message);
        return e.kind() == ErrorKind::BadSpec ? 2 : 1;
    } catch (const std::exception& e) {
        diagnose(err, o, "Error", e.what());
        return 1;
    }
}

}  // namespace ec::cli
