#include "mdh/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace mdh {

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw Error("not an integer: \"" + j.get<std::string>() + "\"");
        }
    }
    throw Error("expected an integer (number or decimal string): " + j.dump());
}

Json rat_to_json(const Rat& q) {
    return Json::array({int_to_json(rat_num(q)), int_to_json(rat_den(q))});
}

Rat rat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error("a rational must be a two-element array [num, den]: " + j.dump());
    Int num = int_from_json(j[0]);
    Int den = int_from_json(j[1]);
    if (den == 0) throw Error("zero denominator in rational " + j.dump());
    return Rat(num, den);
}

Json extrat_to_json(const ExtRat& e) {
    if (e.is_infinite()) return Json("inf");
    return rat_to_json(e.finite());
}

ExtRat extrat_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ExtRat::infinity();
        throw Error("expected [num, den] or \"inf\": " + j.dump());
    }
    return ExtRat(rat_from_json(j));
}

Json gauss_to_json(const GaussRat& g) {
    return Json{{"re", rat_to_json(g.re)}, {"im", rat_to_json(g.im)}};
}

GaussRat gauss_from_json(const Json& j) {
    if (!j.is_object()) throw Error("a Gaussian rational must be {\"re\":[p,q],\"im\":[p,q]}");
    GaussRat g;
    if (j.contains("re")) g.re = rat_from_json(j.at("re"));
    if (j.contains("im")) g.im = rat_from_json(j.at("im"));
    return g;
}

Json curve_to_json(const Curve& c) {
    Json branches = Json::array();
    for (const PuiseuxSeries& s : c.branches) {
        Json terms = Json::array();
        for (const PuiseuxTerm& t : s.terms)
            terms.push_back(Json{{"exp", rat_to_json(t.exp)}, {"coeff", gauss_to_json(t.coeff)}});
        branches.push_back(Json{{"id", s.id}, {"terms", terms}});
    }
    return Json{{"branches", branches}};
}

Curve curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("branches") || !j.at("branches").is_array())
        throw Error("curve JSON must be an object with a \"branches\" array");
    Curve c;
    for (const Json& b : j.at("branches")) {
        if (!b.is_object() || !b.contains("id") || !b.at("id").is_string())
            throw Error("every branch entry needs a string \"id\"");
        std::string id = b.at("id").get<std::string>();
        bool has_series = b.contains("series");
        bool has_terms = b.contains("terms");
        if (has_series == has_terms)
            throw Error("branch " + id + " needs exactly one of \"series\" or \"terms\"");
        if (has_series) {
            if (!b.at("series").is_string())
                throw Error("branch " + id + ": \"series\" must be a string");
            c.branches.push_back(parse_series(b.at("series").get<std::string>(), id));
        } else {
            if (!b.at("terms").is_array())
                throw Error("branch " + id + ": \"terms\" must be an array");
            PuiseuxSeries s;
            s.id = id;
            for (const Json& tj : b.at("terms")) {
                if (!tj.is_object() || !tj.contains("exp") || !tj.contains("coeff"))
                    throw Error("branch " + id + ": each term needs \"exp\" and \"coeff\"");
                PuiseuxTerm t;
                t.exp = rat_from_json(tj.at("exp"));
                t.coeff = gauss_from_json(tj.at("coeff"));
                if (t.exp < 1)
                    throw Error("branch " + id + ": exponent " + rat_to_string(t.exp) +
                                " is below 1; change coordinates so that every branch has order "
                                "at least 1");
                if (t.coeff.is_zero())
                    throw Error("branch " + id + ": term with zero coefficient");
                if (!s.terms.empty() && t.exp <= s.terms.back().exp)
                    throw Error("branch " + id + ": exponents must be strictly increasing");
                s.terms.push_back(std::move(t));
            }
            c.branches.push_back(std::move(s));
        }
    }
    validate_curve(c);
    return c;
}

Json tree_to_json(const EggersWallTree& t) {
    Json nodes = Json::array();
    Json edges = Json::array();
    Json leaves = Json::object();
    for (int id = 0; id < t.size(); ++id) {
        const TreeNode& nd = t.node(id);
        nodes.push_back(Json{{"id", id}, {"height", extrat_to_json(nd.height)}});
        if (id > 0)
            edges.push_back(
                Json{{"from", nd.parent}, {"to", id}, {"weight", int_to_json(nd.weight_in)}});
        if (nd.height.is_infinite())
            leaves[std::to_string(id)] = t.branch_ids[static_cast<std::size_t>(nd.branches[0])];
    }
    return Json{{"nodes", nodes}, {"edges", edges}, {"leaves", leaves}};
}

EggersWallTree tree_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") || !j.contains("leaves"))
        throw Error("tree JSON must be an object with \"nodes\", \"edges\" and \"leaves\"");
    if (!j.at("nodes").is_array() || !j.at("edges").is_array() || !j.at("leaves").is_object())
        throw Error("malformed tree JSON");

    std::map<long long, ExtRat> height;
    for (const Json& nj : j.at("nodes")) {
        if (!nj.is_object() || !nj.contains("id") || !nj.contains("height"))
            throw Error("every tree node needs \"id\" and \"height\"");
        long long id = static_cast<long long>(int_from_json(nj.at("id")));
        if (height.count(id)) throw Error("duplicate node id " + std::to_string(id));
        height.emplace(id, extrat_from_json(nj.at("height")));
    }
    if (height.empty()) throw Error("tree has no nodes");

    std::map<long long, long long> parent;
    std::map<long long, Int> weight;
    std::map<long long, std::vector<long long>> children;
    for (const Json& ej : j.at("edges")) {
        if (!ej.is_object() || !ej.contains("from") || !ej.contains("to") ||
            !ej.contains("weight"))
            throw Error("every tree edge needs \"from\", \"to\", \"weight\"");
        long long from = static_cast<long long>(int_from_json(ej.at("from")));
        long long to = static_cast<long long>(int_from_json(ej.at("to")));
        if (!height.count(from) || !height.count(to))
            throw Error("edge references a missing node");
        Int w = int_from_json(ej.at("weight"));
        if (w < 1) throw Error("edge weights must be positive");
        if (parent.count(to)) throw Error("node " + std::to_string(to) + " has two parents");
        if (!(height.at(from) < height.at(to)))
            throw Error("heights must strictly increase from parent to child");
        parent[to] = from;
        weight[to] = w;
        children[from].push_back(to);
    }
    if (parent.size() + 1 != height.size())
        throw Error("a tree on n nodes needs exactly n-1 edges");

    long long root = -1;
    for (const auto& [id, h] : height)
        if (!parent.count(id)) {
            if (root != -1) throw Error("tree has two roots");
            root = id;
        }
    if (height.at(root) != ExtRat(Rat(0))) throw Error("the root must sit at height 0");

    // leaves: exactly the nodes at height inf, each labeled
    std::map<long long, std::string> leaf_label;
    std::set<std::string> used;
    for (const auto& [key, val] : j.at("leaves").items()) {
        long long id;
        try {
            id = std::stoll(key);
        } catch (const std::exception&) {
            throw Error("leaf keys must be node ids, got \"" + key + "\"");
        }
        if (!height.count(id)) throw Error("leaf label references a missing node");
        if (!val.is_string() || val.get<std::string>().empty())
            throw Error("leaf labels must be nonempty strings");
        if (!used.insert(val.get<std::string>()).second)
            throw Error("duplicate branch id " + val.get<std::string>());
        leaf_label[id] = val.get<std::string>();
    }
    for (const auto& [id, h] : height) {
        bool is_inf = h.is_infinite();
        bool childless = !children.count(id);
        if (is_inf && !leaf_label.count(id))
            throw Error("node " + std::to_string(id) + " at height inf has no branch label");
        if (!is_inf && leaf_label.count(id))
            throw Error("labeled leaf " + std::to_string(id) + " must sit at height inf");
        if (!is_inf && childless && id != root)
            throw Error("interior node " + std::to_string(id) + " has no children");
    }

    // branch order: ascending leaf node id
    std::vector<long long> leaf_ids;
    for (const auto& [id, lbl] : leaf_label) leaf_ids.push_back(id);
    std::sort(leaf_ids.begin(), leaf_ids.end());

    // root-to-leaf node path
    auto path_of = [&](long long leaf) {
        std::vector<long long> p;
        for (long long v = leaf;; v = parent.at(v)) {
            p.push_back(v);
            if (v == root) break;
        }
        std::reverse(p.begin(), p.end());
        return p;
    };

    std::vector<BranchInvariants> inv;
    std::vector<std::vector<long long>> paths;
    for (long long leaf : leaf_ids) {
        std::vector<long long> p = path_of(leaf);
        BranchInvariants bi;
        bi.id = leaf_label.at(leaf);
        if (weight.at(p[1]) != 1)
            throw Error("the first edge on the path of " + bi.id + " must weigh 1");
        for (std::size_t i = 2; i < p.size(); ++i) {
            const Int& wlo = weight.at(p[i - 1]);
            const Int& whi = weight.at(p[i]);
            if (whi == wlo) continue;
            if (whi % wlo != 0)
                throw Error("weights along the path of " + bi.id + " do not divide");
            bi.jumps.push_back(BranchJump{height.at(p[i - 1]).finite(), whi / wlo});
        }
        inv.push_back(std::move(bi));
        paths.push_back(std::move(p));
    }

    // a vertex with one child must raise the weight, otherwise it encodes nothing
    for (const auto& [id, kids] : children) {
        if (id == root || kids.size() != 1) continue;
        if (weight.at(kids[0]) == weight.at(id))
            throw Error("node " + std::to_string(id) +
                        " has one child and no weight increase; it encodes nothing");
    }

    // contacts from lowest common ancestors
    std::size_t n = leaf_ids.size();
    std::vector<std::vector<Rat>> con(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::size_t i = 0;
            while (i + 1 < paths[a].size() && i + 1 < paths[b].size() &&
                   paths[a][i + 1] == paths[b][i + 1])
                ++i;
            const ExtRat& h = height.at(paths[a][i]);
            con[a][b] = h.is_infinite() ? Rat(0) : h.finite();
            con[b][a] = con[a][b];
        }

    return build_tree_from_invariants(inv, con);
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw Error("matrix must have " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw Error("matrix rows must have " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) m.at(r, c) = int_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

Json diagram_to_json(const BDiagram& d) {
    Json j;
    j["degree"] = d.degree;
    j["breakpoints"] = Json::array();
    for (const Rat& t : d.breakpoints) j["breakpoints"].push_back(rat_to_json(t));
    j["ranks"] = d.ranks;
    j["steps"] = Json::array();
    for (const IntMatrix& s : d.steps) j["steps"].push_back(matrix_to_json(s));
    return j;
}

BDiagram diagram_from_json(const Json& j) {
    if (!j.is_object()) throw Error("a diagram must be a JSON object");
    for (const char* key : {"degree", "breakpoints", "ranks", "steps"})
        if (!j.contains(key)) throw Error(std::string("diagram is missing \"") + key + "\"");
    BDiagram d;
    if (!j["degree"].is_number_integer()) throw Error("diagram degree must be an integer");
    d.degree = j["degree"].get<int>();
    for (const Json& t : j["breakpoints"]) d.breakpoints.push_back(rat_from_json(t));
    for (const Json& r : j["ranks"]) {
        if (!r.is_number_integer()) throw Error("ranks must be integers");
        d.ranks.push_back(r.get<int>());
    }
    const Json& steps = j["steps"];
    if (!steps.is_array() || steps.size() + 1 != d.ranks.size())
        throw Error("diagram needs one step per breakpoint");
    for (std::size_t s = 0; s < steps.size(); ++s)
        d.steps.push_back(matrix_from_json(steps[s], d.ranks[s], d.ranks[s + 1]));
    validate_diagram(d);
    return d;
}

Json framed_to_json(const FramedDiagram& f) {
    Json j;
    for (const auto& [key, d] : {std::pair<const char*, const BDiagram*>{"deg0", &f.deg0},
                                 {"deg1", &f.deg1}}) {
        Json dj = diagram_to_json(*d);
        dj["inf_basis"] = f.inf_basis;
        dj["one_basis"] = f.one_basis;
        j[key] = std::move(dj);
    }
    return j;
}

FramedDiagram framed_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("deg0") || !j.contains("deg1"))
        throw Error("a framed diagram must carry \"deg0\" and \"deg1\"");
    FramedDiagram f;
    f.deg0 = diagram_from_json(j["deg0"]);
    f.deg1 = diagram_from_json(j["deg1"]);
    bool have_basis = false;
    for (const char* key : {"deg0", "deg1"}) {
        const Json& dj = j[key];
        if (!dj.contains("inf_basis") && !dj.contains("one_basis")) continue;
        if (!dj.contains("inf_basis") || !dj.contains("one_basis"))
            throw Error("framing labels must come in pairs");
        std::vector<std::string> inf = dj["inf_basis"].get<std::vector<std::string>>();
        std::vector<std::string> one = dj["one_basis"].get<std::vector<std::string>>();
        if (have_basis && (inf != f.inf_basis || one != f.one_basis))
            throw Error("the two degrees disagree on the framing labels");
        f.inf_basis = std::move(inf);
        f.one_basis = std::move(one);
        have_basis = true;
    }
    if (!have_basis) throw Error("a framed diagram needs inf_basis and one_basis labels");
    validate_framed(f);
    return f;
}

Json complex_to_json(const SimplicialPair& p) {
    Json j = Json::object();
    j["simplices"] = p.simplices;
    j["sub"] = p.sub;
    return j;
}

SimplicialPair complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("simplices"))
        throw Error("a complex must carry a \"simplices\" array");
    auto tuples = [](const Json& a, const char* what) {
        if (!a.is_array()) throw Error(std::string(what) + " must be an array of vertex tuples");
        std::vector<std::vector<int>> out;
        for (const Json& s : a) {
            if (!s.is_array()) throw Error(std::string(what) + " must hold vertex tuples");
            std::vector<int> tuple;
            for (const Json& v : s) {
                if (!v.is_number_integer())
                    throw Error(std::string(what) + " vertices must be integers");
                tuple.push_back(v.get<int>());
            }
            out.push_back(std::move(tuple));
        }
        return out;
    };
    std::vector<std::vector<int>> sub;
    if (j.contains("sub")) sub = tuples(j["sub"], "\"sub\"");
    return make_complex(tuples(j["simplices"], "\"simplices\""), std::move(sub));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file " + path);
    out << text;
    if (!out) throw Error("failed writing file " + path);
}

Json parse_json_text(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("invalid JSON in " + what);
    return j;
}

Json load_json_file(const std::string& path) {
    return parse_json_text(read_text_file(path), path);
}

} // namespace mdh
