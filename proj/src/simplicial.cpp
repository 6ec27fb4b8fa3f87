#include "mdh/simplicial.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "mdh/error.hpp"

namespace mdh {

namespace {

void close_under_faces(std::set<std::vector<int>>& simps) {
    std::vector<std::vector<int>> work(simps.begin(), simps.end());
    while (!work.empty()) {
        std::vector<int> s = std::move(work.back());
        work.pop_back();
        if (s.size() < 2) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != i) face.push_back(s[k]);
            if (simps.insert(face).second) work.push_back(face);
        }
    }
}

std::set<std::vector<int>> normalize(std::vector<std::vector<int>> list, const char* what) {
    std::set<std::vector<int>> out;
    for (std::vector<int>& s : list) {
        if (s.empty()) throw Error(std::string(what) + " contains an empty simplex");
        std::sort(s.begin(), s.end());
        if (s.front() < 0) throw Error(std::string(what) + " contains a negative vertex");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(std::string(what) + " contains a simplex with a repeated vertex");
        out.insert(std::move(s));
    }
    close_under_faces(out);
    return out;
}

} // namespace

SimplicialPair make_complex(std::vector<std::vector<int>> simplices,
                            std::vector<std::vector<int>> sub) {
    std::set<std::vector<int>> simps = normalize(std::move(simplices), "the complex");
    std::set<std::vector<int>> subs = normalize(std::move(sub), "the subcomplex");
    for (const auto& s : subs)
        if (!simps.count(s)) throw Error("the subcomplex is not contained in the complex");
    SimplicialPair p;
    p.simplices.assign(simps.begin(), simps.end());
    p.sub.assign(subs.begin(), subs.end());
    for (const auto& s : p.simplices) p.vertices = std::max(p.vertices, s.back() + 1);
    return p;
}

void validate_pair(const SimplicialPair& p) {
    std::set<std::vector<int>> simps(p.simplices.begin(), p.simplices.end());
    std::set<std::vector<int>> subs(p.sub.begin(), p.sub.end());
    if (simps.size() != p.simplices.size()) throw Error("the complex repeats a simplex");
    if (subs.size() != p.sub.size()) throw Error("the subcomplex repeats a simplex");
    for (const std::set<std::vector<int>>* set : {&simps, &subs})
        for (const std::vector<int>& s : *set) {
            if (s.empty()) throw Error("empty simplex");
            if (!std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                throw Error("simplices must be strictly increasing vertex tuples");
            if (s.front() < 0 || s.back() >= p.vertices)
                throw Error("simplex vertex out of range");
            if (s.size() < 2) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i) face.push_back(s[k]);
                if (!set->count(face)) throw Error("complex is not closed under faces");
            }
        }
    for (const auto& s : subs)
        if (!simps.count(s)) throw Error("the subcomplex is not contained in the complex");
}

int HomologyProfile::rank(int n) const {
    return (n >= 0 && n < static_cast<int>(ranks.size())) ? ranks[static_cast<std::size_t>(n)]
                                                          : 0;
}

std::vector<Int> HomologyProfile::torsion_at(int n) const {
    return (n >= 0 && n < static_cast<int>(torsion.size()))
               ? torsion[static_cast<std::size_t>(n)]
               : std::vector<Int>{};
}

HomologyProfile homology(const SimplicialPair& p) {
    validate_pair(p);
    const std::set<std::vector<int>> subs(p.sub.begin(), p.sub.end());

    // relative chain basis: simplices outside the subcomplex, by dimension
    std::size_t maxdim = 0;
    for (const auto& s : p.simplices) maxdim = std::max(maxdim, s.size() - 1);
    std::vector<std::vector<std::vector<int>>> basis(maxdim + 1);
    std::vector<std::map<std::vector<int>, int>> index(maxdim + 1);
    for (const auto& s : p.simplices) {
        if (subs.count(s)) continue;
        const std::size_t d = s.size() - 1;
        index[d][s] = static_cast<int>(basis[d].size());
        basis[d].push_back(s);
    }

    // boundary[n]: C_n -> C_{n-1}; faces inside the subcomplex drop out
    std::vector<IntMatrix> boundary(maxdim + 2);
    boundary[0] = IntMatrix(0, static_cast<int>(basis[0].size()));
    for (std::size_t n = 1; n <= maxdim; ++n) {
        IntMatrix d(static_cast<int>(basis[n - 1].size()), static_cast<int>(basis[n].size()));
        for (std::size_t c = 0; c < basis[n].size(); ++c) {
            const std::vector<int>& s = basis[n][c];
            long sign = 1;
            for (std::size_t i = 0; i < s.size(); ++i, sign = -sign) {
                std::vector<int> face;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i) face.push_back(s[k]);
                auto it = index[n - 1].find(face);
                if (it != index[n - 1].end())
                    d.at(it->second, static_cast<int>(c)) += sign;
            }
        }
        boundary[n] = std::move(d);
    }
    boundary[maxdim + 1] = IntMatrix(static_cast<int>(basis[maxdim].size()), 0);

    HomologyProfile h;
    std::vector<SnfResult> forms;
    for (std::size_t n = 0; n <= maxdim + 1; ++n) forms.push_back(snf(boundary[n]));
    for (std::size_t n = 0; n <= maxdim; ++n) {
        const int cn = static_cast<int>(basis[n].size());
        h.ranks.push_back(cn - forms[n].rank() - forms[n + 1].rank());
        std::vector<Int> tors;
        for (const Int& f : forms[n + 1].invariant_factors)
            if (f > 1) tors.push_back(f);
        h.torsion.push_back(std::move(tors));
    }
    while (!h.ranks.empty() && h.ranks.back() == 0 && h.torsion.back().empty()) {
        h.ranks.pop_back();
        h.torsion.pop_back();
    }
    return h;
}

BConeDiagram bcone_diagram(const SimplicialPair& p, const Rat& b) {
    if (b < 1) throw Error("cone exponents must be at least 1");
    BConeDiagram d;
    d.b = b;
    d.at_b = homology(p);
    d.at_inf = d.at_b;
    d.below_ranks.assign(std::max<std::size_t>(d.at_b.ranks.size(), 1), 0);
    if (p.sub.empty()) d.below_ranks[0] = 1;
    return d;
}

HomologyProfile curve_link_profile(int n_branches) {
    if (n_branches < 1) throw Error("a curve has at least one branch");
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < n_branches; ++i) {
        const int v = 3 * i;
        tris.push_back({v, v + 1});
        tris.push_back({v + 1, v + 2});
        tris.push_back({v, v + 2});
    }
    return homology(make_complex(std::move(tris)));
}

namespace {

struct Forest {
    std::vector<int> comp_of;       // vertex -> component index (by least vertex)
    std::vector<int> comp_min;      // component -> least vertex
    std::vector<int> parent;        // vertex -> BFS parent, -1 at roots
    std::vector<std::pair<int, int>> cycle_edges; // non-forest edges, lex order
};

// oriented chain on sorted edges: traversing x -> y adds +1 to [x,y] when
// x < y and -1 otherwise
using Chain = std::map<std::pair<int, int>, Int>;

void add_traversal(Chain& ch, int x, int y, const Int& coeff) {
    if (x < y)
        ch[{x, y}] += coeff;
    else
        ch[{y, x}] -= coeff;
    const std::pair<int, int> key = x < y ? std::pair<int, int>{x, y} : std::pair<int, int>{y, x};
    if (ch[key] == 0) ch.erase(key);
}

Forest build_forest(const SimplicialPair& p) {
    if (!p.sub.empty()) throw Error("induced maps are computed for absolute homology only");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(p.vertices));
    std::vector<char> present(static_cast<std::size_t>(p.vertices), 0);
    for (const auto& s : p.simplices) {
        if (s.size() > 2) throw Error("induced maps need complexes of dimension at most 1");
        for (int v : s) present[static_cast<std::size_t>(v)] = 1;
        if (s.size() == 2) {
            adj[static_cast<std::size_t>(s[0])].push_back(s[1]);
            adj[static_cast<std::size_t>(s[1])].push_back(s[0]);
        }
    }

    Forest f;
    f.comp_of.assign(static_cast<std::size_t>(p.vertices), -1);
    f.parent.assign(static_cast<std::size_t>(p.vertices), -1);
    std::set<std::pair<int, int>> tree;
    for (int root = 0; root < p.vertices; ++root) {
        if (!present[static_cast<std::size_t>(root)] ||
            f.comp_of[static_cast<std::size_t>(root)] != -1)
            continue;
        const int comp = static_cast<int>(f.comp_min.size());
        f.comp_min.push_back(root);
        std::queue<int> q;
        q.push(root);
        f.comp_of[static_cast<std::size_t>(root)] = comp;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (f.comp_of[static_cast<std::size_t>(w)] != -1) continue;
                f.comp_of[static_cast<std::size_t>(w)] = comp;
                f.parent[static_cast<std::size_t>(w)] = v;
                tree.insert({std::min(v, w), std::max(v, w)});
                q.push(w);
            }
        }
    }
    for (const auto& s : p.simplices)
        if (s.size() == 2 && !tree.count({s[0], s[1]})) f.cycle_edges.push_back({s[0], s[1]});
    return f;
}

// the fundamental cycle of a non-forest edge: the edge followed by the
// forest path back from its head to its tail
Chain fundamental_cycle(const Forest& f, std::pair<int, int> e) {
    Chain z;
    add_traversal(z, e.first, e.second, 1);
    std::vector<int> up_from_second;
    for (int v = e.second; v != -1; v = f.parent[static_cast<std::size_t>(v)])
        up_from_second.push_back(v);
    std::set<int> on_path(up_from_second.begin(), up_from_second.end());
    int meet = e.first;
    std::vector<int> up_from_first;
    while (!on_path.count(meet)) {
        up_from_first.push_back(meet);
        meet = f.parent[static_cast<std::size_t>(meet)];
    }
    // walk e.second -> meet, then meet -> e.first
    for (int v : up_from_second) {
        if (v == meet) break;
        add_traversal(z, v, f.parent[static_cast<std::size_t>(v)], 1);
    }
    for (auto it = up_from_first.rbegin(); it != up_from_first.rend(); ++it) {
        const int child = *it;
        add_traversal(z, f.parent[static_cast<std::size_t>(child)], child, 1);
    }
    return z;
}

} // namespace

std::pair<IntMatrix, IntMatrix> induced_maps_deg01(const SimplicialPair& dom,
                                                   const SimplicialPair& cod,
                                                   const std::vector<int>& vertex_image) {
    validate_pair(dom);
    validate_pair(cod);
    if (static_cast<int>(vertex_image.size()) != dom.vertices)
        throw Error("vertex_image must cover every vertex of the domain");

    std::set<std::vector<int>> cod_simps(cod.simplices.begin(), cod.simplices.end());
    auto img = [&](int v) {
        const int w = vertex_image[static_cast<std::size_t>(v)];
        if (w < 0 || w >= cod.vertices) throw Error("vertex_image leaves the codomain");
        return w;
    };
    for (const auto& s : dom.simplices) {
        std::vector<int> t;
        for (int v : s) t.push_back(img(v));
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        if (!cod_simps.count(t)) throw Error("vertex_image is not a simplicial map");
    }

    const Forest fd = build_forest(dom);
    const Forest fc = build_forest(cod);

    IntMatrix m0(static_cast<int>(fc.comp_min.size()), static_cast<int>(fd.comp_min.size()));
    for (std::size_t c = 0; c < fd.comp_min.size(); ++c)
        m0.at(fc.comp_of[static_cast<std::size_t>(img(fd.comp_min[c]))], static_cast<int>(c)) = 1;

    // codomain cycle coordinates are read off at the non-forest edges
    std::map<std::pair<int, int>, int> cod_cycle_index;
    for (std::size_t i = 0; i < fc.cycle_edges.size(); ++i)
        cod_cycle_index[fc.cycle_edges[i]] = static_cast<int>(i);

    IntMatrix m1(static_cast<int>(fc.cycle_edges.size()), static_cast<int>(fd.cycle_edges.size()));
    for (std::size_t c = 0; c < fd.cycle_edges.size(); ++c) {
        Chain pushed;
        for (const auto& [edge, coeff] : fundamental_cycle(fd, fd.cycle_edges[c])) {
            const int a = img(edge.first), b = img(edge.second);
            if (a != b) add_traversal(pushed, a, b, coeff);
        }
        Chain residual = pushed;
        for (const auto& [edge, coeff] : pushed) {
            auto it = cod_cycle_index.find(edge);
            if (it == cod_cycle_index.end()) continue;
            m1.at(it->second, static_cast<int>(c)) = coeff;
            for (const auto& [ze, zc] : fundamental_cycle(fc, edge))
                add_traversal(residual, ze.first, ze.second, -coeff * zc);
        }
        if (!residual.empty())
            throw Error("internal: pushed cycle does not decompose in the codomain basis");
    }
    return {m0, m1};
}

} // namespace mdh
