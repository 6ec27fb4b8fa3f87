#include "mdh/eggers.hpp"

#include <algorithm>
#include <set>

#include "mdh/json_io.hpp"

namespace mdh {

std::vector<Rat> EggersWallTree::interior_heights() const {
    std::set<Rat> hs;
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!nodes[i].height.is_infinite()) hs.insert(nodes[i].height.finite());
    return std::vector<Rat>(hs.begin(), hs.end());
}

namespace {

void validate_invariants(const std::vector<BranchInvariants>& br,
                         const std::vector<std::vector<Rat>>& con) {
    if (br.empty()) throw Error("tree construction needs at least one branch");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < br.size(); ++i) {
        if (br[i].id.empty()) throw Error("branch " + std::to_string(i + 1) + " has no id");
        if (!ids.insert(br[i].id).second) throw Error("duplicate branch id " + br[i].id);
        Int rho = 1;
        Rat prev(1);
        for (const BranchJump& j : br[i].jumps) {
            if (j.exp <= prev)
                throw Error("characteristic exponents of " + br[i].id +
                            " must be strictly increasing and exceed 1");
            if (j.k < 2) throw Error("characteristic factor below 2 on " + br[i].id);
            Rat q = j.exp * Rat(rho);
            if (rat_den(q) != j.k)
                throw Error("factor " + j.k.str() + " at exponent " + rat_to_string(j.exp) +
                            " of " + br[i].id + " does not match the denominator " +
                            rat_den(q).str() + " it must introduce");
            rho *= j.k;
            prev = j.exp;
        }
    }

    std::size_t n = br.size();
    if (con.size() != n) throw Error("contact matrix size does not match the branch count");
    for (std::size_t i = 0; i < n; ++i) {
        if (con[i].size() != n) throw Error("contact matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (con[i][j] != con[j][i]) throw Error("contact matrix is not symmetric");
            if (con[i][j] < 1)
                throw Error("contact(" + br[i].id + ", " + br[j].id + ") is below 1");
        }
    }

    // non-archimedean: among the three pairwise contacts of any triple, the
    // minimum is attained at least twice
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Rat v[3] = {con[i][j], con[j][k], con[i][k]};
                std::sort(v, v + 3);
                if (v[0] != v[1])
                    throw Error("contacts of (" + br[i].id + ", " + br[j].id + ", " + br[k].id +
                                ") violate the non-archimedean inequality: c(" + br[i].id + "," +
                                br[j].id + ")=" + rat_to_string(con[i][j]) + ", c(" + br[j].id +
                                "," + br[k].id + ")=" + rat_to_string(con[j][k]) + ", c(" +
                                br[i].id + "," + br[k].id + ")=" + rat_to_string(con[i][k]));
            }
}

struct TreeBuilder {
    const std::vector<BranchInvariants>& br;
    const std::vector<std::vector<Rat>>& con;
    EggersWallTree tree;

    int new_node(const ExtRat& h, int parent, const Int& w, std::vector<int> S) {
        int id = static_cast<int>(tree.nodes.size());
        TreeNode nd;
        nd.height = h;
        nd.parent = parent;
        nd.weight_in = w;
        nd.branches = std::move(S);
        tree.nodes.push_back(std::move(nd));
        if (parent >= 0) tree.nodes[static_cast<std::size_t>(parent)].children.push_back(id);
        return id;
    }

    // Creates the subtree hanging below the class S, whose members pairwise
    // coincide strictly above h_prev; rho is the weight of the edge entering
    // the next vertex (the product of k's consumed so far).
    void build(const std::vector<int>& S, const Rat& h_prev, int parent, const Int& rho) {
        bool has_jump = false;
        Rat hjump;
        for (int i : S)
            for (const BranchJump& j : br[static_cast<std::size_t>(i)].jumps) {
                if (j.exp <= h_prev) continue;
                if (!has_jump || j.exp < hjump) {
                    hjump = j.exp;
                    has_jump = true;
                }
                break;
            }

        bool has_split = false;
        Rat hsplit;
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b) {
                const Rat& c = con[static_cast<std::size_t>(S[a])][static_cast<std::size_t>(S[b])];
                if (!has_split || c < hsplit) {
                    hsplit = c;
                    has_split = true;
                }
            }

        if (!has_jump && !has_split) {
            if (S.size() != 1) throw Error("finite contacts must eventually split every class");
            new_node(ExtRat::infinity(), parent, rho, S);
            return;
        }

        Rat h = has_jump && (!has_split || hjump < hsplit) ? hjump : hsplit;
        int v = new_node(ExtRat(h), parent, rho, S);

        std::vector<std::vector<int>> parts;
        if (has_split && hsplit == h) {
            // classes of "contact > h"; transitive by the ultrametric
            for (int i : S) {
                bool placed = false;
                for (auto& part : parts)
                    if (con[static_cast<std::size_t>(part[0])][static_cast<std::size_t>(i)] > h) {
                        part.push_back(i);
                        placed = true;
                        break;
                    }
                if (!placed) parts.push_back({i});
            }
        } else {
            parts.push_back(S);
        }

        for (const auto& T : parts) {
            // members that coincide above h must agree on a jump at h
            int jumping = 0;
            Int k = 0;
            std::string who;
            for (int i : T)
                for (const BranchJump& j : br[static_cast<std::size_t>(i)].jumps) {
                    if (j.exp != h) continue;
                    ++jumping;
                    if (k == 0) {
                        k = j.k;
                        who = br[static_cast<std::size_t>(i)].id;
                    } else if (j.k != k) {
                        throw Error("branches " + who + " and " + br[static_cast<std::size_t>(i)].id +
                                    " coincide above height " + rat_to_string(h) +
                                    " but disagree on the factor there");
                    }
                }
            if (jumping != 0 && jumping != static_cast<int>(T.size()))
                throw Error("branches coinciding above height " + rat_to_string(h) +
                            " disagree on having a characteristic exponent there");
            build(T, h, v, jumping ? rho * k : rho);
        }
    }
};

} // namespace

EggersWallTree build_tree_from_invariants(const std::vector<BranchInvariants>& branches,
                                          const std::vector<std::vector<Rat>>& contacts) {
    validate_invariants(branches, contacts);
    TreeBuilder tb{branches, contacts, {}};
    std::vector<int> all(branches.size());
    for (std::size_t i = 0; i < branches.size(); ++i) {
        all[i] = static_cast<int>(i);
        tb.tree.branch_ids.push_back(branches[i].id);
    }
    int root = tb.new_node(ExtRat(Rat(0)), -1, Int(1), all);
    tb.build(all, Rat(0), root, Int(1));

    tb.tree.leaf_of.assign(branches.size(), -1);
    for (int id = 0; id < tb.tree.size(); ++id) {
        const TreeNode& nd = tb.tree.node(id);
        if (nd.height.is_infinite()) tb.tree.leaf_of[static_cast<std::size_t>(nd.branches[0])] = id;
    }
    return std::move(tb.tree);
}

EggersWallTree build_tree(const Curve& c) {
    validate_curve(c);
    std::vector<BranchInvariants> inv;
    for (const PuiseuxSeries& s : c.branches) {
        BranchInvariants bi;
        bi.id = s.id;
        std::vector<Rat> exps = characteristic_exponents(s);
        std::vector<PuiseuxPair> pairs = puiseux_pairs(s);
        for (std::size_t i = 0; i < exps.size(); ++i)
            bi.jumps.push_back(BranchJump{exps[i], pairs[i].k});
        inv.push_back(std::move(bi));
    }
    std::size_t n = c.branches.size();
    std::vector<std::vector<Rat>> con(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat v = contact(c.branches[i], c.branches[j]).finite();
            con[i][j] = v;
            con[j][i] = v;
        }
    return build_tree_from_invariants(inv, con);
}

LevelSlice level_slice(const EggersWallTree& t, const ExtRat& b) {
    if (t.nodes.empty()) throw Error("empty tree");
    if (!b.is_infinite() && b.finite() < 1)
        throw Error("slice height must be at least 1 (got " + b.str() + ")");

    LevelSlice out;
    out.height = b;
    if (b.is_infinite()) {
        for (int id = 0; id < t.size(); ++id) {
            const TreeNode& nd = t.node(id);
            if (nd.height.is_infinite())
                out.points.push_back(SlicePoint{id, nd.weight_in, nd.branches});
        }
        return out;
    }

    const Rat& bf = b.finite();
    for (int id = 1; id < t.size(); ++id) {
        const TreeNode& nd = t.node(id);
        const TreeNode& pa = t.node(nd.parent);
        bool lower_ok = !pa.height.is_infinite() && pa.height.finite() <= bf;
        bool upper_ok = nd.height.is_infinite() || nd.height.finite() > bf;
        if (lower_ok && upper_ok) out.points.push_back(SlicePoint{id, nd.weight_in, nd.branches});
    }
    return out;
}

namespace {

std::string encode(const EggersWallTree& t, int id, bool labeled) {
    const TreeNode& nd = t.node(id);
    if (nd.children.empty()) {
        if (labeled) return "L(" + t.branch_ids[static_cast<std::size_t>(nd.branches[0])] + ")";
        return "L";
    }
    std::vector<std::string> parts;
    for (int c : nd.children)
        parts.push_back("[" + t.node(c).weight_in.str() + "]" + encode(t, c, labeled));
    std::sort(parts.begin(), parts.end());
    std::string s = "(" + nd.height.str() + "|";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i];
    }
    return s + ")";
}

} // namespace

bool tree_isomorphic(const EggersWallTree& a, const EggersWallTree& b, bool labeled) {
    if (a.nodes.empty() || b.nodes.empty()) return a.nodes.empty() == b.nodes.empty();
    return encode(a, 0, labeled) == encode(b, 0, labeled);
}

std::string export_tree(const EggersWallTree& t, TreeFormat f) {
    if (f == TreeFormat::Json) return tree_to_json(t).dump(2);

    std::string s = "graph eggerswall {\n";
    for (int id = 0; id < t.size(); ++id) {
        const TreeNode& nd = t.node(id);
        s += "  n" + std::to_string(id);
        if (nd.height.is_infinite())
            s += " [label=\"" + t.branch_ids[static_cast<std::size_t>(nd.branches[0])] +
                 "\",shape=box]";
        else
            s += " [label=\"" + nd.height.str() + "\"]";
        s += ";\n";
    }
    for (int id = 1; id < t.size(); ++id) {
        const TreeNode& nd = t.node(id);
        s += "  n" + std::to_string(nd.parent) + " -- n" + std::to_string(id) + " [label=\"" +
             nd.weight_in.str() + "\"];\n";
    }
    s += "}\n";
    return s;
}

} // namespace mdh
