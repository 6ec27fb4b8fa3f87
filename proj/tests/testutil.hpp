#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdh/eggers.hpp"
#include "mdh/intmatrix.hpp"
#include "mdh/puiseux.hpp"

// Shared helpers for the test binaries. Deterministic seeds only: every
// randomized check must reproduce bit-for-bit across runs.
namespace testutil {

inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
}

inline mdh::IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, long lo = -9,
                                    long hi = 9) {
    mdh::IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rand_range(rng, lo, hi);
    return m;
}

// Random product of elementary row/column operations applied to the
// identity; always unimodular.
inline mdh::IntMatrix random_unimodular(std::mt19937_64& rng, int n, int ops = 12) {
    mdh::IntMatrix m = mdh::IntMatrix::identity(n);
    for (int s = 0; s < ops && n > 1; ++s) {
        int i = static_cast<int>(rand_range(rng, 0, n - 1));
        int j = static_cast<int>(rand_range(rng, 0, n - 1));
        if (i == j) continue;
        long q = rand_range(rng, -3, 3);
        for (int c = 0; c < n; ++c) m.at(i, c) += q * m.at(j, c);
    }
    return m;
}

inline mdh::Curve make_curve(std::initializer_list<std::pair<const char*, const char*>> specs) {
    mdh::Curve c;
    for (const auto& [id, text] : specs) c.branches.push_back(mdh::parse_series(text, id));
    return c;
}

// Four branches, one tangent line, interior vertices at 3/2, 5/2, 11/4, 37/12.
inline mdh::Curve eggers_example() {
    return make_curve({{"C1", "x^(3/2) + x^(5/2)"},
                       {"C2", "x^(3/2) + x^(11/4)"},
                       {"C3", "x^(3/2) + x^(11/4) + x^(37/12)"},
                       {"C4", "x^(5/2) + x^(11/4)"}});
}

// Five branches over two tangent lines; the singular branch sits on the
// 2-branch tangent line.
inline mdh::Curve reducible_C() {
    return make_curve({{"C1", "x + x^2 + x^(5/2)"},
                       {"C2", "x + 2x^2"},
                       {"C3", "2x + x^2"},
                       {"C4", "2x + 2x^2"},
                       {"C5", "2x + 3x^2"}});
}

// Same tangent structure as reducible_C, but the singular branch sits on
// the 3-branch tangent line.
inline mdh::Curve reducible_D() {
    return make_curve({{"D1", "x + x^2"},
                       {"D2", "x + 2x^2"},
                       {"D3", "2x + x^2"},
                       {"D4", "2x + 2x^2"},
                       {"D5", "2x + 3x^2 + x^(5/2)"}});
}

// Checks every documented structural invariant of an Eggers-Wall tree
// against the curve it came from; throws with a description on violation,
// so tests can CHECK_NOTHROW it.
inline void check_tree_invariants(const mdh::EggersWallTree& t, const mdh::Curve& c) {
    using namespace mdh;
    auto fail = [](const std::string& m) { throw std::runtime_error("tree invariant: " + m); };

    if (t.nodes.empty()) fail("empty tree");
    if (t.node(0).parent != -1 || t.node(0).height != ExtRat(Rat(0))) fail("root missing");
    if (t.branch_ids.size() != c.branches.size()) fail("branch id count");

    int leaves = 0;
    for (int id = 0; id < t.size(); ++id) {
        const TreeNode& nd = t.node(id);
        if (id && !(t.node(nd.parent).height < nd.height)) fail("heights must increase");
        for (int ch : nd.children)
            if (t.node(ch).parent != id) fail("parent/child links broken");
        if (nd.height.is_infinite()) {
            ++leaves;
            if (!nd.children.empty()) fail("leaf with children");
            if (nd.branches.size() != 1) fail("leaf must carry one branch");
        } else if (id != 0) {
            if (nd.children.empty()) fail("childless interior node");
            if (nd.children.size() < 2 &&
                t.node(nd.children[0]).weight_in == nd.weight_in)
                fail("vertex with one child and no weight increase");
        }
    }
    if (leaves != static_cast<int>(c.branches.size())) fail("leaf count != branch count");

    // root-to-leaf paths
    std::vector<std::vector<int>> paths;
    for (std::size_t i = 0; i < c.branches.size(); ++i) {
        std::vector<int> p;
        for (int v = t.leaf_of[i]; v != -1; v = t.node(v).parent) p.push_back(v);
        std::reverse(p.begin(), p.end());
        if (p.front() != 0) fail("path must reach the root");
        mdh::Int prev = 1;
        for (std::size_t s = 1; s < p.size(); ++s) {
            const mdh::Int& w = t.node(p[s]).weight_in;
            if (s == 1 && w != 1) fail("first edge must weigh 1");
            if (w < prev || w % prev != 0) fail("weights must grow by division along paths");
            const auto& bs = t.node(p[s]).branches;
            if (!std::binary_search(bs.begin(), bs.end(), static_cast<int>(i)))
                fail("branch sets must follow the branch paths");
            prev = w;
        }
        if (prev != multiplicity(c.branches[i])) fail("leaf edge weight must be the multiplicity");
        paths.push_back(std::move(p));
    }

    // lowest common ancestor height = contact
    for (std::size_t i = 0; i < c.branches.size(); ++i)
        for (std::size_t j = i + 1; j < c.branches.size(); ++j) {
            std::size_t s = 0;
            while (s + 1 < paths[i].size() && s + 1 < paths[j].size() &&
                   paths[i][s + 1] == paths[j][s + 1])
                ++s;
            if (t.node(paths[i][s]).height != contact(c.branches[i], c.branches[j]))
                fail("lowest common ancestor height must equal the contact");
        }

    // slice weights = product of k over pairs with exponent <= b; partitions
    // refine downwards
    std::vector<mdh::ExtRat> bs;
    bs.push_back(mdh::ExtRat(1));
    for (const Rat& h : t.interior_heights()) {
        bs.push_back(mdh::ExtRat(h));
        bs.push_back(mdh::ExtRat(h + 1));
    }
    bs.push_back(mdh::ExtRat::infinity());
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    for (const auto& b : bs) {
        LevelSlice sl = level_slice(t, b);
        std::vector<int> seen;
        for (const SlicePoint& pt : sl.points)
            for (int i : pt.branches) {
                seen.push_back(i);
                mdh::Int expect = 1;
                const PuiseuxSeries& ser = c.branches[static_cast<std::size_t>(i)];
                std::vector<Rat> ce = characteristic_exponents(ser);
                auto pairs = puiseux_pairs(ser);
                for (std::size_t q = 0; q < ce.size(); ++q)
                    if (!(b < mdh::ExtRat(ce[q]))) expect *= pairs[q].k;
                if (pt.weight != expect) fail("slice weight must be the k-product up to b");
            }
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < c.branches.size(); ++i)
            if (seen.size() != c.branches.size() || seen[i] != static_cast<int>(i))
                fail("slice points must partition the branch set");
    }
    for (std::size_t a = 0; a + 1 < bs.size(); ++a) {
        // partition at bs[a+1] refines the one at bs[a] when bs[a+1] >= bs[a]
        LevelSlice lo = level_slice(t, bs[a]);
        LevelSlice hi = level_slice(t, bs[a + 1]);
        for (const SlicePoint& up : hi.points) {
            int container = -1;
            for (std::size_t p = 0; p < lo.points.size(); ++p) {
                const auto& lb = lo.points[p].branches;
                bool all = true;
                for (int i : up.branches)
                    if (!std::binary_search(lb.begin(), lb.end(), i)) all = false;
                if (all) container = static_cast<int>(p);
            }
            if (container < 0) fail("higher slices must refine lower slices");
        }
    }
}

} // namespace testutil
