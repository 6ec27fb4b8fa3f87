#pragma once

#include <string>
#include <vector>

#include "mdh/puiseux.hpp"

namespace mdh {

struct TreeNode {
    ExtRat height;             // 0 at the root, inf at leaves
    int parent = -1;           // -1 at the root
    Int weight_in = 1;         // weight of the edge from the parent; meaningless at the root
    std::vector<int> children; // canonical order
    std::vector<int> branches; // input indices of the branches through this node, increasing
};

// Rooted metric tree of a curve: one leaf per branch at height inf, interior
// vertices at every characteristic exponent and every pairwise contact, the
// root at height 0. Node 0 is the root and ids follow depth-first preorder
// in the canonical child order, so sorting by id reproduces the traversal.
//
// Edge weights: the edge just below height h on the path of branch i weighs
// the product of the k of the Puiseux pairs of i with exponent <= the edge's
// lower endpoint. Shared path segments carry consistent weights; the first
// edge weighs 1 and the edge into the leaf of branch i weighs its
// multiplicity.
struct EggersWallTree {
    std::vector<TreeNode> nodes;
    std::vector<std::string> branch_ids; // in input order
    std::vector<int> leaf_of;            // branch index -> leaf node id

    const TreeNode& node(int id) const { return nodes.at(static_cast<std::size_t>(id)); }
    int size() const { return static_cast<int>(nodes.size()); }

    // heights of interior vertices (no root, no leaves), sorted, deduped
    std::vector<Rat> interior_heights() const;
};

// A characteristic exponent together with the denominator factor k >= 2 it
// introduces.
struct BranchJump {
    Rat exp;
    Int k;

    friend bool operator==(const BranchJump& a, const BranchJump& b) {
        return a.exp == b.exp && a.k == b.k;
    }
};

struct BranchInvariants {
    std::string id;
    std::vector<BranchJump> jumps;
};

// Assembles the tree from per-branch invariants and the pairwise contact
// matrix (diagonal ignored). Validates realizability: symmetric contacts
// >= 1 satisfying the non-archimedean inequality, strictly increasing
// exponents whose k equals the denominator they introduce, and branches
// that agree above their contact agreeing on characteristic data below it.
EggersWallTree build_tree_from_invariants(const std::vector<BranchInvariants>& branches,
                                          const std::vector<std::vector<Rat>>& contacts);

EggersWallTree build_tree(const Curve& c);

struct SlicePoint {
    int node_id;               // the node just above the cut; the leaf itself at b = inf
    Int weight;
    std::vector<int> branches; // input indices, increasing
};

struct LevelSlice {
    ExtRat height;
    std::vector<SlicePoint> points; // canonical order
};

// The points of the tree just above height b, with their weights and branch
// sets; the cut is taken on (b, b+eps] symbolically, so the value at a
// vertex height belongs to the slice above it. At b = inf: the leaves.
// Requires b >= 1.
LevelSlice level_slice(const EggersWallTree& t, const ExtRat& b);

// Height- and weight-preserving tree isomorphism; labeled additionally
// requires matching leaf labels.
bool tree_isomorphic(const EggersWallTree& a, const EggersWallTree& b, bool labeled);

enum class TreeFormat { Dot, Json };

// Deterministic text form. Json round-trips through tree_from_json.
std::string export_tree(const EggersWallTree& t, TreeFormat f);

} // namespace mdh
