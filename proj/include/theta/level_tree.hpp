#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace theta {

/// Address of a vertex: the sequence of (0-based) child indices from the root.
using VertexPath = std::vector<int>;

/**
 * Finite planar rooted tree; the trees of height <= n are the objects of Θ_n.
 *
 * Vertices are graded by edge distance from the root. Two trees are equal iff
 * their ordered child lists are equal; no automorphisms are quotiented. Height
 * and edge count are cached at construction since trees are immutable.
 */
class LevelTree {
public:
    LevelTree() = default;
    explicit LevelTree(std::vector<LevelTree> children);

    /// Root with k leaf children.
    static LevelTree corolla(int k);
    /// Linear tree with k edges in a single chain.
    static LevelTree linear(int k);

    const std::vector<LevelTree>& children() const noexcept { return children_; }
    const LevelTree& child(int i) const { return children_.at(static_cast<std::size_t>(i)); }
    int valence() const noexcept { return static_cast<int>(children_.size()); }
    int height() const noexcept { return height_; }
    int edges() const noexcept { return edges_; }
    bool is_leaf() const noexcept { return children_.empty(); }

    friend bool operator==(const LevelTree&, const LevelTree&) = default;
    friend std::strong_ordering operator<=>(const LevelTree& a, const LevelTree& b);

private:
    std::vector<LevelTree> children_;
    int height_ = 0;
    int edges_ = 0;
};

/// Canonical nested-bracket encoding, e.g. "[[],[[]]]".
std::string render(const LevelTree& t);

/// Inverse of render. Whitespace is ignored; throws ParseError on malformed input.
LevelTree parse_tree(std::string_view text);

/// The subtree rooted at the vertex addressed by path.
const LevelTree& subtree_at(const LevelTree& t, const VertexPath& path);

/// Vertices at exact height h in left-to-right planar order.
std::vector<VertexPath> vertices_at_height(const LevelTree& t, int h);
int count_at_height(const LevelTree& t, int h);

/// Leaves (input vertices), in planar order.
std::vector<VertexPath> leaves(const LevelTree& t);

/// Every leaf sits at height exactly n (and n >= 1).
bool is_pruned(const LevelTree& t, int n);

/// All level-trees with exactly e edges and height <= n, sorted by encoding.
std::vector<LevelTree> enumerate_trees(int n, int e);

/// All pruned n-trees with exactly e edges, sorted by encoding.
std::vector<LevelTree> enumerate_pruned(int n, int e);

/// Adds an extra root edge below t.
LevelTree suspend_tree(const LevelTree& t);

/// Homogeneous tree with ks[0] root branches, each carrying ks[1] branches, etc.
LevelTree homogeneous_tree(const std::vector<int>& ks);

/// Replaces the leaf at `leaf` with `scion`.
LevelTree graft(const LevelTree& t, const VertexPath& leaf, const LevelTree& scion);

/// Repeatedly removes leaves of height < n (the root is never removed).
LevelTree prune(const LevelTree& t, int n);

/**
 * One interleaving of the root branches of two trees of height <= 1.
 *
 * from_left[j] tells whether branch j of the result came from the left factor.
 * The projections are the simplicial operators [|S|+|T|] -> [|S|] and
 * [|S|+|T|] -> [|T|] counting how many left (resp. right) branches precede
 * each gap.
 */
struct Shuffle {
    LevelTree tree;
    std::vector<bool> from_left;
    std::vector<int> left_projection;
    std::vector<int> right_projection;

    friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

/// All shuffles of S and T over the root. Throws UnsupportedError if either has height > 1.
std::vector<Shuffle> shuffle_trees(const LevelTree& s, const LevelTree& t);

}  // namespace theta
