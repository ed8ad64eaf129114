#include "theta/level_tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "theta/errors.hpp"

namespace theta {

LevelTree::LevelTree(std::vector<LevelTree> children) : children_(std::move(children)) {
    for (const auto& c : children_) {
        height_ = std::max(height_, c.height_ + 1);
        edges_ += 1 + c.edges_;
    }
}

LevelTree LevelTree::corolla(int k) {
    if (k < 0) throw ArgumentError("corolla: negative valence");
    return LevelTree(std::vector<LevelTree>(static_cast<std::size_t>(k)));
}

LevelTree LevelTree::linear(int k) {
    if (k < 0) throw ArgumentError("linear: negative height");
    LevelTree t;
    for (int i = 0; i < k; ++i) t = LevelTree(std::vector<LevelTree>{t});
    return t;
}

std::strong_ordering operator<=>(const LevelTree& a, const LevelTree& b) {
    return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                  b.children_.begin(), b.children_.end());
}

namespace {

void render_into(const LevelTree& t, std::string& out) {
    out.push_back('[');
    bool first = true;
    for (const auto& c : t.children()) {
        if (!first) out.push_back(',');
        first = false;
        render_into(c, out);
    }
    out.push_back(']');
}

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    LevelTree parse() {
        LevelTree t = parse_node();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
        return t;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
        if (text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    LevelTree parse_node() {
        expect('[');
        std::vector<LevelTree> children;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ']') {
            ++pos_;
            return LevelTree(std::move(children));
        }
        while (true) {
            children.push_back(parse_node());
            skip_ws();
            if (pos_ >= text_.size()) throw ParseError("unterminated tree", pos_);
            if (text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (text_[pos_] == ']') {
                ++pos_;
                break;
            }
            throw ParseError("expected ',' or ']'", pos_);
        }
        return LevelTree(std::move(children));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void collect_at_height(const LevelTree& t, int h, VertexPath& path, std::vector<VertexPath>& out) {
    if (h == 0) {
        out.push_back(path);
        return;
    }
    for (int i = 0; i < t.valence(); ++i) {
        path.push_back(i);
        collect_at_height(t.child(i), h - 1, path, out);
        path.pop_back();
    }
}

void collect_leaves(const LevelTree& t, VertexPath& path, std::vector<VertexPath>& out) {
    if (t.is_leaf()) {
        out.push_back(path);
        return;
    }
    for (int i = 0; i < t.valence(); ++i) {
        path.push_back(i);
        collect_leaves(t.child(i), path, out);
        path.pop_back();
    }
}

bool leaves_at_depth(const LevelTree& t, int depth) {
    if (t.is_leaf()) return depth == 0;
    if (depth == 0) return false;
    return std::all_of(t.children().begin(), t.children().end(),
                       [depth](const LevelTree& c) { return leaves_at_depth(c, depth - 1); });
}

void sort_by_encoding(std::vector<LevelTree>& trees) {
    std::vector<std::pair<std::string, LevelTree>> keyed;
    keyed.reserve(trees.size());
    for (auto& t : trees) keyed.emplace_back(render(t), std::move(t));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    trees.clear();
    for (auto& [k, t] : keyed) trees.push_back(std::move(t));
}

// In a forest each tree weighs 1 + edges (its root edge included).
using Forest = std::vector<LevelTree>;

class TreeEnumerator {
public:
    explicit TreeEnumerator(bool pruned) : pruned_(pruned) {}

    // Trees with e edges, height <= n (pruned: all leaves at height exactly n).
    const std::vector<LevelTree>& trees(int n, int e) {
        auto key = std::make_pair(n, e);
        if (auto it = trees_memo_.find(key); it != trees_memo_.end()) return it->second;
        std::vector<LevelTree> out;
        if (n == 0) {
            if (e == 0) out.emplace_back();
        } else if (e == 0) {
            if (!pruned_) out.emplace_back();
        } else {
            for (auto& f : forests(n - 1, e)) out.emplace_back(std::move(f));
        }
        return trees_memo_.emplace(key, std::move(out)).first->second;
    }

private:
    // Non-empty ordered forests of trees(h, .) with total weight e.
    std::vector<Forest> forests(int h, int e) {
        std::vector<Forest> out;
        for (int first = 1; first <= e; ++first) {
            const auto& heads = trees(h, first - 1);
            if (heads.empty()) continue;
            std::vector<Forest> tails;
            if (first == e) {
                tails.emplace_back();
            } else {
                tails = forests(h, e - first);
            }
            for (const auto& head : heads) {
                for (const auto& tail : tails) {
                    Forest f;
                    f.reserve(tail.size() + 1);
                    f.push_back(head);
                    f.insert(f.end(), tail.begin(), tail.end());
                    out.push_back(std::move(f));
                }
            }
        }
        return out;
    }

    bool pruned_;
    std::map<std::pair<int, int>, std::vector<LevelTree>> trees_memo_;
};

}  // namespace

std::string render(const LevelTree& t) {
    std::string out;
    out.reserve(static_cast<std::size_t>(3 * t.edges() + 2));
    render_into(t, out);
    return out;
}

LevelTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

const LevelTree& subtree_at(const LevelTree& t, const VertexPath& path) {
    const LevelTree* cur = &t;
    for (int i : path) {
        if (i < 0 || i >= cur->valence()) throw ArgumentError("subtree_at: path leaves the tree");
        cur = &cur->child(i);
    }
    return *cur;
}

std::vector<VertexPath> vertices_at_height(const LevelTree& t, int h) {
    std::vector<VertexPath> out;
    if (h < 0) return out;
    VertexPath path;
    collect_at_height(t, h, path, out);
    return out;
}

int count_at_height(const LevelTree& t, int h) {
    if (h < 0) return 0;
    if (h == 0) return 1;
    int total = 0;
    for (const auto& c : t.children()) total += count_at_height(c, h - 1);
    return total;
}

std::vector<VertexPath> leaves(const LevelTree& t) {
    std::vector<VertexPath> out;
    VertexPath path;
    collect_leaves(t, path, out);
    return out;
}

bool is_pruned(const LevelTree& t, int n) { return n >= 1 && leaves_at_depth(t, n); }

std::vector<LevelTree> enumerate_trees(int n, int e) {
    if (n < 0 || e < 0) throw ArgumentError("enumerate_trees: negative argument");
    TreeEnumerator en(false);
    auto out = en.trees(n, e);
    sort_by_encoding(out);
    return out;
}

std::vector<LevelTree> enumerate_pruned(int n, int e) {
    if (n < 1) throw ArgumentError("enumerate_pruned: n must be >= 1");
    if (e < 0) throw ArgumentError("enumerate_pruned: negative edge count");
    TreeEnumerator en(true);
    auto out = en.trees(n, e);
    sort_by_encoding(out);
    return out;
}

LevelTree suspend_tree(const LevelTree& t) { return LevelTree(std::vector<LevelTree>{t}); }

LevelTree homogeneous_tree(const std::vector<int>& ks) {
    LevelTree t;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
        if (*it < 0) throw ArgumentError("homogeneous_tree: negative valence");
        t = LevelTree(std::vector<LevelTree>(static_cast<std::size_t>(*it), t));
    }
    return t;
}

LevelTree graft(const LevelTree& t, const VertexPath& leaf, const LevelTree& scion) {
    if (leaf.empty()) {
        if (!t.is_leaf()) throw ArgumentError("graft: target vertex is not a leaf");
        return scion;
    }
    std::vector<LevelTree> children = t.children();
    int i = leaf.front();
    if (i < 0 || i >= t.valence()) throw ArgumentError("graft: path leaves the tree");
    children[static_cast<std::size_t>(i)] =
        graft(t.child(i), VertexPath(leaf.begin() + 1, leaf.end()), scion);
    return LevelTree(std::move(children));
}

LevelTree prune(const LevelTree& t, int n) {
    if (n <= 0) return t;
    std::vector<LevelTree> kept;
    for (const auto& c : t.children()) {
        if (n == 1) {
            kept.push_back(c);
            continue;
        }
        LevelTree p = prune(c, n - 1);
        if (!p.is_leaf()) kept.push_back(std::move(p));
    }
    return LevelTree(std::move(kept));
}

std::vector<Shuffle> shuffle_trees(const LevelTree& s, const LevelTree& t) {
    if (s.height() > 1 || t.height() > 1)
        throw UnsupportedError("shuffle_trees: only trees of height <= 1 are supported");
    const int p = s.valence();
    const int q = t.valence();
    std::vector<Shuffle> out;
    // Walk all bit patterns with exactly p left-branches in increasing numeric order.
    std::vector<bool> mask(static_cast<std::size_t>(p + q), false);
    std::fill(mask.begin(), mask.begin() + p, true);
    do {
        Shuffle sh;
        sh.from_left = mask;
        std::vector<LevelTree> branches;
        int li = 0, ri = 0;
        sh.left_projection.push_back(0);
        sh.right_projection.push_back(0);
        for (bool left : mask) {
            branches.push_back(left ? s.child(li++) : t.child(ri++));
            sh.left_projection.push_back(li);
            sh.right_projection.push_back(ri);
        }
        sh.tree = LevelTree(std::move(branches));
        out.push_back(std::move(sh));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

}  // namespace theta
