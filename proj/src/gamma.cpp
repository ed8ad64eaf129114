#include "theta/gamma.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "theta/errors.hpp"

namespace theta {

GammaOperator::GammaOperator(int target, std::vector<std::vector<int>> subsets)
    : target_(target), subsets_(std::move(subsets)) {
    if (target_ < 0) throw ArgumentError("gamma operator target must be >= 0");
    std::vector<bool> used(static_cast<std::size_t>(target_ + 1), false);
    for (auto& s : subsets_) {
        std::sort(s.begin(), s.end());
        for (int j : s) {
            if (j < 1 || j > target_) throw ArgumentError("gamma operator subset element out of range");
            if (used[static_cast<std::size_t>(j)])
                throw ArgumentError("gamma operator subsets are not pairwise disjoint");
            used[static_cast<std::size_t>(j)] = true;
        }
    }
}

GammaOperator GammaOperator::identity(int m) {
    std::vector<std::vector<int>> s;
    for (int i = 1; i <= m; ++i) s.push_back({i});
    return GammaOperator(m, std::move(s));
}

GammaOperator GammaOperator::from_null(int n) { return GammaOperator(n, {}); }

GammaOperator GammaOperator::to_null(int m) {
    return GammaOperator(0, std::vector<std::vector<int>>(static_cast<std::size_t>(m)));
}

std::string to_string(const GammaOperator& u) {
    std::string s = "(";
    for (std::size_t i = 0; i < u.subsets().size(); ++i) {
        if (i) s += ',';
        s += '{';
        for (std::size_t j = 0; j < u.subsets()[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(u.subsets()[i][j]);
        }
        s += '}';
    }
    s += "):" + std::to_string(u.source()) + "->" + std::to_string(u.target());
    return s;
}

GammaOperator compose_gamma(const GammaOperator& g, const GammaOperator& f) {
    if (f.target() != g.source())
        throw CompositionError("compose_gamma: " + to_string(g) + " after " + to_string(f));
    std::vector<std::vector<int>> out;
    out.reserve(f.subsets().size());
    for (const auto& m : f.subsets()) {
        std::vector<int> u;
        for (int j : m) u.insert(u.end(), g.subset(j).begin(), g.subset(j).end());
        out.push_back(std::move(u));
    }
    return GammaOperator(g.target(), std::move(out));
}

std::vector<GammaOperator> hom_gamma(int m, int n) {
    if (m < 0 || n < 0) throw ArgumentError("hom_gamma: negative cardinality");
    std::vector<GammaOperator> out;
    // owner[j] in 0..m: 0 means unclaimed, otherwise the claiming source element.
    std::vector<int> owner(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<std::vector<int>> s(static_cast<std::size_t>(m));
        for (int j = 0; j < n; ++j)
            if (owner[static_cast<std::size_t>(j)])
                s[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)] - 1)].push_back(j + 1);
        out.emplace_back(n, std::move(s));
        int j = n - 1;
        while (j >= 0 && owner[static_cast<std::size_t>(j)] == m) owner[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) break;
        ++owner[static_cast<std::size_t>(j)];
    }
    return out;
}

GammaOperator segal_gamma(const SimplicialOperator& f) {
    std::vector<std::vector<int>> s;
    for (int i = 1; i <= f.source(); ++i) {
        std::vector<int> b;
        for (int j = f(i - 1) + 1; j <= f(i); ++j) b.push_back(j);
        s.push_back(std::move(b));
    }
    return GammaOperator(f.target(), std::move(s));
}

void check_shape(const GammaWreathOperator& w) {
    if (static_cast<int>(w.source_blocks.size()) != w.outer.source() ||
        static_cast<int>(w.target_blocks.size()) != w.outer.target())
        throw ShapeError("wreath operator: block counts do not match outer operator");
    if (w.components.size() != w.source_blocks.size())
        throw ShapeError("wreath operator: one component row per source block required");
    for (int i = 1; i <= w.outer.source(); ++i) {
        const auto& row = w.components[static_cast<std::size_t>(i - 1)];
        const auto& sub = w.outer.subset(i);
        if (row.size() != sub.size()) throw ShapeError("wreath operator: component row length mismatch");
        for (std::size_t idx = 0; idx < sub.size(); ++idx) {
            if (row[idx].source() != w.source_blocks[static_cast<std::size_t>(i - 1)] ||
                row[idx].target() != w.target_blocks[static_cast<std::size_t>(sub[idx] - 1)])
                throw ShapeError("wreath operator: component endpoints disagree with blocks");
        }
    }
}

GammaWreathOperator compose_wreath(const GammaWreathOperator& g, const GammaWreathOperator& f) {
    if (f.target_blocks != g.source_blocks) throw CompositionError("compose_wreath: endpoint mismatch");
    GammaWreathOperator out;
    out.outer = compose_gamma(g.outer, f.outer);
    out.source_blocks = f.source_blocks;
    out.target_blocks = g.target_blocks;
    for (int i = 1; i <= out.outer.source(); ++i) {
        std::vector<GammaOperator> row;
        for (int l : out.outer.subset(i)) {
            // l lies in g's j-th subset for exactly one j in f's i-th subset.
            const auto& fi = f.outer.subset(i);
            for (std::size_t fj = 0; fj < fi.size(); ++fj) {
                const int j = fi[fj];
                const auto& gj = g.outer.subset(j);
                auto it = std::find(gj.begin(), gj.end(), l);
                if (it == gj.end()) continue;
                const auto& gc = g.components[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(it - gj.begin())];
                const auto& fc = f.components[static_cast<std::size_t>(i - 1)][fj];
                row.push_back(compose_gamma(gc, fc));
                break;
            }
        }
        out.components.push_back(std::move(row));
    }
    return out;
}

GammaOperator assemble(const GammaWreathOperator& w) {
    check_shape(w);
    std::vector<int> offset(w.target_blocks.size() + 1, 0);
    for (std::size_t j = 0; j < w.target_blocks.size(); ++j) offset[j + 1] = offset[j] + w.target_blocks[j];

    std::vector<std::vector<int>> out;
    for (int i = 1; i <= w.outer.source(); ++i) {
        const auto& sub = w.outer.subset(i);
        const auto& row = w.components[static_cast<std::size_t>(i - 1)];
        for (int v = 1; v <= w.source_blocks[static_cast<std::size_t>(i - 1)]; ++v) {
            std::vector<int> image;
            for (std::size_t idx = 0; idx < sub.size(); ++idx) {
                const int shift = offset[static_cast<std::size_t>(sub[idx] - 1)];
                for (int x : row[idx].subset(v)) image.push_back(x + shift);
            }
            out.push_back(std::move(image));
        }
    }
    try {
        return GammaOperator(offset.back(), std::move(out));
    } catch (const ArgumentError& e) {
        throw InvariantViolation(std::string("assemble produced an invalid operator: ") + e.what());
    }
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    for (int m : orders_) {
        if (m < 1) throw ArgumentError("cyclic orders must be >= 1");
        if (order_ > std::numeric_limits<int>::max() / m) throw ArgumentError("group order overflows");
        order_ *= m;
    }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (true) {
        if (pos >= spec.size() || spec[pos] != 'z') throw ParseError("expected 'z' in group spec", pos);
        ++pos;
        const std::size_t start = pos;
        long value = 0;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
            value = value * 10 + (spec[pos] - '0');
            if (value > 1'000'000) throw ParseError("cyclic order too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected cyclic order after 'z'", pos);
        if (value < 1) throw ParseError("cyclic order must be >= 1", start);
        orders.push_back(static_cast<int>(value));
        if (pos == spec.size()) break;
        if (spec[pos] != 'x') throw ParseError("expected 'x' separator", pos);
        ++pos;
    }
    return FiniteAbelianGroup(std::move(orders));
}

GroupElement FiniteAbelianGroup::add(GroupElement a, GroupElement b) const {
    GroupElement out = 0;
    GroupElement radix = 1;
    for (int m : orders_) {
        const int da = a % m;
        const int db = b % m;
        out += ((da + db) % m) * radix;
        a /= m;
        b /= m;
        radix *= m;
    }
    return out;
}

std::vector<int> FiniteAbelianGroup::decode(GroupElement a) const {
    std::vector<int> c;
    for (int m : orders_) {
        c.push_back(a % m);
        a /= m;
    }
    return c;
}

GroupElement FiniteAbelianGroup::encode(const std::vector<int>& coords) const {
    if (coords.size() != orders_.size()) throw ShapeError("group element has the wrong number of coordinates");
    GroupElement out = 0;
    GroupElement radix = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= orders_[i]) throw ArgumentError("group coordinate out of range");
        out += coords[i] * radix;
        radix *= orders_[i];
    }
    return out;
}

int FiniteAbelianGroup::two_rank() const {
    return static_cast<int>(std::count_if(orders_.begin(), orders_.end(), [](int m) { return m % 2 == 0; }));
}

std::string FiniteAbelianGroup::name() const {
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += 'x';
        s += 'z' + std::to_string(orders_[i]);
    }
    return s;
}

std::vector<GroupElement> h_pi_act(const FiniteAbelianGroup& pi, const GammaOperator& u,
                                   std::span<const GroupElement> x) {
    if (static_cast<int>(x.size()) != u.target())
        throw ShapeError("h_pi_act: tuple length " + std::to_string(x.size()) + " does not match target " +
                         std::to_string(u.target()));
    std::vector<GroupElement> out;
    out.reserve(u.subsets().size());
    for (const auto& s : u.subsets()) {
        GroupElement acc = pi.neutral();
        for (int j : s) acc = pi.add(acc, x[static_cast<std::size_t>(j - 1)]);
        out.push_back(acc);
    }
    return out;
}

}  // namespace theta
