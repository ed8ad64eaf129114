#include "theta/presheaf.hpp"

#include <span>

namespace theta {

namespace {

// All words of length k over the alphabet [lo, order), in lexicographic order.
std::vector<Labels> words(int k, int lo, int order) {
    std::vector<Labels> out;
    if (lo >= order && k > 0) return out;
    Labels w(static_cast<std::size_t>(k), lo);
    while (true) {
        out.push_back(w);
        int i = k - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == order - 1) w[static_cast<std::size_t>(i--)] = lo;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return out;
}

struct EmReduction {
    ThetaOperator retraction;
    Labels labels;
    bool live = false;  // some label below this vertex is non-neutral
};

EmReduction reduce_labels(const LevelTree& s, int level, std::span<const GroupElement> x, GroupElement neutral) {
    if (level == 0) return {ThetaOperator(), Labels(x.begin(), x.end()), x.front() != neutral};
    std::vector<int> sigma{0};
    std::vector<std::vector<ThetaOperator>> rows;
    std::vector<LevelTree> kept;
    EmReduction out;
    std::size_t offset = 0;
    for (const auto& c : s.children()) {
        const auto len = static_cast<std::size_t>(count_at_height(c, level - 1));
        auto sub = reduce_labels(c, level - 1, x.subspan(offset, len), neutral);
        offset += len;
        if (!sub.live) {
            sigma.push_back(sigma.back());
            rows.emplace_back();
            continue;
        }
        out.live = true;
        sigma.push_back(sigma.back() + 1);
        kept.push_back(sub.retraction.target());
        out.labels.insert(out.labels.end(), sub.labels.begin(), sub.labels.end());
        rows.push_back({std::move(sub.retraction)});
    }
    LevelTree target(std::move(kept));
    const int m = target.valence();
    out.retraction = ThetaOperator(level, s, std::move(target), SimplicialOperator(m, std::move(sigma)), std::move(rows));
    return out;
}

}  // namespace

EmSet::EmSet(FiniteAbelianGroup pi, int n) : pi_(std::move(pi)), n_(n) {
    if (n_ < 1) throw ArgumentError("K(pi,n) needs n >= 1");
}

std::vector<Labels> EmSet::elements(const LevelTree& t) const {
    return words(count_at_height(t, n_), 0, pi_.order());
}

Labels EmSet::act(const ThetaOperator& f, const Labels& x) const {
    if (f.level() != n_) throw ShapeError("K(pi,n): operator at level " + std::to_string(f.level()));
    return h_pi_act(pi_, gamma_n(f), x);
}

std::string EmSet::describe(const Labels& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x[i]);
    }
    return s + ")";
}

Reduction<Labels> EmSet::reduce(const LevelTree& s, const Labels& x) const {
    if (static_cast<int>(x.size()) != count_at_height(s, n_))
        throw ShapeError("K(pi,n): label count does not match tree " + render(s));
    auto r = reduce_labels(s, n_, x, pi_.neutral());
    LevelTree t = r.retraction.target();
    return {std::move(t), std::move(r.retraction), std::move(r.labels)};
}

std::vector<Cell<Labels>> EmSet::nondegenerate_cells(int dim) const {
    std::vector<Cell<Labels>> out;
    if (dim < 0) return out;
    if (dim == 0) {
        out.push_back({LevelTree(), {}});
        return out;
    }
    for (const auto& t : enumerate_pruned(n_, dim))
        for (auto& w : words(count_at_height(t, n_), 1, pi_.order())) out.push_back({t, std::move(w)});
    return out;
}

EmSet em_set(const FiniteAbelianGroup& pi, int n) { return EmSet(pi, n); }

Representable::Representable(LevelTree t, int level) : t_(std::move(t)), level_(level) {
    if (t_.height() > level_) throw ArgumentError("representable: tree height exceeds level");
}

Reduction<ThetaOperator> Representable::reduce(const LevelTree& s, const ThetaOperator& x) const {
    if (x.source() != s) throw ShapeError("representable: element does not live over " + render(s));
    auto r = reedy_factor(x);
    LevelTree t = r.degeneracy.target();
    return {std::move(t), std::move(r.degeneracy), std::move(r.face)};
}

RepresentableProduct::RepresentableProduct(LevelTree s, LevelTree t, int level)
    : s_(std::move(s)), t_(std::move(t)), level_(level) {
    if (s_.height() > level_ || t_.height() > level_)
        throw ArgumentError("representable product: tree height exceeds level");
}

std::vector<OperatorPair> RepresentableProduct::elements(const LevelTree& u) const {
    const auto left = hom_theta(u, s_, level_);
    const auto right = hom_theta(u, t_, level_);
    std::vector<OperatorPair> out;
    out.reserve(left.size() * right.size());
    for (const auto& a : left)
        for (const auto& b : right) out.emplace_back(a, b);
    return out;
}

OperatorPair RepresentableProduct::act(const ThetaOperator& f, const OperatorPair& x) const {
    return {compose_theta(x.first, f), compose_theta(x.second, f)};
}

std::string RepresentableProduct::describe(const OperatorPair& x) const {
    return "(" + to_string(x.first) + " | " + to_string(x.second) + ")";
}

Reduction<OperatorPair> RepresentableProduct::reduce(const LevelTree& u, const OperatorPair& x) const {
    const ThetaOperator pair[2] = {x.first, x.second};
    auto jf = joint_factor(u, level_, pair);
    LevelTree t = jf.retraction.target();
    return {std::move(t), std::move(jf.retraction), {std::move(jf.maps[0]), std::move(jf.maps[1])}};
}

std::vector<long long> product_census(const LevelTree& s, const LevelTree& t, int level, int max_dim) {
    return cell_census(RepresentableProduct(s, t, level), max_dim);
}

}  // namespace theta
