#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta/errors.hpp"
#include "theta/gamma.hpp"
#include "theta/level_tree.hpp"
#include "theta/theta_operator.hpp"

namespace theta {

/**
 * A Θ_n-set evaluated lazily: elements(T) lists X(T), act(f, x) pulls an
 * element over f.target() back to f.source().
 *
 * Models may additionally provide fast paths
 *   Reduction<Element> reduce(const LevelTree&, const Element&) const
 *   std::vector<Cell<Element>> nondegenerate_cells(int dim) const
 * which the generic algorithms below pick up automatically.
 */
template <class X>
concept ThetaSet = requires(const X& x, const LevelTree& t, const ThetaOperator& f,
                            const typename X::Element& e) {
    { x.level() } -> std::convertible_to<int>;
    { x.elements(t) } -> std::same_as<std::vector<typename X::Element>>;
    { x.act(f, e) } -> std::same_as<typename X::Element>;
    { x.describe(e) } -> std::convertible_to<std::string>;
};

template <class E>
struct Cell {
    LevelTree tree;
    E element;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

template <class E>
struct Reduction {
    LevelTree tree;            // shape of the non-degenerate core
    ThetaOperator degeneracy;  // retraction from the original shape onto tree
    E element;                 // non-degenerate, act(degeneracy, element) == original
};

// ---------------------------------------------------------------------------
// K(π,n)

/// Labels of the height-n vertices, in planar order.
using Labels = std::vector<GroupElement>;

class EmSet {
public:
    using Element = Labels;

    /// Throws ArgumentError for n < 1.
    EmSet(FiniteAbelianGroup pi, int n);

    int level() const noexcept { return n_; }
    const FiniteAbelianGroup& group() const noexcept { return pi_; }

    std::vector<Labels> elements(const LevelTree& t) const;
    Labels act(const ThetaOperator& f, const Labels& x) const;
    std::string describe(const Labels& x) const;

    /// Collapses every branch whose labels are all neutral.
    Reduction<Labels> reduce(const LevelTree& s, const Labels& x) const;
    /// Pruned trees (or the basepoint) with non-neutral labels.
    std::vector<Cell<Labels>> nondegenerate_cells(int dim) const;

private:
    FiniteAbelianGroup pi_;
    int n_;
};

EmSet em_set(const FiniteAbelianGroup& pi, int n);

// ---------------------------------------------------------------------------
// Representables and binary products

class Representable {
public:
    using Element = ThetaOperator;

    Representable(LevelTree t, int level);

    int level() const noexcept { return level_; }
    const LevelTree& tree() const noexcept { return t_; }

    std::vector<ThetaOperator> elements(const LevelTree& u) const { return hom_theta(u, t_, level_); }
    ThetaOperator act(const ThetaOperator& f, const ThetaOperator& x) const { return compose_theta(x, f); }
    std::string describe(const ThetaOperator& x) const { return to_string(x); }

    Reduction<ThetaOperator> reduce(const LevelTree& s, const ThetaOperator& x) const;

private:
    LevelTree t_;
    int level_;
};

using OperatorPair = std::pair<ThetaOperator, ThetaOperator>;

class RepresentableProduct {
public:
    using Element = OperatorPair;

    RepresentableProduct(LevelTree s, LevelTree t, int level);

    int level() const noexcept { return level_; }

    std::vector<OperatorPair> elements(const LevelTree& u) const;
    OperatorPair act(const ThetaOperator& f, const OperatorPair& x) const;
    std::string describe(const OperatorPair& x) const;

    /// Joint factorisation of both projections.
    Reduction<OperatorPair> reduce(const LevelTree& u, const OperatorPair& x) const;

private:
    LevelTree s_;
    LevelTree t_;
    int level_;
};

// ---------------------------------------------------------------------------
// Generic algorithms

/// No codimension-one retraction r admits a preimage of x under act(r).
template <ThetaSet X>
bool is_nondegenerate_generic(const X& set, const LevelTree& s, const typename X::Element& x) {
    for (const auto& r : retractions_from(s, set.level())) {
        if (r.target().edges() != s.edges() - 1) continue;
        // r is split epi, so a preimage exists iff the pullback along a section is one.
        if (set.act(r, set.act(section_of(r), x)) == x) return false;
    }
    return true;
}

/// The smallest retraction x factors through. Works for any model.
template <ThetaSet X>
Reduction<typename X::Element> reduce_generic(const X& set, const LevelTree& s, const typename X::Element& x) {
    auto rs = retractions_from(s, set.level());
    std::stable_sort(rs.begin(), rs.end(),
                     [](const ThetaOperator& a, const ThetaOperator& b) { return a.target().edges() < b.target().edges(); });
    for (const auto& r : rs) {
        auto y = set.act(section_of(r), x);
        if (set.act(r, y) == x) return {r.target(), r, std::move(y)};
    }
    throw InvariantViolation("reduce_generic: identity retraction failed on " + render(s));
}

template <ThetaSet X>
Reduction<typename X::Element> reduce_element(const X& set, const LevelTree& s, const typename X::Element& x) {
    if constexpr (requires { set.reduce(s, x); }) {
        return set.reduce(s, x);
    } else {
        return reduce_generic(set, s, x);
    }
}

template <ThetaSet X>
bool is_nondegenerate(const X& set, const LevelTree& s, const typename X::Element& x) {
    if constexpr (requires { set.reduce(s, x); }) {
        return is_identity(set.reduce(s, x).degeneracy);
    } else {
        return is_nondegenerate_generic(set, s, x);
    }
}

/// Non-degenerate cells of dimension dim, ordered by tree encoding then element.
template <ThetaSet X>
std::vector<Cell<typename X::Element>> nondegenerate_cells(const X& set, int dim) {
    if constexpr (requires { set.nondegenerate_cells(dim); }) {
        return set.nondegenerate_cells(dim);
    } else {
        std::vector<Cell<typename X::Element>> out;
        for (const auto& t : enumerate_trees(set.level(), dim))
            for (auto& x : set.elements(t))
                if (is_nondegenerate(set, t, x)) out.push_back({t, std::move(x)});
        return out;
    }
}

/// Counts of non-degenerate cells in dimensions 0..max_dim.
template <ThetaSet X>
std::vector<long long> cell_census(const X& set, int max_dim) {
    if (max_dim < 0) throw ArgumentError("cell_census: negative dimension bound");
    std::vector<long long> out;
    for (int d = 0; d <= max_dim; ++d) out.push_back(static_cast<long long>(nondegenerate_cells(set, d).size()));
    return out;
}

std::vector<long long> product_census(const LevelTree& s, const LevelTree& t, int level, int max_dim);

}  // namespace theta
