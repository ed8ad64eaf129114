#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "theta/simplex.hpp"

namespace theta {

/**
 * Operator m̄ -> n̄ of Segal's category: an ordered m-tuple of pairwise
 * disjoint subsets of {1..n}. Subsets are kept sorted ascending.
 */
class GammaOperator {
public:
    GammaOperator() = default;
    /// Sorts each subset; throws ArgumentError on out-of-range or overlapping entries.
    GammaOperator(int target, std::vector<std::vector<int>> subsets);

    static GammaOperator identity(int m);
    /// The unique operator 0̄ -> n̄.
    static GammaOperator from_null(int n);
    /// The unique operator m̄ -> 0̄.
    static GammaOperator to_null(int m);

    int source() const noexcept { return static_cast<int>(subsets_.size()); }
    int target() const noexcept { return target_; }
    const std::vector<std::vector<int>>& subsets() const noexcept { return subsets_; }
    /// 1-based, as in the category's notation.
    const std::vector<int>& subset(int i) const { return subsets_.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const GammaOperator&, const GammaOperator&) = default;
    friend auto operator<=>(const GammaOperator&, const GammaOperator&) = default;

private:
    int target_ = 0;
    std::vector<std::vector<int>> subsets_;
};

std::string to_string(const GammaOperator& u);

/// g ∘ f: the i-th subset is the union of g's subsets indexed by f's i-th subset.
GammaOperator compose_gamma(const GammaOperator& g, const GammaOperator& f);

/// All operators m̄ -> n̄ (each target element is claimed by at most one source element).
std::vector<GammaOperator> hom_gamma(int m, int n);

/// Segal's functor Δ -> Γ: the i-th subset is the block {j | f(i-1) < j <= f(i)}.
GammaOperator segal_gamma(const SimplicialOperator& f);

/**
 * An operator of the wreath product Γ≀Γ from (source_blocks[0], ...) to
 * (target_blocks[0], ...). components[i][idx] maps block i to the idx-th
 * element of outer's (i+1)-th subset.
 */
struct GammaWreathOperator {
    GammaOperator outer;
    std::vector<int> source_blocks;
    std::vector<int> target_blocks;
    std::vector<std::vector<GammaOperator>> components;
};

/// Throws ShapeError when blocks and components disagree.
void check_shape(const GammaWreathOperator& w);

GammaWreathOperator compose_wreath(const GammaWreathOperator& g, const GammaWreathOperator& f);

/// The assembly functor Γ≀Γ -> Γ, concatenating blocks with offsets.
GammaOperator assemble(const GammaWreathOperator& w);

using GroupElement = int;

/**
 * Finite abelian group Z/m_1 × ... × Z/m_r. Elements are encoded as a single
 * mixed-radix integer in [0, order); 0 is the neutral element.
 */
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

    /// Parses "z2", "z3", "z2xz4". Throws ParseError.
    static FiniteAbelianGroup parse(std::string_view spec);

    const std::vector<int>& cyclic_orders() const noexcept { return orders_; }
    int order() const noexcept { return order_; }
    GroupElement neutral() const noexcept { return 0; }
    GroupElement add(GroupElement a, GroupElement b) const;

    std::vector<int> decode(GroupElement a) const;
    GroupElement encode(const std::vector<int>& coords) const;

    /// Dimension over F_2 of π/2π (number of even cyclic factors).
    int two_rank() const;

    std::string name() const;

private:
    std::vector<int> orders_;
    int order_ = 1;
};

/// Hπ applied to u: m̄ -> n̄, sending x ∈ π^n to the subset sums in π^m.
std::vector<GroupElement> h_pi_act(const FiniteAbelianGroup& pi, const GammaOperator& u,
                                   std::span<const GroupElement> x);

}  // namespace theta
