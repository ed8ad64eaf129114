#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "theta/presheaf.hpp"

namespace theta {

/**
 * Mod-2 cellular chains of a truncated Θ_n-set. basis[d] names the
 * non-degenerate d-cells; boundary[d][c] is the column of ∂_d for cell c,
 * indexed by basis[d-1] (boundary[0] columns are empty).
 */
struct F2ChainComplex {
    int max_dim = 0;
    std::vector<std::vector<std::string>> basis;
    std::vector<std::vector<boost::dynamic_bitset<>>> boundary;

    std::size_t rank(int d) const { return basis.at(static_cast<std::size_t>(d)).size(); }
};

/// Rank over F_2 of the matrix with the given columns.
std::size_t f2_rank(std::vector<boost::dynamic_bitset<>> columns);

/// Throws InvariantViolation naming the first cell whose boundary has non-zero boundary.
void check_boundary_squared(const F2ChainComplex& c);
/// How many complexes have passed check_boundary_squared in this process.
std::size_t boundary_squared_checks();

/// Betti number over F_2 in degree d; needs d + 1 <= max_dim, else ArgumentError.
int homology_f2(const F2ChainComplex& c, int d);

/// Betti numbers in degrees 0..max_dim-1.
std::vector<int> betti_numbers(const F2ChainComplex& c);

/**
 * ∂[x over T] sums the reductions of x along every codimension-one mono into
 * T, keeping the summands that stay in dimension dim(T) - 1.
 */
template <ThetaSet X>
F2ChainComplex chain_complex(const X& set, int max_dim) {
    using E = typename X::Element;
    if (max_dim < 0) throw ArgumentError("chain_complex: negative dimension bound");
    F2ChainComplex out;
    out.max_dim = max_dim;
    std::map<Cell<E>, std::size_t> previous;
    std::map<LevelTree, std::vector<ThetaOperator>> monos;
    for (int d = 0; d <= max_dim; ++d) {
        auto cells = nondegenerate_cells(set, d);
        std::vector<std::string> names;
        std::vector<boost::dynamic_bitset<>> columns;
        std::map<Cell<E>, std::size_t> index;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto& cell = cells[i];
            names.push_back(render(cell.tree) + " " + set.describe(cell.element));
            boost::dynamic_bitset<> col(previous.size());
            if (d > 0) {
                auto it = monos.find(cell.tree);
                if (it == monos.end()) it = monos.emplace(cell.tree, codim_one_monos(cell.tree, set.level())).first;
                for (const auto& phi : it->second) {
                    auto r = reduce_element(set, phi.source(), set.act(phi, cell.element));
                    if (r.tree.edges() != d - 1) continue;
                    auto hit = previous.find(Cell<E>{r.tree, r.element});
                    if (hit == previous.end())
                        throw InvariantViolation("chain_complex: face of " + names.back() + " is not a basis cell");
                    col.flip(hit->second);
                }
            }
            columns.push_back(std::move(col));
            index.emplace(cell, i);
        }
        out.basis.push_back(std::move(names));
        out.boundary.push_back(std::move(columns));
        previous = std::move(index);
    }
    check_boundary_squared(out);
    return out;
}

}  // namespace theta
