#include "theta/chain_complex.hpp"

#include <atomic>

namespace theta {

namespace {
std::atomic<std::size_t> squared_checks{0};
}

std::size_t f2_rank(std::vector<boost::dynamic_bitset<>> columns) {
    std::size_t rank = 0;
    // Pivot on the lowest set bit; each pivot column clears that bit elsewhere.
    for (std::size_t i = 0; i < columns.size(); ++i) {
        auto& c = columns[i];
        const auto pivot = c.find_first();
        if (pivot == boost::dynamic_bitset<>::npos) continue;
        ++rank;
        for (std::size_t j = i + 1; j < columns.size(); ++j)
            if (columns[j].test(pivot)) columns[j] ^= c;
    }
    return rank;
}

void check_boundary_squared(const F2ChainComplex& c) {
    for (int d = 2; d <= c.max_dim; ++d) {
        const auto& top = c.boundary[static_cast<std::size_t>(d)];
        const auto& mid = c.boundary[static_cast<std::size_t>(d - 1)];
        const std::size_t rows = c.rank(d - 2);
        for (std::size_t i = 0; i < top.size(); ++i) {
            boost::dynamic_bitset<> acc(rows);
            for (auto j = top[i].find_first(); j != boost::dynamic_bitset<>::npos; j = top[i].find_next(j))
                acc ^= mid[j];
            if (acc.any())
                throw InvariantViolation("boundary of boundary is non-zero on cell " +
                                         c.basis[static_cast<std::size_t>(d)][i] + " in degree " + std::to_string(d));
        }
    }
    ++squared_checks;
}

std::size_t boundary_squared_checks() { return squared_checks.load(); }

int homology_f2(const F2ChainComplex& c, int d) {
    if (d < 0 || d + 1 > c.max_dim)
        throw ArgumentError("homology_f2: degree " + std::to_string(d) + " outside truncation " +
                            std::to_string(c.max_dim));
    const auto cycles = c.rank(d) - f2_rank(c.boundary[static_cast<std::size_t>(d)]);
    const auto boundaries = f2_rank(c.boundary[static_cast<std::size_t>(d + 1)]);
    return static_cast<int>(cycles - boundaries);
}

std::vector<int> betti_numbers(const F2ChainComplex& c) {
    std::vector<int> out;
    for (int d = 0; d + 1 <= c.max_dim; ++d) out.push_back(homology_f2(c, d));
    return out;
}

}  // namespace theta
