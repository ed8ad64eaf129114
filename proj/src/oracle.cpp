#include "theta/oracle.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>

#include "theta/errors.hpp"

namespace theta {

namespace {

// A simplex or bisimplex: leading shape entries then the group labels.
using Key = std::vector<int>;
using Faces = std::function<std::vector<Key>(const Key&)>;

// Incremental F_2 row reduction on packed words. Vectors are reduced against
// stored pivots; the rank is the number of pivots.
class PackedEliminator {
public:
    explicit PackedEliminator(std::size_t width) : words_((width + 63) / 64) {}

    void insert(std::vector<std::uint64_t> v) {
        while (true) {
            std::size_t lead = npos;
            for (std::size_t w = 0; w < v.size(); ++w) {
                if (v[w]) {
                    lead = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
                    break;
                }
            }
            if (lead == npos) return;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                pivots_.emplace(lead, std::move(v));
                return;
            }
            for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= it->second[w];
        }
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t words() const { return words_; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t words_;
    std::unordered_map<std::size_t, std::vector<std::uint64_t>> pivots_;
};

std::vector<int> betti_from(const std::vector<std::vector<Key>>& basis, const Faces& faces) {
    const int top = static_cast<int>(basis.size()) - 1;
    std::vector<std::size_t> boundary_rank(basis.size(), 0);
    for (int d = 1; d <= top; ++d) {
        std::map<Key, std::size_t> lower;
        for (const auto& k : basis[static_cast<std::size_t>(d - 1)]) lower.emplace(k, lower.size());
        PackedEliminator elim(lower.size());
        for (const auto& k : basis[static_cast<std::size_t>(d)]) {
            std::vector<std::uint64_t> v(elim.words(), 0);
            for (const auto& f : faces(k)) {
                auto it = lower.find(f);
                if (it == lower.end()) throw InvariantViolation("oracle: face outside the normalized basis");
                v[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
            }
            elim.insert(std::move(v));
        }
        boundary_rank[static_cast<std::size_t>(d)] = elim.rank();
    }
    std::vector<int> betti;
    for (int d = 0; d < top; ++d) {
        const auto z = basis[static_cast<std::size_t>(d)].size() - boundary_rank[static_cast<std::size_t>(d)];
        betti.push_back(static_cast<int>(z - boundary_rank[static_cast<std::size_t>(d + 1)]));
    }
    return betti;
}

// Odometer over words of length k with letters in [lo, hi).
template <class F>
void for_each_word(int k, int lo, int hi, F&& visit) {
    if (k > 0 && lo >= hi) return;
    std::vector<int> w(static_cast<std::size_t>(k), lo);
    while (true) {
        visit(w);
        int i = k - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == hi - 1) w[static_cast<std::size_t>(i--)] = lo;
        if (i < 0) return;
        ++w[static_cast<std::size_t>(i)];
    }
}

// --- n = 1: the bar construction ------------------------------------------

std::vector<int> nerve_betti(const FiniteAbelianGroup& pi, int max_dim) {
    std::vector<std::vector<Key>> basis(static_cast<std::size_t>(max_dim + 1));
    for (int k = 0; k <= max_dim; ++k)
        for_each_word(k, 1, pi.order(), [&](const std::vector<int>& w) { basis[static_cast<std::size_t>(k)].push_back(w); });
    Faces faces = [&pi](const Key& w) {
        std::vector<Key> out;
        const std::size_t k = w.size();
        for (std::size_t i = 0; i <= k; ++i) {
            Key f;
            if (i == 0) {
                f.assign(w.begin() + 1, w.end());
            } else if (i == k) {
                f.assign(w.begin(), w.end() - 1);
            } else {
                const int merged = pi.add(w[i - 1], w[i]);
                if (merged == pi.neutral()) continue;  // degenerate
                f.assign(w.begin(), w.begin() + static_cast<long>(i - 1));
                f.push_back(merged);
                f.insert(f.end(), w.begin() + static_cast<long>(i + 1), w.end());
            }
            out.push_back(std::move(f));
        }
        return out;
    };
    return betti_from(basis, faces);
}

// --- n = 2: matrices ------------------------------------------------------

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;  // row-major

    int at(int r, int c) const { return a[static_cast<std::size_t>(r * cols + c)]; }

    Key key() const {
        Key k{rows, cols};
        k.insert(k.end(), a.begin(), a.end());
        return k;
    }
    static Matrix from_key(const Key& k) {
        return {k[0], k[1], std::vector<int>(k.begin() + 2, k.end())};
    }
};

// Face i of a simplicial operator [len-1] -> [len] acting on an index set of size len.
// Returns, for each surviving index, the source indices that are summed into it.
std::vector<std::vector<int>> face_blocks(int len, int i) {
    std::vector<std::vector<int>> out;
    for (int j = 0; j < len; ++j) {
        if (i == 0 && j == 0) continue;
        if (i == len && j == len - 1) continue;
        if (i > 0 && i < len && j == i) {
            out.back().push_back(j);
            continue;
        }
        out.push_back({j});
    }
    return out;
}

Matrix apply_blocks(const FiniteAbelianGroup& pi, const Matrix& m, const std::vector<std::vector<int>>& rb,
                    const std::vector<std::vector<int>>& cb) {
    Matrix out{static_cast<int>(rb.size()), static_cast<int>(cb.size()), {}};
    for (const auto& r : rb) {
        for (const auto& c : cb) {
            int s = pi.neutral();
            for (int x : r)
                for (int y : c) s = pi.add(s, m.at(x, y));
            out.a.push_back(s);
        }
    }
    return out;
}

std::vector<std::vector<int>> identity_blocks(int len) {
    std::vector<std::vector<int>> out;
    for (int j = 0; j < len; ++j) out.push_back({j});
    return out;
}

bool zero_row(const Matrix& m, int r) {
    for (int c = 0; c < m.cols; ++c)
        if (m.at(r, c) != 0) return false;
    return true;
}

bool zero_col(const Matrix& m, int c) {
    for (int r = 0; r < m.rows; ++r)
        if (m.at(r, c) != 0) return false;
    return true;
}

// Normalized in both directions: only the empty 0×0 matrix, or p,q >= 1 with no zero row or column.
bool bi_normalized(const Matrix& m) {
    if (m.rows == 0 || m.cols == 0) return m.rows == 0 && m.cols == 0;
    for (int r = 0; r < m.rows; ++r)
        if (zero_row(m, r)) return false;
    for (int c = 0; c < m.cols; ++c)
        if (zero_col(m, c)) return false;
    return true;
}

std::vector<int> total_complex_betti(const FiniteAbelianGroup& pi, int max_dim) {
    std::vector<std::vector<Key>> basis(static_cast<std::size_t>(max_dim + 1));
    basis[0].push_back(Matrix{}.key());
    for (int d = 2; d <= max_dim; ++d) {
        for (int p = 1; p < d; ++p) {
            const int q = d - p;
            for_each_word(p * q, 0, pi.order(), [&](const std::vector<int>& w) {
                Matrix m{p, q, w};
                if (bi_normalized(m)) basis[static_cast<std::size_t>(d)].push_back(m.key());
            });
        }
    }
    Faces faces = [&pi](const Key& k) {
        const Matrix m = Matrix::from_key(k);
        std::vector<Key> out;
        for (int i = 0; i <= m.rows && m.rows > 0; ++i) {
            Matrix f = apply_blocks(pi, m, face_blocks(m.rows, i), identity_blocks(m.cols));
            if (bi_normalized(f)) out.push_back(f.key());
        }
        for (int j = 0; j <= m.cols && m.cols > 0; ++j) {
            Matrix f = apply_blocks(pi, m, identity_blocks(m.rows), face_blocks(m.cols, j));
            if (bi_normalized(f)) out.push_back(f.key());
        }
        return out;
    };
    return betti_from(basis, faces);
}

// A k×k matrix is degenerate on the diagonal iff some index has both row and column zero.
bool diag_normalized(const Matrix& m) {
    for (int i = 0; i < m.rows; ++i)
        if (zero_row(m, i) && zero_col(m, i)) return false;
    return true;
}

}  // namespace

std::vector<int> oracle_multisimplicial(const FiniteAbelianGroup& pi, int n, int max_dim) {
    if (max_dim < 1) throw ArgumentError("oracle: need max_dim >= 1");
    if (n == 1) return nerve_betti(pi, max_dim);
    if (n == 2) return total_complex_betti(pi, max_dim);
    if (n < 1) throw ArgumentError("oracle: n must be >= 1");
    throw UnsupportedError("oracle: only n <= 2 is supported");
}

std::vector<int> oracle_diagonal(const FiniteAbelianGroup& pi, int max_dim) {
    if (max_dim < 1) throw ArgumentError("oracle: need max_dim >= 1");
    std::vector<std::vector<Key>> basis(static_cast<std::size_t>(max_dim + 1));
    for (int k = 0; k <= max_dim; ++k) {
        for_each_word(k * k, 0, pi.order(), [&](const std::vector<int>& w) {
            Matrix m{k, k, w};
            if (diag_normalized(m)) basis[static_cast<std::size_t>(k)].push_back(m.key());
        });
    }
    Faces faces = [&pi](const Key& key) {
        const Matrix m = Matrix::from_key(key);
        std::vector<Key> out;
        for (int i = 0; i <= m.rows && m.rows > 0; ++i) {
            const auto b = face_blocks(m.rows, i);
            Matrix f = apply_blocks(pi, m, b, b);
            if (diag_normalized(f)) out.push_back(f.key());
        }
        return out;
    };
    return betti_from(basis, faces);
}

}  // namespace theta
