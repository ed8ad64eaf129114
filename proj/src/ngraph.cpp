#include "theta/ngraph.hpp"

#include <map>

#include <boost/dynamic_bitset.hpp>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::string cell_id(const VertexPath& path, int sector) {
    std::string id;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) id.push_back('.');
        id += std::to_string(path[i]);
    }
    id.push_back('/');
    id += std::to_string(sector);
    return id;
}

}  // namespace

NGraph star(const LevelTree& t, int n) {
    if (n < 0) throw ArgumentError("star: negative dimension");
    if (t.height() > n) throw ArgumentError("star: tree height exceeds n");

    NGraph g;
    g.n = n;
    g.cells.resize(static_cast<std::size_t>(n + 1));
    g.source.resize(static_cast<std::size_t>(n + 1));
    g.target.resize(static_cast<std::size_t>(n + 1));

    // Index of sector (vertex, j) within cells[height(vertex)].
    std::map<VertexPath, int> first_sector;
    for (int k = 0; k <= n; ++k) {
        auto& layer = g.cells[static_cast<std::size_t>(k)];
        for (const auto& v : vertices_at_height(t, k)) {
            first_sector[v] = static_cast<int>(layer.size());
            const int sectors = subtree_at(t, v).valence() + 1;
            for (int j = 0; j < sectors; ++j) {
                layer.push_back(cell_id(v, j));
                if (k == 0) continue;
                VertexPath parent(v.begin(), v.end() - 1);
                const int edge = v.back();
                g.source[static_cast<std::size_t>(k)].push_back(first_sector.at(parent) + edge);
                g.target[static_cast<std::size_t>(k)].push_back(first_sector.at(parent) + edge + 1);
            }
        }
    }
    return g;
}

bool satisfies_globular(const NGraph& g) {
    for (int k = 2; k <= g.n; ++k) {
        const auto& s = g.source[static_cast<std::size_t>(k)];
        const auto& t = g.target[static_cast<std::size_t>(k)];
        const auto& s1 = g.source[static_cast<std::size_t>(k - 1)];
        const auto& t1 = g.target[static_cast<std::size_t>(k - 1)];
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto si = static_cast<std::size_t>(s[i]);
            auto ti = static_cast<std::size_t>(t[i]);
            if (s1[si] != s1[ti]) return false;
            if (t1[si] != t1[ti]) return false;
        }
    }
    return true;
}

bool generates_total_order(const NGraph& g) {
    std::vector<int> offset(static_cast<std::size_t>(g.n + 2), 0);
    for (int k = 0; k <= g.n; ++k)
        offset[static_cast<std::size_t>(k + 1)] = offset[static_cast<std::size_t>(k)] + g.cell_count(k);
    const auto total = static_cast<std::size_t>(offset.back());
    if (total == 0) return true;

    // le[a][b] == a <= b
    std::vector<boost::dynamic_bitset<>> le(total, boost::dynamic_bitset<>(total));
    for (std::size_t a = 0; a < total; ++a) le[a].set(a);
    for (int k = 1; k <= g.n; ++k) {
        for (int i = 0; i < g.cell_count(k); ++i) {
            auto x = static_cast<std::size_t>(offset[static_cast<std::size_t>(k)] + i);
            auto s = static_cast<std::size_t>(offset[static_cast<std::size_t>(k - 1)] +
                                              g.source[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
            auto t = static_cast<std::size_t>(offset[static_cast<std::size_t>(k - 1)] +
                                              g.target[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
            le[s].set(x);
            le[x].set(t);
        }
    }
    // Warshall closure.
    for (std::size_t m = 0; m < total; ++m)
        for (std::size_t a = 0; a < total; ++a)
            if (le[a].test(m)) le[a] |= le[m];

    for (std::size_t a = 0; a < total; ++a) {
        for (std::size_t b = a + 1; b < total; ++b) {
            const bool ab = le[a].test(b);
            const bool ba = le[b].test(a);
            if (ab == ba) return false;  // incomparable, or a cycle
        }
    }
    return true;
}

}  // namespace theta
