#include "theta/json_io.hpp"

#include "theta/errors.hpp"

namespace theta {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what(), 0);
    }
}

}  // namespace

Json to_json(const NGraph& g) {
    Json cells = Json::array();
    Json source = Json::array();
    Json target = Json::array();
    for (int k = 0; k <= g.n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        cells.push_back(g.cells[ku]);
        Json s = Json::array();
        Json t = Json::array();
        for (std::size_t i = 0; k > 0 && i < g.cells[ku].size(); ++i) {
            s.push_back(g.cells[ku - 1][static_cast<std::size_t>(g.source[ku][i])]);
            t.push_back(g.cells[ku - 1][static_cast<std::size_t>(g.target[ku][i])]);
        }
        source.push_back(std::move(s));
        target.push_back(std::move(t));
    }
    return {{"cells", cells}, {"source", source}, {"target", target}};
}

Json to_json(const SimplicialOperator& f) {
    return {{"src", f.source()}, {"tgt", f.target()}, {"values", f.values()}};
}

SimplicialOperator simplicial_from_json(const Json& j) {
    return guarded("simplicial operator", [&] {
        SimplicialOperator f(j.at("tgt").get<int>(), j.at("values").get<std::vector<int>>());
        if (f.source() != j.at("src").get<int>()) throw ParseError("simplicial operator: src disagrees with values", 0);
        return f;
    });
}

Json to_json(const GammaOperator& u) {
    return {{"src", u.source()}, {"tgt", u.target()}, {"subsets", u.subsets()}};
}

GammaOperator gamma_from_json(const Json& j) {
    return guarded("gamma operator", [&] {
        GammaOperator u(j.at("tgt").get<int>(), j.at("subsets").get<std::vector<std::vector<int>>>());
        if (u.source() != j.at("src").get<int>()) throw ParseError("gamma operator: src disagrees with subsets", 0);
        return u;
    });
}

Json to_json(const ThetaOperator& f) {
    Json comps = Json::array();
    for (const auto& row : f.components()) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(to_json(c));
        comps.push_back(std::move(r));
    }
    return {{"level", f.level()},
            {"src", render(f.source())},
            {"tgt", render(f.target())},
            {"phi", f.phi().values()},
            {"components", comps}};
}

ThetaOperator theta_from_json(const Json& j) {
    return guarded("theta operator", [&] {
        const int level = j.at("level").get<int>();
        if (level == 0) return ThetaOperator();
        LevelTree src = parse_tree(j.at("src").get<std::string>());
        LevelTree tgt = parse_tree(j.at("tgt").get<std::string>());
        SimplicialOperator phi(tgt.valence(), j.at("phi").get<std::vector<int>>());
        std::vector<std::vector<ThetaOperator>> rows;
        for (const auto& r : j.at("components")) {
            std::vector<ThetaOperator> row;
            for (const auto& c : r) row.push_back(theta_from_json(c));
            rows.push_back(std::move(row));
        }
        return ThetaOperator(level, std::move(src), std::move(tgt), std::move(phi), std::move(rows));
    });
}

}  // namespace theta
