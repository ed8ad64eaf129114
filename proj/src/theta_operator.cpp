#include "theta/theta_operator.hpp"

#include <map>
#include <tuple>

#include "theta/errors.hpp"

namespace theta {

namespace {

using Row = std::vector<ThetaOperator>;
using Rows = std::vector<Row>;

void append_body(const ThetaOperator& f, std::string& out) {
    if (f.level() == 0) {
        out.push_back('*');
        return;
    }
    out.push_back('(');
    const auto& v = f.phi().values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
    out.push_back(')');
    if (f.level() == 1) return;  // level-0 components carry no data
    out.push_back('[');
    for (std::size_t i = 0; i < f.components().size(); ++i) {
        if (i) out.push_back(';');
        const auto& row = f.components()[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out.push_back(',');
            append_body(row[j], out);
        }
    }
    out.push_back(']');
}

void require_height(const LevelTree& t, int level, const char* who) {
    if (level < 0) throw ArgumentError(std::string(who) + ": negative level");
    if (t.height() > level)
        throw ArgumentError(std::string(who) + ": tree " + render(t) + " has height above level " +
                            std::to_string(level));
}

class HomCache {
public:
    const std::vector<ThetaOperator>& hom(const LevelTree& s, const LevelTree& t, int level) {
        auto key = std::make_tuple(level, s, t);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::vector<ThetaOperator> out;
        if (level == 0) {
            out.emplace_back();
        } else {
            for (const auto& phi : hom_delta(s.valence(), t.valence())) {
                // Slots (i, k) in block order; each slot draws from its own hom-set.
                std::vector<std::pair<int, int>> slots;
                for (int i = 1; i <= phi.source(); ++i)
                    for (int k = phi(i - 1) + 1; k <= phi(i); ++k) slots.emplace_back(i, k);
                std::vector<const std::vector<ThetaOperator>*> choices;
                bool empty = false;
                for (auto [i, k] : slots) {
                    choices.push_back(&hom(s.child(i - 1), t.child(k - 1), level - 1));
                    if (choices.back()->empty()) empty = true;
                }
                if (empty) continue;
                std::vector<std::size_t> odo(slots.size(), 0);
                while (true) {
                    Rows rows(static_cast<std::size_t>(phi.source()));
                    for (std::size_t s_idx = 0; s_idx < slots.size(); ++s_idx)
                        rows[static_cast<std::size_t>(slots[s_idx].first - 1)].push_back((*choices[s_idx])[odo[s_idx]]);
                    out.emplace_back(level, s, t, phi, std::move(rows));
                    std::size_t d = slots.size();
                    while (d > 0) {
                        --d;
                        if (++odo[d] < choices[d]->size()) break;
                        odo[d] = 0;
                        if (d == 0) {
                            d = slots.size() + 1;
                            break;
                        }
                    }
                    if (slots.empty() || d == slots.size() + 1) break;
                }
            }
        }
        return cache_.emplace(std::move(key), std::move(out)).first->second;
    }

    long long count(const LevelTree& s, const LevelTree& t, int level) {
        if (level == 0) return 1;
        auto key = std::make_tuple(level, s, t);
        if (auto it = counts_.find(key); it != counts_.end()) return it->second;
        long long total = 0;
        for (const auto& phi : hom_delta(s.valence(), t.valence())) {
            long long prod = 1;
            for (int i = 1; i <= phi.source() && prod; ++i)
                for (int k = phi(i - 1) + 1; k <= phi(i) && prod; ++k)
                    prod *= count(s.child(i - 1), t.child(k - 1), level - 1);
            total += prod;
        }
        counts_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::tuple<int, LevelTree, LevelTree>, std::vector<ThetaOperator>> cache_;
    std::map<std::tuple<int, LevelTree, LevelTree>, long long> counts_;
};

}  // namespace

ThetaOperator::ThetaOperator() = default;

ThetaOperator::ThetaOperator(int level, LevelTree source, LevelTree target, SimplicialOperator phi,
                             std::vector<std::vector<ThetaOperator>> components)
    : level_(level),
      source_(std::move(source)),
      target_(std::move(target)),
      phi_(std::move(phi)),
      components_(std::move(components)) {
    if (level_ < 0) throw ShapeError("theta operator: negative level");
    if (level_ == 0) {
        if (!source_.is_leaf() || !target_.is_leaf() || !components_.empty() || !phi_.is_identity() ||
            phi_.source() != 0)
            throw ShapeError("theta operator: malformed level-0 operator");
        return;
    }
    if (source_.height() > level_ || target_.height() > level_)
        throw ShapeError("theta operator: tree height exceeds level");
    if (phi_.source() != source_.valence() || phi_.target() != target_.valence())
        throw ShapeError("theta operator: phi does not match root valences");
    if (static_cast<int>(components_.size()) != source_.valence())
        throw ShapeError("theta operator: one component row per source branch required");
    for (int i = 1; i <= phi_.source(); ++i) {
        const auto& row = components_[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != phi_(i) - phi_(i - 1))
            throw ShapeError("theta operator: component row does not match block of phi");
        for (std::size_t idx = 0; idx < row.size(); ++idx) {
            const int k = phi_(i - 1) + 1 + static_cast<int>(idx);
            const auto& c = row[idx];
            if (c.level() != level_ - 1) throw ShapeError("theta operator: component at wrong level");
            if (c.source() != source_.child(i - 1) || c.target() != target_.child(k - 1))
                throw ShapeError("theta operator: component endpoints do not match branches");
        }
    }
}

const ThetaOperator& ThetaOperator::component(int i, int k) const {
    const int lo = phi_(i - 1);
    if (k <= lo || k > phi_(i)) throw ArgumentError("component: k outside the block of i");
    return components_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - lo - 1)];
}

std::strong_ordering operator<=>(const ThetaOperator& a, const ThetaOperator& b) {
    if (auto c = a.level_ <=> b.level_; c != 0) return c;
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    if (auto c = a.target_ <=> b.target_; c != 0) return c;
    if (auto c = a.phi_ <=> b.phi_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.components_.begin(), a.components_.end(), b.components_.begin(), b.components_.end(),
        [](const Row& x, const Row& y) {
            return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
        });
}

std::string to_string(const ThetaOperator& f) {
    std::string out = "L" + std::to_string(f.level()) + " " + render(f.source()) + "->" + render(f.target()) + " ";
    append_body(f, out);
    return out;
}

ThetaOperator identity_theta(const LevelTree& t, int level) {
    require_height(t, level, "identity_theta");
    if (level == 0) return ThetaOperator();
    Rows rows;
    for (const auto& c : t.children()) rows.push_back({identity_theta(c, level - 1)});
    return ThetaOperator(level, t, t, SimplicialOperator::identity(t.valence()), std::move(rows));
}

ThetaOperator compose_theta(const ThetaOperator& g, const ThetaOperator& f) {
    if (g.level() != f.level()) throw CompositionError("compose_theta: level mismatch");
    if (f.target() != g.source())
        throw CompositionError("compose_theta: " + to_string(g) + " after " + to_string(f));
    if (f.level() == 0) return f;
    const auto& fp = f.phi();
    const auto& gp = g.phi();
    SimplicialOperator phi = compose_delta(gp, fp);
    Rows rows(static_cast<std::size_t>(fp.source()));
    for (int i = 1; i <= fp.source(); ++i) {
        int k = fp(i - 1) + 1;
        for (int l = phi(i - 1) + 1; l <= phi(i); ++l) {
            while (gp(k) < l) ++k;  // the unique k in the block of i with l in the block of k
            rows[static_cast<std::size_t>(i - 1)].push_back(compose_theta(g.component(k, l), f.component(i, k)));
        }
    }
    return ThetaOperator(f.level(), f.source(), g.target(), std::move(phi), std::move(rows));
}

std::vector<ThetaOperator> hom_theta(const LevelTree& s, const LevelTree& t, int level) {
    require_height(s, level, "hom_theta");
    require_height(t, level, "hom_theta");
    HomCache cache;
    return cache.hom(s, t, level);
}

long long hom_theta_count(const LevelTree& s, const LevelTree& t, int level) {
    require_height(s, level, "hom_theta_count");
    require_height(t, level, "hom_theta_count");
    HomCache cache;
    return cache.count(s, t, level);
}

bool is_identity(const ThetaOperator& f) {
    if (f.level() == 0) return true;
    if (!f.phi().is_identity()) return false;
    for (const auto& row : f.components())
        for (const auto& c : row)
            if (!is_identity(c)) return false;
    return true;
}

bool is_retraction(const ThetaOperator& f) {
    if (f.level() == 0) return true;
    if (!f.phi().is_surjective()) return false;
    for (const auto& row : f.components()) {
        if (row.size() > 1) return false;
        if (row.size() == 1 && !is_retraction(row.front())) return false;
    }
    return true;
}

std::vector<ThetaOperator> retractions_from(const LevelTree& s, int level) {
    require_height(s, level, "retractions_from");
    if (level == 0) return {ThetaOperator()};
    const int m = s.valence();
    std::vector<std::vector<ThetaOperator>> branch(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) branch[static_cast<std::size_t>(i)] = retractions_from(s.child(i), level - 1);

    std::vector<ThetaOperator> out;
    // Bit i of `kept` keeps branch i+1; collapsed branches get an empty block.
    for (unsigned long kept = 0; kept < (1UL << m); ++kept) {
        std::vector<int> phi{0};
        std::vector<int> kept_idx;
        for (int i = 0; i < m; ++i) {
            const bool keep = (kept >> i) & 1UL;
            phi.push_back(phi.back() + (keep ? 1 : 0));
            if (keep) kept_idx.push_back(i);
        }
        std::vector<std::size_t> odo(kept_idx.size(), 0);
        while (true) {
            Rows rows(static_cast<std::size_t>(m));
            std::vector<LevelTree> target_children;
            for (std::size_t j = 0; j < kept_idx.size(); ++j) {
                const auto& r = branch[static_cast<std::size_t>(kept_idx[j])][odo[j]];
                rows[static_cast<std::size_t>(kept_idx[j])].push_back(r);
                target_children.push_back(r.target());
            }
            LevelTree target(std::move(target_children));
            SimplicialOperator p(target.valence(), phi);
            out.emplace_back(level, s, std::move(target), std::move(p), std::move(rows));
            std::size_t d = kept_idx.size();
            bool done = true;
            while (d > 0) {
                --d;
                if (++odo[d] < branch[static_cast<std::size_t>(kept_idx[d])].size()) {
                    done = false;
                    break;
                }
                odo[d] = 0;
            }
            if (done) break;
        }
    }
    return out;
}

ThetaOperator constant_map(const LevelTree& s, const LevelTree& t, int level) {
    require_height(s, level, "constant_map");
    require_height(t, level, "constant_map");
    if (level == 0) return ThetaOperator();
    return ThetaOperator(level, s, t, SimplicialOperator(t.valence(), std::vector<int>(s.children().size() + 1, 0)),
                         Rows(s.children().size()));
}

ThetaOperator section_of(const ThetaOperator& r) {
    if (!is_retraction(r)) throw ArgumentError("section_of: not a retraction: " + to_string(r));
    if (r.level() == 0) return r;
    const auto& sigma = r.phi();
    std::vector<int> values{0};
    Rows rows;
    for (int k = 1; k <= sigma.source(); ++k) {
        if (sigma(k) == sigma(k - 1)) continue;
        const int j = sigma(k);  // branch j of the target is the image of branch k
        Row row;
        for (int c = values.back() + 1; c < k; ++c)
            row.push_back(constant_map(r.target().child(j - 1), r.source().child(c - 1), r.level() - 1));
        row.push_back(section_of(r.component(k, j)));
        values.push_back(k);
        rows.push_back(std::move(row));
    }
    return ThetaOperator(r.level(), r.target(), r.source(), SimplicialOperator(sigma.source(), std::move(values)),
                         std::move(rows));
}

std::vector<ThetaOperator> codim_one_monos(const LevelTree& t, int level) {
    require_height(t, level, "codim_one_monos");
    std::vector<ThetaOperator> out;
    if (t.edges() == 0) return out;
    HomCache cache;
    for (const auto& s : enumerate_trees(level, t.edges() - 1))
        for (const auto& f : cache.hom(s, t, level))
            if (is_mono(f)) out.push_back(f);
    return out;
}

JointFactorisation joint_factor(const LevelTree& source, int level, std::span<const ThetaOperator> maps) {
    for (const auto& g : maps) {
        if (g.level() != level || g.source() != source)
            throw ShapeError("joint_factor: every map must start at the common source");
    }
    if (level == 0) return {ThetaOperator(), std::vector<ThetaOperator>(maps.begin(), maps.end())};

    const int m = source.valence();
    auto differs = [&](int i) {
        for (const auto& g : maps)
            if (g.phi()(i) != g.phi()(i - 1)) return true;
        return false;
    };

    std::vector<int> sigma{0};
    Rows retraction_rows(static_cast<std::size_t>(m));
    std::vector<LevelTree> reduced_children;
    // For each kept branch: the recursive factorisation and where each (map, k) landed.
    struct Kept {
        int branch;
        JointFactorisation sub;
        std::vector<std::vector<std::size_t>> index;  // index[j][idx] into sub.maps
    };
    std::vector<Kept> kept;

    for (int i = 1; i <= m; ++i) {
        if (!differs(i)) {
            sigma.push_back(sigma.back());
            continue;
        }
        sigma.push_back(sigma.back() + 1);
        std::vector<ThetaOperator> family;
        std::vector<std::vector<std::size_t>> index(maps.size());
        for (std::size_t j = 0; j < maps.size(); ++j) {
            for (const auto& c : maps[j].components()[static_cast<std::size_t>(i - 1)]) {
                index[j].push_back(family.size());
                family.push_back(c);
            }
        }
        auto sub = joint_factor(source.child(i - 1), level - 1, family);
        retraction_rows[static_cast<std::size_t>(i - 1)].push_back(sub.retraction);
        reduced_children.push_back(sub.retraction.target());
        kept.push_back({i, std::move(sub), std::move(index)});
    }

    LevelTree reduced(std::move(reduced_children));
    const int m_reduced = reduced.valence();
    ThetaOperator retraction(level, source, reduced, SimplicialOperator(m_reduced, sigma),
                             std::move(retraction_rows));

    std::vector<ThetaOperator> out;
    out.reserve(maps.size());
    for (std::size_t j = 0; j < maps.size(); ++j) {
        const auto& g = maps[j];
        std::vector<int> rho(static_cast<std::size_t>(m_reduced + 1), g.phi()(0));
        for (int i = 1; i <= m; ++i) rho[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = g.phi()(i);
        Rows rows;
        for (const auto& kb : kept) {
            Row row;
            for (std::size_t idx : kb.index[j]) row.push_back(kb.sub.maps[idx]);
            rows.push_back(std::move(row));
        }
        out.emplace_back(level, reduced, g.target(), SimplicialOperator(g.target().valence(), std::move(rho)),
                         std::move(rows));
    }
    return {std::move(retraction), std::move(out)};
}

ReedyFactorisation reedy_factor(const ThetaOperator& f) {
    auto jf = joint_factor(f.source(), f.level(), std::span<const ThetaOperator>(&f, 1));
    return {std::move(jf.retraction), std::move(jf.maps.front())};
}

bool is_mono(const ThetaOperator& f) { return is_identity(reedy_factor(f).degeneracy); }

bool is_cover(const ThetaOperator& f) {
    if (f.level() == 0) return true;
    if (!f.phi().preserves_endpoints()) return false;
    for (const auto& row : f.components())
        for (const auto& c : row)
            if (!is_cover(c)) return false;
    return true;
}

bool is_outer_face(const ThetaOperator& f) {
    if (f.level() == 0) return true;
    if (!f.phi().steps_by_one()) return false;
    for (const auto& row : f.components())
        for (const auto& c : row)
            if (!is_outer_face(c)) return false;
    return true;
}

bool is_inner_face(const ThetaOperator& f) { return is_cover(f) && is_mono(f); }

CoverOuterFactorisation factor_cover_outer(const ThetaOperator& f) {
    if (f.level() == 0) return {f, f};
    const auto& phi = f.phi();
    const auto split = factor_cover_immersion(phi);
    const int lo = phi(0);
    const int hi = phi(phi.source());

    Rows cover_rows(static_cast<std::size_t>(phi.source()));
    Rows outer_rows;
    std::vector<LevelTree> middle;
    int i = 1;
    for (int k = lo + 1; k <= hi; ++k) {
        while (phi(i) < k) ++i;
        auto sub = factor_cover_outer(f.component(i, k));
        middle.push_back(sub.cover.target());
        cover_rows[static_cast<std::size_t>(i - 1)].push_back(std::move(sub.cover));
        outer_rows.push_back({std::move(sub.outer)});
    }
    LevelTree mid(std::move(middle));
    ThetaOperator cover(f.level(), f.source(), mid, split.cover, std::move(cover_rows));
    ThetaOperator outer(f.level(), mid, f.target(), split.immersion, std::move(outer_rows));
    return {std::move(cover), std::move(outer)};
}

ThetaKind classify_theta(const ThetaOperator& f) {
    if (is_identity(f)) return ThetaKind::identity;
    const auto r = reedy_factor(f);
    const bool degenerate = !is_identity(r.degeneracy);
    if (degenerate) return is_identity(r.face) ? ThetaKind::degeneracy : ThetaKind::mixed;
    if (is_cover(f)) return ThetaKind::inner_face;
    if (is_outer_face(f)) return ThetaKind::outer_face;
    return ThetaKind::face;
}

std::string to_string(ThetaKind k) {
    switch (k) {
        case ThetaKind::identity: return "identity";
        case ThetaKind::degeneracy: return "degeneracy";
        case ThetaKind::inner_face: return "inner-face";
        case ThetaKind::outer_face: return "outer-face";
        case ThetaKind::face: return "face";
        case ThetaKind::mixed: return "mixed";
    }
    return "unknown";
}

int dim_theta(const LevelTree& t) {
    int d = t.valence();
    for (const auto& c : t.children()) d += dim_theta(c);
    return d;
}

GammaOperator gamma_n(const ThetaOperator& f) {
    if (f.level() == 0) return GammaOperator::identity(1);
    GammaWreathOperator w;
    w.outer = segal_gamma(f.phi());
    for (const auto& c : f.source().children()) w.source_blocks.push_back(count_at_height(c, f.level() - 1));
    for (const auto& c : f.target().children()) w.target_blocks.push_back(count_at_height(c, f.level() - 1));
    for (const auto& row : f.components()) {
        std::vector<GammaOperator> images;
        for (const auto& c : row) images.push_back(gamma_n(c));
        w.components.push_back(std::move(images));
    }
    return assemble(w);
}

ThetaOperator suspend(const ThetaOperator& f) {
    return ThetaOperator(f.level() + 1, suspend_tree(f.source()), suspend_tree(f.target()),
                         SimplicialOperator::identity(1), {{f}});
}

ThetaOperator embed(const ThetaOperator& f) {
    if (f.level() == 0) return ThetaOperator(1, LevelTree(), LevelTree(), SimplicialOperator::identity(0), {});
    Rows rows;
    for (const auto& row : f.components()) {
        Row r;
        for (const auto& c : row) r.push_back(embed(c));
        rows.push_back(std::move(r));
    }
    return ThetaOperator(f.level() + 1, f.source(), f.target(), f.phi(), std::move(rows));
}

ThetaOperator diagonal(std::span<const SimplicialOperator> fs) {
    if (fs.empty()) throw ArgumentError("diagonal: need at least one simplicial operator");
    const int level = static_cast<int>(fs.size());
    const ThetaOperator upper = level == 1 ? ThetaOperator() : diagonal(fs.subspan(1));
    const auto& f = fs.front();
    Rows rows;
    for (int i = 1; i <= f.source(); ++i) rows.emplace_back(static_cast<std::size_t>(f(i) - f(i - 1)), upper);
    LevelTree src(std::vector<LevelTree>(static_cast<std::size_t>(f.source()), upper.source()));
    LevelTree tgt(std::vector<LevelTree>(static_cast<std::size_t>(f.target()), upper.target()));
    return ThetaOperator(level, std::move(src), std::move(tgt), f, std::move(rows));
}

ThetaOperator from_delta(const SimplicialOperator& f) { return diagonal(std::span<const SimplicialOperator>(&f, 1)); }

}  // namespace theta
