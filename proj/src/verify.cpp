#include "theta/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "theta/chain_complex.hpp"
#include "theta/counting.hpp"
#include "theta/errors.hpp"
#include "theta/oracle.hpp"
#include "theta/presheaf.hpp"

namespace theta {

namespace {

constexpr std::size_t kKeptFailures = 20;

std::vector<LevelTree> trees_up_to(int level, int max_edges) {
    std::vector<LevelTree> out;
    for (int e = 0; e <= max_edges; ++e)
        for (auto& t : enumerate_trees(level, e)) out.push_back(std::move(t));
    return out;
}

// --- flat description: linked vertex pairs carrying simplicial operators ----

using Flat = std::map<std::pair<VertexPath, VertexPath>, SimplicialOperator>;

void flatten(const ThetaOperator& f, VertexPath& v, VertexPath& w, Flat& out) {
    out.emplace(std::make_pair(v, w), f.phi());
    if (f.level() == 0) return;
    for (int i = 1; i <= f.phi().source(); ++i) {
        for (int k = f.phi()(i - 1) + 1; k <= f.phi()(i); ++k) {
            v.push_back(i - 1);
            w.push_back(k - 1);
            flatten(f.component(i, k), v, w, out);
            v.pop_back();
            w.pop_back();
        }
    }
}

Flat flatten(const ThetaOperator& f) {
    Flat out;
    VertexPath v;
    VertexPath w;
    flatten(f, v, w, out);
    return out;
}

// Relational composite; nullopt if some pair is reached through two middle vertices.
std::optional<Flat> compose_flat(const Flat& g, const Flat& f) {
    std::multimap<VertexPath, std::pair<VertexPath, const SimplicialOperator*>> by_middle;
    for (const auto& [vw, op] : g) by_middle.emplace(vw.first, std::make_pair(vw.second, &op));
    Flat out;
    for (const auto& [vw, op] : f) {
        auto [lo, hi] = by_middle.equal_range(vw.second);
        for (auto it = lo; it != hi; ++it) {
            auto key = std::make_pair(vw.first, it->second.first);
            if (!out.emplace(key, compose_delta(*it->second.second, op)).second) return std::nullopt;
        }
    }
    return out;
}

// Hom-set size by trying every value list, monotone or not.
long long brute_hom_count(const LevelTree& s, const LevelTree& t, int level) {
    if (level == 0) return 1;
    const int m = s.valence();
    const int n = t.valence();
    long long total = 0;
    std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
    while (true) {
        bool monotone = true;
        for (int i = 1; i <= m; ++i) monotone = monotone && v[static_cast<std::size_t>(i - 1)] <= v[static_cast<std::size_t>(i)];
        if (monotone) {
            long long prod = 1;
            for (int i = 1; i <= m; ++i)
                for (int k = v[static_cast<std::size_t>(i - 1)] + 1; k <= v[static_cast<std::size_t>(i)]; ++k)
                    prod *= brute_hom_count(s.child(i - 1), t.child(k - 1), level - 1);
            total += prod;
        }
        int i = m;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == n) v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    return total;
}

std::set<std::string> keys_of(const std::vector<ThetaOperator>& ops) {
    std::set<std::string> out;
    for (const auto& f : ops) out.insert(to_string(f));
    return out;
}

// Definitional reduction: exhausts retractions (found by filtering hom-sets) and element sets.
template <class X>
class BruteReducer {
public:
    using E = typename X::Element;

    explicit BruteReducer(const X& set) : set_(set) {}

    const std::vector<ThetaOperator>& retractions(const LevelTree& s) {
        auto it = retractions_.find(s);
        if (it != retractions_.end()) return it->second;
        std::vector<ThetaOperator> out;
        for (int e = 0; e <= s.edges(); ++e)
            for (const auto& t : enumerate_trees(set_.level(), e))
                for (auto& f : hom_theta(s, t, set_.level()))
                    if (is_retraction(f)) out.push_back(std::move(f));
        return retractions_.emplace(s, std::move(out)).first->second;
    }

    bool nondegenerate(const LevelTree& t, const E& y) {
        auto key = std::make_pair(t, y);
        if (auto it = nondegenerate_.find(key); it != nondegenerate_.end()) return it->second;
        bool ok = true;
        for (const auto& r : retractions(t)) {
            if (is_identity(r)) continue;
            for (const auto& z : set_.elements(r.target())) {
                if (set_.act(r, z) == y) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        nondegenerate_.emplace(std::move(key), ok);
        return ok;
    }

    std::vector<Reduction<E>> cores(const LevelTree& s, const E& x) {
        std::vector<Reduction<E>> out;
        for (const auto& r : retractions(s))
            for (const auto& z : set_.elements(r.target()))
                if (set_.act(r, z) == x && nondegenerate(r.target(), z)) out.push_back({r.target(), r, z});
        return out;
    }

private:
    const X& set_;
    std::map<LevelTree, std::vector<ThetaOperator>> retractions_;
    std::map<std::pair<LevelTree, E>, bool> nondegenerate_;
};

template <class X>
void check_reduction_model(const X& set, int max_dim, const std::string& name, SuiteReport& r) {
    BruteReducer<X> brute(set);
    for (const auto& s : trees_up_to(set.level(), max_dim)) {
        r.expect(keys_of(brute.retractions(s)) == keys_of(retractions_from(s, set.level())),
                 name + ": retraction list of " + render(s));
        for (const auto& x : set.elements(s)) {
            const auto what = name + ": " + render(s) + " " + set.describe(x);
            const auto cores = brute.cores(s, x);
            r.expect(cores.size() == 1, what + " has " + std::to_string(cores.size()) + " non-degenerate cores");
            if (cores.size() != 1) continue;
            const auto fast = reduce_element(set, s, x);
            const auto generic = reduce_generic(set, s, x);
            for (const auto* red : {&fast, &generic}) {
                r.expect(red->tree == cores[0].tree && red->degeneracy == cores[0].degeneracy &&
                             red->element == cores[0].element,
                         what + " reduces differently from the brute-force core");
            }
            const bool nd = brute.nondegenerate(s, x);
            r.expect(is_nondegenerate(set, s, x) == nd, what + ": fast non-degeneracy test");
            r.expect(is_nondegenerate_generic(set, s, x) == nd, what + ": codimension-one non-degeneracy test");
            r.expect(set.act(fast.degeneracy, fast.element) == x, what + ": degeneracy does not rebuild the element");
        }
    }
}

FiniteAbelianGroup cyclic(int p) { return FiniteAbelianGroup({p}); }

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Runs body, turning library exceptions into recorded failures.
void guarded(SuiteReport& r, const std::string& what, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.expect(false, what + ": " + e.what());
    }
}

}  // namespace

// ---------------------------------------------------------------------------

void SuiteReport::expect(bool condition, const std::string& what) {
    ++checks;
    if (condition) return;
    ++failed;
    if (failures.size() < kKeptFailures) failures.push_back(what);
}

void SuiteReport::merge(const SuiteReport& other) {
    checks += other.checks;
    failed += other.failed;
    for (const auto& f : other.failures)
        if (failures.size() < kKeptFailures) failures.push_back(f);
}

OperatorSample::OperatorSample(int level, int max_edges) : level_(level), trees_(trees_up_to(level, max_edges)) {
    for (std::size_t i = 0; i < trees_.size(); ++i) tree_ids_.emplace(trees_[i], i);
    hom_.assign(trees_.size(), std::vector<std::vector<int>>(trees_.size()));
    for (std::size_t a = 0; a < trees_.size(); ++a) {
        for (std::size_t b = 0; b < trees_.size(); ++b) {
            for (auto& f : hom_theta(trees_[a], trees_[b], level_)) {
                const int id = static_cast<int>(ops_.size());
                by_key_.emplace(to_string(f), id);
                ops_.push_back(std::move(f));
                src_.push_back(a);
                tgt_.push_back(b);
                hom_[a][b].push_back(id);
            }
        }
    }
}

std::size_t OperatorSample::tree_index(const LevelTree& t) const {
    auto it = tree_ids_.find(t);
    if (it == tree_ids_.end()) throw ArgumentError("tree outside the sample: " + render(t));
    return it->second;
}

std::optional<int> OperatorSample::find(const ThetaOperator& f) const {
    auto it = by_key_.find(to_string(f));
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

int OperatorSample::compose(int g, int f) {
    auto key = std::make_pair(g, f);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    auto c = compose_theta(ops_[static_cast<std::size_t>(g)], ops_[static_cast<std::size_t>(f)]);
    auto id = find(c);
    if (!id) throw InvariantViolation("composite left the sample: " + to_string(c));
    table_.emplace(key, *id);
    return *id;
}

// --- wreath laws -------------------------------------------------------------

void check_composition_laws(OperatorSample& s, SuiteReport& r) {
    const auto n = s.trees().size();
    std::vector<int> ids(n);
    for (std::size_t a = 0; a < n; ++a) {
        auto id = s.find(identity_theta(s.trees()[a], s.level()));
        r.expect(id.has_value(), "identity missing from hom-set of " + render(s.trees()[a]));
        ids[a] = id.value_or(-1);
    }
    const auto total = static_cast<int>(s.operators().size());
    for (int f = 0; f < total; ++f) {
        const auto a = s.source_index(f);
        const auto b = s.target_index(f);
        if (ids[a] < 0 || ids[b] < 0) continue;
        r.expect(s.compose(ids[b], f) == f && s.compose(f, ids[a]) == f,
                 "identity law fails for " + to_string(s.operators()[static_cast<std::size_t>(f)]));
        for (std::size_t c = 0; c < n; ++c) {
            for (int g : s.hom(b, c)) {
                const int gf = s.compose(g, f);
                for (std::size_t d = 0; d < n; ++d) {
                    for (int h : s.hom(c, d)) {
                        if (s.compose(h, gf) != s.compose(s.compose(h, g), f))
                            r.expect(false, "associativity fails at h=" + std::to_string(h) + " g=" +
                                                std::to_string(g) + " f=" + std::to_string(f));
                        else
                            ++r.checks;
                    }
                }
            }
        }
    }
}

void check_composition_oracle(OperatorSample& s, SuiteReport& r) {
    const auto total = static_cast<int>(s.operators().size());
    std::vector<Flat> flat;
    for (const auto& f : s.operators()) flat.push_back(flatten(f));
    for (int f = 0; f < total; ++f) {
        const auto b = s.target_index(f);
        for (std::size_t c = 0; c < s.trees().size(); ++c) {
            for (int g : s.hom(b, c)) {
                auto expected = compose_flat(flat[static_cast<std::size_t>(g)], flat[static_cast<std::size_t>(f)]);
                r.expect(expected.has_value() && *expected == flat[static_cast<std::size_t>(s.compose(g, f))],
                         "component-wise composite disagrees for g=" +
                             to_string(s.operators()[static_cast<std::size_t>(g)]) +
                             " f=" + to_string(s.operators()[static_cast<std::size_t>(f)]));
            }
        }
    }
}

void check_hom_counts(const OperatorSample& s, SuiteReport& r) {
    for (std::size_t a = 0; a < s.trees().size(); ++a) {
        for (std::size_t b = 0; b < s.trees().size(); ++b) {
            const auto& S = s.trees()[a];
            const auto& T = s.trees()[b];
            const auto size = static_cast<long long>(s.hom(a, b).size());
            std::set<std::string> distinct;
            for (int f : s.hom(a, b)) distinct.insert(to_string(s.operators()[static_cast<std::size_t>(f)]));
            r.expect(size == brute_hom_count(S, T, s.level()) && size == hom_theta_count(S, T, s.level()) &&
                         static_cast<long long>(distinct.size()) == size,
                     "hom-set size mismatch for " + render(S) + " -> " + render(T));
            if (T.edges() == 0) r.expect(size == 1, "hom into the point is not a singleton from " + render(S));
        }
    }
}

void check_embedding(int level, int max_edges, SuiteReport& r) {
    const auto trees = trees_up_to(level, max_edges);
    for (const auto& S : trees) {
        for (const auto& T : trees) {
            const auto low = hom_theta(S, T, level);
            r.expect(static_cast<long long>(low.size()) == hom_theta_count(S, T, level + 1),
                     "embedding changes hom size for " + render(S) + " -> " + render(T));
            if (S.edges() + T.edges() > 5) continue;
            const auto high = keys_of(hom_theta(S, T, level + 1));
            for (const auto& f : low) {
                const auto e = embed(f);
                r.expect(high.count(to_string(e)) == 1 && classify_theta(e) == classify_theta(f),
                         "embedding does not preserve " + to_string(f));
            }
        }
    }
}

void check_dimension_law(int max_level, int max_edges, SuiteReport& r) {
    for (int n = 1; n <= max_level; ++n) {
        for (int e = 0; e <= max_edges; ++e) {
            for (const auto& t : enumerate_trees(n, e)) {
                const auto text = render(t);
                const auto brackets = std::count(text.begin(), text.end(), '[');
                r.expect(dim_theta(t) == e && t.edges() == e && brackets - 1 == e, "dimension law fails on " + text);
            }
        }
    }
}

void check_closure(OperatorSample& s, SuiteReport& r) {
    const auto total = static_cast<int>(s.operators().size());
    std::vector<char> mono(static_cast<std::size_t>(total));
    std::vector<char> retraction(static_cast<std::size_t>(total));
    for (int f = 0; f < total; ++f) {
        mono[static_cast<std::size_t>(f)] = is_mono(s.operators()[static_cast<std::size_t>(f)]);
        retraction[static_cast<std::size_t>(f)] = is_retraction(s.operators()[static_cast<std::size_t>(f)]);
    }
    for (int f = 0; f < total; ++f) {
        for (std::size_t c = 0; c < s.trees().size(); ++c) {
            for (int g : s.hom(s.target_index(f), c)) {
                const auto gf = static_cast<std::size_t>(s.compose(g, f));
                const auto fu = static_cast<std::size_t>(f);
                const auto gu = static_cast<std::size_t>(g);
                if (mono[fu] && mono[gu]) r.expect(mono[gf], "faces do not compose to a face");
                if (retraction[fu] && retraction[gu]) r.expect(retraction[gf], "retractions do not compose to a retraction");
            }
        }
    }
}

void check_diagonal(SuiteReport& r) {
    // Level 1: the diagonal is the operator itself.
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& f : hom_delta(a, b)) {
                const auto d = from_delta(f);
                r.expect(d.phi() == f && d.level() == 1 && d.source() == LevelTree::corolla(a),
                         "diagonal at level 1 differs from " + to_string(f));
            }
    struct Chain {
        SimplicialOperator f;
        SimplicialOperator g;
    };
    auto chains = [](int max) {
        std::vector<Chain> out;
        for (int a = 0; a <= max; ++a)
            for (int b = 0; b <= max; ++b)
                for (int c = 0; c <= max; ++c)
                    for (const auto& f : hom_delta(a, b))
                        for (const auto& g : hom_delta(b, c)) out.push_back({f, g});
        return out;
    };
    const auto outer = chains(2);
    const auto inner = chains(1);
    for (const auto& x : outer) {
        for (const auto& y : inner) {
            const SimplicialOperator fs[2] = {x.f, y.f};
            const SimplicialOperator gs[2] = {x.g, y.g};
            const SimplicialOperator gfs[2] = {compose_delta(x.g, x.f), compose_delta(y.g, y.f)};
            r.expect(diagonal(gfs) == compose_theta(diagonal(gs), diagonal(fs)),
                     "diagonal is not functorial at (" + to_string(x.f) + ", " + to_string(y.f) + ")");
        }
    }
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                const SimplicialOperator ids[3] = {SimplicialOperator::identity(a), SimplicialOperator::identity(b),
                                                   SimplicialOperator::identity(c)};
                const auto d = diagonal(ids);
                r.expect(is_identity(d) && d.source() == homogeneous_tree({a, b, c}),
                         "diagonal of identities is not the identity on the homogeneous tree");
            }
}

void check_random_composition(int level, int max_edges, int samples, std::uint64_t seed, SuiteReport& r) {
    const auto trees = trees_up_to(level, max_edges);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ThetaOperator>> homs;
    auto hom = [&](std::size_t a, std::size_t b) -> const std::vector<ThetaOperator>& {
        auto key = std::make_pair(a, b);
        auto it = homs.find(key);
        if (it == homs.end()) it = homs.emplace(key, hom_theta(trees[a], trees[b], level)).first;
        return it->second;
    };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_tree(0, trees.size() - 1);
    auto pick = [&](const std::vector<ThetaOperator>& v) -> const ThetaOperator& {
        std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
        return v[d(rng)];
    };
    for (int i = 0; i < samples; ++i) {
        const std::size_t a = pick_tree(rng), b = pick_tree(rng), c = pick_tree(rng), d = pick_tree(rng);
        const auto& f = pick(hom(a, b));
        const auto& g = pick(hom(b, c));
        const auto& h = pick(hom(c, d));
        const auto what = " at sample " + std::to_string(i) + " (seed " + std::to_string(seed) + ")";
        guarded(r, "random composition" + what, [&] {
            const auto gf = compose_theta(g, f);
            r.expect(compose_theta(h, gf) == compose_theta(compose_theta(h, g), f), "associativity" + what);
            r.expect(compose_theta(identity_theta(trees[b], level), f) == f &&
                         compose_theta(f, identity_theta(trees[a], level)) == f,
                     "identity law" + what);
            auto flat = compose_flat(flatten(g), flatten(f));
            r.expect(flat && *flat == flatten(gf), "component-wise composite" + what);
            r.expect(gamma_n(gf) == compose_gamma(gamma_n(g), gamma_n(f)), "gamma functoriality" + what);
            const auto rf = reedy_factor(gf);
            r.expect(compose_theta(rf.face, rf.degeneracy) == gf && is_retraction(rf.degeneracy) && is_mono(rf.face),
                     "Reedy factorisation" + what);
        });
    }
}

// --- factorisation -------------------------------------------------------------

void check_reedy_uniqueness(OperatorSample& s, SuiteReport& r) {
    const auto total = static_cast<int>(s.operators().size());
    const auto n = s.trees().size();
    std::vector<char> mono(static_cast<std::size_t>(total));
    for (int f = 0; f < total; ++f) mono[static_cast<std::size_t>(f)] = is_mono(s.operators()[static_cast<std::size_t>(f)]);
    std::vector<std::vector<int>> retractions(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<ThetaOperator> found;
        for (std::size_t c = 0; c < n; ++c)
            for (int f : s.hom(a, c))
                if (is_retraction(s.operators()[static_cast<std::size_t>(f)])) {
                    retractions[a].push_back(f);
                    found.push_back(s.operators()[static_cast<std::size_t>(f)]);
                }
        r.expect(keys_of(found) == keys_of(retractions_from(s.trees()[a], s.level())),
                 "retractions_from disagrees with filtered hom-sets at " + render(s.trees()[a]));
    }
    for (int f = 0; f < total; ++f) {
        const auto a = s.source_index(f);
        const auto b = s.target_index(f);
        const auto& op = s.operators()[static_cast<std::size_t>(f)];
        std::vector<std::pair<int, int>> found;
        for (int rt : retractions[a]) {
            for (int m : s.hom(s.target_index(rt), b)) {
                if (mono[static_cast<std::size_t>(m)] && s.compose(m, rt) == f) found.emplace_back(rt, m);
            }
        }
        const auto rf = reedy_factor(op);
        const bool unique = found.size() == 1 &&
                            s.operators()[static_cast<std::size_t>(found[0].first)] == rf.degeneracy &&
                            s.operators()[static_cast<std::size_t>(found[0].second)] == rf.face;
        r.expect(unique, "Reedy factorisation of " + to_string(op) + ": " + std::to_string(found.size()) +
                             " retraction/mono pairs");
    }
}

void check_mono_cancellation(OperatorSample& s, SuiteReport& r) {
    const auto total = static_cast<int>(s.operators().size());
    for (int f = 0; f < total; ++f) {
        const auto b = s.source_index(f);
        bool cancels = true;
        for (std::size_t a = 0; a < s.trees().size() && cancels; ++a) {
            std::set<int> images;
            for (int g : s.hom(a, b)) images.insert(s.compose(f, g));
            cancels = images.size() == s.hom(a, b).size();
        }
        r.expect(cancels == is_mono(s.operators()[static_cast<std::size_t>(f)]),
                 "mono test disagrees with left cancellation on " + to_string(s.operators()[static_cast<std::size_t>(f)]));
    }
}

void check_inner_outer(OperatorSample& s, SuiteReport& r) {
    const auto total = static_cast<int>(s.operators().size());
    std::vector<char> inner(static_cast<std::size_t>(total));
    std::vector<char> outer(static_cast<std::size_t>(total));
    for (int f = 0; f < total; ++f) {
        inner[static_cast<std::size_t>(f)] = is_inner_face(s.operators()[static_cast<std::size_t>(f)]);
        outer[static_cast<std::size_t>(f)] = is_outer_face(s.operators()[static_cast<std::size_t>(f)]);
    }
    for (int f = 0; f < total; ++f) {
        const auto& op = s.operators()[static_cast<std::size_t>(f)];
        const auto kind = classify_theta(op);
        const bool mono = is_mono(op);
        const auto rf = reedy_factor(op);
        r.expect((kind == ThetaKind::degeneracy) == (!mono && is_identity(rf.face)) &&
                     (kind == ThetaKind::mixed) == (!mono && !is_identity(rf.face)) &&
                     (kind == ThetaKind::inner_face) == (inner[static_cast<std::size_t>(f)] && !is_identity(op)) &&
                     (kind == ThetaKind::outer_face) ==
                         (outer[static_cast<std::size_t>(f)] && !inner[static_cast<std::size_t>(f)]),
                 "classification inconsistent for " + to_string(op));
        if (!mono) continue;
        const auto split = factor_cover_outer(op);
        r.expect(compose_theta(split.outer, split.cover) == op && is_inner_face(split.cover) &&
                     is_outer_face(split.outer),
                 "inner/outer factorisation fails for " + to_string(op));
        const auto a = s.source_index(f);
        const auto b = s.target_index(f);
        int count = 0;
        for (std::size_t u = 0; u < s.trees().size(); ++u)
            for (int c : s.hom(a, u)) {
                if (!inner[static_cast<std::size_t>(c)]) continue;
                for (int o : s.hom(u, b))
                    if (outer[static_cast<std::size_t>(o)] && s.compose(o, c) == f) ++count;
            }
        r.expect(count == 1, "face " + to_string(op) + " has " + std::to_string(count) + " inner/outer factorisations");
    }
}

void check_reduce_uniqueness(SuiteReport& r) {
    check_reduction_model(em_set(cyclic(2), 2), 5, "K(Z/2,2)", r);
    check_reduction_model(em_set(cyclic(3), 1), 4, "K(Z/3,1)", r);
    check_reduction_model(em_set(cyclic(2), 3), 4, "K(Z/2,3)", r);
    check_reduction_model(RepresentableProduct(LevelTree::corolla(1), LevelTree::corolla(2), 1), 3, "D[1]xD[2]", r);
    check_reduction_model(Representable(parse_tree("[[[],[]]]"), 2), 3, "Theta_2[[[[],[]]]]", r);

    // The advertised non-degeneracy criterion for K(π,n).
    for (int n = 1; n <= 3; ++n) {
        const auto set = em_set(cyclic(3), n);
        for (const auto& t : trees_up_to(n, n + 2)) {
            for (const auto& x : set.elements(t)) {
                const bool shape = t.edges() == 0 || is_pruned(t, n);
                const bool labels = std::none_of(x.begin(), x.end(), [](int g) { return g == 0; });
                r.expect(is_nondegenerate_generic(set, t, x) == (shape && labels),
                         "non-degeneracy criterion fails on " + render(t) + " " + set.describe(x));
            }
        }
    }
}

// --- gamma -----------------------------------------------------------------------

void check_gamma_functoriality(OperatorSample& s, SuiteReport& r) {
    const auto total = static_cast<int>(s.operators().size());
    std::vector<GammaOperator> image;
    for (const auto& f : s.operators()) {
        image.push_back(gamma_n(f));
        const auto& g = image.back();
        r.expect(g.source() == count_at_height(f.source(), s.level()) && g.target() == count_at_height(f.target(), s.level()),
                 "gamma has wrong endpoints on " + to_string(f));
        if (is_identity(f)) r.expect(g == GammaOperator::identity(g.source()), "gamma of an identity");
        if (f.target().height() < s.level()) r.expect(g == GammaOperator::to_null(g.source()), "gamma into the null object");
    }
    for (int f = 0; f < total; ++f)
        for (std::size_t c = 0; c < s.trees().size(); ++c)
            for (int g : s.hom(s.target_index(f), c))
                r.expect(image[static_cast<std::size_t>(s.compose(g, f))] ==
                             compose_gamma(image[static_cast<std::size_t>(g)], image[static_cast<std::size_t>(f)]),
                         "gamma is not functorial at g=" + std::to_string(g) + " f=" + std::to_string(f));
}

void check_gamma_suspension(const OperatorSample& s, SuiteReport& r) {
    for (const auto& f : s.operators()) {
        const auto once = suspend(f);
        r.expect(gamma_n(once) == gamma_n(f) && gamma_n(suspend(once)) == gamma_n(f),
                 "suspension changes gamma on " + to_string(f));
        r.expect(once.source() == suspend_tree(f.source()) && once.target() == suspend_tree(f.target()),
                 "suspension has wrong endpoints on " + to_string(f));
    }
}

void check_em_action(std::uint64_t seed, SuiteReport& r) {
    // Exhaustive on small trees, all labellings.
    for (int n = 1; n <= 2; ++n) {
        OperatorSample s(n, 3);
        const auto set = em_set(cyclic(2), n);
        for (const auto& t : s.trees()) {
            const auto xs = set.elements(t);
            if (t.height() < n) r.expect(xs.size() == 1, "K(pi,n) is not reduced at " + render(t));
            const auto id = identity_theta(t, n);
            for (const auto& x : xs) r.expect(set.act(id, x) == x, "identity does not act trivially");
        }
        const auto total = static_cast<int>(s.operators().size());
        for (int f = 0; f < total; ++f)
            for (std::size_t c = 0; c < s.trees().size(); ++c)
                for (int g : s.hom(s.target_index(f), c)) {
                    const auto& fo = s.operators()[static_cast<std::size_t>(f)];
                    const auto& go = s.operators()[static_cast<std::size_t>(g)];
                    const auto& gf = s.operators()[static_cast<std::size_t>(s.compose(g, f))];
                    for (const auto& x : set.elements(s.trees()[c]))
                        r.expect(set.act(gf, x) == set.act(fo, set.act(go, x)), "action is not functorial");
                }
    }
    // Sampled on larger trees.
    std::mt19937_64 rng(seed);
    for (auto [n, edges] : {std::pair{2, 5}, std::pair{3, 4}}) {
        const auto set = em_set(cyclic(3), n);
        const auto trees = trees_up_to(n, edges);
        std::uniform_int_distribution<std::size_t> pick_tree(0, trees.size() - 1);
        for (int i = 0; i < 200; ++i) {
            const auto& a = trees[pick_tree(rng)];
            const auto& b = trees[pick_tree(rng)];
            const auto& c = trees[pick_tree(rng)];
            const auto fs = hom_theta(a, b, n);
            const auto gs = hom_theta(b, c, n);
            const auto& f = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
            const auto& g = gs[std::uniform_int_distribution<std::size_t>(0, gs.size() - 1)(rng)];
            Labels x;
            for (int k = count_at_height(c, n); k > 0; --k) x.push_back(std::uniform_int_distribution<int>(0, 2)(rng));
            r.expect(set.act(compose_theta(g, f), x) == set.act(f, set.act(g, x)),
                     "action is not functorial at sample " + std::to_string(i));
        }
    }
}

// --- chains ------------------------------------------------------------------------

void check_homology_vs_oracle(SuiteReport& r) {
    struct Case {
        const char* group;
        int n;
        int max_dim;
    };
    for (const auto& c : {Case{"z2", 1, 7}, Case{"z3", 1, 6}, Case{"z2", 2, 6}, Case{"z3", 2, 5}}) {
        const auto what = std::string("K(") + c.group + "," + std::to_string(c.n) + ")";
        guarded(r, what, [&] {
            const auto pi = FiniteAbelianGroup::parse(c.group);
            const auto theta = betti_numbers(chain_complex(em_set(pi, c.n), c.max_dim));
            const auto oracle = oracle_multisimplicial(pi, c.n, c.max_dim);
            r.expect(theta == oracle, what + ": Betti numbers " + join(theta) + " vs oracle " + join(oracle));
        });
    }
    guarded(r, "diagonal oracle", [&] {
        const auto pi = FiniteAbelianGroup::parse("z2");
        const auto diag = oracle_diagonal(pi, 4);
        const auto total = oracle_multisimplicial(pi, 2, 4);
        r.expect(diag == total, "diagonal and total-complex oracles disagree: " + join(diag) + " vs " + join(total));
    });
}

void check_em_property(SuiteReport& r) {
    for (const char* name : {"z2", "z3", "z4", "z2xz2"}) {
        const auto pi = FiniteAbelianGroup::parse(name);
        for (int n = 1; n <= 3; ++n) {
            const auto what = std::string("K(") + name + "," + std::to_string(n) + ")";
            guarded(r, what, [&] {
                const auto b = betti_numbers(chain_complex(em_set(pi, n), n + 1));
                bool ok = b.size() == static_cast<std::size_t>(n + 1) && b[0] == 1 &&
                          b[static_cast<std::size_t>(n)] == pi.two_rank();
                for (int k = 1; k < n && ok; ++k) ok = b[static_cast<std::size_t>(k)] == 0;
                r.expect(ok, what + ": Betti numbers " + join(b));
            });
        }
    }
}

void check_contractible_products(SuiteReport& r) {
    auto point_like = [](const std::vector<int>& b) {
        return !b.empty() && b[0] == 1 && std::all_of(b.begin() + 1, b.end(), [](int x) { return x == 0; });
    };
    auto expect_point = [&](const std::string& what, const std::vector<int>& b) {
        r.expect(point_like(b), what + " is not acyclic: " + join(b));
    };
    guarded(r, "products", [&] {
        expect_point("D[1]xD[1]", betti_numbers(chain_complex(RepresentableProduct(LevelTree::corolla(1), LevelTree::corolla(1), 1), 3)));
        expect_point("D[2]xD[1]", betti_numbers(chain_complex(RepresentableProduct(LevelTree::corolla(2), LevelTree::corolla(1), 1), 4)));
        expect_point("Theta_2[[[[]]]]xTheta_2[[[]]]",
                     betti_numbers(chain_complex(RepresentableProduct(parse_tree("[[[]]]"), parse_tree("[[]]"), 2), 4)));
        for (const char* t : {"[[[]]]", "[[[],[]]]", "[[[]],[]]", "[[[]],[[]]]"})
            expect_point(std::string("Theta_2[") + t + "]",
                         betti_numbers(chain_complex(Representable(parse_tree(t), 2), parse_tree(t).edges() + 1)));
    });
}

// --- counting ----------------------------------------------------------------------------

void check_count_agreement(int max_level, const std::vector<int>& orders, int max_k, SuiteReport& r) {
    for (int n = 1; n <= max_level; ++n) {
        for (int p : orders) {
            const auto fib = fib_numbers(n, p, max_k);
            const auto gf = gf_coefficients(gf_em(n, p), n + max_k);
            r.expect(gf[0] == 1, "constant coefficient");
            for (int k = 1; k < n; ++k) r.expect(gf[static_cast<std::size_t>(k)] == 0, "coefficient below n");
            for (int k = 0; k <= max_k; ++k) {
                const auto enumerated = weighted_pruned_count(n, p, k);
                const auto& coeff = gf[static_cast<std::size_t>(n + k)];
                r.expect(fib[static_cast<std::size_t>(k)] == coeff && coeff == enumerated && coeff >= 0,
                         "count disagreement at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                             " k=" + std::to_string(k));
            }
        }
    }
}

void check_recursion_law(int max_level, const std::vector<int>& orders, int max_k, SuiteReport& r) {
    for (int n = 1; n <= max_level; ++n) {
        for (int p : orders) {
            std::vector<BigInt> f;
            for (int k = 0; k <= max_k + n; ++k) f.push_back(weighted_pruned_count(n, p, k));
            for (int k = 0; k <= max_k; ++k) {
                BigInt window = 0;
                for (int j = k; j < k + n; ++j) window += f[static_cast<std::size_t>(j)];
                r.expect((p - 1) * window == f[static_cast<std::size_t>(k + n)],
                         "recursion law fails at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                             " k=" + std::to_string(k));
            }
        }
    }
}

void check_euler(int max_level, int max_order, SuiteReport& r) {
    for (int n = 1; n <= max_level; ++n)
        for (int p = 2; p <= max_order; ++p)
            r.expect(euler_char(n, p) == expected_euler_char(n, p),
                     "Euler characteristic at n=" + std::to_string(n) + " p=" + std::to_string(p) + " is " +
                         format_rational(euler_char(n, p)));
}

void check_census_vs_counting(SuiteReport& r) {
    for (int n = 1; n <= 3; ++n) {
        for (int p : {2, 3, 4}) {
            const auto census = cell_census(em_set(cyclic(p), n), n + 8);
            const auto fib = fib_numbers(n, p, 8);
            bool ok = census[0] == 1;
            for (int d = 1; d < n; ++d) ok = ok && census[static_cast<std::size_t>(d)] == 0;
            for (int k = 0; k <= 8; ++k) ok = ok && BigInt(census[static_cast<std::size_t>(n + k)]) == fib[static_cast<std::size_t>(k)];
            r.expect(ok, "cell census of K(Z/" + std::to_string(p) + "," + std::to_string(n) + ") disagrees with the recursion");
        }
    }
}

void check_shuffles(int max_total, SuiteReport& r) {
    for (int m = 0; m <= max_total; ++m) {
        for (int n = 0; m + n <= max_total; ++n) {
            const RepresentableProduct prod(LevelTree::corolla(m), LevelTree::corolla(n), 1);
            const auto top = nondegenerate_cells(prod, m + n);
            long long binom = 1;
            for (int i = 1; i <= n; ++i) binom = binom * (m + i) / i;
            std::set<std::pair<std::vector<int>, std::vector<int>>> cells;
            for (const auto& c : top) cells.emplace(c.element.first.phi().values(), c.element.second.phi().values());
            std::set<std::pair<std::vector<int>, std::vector<int>>> shuffles;
            for (const auto& s : shuffle_trees(LevelTree::corolla(m), LevelTree::corolla(n)))
                shuffles.emplace(s.left_projection, s.right_projection);
            r.expect(static_cast<long long>(top.size()) == binom && cells == shuffles,
                     "top cells of D[" + std::to_string(m) + "]xD[" + std::to_string(n) + "]: " +
                         std::to_string(top.size()) + " vs " + std::to_string(binom));
            r.expect(nondegenerate_cells(prod, m + n + 1).empty(), "product has cells above its top dimension");
        }
    }
}

// --- suites --------------------------------------------------------------------------

SuiteReport verify_wreath_laws(std::uint64_t seed) {
    SuiteReport r;
    r.name = "wreath-laws";
    guarded(r, "wreath laws", [&] {
        OperatorSample s(2, 3);
        check_composition_laws(s, r);
        check_composition_oracle(s, r);
        check_hom_counts(s, r);
        check_closure(s, r);
        check_embedding(1, 4, r);
        check_embedding(2, 4, r);
        check_dimension_law(4, 8, r);
        check_diagonal(r);
        check_random_composition(3, 4, 500, seed, r);
    });
    return r;
}

SuiteReport verify_factorization(std::uint64_t seed) {
    SuiteReport r;
    r.name = "factorization";
    guarded(r, "factorization", [&] {
        for (int level : {1, 2}) {
            OperatorSample s(level, level == 1 ? 4 : 3);
            check_reedy_uniqueness(s, r);
            check_mono_cancellation(s, r);
            check_inner_outer(s, r);
        }
        check_reduce_uniqueness(r);
        check_random_composition(3, 4, 200, seed ^ 0x9e3779b97f4a7c15ULL, r);
    });
    return r;
}

SuiteReport verify_gamma_functor(std::uint64_t seed) {
    SuiteReport r;
    r.name = "gamma-functor";
    guarded(r, "gamma functor", [&] {
        for (int level : {1, 2}) {
            OperatorSample s(level, level == 1 ? 4 : 3);
            check_gamma_functoriality(s, r);
            check_gamma_suspension(s, r);
        }
        check_em_action(seed, r);
    });
    return r;
}

SuiteReport verify_chain() {
    SuiteReport r;
    r.name = "chain";
    check_homology_vs_oracle(r);
    check_em_property(r);
    check_contractible_products(r);
    return r;
}

SuiteReport verify_counts() {
    SuiteReport r;
    r.name = "counts";
    guarded(r, "counts", [&] {
        check_count_agreement(4, {2, 3, 4, 5}, 12, r);
        check_recursion_law(4, {2, 3, 5}, 12, r);
        check_euler(6, 7, r);
        check_census_vs_counting(r);
        check_shuffles(6, r);
    });
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"wreath-laws", "factorization", "gamma-functor", "chain", "counts", "all"};
    return names;
}

std::optional<std::vector<SuiteReport>> run_suite(const std::string& name, std::uint64_t seed) {
    std::vector<SuiteReport> out;
    const bool all = name == "all";
    if (all || name == "wreath-laws") out.push_back(verify_wreath_laws(seed));
    if (all || name == "factorization") out.push_back(verify_factorization(seed));
    if (all || name == "gamma-functor") out.push_back(verify_gamma_functor(seed));
    if (all || name == "chain") out.push_back(verify_chain());
    if (all || name == "counts") out.push_back(verify_counts());
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace theta
