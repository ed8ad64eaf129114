#include "theta/simplex.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

SimplicialOperator::SimplicialOperator(int target, std::vector<int> values)
    : target_(target), values_(std::move(values)) {
    if (values_.empty()) throw ArgumentError("simplicial operator needs at least one value");
    if (target_ < 0) throw ArgumentError("simplicial operator target must be >= 0");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0 || values_[i] > target_)
            throw ArgumentError("simplicial operator value out of range: " + to_string(*this));
        if (i && values_[i] < values_[i - 1])
            throw ArgumentError("simplicial operator not monotone: " + to_string(*this));
    }
}

SimplicialOperator SimplicialOperator::identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i) v[static_cast<std::size_t>(i)] = i;
    return SimplicialOperator(m, std::move(v));
}

SimplicialOperator SimplicialOperator::point(int n, int j) { return SimplicialOperator(n, {j}); }

bool SimplicialOperator::is_identity() const noexcept {
    if (source() != target_) return false;
    for (int i = 0; i <= target_; ++i)
        if (values_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

bool SimplicialOperator::is_injective() const noexcept {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] == values_[i - 1]) return false;
    return true;
}

bool SimplicialOperator::is_surjective() const noexcept {
    if (values_.front() != 0 || values_.back() != target_) return false;
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] - values_[i - 1] > 1) return false;
    return true;
}

bool SimplicialOperator::preserves_endpoints() const noexcept {
    return values_.front() == 0 && values_.back() == target_;
}

bool SimplicialOperator::steps_by_one() const noexcept {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] != values_[i - 1] + 1) return false;
    return true;
}

std::string to_string(const SimplicialOperator& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f.values()[i]);
    }
    s += "):[" + std::to_string(f.source()) + "]->[" + std::to_string(f.target()) + "]";
    return s;
}

SimplicialOperator compose_delta(const SimplicialOperator& g, const SimplicialOperator& f) {
    if (f.target() != g.source())
        throw CompositionError("compose_delta: " + to_string(g) + " after " + to_string(f));
    std::vector<int> v;
    v.reserve(f.values().size());
    for (int x : f.values()) v.push_back(g(x));
    return SimplicialOperator(g.target(), std::move(v));
}

EpiMono factor_epi_mono(const SimplicialOperator& f) {
    std::vector<int> image;
    std::vector<int> epi;
    for (int x : f.values()) {
        if (image.empty() || image.back() != x) image.push_back(x);
        epi.push_back(static_cast<int>(image.size()) - 1);
    }
    const int k = static_cast<int>(image.size()) - 1;
    return {SimplicialOperator(k, std::move(epi)), SimplicialOperator(f.target(), std::move(image))};
}

DeltaClass classify_delta(const SimplicialOperator& f) {
    DeltaKind kind;
    if (f.is_identity()) {
        kind = DeltaKind::iso;
    } else if (f.is_injective()) {
        kind = DeltaKind::face;
    } else if (f.is_surjective()) {
        kind = DeltaKind::degeneracy;
    } else {
        kind = DeltaKind::mixed;
    }
    return {kind, f.preserves_endpoints(), f.steps_by_one()};
}

CoverImmersion factor_cover_immersion(const SimplicialOperator& f) {
    const int lo = f.values().front();
    const int hi = f.values().back();
    std::vector<int> shifted;
    for (int x : f.values()) shifted.push_back(x - lo);
    std::vector<int> translation;
    for (int j = 0; j <= hi - lo; ++j) translation.push_back(j + lo);
    return {SimplicialOperator(hi - lo, std::move(shifted)),
            SimplicialOperator(f.target(), std::move(translation))};
}

std::vector<SimplicialOperator> hom_delta(int m, int n) {
    if (m < 0 || n < 0) throw ArgumentError("hom_delta: negative ordinal");
    std::vector<SimplicialOperator> out;
    std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
    // Lexicographic backtracking over weakly increasing sequences.
    while (true) {
        out.emplace_back(n, v);
        int i = m;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == n) --i;
        if (i < 0) break;
        const int next = v[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j <= m; ++j) v[static_cast<std::size_t>(j)] = next;
    }
    return out;
}

}  // namespace theta
