#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace theta {

/// Monotone map [m] -> [n], stored as its full value list.
class SimplicialOperator {
public:
    SimplicialOperator() : values_{0} {}
    /// Throws ArgumentError unless values are weakly increasing in 0..target.
    SimplicialOperator(int target, std::vector<int> values);

    static SimplicialOperator identity(int m);
    /// The map [0] -> [n] picking j.
    static SimplicialOperator point(int n, int j);

    int source() const noexcept { return static_cast<int>(values_.size()) - 1; }
    int target() const noexcept { return target_; }
    const std::vector<int>& values() const noexcept { return values_; }
    int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

    bool is_identity() const noexcept;
    bool is_injective() const noexcept;
    bool is_surjective() const noexcept;
    /// Preserves minimal and maximal elements.
    bool preserves_endpoints() const noexcept;
    /// Consecutive values step by exactly one.
    bool steps_by_one() const noexcept;

    friend bool operator==(const SimplicialOperator&, const SimplicialOperator&) = default;
    friend auto operator<=>(const SimplicialOperator&, const SimplicialOperator&) = default;

private:
    int target_ = 0;
    std::vector<int> values_;
};

std::string to_string(const SimplicialOperator& f);

/// g ∘ f. Throws CompositionError if target(f) != source(g).
SimplicialOperator compose_delta(const SimplicialOperator& g, const SimplicialOperator& f);

struct EpiMono {
    SimplicialOperator epi;
    SimplicialOperator mono;
};

/// The unique factorisation f = mono ∘ epi.
EpiMono factor_epi_mono(const SimplicialOperator& f);

enum class DeltaKind { iso, face, degeneracy, mixed };

struct DeltaClass {
    DeltaKind kind;
    bool inner;  // f(0) = 0 and f(m) = n
    bool outer;  // unit steps
};

DeltaClass classify_delta(const SimplicialOperator& f);

struct CoverImmersion {
    SimplicialOperator cover;      // endpoint-preserving part
    SimplicialOperator immersion;  // unit-step translation
};

/// f = immersion ∘ cover. For a face this is the inner/outer factorisation.
CoverImmersion factor_cover_immersion(const SimplicialOperator& f);

/// All monotone maps [m] -> [n] in lexicographic order of value lists.
std::vector<SimplicialOperator> hom_delta(int m, int n);

/// The block {k | f(i-1) < k <= f(i)} as a half-open range (lo, hi].
inline std::pair<int, int> block(const SimplicialOperator& f, int i) { return {f(i - 1), f(i)}; }

}  // namespace theta
