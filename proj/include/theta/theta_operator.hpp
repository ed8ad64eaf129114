#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "theta/gamma.hpp"
#include "theta/level_tree.hpp"
#include "theta/simplex.hpp"

namespace theta {

/**
 * Operator S -> T of Θ_n = Δ≀Θ_{n-1}.
 *
 * A pair (phi; components) where phi: [|S|] -> [|T|] acts on root branches
 * and components[i-1][idx] is a level n-1 operator from branch S_i to branch
 * T_k with k = phi(i-1) + 1 + idx, i.e. k runs over the block of i.
 *
 * Level 0 is the terminal category: its single operator lives on "[]".
 * Level 1 operators therefore carry the (unique) level-0 operator in every
 * block slot, which keeps every recursion uniform.
 */
class ThetaOperator {
public:
    /// The unique level-0 operator.
    ThetaOperator();
    /// Validates the block structure and component endpoints; throws ShapeError.
    ThetaOperator(int level, LevelTree source, LevelTree target, SimplicialOperator phi,
                  std::vector<std::vector<ThetaOperator>> components);

    int level() const noexcept { return level_; }
    const LevelTree& source() const noexcept { return source_; }
    const LevelTree& target() const noexcept { return target_; }
    const SimplicialOperator& phi() const noexcept { return phi_; }
    const std::vector<std::vector<ThetaOperator>>& components() const noexcept { return components_; }
    /// Component from branch i (1-based) to target branch k (1-based, in the block of i).
    const ThetaOperator& component(int i, int k) const;

    friend bool operator==(const ThetaOperator&, const ThetaOperator&) = default;
    friend std::strong_ordering operator<=>(const ThetaOperator& a, const ThetaOperator& b);

private:
    int level_ = 0;
    LevelTree source_;
    LevelTree target_;
    SimplicialOperator phi_;
    std::vector<std::vector<ThetaOperator>> components_;
};

/// Compact single-line encoding, suitable as a map key and for messages.
std::string to_string(const ThetaOperator& f);

ThetaOperator identity_theta(const LevelTree& t, int level);

/// g ∘ f. Throws CompositionError on level or endpoint mismatch.
ThetaOperator compose_theta(const ThetaOperator& g, const ThetaOperator& f);

/// The full hom-set, ordered by phi (lexicographically) then by components.
std::vector<ThetaOperator> hom_theta(const LevelTree& s, const LevelTree& t, int level);

/// Size of the hom-set, without materialising it.
long long hom_theta_count(const LevelTree& s, const LevelTree& t, int level);

bool is_identity(const ThetaOperator& f);

/// phi surjective and every block empty or a singleton carrying a retraction.
bool is_retraction(const ThetaOperator& f);

/// All retractions out of s (identity included), generated directly.
std::vector<ThetaOperator> retractions_from(const LevelTree& s, int level);

/// A right inverse s of the retraction r (r ∘ s = id). Throws ArgumentError otherwise.
ThetaOperator section_of(const ThetaOperator& r);

/// The operator s -> t sending everything to the first vertex at every level.
ThetaOperator constant_map(const LevelTree& s, const LevelTree& t, int level);

/// Monos s >-> t with dim(s) = dim(t) - 1, over every s of height <= level.
std::vector<ThetaOperator> codim_one_monos(const LevelTree& t, int level);

struct JointFactorisation {
    ThetaOperator retraction;           // s -> s'
    std::vector<ThetaOperator> maps;    // s' -> targets, jointly non-degenerate
};

/**
 * Factors a family of operators out of a common source through the largest
 * retraction they all factor through. With a single operator this is the
 * Reedy factorisation; with several it reduces elements of products of
 * representables.
 */
JointFactorisation joint_factor(const LevelTree& source, int level, std::span<const ThetaOperator> maps);

struct ReedyFactorisation {
    ThetaOperator degeneracy;
    ThetaOperator face;
};

/// f = face ∘ degeneracy with degeneracy a retraction and face monic.
ReedyFactorisation reedy_factor(const ThetaOperator& f);

/// Monic, decided as: the degeneracy part of the Reedy factorisation is an identity.
bool is_mono(const ThetaOperator& f);

/// Composite of inner faces and degeneracies: phi preserves endpoints and every component is a cover.
bool is_cover(const ThetaOperator& f);

/// phi steps by one and every component is an outer face.
bool is_outer_face(const ThetaOperator& f);

bool is_inner_face(const ThetaOperator& f);

struct CoverOuterFactorisation {
    ThetaOperator cover;
    ThetaOperator outer;
};

/// f = outer ∘ cover. On a face operator, cover is the inner part.
CoverOuterFactorisation factor_cover_outer(const ThetaOperator& f);

enum class ThetaKind { identity, degeneracy, inner_face, outer_face, face, mixed };

/// "face" is a monic operator that is neither inner nor outer; "mixed" has
/// non-trivial degeneracy and face parts.
ThetaKind classify_theta(const ThetaOperator& f);
std::string to_string(ThetaKind k);

/// Recursive wreath dimension: m + dim(S_1) + ... + dim(S_m).
int dim_theta(const LevelTree& t);

/// The assembly functor Θ_n -> Γ on height-n vertex sets (planar order).
GammaOperator gamma_n(const ThetaOperator& f);

/// σ_n: S -> (S), f -> (id_[1]; f).
ThetaOperator suspend(const ThetaOperator& f);

/// i_n: the same operator viewed one level up.
ThetaOperator embed(const ThetaOperator& f);

/// δ_n: Δ^n -> Θ_n, fs[0] acting at the root, fs[1] one level up, and so on.
ThetaOperator diagonal(std::span<const SimplicialOperator> fs);

/// Level-1 operator carrying a simplicial operator.
ThetaOperator from_delta(const SimplicialOperator& f);

}  // namespace theta
