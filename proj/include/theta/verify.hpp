#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta/theta_operator.hpp"

namespace theta {

/// Outcome of a batch of property checks. Only the first few failures are kept verbatim.
struct SuiteReport {
    std::string name;
    long long checks = 0;
    long long failed = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failed == 0; }
    void expect(bool condition, const std::string& what);
    void merge(const SuiteReport& other);
};

/**
 * Every tree of height <= level with at most max_edges edges, and every
 * operator between them, numbered, with a composition table.
 */
class OperatorSample {
public:
    OperatorSample(int level, int max_edges);

    int level() const noexcept { return level_; }
    const std::vector<LevelTree>& trees() const noexcept { return trees_; }
    const std::vector<ThetaOperator>& operators() const noexcept { return ops_; }
    /// Operator ids from trees()[a] to trees()[b].
    const std::vector<int>& hom(std::size_t a, std::size_t b) const { return hom_[a][b]; }
    std::size_t tree_index(const LevelTree& t) const;
    std::size_t source_index(int op) const { return src_[static_cast<std::size_t>(op)]; }
    std::size_t target_index(int op) const { return tgt_[static_cast<std::size_t>(op)]; }
    /// Id of g ∘ f (computed lazily, then cached).
    int compose(int g, int f);
    std::optional<int> find(const ThetaOperator& f) const;

private:
    int level_;
    std::vector<LevelTree> trees_;
    std::map<LevelTree, std::size_t> tree_ids_;
    std::vector<ThetaOperator> ops_;
    std::vector<std::size_t> src_;
    std::vector<std::size_t> tgt_;
    std::vector<std::vector<std::vector<int>>> hom_;
    std::map<std::string, int> by_key_;
    std::map<std::pair<int, int>, int> table_;
};

// Individual checks. Each appends to the report it is given.
void check_composition_laws(OperatorSample& sample, SuiteReport& r);
void check_composition_oracle(OperatorSample& sample, SuiteReport& r);
void check_hom_counts(const OperatorSample& sample, SuiteReport& r);
void check_embedding(int level, int max_edges, SuiteReport& r);
void check_dimension_law(int max_level, int max_edges, SuiteReport& r);
void check_closure(OperatorSample& sample, SuiteReport& r);
void check_diagonal(SuiteReport& r);
void check_random_composition(int level, int max_edges, int samples, std::uint64_t seed, SuiteReport& r);

void check_reedy_uniqueness(OperatorSample& sample, SuiteReport& r);
void check_mono_cancellation(OperatorSample& sample, SuiteReport& r);
void check_inner_outer(OperatorSample& sample, SuiteReport& r);
void check_reduce_uniqueness(SuiteReport& r);

void check_gamma_functoriality(OperatorSample& sample, SuiteReport& r);
void check_gamma_suspension(const OperatorSample& sample, SuiteReport& r);
void check_em_action(std::uint64_t seed, SuiteReport& r);

void check_homology_vs_oracle(SuiteReport& r);
void check_em_property(SuiteReport& r);
void check_contractible_products(SuiteReport& r);

void check_count_agreement(int max_level, const std::vector<int>& orders, int max_k, SuiteReport& r);
void check_recursion_law(int max_level, const std::vector<int>& orders, int max_k, SuiteReport& r);
void check_euler(int max_level, int max_order, SuiteReport& r);
void check_census_vs_counting(SuiteReport& r);
void check_shuffles(int max_total, SuiteReport& r);

SuiteReport verify_wreath_laws(std::uint64_t seed);
SuiteReport verify_factorization(std::uint64_t seed);
SuiteReport verify_gamma_functor(std::uint64_t seed);
SuiteReport verify_chain();
SuiteReport verify_counts();

const std::vector<std::string>& suite_names();
/// nullopt for an unknown suite name; "all" runs every suite.
std::optional<std::vector<SuiteReport>> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace theta
