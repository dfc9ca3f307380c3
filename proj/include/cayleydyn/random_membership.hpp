#pragma once

#include <vector>

#include "cayleydyn/element_set.hpp"
#include "cayleydyn/group_context.hpp"
#include "cayleydyn/rng.hpp"
#include "cayleydyn/subgroup_tree.hpp"

namespace cayleydyn {

struct SampleConfig {
    uint64_t seed = 0;
    long long sample_count = 0;  // 0 = auto: ceil(|G| * (ln|G| + 5))
    double delta_fail = 0.01;    // target for the coupon-collector coverage bound
    int budget_exponent = 3;     // c: enumerate accepts at most ceil(log2 n)^c generators
};

long long default_sample_count(int group_order);

/// Pr[some element of a subgroup of the given size is missed by s samples].
double coverage_failure_bound(int subgroup_size, long long samples);

enum class ChangeKind { Insert, Delete };

/// Insert/delete buffers relative to a committed snapshot generating set.
struct ChangeBuffer {
    ElementSet snapshot;
    ElementSet inserts;
    ElementSet deletes;

    explicit ChangeBuffer(int universe = 0)
        : snapshot(universe), inserts(universe), deletes(universe) {}

    int pending() const { return inserts.count() + deletes.count(); }
};

/// Buffer semantics: an insert cancels a pending delete, a delete cancels a
/// pending insert, inserting a snapshot member and deleting a non-member are
/// no-ops. Keeps inserts disjoint from the snapshot and deletes inside it.
void apply_change(ChangeBuffer& buf, ChangeKind kind, int g);

/// One uniform draw from <gens>: independent uniform exponents per generator,
/// folded through the basis coordinates, so no group multiplications are
/// chained. Empty generator list yields the identity.
int sample_element(const PGroupContext& ctx, const std::vector<int>& gens, Rng& rng);

/// Union of sample_count independent samples (per-index derived streams).
/// Always a subset of <gens>; equals it unless every sample missed some
/// element. Throws if the generator list exceeds the polylog budget.
ElementSet enumerate_subgroup(const PGroupContext& ctx, const std::vector<int>& gens,
                              const SampleConfig& cfg, const Rng& base);

/// Membership in <snapshot ∪ I \ D> from the static tree plus buffers:
/// residual generators from the tree, plus the inserts, then a sampled
/// enumeration. One-sided: `true` answers are always correct.
bool member_with_buffers(const PGroupContext& ctx, const SubgroupTree& tree,
                         const ChangeBuffer& buf, int g, const SampleConfig& cfg,
                         const Rng& base);

/// Randomized engine over a general abelian group: one subgroup tree per
/// Sylow component, queries answered per component and ANDed together.
class RandEngine {
public:
    RandEngine(const GroupContext& ctx, const std::vector<int>& generators, SampleConfig cfg);

    const GroupContext& context() const { return *ctx_; }
    const std::vector<int>& snapshot_generators() const { return generators_; }
    ChangeBuffer& buffer() { return buffer_; }
    const ChangeBuffer& buffer() const { return buffer_; }

    void change(ChangeKind kind, int g) { apply_change(buffer_, kind, g); }

    std::vector<int> effective_generators() const;

    bool member(int g, const Rng& query_rng) const;

    long long build_work() const { return build_work_; }
    int build_rounds() const { return build_rounds_; }

    const SubgroupTree& component_tree(int i) const { return trees_[i]; }

private:
    const GroupContext* ctx_;
    std::vector<int> generators_;
    std::vector<SubgroupTree> trees_;
    ChangeBuffer buffer_;
    SampleConfig cfg_;
    long long build_work_ = 0;
    int build_rounds_ = 0;
};

}  // namespace cayleydyn
