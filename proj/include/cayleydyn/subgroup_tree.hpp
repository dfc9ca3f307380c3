#pragma once

#include <vector>

#include "cayleydyn/cayley_table.hpp"
#include "cayleydyn/element_set.hpp"
#include "cayleydyn/group_context.hpp"

namespace cayleydyn {

/// Static tree over an abelian p-group generating set: per-node subgroups
/// H_v, per-(node, descendant) complement subgroups H_v:H_u with reduced
/// generator lists T_vu, and the ancestor matrix. Rebuilt wholesale by the
/// scheduler; immutable afterwards.
class SubgroupTree {
public:
    /// Leaf i holds labels[i] (an element of the p-group). Duplicated labels
    /// are allowed: leaves are identified by index, which is what the change
    /// buffers refer to.
    SubgroupTree(const PGroupContext& ctx, const std::vector<int>& labels);

    int k() const { return k_; }
    int node_count() const { return 2 * leaf_count_ - 1; }
    int leaf_count() const { return leaf_count_; }
    int leaf_node(int gen_index) const { return leaf_count_ + gen_index; }
    int generator_count() const { return static_cast<int>(labels_.size()); }
    int label(int gen_index) const { return labels_[gen_index]; }

    const ElementSet& node_subgroup(int v) const { return subgroups_[v]; }
    const ElementSet& root_subgroup() const { return subgroups_[1]; }
    const ElementSet& complement(int v, int u) const;
    const std::vector<int>& reduced_generators(int v) const { return node_gens_[v]; }
    const std::vector<int>& complement_generators(int v, int u) const;

    bool ancestor(int i, int j) const { return ancestor_[idx(i, j)]; }

    /// For each generator index in D, the root of the maximal subtree whose
    /// leaves contain that deletion and no other. Uses only the ancestor
    /// matrix. Unknown generator indices are skipped.
    std::vector<int> locate_deletion_roots(const std::vector<int>& deleted_gen_indices) const;

    /// Generators (p-group elements) for the subgroup spanned by the
    /// non-deleted leaf labels: complement lists at deletion roots plus the
    /// reduced lists of all maximal deletion-free subtrees.
    std::vector<int> residual_generators(const std::vector<int>& deleted_gen_indices) const;

    // cost accounting for the scheduler
    long long build_set_products() const { return build_products_; }
    long long build_membership_probes() const { return build_probes_; }
    int build_rounds() const { return build_rounds_; }

private:
    static int depth_of(int node) { return 31 - __builtin_clz(static_cast<unsigned>(node)); }
    int comp_slot(int v, int u) const;
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * (2 * leaf_count_) + j; }
    std::vector<int> reduce(const std::vector<int>& gens);

    const PGroupContext* ctx_;
    std::vector<int> labels_;
    int k_ = 0;
    int leaf_count_ = 1;
    std::vector<ElementSet> subgroups_;
    std::vector<std::vector<ElementSet>> comps_;
    std::vector<std::vector<std::vector<int>>> comp_gens_;  // T_vu, same slots as comps_
    std::vector<std::vector<int>> node_gens_;               // reduced list per node
    std::vector<std::vector<int>> leaf_labels_below_;       // generator indices per node
    std::vector<char> ancestor_;
    long long build_products_ = 0;
    long long build_probes_ = 0;
    int build_rounds_ = 0;
};

}  // namespace cayleydyn
