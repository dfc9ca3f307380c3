#include "cayleydyn/subgroup_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayleydyn/monoid_tree.hpp"  // set_product

namespace cayleydyn {

SubgroupTree::SubgroupTree(const PGroupContext& ctx, const std::vector<int>& labels)
    : ctx_(&ctx), labels_(labels) {
    const int s = static_cast<int>(labels_.size());
    k_ = 0;
    while ((1 << k_) < s) ++k_;
    leaf_count_ = 1 << k_;
    const int nodes = 2 * leaf_count_;
    const int n = ctx.table.size();

    ElementSet trivial(n);
    trivial.set(ctx.identity);

    auto product = [&](const ElementSet& a, const ElementSet& b) {
        ++build_products_;
        return set_product(ctx.table, a, b);
    };

    // leaves: cyclic subgroup of the label, trivial for unused slots
    subgroups_.assign(nodes, ElementSet());
    leaf_labels_below_.assign(nodes, {});
    for (int i = 0; i < leaf_count_; ++i) {
        int node = leaf_count_ + i;
        if (i < s) {
            ElementSet cyc(n);
            for (int e = 0; e <= n; ++e) cyc.set(ctx.powers.pow(labels_[i], e));
            subgroups_[node] = cyc;
            leaf_labels_below_[node] = {i};
        } else {
            subgroups_[node] = trivial;
        }
    }
    for (int v = leaf_count_ - 1; v >= 1; --v) {
        subgroups_[v] = product(subgroups_[2 * v], subgroups_[2 * v + 1]);
        leaf_labels_below_[v] = leaf_labels_below_[2 * v];
        leaf_labels_below_[v].insert(leaf_labels_below_[v].end(),
                                     leaf_labels_below_[2 * v + 1].begin(),
                                     leaf_labels_below_[2 * v + 1].end());
    }

    ancestor_.assign(static_cast<size_t>(nodes) * nodes, 0);
    for (int i = 1; i < nodes; ++i)
        for (int j = 1; j < nodes; ++j) {
            int d = depth_of(j) - depth_of(i);
            ancestor_[idx(i, j)] = (d >= 0 && (j >> d) == i) ? 1 : 0;
        }

    comps_.assign(nodes, {});
    for (int v = leaf_count_ - 1; v >= 1; --v) {
        int subtree = (leaf_count_ >> depth_of(v)) * 2 - 1;
        comps_[v].assign(subtree - 1, ElementSet());
        int left = 2 * v, right = 2 * v + 1;
        comps_[v][comp_slot(v, left)] = subgroups_[right];
        comps_[v][comp_slot(v, right)] = subgroups_[left];
        for (int du = depth_of(v) + 2; du <= k_; ++du) {
            int first = v << (du - depth_of(v));
            int count = 1 << (du - depth_of(v));
            for (int u = first; u < first + count; ++u) {
                if (ancestor(left, u))
                    comps_[v][comp_slot(v, u)] =
                        product(comps_[left][comp_slot(left, u)], subgroups_[right]);
                else
                    comps_[v][comp_slot(v, u)] =
                        product(comps_[right][comp_slot(right, u)], subgroups_[left]);
            }
        }
    }

    // reduced generator lists: per node for H_v, per pair for H_v:H_u
    node_gens_.assign(nodes, {});
    comp_gens_.assign(nodes, {});
    for (int v = 1; v < nodes; ++v) {
        std::vector<int> lv;
        for (int i : leaf_labels_below_[v]) lv.push_back(labels_[i]);
        node_gens_[v] = reduce(lv);
        if (v < leaf_count_) {
            comp_gens_[v].assign(comps_[v].size(), {});
            for (int du = depth_of(v) + 1; du <= k_; ++du) {
                int first = v << (du - depth_of(v));
                int count = 1 << (du - depth_of(v));
                for (int u = first; u < first + count; ++u) {
                    std::vector<int> rest;
                    for (int i : leaf_labels_below_[v])
                        if (!ancestor(u, leaf_node(i))) rest.push_back(labels_[i]);
                    comp_gens_[v][comp_slot(v, u)] = reduce(rest);
                }
            }
        }
    }

    build_rounds_ = (k_ + 1) + 2;  // one per level, complement pass, reduce pass
}

std::vector<int> SubgroupTree::reduce(const std::vector<int>& gens) {
    build_probes_ += static_cast<long long>(gens.size());
    return reduce_generators(ctx_->table, ctx_->identity, gens);
}

int SubgroupTree::comp_slot(int v, int u) const {
    int d = depth_of(u) - depth_of(v);
    return ((1 << d) - 2) + (u - (v << d));
}

const ElementSet& SubgroupTree::complement(int v, int u) const {
    return comps_[v][comp_slot(v, u)];
}

const std::vector<int>& SubgroupTree::complement_generators(int v, int u) const {
    return comp_gens_[v][comp_slot(v, u)];
}

std::vector<int> SubgroupTree::locate_deletion_roots(
    const std::vector<int>& deleted_gen_indices) const {
    std::vector<int> valid;
    for (int d : deleted_gen_indices)
        if (d >= 0 && d < generator_count()) valid.push_back(d);
    std::sort(valid.begin(), valid.end());
    valid.erase(std::unique(valid.begin(), valid.end()), valid.end());

    std::vector<int> roots;
    const int nodes = node_count() + 1;
    for (int d : valid) {
        int leaf = leaf_node(d);
        int best = leaf;
        for (int v = 1; v < nodes; ++v) {
            if (!ancestor(v, leaf)) continue;
            bool clean = true;
            for (int other : valid) {
                if (other == d) continue;
                if (ancestor(v, leaf_node(other))) {
                    clean = false;
                    break;
                }
            }
            if (clean && depth_of(v) < depth_of(best)) best = v;
        }
        roots.push_back(best);
    }
    return roots;
}

std::vector<int> SubgroupTree::residual_generators(
    const std::vector<int>& deleted_gen_indices) const {
    std::vector<int> valid;
    for (int d : deleted_gen_indices)
        if (d >= 0 && d < generator_count()) valid.push_back(d);
    std::sort(valid.begin(), valid.end());
    valid.erase(std::unique(valid.begin(), valid.end()), valid.end());

    std::vector<int> out;
    if (valid.empty()) {
        out = node_gens_[1];
    } else {
        std::vector<int> roots = locate_deletion_roots(valid);
        for (size_t j = 0; j < valid.size(); ++j) {
            int leaf = leaf_node(valid[j]);
            if (roots[j] != leaf)
                for (int g : complement_generators(roots[j], leaf)) out.push_back(g);
        }
        // maximal subtrees free of deletions: parent contains one, node does not
        auto has_deletion = [&](int v) {
            for (int d : valid)
                if (ancestor(v, leaf_node(d))) return true;
            return false;
        };
        const int nodes = node_count() + 1;
        for (int v = 2; v < nodes; ++v)
            if (!has_deletion(v) && has_deletion(v / 2))
                for (int g : node_gens_[v]) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cayleydyn
