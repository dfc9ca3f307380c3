#include "cayleydyn/monoid_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayleydyn/power_table.hpp"

namespace cayleydyn {

ElementSet set_product(const CayleyTable& t, const ElementSet& s1, const ElementSet& s2) {
    ElementSet out(t.size());
    s1.for_each([&](int a) { s2.for_each([&](int b) { out.set(t.op(a, b)); }); });
    return out;
}

MonoidTree::MonoidTree(const CayleyTable& t, const std::vector<int>& initial)
    : t_(t), n_(t.size()) {
    StructureClass sc = validate_table(t);
    if (!sc.at_least_monoid() || !sc.commutative())
        throw std::invalid_argument("MonoidTree: commutative monoid required");
    identity_ = *sc.identity;

    leaf_count_ = 1;
    while (leaf_count_ < n_) leaf_count_ *= 2;

    trivial_ = ElementSet(n_);
    trivial_.set(identity_);

    PowerTable pw(t_, identity_);
    power_sets_.assign(n_, ElementSet(n_));
    for (int a = 0; a < n_; ++a) {
        power_sets_[a].set(identity_);
        for (int e = 1; e <= n_; ++e) power_sets_[a].set(pw.pow(a, e));
    }

    active_.assign(n_, false);
    for (int a : initial) active_[a] = true;

    const int nodes = 2 * leaf_count_;
    node_sets_.assign(nodes, ElementSet());
    for (int a = 0; a < n_; ++a)
        node_sets_[leaf_of(a)] = active_[a] ? power_sets_[a] : trivial_;
    for (int a = n_; a < leaf_count_; ++a) node_sets_[leaf_count_ + a] = trivial_;
    for (int v = leaf_count_ - 1; v >= 1; --v)
        node_sets_[v] = product(node_sets_[2 * v], node_sets_[2 * v + 1]);

    // complements, children before parents so comp(child, u) is available
    comps_.assign(nodes, {});
    const int depth = depth_of(leaf_count_);
    for (int v = leaf_count_ - 1; v >= 1; --v) {
        int subtree = (leaf_count_ >> depth_of(v)) * 2 - 1;  // nodes in v's subtree
        comps_[v].assign(subtree - 1, ElementSet());
        int left = 2 * v, right = 2 * v + 1;
        comps_[v][comp_slot(v, left)] = node_sets_[right];
        comps_[v][comp_slot(v, right)] = node_sets_[left];
        for (int du = depth_of(v) + 2; du <= depth; ++du) {
            int first = v << (du - depth_of(v));
            int count = 1 << (du - depth_of(v));
            for (int u = first; u < first + count; ++u) {
                if (is_ancestor(left, u))
                    comps_[v][comp_slot(v, u)] =
                        product(comps_[left][comp_slot(left, u)], node_sets_[right]);
                else
                    comps_[v][comp_slot(v, u)] =
                        product(comps_[right][comp_slot(right, u)], node_sets_[left]);
            }
        }
    }
}

int MonoidTree::lca(int a, int b) const {
    int da = depth_of(a), db = depth_of(b);
    if (da > db) a >>= (da - db);
    if (db > da) b >>= (db - da);
    while (a != b) {
        a >>= 1;
        b >>= 1;
    }
    return a;
}

int MonoidTree::comp_slot(int v, int u) const {
    int d = depth_of(u) - depth_of(v);
    return ((1 << d) - 2) + (u - (v << d));
}

const ElementSet& MonoidTree::complement(int v, int u) const {
    return comps_[v][comp_slot(v, u)];
}

const ElementSet& MonoidTree::complement_or_trivial(int v, int u) const {
    return v == u ? trivial_ : comps_[v][comp_slot(v, u)];
}

ElementSet MonoidTree::product(const ElementSet& a, const ElementSet& b) {
    ++product_calls_;
    return set_product(t_, a, b);
}

std::vector<int> MonoidTree::active_elements() const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (active_[a]) out.push_back(a);
    return out;
}

bool MonoidTree::same_structure(const MonoidTree& o) const {
    return node_sets_ == o.node_sets_ && comps_ == o.comps_;
}

void MonoidTree::insert(int a) {
    last_stats_ = {};
    if (active_[a]) return;
    active_[a] = true;
    const int leaf = leaf_of(a);
    const ElementSet& pa = power_sets_[a];

    // complement pass first: it reads pre-update node sets
    for (int v = 1; v < leaf_count_; ++v) {
        if (!is_ancestor(v, leaf)) continue;
        const int dv = depth_of(v);
        for (int du = dv + 1; du <= depth_of(leaf_count_); ++du) {
            int first = v << (du - dv);
            int count = 1 << (du - dv);
            for (int u = first; u < first + count; ++u) {
                if (is_ancestor(u, leaf)) continue;
                int m = lca(leaf, u);
                int m1 = 2 * m, m2 = 2 * m + 1;
                if (!is_ancestor(m1, leaf)) std::swap(m1, m2);
                ElementSet mid = product(node_sets_[m1], pa);
                comps_[v][comp_slot(v, u)] =
                    product(product(complement_or_trivial(v, m), mid),
                            complement_or_trivial(m2, u));
                last_stats_.entries_touched++;
                last_stats_.max_products_per_entry =
                    std::max(last_stats_.max_products_per_entry, 3);
            }
        }
    }

    node_sets_[leaf] = pa;
    last_stats_.entries_touched++;
    for (int v = leaf >> 1; v >= 1; v >>= 1) {
        node_sets_[v] = product(node_sets_[v], pa);
        last_stats_.entries_touched++;
        last_stats_.max_products_per_entry = std::max(last_stats_.max_products_per_entry, 1);
    }
}

void MonoidTree::erase(int a) {
    last_stats_ = {};
    if (!active_[a]) return;
    active_[a] = false;
    const int leaf = leaf_of(a);

    for (int v = 1; v < leaf_count_; ++v) {
        if (!is_ancestor(v, leaf)) continue;
        const int dv = depth_of(v);
        for (int du = dv + 1; du <= depth_of(leaf_count_); ++du) {
            int first = v << (du - dv);
            int count = 1 << (du - dv);
            for (int u = first; u < first + count; ++u) {
                if (is_ancestor(u, leaf)) continue;
                int m = lca(leaf, u);
                int m1 = 2 * m, m2 = 2 * m + 1;
                if (!is_ancestor(m1, leaf)) std::swap(m1, m2);
                comps_[v][comp_slot(v, u)] =
                    product(product(complement_or_trivial(v, m),
                                    complement_or_trivial(m1, leaf)),
                            complement_or_trivial(m2, u));
                last_stats_.entries_touched++;
                last_stats_.max_products_per_entry =
                    std::max(last_stats_.max_products_per_entry, 2);
            }
        }
    }

    node_sets_[leaf] = trivial_;
    last_stats_.entries_touched++;
    for (int v = leaf >> 1; v >= 1; v >>= 1) {
        node_sets_[v] = complement(v, leaf);  // M_v : P_a, precomputed
        last_stats_.entries_touched++;
    }
}

}  // namespace cayleydyn
