#pragma once

#include <vector>

#include "cayleydyn/cayley_table.hpp"
#include "cayleydyn/element_set.hpp"

namespace cayleydyn {

/// Exact product set {ab : a in S1, b in S2}. Both sets must contain the
/// identity so that products of submonoids stay submonoids.
ElementSet set_product(const CayleyTable& t, const ElementSet& s1, const ElementSet& s2);

/// Dynamic submonoid membership for a commutative monoid under single
/// insertions/deletions of generators.
///
/// A full binary tree with one leaf per monoid element. An active leaf a
/// holds the power set P_a = {a^i : 1<=i<=n} + {identity}; inactive leaves
/// hold {identity}. Every node holds the product of its children, and for
/// each descendant u of a node v the complement set M_v:M_u (the submonoid
/// generated by active leaves under v that are not under u) is kept, which
/// is what makes deletions O(1) products per stored entry.
class MonoidTree {
public:
    MonoidTree(const CayleyTable& t, const std::vector<int>& initial);

    void insert(int a);
    void erase(int a);
    bool member(int m) const { return node_sets_[1].test(m); }

    const ElementSet& root_set() const { return node_sets_[1]; }

    int size() const { return n_; }
    int identity() const { return identity_; }
    bool active(int a) const { return active_[a]; }
    std::vector<int> active_elements() const;

    // tree introspection (tests and the rebuild-confluence checks)
    int node_count() const { return 2 * leaf_count_ - 1; }
    int leaf_of(int a) const { return leaf_count_ + a; }
    const ElementSet& node_set(int node) const { return node_sets_[node]; }
    const ElementSet& complement(int v, int u) const;  // M_v : M_u, u proper descendant of v
    const ElementSet& power_set(int a) const { return power_sets_[a]; }
    bool same_structure(const MonoidTree& o) const;

    struct UpdateStats {
        int entries_touched = 0;
        int max_products_per_entry = 0;
    };
    const UpdateStats& last_update_stats() const { return last_stats_; }
    long long set_product_calls() const { return product_calls_; }

private:
    static int depth_of(int node) { return 31 - __builtin_clz(static_cast<unsigned>(node)); }
    bool is_ancestor(int v, int u) const {  // proper or improper
        int d = depth_of(u) - depth_of(v);
        return d >= 0 && (u >> d) == v;
    }
    int lca(int a, int b) const;
    int comp_slot(int v, int u) const;
    ElementSet trivial() const;
    ElementSet product(const ElementSet& a, const ElementSet& b);
    const ElementSet& complement_or_trivial(int v, int u) const;

    CayleyTable t_;
    int n_ = 0;
    int identity_ = 0;
    int leaf_count_ = 0;  // power of two >= n
    std::vector<bool> active_;
    std::vector<ElementSet> power_sets_;          // P_a per element
    std::vector<ElementSet> node_sets_;           // indexed by heap node id
    std::vector<std::vector<ElementSet>> comps_;  // comps_[v][slot] = M_v : M_u
    ElementSet trivial_;
    UpdateStats last_stats_;
    long long product_calls_ = 0;
};

}  // namespace cayleydyn
