#include "cayleydyn/oracle.hpp"

#include <deque>
#include <stdexcept>

namespace cayleydyn {
namespace oracle {

ElementSet enumerate_subgroup_bfs(const CayleyTable& t, int identity,
                                  const std::vector<int>& gens) {
    ElementSet seen(t.size());
    seen.set(identity);
    std::deque<int> queue{identity};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s : gens) {
            int y = t.op(x, s);
            if (!seen.test(y)) {
                seen.set(y);
                queue.push_back(y);
            }
        }
    }
    return seen;
}

bool bfs_membership(const CayleyTable& t, int identity, const std::vector<int>& gens, int g) {
    return enumerate_subgroup_bfs(t, identity, gens).test(g);
}

namespace {

int element_order(const CayleyTable& t, int identity, int g) {
    int acc = g;
    for (int k = 1; k <= t.size(); ++k) {
        if (acc == identity) return k;
        acc = t.op(acc, g);
    }
    throw std::runtime_error("order_profile: element has no finite order (not a group table)");
}

}  // namespace

std::map<int, int> order_profile(const CayleyTable& t) {
    ElementSet all(t.size());
    for (int i = 0; i < t.size(); ++i) all.set(i);
    return order_profile_subset(t, all);
}

std::map<int, int> order_profile_subset(const CayleyTable& t, const ElementSet& subset) {
    StructureClass sc = validate_table(t);
    if (!sc.identity) throw std::invalid_argument("order_profile: table has no identity");
    std::map<int, int> hist;
    subset.for_each([&](int g) { hist[element_order(t, *sc.identity, g)]++; });
    return hist;
}

bool iso_oracle(const CayleyTable& t1, const std::vector<int>& gens1, const CayleyTable& t2,
                const std::vector<int>& gens2) {
    StructureClass c1 = validate_table(t1), c2 = validate_table(t2);
    if (c1.kind != StructureKind::AbelianGroup || c2.kind != StructureKind::AbelianGroup)
        throw std::invalid_argument("iso_oracle: abelian group tables required");
    ElementSet h1 = enumerate_subgroup_bfs(t1, *c1.identity, gens1);
    ElementSet h2 = enumerate_subgroup_bfs(t2, *c2.identity, gens2);
    if (h1.count() != h2.count()) return false;
    return order_profile_subset(t1, h1) == order_profile_subset(t2, h2);
}

}  // namespace oracle
}  // namespace cayleydyn
