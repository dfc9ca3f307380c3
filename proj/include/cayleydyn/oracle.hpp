#pragma once

#include <map>
#include <vector>

#include "cayleydyn/cayley_table.hpp"
#include "cayleydyn/element_set.hpp"

namespace cayleydyn {
namespace oracle {

// Brute-force ground truth. Deliberately naive, shares nothing with the
// engine modules beyond CayleyTable itself.

/// Reachability from the identity in the Cayley digraph x -> op(x, s).
ElementSet enumerate_subgroup_bfs(const CayleyTable& t, int identity,
                                  const std::vector<int>& gens);

bool bfs_membership(const CayleyTable& t, int identity, const std::vector<int>& gens, int g);

/// Histogram order -> count over all elements of a group table.
std::map<int, int> order_profile(const CayleyTable& t);

/// Order histogram restricted to a subset of elements.
std::map<int, int> order_profile_subset(const CayleyTable& t, const ElementSet& subset);

/// Reference abelian isomorphism check for generated subgroups: enumerate
/// both, compare sizes and element-order histograms.
bool iso_oracle(const CayleyTable& t1, const std::vector<int>& gens1, const CayleyTable& t2,
                const std::vector<int>& gens2);

}  // namespace oracle
}  // namespace cayleydyn
