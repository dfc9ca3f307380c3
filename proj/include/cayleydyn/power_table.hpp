#pragma once

#include <vector>

#include "cayleydyn/cayley_table.hpp"

namespace cayleydyn {

/// Precomputed powers g^0..g^n for every element, plus element orders.
///
/// Requires a structure with a two-sided identity. For a group, order(g) is
/// the least k > 0 with g^k = e; for a monoid element whose powers never
/// return to the identity, order(g) is 0.
class PowerTable {
public:
    PowerTable() = default;
    PowerTable(const CayleyTable& t, int identity);

    int identity() const { return identity_; }

    /// g^e for 0 <= e <= n.
    int pow(int g, int e) const { return pow_[static_cast<size_t>(g) * (n_ + 1) + e]; }

    /// Arbitrary nonnegative exponents, reduced through the precomputed row.
    int pow_any(int g, long long e) const;

    int order(int g) const { return order_[g]; }

private:
    int n_ = 0;
    int identity_ = -1;
    std::vector<int> pow_;
    std::vector<int> order_;
};

PowerTable power_table(const CayleyTable& t, int identity);

}  // namespace cayleydyn
