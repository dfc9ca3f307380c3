#include "cayleydyn/power_table.hpp"

#include <stdexcept>

namespace cayleydyn {

PowerTable::PowerTable(const CayleyTable& t, int identity)
    : n_(t.size()), identity_(identity) {
    if (identity < 0 || identity >= n_)
        throw std::invalid_argument("PowerTable: invalid identity");
    if (t.op(identity, identity) != identity)
        throw std::invalid_argument("PowerTable: claimed identity is not idempotent");
    pow_.resize(static_cast<size_t>(n_) * (n_ + 1));
    order_.assign(n_, 0);
    for (int g = 0; g < n_; ++g) {
        int acc = identity_;
        pow_[static_cast<size_t>(g) * (n_ + 1)] = acc;
        for (int e = 1; e <= n_; ++e) {
            acc = t.op(acc, g);
            pow_[static_cast<size_t>(g) * (n_ + 1) + e] = acc;
            if (acc == identity_ && order_[g] == 0) order_[g] = e;
        }
    }
}

int PowerTable::pow_any(int g, long long e) const {
    if (e < 0) throw std::invalid_argument("pow_any: negative exponent");
    if (e <= n_) return pow(g, static_cast<int>(e));
    if (order_[g] > 0) return pow(g, static_cast<int>(e % order_[g]));
    throw std::logic_error("pow_any: exponent beyond table for aperiodic element");
}

PowerTable power_table(const CayleyTable& t, int identity) {
    return PowerTable(t, identity);
}

}  // namespace cayleydyn
