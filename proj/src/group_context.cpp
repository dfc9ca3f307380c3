#include "cayleydyn/group_context.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "cayleydyn/element_set.hpp"

namespace cayleydyn {

int PGroupContext::decode_coords(const ExponentVector& coords) const {
    size_t idx = 0;
    for (size_t i = 0; i < coords.size(); ++i)
        idx += static_cast<size_t>(coords[i]) * strides[i];
    return decode[idx];
}

int PGroupContext::product_of_powers(const std::vector<int>& elems,
                                     const std::vector<long long>& exps) const {
    int acc = identity;
    for (size_t j = 0; j < elems.size(); ++j) {
        long long e = exps[j];
        int d = powers.order(elems[j]);
        e %= d;
        if (e < 0) e += d;
        acc = table.op(acc, powers.pow(elems[j], static_cast<int>(e)));
    }
    return acc;
}

namespace {

struct LocalGroup {
    CayleyTable table;
    int identity;
    PowerTable powers;
};

// Recursive maximal-order basis construction. Picks an element g of maximal
// order, quotients by <g> on min-index coset representatives, recurses, then
// lifts each quotient basis element x of order p^k by solving x^{p^k} = g^t
// and replacing x with x * g^{-t/p^k}.
void basis_recurse(const LocalGroup& g, long p, std::vector<int>& out_gens,
                   std::vector<int>& out_orders) {
    const int n = g.table.size();
    if (n == 1) return;

    int best = -1, best_order = 0;
    for (int x = 0; x < n; ++x)
        if (g.powers.order(x) > best_order) {
            best = x;
            best_order = g.powers.order(x);
        }

    out_gens.push_back(best);
    out_orders.push_back(best_order);

    // cosets of <best>: representative = minimal element index in the coset
    std::vector<int> coset_rep(n, -1);
    for (int x = 0; x < n; ++x) {
        int rep = x;
        for (int e = 1; e < best_order; ++e)
            rep = std::min(rep, g.table.op(x, g.powers.pow(best, e)));
        coset_rep[x] = rep;
    }

    std::vector<int> reps;
    std::vector<int> rep_index(n, -1);
    for (int x = 0; x < n; ++x)
        if (coset_rep[x] == x) {
            rep_index[x] = static_cast<int>(reps.size());
            reps.push_back(x);
        }

    const int qn = static_cast<int>(reps.size());
    std::vector<int> qentries(static_cast<size_t>(qn) * qn);
    for (int i = 0; i < qn; ++i)
        for (int j = 0; j < qn; ++j)
            qentries[static_cast<size_t>(i) * qn + j] =
                rep_index[coset_rep[g.table.op(reps[i], reps[j])]];
    CayleyTable qt(qn, std::move(qentries));
    int qident = rep_index[coset_rep[g.identity]];
    LocalGroup quotient{qt, qident, PowerTable(qt, qident)};

    std::vector<int> sub_gens, sub_orders;
    basis_recurse(quotient, p, sub_gens, sub_orders);

    for (size_t i = 0; i < sub_gens.size(); ++i) {
        int x = reps[sub_gens[i]];        // representative in this group
        int pk = sub_orders[i];           // order of the coset
        int y = g.powers.pow(x, pk);      // lands inside <best>
        int t = -1;
        for (int e = 0; e < best_order; ++e)
            if (g.powers.pow(best, e) == y) {
                t = e;
                break;
            }
        if (t < 0 || t % pk != 0)
            throw std::logic_error("independent_basis: lift failed (not an abelian p-group?)");
        int adjust = (best_order - t / pk) % best_order;
        int lifted = g.table.op(x, g.powers.pow(best, adjust));
        out_gens.push_back(lifted);
        out_orders.push_back(pk);
    }
}

}  // namespace

PGroupContext build_pgroup_context(const CayleyTable& t, int identity, long p, int m) {
    PGroupContext ctx;
    ctx.table = t;
    ctx.identity = identity;
    ctx.p = p;
    ctx.m = m;
    ctx.powers = PowerTable(t, identity);

    long expect = 1;
    for (int i = 0; i < m; ++i) expect *= p;
    if (expect != t.size())
        throw std::invalid_argument("build_pgroup_context: order is not p^m");

    LocalGroup g{ctx.table, identity, ctx.powers};
    basis_recurse(g, p, ctx.basis.gens, ctx.basis.orders);
    ctx.basis.p = p;
    ctx.basis.m = m;

    const int rank = static_cast<int>(ctx.basis.gens.size());
    ctx.strides.assign(rank, 1);
    for (int i = rank - 2; i >= 0; --i)
        ctx.strides[i] = ctx.strides[i + 1] * ctx.basis.orders[i + 1];

    // Enumerate all products of basis powers; the map must be a bijection.
    ctx.decode.assign(t.size(), -1);
    ctx.repr.assign(t.size(), ExponentVector(rank, 0));
    ExponentVector coords(rank, 0);
    std::vector<int> partial(rank + 1, identity);
    size_t filled = 0;
    for (size_t idx = 0;; ++idx) {
        int elem = partial[rank];
        size_t mixed = 0;
        for (int i = 0; i < rank; ++i) mixed += static_cast<size_t>(coords[i]) * ctx.strides[i];
        if (mixed != idx) throw std::logic_error("independent_basis: stride bookkeeping");
        if (ctx.decode[idx] != -1) throw std::logic_error("independent_basis: decode collision");
        ctx.decode[idx] = elem;
        ctx.repr[elem] = coords;
        ++filled;

        // mixed-radix increment, rebuilding partial products from the
        // first changed coordinate
        int i = rank - 1;
        while (i >= 0 && coords[i] == ctx.basis.orders[i] - 1) {
            coords[i] = 0;
            --i;
        }
        if (i < 0) break;
        coords[i]++;
        for (int j = i; j < rank; ++j)
            partial[j + 1] = t.op(partial[j], ctx.powers.pow(ctx.basis.gens[j], coords[j]));
        if (idx > static_cast<size_t>(t.size())) break;  // safety, unreachable
    }
    if (filled != static_cast<size_t>(t.size()))
        throw std::logic_error(
            "independent_basis: representation map does not cover the group");
    for (int e = 0; e < t.size(); ++e)
        if (ctx.decode[e] == -1)
            throw std::logic_error("independent_basis: representation map not surjective");
    return ctx;
}

ExponentVector exponent_vector(const PGroupContext& ctx, int g) { return ctx.repr[g]; }

SylowDecomposition sylow_decompose(const CayleyTable& t) {
    StructureClass sc = validate_table(t);
    if (sc.kind != StructureKind::AbelianGroup)
        throw std::invalid_argument("sylow_decompose: abelian group required");
    const int n = t.size();
    const int identity = *sc.identity;
    PowerTable pw(t, identity);

    SylowDecomposition out;
    int rest = n;
    for (long p = 2; p <= rest; ++p) {
        if (rest % p) continue;
        int a = 0;
        long pa = 1;
        while (rest % p == 0) {
            rest = static_cast<int>(rest / p);
            ++a;
            pa *= p;
        }
        SylowComponent comp;
        comp.prime = p;
        comp.exponent = a;
        comp.cofactor = n / pa;

        // component = image of x -> x^{b}; collect, index, re-tabulate
        std::vector<int> to_local(n, -1);
        for (int x = 0; x < n; ++x) {
            int y = pw.pow_any(x, comp.cofactor);
            if (to_local[y] == -1) {
                to_local[y] = static_cast<int>(comp.to_global.size());
                comp.to_global.push_back(y);
            }
        }
        const int cn = static_cast<int>(comp.to_global.size());
        if (cn != pa)
            throw std::logic_error("sylow_decompose: component size mismatch");
        std::vector<int> entries(static_cast<size_t>(cn) * cn);
        for (int i = 0; i < cn; ++i)
            for (int j = 0; j < cn; ++j)
                entries[static_cast<size_t>(i) * cn + j] =
                    to_local[t.op(comp.to_global[i], comp.to_global[j])];
        CayleyTable ct(cn, std::move(entries));
        comp.ctx = build_pgroup_context(ct, to_local[identity], p, a);
        comp.projection.resize(n);
        for (int x = 0; x < n; ++x) comp.projection[x] = to_local[pw.pow_any(x, comp.cofactor)];
        out.components.push_back(std::move(comp));
    }
    return out;
}

GroupContext GroupContext::build(const CayleyTable& t) {
    StructureClass sc = validate_table(t);
    if (sc.kind != StructureKind::AbelianGroup)
        throw std::invalid_argument("GroupContext: abelian group required");
    GroupContext ctx;
    ctx.table = t;
    ctx.identity = *sc.identity;
    ctx.powers = PowerTable(t, ctx.identity);
    ctx.sylow = sylow_decompose(t);
    return ctx;
}

std::vector<int> reduce_generators(const CayleyTable& t, int identity,
                                   const std::vector<int>& gens) {
    std::vector<int> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<int> kept;
    ElementSet closure(t.size());
    closure.set(identity);
    for (int x : sorted) {
        if (closure.test(x)) continue;
        kept.push_back(x);
        // extend the closure with the new generator (BFS over the current set)
        std::deque<int> queue = {identity};
        ElementSet next(t.size());
        next.set(identity);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int s : kept) {
                int y = t.op(v, s);
                if (!next.test(y)) {
                    next.set(y);
                    queue.push_back(y);
                }
            }
        }
        closure = next;
    }
    return kept;
}

}  // namespace cayleydyn
