#include "cayleydyn/det_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayleydyn {

using linalg::BigInt;
using linalg::IntMat;

namespace {

int ceil_log2(int n) {
    int lg = 1;
    while ((1 << lg) < n) ++lg;
    return lg;
}

template <class F>
void for_each_subset(int cols, int k, F f) {
    std::vector<int> pick(k);
    // standard lexicographic combinations
    for (int i = 0; i < k; ++i) pick[i] = i;
    if (k == 0) {
        f(pick);
        return;
    }
    if (k > cols) return;
    for (;;) {
        f(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == cols - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

uint32_t mask_of(const std::vector<int>& cols) {
    uint32_t m = 0;
    for (int c : cols) m |= (1u << c);
    return m;
}

}  // namespace

LinearSystem encode_system(const PGroupContext& ctx, const std::vector<int>& gens, int g,
                           int max_generators) {
    const int ell = ctx.rank();
    if (max_generators <= 0) max_generators = 3 * ceil_log2(ctx.table.size()) + ell;
    if (static_cast<int>(gens.size()) > max_generators)
        throw std::runtime_error("encode_system: generator budget exceeded");

    LinearSystem sys;
    sys.ell = ell;
    sys.p = ctx.p;
    sys.m = ctx.m;
    sys.pm = 1;
    for (int i = 0; i < ctx.m; ++i) sys.pm *= ctx.p;
    sys.generators = gens;
    sys.target = g;

    sys.a = IntMat(ell, static_cast<int>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j) {
        const ExponentVector& alpha = ctx.repr[gens[j]];
        for (int i = 0; i < ell; ++i) {
            BigInt scale = sys.pm / ctx.basis.orders[i];  // p^{m - m_i}
            sys.a.at(i, static_cast<int>(j)) = scale * alpha[i];
        }
    }
    sys.a_tilde = IntMat(ell, static_cast<int>(gens.size()) + ell);
    for (int i = 0; i < ell; ++i) {
        for (int j = 0; j < sys.a.cols; ++j) sys.a_tilde.at(i, j) = sys.a.at(i, j);
        sys.a_tilde.at(i, sys.a.cols + i) = sys.pm;
    }
    sys.b.assign(ell, BigInt(0));
    const ExponentVector& beta = ctx.repr[g];
    for (int i = 0; i < ell; ++i) sys.b[i] = (sys.pm / ctx.basis.orders[i]) * beta[i];
    return sys;
}

SubmatrixCache::SubmatrixCache(IntMat a_tilde, long p) : a_(std::move(a_tilde)), p_(p) {
    if (a_.cols > kMaxCols || a_.rows > kMaxRows)
        throw std::runtime_error("SubmatrixCache: desk-scale guard exceeded (cols<=24, rows<=10)");
    const int ell = a_.rows;

    for_each_subset(a_.cols, ell, [&](const std::vector<int>& cols) {
        Entry e;
        e.mask = mask_of(cols);
        e.cols = cols;
        IntMat sub(ell, ell);
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < ell; ++j) sub.at(i, j) = a_.at(i, cols[j]);
        e.chardata = linalg::characteristic_data(sub);
        e.det = linalg::det_crt(sub, linalg::crt_primes_for(sub));
        if (e.det != e.chardata.det())
            throw std::logic_error("SubmatrixCache: determinant routes disagree");
        entry_index_[e.mask] = static_cast<int>(entries_.size());
        entries_.push_back(std::move(e));
    });

    for_each_subset(a_.cols, ell - 1, [&](const std::vector<int>& cols) {
        CofactorArray arr;
        arr.mask = mask_of(cols);
        arr.cols = cols;
        compute_cofactors(arr);
        cofactors_.push_back(std::move(arr));
    });

    refresh_valuation();
}

void SubmatrixCache::compute_cofactors(CofactorArray& arr) const {
    const int ell = a_.rows;
    arr.cof.assign(ell, BigInt(0));
    for (int drop = 0; drop < ell; ++drop) {
        IntMat sub(ell - 1, ell - 1);
        int ri = 0;
        for (int i = 0; i < ell; ++i) {
            if (i == drop) continue;
            for (int j = 0; j < ell - 1; ++j) sub.at(ri, j) = a_.at(i, arr.cols[j]);
            ++ri;
        }
        BigInt minor = linalg::bareiss_determinant(sub);
        arr.cof[drop] = ((drop + ell - 1) % 2 == 0) ? minor : -minor;
    }
}

void SubmatrixCache::refresh_valuation() {
    valuation_ = valuation_within(full_mask());
}

int SubmatrixCache::valuation_within(uint32_t allowed_mask) const {
    int best = -1;
    for (const Entry& e : entries_) {
        if ((e.mask & ~allowed_mask) != 0) continue;
        if (e.det == 0) continue;
        int v = linalg::p_adic_valuation(e.det, p_);
        if (best < 0 || v < best) best = v;
        if (best == 0) break;
    }
    if (best < 0)
        throw std::logic_error("SubmatrixCache: no nonsingular minor inside the allowed columns");
    return best;
}

int SubmatrixCache::augmented_valuation_within(uint32_t allowed_mask,
                                               const std::vector<BigInt>& b) const {
    int best = valuation_within(allowed_mask);
    for (const CofactorArray& arr : cofactors_) {
        if ((arr.mask & ~allowed_mask) != 0) continue;
        BigInt minor = 0;
        for (int r = 0; r < a_.rows; ++r) minor += arr.cof[r] * b[r];
        if (minor == 0) continue;
        int v = linalg::p_adic_valuation(minor, p_);
        if (v < best) best = v;
        if (best == 0) break;
    }
    return best;
}

int SubmatrixCache::find_entry(uint32_t mask) const {
    auto it = entry_index_.find(mask);
    if (it == entry_index_.end()) throw std::invalid_argument("SubmatrixCache: unknown subset");
    return it->second;
}

const BigInt& SubmatrixCache::det_for(const std::vector<int>& cols) const {
    return entries_[find_entry(mask_of(cols))].det;
}

const linalg::CharData& SubmatrixCache::chardata_for(const std::vector<int>& cols) const {
    return entries_[find_entry(mask_of(cols))].chardata;
}

SubmatrixCache::UpdateStats SubmatrixCache::bulk_update(
    const std::vector<std::pair<int, std::vector<BigInt>>>& cols) {
    UpdateStats stats;
    if (cols.empty()) return stats;
    const int ell = a_.rows;

    uint32_t touched = 0;
    std::vector<std::vector<BigInt>> delta(a_.cols);
    for (const auto& [c, values] : cols) {
        if (c < 0 || c >= a_.cols) throw std::invalid_argument("bulk_update: bad column");
        touched |= (1u << c);
        delta[c].assign(ell, BigInt(0));
        for (int i = 0; i < ell; ++i) delta[c][i] = values[i] - a_.at(i, c);
    }

    for (Entry& e : entries_) {
        uint32_t hit = e.mask & touched;
        if (!hit) continue;
        std::vector<int> positions;
        for (int j = 0; j < ell; ++j)
            if (touched & (1u << e.cols[j])) positions.push_back(j);
        const int t = static_cast<int>(positions.size());

        IntMat u(ell, t), cmat = IntMat::identity(t), v(t, ell);
        for (int k = 0; k < t; ++k) {
            int col = e.cols[positions[k]];
            for (int i = 0; i < ell; ++i) u.at(i, k) = delta[col][i];
            v.at(k, positions[k]) = 1;
        }
        IntMat m_new(ell, ell);
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < ell; ++j) {
                int col = e.cols[j];
                m_new.at(i, j) = a_.at(i, col);
                if (touched & (1u << col)) m_new.at(i, j) += delta[col][i];
            }
        bool fallback = false;
        e.chardata = linalg::smw_update(e.chardata, m_new, u, cmat, v, &fallback);
        if (fallback) ++stats.fallbacks;
        e.det = e.chardata.det();
        ++stats.entries;
    }

    for (const auto& [c, values] : cols)
        for (int i = 0; i < ell; ++i) a_.at(i, c) = values[i];

    for (CofactorArray& arr : cofactors_) {
        if (!(arr.mask & touched)) continue;
        compute_cofactors(arr);
        ++stats.cofactor_arrays;
    }

    refresh_valuation();
    return stats;
}

SubmatrixCache build_cache(const IntMat& a_tilde, long p) { return SubmatrixCache(a_tilde, p); }

bool feasible(const LinearSystem& sys, const SubmatrixCache& cache) {
    if (sys.ell == 0) return true;
    return cache.valuation() == cache.augmented_valuation(sys.b);
}

bool feasible_direct(const LinearSystem& sys) {
    SubmatrixCache cache(sys.a_tilde, sys.p);
    return feasible(sys, cache);
}

std::optional<std::vector<long long>> solve_witness(const PGroupContext& ctx,
                                                    const LinearSystem& sys) {
    auto z = linalg::solve_integer(sys.a_tilde, sys.b);
    if (!z) return std::nullopt;
    std::vector<long long> x(sys.generators.size());
    for (size_t j = 0; j < sys.generators.size(); ++j) {
        BigInt r = (*z)[j] % sys.pm;
        if (r < 0) r += sys.pm;
        x[j] = r.convert_to<long long>();
    }
    int check = ctx.product_of_powers(sys.generators, x);
    if (check != sys.target)
        throw std::logic_error("solve_witness: verification against the table failed");
    return x;
}

DetEngine::DetEngine(const GroupContext& ctx, const std::vector<int>& generators, int gen_slots,
                     int budget_multiplier)
    : ctx_(&ctx) {
    const int n = ctx.size();
    const int lg = ceil_log2(n);
    const int lglg = ceil_log2(lg + 1);
    t_budget_ = std::max(1, lg / std::max(1, lglg)) * std::max(1, budget_multiplier);

    std::vector<int> initial = generators;
    std::sort(initial.begin(), initial.end());
    initial.erase(std::unique(initial.begin(), initial.end()), initial.end());

    int max_ell = 0;
    for (const auto& comp : ctx.sylow.components)
        max_ell = std::max(max_ell, comp.ctx.rank());
    if (gen_slots <= 0) {
        int window = std::max(1, lglg);
        gen_slots = lg + (window + 1) * t_budget_;
    }
    gen_slots = std::max(gen_slots, static_cast<int>(initial.size()));
    gen_slots = std::min(gen_slots, SubmatrixCache::kMaxCols - max_ell);
    if (static_cast<int>(initial.size()) > gen_slots)
        throw std::runtime_error("DetEngine: initial generating set exceeds slot capacity");

    slots_.assign(gen_slots, -1);
    for (size_t i = 0; i < initial.size(); ++i) slots_[i] = initial[i];

    caches_.reserve(ctx.sylow.components.size());
    for (const auto& comp : ctx.sylow.components) {
        const int ell = comp.ctx.rank();
        IntMat a_tilde(ell, gen_slots + ell);
        BigInt pm = 1;
        for (int i = 0; i < comp.ctx.m; ++i) pm *= comp.ctx.p;
        for (int s = 0; s < gen_slots; ++s) {
            if (slots_[s] < 0) continue;
            auto col = scaled_column(comp, slots_[s]);
            for (int i = 0; i < ell; ++i) a_tilde.at(i, s) = col[i];
        }
        for (int i = 0; i < ell; ++i) a_tilde.at(i, gen_slots + i) = pm;
        caches_.emplace_back(std::move(a_tilde), comp.ctx.p);
        build_units_ += caches_.back().build_units();
    }
}

int DetEngine::slot_of(int elem) const {
    for (size_t s = 0; s < slots_.size(); ++s)
        if (slots_[s] == elem) return static_cast<int>(s);
    return -1;
}

int DetEngine::free_slots() const {
    int c = 0;
    for (int s : slots_) c += (s < 0);
    return c;
}

std::vector<int> DetEngine::current_generators() const {
    std::vector<int> out;
    for (int s : slots_)
        if (s >= 0) out.push_back(s);
    return out;
}

std::vector<BigInt> DetEngine::scaled_column(const SylowComponent& comp, int elem) const {
    const PGroupContext& pc = comp.ctx;
    const int ell = pc.rank();
    BigInt pm = 1;
    for (int i = 0; i < pc.m; ++i) pm *= pc.p;
    std::vector<BigInt> col(ell);
    const ExponentVector& alpha = pc.repr[comp.projection[elem]];
    for (int i = 0; i < ell; ++i) col[i] = (pm / pc.basis.orders[i]) * alpha[i];
    return col;
}

std::vector<BigInt> DetEngine::scaled_rhs(const SylowComponent& comp, int g) const {
    return scaled_column(comp, g);
}

bool DetEngine::member(int g) const {
    if (g == ctx_->identity) return true;
    for (size_t c = 0; c < caches_.size(); ++c) {
        const auto& comp = ctx_->sylow.components[c];
        std::vector<BigInt> b = scaled_rhs(comp, g);
        if (caches_[c].valuation() != caches_[c].augmented_valuation(b)) return false;
    }
    return true;
}

uint32_t DetEngine::mask_for(const std::vector<int>& generator_subset, int comp_index) const {
    const int ell = ctx_->sylow.components[comp_index].ctx.rank();
    uint32_t mask = 0;
    for (int elem : generator_subset) {
        int s = slot_of(elem);
        if (s < 0) throw std::invalid_argument("member_of_span: element is not a live generator");
        mask |= (1u << s);
    }
    for (int i = 0; i < ell; ++i) mask |= (1u << (slots_.size() + i));
    return mask;
}

bool DetEngine::member_of_span(const std::vector<int>& generator_subset, int g) const {
    if (g == ctx_->identity) return true;
    for (size_t c = 0; c < caches_.size(); ++c) {
        const auto& comp = ctx_->sylow.components[c];
        uint32_t mask = mask_for(generator_subset, static_cast<int>(c));
        std::vector<BigInt> b = scaled_rhs(comp, g);
        if (caches_[c].valuation_within(mask) != caches_[c].augmented_valuation_within(mask, b))
            return false;
    }
    return true;
}

std::optional<DetWitness> DetEngine::witness(int g) const {
    std::vector<int> gens = current_generators();
    // per-component witnesses, recombined by Chinese remaindering over the
    // pairwise-coprime component orders
    std::vector<long long> moduli;
    std::vector<std::vector<long long>> parts;
    for (size_t c = 0; c < caches_.size(); ++c) {
        const auto& comp = ctx_->sylow.components[c];
        std::vector<int> local;
        local.reserve(gens.size());
        for (int x : gens) local.push_back(comp.projection[x]);
        LinearSystem sys = encode_system(comp.ctx, local, comp.projection[g],
                                         static_cast<int>(local.size()) + 1);
        auto x = solve_witness(comp.ctx, sys);
        if (!x) return std::nullopt;
        long long pm = 1;
        for (int i = 0; i < comp.ctx.m; ++i) pm *= comp.ctx.p;
        moduli.push_back(pm);
        parts.push_back(std::move(*x));
    }

    DetWitness w;
    w.generators = gens;
    w.exponents.assign(gens.size(), 0);
    for (size_t j = 0; j < gens.size(); ++j) {
        long long acc = 0, mod = 1;
        for (size_t c = 0; c < moduli.size(); ++c) {
            long long target = parts[c][j] % moduli[c];
            while (acc % moduli[c] != target) acc += mod;
            mod *= moduli[c];
        }
        w.exponents[j] = acc;
    }
    // verify against the global table
    int check = ctx_->identity;
    for (size_t j = 0; j < gens.size(); ++j) {
        long long e = w.exponents[j] % ctx_->powers.order(gens[j]);
        check = ctx_->table.op(check, ctx_->powers.pow(gens[j], static_cast<int>(e)));
    }
    if (check != g) throw std::logic_error("DetEngine::witness: verification failed");
    return w;
}

DetEngine::UpdateStats DetEngine::bulk_update(const std::vector<int>& inserts,
                                              const std::vector<int>& deletes) {
    std::vector<int> ins, del;
    for (int x : inserts)
        if (slot_of(x) < 0) ins.push_back(x);
    for (int x : deletes)
        if (slot_of(x) >= 0) del.push_back(x);
    if (static_cast<int>(ins.size() + del.size()) > t_budget_)
        throw std::runtime_error("DetEngine::bulk_update: change budget exceeded");

    std::vector<std::pair<int, int>> writes;  // slot, element (-1 = clear)
    for (int x : del) writes.emplace_back(slot_of(x), -1);
    for (int x : ins) {
        int free = -1;
        for (size_t s = 0; s < slots_.size(); ++s) {
            bool cleared = false;
            for (auto& [ws, we] : writes)
                if (ws == static_cast<int>(s) && we == -1) cleared = true;
            if ((slots_[s] < 0 || cleared) && free < 0) {
                bool taken = false;
                for (auto& [ws, we] : writes)
                    if (ws == static_cast<int>(s) && we != -1) taken = true;
                if (!taken) free = static_cast<int>(s);
            }
        }
        if (free < 0) throw std::runtime_error("DetEngine::bulk_update: no free generator slot");
        writes.emplace_back(free, x);
    }

    UpdateStats stats;
    for (size_t c = 0; c < caches_.size(); ++c) {
        const auto& comp = ctx_->sylow.components[c];
        const int ell = comp.ctx.rank();
        std::vector<std::pair<int, std::vector<BigInt>>> cols;
        for (auto& [slot, elem] : writes) {
            std::vector<BigInt> col(ell, BigInt(0));
            if (elem >= 0) col = scaled_column(comp, elem);
            cols.emplace_back(slot, std::move(col));
        }
        auto s = caches_[c].bulk_update(cols);
        stats.entries += s.entries;
        stats.cofactor_arrays += s.cofactor_arrays;
        stats.fallbacks += s.fallbacks;
    }
    for (auto& [slot, elem] : writes) slots_[slot] = elem;
    return stats;
}

long long DetEngine::worst_units_per_change() const {
    // subsets containing one fixed column: entries + cofactor arrays
    long long total = 0;
    auto choose = [](int n, int k) -> long long {
        if (k < 0 || k > n) return 0;
        long long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (size_t c = 0; c < caches_.size(); ++c) {
        int cols = caches_[c].cols();
        int ell = caches_[c].rows();
        total += choose(cols - 1, ell - 1);      // entries touching a given column
        total += choose(cols - 1, ell - 2);      // cofactor arrays touching it
    }
    return total;
}

}  // namespace cayleydyn
