#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cayleydyn/group_context.hpp"
#include "cayleydyn/linalg.hpp"

namespace cayleydyn {

/// Membership as integer-linear feasibility. Row i of the congruence system
/// is scaled by p^{m - m_i} so every row reads modulo p^m; the p^m multiples
/// are absorbed as extra identity columns: a_tilde = [A | p^m I].
struct LinearSystem {
    int ell = 0;
    long p = 0;
    int m = 0;
    linalg::BigInt pm;
    std::vector<int> generators;  // column owners, local p-group elements
    int target = 0;               // the queried element
    linalg::IntMat a;             // ell x |generators|
    linalg::IntMat a_tilde;       // ell x (|generators| + ell)
    std::vector<linalg::BigInt> b;
};

LinearSystem encode_system(const PGroupContext& ctx, const std::vector<int>& gens, int g,
                           int max_generators = 0);

/// Cached data over every ell-column selection of a_tilde: integer
/// determinant with p-adic valuation plus the characteristic pair
/// (det(xI - M), adj(xI - M)), which is what the rank-t update formulas
/// consume. Signed row-cofactor arrays over every (ell-1)-column selection
/// serve the augmented minors of [a_tilde | b] per query.
class SubmatrixCache {
public:
    static constexpr int kMaxCols = 24;
    static constexpr int kMaxRows = 10;

    SubmatrixCache(linalg::IntMat a_tilde, long p);

    const linalg::IntMat& matrix() const { return a_; }
    int rows() const { return a_.rows; }
    int cols() const { return a_.cols; }

    /// nu_p(gcd of all ell x ell minors); finite because [.. | p^m I] has a
    /// nonsingular selection.
    int valuation() const { return valuation_; }
    int valuation_within(uint32_t allowed_mask) const;

    /// nu_p over the augmented matrix's minors for a given right-hand side.
    int augmented_valuation(const std::vector<linalg::BigInt>& b) const {
        return augmented_valuation_within(full_mask(), b);
    }
    int augmented_valuation_within(uint32_t allowed_mask, const std::vector<linalg::BigInt>& b) const;

    struct UpdateStats {
        long long entries = 0;
        long long cofactor_arrays = 0;
        int fallbacks = 0;
    };

    /// Rank-t refresh: every cached minor/charpoly whose column set meets a
    /// changed column is rewritten through the update formulas, never from
    /// scratch.
    UpdateStats bulk_update(const std::vector<std::pair<int, std::vector<linalg::BigInt>>>& cols);

    uint32_t full_mask() const { return (a_.cols >= 32) ? ~0u : ((1u << a_.cols) - 1); }

    size_t entry_count() const { return entries_.size(); }
    size_t cofactor_count() const { return cofactors_.size(); }
    long long build_units() const {
        return static_cast<long long>(entries_.size() + cofactors_.size());
    }

    const linalg::BigInt& det_for(const std::vector<int>& cols) const;
    const linalg::CharData& chardata_for(const std::vector<int>& cols) const;

private:
    struct Entry {
        uint32_t mask = 0;
        std::vector<int> cols;
        linalg::CharData chardata;
        linalg::BigInt det;
    };
    struct CofactorArray {
        uint32_t mask = 0;
        std::vector<int> cols;
        std::vector<linalg::BigInt> cof;  // signed (ell-1)-minors per dropped row
    };

    void compute_cofactors(CofactorArray& arr) const;
    void refresh_valuation();
    int find_entry(uint32_t mask) const;

    linalg::IntMat a_;
    long p_ = 2;
    std::vector<Entry> entries_;
    std::vector<CofactorArray> cofactors_;
    std::unordered_map<uint32_t, int> entry_index_;
    int valuation_ = 0;
};

SubmatrixCache build_cache(const linalg::IntMat& a_tilde, long p);

/// Minor-GCD feasibility: the system is solvable over the integers iff
/// augmenting with b does not lower the p-adic valuation of the minor gcd.
bool feasible(const LinearSystem& sys, const SubmatrixCache& cache);

/// Reference route without a cache (direct minor enumeration).
bool feasible_direct(const LinearSystem& sys);

/// Integer witness via the Hermite-form solver; exponents verified against
/// the table before returning. Returns nullopt when infeasible.
std::optional<std::vector<long long>> solve_witness(const PGroupContext& ctx,
                                                    const LinearSystem& sys);

struct DetWitness {
    std::vector<int> generators;
    std::vector<long long> exponents;
};

/// Deterministic engine over a general abelian group: fixed generator slots
/// shared by all Sylow components, one submatrix cache per component, all
/// columns kept live so insertions and deletions are rank-t column updates.
class DetEngine {
public:
    DetEngine(const GroupContext& ctx, const std::vector<int>& generators, int gen_slots = 0,
              int budget_multiplier = 1);

    const GroupContext& context() const { return *ctx_; }
    int gen_slot_count() const { return static_cast<int>(slots_.size()); }
    int t_budget() const { return t_budget_; }
    std::vector<int> current_generators() const;
    bool occupies_slot(int elem) const { return slot_of(elem) >= 0; }
    int free_slots() const;

    bool member(int g) const;
    /// Membership in the span of a subset of the current generators; served
    /// from the same caches (every column subset is already there).
    bool member_of_span(const std::vector<int>& generator_subset, int g) const;

    std::optional<DetWitness> witness(int g) const;

    struct UpdateStats {
        long long entries = 0;
        long long cofactor_arrays = 0;
        int fallbacks = 0;
    };
    /// Applies at most t_budget() slot changes as one rank-t update.
    UpdateStats bulk_update(const std::vector<int>& inserts, const std::vector<int>& deletes);

    long long build_units() const { return build_units_; }
    long long worst_units_per_change() const;
    const SubmatrixCache& component_cache(int i) const { return caches_[i]; }

private:
    int slot_of(int elem) const;
    std::vector<linalg::BigInt> scaled_column(const SylowComponent& comp, int elem) const;
    std::vector<linalg::BigInt> scaled_rhs(const SylowComponent& comp, int g) const;
    uint32_t mask_for(const std::vector<int>& generator_subset, int comp_index) const;

    const GroupContext* ctx_;
    std::vector<int> slots_;  // element id or -1
    int t_budget_ = 1;
    std::vector<SubmatrixCache> caches_;
    long long build_units_ = 0;
};

}  // namespace cayleydyn
