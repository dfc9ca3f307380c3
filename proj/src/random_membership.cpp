#include "cayleydyn/random_membership.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cayleydyn {

long long default_sample_count(int group_order) {
    double s = group_order * (std::log(static_cast<double>(group_order)) + 5.0);
    return static_cast<long long>(std::ceil(s));
}

double coverage_failure_bound(int subgroup_size, long long samples) {
    if (subgroup_size <= 1) return 0.0;
    double miss = 1.0 - 1.0 / static_cast<double>(subgroup_size);
    return subgroup_size * std::pow(miss, static_cast<double>(samples));
}

void apply_change(ChangeBuffer& buf, ChangeKind kind, int g) {
    if (kind == ChangeKind::Insert) {
        if (buf.deletes.test(g))
            buf.deletes.reset(g);
        else if (!buf.snapshot.test(g))
            buf.inserts.set(g);
        // member of the snapshot (and not deleted) or already pending: no-op
    } else {
        if (buf.inserts.test(g))
            buf.inserts.reset(g);
        else if (buf.snapshot.test(g))
            buf.deletes.set(g);
        // never part of the effective set: no-op
    }
}

int sample_element(const PGroupContext& ctx, const std::vector<int>& gens, Rng& rng) {
    const int rank = ctx.rank();
    const int n = ctx.table.size();
    std::vector<long long> coord(rank, 0);
    for (int x : gens) {
        long long beta = static_cast<long long>(rng.below(static_cast<uint64_t>(n)));
        const ExponentVector& alpha = ctx.repr[x];
        for (int i = 0; i < rank; ++i)
            coord[i] = (coord[i] + beta * alpha[i]) % ctx.basis.orders[i];
    }
    ExponentVector coords(rank);
    for (int i = 0; i < rank; ++i) coords[i] = static_cast<int>(coord[i]);
    return ctx.decode_coords(coords);
}

namespace {

long long enumerate_budget(const PGroupContext& ctx, int exponent) {
    int lg = 1;
    while ((1 << lg) < ctx.table.size()) ++lg;
    long long b = 1;
    for (int i = 0; i < exponent; ++i) b *= lg;
    return std::max<long long>(b, 1);
}

}  // namespace

ElementSet enumerate_subgroup(const PGroupContext& ctx, const std::vector<int>& gens,
                              const SampleConfig& cfg, const Rng& base) {
    if (static_cast<long long>(gens.size()) > enumerate_budget(ctx, cfg.budget_exponent))
        throw std::runtime_error("enumerate_subgroup: generator budget exceeded, rebuild first");
    ElementSet out(ctx.table.size());
    if (gens.empty()) {
        out.set(ctx.identity);
        return out;
    }
    long long s = cfg.sample_count > 0 ? cfg.sample_count
                                       : default_sample_count(ctx.table.size());
    for (long long i = 0; i < s; ++i) {
        Rng stream = base.split(static_cast<uint64_t>(i));
        out.set(sample_element(ctx, gens, stream));
    }
    return out;
}

bool member_with_buffers(const PGroupContext& ctx, const SubgroupTree& tree,
                         const ChangeBuffer& buf, int g, const SampleConfig& cfg,
                         const Rng& base) {
    long long member_budget = enumerate_budget(ctx, cfg.budget_exponent + 1);
    if (buf.inserts.count() > member_budget || buf.deletes.count() > member_budget)
        throw std::runtime_error("member_with_buffers: buffer budget exceeded, rebuild first");
    if (g == ctx.identity) return true;

    std::vector<int> deleted_indices;
    buf.deletes.for_each([&](int elem) {
        for (int i = 0; i < tree.generator_count(); ++i)
            if (tree.label(i) == elem) {
                deleted_indices.push_back(i);
                break;
            }
    });
    std::vector<int> gens = tree.residual_generators(deleted_indices);
    buf.inserts.for_each([&](int elem) { gens.push_back(elem); });
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    return enumerate_subgroup(ctx, gens, cfg, base).test(g);
}

RandEngine::RandEngine(const GroupContext& ctx, const std::vector<int>& generators,
                       SampleConfig cfg)
    : ctx_(&ctx), generators_(generators), buffer_(ctx.size()), cfg_(cfg) {
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    if (cfg_.sample_count == 0) cfg_.sample_count = default_sample_count(ctx.size());

    trees_.reserve(ctx.sylow.components.size());
    for (const auto& comp : ctx.sylow.components) {
        std::vector<int> labels;
        labels.reserve(generators_.size());
        for (int g : generators_) labels.push_back(comp.projection[g]);
        trees_.emplace_back(comp.ctx, labels);
        build_work_ += trees_.back().build_set_products() + trees_.back().build_membership_probes();
        build_rounds_ = std::max(build_rounds_, trees_.back().build_rounds());
    }
    for (int g : generators_) buffer_.snapshot.set(g);
}

std::vector<int> RandEngine::effective_generators() const {
    std::vector<int> out;
    buffer_.snapshot.for_each([&](int g) {
        if (!buffer_.deletes.test(g)) out.push_back(g);
    });
    buffer_.inserts.for_each([&](int g) { out.push_back(g); });
    std::sort(out.begin(), out.end());
    return out;
}

bool RandEngine::member(int g, const Rng& query_rng) const {
    if (g == ctx_->identity) return true;

    std::vector<int> deleted_indices;
    buffer_.deletes.for_each([&](int elem) {
        auto it = std::lower_bound(generators_.begin(), generators_.end(), elem);
        if (it != generators_.end() && *it == elem)
            deleted_indices.push_back(static_cast<int>(it - generators_.begin()));
    });

    for (size_t c = 0; c < trees_.size(); ++c) {
        const SylowComponent& comp = ctx_->sylow.components[c];
        std::vector<int> gens = trees_[c].residual_generators(deleted_indices);
        buffer_.inserts.for_each([&](int elem) { gens.push_back(comp.projection[elem]); });
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        ElementSet listed =
            enumerate_subgroup(comp.ctx, gens, cfg_, query_rng.split(static_cast<uint64_t>(c)));
        if (!listed.test(comp.projection[g])) return false;
    }
    return true;
}

}  // namespace cayleydyn
