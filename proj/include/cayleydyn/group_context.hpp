#pragma once

#include <memory>
#include <vector>

#include "cayleydyn/cayley_table.hpp"
#include "cayleydyn/power_table.hpp"

namespace cayleydyn {

/// Exponent-vector coordinates of a group element with respect to an
/// independent basis; coordinate i lives in [0, p^{m_i}).
using ExponentVector = std::vector<int>;

/// Independent generating set of an abelian p-group: products
/// g_1^{e_1}...g_l^{e_l} with 0 <= e_i < p^{m_i} hit every element exactly
/// once.
struct Basis {
    std::vector<int> gens;    // element ids, local to the p-group table
    std::vector<int> orders;  // p^{m_1}..p^{m_l}
    long p = 0;
    int m = 0;  // sum of m_i; p^m = group order
};

/// A fully preprocessed abelian p-group: table, powers, basis, and the
/// bidirectional element <-> exponent-vector maps.
struct PGroupContext {
    CayleyTable table;
    int identity = 0;
    long p = 0;
    int m = 0;
    PowerTable powers;
    Basis basis;
    std::vector<ExponentVector> repr;  // element -> coordinates
    std::vector<int> decode;           // mixed-radix coordinate index -> element
    std::vector<int> strides;          // mixed-radix strides for decode

    int rank() const { return static_cast<int>(basis.gens.size()); }

    int decode_coords(const ExponentVector& coords) const;

    /// Product over the basis: useful when verifying witnesses.
    int product_of_powers(const std::vector<int>& elems, const std::vector<long long>& exps) const;
};

/// One Sylow component: the sub-table on {x^b : x in G} with index maps.
struct SylowComponent {
    long prime = 0;
    int exponent = 0;   // a_i with p^{a_i} = component order
    long cofactor = 0;  // b_i = n / p^{a_i}
    PGroupContext ctx;  // local table, basis, ...
    std::vector<int> to_global;   // local element id -> id in G
    std::vector<int> projection;  // g in G -> local id of g^{b_i}
};

struct SylowDecomposition {
    std::vector<SylowComponent> components;
};

/// Preprocessed abelian group: powers, Sylow decomposition, per-component
/// bases. Immutable after construction; safe to share across readers.
struct GroupContext {
    CayleyTable table;
    int identity = 0;
    PowerTable powers;
    SylowDecomposition sylow;

    int size() const { return table.size(); }

    static GroupContext build(const CayleyTable& t);
};

/// Decompose an abelian group into its Sylow p-components, materialized as
/// standalone tables with index and projection maps. Rejects non-abelian
/// input.
SylowDecomposition sylow_decompose(const CayleyTable& t);

/// Independent basis of an abelian p-group by recursive maximal-order
/// construction; also fills the element <-> exponent-vector maps. Throws if
/// the representation map fails to cover the group bijectively.
PGroupContext build_pgroup_context(const CayleyTable& t, int identity, long p, int m);

ExponentVector exponent_vector(const PGroupContext& ctx, int g);

/// Scan S in ascending element order, keeping x iff it is outside the
/// closure of the kept prefix. |result| <= ceil(log2 n) for group input.
std::vector<int> reduce_generators(const CayleyTable& t, int identity,
                                   const std::vector<int>& gens);

}  // namespace cayleydyn
