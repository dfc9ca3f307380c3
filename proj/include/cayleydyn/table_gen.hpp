#pragma once

#include <cstdint>
#include <string>

#include "cayleydyn/cayley_table.hpp"

namespace cayleydyn {

CayleyTable cyclic_table(int n);
CayleyTable product_table(const CayleyTable& a, const CayleyTable& b);
CayleyTable s3_table();

/// Random direct product of cyclic p-groups of total order n, with element
/// labels shuffled by the seed. Always validates as an abelian group.
CayleyTable random_abelian_table(int n, uint64_t seed);

CayleyTable random_magma_table(int n, uint64_t seed);

/// Relabel elements by a seeded permutation (an isomorphic copy).
CayleyTable shuffle_labels(const CayleyTable& t, uint64_t seed);

/// Generator-spec grammar:
///   cyclic:<n> | s3 | random-abelian:<n> | random-magma:<n>
///   | product:<spec>x<spec>        (right-associative, so n-ary chains work)
CayleyTable table_from_spec(const std::string& spec, uint64_t seed);

}  // namespace cayleydyn
