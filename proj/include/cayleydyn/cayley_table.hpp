#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cayleydyn {

/// An n x n operation table over elements 0..n-1. The single source of
/// algebraic truth for every structure in this library.
class CayleyTable {
public:
    CayleyTable() = default;
    CayleyTable(int n, std::vector<int> entries);

    int size() const { return n_; }
    int op(int a, int b) const { return entries_[static_cast<size_t>(a) * n_ + b]; }
    void set_op(int a, int b, int v) { entries_[static_cast<size_t>(a) * n_ + b] = v; }

    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const CayleyTable& o) const = default;

    /// Number of cells where the two tables differ (edit distance).
    int distance(const CayleyTable& o) const;

    uint64_t hash() const;

private:
    int n_ = 0;
    std::vector<int> entries_;
};

enum class StructureKind {
    Magma,
    Monoid,
    CommutativeMonoid,
    Group,
    AbelianGroup,
};

const char* to_string(StructureKind k);

struct StructureClass {
    StructureKind kind = StructureKind::Magma;
    std::optional<int> identity;  // populated whenever a two-sided identity exists

    bool at_least_monoid() const { return kind != StructureKind::Magma; }
    bool is_group() const {
        return kind == StructureKind::Group || kind == StructureKind::AbelianGroup;
    }
    bool commutative() const {
        return kind == StructureKind::CommutativeMonoid || kind == StructureKind::AbelianGroup;
    }
};

/// Exhaustive classification: identity scan, O(n^3) associativity check,
/// inverse and commutativity checks. Magma is the floor, never an error.
StructureClass validate_table(const CayleyTable& t);

/// Text format: first non-comment line is n, then n rows of n space-separated
/// 0-based indices; lines starting with '#' are ignored.
CayleyTable parse_table(std::istream& in);
CayleyTable load_table(const std::string& path);
std::string format_table(const CayleyTable& t);
void save_table(const CayleyTable& t, const std::string& path);

}  // namespace cayleydyn
