#include "cayleydyn/cayley_table.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cayleydyn {

CayleyTable::CayleyTable(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("CayleyTable: n must be >= 1");
    if (entries_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("CayleyTable: entry count != n*n");
    for (int v : entries_)
        if (v < 0 || v >= n)
            throw std::invalid_argument("CayleyTable: entry out of range (closure violated)");
}

int CayleyTable::distance(const CayleyTable& o) const {
    if (n_ != o.n_) throw std::invalid_argument("distance: size mismatch");
    int d = 0;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) ++d;
    return d;
}

uint64_t CayleyTable::hash() const {
    // FNV-1a over the entries; used only for memoization.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(n_));
    for (int v : entries_) mix(static_cast<uint64_t>(v));
    return h;
}

const char* to_string(StructureKind k) {
    switch (k) {
        case StructureKind::Magma: return "magma";
        case StructureKind::Monoid: return "monoid";
        case StructureKind::CommutativeMonoid: return "commutative-monoid";
        case StructureKind::Group: return "group";
        case StructureKind::AbelianGroup: return "abelian-group";
    }
    return "?";
}

StructureClass validate_table(const CayleyTable& t) {
    const int n = t.size();
    StructureClass out;

    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (t.op(e, x) != x || t.op(x, e) != x) ok = false;
        if (ok) {
            out.identity = e;
            break;  // two-sided identities are unique
        }
    }

    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
        for (int b = 0; b < n && assoc; ++b)
            for (int c = 0; c < n; ++c)
                if (t.op(t.op(a, b), c) != t.op(a, t.op(b, c))) {
                    assoc = false;
                    break;
                }

    if (!assoc || !out.identity) return out;  // Magma (identity may still be set)

    bool comm = true;
    for (int a = 0; a < n && comm; ++a)
        for (int b = a + 1; b < n; ++b)
            if (t.op(a, b) != t.op(b, a)) {
                comm = false;
                break;
            }

    const int e = *out.identity;
    bool invertible = true;
    for (int a = 0; a < n && invertible; ++a) {
        bool found = false;
        for (int b = 0; b < n; ++b)
            if (t.op(a, b) == e && t.op(b, a) == e) {
                found = true;
                break;
            }
        if (!found) invertible = false;
    }

    if (invertible)
        out.kind = comm ? StructureKind::AbelianGroup : StructureKind::Group;
    else
        out.kind = comm ? StructureKind::CommutativeMonoid : StructureKind::Monoid;
    return out;
}

CayleyTable parse_table(std::istream& in) {
    std::string line;
    std::vector<int> values;
    int n = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int v;
        while (ls >> v) {
            if (n < 0) {
                n = v;
                if (n < 1) throw std::runtime_error("table format: n must be >= 1");
            } else {
                values.push_back(v);
            }
        }
    }
    if (n < 0) throw std::runtime_error("table format: missing size line");
    if (values.size() != static_cast<size_t>(n) * n)
        throw std::runtime_error("table format: expected " + std::to_string(n) + "*" +
                                 std::to_string(n) + " entries, got " +
                                 std::to_string(values.size()));
    return CayleyTable(n, std::move(values));
}

CayleyTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    return parse_table(in);
}

std::string format_table(const CayleyTable& t) {
    std::ostringstream out;
    out << t.size() << "\n";
    for (int i = 0; i < t.size(); ++i) {
        for (int j = 0; j < t.size(); ++j) {
            if (j) out << ' ';
            out << t.op(i, j);
        }
        out << "\n";
    }
    return out.str();
}

void save_table(const CayleyTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write table file: " + path);
    out << format_table(t);
}

}  // namespace cayleydyn
