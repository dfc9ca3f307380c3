#include "cayleydyn/table_gen.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "cayleydyn/rng.hpp"

namespace cayleydyn {

CayleyTable cyclic_table(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_table: n must be >= 1");
    std::vector<int> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[static_cast<size_t>(i) * n + j] = (i + j) % n;
    return CayleyTable(n, std::move(e));
}

CayleyTable product_table(const CayleyTable& a, const CayleyTable& b) {
    const int na = a.size(), nb = b.size();
    const int n = na * nb;
    // element (x, y) gets index x*nb + y
    std::vector<int> e(static_cast<size_t>(n) * n);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2) {
                    int i = x1 * nb + y1, j = x2 * nb + y2;
                    e[static_cast<size_t>(i) * n + j] = a.op(x1, x2) * nb + b.op(y1, y2);
                }
    return CayleyTable(n, std::move(e));
}

CayleyTable s3_table() {
    // permutations of {0,1,2} listed in lexicographic order
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int* p) {
        for (int k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return k;
        return -1;
    };
    std::vector<int> e(36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int c[3];
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];  // i after j
            e[static_cast<size_t>(i) * 6 + j] = index_of(c);
        }
    return CayleyTable(6, std::move(e));
}

CayleyTable shuffle_labels(const CayleyTable& t, uint64_t seed) {
    const int n = t.size();
    Rng rng = Rng(seed).split(0x7ab3);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below_int(i + 1)]);
    std::vector<int> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<size_t>(perm[i]) * n + perm[j]] = perm[t.op(i, j)];
    return CayleyTable(n, std::move(e));
}

CayleyTable random_abelian_table(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_abelian_table: n must be >= 1");
    Rng rng = Rng(seed).split(0xab31);
    CayleyTable acc = cyclic_table(1);
    int rest = n;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p) continue;
        int a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        // random partition of a: repeatedly split off a part
        std::vector<int> parts;
        int left = a;
        while (left > 0) {
            int part = 1 + rng.below_int(left);
            parts.push_back(part);
            left -= part;
        }
        for (int part : parts) {
            int q = 1;
            for (int k = 0; k < part; ++k) q *= p;
            acc = product_table(acc, cyclic_table(q));
        }
    }
    return shuffle_labels(acc, rng.next());
}

CayleyTable random_magma_table(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_magma_table: n must be >= 1");
    Rng rng = Rng(seed).split(0x3a6d);
    std::vector<int> e(static_cast<size_t>(n) * n);
    for (auto& v : e) v = rng.below_int(n);
    return CayleyTable(n, std::move(e));
}

namespace {

CayleyTable parse_chain(const std::string& s, size_t& pos, uint64_t seed);

int parse_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) throw std::invalid_argument("table spec: expected a number in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
}

bool consume(const std::string& s, size_t& pos, const std::string& word) {
    if (s.compare(pos, word.size(), word) == 0) {
        pos += word.size();
        return true;
    }
    return false;
}

CayleyTable parse_atom(const std::string& s, size_t& pos, uint64_t seed) {
    if (consume(s, pos, "cyclic:")) return cyclic_table(parse_int(s, pos));
    if (consume(s, pos, "s3")) return s3_table();
    if (consume(s, pos, "random-abelian:")) return random_abelian_table(parse_int(s, pos), seed);
    if (consume(s, pos, "random-magma:")) return random_magma_table(parse_int(s, pos), seed);
    if (consume(s, pos, "product:")) return parse_chain(s, pos, seed);
    throw std::invalid_argument("table spec: cannot parse '" + s.substr(pos) + "'");
}

// atom ('x' atom)* — so product:cyclic:2xcyclic:4 and bare n-ary chains both work
CayleyTable parse_chain(const std::string& s, size_t& pos, uint64_t seed) {
    CayleyTable left = parse_atom(s, pos, seed);
    while (pos < s.size() && s[pos] == 'x') {
        ++pos;
        seed ^= 0x9e3779b97f4a7c15ull;
        left = product_table(left, parse_atom(s, pos, seed));
    }
    return left;
}

}  // namespace

CayleyTable table_from_spec(const std::string& spec, uint64_t seed) {
    size_t pos = 0;
    CayleyTable t = parse_chain(spec, pos, seed);
    if (pos != spec.size())
        throw std::invalid_argument("table spec: trailing characters in '" + spec + "'");
    return t;
}

}  // namespace cayleydyn
