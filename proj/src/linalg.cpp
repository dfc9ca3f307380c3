#include "cayleydyn/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayleydyn {
namespace linalg {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const BigInt& v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += v * b.at(k, j);
        }
    return out;
}

IntMat mat_add(const IntMat& a, const IntMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_add: shape");
    IntMat out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

BigInt bareiss_determinant(IntMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("bareiss: square matrix required");
    const int n = m.rows;
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev;  // exact by the Bareiss identity
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

int p_adic_valuation(BigInt v, long p) {
    if (v == 0) throw std::invalid_argument("p_adic_valuation of zero");
    if (v < 0) v = -v;
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

BigInt CharData::det() const {
    BigInt c0 = charpoly.constant_term();
    return (dim % 2 == 0) ? c0 : BigInt(-c0);
}

CharData characteristic_data(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("characteristic_data: square required");
    const int r = m.rows;
    CharData out;
    out.dim = r;
    if (r == 0) {
        out.charpoly = Poly(BigInt(1));
        return out;
    }

    // Faddeev-LeVerrier: N_0 = I, M_k = M N_{k-1}, c_k = -tr(M_k)/k,
    // N_k = M_k + c_k I;  adj(xI - M) = sum_k N_k x^{r-1-k}.
    std::vector<IntMat> n_mats;
    n_mats.push_back(IntMat::identity(r));
    std::vector<BigInt> c(r + 1);
    c[0] = 1;
    for (int k = 1; k <= r; ++k) {
        IntMat mk = mat_mul(m, n_mats.back());
        BigInt tr = 0;
        for (int i = 0; i < r; ++i) tr += mk.at(i, i);
        if (tr % k != 0) throw std::logic_error("characteristic_data: trace divisibility");
        c[k] = -tr / k;
        IntMat nk = mk;
        for (int i = 0; i < r; ++i) nk.at(i, i) += c[k];
        if (k < r) n_mats.push_back(std::move(nk));
        else {
            for (const auto& v : nk.data)
                if (v != 0) throw std::logic_error("characteristic_data: recurrence check");
        }
    }

    std::vector<BigInt> chi(r + 1);
    for (int k = 0; k <= r; ++k) chi[r - k] = c[k];
    out.charpoly = Poly(std::move(chi));

    out.adjugate.assign(r, std::vector<Poly>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::vector<BigInt> coeffs(r);  // coefficient of x^{r-1-k} is N_k[i][j]
            for (int k = 0; k < r; ++k) coeffs[r - 1 - k] = n_mats[k].at(i, j);
            out.adjugate[i][j] = Poly(std::move(coeffs));
        }
    return out;
}

std::optional<RatMat> ratfun_inverse(const RatMat& m) {
    const int n = static_cast<int>(m.size());
    RatMat work = m;
    RatMat inv(n, std::vector<RatFun>(n));
    for (int i = 0; i < n; ++i) inv[i][i] = RatFun::from_int(1);

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!work[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(work[col], work[pivot]);
        std::swap(inv[col], inv[pivot]);
        RatFun p = work[col][col];
        for (int j = 0; j < n; ++j) {
            work[col][j] = work[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || work[i][col].is_zero()) continue;
            RatFun f = work[i][col];
            for (int j = 0; j < n; ++j) {
                work[i][j] = work[i][j] - f * work[col][j];
                inv[i][j] = inv[i][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

RatMat to_ratfun(const IntMat& m) {
    RatMat out(m.rows, std::vector<RatFun>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i][j] = RatFun(Poly(m.at(i, j)));
    return out;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    const int r = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    const int c = static_cast<int>(b[0].size());
    RatMat out(r, std::vector<RatFun>(c));
    for (int i = 0; i < r; ++i)
        for (int x = 0; x < k; ++x) {
            if (a[i][x].is_zero()) continue;
            for (int j = 0; j < c; ++j) {
                if (b[x][j].is_zero()) continue;
                out[i][j] = out[i][j] + a[i][x] * b[x][j];
            }
        }
    return out;
}

RatFun rat_det(RatMat m) {
    const int n = static_cast<int>(m.size());
    RatFun det = RatFun::from_int(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return RatFun();
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det = det * m[col][col];
        RatFun p = m[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            RatFun f = m[i][col] / p;
            for (int j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    return det;
}

/// B^{-1} for B = xI - M as a rational-function matrix: adj / charpoly.
RatMat shifted_inverse(const CharData& base) {
    RatMat out(base.dim, std::vector<RatFun>(base.dim));
    for (int i = 0; i < base.dim; ++i)
        for (int j = 0; j < base.dim; ++j)
            out[i][j] = RatFun(base.adjugate[i][j], base.charpoly);
    return out;
}

}  // namespace

CharData smw_update(const CharData& base, const IntMat& m_new, const IntMat& u,
                    const IntMat& c, const IntMat& v, bool* used_fallback) {
    if (used_fallback) *used_fallback = false;
    const int r = base.dim;
    const int t = c.rows;
    if (u.rows != r || u.cols != t || v.rows != t || v.cols != r || c.cols != t)
        throw std::invalid_argument("smw_update: shape mismatch");

    // xI - (M + UCV) = B + U(-C)V with B = xI - M
    RatMat binv = shifted_inverse(base);
    RatMat ur = to_ratfun(u), cr = to_ratfun(c), vr = to_ratfun(v);
    RatMat vbu = rat_mul(vr, rat_mul(binv, ur));
    RatMat middle(t, std::vector<RatFun>(t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            RatFun s = i == j ? RatFun::from_int(1) : RatFun();
            for (int k = 0; k < t; ++k) s = s - cr[i][k] * vbu[k][j];
            middle[i][j] = s;
        }

    auto mid_inv = ratfun_inverse(middle);
    if (!mid_inv) {
        if (used_fallback) *used_fallback = true;
        return characteristic_data(m_new);
    }

    // B'^{-1} = B^{-1} + B^{-1} U (I - C V B^{-1} U)^{-1} C V B^{-1}
    RatMat left = rat_mul(binv, ur);
    RatMat right = rat_mul(cr, rat_mul(vr, binv));
    RatMat corr = rat_mul(left, rat_mul(*mid_inv, right));

    RatFun chi_new = RatFun(base.charpoly) * rat_det(middle);
    CharData out;
    out.dim = r;
    out.charpoly = chi_new.as_poly();
    out.adjugate.assign(r, std::vector<Poly>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            RatFun entry = (binv[i][j] + corr[i][j]) * chi_new;
            out.adjugate[i][j] = entry.as_poly();
        }
    return out;
}

std::pair<Poly, BigInt> det_update(const CharData& base, const IntMat& u, const IntMat& c,
                                   const IntMat& v) {
    const int r = base.dim;
    const int t = c.rows;
    if (u.rows != r || u.cols != t || v.rows != t || v.cols != r || c.cols != t)
        throw std::invalid_argument("det_update: shape mismatch");

    // det(B - UCV) = det(B) det(I_t - C V B^{-1} U), B = xI - M
    RatMat binv = shifted_inverse(base);
    RatMat ur = to_ratfun(u), cr = to_ratfun(c), vr = to_ratfun(v);
    RatMat vbu = rat_mul(vr, rat_mul(binv, ur));
    RatMat middle(t, std::vector<RatFun>(t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            RatFun s = i == j ? RatFun::from_int(1) : RatFun();
            for (int k = 0; k < t; ++k) s = s - cr[i][k] * vbu[k][j];
            middle[i][j] = s;
        }
    RatFun chi_new = RatFun(base.charpoly) * rat_det(middle);
    Poly chi = chi_new.as_poly();
    BigInt c0 = chi.constant_term();
    BigInt det = (r % 2 == 0) ? c0 : -c0;
    return {std::move(chi), std::move(det)};
}

namespace {

long mod_pow(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

long det_mod_prime(const IntMat& b, long q) {
    const int n = b.rows;
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigInt v = b.at(i, j) % q;
            if (v < 0) v += q;
            m[i][j] = static_cast<long>(v);
        }
    long det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = (q - det) % q;
        }
        det = (det * m[col][col]) % q;
        long inv = mod_pow(m[col][col], q - 2, q);
        for (int i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            long f = (m[i][col] * inv) % q;
            for (int j = col; j < n; ++j) m[i][j] = ((m[i][j] - f * m[col][j]) % q + q) % q;
        }
    }
    return det;
}

BigInt hadamard_bound_sq(const IntMat& b) {
    BigInt prod = 1;
    for (int i = 0; i < b.rows; ++i) {
        BigInt row = 0;
        for (int j = 0; j < b.cols; ++j) row += b.at(i, j) * b.at(i, j);
        if (row == 0) return 0;  // zero row: determinant is 0, any bound works
        prod *= row;
    }
    return prod;
}

}  // namespace

BigInt det_crt(const IntMat& b, const std::vector<long>& primes) {
    if (b.rows != b.cols) throw std::invalid_argument("det_crt: square required");
    BigInt modulus = 1;
    for (long q : primes) modulus *= q;
    // certification: modulus must exceed 2 * Hadamard bound, i.e. modulus^2 > 4 H^2
    BigInt h2 = hadamard_bound_sq(b);
    if (modulus * modulus <= 4 * h2)
        throw std::invalid_argument("det_crt: prime product below certification bound");

    BigInt result = 0, partial = 1;
    for (long q : primes) {
        long rq = det_mod_prime(b, q);
        // incremental CRT: adjust result to match rq mod q
        BigInt cur = result % q;
        if (cur < 0) cur += q;
        long delta = static_cast<long>(((rq - static_cast<long>(cur)) % q + q) % q);
        BigInt pmodq = partial % q;
        long pinv = mod_pow(static_cast<long>(pmodq), q - 2, q);
        result += partial * ((delta * pinv) % q);
        partial *= q;
    }
    if (result * 2 > modulus) result -= modulus;  // symmetric range
    return result;
}

std::vector<long> crt_primes_for(const IntMat& b) {
    BigInt h2 = hadamard_bound_sq(b);
    std::vector<long> primes;
    BigInt modulus = 1;
    long candidate = 1000003;  // fixed ladder of primes above any p^m entry bound
    auto is_prime = [](long x) {
        for (long d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return x > 1;
    };
    while (modulus * modulus <= 4 * h2 || primes.empty()) {
        while (!is_prime(candidate)) ++candidate;
        primes.push_back(candidate);
        modulus *= candidate;
        ++candidate;
    }
    return primes;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMat& a, const std::vector<BigInt>& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_integer: rhs size");
    const int rows = a.rows, cols = a.cols;
    IntMat w = a;
    IntMat u = IntMat::identity(cols);

    auto col_sub = [&](int target, int src, const BigInt& q) {
        for (int i = 0; i < rows; ++i) w.at(i, target) -= q * w.at(i, src);
        for (int i = 0; i < cols; ++i) u.at(i, target) -= q * u.at(i, src);
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(w.at(i, x), w.at(i, y));
        for (int i = 0; i < cols; ++i) std::swap(u.at(i, x), u.at(i, y));
    };

    int pivots = std::min(rows, cols);
    for (int r = 0; r < pivots; ++r) {
        for (;;) {
            int best = -1;
            for (int j = r; j < cols; ++j) {
                if (w.at(r, j) == 0) continue;
                if (best < 0) best = j;
                else {
                    BigInt x = w.at(r, j) < 0 ? BigInt(-w.at(r, j)) : w.at(r, j);
                    BigInt y = w.at(r, best) < 0 ? BigInt(-w.at(r, best)) : w.at(r, best);
                    if (x < y) best = j;
                }
            }
            if (best < 0) break;  // row has no pivot among remaining columns
            if (best != r) col_swap(r, best);
            bool reduced = true;
            for (int j = r + 1; j < cols; ++j) {
                if (w.at(r, j) == 0) continue;
                BigInt q = w.at(r, j) / w.at(r, r);
                if (q != 0) col_sub(j, r, q);
                if (w.at(r, j) != 0) reduced = false;
            }
            if (reduced) break;
        }
    }

    // forward substitution over the (lower-triangular-by-construction) pivots
    std::vector<BigInt> y(cols, BigInt(0));
    for (int r = 0; r < rows; ++r) {
        BigInt residual = b[r];
        for (int j = 0; j < std::min(r, cols); ++j) residual -= w.at(r, j) * y[j];
        if (r >= cols || w.at(r, r) == 0) {
            if (residual != 0) return std::nullopt;
            continue;
        }
        if (residual % w.at(r, r) != 0) return std::nullopt;
        y[r] = residual / w.at(r, r);
    }

    std::vector<BigInt> z(cols, BigInt(0));
    for (int i = 0; i < cols; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < cols; ++j) acc += u.at(i, j) * y[j];
        z[i] = acc;
    }
    for (int r = 0; r < rows; ++r) {
        BigInt acc = 0;
        for (int j = 0; j < cols; ++j) acc += a.at(r, j) * z[j];
        if (acc != b[r]) throw std::logic_error("solve_integer: verification failed");
    }
    return z;
}

}  // namespace linalg
}  // namespace cayleydyn
