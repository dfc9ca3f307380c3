#pragma once

#include <optional>
#include <vector>

#include "cayleydyn/poly.hpp"

namespace cayleydyn {
namespace linalg {

/// Dense integer matrix, row major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<BigInt> data;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, BigInt(0)) {}

    BigInt& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    bool operator==(const IntMat& o) const = default;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_add(const IntMat& a, const IntMat& b);

/// Fraction-free (Bareiss) determinant; the reference route used by tests
/// and oracles.
BigInt bareiss_determinant(IntMat m);

/// p-adic valuation of a nonzero integer.
int p_adic_valuation(BigInt v, long p);

/// Characteristic data of a square integer matrix M: det(xI - M) and
/// adj(xI - M), computed by the Faddeev-LeVerrier recurrence. These stay
/// well-defined (and the shifted matrix invertible) even when M is singular.
struct CharData {
    int dim = 0;
    Poly charpoly;                         // monic, degree = dim
    std::vector<std::vector<Poly>> adjugate;  // adj(xI - M)

    /// det(M) = (-1)^dim * charpoly(0).
    BigInt det() const;
};

CharData characteristic_data(const IntMat& m);

using RatMat = std::vector<std::vector<RatFun>>;

/// Gauss-Jordan inverse over the rational-function field. Empty result when
/// the matrix is singular.
std::optional<RatMat> ratfun_inverse(const RatMat& m);

/// Rank-t updates of characteristic data for M -> M + U*C*V, run through the
/// binomial inverse theorem applied to the always-invertible xI - M, with
/// rational-function arithmetic in the middle inverse:
///   (B + U'CV)^{-1} = B^{-1} - B^{-1}U'(I + C V B^{-1} U')^{-1} C V B^{-1}.
/// If the t x t middle matrix comes out singular the update falls back to a
/// from-scratch recomputation of the new matrix (counted via *fallback).
CharData smw_update(const CharData& base, const IntMat& m_new, const IntMat& u,
                    const IntMat& c, const IntMat& v, bool* used_fallback = nullptr);

/// Determinant-only route via the matrix determinant lemma at xI - M:
/// returns the new charpoly det(xI - (M + U*C*V)) and the integer
/// determinant recovered from its constant term.
std::pair<Poly, BigInt> det_update(const CharData& base, const IntMat& u, const IntMat& c,
                                   const IntMat& v);

/// Exact determinant by Chinese remaindering over small primes. Throws if
/// the prime product cannot certify the result against the Hadamard bound.
BigInt det_crt(const IntMat& b, const std::vector<long>& primes);

/// Primes for det_crt: enough odd primes to cover 2x the Hadamard bound.
std::vector<long> crt_primes_for(const IntMat& b);

/// Integer solution of A z = b via a column Hermite reduction with a
/// recorded unimodular transform; nullopt when no integer solution exists.
std::optional<std::vector<BigInt>> solve_integer(const IntMat& a, const std::vector<BigInt>& b);

}  // namespace linalg
}  // namespace cayleydyn
