#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cayleydyn {
namespace linalg {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient polynomial, ascending coefficients, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(BigInt constant);
    explicit Poly(std::vector<BigInt> coeffs);

    static Poly xi();  // the indeterminate

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const BigInt& leading() const { return c_.back(); }
    BigInt coeff(int i) const;
    const BigInt& constant_term() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const BigInt& k) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    /// Exact division; throws if the remainder is nonzero.
    Poly divexact(const Poly& d) const;

    BigInt content() const;  // gcd of coefficients, sign of leading coefficient
    Poly primitive_part() const;

    std::string str() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// gcd up to sign, normalized to positive leading coefficient.
Poly poly_gcd(Poly a, Poly b);

/// Quotient field element as a (numerator, denominator) pair with
/// content-normalized gcd reduction after every ring operation; denominator
/// leading coefficient kept positive.
class RatFun {
public:
    RatFun() : num_(), den_(BigInt(1)) {}
    explicit RatFun(Poly p) : num_(std::move(p)), den_(BigInt(1)) {}
    RatFun(Poly num, Poly den);

    static RatFun from_int(long v) { return RatFun(Poly(BigInt(v))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0 && den_.leading() == 1; }
    const Poly& as_poly() const;

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator-() const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace linalg
}  // namespace cayleydyn
