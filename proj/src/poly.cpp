#include "cayleydyn/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cayleydyn {
namespace linalg {

namespace {
BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}
}  // namespace

Poly::Poly(BigInt constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::xi() { return Poly(std::vector<BigInt>{BigInt(0), BigInt(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const BigInt& Poly::constant_term() const {
    static const BigInt zero(0);
    return c_.empty() ? zero : c_[0];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    std::vector<BigInt> out = c_;
    for (auto& v : out) v = -v;
    return Poly(std::move(out));
}

Poly Poly::scaled(const BigInt& k) const {
    if (k == 0) return Poly();
    std::vector<BigInt> out = c_;
    for (auto& v : out) v *= k;
    return Poly(std::move(out));
}

Poly Poly::divexact(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly::divexact by zero");
    if (is_zero()) return Poly();
    std::vector<BigInt> rem = c_;
    int dr = static_cast<int>(rem.size()) - 1;
    const int dd = d.degree();
    if (dr < dd) throw std::invalid_argument("Poly::divexact: not divisible (degree)");
    std::vector<BigInt> q(dr - dd + 1, BigInt(0));
    for (int k = dr - dd; k >= 0; --k) {
        BigInt top = rem[k + dd];
        if (top == 0) continue;
        if (top % d.c_[dd] != 0)
            throw std::invalid_argument("Poly::divexact: not divisible (coefficient)");
        BigInt f = top / d.c_[dd];
        q[k] = f;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= f * d.c_[i];
    }
    for (const auto& v : rem)
        if (v != 0) throw std::invalid_argument("Poly::divexact: nonzero remainder");
    return Poly(std::move(q));
}

BigInt Poly::content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = int_gcd(g, v);
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    BigInt g = content();
    std::vector<BigInt> out = c_;
    for (auto& v : out) v /= g;
    return Poly(std::move(out));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) out << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) out << "-";
        BigInt a = c_[i] < 0 ? BigInt(-c_[i]) : c_[i];
        if (a != 1 || i == 0) out << a.str();
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return out.str();
}

namespace {

// pseudo-remainder: lc(b)^(da-db+1) * a  mod b
Poly pseudo_rem(const Poly& a, const Poly& b) {
    std::vector<BigInt> rem = a.coeffs();
    const int db = b.degree();
    const BigInt lc = b.leading();
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= db) {
        BigInt top = rem[dr];
        for (auto& v : rem) v *= lc;
        if (top != 0)
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= top * b.coeff(i);
        rem.pop_back();
        dr = static_cast<int>(rem.size()) - 1;
        while (dr >= 0 && rem[dr] == 0) {
            rem.pop_back();
            --dr;
        }
    }
    return Poly(std::move(rem));
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        Poly out = a;
        if (out.leading() < 0) out = -out;
        return out;
    }
    BigInt ca = a.content(), cb = b.content();
    if (ca < 0) ca = -ca;
    if (cb < 0) cb = -cb;
    BigInt cont = [&] {
        BigInt x = ca, y = cb;
        while (y != 0) {
            BigInt r = x % y;
            x = y;
            y = r;
        }
        return x;
    }();

    Poly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = pseudo_rem(u, v);
        u = v;
        v = r.is_zero() ? Poly() : r.primitive_part();
    }
    Poly out = u.scaled(cont);
    if (out.leading() < 0) out = -out;
    return out;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(BigInt(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || (g.degree() == 0 && g.leading() != 1)) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

const Poly& RatFun::as_poly() const {
    if (!is_poly() && !is_zero())
        throw std::logic_error("RatFun::as_poly: denominator is not 1: " + str());
    return num_;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::invalid_argument("RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

std::string RatFun::str() const {
    if (is_poly() || is_zero()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace linalg
}  // namespace cayleydyn
