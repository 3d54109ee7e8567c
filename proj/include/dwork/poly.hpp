#pragma once

// Dense univariate polynomials with exact rational coefficients, plus the
// integer-primitive machinery (content, subresultant gcd) needed to keep
// rational-function arithmetic from blowing up during elimination.

#include "dwork/numeric.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace dwork {

class Poly {
public:
    Poly() {}
    explicit Poly(BigRat c) { if (c != 0) coef_ = {std::move(c)}; }
    explicit Poly(std::vector<BigRat> coef) : coef_(std::move(coef)) { trim(); }

    static Poly monomial(const BigRat& c, size_t deg) {
        if (c == 0) return Poly();
        std::vector<BigRat> v(deg + 1, BigRat(0));
        v[deg] = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(1, 1); }

    bool is_zero() const { return coef_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coef_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return coef_; }
    BigRat coeff(size_t i) const { return i < coef_.size() ? coef_[i] : BigRat(0); }
    const BigRat& leading() const {
        if (coef_.empty()) throw std::domain_error("leading of zero polynomial");
        return coef_.back();
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coef_) c = -c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<BigRat> v(std::max(coef_.size(), o.coef_.size()), BigRat(0));
        for (size_t i = 0; i < coef_.size(); ++i) v[i] += coef_[i];
        for (size_t i = 0; i < o.coef_.size(); ++i) v[i] += o.coef_[i];
        return Poly(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<BigRat> v(coef_.size() + o.coef_.size() - 1, BigRat(0));
        for (size_t i = 0; i < coef_.size(); ++i) {
            if (coef_[i] == 0) continue;
            for (size_t j = 0; j < o.coef_.size(); ++j)
                if (o.coef_[j] != 0) v[i + j] += coef_[i] * o.coef_[j];
        }
        return Poly(std::move(v));
    }
    Poly operator*(const BigRat& c) const {
        if (c == 0) return Poly();
        Poly r(*this);
        for (auto& x : r.coef_) x *= c;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return coef_ == o.coef_; }
    bool operator!=(const Poly& o) const { return coef_ != o.coef_; }

    BigRat eval(const BigRat& x) const {
        BigRat r = 0;
        for (size_t i = coef_.size(); i-- > 0;) r = r * x + coef_[i];
        return r;
    }

    Poly derivative() const {
        if (coef_.size() <= 1) return Poly();
        std::vector<BigRat> v(coef_.size() - 1);
        for (size_t i = 1; i < coef_.size(); ++i) v[i - 1] = coef_[i] * BigRat(static_cast<long>(i));
        return Poly(std::move(v));
    }

    // Quotient and remainder, exact over Q.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly division by zero");
        Poly r = *this;
        std::vector<BigRat> q;
        long dd = d.degree();
        if (r.degree() >= dd) q.assign(r.degree() - dd + 1, BigRat(0));
        while (!r.is_zero() && r.degree() >= dd) {
            long k = r.degree() - dd;
            BigRat c = r.leading() / d.leading();
            q[k] = c;
            r -= d * Poly::monomial(c, k);
        }
        return {Poly(std::move(q)), r};
    }

    Poly shifted(long k) const {  // multiply by x^k (k >= 0)
        if (is_zero() || k == 0) return *this;
        std::vector<BigRat> v(coef_.size() + k, BigRat(0));
        for (size_t i = 0; i < coef_.size(); ++i) v[i + k] = coef_[i];
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (BigRat(1) / leading());
    }

    std::string str(const std::string& var) const;

private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }
    std::vector<BigRat> coef_;
};

// -- integer-primitive form -------------------------------------------------

// Writes p = (num/den) * P with P primitive over Z (content 1, positive lead).
struct PrimitivePoly {
    BigInt num, den;            // scale factor num/den
    std::vector<BigInt> coef;   // primitive integer coefficients
};

inline PrimitivePoly to_primitive(const Poly& p) {
    PrimitivePoly out;
    if (p.is_zero()) {
        out.num = 0;
        out.den = 1;
        return out;
    }
    BigInt den = 1;
    for (const auto& c : p.coeffs()) {
        BigInt d = rat_den(c), g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<BigInt> v;
    v.reserve(p.coeffs().size());
    BigInt content = 0;
    for (const auto& c : p.coeffs()) {
        BigInt x = rat_num(c) * (den / rat_den(c));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        v.push_back(std::move(x));
    }
    if (v.back() < 0) content = -content;
    for (auto& x : v) x /= content;
    out.num = content;
    out.den = den;
    out.coef = std::move(v);
    return out;
}

inline Poly from_primitive(const std::vector<BigInt>& coef) {
    std::vector<BigRat> v;
    v.reserve(coef.size());
    for (const auto& c : coef) v.emplace_back(c);
    return Poly(std::move(v));
}

namespace detail {

inline std::vector<BigInt> ipoly_mul_scalar(std::vector<BigInt> a, const BigInt& c) {
    for (auto& x : a) x *= c;
    return a;
}

// pseudo-remainder of a by b (both integer polynomials, b nonzero)
inline std::vector<BigInt> ipoly_prem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    long db = static_cast<long>(b.size()) - 1;
    const BigInt& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        BigInt la = a.back();
        long k = static_cast<long>(a.size()) - 1 - db;
        for (auto& x : a) x *= lb;
        for (long i = 0; i <= db; ++i) a[i + k] -= la * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

inline std::vector<BigInt> ipoly_primitive(std::vector<BigInt> a) {
    if (a.empty()) return a;
    BigInt g = 0;
    for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (a.back() < 0) g = -g;
    for (auto& x : a) x /= g;
    return a;
}

}  // namespace detail

namespace detail {

// index of the lowest nonzero coefficient, or -1
inline long low_index(const Poly& p) {
    for (long i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) return i;
    return -1;
}

inline bool is_monomial(const Poly& p) {
    return !p.is_zero() && low_index(p) == p.degree();
}

}  // namespace detail

// gcd over Q, returned monic.  Primitive PRS keeps intermediate integers sane.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // monomial fast path: gcd(c x^k, q) = x^min(k, val(q))
    if (detail::is_monomial(a))
        return Poly::monomial(1, std::min<long>(a.degree(), detail::low_index(b)));
    if (detail::is_monomial(b))
        return Poly::monomial(1, std::min<long>(b.degree(), detail::low_index(a)));
    std::vector<BigInt> A = to_primitive(a).coef;
    std::vector<BigInt> B = to_primitive(b).coef;
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        auto R = detail::ipoly_prem(A, B);
        A = std::move(B);
        B = detail::ipoly_primitive(std::move(R));
    }
    return from_primitive(A).monic();
}

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = coef_.size(); i-- > 0;) {
        const BigRat& c = coef_[i];
        if (c == 0) continue;
        std::string term;
        BigRat ac = c > 0 ? c : BigRat(-c);
        if (i == 0) {
            term = ac.get_str();
        } else {
            if (ac != 1) term = ac.get_str() + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace dwork
