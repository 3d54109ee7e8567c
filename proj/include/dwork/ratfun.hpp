#pragma once

// Rational functions in one symbol over Q, kept in lowest terms with a
// monic denominator.  These are the coefficient field for Picard-Fuchs
// derivations and the dependency solver.

#include "dwork/poly.hpp"

namespace dwork {

class RatFun {
public:
    RatFun() : num_(), den_(Poly(BigRat(1))) {}
    RatFun(BigRat c) : num_(Poly(std::move(c))), den_(Poly(BigRat(1))) {}
    RatFun(long c) : RatFun(BigRat(c)) {}
    explicit RatFun(Poly p) : num_(std::move(p)), den_(Poly(BigRat(1))) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFun variable() { return RatFun(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator-() const { RatFun r(*this); r.num_ = -r.num_; return r; }
    RatFun operator+(const RatFun& o) const {
        if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
        return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFun operator-(const RatFun& o) const { return *this + (-o); }
    RatFun operator*(const RatFun& o) const {
        // scalar fast path: no gcd needed
        if (o.den_.degree() == 0 && o.num_.degree() <= 0) {
            if (o.num_.is_zero()) return RatFun();
            RatFun r(*this);
            r.num_ = r.num_ * (o.num_.coeff(0) / o.den_.coeff(0));
            return r;
        }
        if (den_.degree() == 0 && num_.degree() <= 0) return o * *this;
        // cross-cancel before multiplying
        Poly g1 = poly_gcd(num_, o.den_);
        Poly g2 = poly_gcd(o.num_, den_);
        Poly n1 = g1.degree() > 0 ? num_.divmod(g1).first : num_;
        Poly d2 = g1.degree() > 0 ? o.den_.divmod(g1).first : o.den_;
        Poly n2 = g2.degree() > 0 ? o.num_.divmod(g2).first : o.num_;
        Poly d1 = g2.degree() > 0 ? den_.divmod(g2).first : den_;
        return RatFun(n1 * n2, d1 * d2);
    }
    RatFun operator/(const RatFun& o) const {
        if (o.is_zero()) throw std::domain_error("RatFun division by zero");
        return RatFun(num_ * o.den_, den_ * o.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    BigRat eval(const BigRat& x) const {
        BigRat d = den_.eval(x);
        if (d == 0) throw std::domain_error("RatFun::eval: pole");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var) const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(BigRat(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        BigRat lead = den_.leading();
        if (lead != 1) {
            BigRat inv = BigRat(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_, den_;
};

}  // namespace dwork
