#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP), residue rings Z/m, factorial ratios and generalized harmonic
// numbers.  Everything downstream (series, operators, character sums)
// is built on these types.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dwork {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt rat_num(const BigRat& q) { return q.get_num(); }
inline BigInt rat_den(const BigRat& q) { return q.get_den(); }

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRat pow_rat(const BigRat& base, unsigned long e) {
    BigRat r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

// H_k^(order) = sum_{j=1}^{k} 1/j^order, H_0 = 0.  These show up as the
// s-derivatives of log Gamma-factor ratios in the Frobenius solutions.
inline BigRat harmonic(unsigned long k, unsigned long order) {
    if (order == 0) throw std::invalid_argument("harmonic: order must be >= 1");
    BigRat sum = 0;
    for (unsigned long j = 1; j <= k; ++j)
        sum += make_rat(1, pow_int(BigInt(j), order));
    return sum;
}

// a! / (b!)^e as an exact rational.  With (a,b) = (n*m, m), e = n this is the
// coefficient pattern of the fundamental period series.
inline BigRat factorial_ratio(unsigned long a, unsigned long b, unsigned long e) {
    if (e == 0) throw std::invalid_argument("factorial_ratio: e must be >= 1");
    return make_rat(factorial(a), pow_int(factorial(b), e));
}

// An element of Z/m.  The modulus travels with the value so that mixing
// different p-adic precisions is caught at run time instead of silently
// truncating.
class ModRing {
public:
    ModRing() : mod_(0), val_(0) {}
    ModRing(BigInt value, BigInt modulus) : mod_(std::move(modulus)) {
        if (mod_ < 2) throw std::invalid_argument("ModRing: modulus must be >= 2");
        val_ = reduce(std::move(value));
    }

    const BigInt& value() const { return val_; }
    const BigInt& modulus() const { return mod_; }

    ModRing operator+(const ModRing& o) const { check(o); return ModRing(val_ + o.val_, mod_); }
    ModRing operator-(const ModRing& o) const { check(o); return ModRing(val_ - o.val_, mod_); }
    ModRing operator*(const ModRing& o) const { check(o); return ModRing(val_ * o.val_, mod_); }
    ModRing operator-() const { return ModRing(-val_, mod_); }

    ModRing& operator+=(const ModRing& o) { return *this = *this + o; }
    ModRing& operator-=(const ModRing& o) { return *this = *this - o; }
    ModRing& operator*=(const ModRing& o) { return *this = *this * o; }

    bool operator==(const ModRing& o) const { return mod_ == o.mod_ && val_ == o.val_; }
    bool operator!=(const ModRing& o) const { return !(*this == o); }

    ModRing scaled(const BigInt& c) const { return ModRing(val_ * c, mod_); }

    // Inverse via extended gcd; throws when gcd(value, modulus) != 1.
    ModRing inverse() const {
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   val_.get_mpz_t(), mod_.get_mpz_t());
        if (g != 1)
            throw std::domain_error("ModRing::inverse: value not invertible mod " +
                                    mod_.get_str());
        return ModRing(s, mod_);
    }

    ModRing pow(const BigInt& e) const {
        if (e < 0) return inverse().pow(-e);
        BigInt r;
        mpz_powm(r.get_mpz_t(), val_.get_mpz_t(), e.get_mpz_t(), mod_.get_mpz_t());
        return ModRing(r, mod_);
    }

    std::string str() const { return val_.get_str() + " mod " + mod_.get_str(); }

private:
    BigInt reduce(BigInt v) const {
        BigInt r;
        mpz_mod(r.get_mpz_t(), v.get_mpz_t(), mod_.get_mpz_t());
        return r;
    }
    void check(const ModRing& o) const {
        if (mod_ != o.mod_)
            throw std::invalid_argument("ModRing: mixed moduli " + mod_.get_str() +
                                        " vs " + o.mod_.get_str());
    }

    BigInt mod_;
    BigInt val_;
};

inline ModRing modring_pow(const ModRing& x, const BigInt& e) { return x.pow(e); }

// Reduce an exact rational into Z/m; the denominator must be prime to m.
inline ModRing rat_to_modring(const BigRat& q, const BigInt& modulus) {
    ModRing num(rat_num(q), modulus);
    ModRing den(rat_den(q), modulus);
    return num * den.inverse();
}

// p-adic valuation of a nonzero integer.
inline long valuation(BigInt v, const BigInt& p) {
    if (v == 0) throw std::invalid_argument("valuation of zero");
    long e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
        v /= p;
        ++e;
    }
    return e;
}

inline long valuation(const BigRat& q, const BigInt& p) {
    if (q == 0) throw std::invalid_argument("valuation of zero");
    return valuation(rat_num(q), p) - valuation(rat_den(q), p);
}

}  // namespace dwork
