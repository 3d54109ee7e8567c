#pragma once

// p-adic character machinery: Teichmuller lifts (prime field and unramified
// extension), multiplicative character indices, Jacobi sums in Z/p^N, and
// Gauss-sum products reduced to units times powers of p.
//
// Gauss sums themselves live in a ramified extension (they involve zeta_p),
// so they are never materialized p-adically.  Products and ratios of them
// are reduced with
//     G_0 = -1,   G_a G_b = J(a,b) G_{a+b},   G_a G_{-a} = (-1)^a p,
// which keeps every stored quantity inside Z/p^N.  A complex-embedding path
// exists purely to validate these identities numerically.

#include "dwork/finite_field.hpp"
#include "dwork/numeric.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace dwork {

// index of the character T^m, canonical representative mod q-1
struct CharIndex {
    long m = 0;
    static CharIndex canonical(long m, uint64_t q) {
        long n = static_cast<long>(q) - 1;
        long r = m % n;
        if (r < 0) r += n;
        return CharIndex{r};
    }
    bool operator==(const CharIndex&) const = default;
};

// -- Teichmuller lifts --------------------------------------------------------

// table of Teichmuller lifts for F_p: T[x] for x in [0, p), T[0] = 0
inline std::vector<BigInt> teich_table(uint32_t p, unsigned N) {
    BigInt M = pow_int(BigInt(p), N);
    std::vector<BigInt> T(p);
    for (uint32_t x = 1; x < p; ++x) {
        BigInt t(x);
        for (unsigned i = 0; i < N; ++i) {
            BigInt r;
            mpz_powm_ui(r.get_mpz_t(), t.get_mpz_t(), p, M.get_mpz_t());
            t = r;
        }
        T[x] = t;
    }
    return T;
}

// Teichmuller lift in the unramified ring W(F_{p^r})/p^N, represented by a
// coefficient vector over Z/p^N against the naively lifted field modulus.
struct TeichValue {
    FieldElem base;
    unsigned precision = 0;
    std::vector<BigInt> lift;  // length r, coefficients mod p^N

    // prime-field convenience accessor
    const BigInt& scalar() const {
        for (size_t i = 1; i < lift.size(); ++i)
            if (lift[i] != 0) throw std::domain_error("TeichValue: not a prime-field value");
        return lift[0];
    }
};

namespace detail {

// multiply coefficient vectors mod (lifted modulus, p^N)
inline std::vector<BigInt> unram_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                     const std::vector<uint32_t>& modulus, const BigInt& M) {
    size_t r = modulus.size() - 1;
    std::vector<BigInt> prod(2 * r - 1, BigInt(0));
    for (size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % M;
    }
    for (size_t d = prod.size(); d-- > r;) {
        BigInt c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (size_t j = 0; j < r; ++j) {
            prod[d - r + j] -= c * modulus[j];
            mpz_mod(prod[d - r + j].get_mpz_t(), prod[d - r + j].get_mpz_t(), M.get_mpz_t());
        }
    }
    prod.resize(r);
    return prod;
}

inline std::vector<BigInt> unram_pow(std::vector<BigInt> base, BigInt e,
                                     const std::vector<uint32_t>& modulus, const BigInt& M) {
    size_t r = modulus.size() - 1;
    std::vector<BigInt> acc(r, BigInt(0));
    acc[0] = 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = unram_mul(acc, base, modulus, M);
        base = unram_mul(base, base, modulus, M);
        e >>= 1;
    }
    return acc;
}

}  // namespace detail

// T(x): the unique (q-1)-st root of unity in W(F_q)/p^N congruent to x mod p,
// computed as the limit of x^(q^n).
inline TeichValue teichmuller(FieldElem x, const ExtField& F, unsigned N) {
    if (F.is_zero(x)) throw std::invalid_argument("teichmuller: x must be nonzero");
    BigInt M = pow_int(BigInt(F.p()), N);
    size_t r = F.r();
    std::vector<BigInt> t(r);
    for (size_t i = 0; i < r; ++i) t[i] = F.coeff(x, static_cast<uint32_t>(i));
    BigInt q(static_cast<unsigned long>(F.q()));
    for (unsigned i = 0; i < N; ++i) t = detail::unram_pow(t, q, F.modulus(), M);
    // fixed point check: t^q == t
    if (detail::unram_pow(t, q, F.modulus(), M) != t)
        throw std::logic_error("teichmuller: iteration did not converge");
    return TeichValue{x, N, std::move(t)};
}

// -- Jacobi sums ---------------------------------------------------------------

// J(a,b) = sum_{x != 0,1} T^a(x) T^b(1-x) in Z/p^N (prime field).
// For a = b = 0 every term is 1 and the sum is p-2.
inline ModRing jacobi_sum(CharIndex a, CharIndex b, uint32_t p, unsigned N) {
    BigInt M = pow_int(BigInt(p), N);
    auto T = teich_table(p, N);
    long n = static_cast<long>(p) - 1;
    auto norm = [n](long m) { long r = m % n; return r < 0 ? r + n : r; };
    long am = norm(a.m), bm = norm(b.m);
    BigInt acc = 0;
    for (uint32_t x = 2; x < p; ++x) {
        BigInt t1, t2;
        mpz_powm_ui(t1.get_mpz_t(), T[x].get_mpz_t(), am, M.get_mpz_t());
        uint32_t y = (1 + p - x) % p;  // 1 - x mod p, nonzero since x != 1
        mpz_powm_ui(t2.get_mpz_t(), T[y].get_mpz_t(), bm, M.get_mpz_t());
        acc = (acc + t1 * t2) % M;
    }
    return ModRing(acc, M);
}

// -- scaled p-adic values --------------------------------------------------------

// value = unit * p^exp with the unit known mod p^K; division is exact and
// valuations are explicit, so ratios of Gauss sums with negative valuation
// stay representable.
class ScaledPadic {
public:
    ScaledPadic(ModRing unit, long exp, BigInt p) : u_(std::move(unit)), e_(exp), p_(std::move(p)) {}

    static ScaledPadic from_modring(const ModRing& v, const BigInt& p) {
        if (v.value() == 0)
            throw std::domain_error("ScaledPadic: value vanishes to working precision");
        long e = valuation(v.value(), p);
        BigInt u = v.value() / pow_int(p, e);
        return ScaledPadic(ModRing(u, v.modulus()), e, p);
    }
    static ScaledPadic one(const BigInt& modulus, const BigInt& p) {
        return ScaledPadic(ModRing(1, modulus), 0, p);
    }

    const ModRing& unit() const { return u_; }
    long exp() const { return e_; }

    ScaledPadic operator*(const ScaledPadic& o) const {
        return ScaledPadic(u_ * o.u_, e_ + o.e_, p_);
    }
    ScaledPadic operator/(const ScaledPadic& o) const {
        return ScaledPadic(u_ * o.u_.inverse(), e_ - o.e_, p_);
    }
    ScaledPadic times_int(const BigInt& n) const {
        if (n == 0) throw std::domain_error("ScaledPadic: multiplication by zero");
        long e = valuation(n, p_);
        return ScaledPadic(u_.scaled(n / pow_int(p_, e)), e_ + e, p_);
    }

    // the value as an element of Z/p^N; requires exp >= 0
    ModRing to_modring(unsigned N) const {
        if (e_ < 0)
            throw std::domain_error("ScaledPadic: negative valuation, not a p-adic integer");
        BigInt M = pow_int(p_, N);
        return ModRing(u_.value() * pow_int(p_, e_), M);
    }

private:
    ModRing u_;
    long e_;
    BigInt p_;
};

// -- Gauss-sum reduction ---------------------------------------------------------

struct GaussProductState {
    ScaledPadic scale;
    std::optional<long> pending;  // index of the one remaining Gauss factor
};

// Reduce prod_i G_{a_i} to scale * G_pending using the three identities above.
// All Jacobi sums are evaluated at working precision N_work.
inline GaussProductState reduce_gauss_product(const std::vector<CharIndex>& indices, uint32_t p,
                                              unsigned N_work) {
    BigInt P(p), M = pow_int(P, N_work);
    long n = static_cast<long>(p) - 1;
    auto norm = [n](long m) { long r = m % n; return r < 0 ? r + n : r; };
    GaussProductState st{ScaledPadic::one(M, P), std::nullopt};
    for (const auto& ci : indices) {
        long b = norm(ci.m);
        if (!st.pending) {
            st.pending = b;
            continue;
        }
        long a = *st.pending;
        if (a == 0) {
            st.scale = st.scale.times_int(-1);  // G_0 = -1
            st.pending = b;
        } else if (b == 0) {
            st.scale = st.scale.times_int(-1);
        } else if ((a + b) % n == 0) {
            BigInt f = (a % 2 == 0) ? BigInt(p) : BigInt(-static_cast<long>(p));
            st.scale = st.scale.times_int(f);  // G_a G_{-a} = (-1)^a p
            st.pending.reset();
        } else {
            ModRing J = jacobi_sum(CharIndex{a}, CharIndex{b}, p, N_work);
            st.scale = st.scale * ScaledPadic::from_modring(J, P);
            st.pending = norm(a + b);
        }
    }
    return st;
}

struct GaussRatio {
    std::vector<CharIndex> num_indices, den_indices;
    uint32_t p = 0;
    unsigned precision = 0;
    ModRing unit;  // value = unit * p^exponent
    long exponent = 0;

    bool integral() const { return exponent >= 0; }
    ModRing value() const {
        if (!integral())
            throw std::domain_error("GaussRatio: negative p-adic valuation");
        return unit.scaled(pow_int(BigInt(p), exponent));
    }
};

struct degenerate_ratio_error : std::domain_error {
    using std::domain_error::domain_error;
};

// prod G_{num} / prod G_{den} as a scaled p-adic value; the two telescoped
// remainders must carry the same character index or the ratio is ramified.
inline GaussRatio gauss_ratio(const std::vector<CharIndex>& num,
                              const std::vector<CharIndex>& den, uint32_t p, unsigned N,
                              unsigned slack = 8) {
    unsigned N_work = N + slack;
    long n = static_cast<long>(p) - 1;
    auto canon = [&](GaussProductState st) {
        // absorb a pending trivial character: G_0 = -1
        if (st.pending && *st.pending % n == 0) {
            st.scale = st.scale.times_int(-1);
            st.pending.reset();
        }
        return st;
    };
    GaussProductState a = canon(reduce_gauss_product(num, p, N_work));
    GaussProductState b = canon(reduce_gauss_product(den, p, N_work));
    std::optional<long> ia = a.pending, ib = b.pending;
    if (ia.has_value() != ib.has_value() || (ia && *ia != *ib))
        throw degenerate_ratio_error(
            "gauss_ratio: residual Gauss factors do not cancel (ramified ratio)");
    ScaledPadic v = a.scale / b.scale;
    ModRing unitN(v.unit().value(), pow_int(BigInt(p), N));
    GaussRatio out;
    out.num_indices = num;
    out.den_indices = den;
    out.p = p;
    out.precision = N;
    out.unit = unitN;
    out.exponent = v.exp();
    return out;
}

// -- complex validation path ------------------------------------------------------

struct ComplexGauss {
    CharIndex m;
    std::complex<double> value;
};

namespace detail {

inline std::vector<long> index_table(uint32_t p) {
    // discrete log base the smallest primitive root
    ExtField F = make_ext_field(p, 1);
    uint32_t g = F.generator().idx;
    std::vector<long> ind(p, 0);
    uint64_t cur = 1;
    for (uint32_t k = 0; k + 1 < p; ++k) {
        ind[cur] = k;
        cur = cur * g % p;
    }
    return ind;
}

}  // namespace detail

// G_m over C with theta(x) = exp(2 pi i x / p) and chi the complex embedding
// of the Teichmuller character determined by the canonical primitive root.
inline ComplexGauss complex_gauss_sum(CharIndex m, uint32_t p) {
    const double tau = 6.283185307179586476925287;
    auto ind = detail::index_table(p);
    std::complex<double> acc = 0;
    for (uint32_t x = 1; x < p; ++x) {
        double aa = tau * (static_cast<double>(x) / p);
        double mm = tau * (static_cast<double>((m.m % (p - 1) + (p - 1)) % (p - 1)) * ind[x] /
                           (p - 1));
        acc += std::complex<double>(std::cos(aa), std::sin(aa)) *
               std::complex<double>(std::cos(mm), std::sin(mm));
    }
    return ComplexGauss{m, acc};
}

inline std::complex<double> complex_jacobi_sum(CharIndex a, CharIndex b, uint32_t p) {
    const double tau = 6.283185307179586476925287;
    auto ind = detail::index_table(p);
    long n = p - 1;
    auto norm = [n](long m) { long r = m % n; return r < 0 ? r + n : r; };
    std::complex<double> acc = 0;
    for (uint32_t x = 2; x < p; ++x) {
        uint32_t y = (1 + p - x) % p;
        double ph = tau * (static_cast<double>(norm(a.m)) * ind[x] +
                           static_cast<double>(norm(b.m)) * ind[y]) / n;
        acc += std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return acc;
}

}  // namespace dwork
