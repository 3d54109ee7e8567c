#pragma once

// Small finite fields F_{p^r} with explicit irreducible modulus, generator,
// and exp/log tables.  Elements are indices whose base-p digits are the
// polynomial coefficients; fields are immutable once built.  Everything is
// deterministic: modulus and generator come from a fixed search order, so
// serialized runs replay exactly.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwork {

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct FieldElem {
    uint32_t idx = 0;
    bool operator==(const FieldElem&) const = default;
};

class ExtField {
public:
    static constexpr uint64_t kDefaultCap = uint64_t(1) << 24;

    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    FieldElem generator() const { return FieldElem{generator_}; }

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }

    // scalar embedding of F_p
    FieldElem from_int(uint64_t n) const { return FieldElem{static_cast<uint32_t>(n % p_)}; }

    bool is_zero(FieldElem a) const { return a.idx == 0; }

    FieldElem add(FieldElem a, FieldElem b) const {
        uint32_t x = a.idx, y = b.idx, out = 0, mul = 1;
        for (uint32_t i = 0; i < r_; ++i) {
            uint32_t d = (x % p_ + y % p_) % p_;
            out += d * mul;
            mul *= p_;
            x /= p_;
            y /= p_;
        }
        return FieldElem{out};
    }
    FieldElem neg(FieldElem a) const {
        uint32_t x = a.idx, out = 0, mul = 1;
        for (uint32_t i = 0; i < r_; ++i) {
            uint32_t d = (p_ - x % p_) % p_;
            out += d * mul;
            mul *= p_;
            x /= p_;
        }
        return FieldElem{out};
    }
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.idx == 0 || b.idx == 0) return FieldElem{0};
        uint64_t l = log_[a.idx] + log_[b.idx];
        if (l >= q_ - 1) l -= q_ - 1;
        return FieldElem{exp_[l]};
    }
    FieldElem inverse(FieldElem a) const {
        if (a.idx == 0) throw std::domain_error("ExtField: inverse of zero");
        uint64_t l = (q_ - 1 - log_[a.idx]) % (q_ - 1);
        return FieldElem{exp_[l]};
    }
    FieldElem pow(FieldElem a, uint64_t e) const {
        if (a.idx == 0) return e == 0 ? one() : zero();
        uint64_t l = (static_cast<uint64_t>(log_[a.idx]) * (e % (q_ - 1))) % (q_ - 1);
        return FieldElem{exp_[l]};
    }

    FieldElem frobenius(FieldElem a) const { return pow(a, p_); }

    // Tr(x) = x + x^p + ... + x^(p^(r-1)); lands in the prime subfield
    FieldElem trace(FieldElem a) const {
        FieldElem acc = a, cur = a;
        for (uint32_t i = 1; i < r_; ++i) {
            cur = frobenius(cur);
            acc = add(acc, cur);
        }
        return acc;
    }

    // digit i of the coefficient vector
    uint32_t coeff(FieldElem a, uint32_t i) const {
        uint32_t x = a.idx;
        for (uint32_t j = 0; j < i; ++j) x /= p_;
        return x % p_;
    }

    // an element of the prime subfield as an integer in [0, p)
    uint32_t to_prime_int(FieldElem a) const {
        if (a.idx >= p_)
            throw std::domain_error("ExtField: element not in the prime subfield");
        return a.idx;
    }

    uint64_t multiplicative_order(FieldElem a) const {
        if (a.idx == 0) throw std::domain_error("order of zero");
        uint64_t n = q_ - 1, ord = n;
        for (uint64_t f : prime_factors(n))
            while (ord % f == 0 && pow(a, ord / f).idx == 1) ord /= f;
        return ord;
    }

    std::string describe() const {
        return "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[t]/(modulus)";
    }

    friend ExtField make_ext_field(uint32_t p, uint32_t r, uint64_t cap);

private:
    static std::vector<uint64_t> prime_factors(uint64_t n) {
        std::vector<uint64_t> f;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                f.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) f.push_back(n);
        return f;
    }

    // schoolbook multiply mod (modulus, p); used only while building tables
    FieldElem mul_slow(FieldElem a, FieldElem b) const {
        std::vector<uint32_t> av(r_), bv(r_), prod(2 * r_ - 1, 0);
        uint32_t x = a.idx, y = b.idx;
        for (uint32_t i = 0; i < r_; ++i) { av[i] = x % p_; x /= p_; bv[i] = y % p_; y /= p_; }
        for (uint32_t i = 0; i < r_; ++i)
            for (uint32_t j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p_;
        for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(r_); --d) {
            uint32_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (uint32_t j = 0; j < r_; ++j)
                prod[d - r_ + j] = (prod[d - r_ + j] + c * (p_ - modulus_[j])) % p_;
        }
        uint32_t out = 0, mul = 1;
        for (uint32_t i = 0; i < r_; ++i) { out += prod[i] * mul; mul *= p_; }
        return FieldElem{out};
    }

    uint32_t p_ = 0, r_ = 0;
    uint64_t q_ = 0;
    uint32_t generator_ = 0;
    std::vector<uint32_t> modulus_;  // coefficients a_0..a_r of a monic polynomial
    std::vector<uint32_t> exp_;      // exp_[k] = index of g^k, k in [0, q-1)
    std::vector<uint32_t> log_;      // inverse of exp_ on nonzero indices
};

namespace detail {

// x^(p^e) mod (f, p) by iterated p-th powers, all with small dense vectors
inline std::vector<uint32_t> polymod_mul(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b,
                                         const std::vector<uint32_t>& f, uint32_t p) {
    size_t r = f.size() - 1;
    std::vector<uint32_t> prod(2 * r - 1, 0);
    for (size_t i = 0; i < r; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < r; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(r); --d) {
        uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (size_t j = 0; j < r; ++j)
            prod[d - r + j] = (prod[d - r + j] + c * (p - f[j])) % p;
    }
    prod.resize(r);
    return prod;
}

inline std::vector<uint32_t> polymod_pow_p(std::vector<uint32_t> x,
                                           const std::vector<uint32_t>& f, uint32_t p,
                                           uint32_t times) {
    size_t r = f.size() - 1;
    for (uint32_t t = 0; t < times; ++t) {
        std::vector<uint32_t> acc(r, 0);
        acc[0] = 1;
        std::vector<uint32_t> base = x;
        uint32_t e = p;
        while (e) {
            if (e & 1) acc = polymod_mul(acc, base, f, p);
            base = polymod_mul(base, base, f, p);
            e >>= 1;
        }
        x = acc;
    }
    return x;
}

inline std::vector<uint32_t> polymod_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b,
                                         uint32_t p) {
    auto deg = [](const std::vector<uint32_t>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[d] == 0) --d;
        return d;
    };
    auto inv_mod = [p](uint32_t a) {
        uint32_t r = 1, e = p - 2, base = a;
        while (e) {
            if (e & 1) r = static_cast<uint64_t>(r) * base % p;
            base = static_cast<uint64_t>(base) * base % p;
            e >>= 1;
        }
        return r;
    };
    while (deg(b) >= 0) {
        int da = deg(a), db = deg(b);
        if (da < db) { std::swap(a, b); continue; }
        uint32_t c = static_cast<uint64_t>(a[da]) * inv_mod(b[db]) % p;
        for (int j = 0; j <= db; ++j)
            a[da - db + j] = (a[da - db + j] + static_cast<uint64_t>(c) * (p - b[j])) % p;
    }
    return a;
}

inline bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    size_t r = f.size() - 1;
    std::vector<uint32_t> x(r, 0);
    if (r == 1) return true;
    x[1] = 1;
    // x^(p^r) == x mod f
    auto xr = polymod_pow_p(x, f, p, static_cast<uint32_t>(r));
    auto diff = xr;
    diff[1] = (diff[1] + p - 1) % p;
    bool allz = true;
    for (auto c : diff) allz = allz && c == 0;
    if (!allz) return false;
    // no factor of degree r/l for prime l | r
    for (uint32_t l = 2; l <= r; ++l) {
        if (r % l) continue;
        bool lp = true;
        for (uint32_t d = 2; d * d <= l; ++d)
            if (l % d == 0) lp = false;
        if (!lp) continue;
        auto xd = polymod_pow_p(x, f, p, static_cast<uint32_t>(r / l));
        auto g = xd;
        g[1] = (g[1] + p - 1) % p;
        auto gg = polymod_gcd(std::vector<uint32_t>(f), g, p);
        int dg = static_cast<int>(gg.size()) - 1;
        while (dg >= 0 && gg[dg] == 0) --dg;
        if (dg != 0) return false;
    }
    return true;
}

}  // namespace detail

// Deterministic field construction: the monic irreducible modulus is the
// first one in index order (constant coefficient varying fastest), and the
// generator is the lowest-index element of full multiplicative order.
inline ExtField make_ext_field(uint32_t p, uint32_t r, uint64_t cap = ExtField::kDefaultCap) {
    if (!is_prime_u64(p)) throw std::invalid_argument("make_ext_field: p not prime");
    if (r < 1) throw std::invalid_argument("make_ext_field: r must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > cap) throw std::domain_error("make_ext_field: field size exceeds cap");
    }

    ExtField F;
    F.p_ = p;
    F.r_ = r;
    F.q_ = q;

    if (r == 1) {
        F.modulus_ = {0, 1};  // the polynomial t: F_p[t]/(t)
    } else {
        uint64_t count = 1;
        for (uint32_t i = 0; i < r; ++i) count *= p;
        bool found = false;
        for (uint64_t m = 0; m < count && !found; ++m) {
            std::vector<uint32_t> f(r + 1, 0);
            uint64_t x = m;
            for (uint32_t i = 0; i < r; ++i) { f[i] = x % p; x /= p; }
            f[r] = 1;
            if (detail::is_irreducible(f, p)) {
                F.modulus_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("make_ext_field: no irreducible modulus found");
    }

    // generator search in index order, order checked against prime factors of q-1
    auto factors = ExtField::prime_factors(q - 1);
    auto pow_slow = [&](FieldElem a, uint64_t e) {
        FieldElem acc = F.one(), base = a;
        while (e) {
            if (e & 1) acc = F.mul_slow(acc, base);
            base = F.mul_slow(base, base);
            e >>= 1;
        }
        return acc;
    };
    uint32_t gen = 0;
    for (uint32_t idx = 1; idx < q; ++idx) {
        FieldElem g{idx};
        bool ok = true;
        for (uint64_t f : factors)
            if (pow_slow(g, (q - 1) / f).idx == 1) { ok = false; break; }
        if (ok) { gen = idx; break; }
    }
    if (gen == 0 && q > 2) throw std::logic_error("make_ext_field: no generator found");
    if (q == 2) gen = 1;
    F.generator_ = gen;

    F.exp_.resize(q - 1);
    F.log_.assign(q, 0);
    FieldElem cur = F.one();
    for (uint64_t k = 0; k < q - 1; ++k) {
        F.exp_[k] = cur.idx;
        F.log_[cur.idx] = static_cast<uint32_t>(k);
        cur = F.mul_slow(cur, FieldElem{gen});
    }
    return F;
}

// All elements in a fixed order, zero first.
inline std::vector<FieldElem> enumerate(const ExtField& F) {
    std::vector<FieldElem> v;
    v.reserve(F.q());
    for (uint64_t i = 0; i < F.q(); ++i) v.push_back(FieldElem{static_cast<uint32_t>(i)});
    return v;
}

// Field embedding F_{p^s} -> F_{p^r} (s | r) sending the subfield's basis
// element t to the lowest-index root of the sub-modulus in the big field.
inline std::vector<FieldElem> embedding_map(const ExtField& sub, const ExtField& big) {
    if (sub.p() != big.p() || big.r() % sub.r() != 0)
        throw std::invalid_argument("embedding_map: incompatible fields");
    // find a root of sub.modulus in big
    FieldElem root = big.zero();
    bool found = false;
    for (uint64_t i = 0; i < big.q(); ++i) {
        FieldElem x{static_cast<uint32_t>(i)};
        FieldElem acc = big.zero();
        FieldElem xp = big.one();
        for (uint32_t j = 0; j < sub.modulus().size(); ++j) {
            acc = big.add(acc, big.mul(big.from_int(sub.modulus()[j]), xp));
            xp = big.mul(xp, x);
        }
        if (big.is_zero(acc)) { root = x; found = true; break; }
    }
    if (!found) throw std::logic_error("embedding_map: no root of sub-modulus");
    std::vector<FieldElem> img(sub.q());
    for (uint64_t i = 0; i < sub.q(); ++i) {
        FieldElem acc = big.zero();
        FieldElem xp = big.one();
        uint64_t x = i;
        for (uint32_t j = 0; j < sub.r(); ++j) {
            acc = big.add(acc, big.mul(big.from_int(x % sub.p()), xp));
            xp = big.mul(xp, root);
            x /= sub.p();
        }
        img[i] = acc;
    }
    return img;
}

}  // namespace dwork
