#pragma once

// Exhaustive point counting over F_{p^r}: projective and weighted-projective
// hypersurfaces, torus hypersurfaces (singular mirrors), and affine
// superelliptic curves.  This module is the ground-truth oracle for every
// character formula, so it is deliberately simple: precomputed power tables
// and plain enumeration, data-parallel over coordinate ranges with exact
// integer reduction (results do not depend on the thread count).

#include "dwork/families.hpp"
#include "dwork/finite_field.hpp"

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace dwork {

constexpr uint64_t kDefaultEnumCap = uint64_t(1) << 26;

struct enumeration_cap_exceeded : std::domain_error {
    using std::domain_error::domain_error;
};

struct CountResult {
    std::string family;
    uint32_t p = 0;
    uint32_t r = 1;
    std::string variant;  // projective | weighted | torus | affine
    BigInt count;
    bool truncated = false;  // count_table only: table cut short by the cap
};

namespace detail {

// per-exponent power tables: pow[e][x] = x^e for every exponent appearing in P
struct EvalTables {
    std::vector<uint8_t> slot;              // exponent -> table row
    std::vector<std::vector<uint32_t>> pw;  // row -> table over all field elements
};

inline EvalTables build_tables(const SparsePoly& P, const ExtField& F) {
    EvalTables t;
    uint8_t emax = 0;
    for (const auto& term : P.terms)
        for (uint8_t e : term.exps) emax = std::max(emax, e);
    t.slot.assign(emax + 1, 0);
    std::vector<bool> used(emax + 1, false);
    for (const auto& term : P.terms)
        for (uint8_t e : term.exps) used[e] = true;
    for (uint8_t e = 0; e <= emax; ++e) {
        if (!used[e]) continue;
        t.slot[e] = static_cast<uint8_t>(t.pw.size());
        std::vector<uint32_t> row(F.q());
        for (uint64_t x = 0; x < F.q(); ++x)
            row[x] = F.pow(FieldElem{static_cast<uint32_t>(x)}, e).idx;
        t.pw.push_back(std::move(row));
    }
    return t;
}

inline FieldElem eval_point(const SparsePoly& P, const EvalTables& t, const ExtField& F,
                            const std::vector<uint32_t>& x) {
    FieldElem acc = F.zero();
    for (const auto& term : P.terms) {
        FieldElem prod = term.coeff;
        for (unsigned v = 0; v < P.nvars && prod.idx != 0; ++v) {
            uint8_t e = term.exps[v];
            if (e == 0) continue;
            prod = F.mul(prod, FieldElem{t.pw[t.slot[e]][x[v]]});
        }
        acc = F.add(acc, prod);
    }
    return acc;
}

// count zeros of P over a block of `free_vars` coordinates, with some
// coordinates fixed; iterates an odometer so memory stays O(nvars)
inline uint64_t count_zeros_block(const SparsePoly& P, const EvalTables& t, const ExtField& F,
                                  std::vector<uint32_t> x, const std::vector<unsigned>& free_vars,
                                  uint64_t begin, uint64_t end, bool nonzero_only) {
    uint64_t q = F.q();
    uint64_t cnt = 0;
    // incremental odometer over the free coordinates (digit 0 fastest)
    std::vector<uint32_t> digits(free_vars.size(), 0);
    uint64_t v = begin;
    for (size_t i = 0; i < free_vars.size(); ++i) {
        digits[i] = static_cast<uint32_t>(v % q);
        v /= q;
        x[free_vars[i]] = digits[i];
    }
    for (uint64_t idx = begin; idx < end; ++idx) {
        bool skip = false;
        if (nonzero_only)
            for (size_t i = 0; i < digits.size(); ++i)
                if (digits[i] == 0) { skip = true; break; }
        if (!skip && F.is_zero(eval_point(P, t, F, x))) ++cnt;
        for (size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < q) {
                x[free_vars[i]] = digits[i];
                break;
            }
            digits[i] = 0;
            x[free_vars[i]] = 0;
        }
    }
    return cnt;
}

inline uint64_t parallel_count(const SparsePoly& P, const EvalTables& t, const ExtField& F,
                               const std::vector<uint32_t>& fixed,
                               const std::vector<unsigned>& free_vars, bool nonzero_only,
                               unsigned threads) {
    uint64_t total = 1;
    for (size_t i = 0; i < free_vars.size(); ++i) total *= F.q();
    if (threads <= 1 || total < (1u << 14))
        return count_zeros_block(P, t, F, fixed, free_vars, 0, total, nonzero_only);
    std::vector<std::thread> pool;
    std::vector<uint64_t> partial(threads, 0);
    uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        uint64_t b = w * chunk, e = std::min(total, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, w, b, e]() {
            partial[w] = count_zeros_block(P, t, F, fixed, free_vars, b, e, nonzero_only);
        });
    }
    for (auto& th : pool) th.join();
    uint64_t sum = 0;
    for (uint64_t v : partial) sum += v;
    return sum;
}

}  // namespace detail

// Points of {P = 0} in P^(nvars-1)(F_q), by normalized representatives
// (first nonzero coordinate equal to 1).
inline CountResult count_projective(const SparsePoly& P, const ExtField& F,
                                    uint64_t cap = kDefaultEnumCap, unsigned threads = 1) {
    unsigned n = P.nvars;
    uint64_t points = 0, power = 1;
    for (unsigned j = 0; j < n; ++j) { points += power; power *= F.q(); }
    if (points > cap) throw enumeration_cap_exceeded("count_projective: cap exceeded");
    auto t = detail::build_tables(P, F);
    BigInt total = 0;
    for (unsigned j = 0; j < n; ++j) {
        std::vector<uint32_t> x(n, 0);
        x[j] = 1;
        std::vector<unsigned> free_vars;
        for (unsigned v = j + 1; v < n; ++v) free_vars.push_back(v);
        total += BigInt(static_cast<unsigned long>(
            detail::parallel_count(P, t, F, x, free_vars, false, threads)));
    }
    return CountResult{"", F.p(), F.r(), "projective", total, false};
}

// Affine-cone count over F_q^(nvars) including the origin; the homogeneity
// identity N_proj = (N_cone - 1)/(q - 1) is asserted in tests.
inline BigInt count_affine_cone(const SparsePoly& P, const ExtField& F,
                                uint64_t cap = kDefaultEnumCap, unsigned threads = 1) {
    uint64_t total = 1;
    for (unsigned i = 0; i < P.nvars; ++i) {
        total *= F.q();
        if (total > cap) throw enumeration_cap_exceeded("count_affine_cone: cap exceeded");
    }
    auto t = detail::build_tables(P, F);
    std::vector<unsigned> free_vars;
    for (unsigned v = 0; v < P.nvars; ++v) free_vars.push_back(v);
    return BigInt(static_cast<unsigned long>(detail::parallel_count(
        P, t, F, std::vector<uint32_t>(P.nvars, 0), free_vars, false, threads)));
}

// Points of {P = 0} in the weighted projective space P(w)(F_q).  Every
// nonzero-solution stratum maps onto its image in the quotient with fibers
// of size exactly q - 1 (Hilbert 90 on each coordinate subtorus), so the
// count is (number of nonzero affine solutions)/(q - 1) regardless of the
// weights.  Stabilizer bookkeeping is not needed and would overcount
// quotient points with nontrivial isotropy.
inline CountResult count_weighted_projective(const SparsePoly& P,
                                             const std::vector<unsigned>& weights,
                                             const ExtField& F, uint64_t cap = kDefaultEnumCap,
                                             unsigned threads = 1) {
    if (weights.size() != P.nvars)
        throw std::invalid_argument("count_weighted_projective: weights/nvars mismatch");
    BigInt cone = count_affine_cone(P, F, cap, threads);
    BigInt nonzero = cone - 1;  // the origin always solves a form of positive degree
    BigInt qm1(static_cast<unsigned long>(F.q() - 1));
    if (nonzero % qm1 != 0)
        throw std::logic_error("count_weighted_projective: stratum count not divisible by q-1");
    return CountResult{"", F.p(), F.r(), "weighted", nonzero / qm1, false};
}

// Solutions of x_1 + ... + x_(n-1) + 1/(x_1...x_(n-1)) - n psi = 0 with all
// coordinates nonzero (the affine singular-mirror model).
inline CountResult count_torus(const SingularMirror& fam, FieldElem psi, const ExtField& F,
                               uint64_t cap = kDefaultEnumCap, unsigned threads = 1) {
    unsigned m = fam.n - 1;
    uint64_t total = 1;
    for (unsigned i = 0; i < m; ++i) {
        total *= F.q();
        if (total > cap) throw enumeration_cap_exceeded("count_torus: cap exceeded");
    }
    FieldElem c = F.neg(F.mul(F.from_int(fam.n), psi));
    // enumerate (q-1)-ary tuples of nonzero coordinates directly
    uint64_t nz = F.q() - 1;
    uint64_t total_nz = 1;
    for (unsigned i = 0; i < m; ++i) total_nz *= nz;
    auto worker = [&](uint64_t begin, uint64_t end) {
        uint64_t cnt = 0;
        std::vector<uint32_t> d(m, 0);
        std::vector<FieldElem> x(m);
        uint64_t v = begin;
        for (unsigned i = 0; i < m; ++i) {
            d[i] = static_cast<uint32_t>(v % nz);
            x[i] = FieldElem{d[i] + 1};
            v /= nz;
        }
        for (uint64_t idx = begin; idx < end; ++idx) {
            FieldElem sum = c, prod = x[0];
            sum = F.add(sum, x[0]);
            for (unsigned i = 1; i < m; ++i) {
                sum = F.add(sum, x[i]);
                prod = F.mul(prod, x[i]);
            }
            sum = F.add(sum, F.inverse(prod));
            if (F.is_zero(sum)) ++cnt;
            for (unsigned i = 0; i < m; ++i) {
                if (++d[i] < nz) {
                    x[i] = FieldElem{d[i] + 1};
                    break;
                }
                d[i] = 0;
                x[i] = FieldElem{1};
            }
        }
        return cnt;
    };
    uint64_t cnt = 0;
    if (threads <= 1 || total_nz < (1u << 14)) {
        cnt = worker(0, total_nz);
    } else {
        std::vector<std::thread> pool;
        std::vector<uint64_t> partial(threads, 0);
        uint64_t chunk = (total_nz + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            uint64_t b = w * chunk, e = std::min(total_nz, b + chunk);
            if (b >= e) break;
            pool.emplace_back([&, w, b, e]() { partial[w] = worker(b, e); });
        }
        for (auto& th : pool) th.join();
        for (uint64_t v : partial) cnt += v;
    }
    return CountResult{"", F.p(), F.r(), "torus", BigInt(static_cast<unsigned long>(cnt)), false};
}

// Points (x, y) in F_q^2 with y^5 = x^(e1) (1-x)^(e2) (x - psi^5)^(e3).
// For c != 0 the equation y^5 = c has gcd(5, q-1) solutions when c is a
// fifth power and none otherwise; for c = 0 exactly one.
inline CountResult count_affine_curve(const SuperellipticCurve& curve, FieldElem psi,
                                      const ExtField& F, uint64_t cap = kDefaultEnumCap) {
    if (F.q() > cap) throw enumeration_cap_exceeded("count_affine_curve: cap exceeded");
    uint64_t g = std::gcd<uint64_t>(5, F.q() - 1);
    FieldElem psi5 = F.pow(psi, 5);
    uint64_t cnt = 0;
    for (uint64_t xi = 0; xi < F.q(); ++xi) {
        FieldElem x{static_cast<uint32_t>(xi)};
        FieldElem c = F.pow(x, curve.e[0]);
        c = F.mul(c, F.pow(F.sub(F.one(), x), curve.e[1]));
        c = F.mul(c, F.pow(F.sub(x, psi5), curve.e[2]));
        if (F.is_zero(c)) {
            cnt += 1;
        } else if (F.pow(c, (F.q() - 1) / g).idx == F.one().idx) {
            cnt += g;
        }
    }
    return CountResult{"", F.p(), F.r(), "affine",
                       BigInt(static_cast<unsigned long>(cnt)), false};
}

inline bool is_singular_fiber_impl(const FermatDeformation& fam, FieldElem psi,
                                   const ExtField& F) {
    // check all nonzero cone points for F = 0 together with vanishing partials
    unsigned n = fam.nvars();
    SparsePoly P = defining_polynomial(fam, psi, F);
    std::vector<SparsePoly> partials;
    for (unsigned v = 0; v < n; ++v) {
        SparsePoly D;
        D.nvars = n;
        for (const auto& term : P.terms) {
            if (term.exps[v] == 0) continue;
            SparseTerm t = term;
            t.coeff = F.mul(term.coeff, F.from_int(term.exps[v]));
            t.exps[v] -= 1;
            if (!F.is_zero(t.coeff)) D.terms.push_back(std::move(t));
        }
        partials.push_back(std::move(D));
    }
    auto tp = detail::build_tables(P, F);
    std::vector<detail::EvalTables> td;
    for (const auto& D : partials) td.push_back(detail::build_tables(D, F));
    uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= F.q();
    std::vector<uint32_t> x(n);
    for (uint64_t idx = 1; idx < total; ++idx) {
        uint64_t v = idx;
        for (unsigned i = 0; i < n; ++i) { x[i] = static_cast<uint32_t>(v % F.q()); v /= F.q(); }
        if (!F.is_zero(detail::eval_point(P, tp, F, x))) continue;
        bool sing = true;
        for (unsigned d = 0; d < n && sing; ++d)
            if (!partials[d].terms.empty() &&
                !F.is_zero(detail::eval_point(partials[d], td[d], F, x)))
                sing = false;
        if (sing) return true;
    }
    return false;
}

inline bool is_singular_fiber(const FermatDeformation& fam, FieldElem psi, const ExtField& F) {
    return is_singular_fiber_impl(fam, psi, F);
}

// N_r table for r = 1..r_max.  `base` is the field of definition F_{p^s}; the
// r-th entry counts over F_{p^(s r)} with psi embedded along the canonical
// subfield embedding.  If some extension exceeds the cap the table is
// returned truncated, with the flag set.
template <typename CountFn>
inline std::vector<CountResult> count_table(const ExtField& base, FieldElem psi, unsigned r_max,
                                            CountFn&& count_one) {
    std::vector<CountResult> out;
    for (unsigned r = 1; r <= r_max; ++r) {
        try {
            ExtField Fr = r == 1 ? base : make_ext_field(base.p(), base.r() * r);
            FieldElem psir = psi;
            if (r > 1) psir = embedding_map(base, Fr)[psi.idx];
            CountResult c = count_one(Fr, psir);
            c.r = r;
            out.push_back(std::move(c));
        } catch (const enumeration_cap_exceeded&) {
            CountResult trunc;
            trunc.p = base.p();
            trunc.r = r;
            trunc.variant = "truncated";
            trunc.truncated = true;
            out.push_back(std::move(trunc));
            break;
        }
    }
    return out;
}

}  // namespace dwork
