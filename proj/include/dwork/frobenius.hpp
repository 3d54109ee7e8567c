#pragma once

// Series solutions of the hypergeometric Picard-Fuchs equations around the
// maximally unipotent point: fundamental period, log-solutions by the
// Frobenius method, indicial roots, and hypergeometric parameter extraction.
//
// All Dwork-n series live in the variable lambda = 1/(n psi)^n, where the
// fundamental period has integer coefficients (nm)!/(m!)^n.
//
// Frobenius blocks use the normalized convention a~_k(s) = a_k(s)/a_0(s):
//     log a~_k(s) = log a_k + sum_{j>=1} (-1)^(j+1)/j (n^j H_{nk}^(j) - n H_k^(j)) s^j,
// so every block coefficient is rational.  The classical unnormalized blocks
// differ by the factor a_0(s) = exp(sum_{j>=2} (-1)^j zeta(j)(n^j - n)/j s^j),
// which is available over the formal zeta-symbol ring for the change-of-basis
// cross-check.

#include "dwork/families.hpp"
#include "dwork/numeric.hpp"
#include "dwork/operators.hpp"
#include "dwork/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dwork {

inline std::string dwork_series_variable() { return "lambda"; }

// sum_m (nm)!/(m!)^n lambda^m, exact through order M
inline RatSeries fundamental_period(const DworkFamily& fam, unsigned M) {
    if (fam.n < 2) throw std::invalid_argument("fundamental_period: need n >= 2");
    std::vector<BigRat> c;
    c.reserve(M + 1);
    for (unsigned m = 0; m <= M; ++m) c.push_back(factorial_ratio(fam.n * m, m, fam.n));
    return RatSeries(dwork_series_variable(), std::move(c));
}

// -- Frobenius log-solutions ------------------------------------------------------

struct LogSolution {
    unsigned index = 0;                // i in pi_i = sum_j C(i,j) g_j (log)^(i-j)
    std::vector<RatSeries> blocks;     // g~_0 .. g~_index

    // blocks arranged by log power: coefficient of (log lambda)^t is C(i, t) g~_{i-t}
    LogSeries assembled() const {
        LogSeries out;
        for (unsigned t = 0; t <= index; ++t) {
            BigRat binom = make_rat(binomial(index, t), 1);
            out.blocks.push_back(blocks[index - t] * binom);
        }
        return out;
    }
};

namespace detail {

// s-expansion of a~_k(s)/a_k through order imax
inline RatSeries normalized_block_expansion(unsigned n, unsigned k, unsigned imax) {
    std::vector<BigRat> c(imax + 1, BigRat(0));
    for (unsigned j = 1; j <= imax; ++j) {
        BigRat h = make_rat(pow_int(BigInt(n), j), 1) * harmonic(n * k, j) -
                   BigRat(static_cast<long>(n)) * harmonic(k, j);
        c[j] = make_rat((j % 2 == 0) ? -1 : 1, j) * h;
    }
    return series_exp(RatSeries("s", std::move(c)));
}

}  // namespace detail

// Normalized blocks g~_i for i = 0..i_max, each exact through lambda^M:
//     g~_i[k] = a_k * i! * [s^i] exp(sum_j c_{k,j} s^j).
inline std::vector<RatSeries> frobenius_blocks(const DworkFamily& fam, unsigned i_max,
                                               unsigned M) {
    if (i_max > 4) throw std::invalid_argument("frobenius_blocks: i_max at most 4");
    std::vector<std::vector<BigRat>> g(i_max + 1, std::vector<BigRat>(M + 1, BigRat(0)));
    for (unsigned k = 0; k <= M; ++k) {
        BigRat a_k = factorial_ratio(fam.n * k, k, fam.n);
        RatSeries e = detail::normalized_block_expansion(fam.n, k, i_max);
        for (unsigned i = 0; i <= i_max; ++i)
            g[i][k] = a_k * make_rat(factorial(i), 1) * e.coeff(i);
    }
    std::vector<RatSeries> out;
    out.reserve(i_max + 1);
    for (auto& v : g) out.emplace_back(dwork_series_variable(), std::move(v));
    return out;
}

inline std::vector<LogSolution> log_solutions(const DworkFamily& fam, unsigned i_max,
                                              unsigned M) {
    auto blocks = frobenius_blocks(fam, i_max, M);
    std::vector<LogSolution> out;
    for (unsigned i = 0; i <= i_max; ++i) {
        LogSolution s;
        s.index = i;
        s.blocks.assign(blocks.begin(), blocks.begin() + i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

// Unnormalized blocks over the zeta-symbol ring: g_i = d^i/ds^i [a_0(s) a~_k(s)]|_0.
inline std::vector<ZetaSeries> frobenius_blocks_unnormalized(const DworkFamily& fam,
                                                             unsigned i_max, unsigned M) {
    if (i_max > 4) throw std::invalid_argument("frobenius_blocks_unnormalized: i_max at most 4");
    // a_0(s) over ZetaCoeff: exponential of sum_{j=2..4} (-1)^j Zj (n^j - n)/j s^j
    std::vector<ZetaCoeff> a0(i_max + 1, ZetaCoeff(BigRat(0)));
    {
        std::vector<ZetaCoeff> logc(i_max + 1, ZetaCoeff(BigRat(0)));
        for (unsigned j = 2; j <= std::min(i_max, 4u); ++j) {
            BigRat num = make_rat(pow_int(BigInt(fam.n), j) - fam.n, j);
            if (j % 2 == 1) num = -num;
            logc[j] = ZetaCoeff::zeta(j) * ZetaCoeff(num);
        }
        // exp over the commutative graded ring
        a0[0] = ZetaCoeff(BigRat(1));
        std::vector<ZetaCoeff> cur(i_max + 1, ZetaCoeff(BigRat(0)));
        cur[0] = ZetaCoeff(BigRat(1));
        BigInt fact = 1;
        for (unsigned t = 1; t <= i_max; ++t) {
            std::vector<ZetaCoeff> nxt(i_max + 1, ZetaCoeff(BigRat(0)));
            for (unsigned u = 0; u <= i_max; ++u)
                for (unsigned v = 1; u + v <= i_max; ++v) nxt[u + v] = nxt[u + v] + cur[u] * logc[v];
            cur = nxt;
            fact *= t;
            for (unsigned u = 0; u <= i_max; ++u)
                a0[u] = a0[u] + cur[u] * ZetaCoeff(make_rat(1, fact));
        }
    }
    std::vector<std::vector<ZetaCoeff>> g(i_max + 1,
                                          std::vector<ZetaCoeff>(M + 1, ZetaCoeff(BigRat(0))));
    for (unsigned k = 0; k <= M; ++k) {
        BigRat a_k = factorial_ratio(fam.n * k, k, fam.n);
        RatSeries e = detail::normalized_block_expansion(fam.n, k, i_max);
        // product a_0(s) * exp-part in s, then multiply by a_k i!
        for (unsigned i = 0; i <= i_max; ++i) {
            ZetaCoeff acc(BigRat(0));
            for (unsigned j = 0; j <= i; ++j) acc = acc + a0[j] * ZetaCoeff(e.coeff(i - j));
            g[i][k] = acc * ZetaCoeff(a_k * make_rat(factorial(i), 1));
        }
    }
    std::vector<ZetaSeries> out;
    for (auto& v : g) out.emplace_back(dwork_series_variable(), std::move(v));
    return out;
}

// -- indicial roots -----------------------------------------------------------------

// Rational roots (with multiplicity) of the indicial polynomial of a
// theta-form operator at x = 0.  Throws if an irrational factor remains.
inline std::map<BigRat, unsigned> indicial_roots(const DifferentialOperator& op) {
    Poly ind = op.indicial_polynomial();
    if (ind.is_zero()) throw std::invalid_argument("indicial_roots: zero operator");
    std::map<BigRat, unsigned> roots;
    // strip x^m
    while (ind.coeff(0) == 0) {
        roots[BigRat(0)] += 1;
        std::vector<BigRat> v(ind.coeffs().begin() + 1, ind.coeffs().end());
        ind = Poly(std::move(v));
    }
    PrimitivePoly pp = to_primitive(ind);
    // rational root theorem on the primitive integer polynomial
    auto divisors = [](BigInt n) {
        std::vector<BigInt> d;
        if (n < 0) n = -n;
        for (BigInt i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                d.push_back(i);
                if (i * i != n) d.push_back(n / i);
            }
        return d;
    };
    while (ind.degree() > 0) {
        pp = to_primitive(ind);
        bool found = false;
        for (const BigInt& num : divisors(pp.coef.front())) {
            auto dens = divisors(pp.coef.back());
            for (const BigInt& den : dens) {
                for (int sign : {1, -1}) {
                    BigRat cand = make_rat(sign * num, den);
                    if (ind.eval(cand) == 0) {
                        roots[cand] += 1;
                        Poly lin(std::vector<BigRat>{-cand, BigRat(1)});
                        auto [q, r] = ind.divmod(lin);
                        if (!r.is_zero()) throw std::logic_error("indicial_roots: division");
                        ind = q;
                        found = true;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw std::domain_error("indicial_roots: irrational indicial factor remains");
    }
    return roots;
}

// -- hypergeometric extraction --------------------------------------------------------

struct HypergeometricData {
    std::vector<BigRat> upper;   // a_1 <= ... <= a_p
    std::vector<BigRat> lower;   // b_1 <= ... <= b_q (the mandatory (k+1) factor is implicit)
    BigRat scale;                // c in C(k+1)/C(k) = c prod(k+a)/[prod(k+b)(k+1)]
    std::string variable_map;

    // regenerate the coefficient sequence (normalized to C(0) = 1)
    std::vector<BigRat> coefficients(unsigned M) const {
        std::vector<BigRat> c{BigRat(1)};
        for (unsigned k = 0; k < M; ++k) {
            BigRat num = scale, den = BigRat(static_cast<long>(k + 1));
            for (const auto& a : upper) num *= (a + BigRat(static_cast<long>(k)));
            for (const auto& b : lower) den *= (b + BigRat(static_cast<long>(k)));
            c.push_back(c.back() * num / den);
        }
        return c;
    }
};

namespace detail {

// all rational roots of a polynomial, with multiplicity; throws if any root
// is irrational
inline std::vector<BigRat> all_rational_roots(Poly p) {
    std::vector<BigRat> out;
    while (p.coeff(0) == 0 && p.degree() > 0) {
        out.emplace_back(0);
        std::vector<BigRat> v(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly(std::move(v));
    }
    while (p.degree() > 0) {
        PrimitivePoly pp = to_primitive(p);
        bool found = false;
        BigInt a0 = pp.coef.front() < 0 ? BigInt(-pp.coef.front()) : pp.coef.front();
        BigInt al = pp.coef.back() < 0 ? BigInt(-pp.coef.back()) : pp.coef.back();
        for (BigInt i = 1; i * i <= a0 && !found; ++i) {
            if (a0 % i != 0) continue;
            BigInt numcands[2] = {i, BigInt(a0 / i)};
            for (const BigInt& num : numcands) {
                for (BigInt j = 1; j * j <= al && !found; ++j) {
                    if (al % j != 0) continue;
                    BigInt dencands[2] = {j, BigInt(al / j)};
                    for (const BigInt& den : dencands) {
                        for (int sign : {1, -1}) {
                            BigRat cand = make_rat(sign * num, den);
                            if (p.eval(cand) == 0) {
                                out.push_back(cand);
                                auto [q, r] =
                                    p.divmod(Poly(std::vector<BigRat>{-cand, BigRat(1)}));
                                p = q;
                                found = true;
                                break;
                            }
                        }
                        if (found) break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
        }
        if (!found) throw std::domain_error("hypergeometric roots are not rational");
    }
    return out;
}

// dense exact linear solve: returns a solution of M x = rhs or nullopt
inline std::optional<std::vector<BigRat>> solve_linear(std::vector<std::vector<BigRat>> M,
                                                       std::vector<BigRat> rhs) {
    size_t rows = M.size(), cols = M.empty() ? 0 : M[0].size();
    std::vector<size_t> where(cols, SIZE_MAX);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && M[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[r]);
        std::swap(rhs[sel], rhs[r]);
        BigRat inv = BigRat(1) / M[r][c];
        for (size_t j = c; j < cols; ++j) M[r][j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            BigRat f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
            rhs[i] -= f * rhs[r];
        }
        where[c] = r;
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<BigRat> x(cols, BigRat(0));
    for (size_t c = 0; c < cols; ++c)
        if (where[c] != SIZE_MAX) x[c] = rhs[where[c]];
    return x;
}

}  // namespace detail

// Fit C(k+1)/C(k) = c prod_(i<=p)(k+a_i) / [prod_(j<=q)(k+b_j) (k+1)] by exact
// linear solving at increasing degrees p = q+1, then read the parameters off
// the polynomial roots and verify the fit on every remaining coefficient.
inline HypergeometricData extract_hypergeometric(const RatSeries& series) {
    size_t nz = 0;
    while (nz <= series.order() && series.coeff(nz) != 0) ++nz;
    if (nz < 12)
        throw std::invalid_argument("extract_hypergeometric: need 12 nonzero leading coefficients");
    std::vector<BigRat> ratio;
    for (size_t k = 0; k + 1 < nz; ++k) ratio.push_back(series.coeff(k + 1) / series.coeff(k));

    for (unsigned q = 0; q + 1 <= 4; ++q) {
        unsigned p = q + 1;
        // unknowns: P coefficients alpha_0..alpha_p, B non-leading beta_0..beta_(q-1)
        // equation per k: sum alpha_i k^i - r_k (k+1) [sum beta_j k^j + k^q] = 0
        size_t unknowns = (p + 1) + q;
        if (ratio.size() < unknowns + 3) continue;
        std::vector<std::vector<BigRat>> Mrows;
        std::vector<BigRat> rhs;
        for (size_t k = 0; k < ratio.size(); ++k) {
            std::vector<BigRat> row(unknowns, BigRat(0));
            BigRat kk(static_cast<long>(k));
            BigRat pw(1);
            for (unsigned i = 0; i <= p; ++i) { row[i] = pw; pw *= kk; }
            BigRat f = ratio[k] * (kk + 1);
            pw = 1;
            for (unsigned j = 0; j < q; ++j) { row[p + 1 + j] = -f * pw; pw *= kk; }
            Mrows.push_back(std::move(row));
            rhs.push_back(f * pw);  // pw = k^q: move the monic term to the rhs
        }
        auto sol = detail::solve_linear(Mrows, rhs);
        if (!sol) continue;
        // rebuild polynomials and verify the full ratio list exactly
        Poly P(std::vector<BigRat>(sol->begin(), sol->begin() + p + 1));
        std::vector<BigRat> bcoef(sol->begin() + p + 1, sol->end());
        bcoef.push_back(BigRat(1));
        Poly B(std::move(bcoef));
        if (P.degree() != static_cast<long>(p)) continue;
        bool ok = true;
        for (size_t k = 0; k < ratio.size() && ok; ++k) {
            BigRat kk(static_cast<long>(k));
            ok = P.eval(kk) == ratio[k] * (kk + 1) * B.eval(kk);
        }
        if (!ok) continue;
        HypergeometricData data;
        data.scale = P.leading();
        for (const auto& r : detail::all_rational_roots(P * (BigRat(1) / P.leading())))
            data.upper.push_back(-r);
        for (const auto& r : detail::all_rational_roots(B)) data.lower.push_back(-r);
        std::sort(data.upper.begin(), data.upper.end());
        std::sort(data.lower.begin(), data.lower.end());
        data.variable_map = series.var();
        return data;
    }
    throw std::domain_error("extract_hypergeometric: no rational-ratio fit found");
}

}  // namespace dwork
