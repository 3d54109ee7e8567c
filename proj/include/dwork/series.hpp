#pragma once

// Truncated power series over an exact coefficient ring, log-series blocks,
// and the small graded ring Q[Z2,Z3,Z4] of formal zeta symbols used by the
// unnormalized Frobenius basis.

#include "dwork/numeric.hpp"
#include "dwork/poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace dwork {

// A power series known exactly through order `order()`.  Operations track
// the valid order of the result; nothing is ever silently extended.
template <typename C>
class TruncSeries {
public:
    TruncSeries() : var_("x") {}
    TruncSeries(std::string var, std::vector<C> coef)
        : var_(std::move(var)), coef_(std::move(coef)) {
        if (coef_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
    }
    static TruncSeries zero(const std::string& var, size_t order) {
        return TruncSeries(var, std::vector<C>(order + 1, C(0)));
    }

    const std::string& var() const { return var_; }
    size_t order() const { return coef_.size() - 1; }
    const std::vector<C>& coeffs() const { return coef_; }
    const C& coeff(size_t k) const {
        if (k >= coef_.size()) throw std::out_of_range("TruncSeries::coeff beyond valid order");
        return coef_[k];
    }
    C& coeff(size_t k) {
        if (k >= coef_.size()) throw std::out_of_range("TruncSeries::coeff beyond valid order");
        return coef_[k];
    }

    bool is_zero() const {
        for (const auto& c : coef_)
            if (!(c == C(0))) return false;
        return true;
    }

    TruncSeries truncated(size_t m) const {
        std::vector<C> v(coef_.begin(), coef_.begin() + std::min(coef_.size(), m + 1));
        return TruncSeries(var_, std::move(v));
    }

    TruncSeries operator+(const TruncSeries& o) const {
        check(o);
        size_t m = std::min(order(), o.order());
        std::vector<C> v(m + 1);
        for (size_t i = 0; i <= m; ++i) v[i] = coef_[i] + o.coef_[i];
        return TruncSeries(var_, std::move(v));
    }
    TruncSeries operator-(const TruncSeries& o) const {
        check(o);
        size_t m = std::min(order(), o.order());
        std::vector<C> v(m + 1);
        for (size_t i = 0; i <= m; ++i) v[i] = coef_[i] - o.coef_[i];
        return TruncSeries(var_, std::move(v));
    }
    TruncSeries operator*(const TruncSeries& o) const {
        check(o);
        size_t m = std::min(order(), o.order());
        std::vector<C> v(m + 1, C(0));
        for (size_t i = 0; i <= m; ++i)
            for (size_t j = 0; i + j <= m; ++j) v[i + j] = v[i + j] + coef_[i] * o.coef_[j];
        return TruncSeries(var_, std::move(v));
    }
    TruncSeries operator*(const C& c) const {
        std::vector<C> v(coef_);
        for (auto& x : v) x = x * c;
        return TruncSeries(var_, std::move(v));
    }

    // theta = x d/dx, exact, same valid order
    TruncSeries theta() const {
        std::vector<C> v(coef_);
        for (size_t k = 0; k < v.size(); ++k) v[k] = v[k] * C(BigRat(static_cast<long>(k)));
        return TruncSeries(var_, std::move(v));
    }

    // multiplication by a polynomial in the series variable (exactly known),
    // result valid through the input order
    TruncSeries mul_poly(const Poly& p) const {
        std::vector<C> v(coef_.size(), C(0));
        for (size_t j = 0; j < p.coeffs().size(); ++j) {
            const BigRat& pc = p.coeffs()[j];
            if (pc == 0) continue;
            for (size_t i = 0; i + j < v.size(); ++i) v[i + j] = v[i + j] + coef_[i] * C(pc);
        }
        return TruncSeries(var_, std::move(v));
    }

    bool operator==(const TruncSeries& o) const { return var_ == o.var_ && coef_ == o.coef_; }

private:
    void check(const TruncSeries& o) const {
        if (var_ != o.var_)
            throw std::invalid_argument("TruncSeries: variable mismatch " + var_ + " vs " + o.var_);
    }
    std::string var_;
    std::vector<C> coef_;
};

using RatSeries = TruncSeries<BigRat>;

// exp of a series with zero constant term: E' = S' E termwise
inline RatSeries series_exp(const RatSeries& s) {
    if (s.coeff(0) != 0) throw std::invalid_argument("series_exp: nonzero constant term");
    std::vector<BigRat> e(s.order() + 1, BigRat(0));
    e[0] = 1;
    for (size_t k = 1; k <= s.order(); ++k) {
        BigRat acc = 0;
        for (size_t j = 1; j <= k; ++j) acc += BigRat(static_cast<long>(j)) * s.coeff(j) * e[k - j];
        e[k] = acc / BigRat(static_cast<long>(k));
    }
    return RatSeries(s.var(), std::move(e));
}

// -- formal zeta symbols ------------------------------------------------------
//
// Q[Z2,Z3,Z4] graded by weight (Zj has weight j), truncated beyond weight 4;
// basis {1, Z2, Z3, Z4, Z2^2}.  The unnormalized Frobenius blocks live here:
// their s^j coefficients carry zeta-weight at most j <= 4, so the truncation
// never discards a term that could reach the results.
class ZetaCoeff {
public:
    // basis order: 1, Z2, Z3, Z4, Z2^2
    ZetaCoeff() : c_{} {}
    ZetaCoeff(BigRat scalar) : c_{} { c_[0] = std::move(scalar); }
    ZetaCoeff(long scalar) : ZetaCoeff(BigRat(scalar)) {}

    static ZetaCoeff zeta(int j) {
        ZetaCoeff z;
        switch (j) {
            case 2: z.c_[1] = 1; break;
            case 3: z.c_[2] = 1; break;
            case 4: z.c_[3] = 1; break;
            default: throw std::invalid_argument("ZetaCoeff::zeta: j must be 2, 3 or 4");
        }
        return z;
    }

    const BigRat& comp(size_t i) const { return c_[i]; }
    BigRat scalar_part() const { return c_[0]; }
    bool is_scalar() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0 && c_[4] == 0; }

    ZetaCoeff operator+(const ZetaCoeff& o) const {
        ZetaCoeff r;
        for (int i = 0; i < 5; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    ZetaCoeff operator-(const ZetaCoeff& o) const {
        ZetaCoeff r;
        for (int i = 0; i < 5; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    ZetaCoeff operator*(const ZetaCoeff& o) const {
        ZetaCoeff r;
        // weights: [0,2,3,4,4]; only products of total weight <= 4 survive
        for (int i = 0; i < 5; ++i) {
            if (c_[i] == 0) continue;
            for (int j = 0; j < 5; ++j) {
                if (o.c_[j] == 0) continue;
                int k = mul_index(i, j);
                if (k >= 0) r.c_[k] += c_[i] * o.c_[j];
            }
        }
        return r;
    }
    bool operator==(const ZetaCoeff& o) const { return c_ == o.c_; }

private:
    static int mul_index(int i, int j) {
        if (i == 0) return j;
        if (j == 0) return i;
        if (i == 1 && j == 1) return 4;  // Z2 * Z2
        return -1;                       // weight above 4, truncated
    }
    std::array<BigRat, 5> c_;
};

using ZetaSeries = TruncSeries<ZetaCoeff>;

// -- log-series ---------------------------------------------------------------

// sum_t blocks[t] * (log x)^t with every block a truncated series
template <typename C>
struct LogSeriesT {
    std::vector<TruncSeries<C>> blocks;

    size_t max_log_power() const { return blocks.empty() ? 0 : blocks.size() - 1; }

    // theta acts as theta on blocks and lowers each log power by one:
    // theta(S log^t) = (theta S) log^t + t S log^(t-1)
    LogSeriesT theta() const {
        LogSeriesT out;
        out.blocks.reserve(blocks.size());
        for (size_t t = 0; t < blocks.size(); ++t) {
            TruncSeries<C> b = blocks[t].theta();
            if (t + 1 < blocks.size())
                b = b + blocks[t + 1] * C(BigRat(static_cast<long>(t + 1)));
            out.blocks.push_back(std::move(b));
        }
        return out;
    }

    LogSeriesT mul_poly(const Poly& p) const {
        LogSeriesT out;
        for (const auto& b : blocks) out.blocks.push_back(b.mul_poly(p));
        return out;
    }

    LogSeriesT operator+(const LogSeriesT& o) const {
        LogSeriesT out;
        size_t n = std::max(blocks.size(), o.blocks.size());
        for (size_t t = 0; t < n; ++t) {
            if (t >= blocks.size())
                out.blocks.push_back(o.blocks[t]);
            else if (t >= o.blocks.size())
                out.blocks.push_back(blocks[t]);
            else
                out.blocks.push_back(blocks[t] + o.blocks[t]);
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
};

using LogSeries = LogSeriesT<BigRat>;

}  // namespace dwork
