#pragma once

// Linear differential operators in one variable with exact rational-function
// coefficients, in either d/dx or theta = x d/dx form.  Coefficients sit on
// the left of the derivative powers, so left-multiplying by a function is a
// plain coefficient rescale and style conversions are exact.

#include "dwork/ratfun.hpp"
#include "dwork/series.hpp"

#include <string>
#include <vector>

namespace dwork {

enum class OpStyle { ddx, theta };

class DifferentialOperator {
public:
    DifferentialOperator() : style_(OpStyle::ddx) {}
    DifferentialOperator(std::string var, OpStyle style, std::vector<RatFun> coef)
        : var_(std::move(var)), style_(style), coef_(std::move(coef)) {
        trim();
        if (coef_.empty()) throw std::invalid_argument("DifferentialOperator: zero operator");
    }

    const std::string& var() const { return var_; }
    OpStyle style() const { return style_; }
    size_t order() const { return coef_.size() - 1; }
    const std::vector<RatFun>& coeffs() const { return coef_; }
    const RatFun& coeff(size_t j) const { return coef_[j]; }

    // -- style conversions (exact) -------------------------------------------

    // theta^k in terms of x^j (d/dx)^j: theta^k = sum_j S2(k,j) x^j d^j
    DifferentialOperator to_ddx() const {
        if (style_ == OpStyle::ddx) return *this;
        size_t n = order();
        auto S2 = stirling2(n);
        std::vector<RatFun> out(n + 1);
        RatFun x = RatFun::variable();
        for (size_t k = 0; k <= n; ++k) {
            if (coef_[k].is_zero()) continue;
            RatFun xp(1);
            for (size_t j = 0; j <= k; ++j) {
                if (S2[k][j] != 0) out[j] += coef_[k] * RatFun(BigRat(S2[k][j])) * xp;
                xp *= x;
            }
        }
        return DifferentialOperator(var_, OpStyle::ddx, std::move(out));
    }

    // (d/dx)^j = x^(-j) theta (theta-1) ... (theta-j+1)
    DifferentialOperator to_theta() const {
        if (style_ == OpStyle::theta) return *this;
        size_t n = order();
        std::vector<RatFun> out(n + 1);
        RatFun x = RatFun::variable();
        for (size_t j = 0; j <= n; ++j) {
            if (coef_[j].is_zero()) continue;
            // falling factorial theta(theta-1)...(theta-j+1) as a Poly in theta
            Poly fall(BigRat(1));
            for (size_t i = 0; i < j; ++i)
                fall = fall * (Poly::variable() - Poly(BigRat(static_cast<long>(i))));
            RatFun xinv = RatFun(Poly(BigRat(1)), Poly::monomial(1, j));
            for (size_t k = 0; k <= j; ++k) {
                BigRat c = fall.coeff(k);
                if (c != 0) out[k] += coef_[j] * xinv * RatFun(c);
            }
        }
        return DifferentialOperator(var_, OpStyle::theta, std::move(out));
    }

    // -- normalization ---------------------------------------------------------

    // Scale by a rational function so every coefficient is a polynomial,
    // jointly primitive over Z, with positive leading numerator on the top
    // coefficient.  Two operators with the same solution sheaf and the same
    // style/variable normalize identically.
    DifferentialOperator primitive() const {
        Poly den(BigRat(1));
        for (const auto& c : coef_) {
            Poly g = poly_gcd(den, c.den());
            den = den * c.den().divmod(g).first;
        }
        std::vector<Poly> nums;
        nums.reserve(coef_.size());
        Poly gall;
        for (const auto& c : coef_) {
            Poly t = c.num() * den.divmod(c.den()).first;
            gall = poly_gcd(gall, t);
            nums.push_back(std::move(t));
        }
        if (gall.degree() > 0)
            for (auto& t : nums) t = t.divmod(gall).first;
        // joint integer content
        BigInt num_g = 0, den_l = 1;
        for (const auto& t : nums)
            for (const auto& c : t.coeffs()) {
                BigInt dg;
                mpz_gcd(num_g.get_mpz_t(), num_g.get_mpz_t(), rat_num(c).get_mpz_t());
                mpz_gcd(dg.get_mpz_t(), den_l.get_mpz_t(), rat_den(c).get_mpz_t());
                den_l = den_l / dg * rat_den(c);
            }
        BigRat scale = make_rat(den_l, num_g);
        if (nums.back().leading() * scale < 0) scale = -scale;
        std::vector<RatFun> out;
        out.reserve(nums.size());
        for (auto& t : nums) out.emplace_back(t * scale);
        return DifferentialOperator(var_, style_, std::move(out));
    }

    // -- variable change -------------------------------------------------------
    //
    // Rewrite a theta-form operator for the variable t = scale * x^(-power).
    // Then theta_x = -power * theta_t.  Works when, after clearing
    // denominators, every x-exponent lies in a single residue class mod
    // `power` (true for the gauge-invariant sectors handled here).
    DifferentialOperator substitute_inverse_power(const std::string& new_var, const BigRat& scale,
                                                  unsigned power) const {
        if (style_ != OpStyle::theta)
            throw std::invalid_argument("substitute_inverse_power: theta form required");
        // clear to polynomial coefficients (left multiplication by a function)
        DifferentialOperator prim = primitive();
        // term list (e, k, c): c * x^e * theta_x^k
        struct Term { long e; size_t k; BigRat c; };
        std::vector<Term> terms;
        long emax = 0;
        bool first = true;
        long emod = -1;
        for (size_t k = 0; k < prim.coef_.size(); ++k) {
            const Poly& pc = prim.coef_[k].num();
            for (long e = 0; e <= pc.degree(); ++e) {
                BigRat c = pc.coeff(e);
                if (c == 0) continue;
                if (emod < 0) emod = e % static_cast<long>(power);
                if (e % static_cast<long>(power) != emod)
                    throw std::domain_error(
                        "substitute_inverse_power: exponents not in one residue class");
                terms.push_back({e, k, c});
                if (first || e > emax) { emax = e; first = false; }
            }
        }
        size_t n = prim.order();
        std::vector<RatFun> out(n + 1);
        BigRat mn(-static_cast<long>(power));
        for (const auto& t : terms) {
            long kk = (emax - t.e) / static_cast<long>(power);
            // x^(e - emax) = (t/scale)^kk ; theta_x^k = (-power)^k theta_t^k
            BigRat c = t.c * pow_rat(mn, t.k) / pow_rat(scale, kk);
            out[t.k] += RatFun(Poly::monomial(c, kk));
        }
        return DifferentialOperator(new_var, OpStyle::theta, std::move(out)).primitive();
    }

    // -- composition -----------------------------------------------------------

    // operator product A*B meaning A applied after B (theta style only)
    static DifferentialOperator compose(const DifferentialOperator& A,
                                        const DifferentialOperator& B) {
        if (A.style_ != OpStyle::theta || B.style_ != OpStyle::theta || A.var_ != B.var_)
            throw std::invalid_argument("compose: need matching theta-form operators");
        // powers[k] = theta^k o B in canonical form
        std::vector<std::vector<RatFun>> powers;
        powers.push_back(B.coef_);
        for (size_t k = 1; k <= A.order(); ++k) {
            const auto& prev = powers.back();
            std::vector<RatFun> cur(prev.size() + 1);
            RatFun x = RatFun::variable();
            for (size_t m = 0; m < prev.size(); ++m) {
                if (prev[m].is_zero()) continue;
                cur[m] += x * prev[m].derivative();  // theta(C) = x C'
                cur[m + 1] += prev[m];
            }
            powers.push_back(std::move(cur));
        }
        std::vector<RatFun> out(A.order() + B.order() + 1);
        for (size_t k = 0; k <= A.order(); ++k) {
            if (A.coef_[k].is_zero()) continue;
            for (size_t m = 0; m < powers[k].size(); ++m) out[m] += A.coef_[k] * powers[k][m];
        }
        return DifferentialOperator(A.var_, OpStyle::theta, std::move(out));
    }

    // indicial polynomial at x = 0 of a theta-form operator: substitute the
    // series variable by 0 in each coefficient
    Poly indicial_polynomial() const {
        if (style_ != OpStyle::theta)
            throw std::invalid_argument("indicial_polynomial: theta form required");
        DifferentialOperator prim = primitive();
        std::vector<BigRat> v;
        for (const auto& c : prim.coef_) v.push_back(c.num().coeff(0));
        Poly ind = Poly(std::vector<BigRat>(v));
        if (ind.is_zero()) {
            // all constant terms vanish: strip the common x power first
            long shift = -1;
            for (const auto& c : prim.coef_) {
                if (c.is_zero()) continue;
                long low = 0;
                while (c.num().coeff(low) == 0) ++low;
                shift = shift < 0 ? low : std::min(shift, low);
            }
            std::vector<BigRat> w;
            for (const auto& c : prim.coef_) w.push_back(c.num().coeff(shift));
            return Poly(std::move(w));
        }
        return ind;
    }

    bool same_normalized(const DifferentialOperator& o) const {
        if (var_ != o.var_ || style_ != o.style_) return false;
        DifferentialOperator a = primitive(), b = o.primitive();
        return a.coef_ == b.coef_;
    }

    std::string str() const {
        std::string d = style_ == OpStyle::theta ? "t" : "D";
        std::string out;
        for (size_t j = coef_.size(); j-- > 0;) {
            if (coef_[j].is_zero()) continue;
            std::string term = "(" + coef_[j].str(var_) + ")";
            if (j > 0) term += "*" + d + (j > 1 ? "^" + std::to_string(j) : "");
            out += (out.empty() ? "" : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (coef_.size() > 1 && coef_.back().is_zero()) coef_.pop_back();
    }
    static std::vector<std::vector<BigInt>> stirling2(size_t n) {
        std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
        s[0][0] = 1;
        for (size_t k = 1; k <= n; ++k)
            for (size_t j = 1; j <= k; ++j)
                s[k][j] = s[k - 1][j - 1] + BigInt(static_cast<long>(j)) * s[k - 1][j];
        return s;
    }

    std::string var_;
    OpStyle style_;
    std::vector<RatFun> coef_;
};

// Apply a theta-form operator (denominators cleared internally) to a
// log-series; exact, result valid through the input order.
template <typename C>
inline LogSeriesT<C> theta_apply(const DifferentialOperator& op, const LogSeriesT<C>& s) {
    DifferentialOperator prim =
        (op.style() == OpStyle::theta ? op : op.to_theta()).primitive();
    LogSeriesT<C> out;
    LogSeriesT<C> cur = s;
    for (size_t k = 0; k < prim.coeffs().size(); ++k) {
        if (!prim.coeff(k).is_zero()) {
            LogSeriesT<C> term = cur.mul_poly(prim.coeff(k).num());
            out = out.blocks.empty() ? term : out + term;
        }
        if (k + 1 < prim.coeffs().size()) cur = cur.theta();
    }
    return out;
}

template <typename C>
inline TruncSeries<C> theta_apply(const DifferentialOperator& op, const TruncSeries<C>& s) {
    LogSeriesT<C> ls;
    ls.blocks.push_back(s);
    return theta_apply(op, ls).blocks[0];
}

}  // namespace dwork
