#pragma once

// The acceptance grid: one function per criterion, each returning a
// pass/fail verdict with a short factual detail line.  The `verify` CLI
// subcommand and the acceptance test binary both run exactly this code.

#include "dwork/charcount.hpp"
#include "dwork/counting.hpp"
#include "dwork/frobenius.hpp"
#include "dwork/io.hpp"
#include "dwork/picard_fuchs.hpp"
#include "dwork/zeta.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace dwork {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace acceptance {

inline DifferentialOperator quintic_lambda_golden() {
    DifferentialOperator acc("lambda", OpStyle::theta, {RatFun(1)});
    for (long i = 1; i <= 4; ++i)
        acc = DifferentialOperator::compose(
            acc, DifferentialOperator("lambda", OpStyle::theta, {RatFun(BigRat(i)), RatFun(5)}));
    RatFun lam = RatFun::variable();
    std::vector<RatFun> coef(5);
    for (size_t j = 0; j < acc.coeffs().size(); ++j) coef[j] = -(RatFun(5) * lam * acc.coeff(j));
    coef[4] += RatFun(1);
    return DifferentialOperator("lambda", OpStyle::theta, coef);
}

inline DifferentialOperator cubic_z_golden() {
    DifferentialOperator prod = DifferentialOperator::compose(
        DifferentialOperator("z", OpStyle::theta, {RatFun(make_rat(1, 3)), RatFun(1)}),
        DifferentialOperator("z", OpStyle::theta, {RatFun(make_rat(2, 3)), RatFun(1)}));
    RatFun z = RatFun::variable();
    std::vector<RatFun> coef(3);
    for (size_t j = 0; j < prod.coeffs().size(); ++j) coef[j] = -(z * prod.coeff(j));
    coef[2] += RatFun(1);
    return DifferentialOperator("z", OpStyle::theta, coef);
}

inline DifferentialOperator k3_printed_operator() {
    auto lin = [](long c) {
        return DifferentialOperator("psi", OpStyle::theta, {RatFun(BigRat(c)), RatFun(1)});
    };
    DifferentialOperator a("psi", OpStyle::theta, {RatFun(0), RatFun(0), RatFun(0), RatFun(1)});
    for (long c : {3, 6, 9}) a = DifferentialOperator::compose(a, lin(c));
    DifferentialOperator b = lin(-1);
    for (long c : {-2, -5, -7, -10, -11}) b = DifferentialOperator::compose(b, lin(c));
    RatFun scaleA(Poly::monomial(1, 12));
    BigRat cB = make_rat(-pow_int(BigInt(2), 8) * pow_int(BigInt(3), 9), 1);
    std::vector<RatFun> coef(7);
    for (size_t j = 0; j < a.coeffs().size(); ++j) coef[j] += scaleA * a.coeff(j);
    for (size_t j = 0; j < b.coeffs().size(); ++j) coef[j] += RatFun(cB) * b.coeff(j);
    return DifferentialOperator("psi", OpStyle::theta, coef);
}

// K3 period series in t = 1/psi for the gauge psi * Omega_w / Q
inline RatSeries k3_period_series(unsigned M) {
    std::vector<BigRat> c(M + 1, BigRat(0));
    for (unsigned m = 0; m <= M; ++m) {
        if (m % 12) continue;
        unsigned cc = m / 3, d = m / 3, b = m / 4;
        long a = static_cast<long>(m) - b - cc - d;
        if (a < 0 || 8 * a + cc != m) continue;
        BigInt mult = factorial(m) / (factorial(a) * factorial(b) * factorial(cc) * factorial(d));
        c[m] = make_rat((m % 2) ? -mult : mult, 1);
    }
    return RatSeries("t", std::move(c));
}

// -- criterion 1 + 2: quintic character formula vs brute force ------------------

inline std::pair<bool, std::string> quintic_vs_bruteforce(bool truncation_check,
                                                          unsigned threads) {
    std::ostringstream detail;
    bool ok = true;
    for (uint32_t p : {7u, 13u, 17u}) {
        ExtField F = make_ext_field(p, 1);
        DworkFamily quintic{5};
        for (uint32_t psi : {2u, 3u, 4u}) {
            CharCountResult res = quintic_count(psi, p, 5);
            if (truncation_check) {
                uint32_t lam = quintic_lambda_bar(psi, p);
                BigInt lhs = res.value.value() % p;
                bool match = lhs == BigInt(truncated_hypergeometric(p, lam));
                ok = ok && match;
                detail << "p=" << p << " psi=" << psi << (match ? " ok; " : " MISMATCH; ");
            } else {
                BigInt brute =
                    count_projective(defining_polynomial(quintic, FieldElem{psi}, F), F,
                                     kDefaultEnumCap, threads)
                        .count;
                bool match = res.projective && *res.projective == brute &&
                             res.printed_forms_agree;
                ok = ok && match;
                detail << "p=" << p << " psi=" << psi << " N=" << brute.get_str()
                       << (match ? " ok; " : " MISMATCH; ");
            }
        }
    }
    return {ok, detail.str()};
}

inline CriterionResult criterion1(unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    auto [ok, detail] = quintic_vs_bruteforce(false, threads);
    CriterionResult r{1, "quintic character formula equals exhaustive projective count", ok,
                      detail, 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline CriterionResult criterion2(unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    auto [ok, detail] = quintic_vs_bruteforce(true, threads);
    CriterionResult r{2, "character formula mod p equals truncated hypergeometric", ok, detail,
                      0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 3: Picard-Fuchs golden operators ----------------------------------

inline CriterionResult criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    PFFamily quintic = PFFamily::from_dwork(DworkFamily{5});
    DifferentialOperator q = derive_picard_fuchs(quintic, RatFun::variable());
    DifferentialOperator q_lam =
        q.to_theta().substitute_inverse_power("lambda", make_rat(1, 3125), 5);
    bool quintic_ok = q_lam.same_normalized(quintic_lambda_golden());
    detail << "quintic lambda-form " << (quintic_ok ? "exact" : "MISMATCH") << "; ";

    PFFamily cubic = PFFamily::from_dwork(DworkFamily{3});
    DifferentialOperator c_gauged = derive_picard_fuchs(cubic, RatFun::variable());
    DifferentialOperator c_z = c_gauged.to_theta().substitute_inverse_power("z", BigRat(1), 3);
    bool z_ok = c_z.same_normalized(cubic_z_golden());
    detail << "cubic z-form (z = psi^-3) " << (z_ok ? "exact" : "MISMATCH") << "; ";

    // psi-form for the ungauged period: psi + 3 psi^2 d + (psi^3 - 1) d^2.
    // The source prints 3 + 3 psi d + ((psi^2-1)/psi) d^2, whose solutions
    // are not series in psi^-3 and which is not the psi-transform of the
    // z-form; the corrected operator is gated here and the misprint reported.
    DifferentialOperator c_plain = derive_picard_fuchs(cubic, RatFun(1));
    DifferentialOperator golden_psi(
        "psi", OpStyle::ddx,
        {RatFun(Poly::monomial(1, 1)), RatFun(Poly::monomial(3, 2)),
         RatFun(Poly::monomial(1, 3)) - RatFun(1)});
    bool psi_ok = c_plain.same_normalized(golden_psi);
    detail << "cubic psi-form matches (psi^3-1)f''+3psi^2 f'+psi f "
           << (psi_ok ? "exact" : "MISMATCH")
           << " [printed 3+3psi*d+((psi^2-1)/psi)d^2 is a misprint: wrong "
              "singular locus psi^2=1 vs psi^3=1]";

    CriterionResult r{3, "Picard-Fuchs golden operators (quintic Eq.(2), cubic)",
                      quintic_ok && z_ok && psi_ok, detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 4: K3 family --------------------------------------------------------

inline CriterionResult criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    PFFamily fam = PFFamily::from_fermat(FermatDeformation::k3_chain());
    DifferentialOperator op = derive_picard_fuchs(fam, RatFun::variable());
    DifferentialOperator op_t = op.to_theta().substitute_inverse_power("t", BigRat(1), 1);
    RatSeries h = k3_period_series(36);
    RatSeries res = theta_apply(op_t, h);
    bool annihilates = true;
    for (unsigned k = 0; k <= std::min<size_t>(res.order(), 30); ++k)
        annihilates = annihilates && res.coeff(k) == 0;
    detail << "derived order-" << op.order() << " operator annihilates period series through "
           << "order 30: " << (annihilates ? "yes" : "NO") << "; ";
    bool agrees = op.to_theta().same_normalized(k3_printed_operator());
    detail << "agreement with printed operator: " << (agrees ? "EXACT" : "differs")
           << " (deformation monomial repaired to x1x2x3x4; the printed monomial "
              "x1^3 xi^4 is not weighted-homogeneous of degree 24)";
    CriterionResult r{4, "K3 chain family operator annihilates its period series", annihilates,
                      detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 5: Frobenius solutions -----------------------------------------------

inline CriterionResult criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = true;
    unsigned M = 30;
    DworkFamily quintic{5};
    auto sols = log_solutions(quintic, 3, M);
    DifferentialOperator L = quintic_lambda_golden();
    for (const auto& s : sols) {
        LogSeries r = theta_apply(L, s.assembled());
        for (const auto& b : r.blocks)
            for (unsigned k = 0; k <= 26; ++k) ok = ok && b.coeff(k) == 0;
    }
    detail << "L(pi_i) = 0 through order 26 for i=0..3: " << (ok ? "yes" : "NO") << "; ";

    RatSeries w0 = fundamental_period(quintic, M);
    bool coeffs_ok = true;
    for (unsigned m = 0; m <= M; ++m)
        coeffs_ok = coeffs_ok && w0.coeff(m) == factorial_ratio(5 * m, m, 5);
    ok = ok && coeffs_ok;
    detail << "pi_0 coefficients (5m)!/(m!)^5: " << (coeffs_ok ? "yes" : "NO") << "; ";

    DworkFamily cubic{3};
    auto csols = log_solutions(cubic, 1, M);
    DifferentialOperator Lc = DifferentialOperator::compose(
        DifferentialOperator("lambda", OpStyle::theta, {RatFun(make_rat(1, 3)), RatFun(1)}),
        DifferentialOperator("lambda", OpStyle::theta, {RatFun(make_rat(2, 3)), RatFun(1)}));
    {
        RatFun lam = RatFun::variable();
        std::vector<RatFun> coef(3);
        for (size_t j = 0; j < Lc.coeffs().size(); ++j) coef[j] = -(RatFun(27) * lam * Lc.coeff(j));
        coef[2] += RatFun(1);
        Lc = DifferentialOperator("lambda", OpStyle::theta, coef);
    }
    bool cub_ok = true;
    for (const auto& s : csols) {
        LogSeries r = theta_apply(Lc, s.assembled());
        for (const auto& b : r.blocks)
            for (unsigned k = 0; k <= 26; ++k) cub_ok = cub_ok && b.coeff(k) == 0;
    }
    ok = ok && cub_ok;
    detail << "cubic L(pi_i) = 0 for i=0..1: " << (cub_ok ? "yes" : "NO") << "; ";

    auto hq = extract_hypergeometric(fundamental_period(quintic, 16));
    bool hq_ok = hq.upper == std::vector<BigRat>{make_rat(1, 5), make_rat(2, 5), make_rat(3, 5),
                                                 make_rat(4, 5)} &&
                 hq.lower == std::vector<BigRat>{BigRat(1), BigRat(1), BigRat(1)};
    auto hc = extract_hypergeometric(fundamental_period(cubic, 16));
    bool hc_ok = hc.upper == std::vector<BigRat>{make_rat(1, 3), make_rat(2, 3)} &&
                 hc.lower == std::vector<BigRat>{BigRat(1)};
    ok = ok && hq_ok && hc_ok;
    detail << "hypergeometric parameters (1/5,2/5,3/5,4/5;1,1,1) and (1/3,2/3;1): "
           << (hq_ok && hc_ok ? "yes" : "NO");
    CriterionResult r{5, "Frobenius log-solutions and hypergeometric extraction", ok,
                      detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 6: semi-period congruence ----------------------------------------------

inline CriterionResult criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = true;
    DworkFamily quintic{5};
    for (uint32_t p : {7u, 13u}) {
        ExtField F = make_ext_field(p, 1);
        for (uint32_t psi : {2u, 3u}) {
            SemiPeriodResult sp = semiperiod_count(psi, p, 5);
            BigInt cone =
                count_affine_cone(defining_polynomial(quintic, FieldElem{psi}, F), F);
            bool modp = (sp.value.value() - cone) % p == 0;
            ok = ok && modp;
            BigInt diff = (sp.value.value() - cone) % pow_int(BigInt(p), 5);
            if (diff < 0) diff += pow_int(BigInt(p), 5);
            long v = diff == 0 ? 5 : valuation(diff, BigInt(p));
            detail << "p=" << p << " psi=" << psi << " mod-p " << (modp ? "ok" : "FAIL")
                   << ", residual valuation " << v << "/5; ";
        }
    }
    detail << "(mod-p is the gate; the mod-p^5 residual is the recorded experiment: with the "
              "normalized rational blocks the congruence holds to p^3..p^4, not p^5; the full "
              "p^5 statement needs the source's unnormalized blocks, whose zeta-constants have "
              "no p-adic value here)";
    CriterionResult r{6, "semi-period five-term sum congruent to the count mod p", ok,
                      detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 7: cubic worked example -------------------------------------------------

inline CriterionResult criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = true;
    auto star_oracle = [](uint32_t p, uint32_t psi) {
        ExtField F = make_ext_field(p, 1);
        uint64_t cnt = 0;
        for (uint32_t x = 1; x < p; ++x)
            for (uint32_t y = 1; y < p; ++y)
                for (uint32_t z = 1; z < p; ++z) {
                    FieldElem v = F.add(F.add(F.pow(FieldElem{x}, 3), F.pow(FieldElem{y}, 3)),
                                        F.pow(FieldElem{z}, 3));
                    FieldElem m = F.mul(F.mul(FieldElem{x}, FieldElem{y}), FieldElem{z});
                    v = F.sub(v, F.mul(F.mul(F.from_int(3), FieldElem{psi}), m));
                    if (F.is_zero(v)) ++cnt;
                }
        return BigInt(static_cast<unsigned long>(cnt));
    };
    // calibration pair first, then six further pairs
    struct Case { uint32_t p, psi; };
    const Case cases[] = {{5, 2}, {5, 3}, {11, 2}, {11, 3}, {17, 2}, {17, 3}, {17, 5}};
    for (const Case& c : cases) {
        CharCountResult res = cubic_count(c.psi, c.p, 4);
        BigInt oracle = star_oracle(c.p, c.psi);
        bool match = res.resolved && *res.resolved == oracle;
        ok = ok && match;
        detail << "(" << c.p << "," << c.psi << ") N*=" << oracle.get_str()
               << (match ? " ok; " : " MISMATCH; ");
    }
    detail << "constant term calibrated to ((p-1)^3+1)/p = p^2-3p+3 (the printed (p-1)^3 "
              "misses the 1/p of the intermediate identity)";
    CriterionResult r{7, "cubic character formula matches brute force after calibration", ok,
                      detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 8: Gauss-sum identities via the complex embedding ------------------------

inline CriterionResult criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = true;
    const double tol = 1e-9;
    for (uint32_t p : {5u, 7u, 11u, 13u}) {
        auto G0 = complex_gauss_sum(CharIndex{0}, p).value;
        bool g0_ok = std::abs(G0 - std::complex<double>(-1, 0)) < tol;
        ok = ok && g0_ok;
        bool pair_ok = true, tele_ok = true;
        for (long m = 1; m + 1 < static_cast<long>(p); ++m) {
            auto Gm = complex_gauss_sum(CharIndex{m}, p).value;
            auto Gmm = complex_gauss_sum(CharIndex{-m}, p).value;
            double sign = (m % 2 == 0) ? 1.0 : -1.0;
            pair_ok = pair_ok && std::abs(Gm * Gmm - sign * static_cast<double>(p)) < tol;
            for (long b = 1; b + 1 < static_cast<long>(p); ++b) {
                if ((m + b) % (p - 1) == 0) continue;
                auto Gb = complex_gauss_sum(CharIndex{b}, p).value;
                auto Gab = complex_gauss_sum(CharIndex{m + b}, p).value;
                auto J = complex_jacobi_sum(CharIndex{m}, CharIndex{b}, p);
                tele_ok = tele_ok && std::abs(Gm * Gb / Gab - J) < tol;
            }
        }
        ok = ok && pair_ok && tele_ok;
        detail << "p=" << p << " G0=-1:" << (g0_ok ? "ok" : "FAIL")
               << " GmG-m:" << (pair_ok ? "ok" : "FAIL")
               << " telescope:" << (tele_ok ? "ok" : "FAIL") << "; ";
    }
    CriterionResult r{8, "complex Gauss-sum identities within 1e-9", ok, detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 9: zeta functions of the Fermat elliptic family ---------------------------

inline CriterionResult criterion9() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = true;
    DworkFamily cubic{3};
    for (uint32_t p : {5u, 7u}) {
        ExtField F = make_ext_field(p, 1);
        for (uint32_t psi : {0u, 2u}) {
            uint32_t use_psi = psi;
            if (psi != 0 && is_singular_fiber(cubic, FieldElem{psi}, F)) {
                // psi = 2 is a singular fiber at p = 7 (2^3 = 1 mod 7); the
                // grid substitutes the next nonsingular value
                use_psi = 3;
                detail << "p=" << p << " psi=2 singular, using psi=3; ";
            }
            auto table = count_table(F, FieldElem{use_psi}, 3,
                                     [&](const ExtField& Fr, FieldElem psir) {
                                         return count_projective(
                                             defining_polynomial(cubic, psir, Fr), Fr);
                                     });
            std::vector<BigInt> counts;
            for (const auto& c : table) counts.push_back(c.count);
            Poly P1 = fit_weil_curve({counts[0]}, BigInt(p), 1);
            bool pred = predict_count(P1, BigInt(p), 2) == counts[1] &&
                        predict_count(P1, BigInt(p), 3) == counts[2];
            bool roots_ok = true;
            for (const auto& a : reciprocal_roots(P1))
                roots_ok = roots_ok &&
                           std::abs(std::abs(a) - std::sqrt(static_cast<double>(p))) < 1e-9;
            SlopeProfile sl = newton_slopes(P1, BigInt(p));
            BigInt trace = -rat_num(P1.coeff(1));
            bool slopes_ok;
            if (trace % p == 0)
                slopes_ok = sl.slopes.size() == 1 && sl.slopes[0].first == make_rat(1, 2);
            else
                slopes_ok = sl.slopes.size() == 2 && sl.slopes[0].first == 0 &&
                            sl.slopes[1].first == 1;
            bool case_ok = pred && roots_ok && slopes_ok;
            ok = ok && case_ok;
            detail << "p=" << p << " psi=" << use_psi << " a=" << trace.get_str()
                   << " predict:" << (pred ? "ok" : "FAIL")
                   << " |alpha|=sqrt(p):" << (roots_ok ? "ok" : "FAIL") << " slopes "
                   << (sl.slopes.size() == 1 ? "{1/2,1/2}" : "{0,1}") << "; ";
        }
    }
    CriterionResult r{9, "elliptic Weil fit predicts N_2, N_3; root moduli and slopes", ok,
                      detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 10: Wan's congruence ---------------------------------------------------------

inline CriterionResult criterion10(unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = true;
    // the (4, q=25) leg reaches P^3(F_625) and (F_625^*)^3, about 2.4e8
    // points each, beyond the default cap
    const uint64_t cap = uint64_t(1) << 28;
    auto run = [&](unsigned n, const ExtField& base, FieldElem psi, const std::string& tag) {
        auto reps = wan_congruence_check(n, base, psi, 2, cap, threads);
        for (const auto& rep : reps) {
            ok = ok && rep.passes;
            detail << tag << " r=" << rep.r << " v=" << rep.valuation_closure
                   << (rep.passes ? " ok; " : " FAIL; ");
        }
    };
    ExtField F5 = make_ext_field(5, 1);
    run(3, F5, FieldElem{2}, "(3,5,psi=2)");
    run(3, F5, FieldElem{3}, "(3,5,psi=3)");
    // n = 4 at p = 5: psi^4 = 1 for every psi in F_5^*, so the only
    // nonsingular parameters are the Fermat fiber psi = 0 and values in
    // extensions; the grid uses psi = 0 over F_5 and a generator of F_25
    run(4, F5, F5.zero(), "(4,5,psi=0)");
    ExtField F25 = make_ext_field(5, 2);
    run(4, F25, F25.generator(), "(4,25,psi=g)");
    ExtField F7 = make_ext_field(7, 1);
    run(5, F7, FieldElem{2}, "(5,7,psi=2)");
    run(5, F7, FieldElem{3}, "(5,7,psi=3)");
    detail << "(Y counted as the projective closure of the torus model; the open torus "
              "misses a psi-independent boundary and fails the congruence)";
    CriterionResult r{10, "Wan congruence N_r(X) = N_r(Y) mod q^r", ok, detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// -- criterion 11: weighted-projective ambient counts ----------------------------------------

inline CriterionResult criterion11() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = true;
    for (uint32_t p : {5u, 7u}) {
        ExtField F = make_ext_field(p, 1);
        BigInt q(p);
        SparsePoly zero3;
        zero3.nvars = 3;
        SparsePoly zero4;
        zero4.nvars = 4;
        BigInt w123 = count_weighted_projective(zero3, {1, 2, 3}, F).count;
        BigInt w3678 = count_weighted_projective(zero4, {3, 6, 7, 8}, F).count;
        bool a = w123 == (pow_int(q, 3) - 1) / (q - 1);
        bool b = w3678 == (pow_int(q, 4) - 1) / (q - 1);
        ok = ok && a && b;
        detail << "F_" << p << " P(1,2,3)=" << w123.get_str() << (a ? " ok" : " FAIL")
               << ", P(3,6,7,8)=" << w3678.get_str() << (b ? " ok; " : " FAIL; ");
    }
    CriterionResult r{11, "weighted ambient counts equal (q^(n+1)-1)/(q-1)", ok, detail.str(),
                      0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace acceptance

inline std::vector<CriterionResult> run_acceptance(unsigned threads = 1) {
    using namespace acceptance;
    std::vector<CriterionResult> out;
    out.push_back(criterion1(threads));
    out.push_back(criterion2(threads));
    out.push_back(criterion3());
    out.push_back(criterion4());
    out.push_back(criterion5());
    out.push_back(criterion6());
    out.push_back(criterion7());
    out.push_back(criterion8());
    out.push_back(criterion9());
    out.push_back(criterion10(threads));
    out.push_back(criterion11());
    return out;
}

inline json acceptance_report(const std::vector<CriterionResult>& results) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        arr.push_back(e);
        all = all && r.passed;
    }
    j["criteria"] = arr;
    j["all_passed"] = all;
    j["out_of_scope"] =
        "the degree-204 quintic zeta numerator, its factorization into R_A^10 R_B^15, and the "
        "mod-5^2 congruence Z(M,T) = Z(W,T)^{-1} are not desk-scale and are not attempted";
    return j;
}

}  // namespace dwork
