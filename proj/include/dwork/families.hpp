#pragma once

// Declarative descriptions of the variety families the library counts and
// differentiates.  Families are plain data; every algorithm takes a family
// description plus whatever field/parameter it needs, so adding a family is
// a matter of adding data.

#include "dwork/finite_field.hpp"
#include "dwork/numeric.hpp"
#include "dwork/ratfun.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace dwork {

// x_1^n + ... + x_n^n - n psi x_1...x_n = 0 in P^(n-1)
struct DworkFamily {
    unsigned n = 5;
};

// sum of unit-coefficient monomials G(x) plus psi * x^deformation, in the
// weighted projective space P(weights).  Diagonal exponents cover the Fermat
// case; extra monomials cover chain-type terms such as x1*x3^3.
struct FermatDeformation {
    std::vector<unsigned> weights;
    std::vector<std::vector<unsigned>> g_monomials;
    std::vector<unsigned> deformation;

    unsigned nvars() const { return static_cast<unsigned>(weights.size()); }
    unsigned degree() const {
        unsigned d = 0;
        for (size_t i = 0; i < weights.size(); ++i) d += weights[i] * deformation[i];
        return d;
    }
    bool weighted_homogeneous() const {
        unsigned d = degree();
        for (const auto& m : g_monomials) {
            unsigned s = 0;
            for (size_t i = 0; i < weights.size(); ++i) s += weights[i] * m[i];
            if (s != d) return false;
        }
        return true;
    }
    // Calabi-Yau condition sum(w) = deg; violations are legal for counting
    bool calabi_yau() const {
        unsigned s = 0;
        for (unsigned w : weights) s += w;
        return s == degree();
    }

    static FermatDeformation diagonal(const std::vector<unsigned>& exponents,
                                      const std::vector<unsigned>& weights,
                                      const std::vector<unsigned>& deformation) {
        FermatDeformation f;
        f.weights = weights;
        f.deformation = deformation;
        for (size_t i = 0; i < exponents.size(); ++i) {
            std::vector<unsigned> m(exponents.size(), 0);
            m[i] = exponents[i];
            f.g_monomials.push_back(std::move(m));
        }
        return f;
    }

    static FermatDeformation dwork(unsigned n) {
        return diagonal(std::vector<unsigned>(n, n), std::vector<unsigned>(n, 1),
                        std::vector<unsigned>(n, 1));
    }

    // The K3 family x1^8 + x2^4 + x1 x3^3 + x4^3 + psi x1x2x3x4 in P(3,6,7,8).
    // The deformation monomial is x1x2x3x4, the unique choice of weighted
    // degree 24 = 3+6+7+8 compatible with the Calabi-Yau condition.
    static FermatDeformation k3_chain() {
        FermatDeformation f;
        f.weights = {3, 6, 7, 8};
        f.g_monomials = {{8, 0, 0, 0}, {0, 4, 0, 0}, {1, 0, 3, 0}, {0, 0, 0, 3}};
        f.deformation = {1, 1, 1, 1};
        return f;
    }
};

// affine model of the singular mirror: x_1 + ... + x_(n-1) + 1/(x_1...x_(n-1)) - n psi
// on the torus (F_q^*)^(n-1)
struct SingularMirror {
    unsigned n = 5;
};

// y^5 = x^(e1) (1-x)^(e2) (x - psi^5)^(e3)
struct SuperellipticCurve {
    std::array<unsigned, 3> e;

    static SuperellipticCurve curve_A() { return SuperellipticCurve{{2, 3, 2}}; }
    static SuperellipticCurve curve_B() { return SuperellipticCurve{{2, 4, 1}}; }
};

// -- singular-fiber tests -------------------------------------------------------

// Dwork fibers are singular exactly when psi^n = 1 (characteristic prime to n).
inline bool is_singular_fiber(const DworkFamily& fam, FieldElem psi, const ExtField& F) {
    return F.pow(psi, fam.n).idx == F.one().idx;
}

// complex-parameter variant: the excluded values are the n-th roots of unity
inline bool is_singular_fiber(const DworkFamily& fam, std::complex<double> psi,
                              double tol = 1e-9) {
    return std::abs(std::pow(psi, static_cast<int>(fam.n)) - 1.0) < tol;
}

// defining polynomial with the parameter left symbolic: exponent vectors with
// coefficients in Q(psi)
inline std::vector<std::pair<std::vector<unsigned>, RatFun>> symbolic_defining_polynomial(
    const DworkFamily& fam) {
    std::vector<std::pair<std::vector<unsigned>, RatFun>> terms;
    for (unsigned i = 0; i < fam.n; ++i) {
        std::vector<unsigned> e(fam.n, 0);
        e[i] = fam.n;
        terms.emplace_back(std::move(e), RatFun(1));
    }
    terms.emplace_back(std::vector<unsigned>(fam.n, 1),
                       RatFun(Poly::monomial(-static_cast<long>(fam.n), 1)));
    return terms;
}

// -- concrete defining polynomials over a field ----------------------------------

struct SparseTerm {
    std::vector<uint8_t> exps;
    FieldElem coeff;
};
struct SparsePoly {
    unsigned nvars = 0;
    std::vector<SparseTerm> terms;
};

inline SparsePoly defining_polynomial(const DworkFamily& fam, FieldElem psi, const ExtField& F) {
    SparsePoly P;
    P.nvars = fam.n;
    for (unsigned i = 0; i < fam.n; ++i) {
        SparseTerm t;
        t.exps.assign(fam.n, 0);
        t.exps[i] = static_cast<uint8_t>(fam.n);
        t.coeff = F.one();
        P.terms.push_back(std::move(t));
    }
    SparseTerm d;
    d.exps.assign(fam.n, 1);
    d.coeff = F.neg(F.mul(F.from_int(fam.n), psi));
    P.terms.push_back(std::move(d));
    return P;
}

inline SparsePoly defining_polynomial(const FermatDeformation& fam, FieldElem psi,
                                      const ExtField& F) {
    SparsePoly P;
    P.nvars = fam.nvars();
    for (const auto& m : fam.g_monomials) {
        SparseTerm t;
        for (unsigned e : m) t.exps.push_back(static_cast<uint8_t>(e));
        t.coeff = F.one();
        P.terms.push_back(std::move(t));
    }
    SparseTerm d;
    for (unsigned e : fam.deformation) d.exps.push_back(static_cast<uint8_t>(e));
    d.coeff = psi;
    P.terms.push_back(std::move(d));
    return P;
}

// Projective closure of the singular mirror: multiply the affine equation by
// x_1...x_(n-1) and homogenize with x_n, giving the degree-n hypersurface
//   (prod_{i<n} x_i)(sum_{i<n} x_i) - n psi (prod_{i<n} x_i) x_n + x_n^n = 0.
inline SparsePoly mirror_closure_polynomial(const SingularMirror& fam, FieldElem psi,
                                            const ExtField& F) {
    unsigned n = fam.n;
    SparsePoly P;
    P.nvars = n;
    for (unsigned i = 0; i + 1 < n; ++i) {
        SparseTerm t;
        t.exps.assign(n, 1);
        t.exps[n - 1] = 0;
        t.exps[i] += 1;
        t.coeff = F.one();
        P.terms.push_back(std::move(t));
    }
    SparseTerm d;
    d.exps.assign(n, 1);
    d.coeff = F.neg(F.mul(F.from_int(n), psi));
    P.terms.push_back(std::move(d));
    SparseTerm h;
    h.exps.assign(n, 0);
    h.exps[n - 1] = static_cast<uint8_t>(n);
    h.coeff = F.one();
    P.terms.push_back(std::move(h));
    return P;
}

// brute-force Jacobian smoothness test at desk scale: a fiber is singular iff
// some nonzero cone point satisfies F = 0 together with all partials
inline bool is_singular_fiber(const FermatDeformation& fam, FieldElem psi, const ExtField& F);

// -- quintic monomial classes -----------------------------------------------------

// A class of periods of the quintic labelled by a representative exponent
// vector: `solutions` counts the independent periods attached to one
// representative and `multiplicity` the permutation-type count of
// representatives.  k(v) * 5 = |v| + 5.
struct MonomialClass {
    std::vector<unsigned> rep;
    unsigned solutions;
    unsigned multiplicity;
    unsigned pole_order;
    std::string name;
};

// The six classes; solution counts (4,2,2,2,2,1) weighted by multiplicities
// sum to 204 = dim H^3 of the quintic.
inline std::vector<MonomialClass> quintic_monomial_classes() {
    return {
        {{0, 0, 0, 0, 0}, 4, 1, 1, "invariant tower {1, x^e, x^2e, x^3e}"},
        {{4, 1, 0, 0, 0}, 2, 20, 2, "x1^4 x2"},
        {{3, 2, 0, 0, 0}, 2, 20, 2, "x1^3 x2^2"},
        {{2, 1, 1, 1, 0}, 2, 20, 2, "x1^2 x2 x3 x4"},
        {{2, 2, 1, 0, 0}, 2, 30, 2, "x1^2 x2^2 x3"},
        {{4, 3, 2, 1, 0}, 1, 20, 3, "x1^4 x2^3 x3^2 x4"},
    };
}

inline unsigned quintic_period_count() {
    unsigned total = 0;
    for (const auto& c : quintic_monomial_classes()) total += c.solutions * c.multiplicity;
    return total;
}

}  // namespace dwork
