#pragma once

// Griffiths-Dwork derivation of Picard-Fuchs operators via the monomial-label
// reduction web.
//
// A label (v, k) stands for the rational form x^v Omega_w / Q^k, where Q is a
// sum of unit-coefficient monomials G(x) plus defcoeff * psi * x^a and
// k * deg Q = <w, v> + sum(w).  Two exact facts drive everything:
//
//   derivative:  d/dpsi X(v,k) = -k * defcoeff * X(v+a, k+1)
//
//   reduction:   for A_i = x^u,
//                sum_mu c_mu X(u+mu, k) = (u_i / (k-1)) X(u-e_i, k-1),
//                where the mu run over the monomials of dQ/dx_i.  This is the
//                pole-order reduction by an exact form; on the torus-period
//                functional it is literally integration by parts, so every
//                linear consequence drawn from these relations is valid on
//                the periods.
//
// Per pole level the engine collects the relation closure of the labels it
// needs to rewrite and eliminates sparsely over Q(psi), preferring to solve
// for "spiky" labels so that the flat labels j*(1,..,1) survive as the basis.
// The derivative chain of the start form is then reduced level by level and
// the first linear dependence over Q(psi) is the Picard-Fuchs operator.

#include "dwork/families.hpp"
#include "dwork/linalg.hpp"
#include "dwork/operators.hpp"
#include "dwork/ratfun.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace dwork {

struct MonomialLabel {
    std::vector<unsigned> v;
    unsigned pole = 1;
    bool operator<(const MonomialLabel& o) const {
        if (pole != o.pole) return pole < o.pole;
        return v < o.v;
    }
    bool operator==(const MonomialLabel& o) const = default;
};

struct MonomialTerm {
    MonomialLabel label;
    RatFun coeff;
};

// the structured family the engine accepts: Fermat-type monomials plus one
// deformation monomial with coefficient defcoeff * psi
struct PFFamily {
    unsigned nvars = 0;
    std::vector<unsigned> weights;
    unsigned degree = 0;
    std::vector<std::vector<unsigned>> gmons;
    std::vector<unsigned> defmon;
    long defcoeff = 0;

    static PFFamily from_dwork(const DworkFamily& fam) {
        PFFamily f;
        f.nvars = fam.n;
        f.weights.assign(fam.n, 1);
        f.degree = fam.n;
        for (unsigned i = 0; i < fam.n; ++i) {
            std::vector<unsigned> m(fam.n, 0);
            m[i] = fam.n;
            f.gmons.push_back(std::move(m));
        }
        f.defmon.assign(fam.n, 1);
        f.defcoeff = -static_cast<long>(fam.n);
        return f;
    }

    static PFFamily from_fermat(const FermatDeformation& fam) {
        PFFamily f;
        f.nvars = fam.nvars();
        f.weights = fam.weights;
        f.degree = fam.degree();
        f.gmons = fam.g_monomials;
        f.defmon = fam.deformation;
        f.defcoeff = 1;
        return f;
    }

    unsigned pole_order(const std::vector<unsigned>& v) const {
        unsigned s = 0;
        for (unsigned i = 0; i < nvars; ++i) s += weights[i] * v[i];
        for (unsigned w : weights) s += w;
        if (s % degree != 0)
            throw std::invalid_argument("PFFamily: label degree incompatible with pole order");
        return s / degree;
    }

    // monomials of dQ/dx_i: (integer coefficient, psi flag, exponent vector)
    struct DerivMonomial {
        long coeff;
        bool has_psi;
        std::vector<unsigned> exps;
    };
    std::vector<DerivMonomial> deriv_monomials(unsigned i) const {
        std::vector<DerivMonomial> out;
        for (const auto& m : gmons)
            if (m[i] > 0) {
                auto e = m;
                e[i] -= 1;
                out.push_back({static_cast<long>(m[i]), false, std::move(e)});
            }
        if (defmon[i] > 0) {
            auto e = defmon;
            e[i] -= 1;
            out.push_back({defcoeff * static_cast<long>(defmon[i]), true, std::move(e)});
        }
        return out;
    }
};

using LabelElement = std::map<MonomialLabel, RatFun>;

namespace pf_detail {

inline void add_term(LabelElement& e, const MonomialLabel& lab, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = e.find(lab);
    if (it == e.end()) {
        e.emplace(lab, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

inline RatFun psi_monomial(const BigRat& c, unsigned deg) {
    return RatFun(Poly::monomial(c, deg));
}

// spiky-first ordering: labels with a large maximal exponent are eliminated
// first, so the flat diagonal labels survive as the basis
struct SpikyOrder {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned ma = *std::max_element(a.begin(), a.end());
        unsigned mb = *std::max_element(b.begin(), b.end());
        if (ma != mb) return ma > mb;
        unsigned sa = 0, sb = 0;
        for (unsigned x : a) sa += x;
        for (unsigned x : b) sb += x;
        if (sa != sb) return sa > sb;
        return a > b;
    }
};

}  // namespace pf_detail

// d/dpsi of a label combination, with the product rule on the coefficients
inline LabelElement pf_derivative(const PFFamily& fam, const LabelElement& E) {
    LabelElement out;
    for (const auto& [lab, c] : E) {
        pf_detail::add_term(out, lab, c.derivative());
        std::vector<unsigned> va(lab.v);
        for (unsigned i = 0; i < fam.nvars; ++i) va[i] += fam.defmon[i];
        MonomialLabel up{std::move(va), lab.pole + 1};
        pf_detail::add_term(out, up,
                            c * RatFun(BigRat(-static_cast<long>(lab.pole) * fam.defcoeff)));
    }
    return out;
}

// the derivative of a single form, as in the reduction diagrams: pole order
// rises by one and the exponent vector gains the deformation monomial
inline MonomialTerm psi_derivative(const PFFamily& fam, const MonomialTerm& term) {
    std::vector<unsigned> va(term.label.v);
    for (unsigned i = 0; i < fam.nvars; ++i) va[i] += fam.defmon[i];
    return MonomialTerm{
        MonomialLabel{std::move(va), term.label.pole + 1},
        term.coeff * RatFun(BigRat(-static_cast<long>(term.label.pole) * fam.defcoeff))};
}

namespace pf_detail {

struct Relation {
    std::map<std::vector<unsigned>, RatFun> tops;  // same-pole labels
    LabelElement lower;                            // one pole down
};

// decompositions (i, u) with u = v - mu >= 0 for some monomial mu of dQ/dx_i;
// non-deformation decompositions first, then by decreasing mu_i
inline std::vector<std::pair<unsigned, std::vector<unsigned>>> decompositions(
    const PFFamily& fam, const std::vector<unsigned>& v) {
    struct Cand { int is_def; int neg_mui; unsigned i; std::vector<unsigned> u; };
    std::vector<Cand> cands;
    for (unsigned i = 0; i < fam.nvars; ++i) {
        for (const auto& dm : fam.deriv_monomials(i)) {
            std::vector<unsigned> u(fam.nvars);
            bool ok = true;
            for (unsigned j = 0; j < fam.nvars; ++j) {
                if (v[j] < dm.exps[j]) { ok = false; break; }
                u[j] = v[j] - dm.exps[j];
            }
            if (ok) cands.push_back({dm.has_psi ? 1 : 0,
                                     -static_cast<int>(dm.exps[i]), i, std::move(u)});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return std::tie(a.is_def, a.neg_mui, a.i, a.u) < std::tie(b.is_def, b.neg_mui, b.i, b.u);
    });
    std::vector<std::pair<unsigned, std::vector<unsigned>>> out;
    bool have_nondef = !cands.empty() && cands.front().is_def == 0;
    for (auto& c : cands) {
        if (have_nondef && c.is_def) break;
        out.emplace_back(c.i, std::move(c.u));
        if (!have_nondef) break;  // deformation decompositions: keep only the first
    }
    return out;
}

inline Relation build_relation(const PFFamily& fam, unsigned i, const std::vector<unsigned>& u,
                               unsigned k) {
    Relation rel;
    for (const auto& dm : fam.deriv_monomials(i)) {
        std::vector<unsigned> lab(fam.nvars);
        for (unsigned j = 0; j < fam.nvars; ++j) lab[j] = u[j] + dm.exps[j];
        RatFun c = dm.has_psi ? psi_monomial(BigRat(dm.coeff), 1) : RatFun(BigRat(dm.coeff));
        auto it = rel.tops.find(lab);
        if (it == rel.tops.end())
            rel.tops.emplace(std::move(lab), c);
        else
            it->second += c;
    }
    if (u[i] > 0) {
        std::vector<unsigned> lo(u);
        lo[i] -= 1;
        add_term(rel.lower, MonomialLabel{std::move(lo), k - 1},
                 RatFun(make_rat(u[i], k - 1)));
    }
    return rel;
}

// eliminate the pole-k labels of E using the relation closure at that level
inline LabelElement reduce_level(const PFFamily& fam, LabelElement E, unsigned k) {
    std::vector<std::vector<unsigned>> need;
    for (const auto& [lab, c] : E)
        if (lab.pole == k) need.push_back(lab.v);
    if (need.empty()) return E;

    // closure of relations touching the needed labels
    std::set<std::pair<unsigned, std::vector<unsigned>>> seen_rel;
    std::set<std::vector<unsigned>> seen_lab(need.begin(), need.end());
    std::vector<Relation> rels;
    std::vector<std::vector<unsigned>> queue = need;
    while (!queue.empty()) {
        auto v = std::move(queue.back());
        queue.pop_back();
        for (auto& [i, u] : decompositions(fam, v)) {
            auto key = std::make_pair(i, u);
            if (!seen_rel.insert(key).second) continue;
            Relation rel = build_relation(fam, i, u, k);
            for (const auto& [lab, c] : rel.tops)
                if (seen_lab.insert(lab).second) queue.push_back(lab);
            rels.push_back(std::move(rel));
        }
    }
    if (rels.empty()) return E;

    // Sparse elimination over Q(psi), pivoting spiky labels first.  Forward
    // pass: eliminate each pivot column from the not-yet-used rows, choosing
    // the sparsest row available (Markowitz-style) to limit fill-in.
    std::vector<std::vector<unsigned>> columns(seen_lab.begin(), seen_lab.end());
    std::sort(columns.begin(), columns.end(), SpikyOrder{});
    std::map<std::vector<unsigned>, size_t> pivot_row;
    std::vector<std::vector<unsigned>> pivot_order;
    std::vector<bool> used(rels.size(), false);
    for (const auto& col : columns) {
        size_t chosen = rels.size();
        size_t best = SIZE_MAX;
        for (size_t t = 0; t < rels.size(); ++t) {
            if (used[t]) continue;
            auto it = rels[t].tops.find(col);
            if (it == rels[t].tops.end() || it->second.is_zero()) continue;
            size_t nnz = 0;
            for (const auto& [lab, c] : rels[t].tops)
                if (!c.is_zero()) ++nnz;
            if (nnz < best) { best = nnz; chosen = t; }
        }
        if (chosen == rels.size()) continue;
        used[chosen] = true;
        Relation& prow = rels[chosen];
        RatFun inv = RatFun(1) / prow.tops.at(col);
        for (auto& [lab, c] : prow.tops) c *= inv;
        for (auto& [lab, c] : prow.lower) c *= inv;
        for (size_t t = 0; t < rels.size(); ++t) {
            if (used[t]) continue;
            auto it = rels[t].tops.find(col);
            if (it == rels[t].tops.end() || it->second.is_zero()) continue;
            RatFun f = it->second;
            for (const auto& [lab, c] : prow.tops) {
                if (c.is_zero()) continue;
                auto jt = rels[t].tops.find(lab);
                if (jt == rels[t].tops.end())
                    rels[t].tops.emplace(lab, -(f * c));
                else
                    jt->second -= f * c;
            }
            for (const auto& [lab, c] : prow.lower) add_term(rels[t].lower, lab, -(f * c));
            rels[t].tops[col] = RatFun(0);
        }
        pivot_row[col] = chosen;
        pivot_order.push_back(col);
    }
    // Back-substitution in reverse pivot order: afterwards every pivot row
    // references only free columns, so substitution into E is direct.
    for (size_t idx = pivot_order.size(); idx-- > 0;) {
        const auto& col = pivot_order[idx];
        Relation& prow = rels[pivot_row[col]];
        for (size_t jdx = idx + 1; jdx < pivot_order.size(); ++jdx) {
            const auto& later = pivot_order[jdx];
            auto it = prow.tops.find(later);
            if (it == prow.tops.end() || it->second.is_zero()) continue;
            RatFun f = it->second;
            const Relation& lrow = rels[pivot_row[later]];
            for (const auto& [lab, c] : lrow.tops) {
                if (c.is_zero() || lab == later) continue;
                auto jt = prow.tops.find(lab);
                if (jt == prow.tops.end())
                    prow.tops.emplace(lab, -(f * c));
                else
                    jt->second -= f * c;
            }
            for (const auto& [lab, c] : lrow.lower) add_term(prow.lower, lab, -(f * c));
            prow.tops[later] = RatFun(0);
        }
    }

    // substitute solved labels into E
    LabelElement out;
    for (const auto& [lab, c] : E) {
        auto pv = lab.pole == k ? pivot_row.find(lab.v) : pivot_row.end();
        if (lab.pole != k || pv == pivot_row.end()) {
            add_term(out, lab, c);
            continue;
        }
        const Relation& row = rels[pv->second];
        // X(lab) = lower - sum_{free cols} coeff * X(col, k)
        for (const auto& [lo, lc] : row.lower) add_term(out, lo, c * lc);
        for (const auto& [col, tc] : row.tops) {
            if (col == lab.v || tc.is_zero()) continue;
            add_term(out, MonomialLabel{col, k}, -(c * tc));
        }
    }
    return out;
}

}  // namespace pf_detail

// fully reduce an element, top pole level downwards
inline LabelElement griffiths_reduce_all(const PFFamily& fam, LabelElement E) {
    if (E.empty()) return E;
    unsigned topk = 0;
    for (const auto& [lab, c] : E) topk = std::max(topk, lab.pole);
    for (unsigned k = topk; k >= 2; --k) E = pf_detail::reduce_level(fam, E, k);
    return E;
}

// Apply one reduction move to a single term at pole k >= 2, solving the
// chosen relation for the term's label.  The result mixes pole orders k and
// k-1 exactly as in the reduction diagrams.
inline std::vector<MonomialTerm> griffiths_reduce(const PFFamily& fam, const MonomialTerm& term) {
    if (term.label.pole < 2) return {term};  // already minimal
    auto decs = pf_detail::decompositions(fam, term.label.v);
    if (decs.empty())
        throw std::domain_error("griffiths_reduce: no reduction move applies to this label");
    auto [i, u] = decs.front();
    pf_detail::Relation rel = pf_detail::build_relation(fam, i, u, term.label.pole);
    RatFun pivot = rel.tops.at(term.label.v);
    std::vector<MonomialTerm> out;
    for (const auto& [lo, lc] : rel.lower)
        out.push_back({lo, term.coeff * lc / pivot});
    for (const auto& [lab, c] : rel.tops) {
        if (lab == term.label.v || c.is_zero()) continue;
        out.push_back({MonomialLabel{lab, term.label.pole}, -(term.coeff * c / pivot)});
    }
    return out;
}

// Derive the Picard-Fuchs operator annihilating the periods of
// gauge(psi) * Omega_w / Q: differentiate, reduce, and stop at the first
// linear dependence over Q(psi).  Returned in d/dpsi form, monic in the top
// derivative.
inline DifferentialOperator derive_picard_fuchs(const PFFamily& fam, const RatFun& gauge,
                                                unsigned max_order = 12) {
    LabelElement start;
    pf_detail::add_term(start, MonomialLabel{std::vector<unsigned>(fam.nvars, 0), 1}, gauge);
    std::vector<LabelElement> reduced{griffiths_reduce_all(fam, start)};
    LabelElement chain = start;
    for (unsigned s = 1; s <= max_order; ++s) {
        chain = pf_derivative(fam, chain);
        reduced.push_back(griffiths_reduce_all(fam, chain));
        std::set<MonomialLabel> labels;
        for (const auto& r : reduced)
            for (const auto& [lab, c] : r) labels.insert(lab);
        std::vector<std::vector<RatFun>> vecs;
        for (const auto& r : reduced) {
            std::vector<RatFun> row;
            for (const auto& lab : labels) {
                auto it = r.find(lab);
                row.push_back(it == r.end() ? RatFun(0) : it->second);
            }
            vecs.push_back(std::move(row));
        }
        auto dep = solve_dependency(vecs);
        if (dep) return DifferentialOperator("psi", OpStyle::ddx, std::move(*dep));
    }
    throw std::logic_error(
        "derive_picard_fuchs: no dependence within the order bound; the dependence must exist, "
        "so the family lies outside the supported structured class");
}

// The 4x4 unit lower-triangular matrix expressing theta_w^j omega_1 in the
// invariant basis omega_1..omega_4 for the Dwork quintic, where
// omega_l = (-1)^(l-1) (l-1)! psi^l (x_1..x_5)^(l-1) Omega / Q^l and
// theta_w omega_l = -(l/5) omega_l + omega_(l+1).
inline std::vector<std::vector<BigRat>> invariant_basis_relations() {
    std::vector<std::vector<BigRat>> rows;
    std::vector<BigRat> cur(4, BigRat(0));
    cur[0] = 1;
    rows.push_back(cur);
    for (unsigned j = 1; j < 4; ++j) {
        std::vector<BigRat> nxt(4, BigRat(0));
        for (unsigned l = 0; l < 4; ++l) {
            if (cur[l] == 0) continue;
            nxt[l] += cur[l] * make_rat(-(static_cast<long>(l) + 1), 5);
            if (l + 1 < 4) nxt[l + 1] += cur[l];
        }
        rows.push_back(nxt);
        cur = std::move(nxt);
    }
    return rows;
}

}  // namespace dwork
