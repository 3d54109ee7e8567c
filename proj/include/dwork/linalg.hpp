#pragma once

// Exact linear algebra over the rational-function field: minimal linear
// dependencies via fraction-free (Bareiss) elimination, plus a naive
// field-arithmetic variant used as a cross-check.

#include "dwork/ratfun.hpp"

#include <optional>
#include <vector>

namespace dwork {

namespace detail {

// Bareiss echelon on a matrix over Q[x] with identity augmentation; returns
// the augmentation row of the first row that becomes zero (a dependence),
// or nullopt if all rows are independent.  Exact divisions are guaranteed
// by the Bareiss recurrence.
inline std::optional<std::vector<Poly>> bareiss_dependence(std::vector<std::vector<Poly>> m,
                                                           size_t cols) {
    size_t rows = m.size();
    for (size_t i = 0; i < rows; ++i) {
        m[i].resize(cols + rows);
        m[i][cols + i] = Poly(BigRat(1));
    }
    Poly prev(BigRat(1));
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = 0; j < cols + rows; ++j) {
                if (j == c) continue;
                Poly t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                auto [q, rem] = t.divmod(prev);
                if (!rem.is_zero()) throw std::logic_error("bareiss: inexact division");
                m[i][j] = std::move(q);
            }
            m[i][c] = Poly();
        }
        prev = m[r][c];
        ++r;
    }
    for (size_t i = r; i < rows; ++i) {
        bool zero = true;
        for (size_t j = 0; j < cols; ++j)
            if (!m[i][j].is_zero()) { zero = false; break; }
        if (zero) return std::vector<Poly>(m[i].begin() + cols, m[i].end());
    }
    return std::nullopt;
}

}  // namespace detail

// Smallest s with v_s in span(v_0..v_{s-1}); returns c_0..c_s, c_s = 1, with
// sum c_i v_i = 0.  Rows are cleared to polynomial form first, so the
// elimination itself is fraction-free.
inline std::optional<std::vector<RatFun>> solve_dependency(
    const std::vector<std::vector<RatFun>>& vecs) {
    if (vecs.empty()) return std::nullopt;
    size_t cols = vecs[0].size();
    for (const auto& v : vecs)
        if (v.size() != cols) throw std::invalid_argument("solve_dependency: ragged vectors");

    // clear each row by its common denominator; remember the scale
    std::vector<std::vector<Poly>> cleared(vecs.size());
    std::vector<Poly> scale(vecs.size());
    for (size_t i = 0; i < vecs.size(); ++i) {
        Poly d(BigRat(1));
        for (const auto& e : vecs[i]) {
            Poly g = poly_gcd(d, e.den());
            d = d * e.den().divmod(g).first;
        }
        scale[i] = d;
        cleared[i].reserve(cols);
        for (const auto& e : vecs[i]) {
            Poly t = e.num() * d.divmod(e.den()).first;
            cleared[i].push_back(std::move(t));
        }
    }

    for (size_t s = 1; s < vecs.size(); ++s) {
        std::vector<std::vector<Poly>> sub(cleared.begin(), cleared.begin() + s + 1);
        auto dep = detail::bareiss_dependence(std::move(sub), cols);
        if (!dep) continue;
        // coefficients for the cleared rows; undo the per-row scaling
        std::vector<RatFun> out(s + 1);
        for (size_t i = 0; i <= s; ++i) out[i] = RatFun((*dep)[i]) * RatFun(scale[i]);
        if (out[s].is_zero())
            throw std::logic_error("solve_dependency: dependence avoids the last vector");
        RatFun inv = RatFun(1) / out[s];
        for (auto& c : out) c = c * inv;
        return out;
    }
    return std::nullopt;
}

// Naive Gaussian elimination over the rational-function field; used in tests
// to cross-check the fraction-free path.
inline std::optional<std::vector<RatFun>> solve_dependency_naive(
    const std::vector<std::vector<RatFun>>& vecs) {
    if (vecs.empty()) return std::nullopt;
    size_t cols = vecs[0].size();
    struct Row {
        std::vector<RatFun> v;
        std::vector<RatFun> combo;
        size_t pivot;
    };
    std::vector<Row> basis;
    for (size_t s = 0; s < vecs.size(); ++s) {
        std::vector<RatFun> r = vecs[s];
        std::vector<RatFun> combo(vecs.size());
        combo[s] = RatFun(1);
        for (const auto& b : basis) {
            if (r[b.pivot].is_zero()) continue;
            RatFun f = r[b.pivot];
            for (size_t j = 0; j < cols; ++j) r[j] -= f * b.v[j];
            for (size_t j = 0; j < combo.size(); ++j) combo[j] -= f * b.combo[j];
        }
        size_t p = cols;
        for (size_t j = 0; j < cols; ++j)
            if (!r[j].is_zero()) { p = j; break; }
        if (p == cols) {
            if (s == 0) return std::nullopt;  // zero vector alone: treat as independent input error
            std::vector<RatFun> out(combo.begin(), combo.begin() + s + 1);
            RatFun inv = RatFun(1) / out[s];
            for (auto& c : out) c = c * inv;
            return out;
        }
        RatFun inv = RatFun(1) / r[p];
        for (auto& x : r) x = x * inv;
        for (auto& x : combo) x = x * inv;
        basis.push_back(Row{std::move(r), std::move(combo), p});
    }
    return std::nullopt;
}

}  // namespace dwork
