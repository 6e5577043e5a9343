#pragma once

// Truncated Laurent series over F_{p^n} with explicit precision windows.
//
// A series stores coefficients for [lo, lo + c.size()) and a trust bound:
// every exponent below `trust` is known, everything at `trust` and above is
// unknown. Exponents between the stored coefficients and `trust` are known
// zero, so exact (finitely supported) series carry trust = kLaurentExact.
// Arithmetic propagates the smallest justified window and never fabricates
// terms beyond it. A "truncated zero" has no stored coefficients and means
// O(s^trust).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "aswkit/field.hpp"

namespace aswkit {

inline constexpr int64_t kLaurentExact = INT64_MAX / 4;

struct LaurentSeries {
    int64_t lo = kLaurentExact;     // exponent of c[0]; for zero, lo == trust
    std::vector<FieldElem> c;       // coefficient of s^(lo+i) at index i
    int64_t trust = kLaurentExact;  // first unknown exponent

    int64_t hi() const { return trust; }
    int64_t support_end() const { return lo + static_cast<int64_t>(c.size()); }
};

inline void ls_normalize(const Field& k, LaurentSeries& x) {
    size_t drop = 0;
    while (drop < x.c.size() && k.is_zero(x.c[drop])) ++drop;
    if (drop > 0) {
        x.c.erase(x.c.begin(), x.c.begin() + static_cast<int64_t>(drop));
        x.lo += static_cast<int64_t>(drop);
    }
    while (!x.c.empty() && k.is_zero(x.c.back())) x.c.pop_back();
    if (x.c.empty()) x.lo = x.trust;
}

inline bool ls_is_zero(const LaurentSeries& x) { return x.c.empty(); }

/// Valuation; empty for a truncated zero (v >= trust is all we know).
inline std::optional<int64_t> ls_val(const LaurentSeries& x) {
    if (x.c.empty()) return std::nullopt;
    return x.lo;
}

/// O(s^trust): the zero series trusted strictly below trust.
inline LaurentSeries ls_zero_to(int64_t trust) { return {trust, {}, trust}; }

inline LaurentSeries ls_exact_zero() { return {kLaurentExact, {}, kLaurentExact}; }

/// coeff * s^e, exact.
inline LaurentSeries ls_monomial(const Field& k, const FieldElem& coeff, int64_t e) {
    if (k.is_zero(coeff)) return ls_exact_zero();
    return {e, {coeff}, kLaurentExact};
}

inline FieldElem ls_coeff(const Field& k, const LaurentSeries& x, int64_t e) {
    if (e < x.lo || e >= x.support_end()) return k.zero();
    return x.c[static_cast<size_t>(e - x.lo)];
}

inline LaurentSeries ls_add(const Field& k, const LaurentSeries& a, const LaurentSeries& b) {
    int64_t trust = std::min(a.trust, b.trust);
    LaurentSeries r;
    r.trust = trust;
    if (a.c.empty() && b.c.empty()) {
        r.lo = trust;
        return r;
    }
    int64_t lo = std::min(a.c.empty() ? b.lo : a.lo, b.c.empty() ? a.lo : b.lo);
    int64_t end = std::max(a.c.empty() ? INT64_MIN : a.support_end(),
                           b.c.empty() ? INT64_MIN : b.support_end());
    int64_t upto = std::min(trust, end);
    if (lo >= upto) {
        r.lo = trust;
        return r;
    }
    r.lo = lo;
    r.c.assign(static_cast<size_t>(upto - lo), k.zero());
    for (int64_t e = lo; e < upto; ++e)
        r.c[static_cast<size_t>(e - lo)] = k.add(ls_coeff(k, a, e), ls_coeff(k, b, e));
    ls_normalize(k, r);
    return r;
}

inline LaurentSeries ls_neg(const Field& k, const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& x : r.c) x = k.neg(x);
    return r;
}

inline LaurentSeries ls_sub(const Field& k, const LaurentSeries& a, const LaurentSeries& b) {
    return ls_add(k, a, ls_neg(k, b));
}

inline LaurentSeries ls_scalar(const Field& k, const FieldElem& s, const LaurentSeries& a) {
    if (k.is_zero(s)) return ls_zero_to(a.trust);
    LaurentSeries r = a;
    for (auto& x : r.c) x = k.mul(s, x);
    ls_normalize(k, r);
    return r;
}

inline LaurentSeries ls_mul(const Field& k, const LaurentSeries& a, const LaurentSeries& b) {
    // error terms: val(a) + trust(b) and val(b) + trust(a); lo bounds the val
    int64_t trust = kLaurentExact;
    auto clamp_add = [](int64_t x, int64_t y) {
        return (x >= kLaurentExact || y >= kLaurentExact) ? kLaurentExact : x + y;
    };
    int64_t val_a = a.c.empty() ? a.trust : a.lo;  // lower bound on val(a)
    int64_t val_b = b.c.empty() ? b.trust : b.lo;
    if (b.trust < kLaurentExact) trust = std::min(trust, clamp_add(val_a, b.trust));
    if (a.trust < kLaurentExact) trust = std::min(trust, clamp_add(val_b, a.trust));
    LaurentSeries r;
    r.trust = trust;
    if (a.c.empty() || b.c.empty()) {
        r.lo = trust;
        return r;
    }
    int64_t lo = a.lo + b.lo;
    int64_t upto = std::min(trust, a.support_end() + b.support_end() - 1);
    if (lo >= upto) {
        r.lo = trust;
        return r;
    }
    r.lo = lo;
    r.c.assign(static_cast<size_t>(upto - lo), k.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (k.is_zero(a.c[i])) continue;
        int64_t ea = a.lo + static_cast<int64_t>(i);
        for (size_t j = 0; j < b.c.size(); ++j) {
            int64_t e = ea + b.lo + static_cast<int64_t>(j);
            if (e >= upto) break;
            r.c[static_cast<size_t>(e - lo)] =
                k.add(r.c[static_cast<size_t>(e - lo)], k.mul(a.c[i], b.c[j]));
        }
    }
    ls_normalize(k, r);
    return r;
}

/// Inverse of a series with nonzero leading coefficient. For a windowed input
/// the result carries the same relative window; an exact input is expanded to
/// terms (its true inverse is generally an infinite series), which is a
/// truncation with an honest trust bound.
inline LaurentSeries ls_inv(const Field& k, LaurentSeries a, int64_t terms = 0) {
    ls_normalize(k, a);
    if (a.c.empty()) throw std::domain_error("ls_inv: cannot invert a truncated zero");
    if (a.trust >= kLaurentExact && a.c.size() == 1)
        return ls_monomial(k, k.inv(a.c[0]), -a.lo);  // exact monomials invert exactly
    int64_t len;
    if (terms > 0) {
        len = terms;
    } else if (a.trust < kLaurentExact) {
        len = a.trust - a.lo;
    } else {
        len = std::max<int64_t>(2 * static_cast<int64_t>(a.c.size()) + 16, 48);
    }
    FieldElem l0 = k.inv(a.c[0]);
    LaurentSeries r;
    r.lo = -a.lo;
    r.trust = -a.lo + len;
    if (a.trust < kLaurentExact) r.trust = std::min(r.trust, a.trust - 2 * a.lo);
    r.c.assign(static_cast<size_t>(len), k.zero());
    r.c[0] = l0;
    for (int64_t j = 1; j < len; ++j) {
        FieldElem acc = k.zero();
        for (int64_t i = 1; i <= j && i < static_cast<int64_t>(a.c.size()); ++i)
            acc = k.add(acc, k.mul(a.c[static_cast<size_t>(i)],
                                   r.c[static_cast<size_t>(j - i)]));
        r.c[static_cast<size_t>(j)] = k.neg(k.mul(l0, acc));
    }
    ls_normalize(k, r);
    return r;
}

inline LaurentSeries ls_pow(const Field& k, const LaurentSeries& a, int64_t e) {
    if (e < 0) return ls_pow(k, ls_inv(k, a), -e);
    LaurentSeries r = ls_monomial(k, k.one(), 0);
    LaurentSeries base = a;
    uint64_t m = static_cast<uint64_t>(e);
    while (m > 0) {
        if (m & 1) r = ls_mul(k, r, base);
        m >>= 1;
        if (m) base = ls_mul(k, base, base);
    }
    return r;
}

/// Weaken the trust window to end at new_trust.
inline LaurentSeries ls_truncate(const Field& k, const LaurentSeries& a, int64_t new_trust) {
    if (new_trust >= a.trust) return a;
    LaurentSeries r = a;
    r.trust = new_trust;
    if (r.lo >= new_trust) return ls_zero_to(new_trust);
    if (r.support_end() > new_trust) r.c.resize(static_cast<size_t>(new_trust - r.lo));
    ls_normalize(k, r);
    return r;
}

/// Substitute s -> g into x, for g with val(g) = 1 (a uniformizer image).
inline LaurentSeries ls_subst(const Field& k, const LaurentSeries& x, const LaurentSeries& g) {
    if (!ls_val(g).has_value() || *ls_val(g) != 1)
        throw std::domain_error("ls_subst: substitution series must have valuation 1");
    LaurentSeries acc = ls_exact_zero();
    if (!x.c.empty()) {
        LaurentSeries gp = ls_pow(k, g, x.lo);
        for (size_t i = 0; i < x.c.size(); ++i) {
            acc = ls_add(k, acc, ls_scalar(k, x.c[i], gp));
            if (i + 1 < x.c.size()) gp = ls_mul(k, gp, g);
        }
    }
    // terms of x beyond its window contribute O(s^trust)
    if (x.trust < kLaurentExact) acc = ls_add(k, acc, ls_zero_to(x.trust));
    return acc;
}

// ---------------------------------------------------------------------------
// Newton/Hensel root lifting
// ---------------------------------------------------------------------------

/// Polynomial over Laurent series, ascending in the unknown.
using LaurentPolynomial = std::vector<LaurentSeries>;

inline LaurentSeries lp_eval(const Field& k, const LaurentPolynomial& F, const LaurentSeries& h) {
    LaurentSeries acc = ls_exact_zero();
    for (size_t i = F.size(); i-- > 0;) acc = ls_add(k, ls_mul(k, acc, h), F[i]);
    return acc;
}

inline LaurentPolynomial lp_derivative(const Field& k, const LaurentPolynomial& F) {
    LaurentPolynomial D;
    for (size_t i = 1; i < F.size(); ++i)
        D.push_back(ls_scalar(k, k.from_int(static_cast<int64_t>(i)), F[i]));
    return D;
}

/// Newton iteration h <- h - F(h)/F'(h) from init, until F(h) vanishes to
/// order >= precision. Requires the usual Hensel gap
/// v(F(init)) > 2 v(F'(init)) and a nonzero derivative at init.
inline LaurentSeries series_hensel_root(const Field& k, const LaurentPolynomial& F,
                                        const LaurentSeries& init, int64_t precision) {
    LaurentPolynomial D = lp_derivative(k, F);
    LaurentSeries h = init;
    LaurentSeries fh = lp_eval(k, F, h);
    LaurentSeries dh = lp_eval(k, D, h);
    if (!ls_val(dh).has_value())
        throw std::domain_error(
            "series_hensel_root: derivative vanishes at init (invalid Newton setup; in "
            "characteristic p this is the p-th power obstruction)");
    int64_t vF = ls_val(fh).has_value() ? *ls_val(fh) : fh.trust;
    if (vF <= 2 * (*ls_val(dh)))
        throw std::domain_error("series_hensel_root: v(F(init)) <= 2 v(F'(init)), no convergence");
    int64_t prev_vF = INT64_MIN;
    for (int iter = 0; iter < 200; ++iter) {
        int64_t cur_vF = ls_val(fh).has_value() ? *ls_val(fh) : fh.trust;
        if (cur_vF >= precision) return h;
        if (cur_vF <= prev_vF)
            throw std::domain_error(
                "series_hensel_root: precision exhausted at residual order " +
                std::to_string(cur_vF) + " (target " + std::to_string(precision) + ")");
        prev_vF = cur_vF;
        LaurentSeries step = ls_mul(k, fh, ls_inv(k, dh));
        h = ls_sub(k, h, step);
        fh = lp_eval(k, F, h);
        dh = lp_eval(k, D, h);
        if (!ls_val(dh).has_value())
            throw std::domain_error("series_hensel_root: derivative degenerated mid-iteration");
    }
    throw std::domain_error("series_hensel_root: no convergence within iteration bound");
}

}  // namespace aswkit
