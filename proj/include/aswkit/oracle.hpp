#pragma once

// Independent degree-p verification engine.
//
// For a standard-form f with m = deg f >= 1 prime to p, the Artin-Schreier
// extension L = K(x), x^p - x = f(t^{-1}), is totally ramified of degree p.
// The oracle builds L explicitly as k((s)):
//
//   * declare z := c s^{-m} with c^p = lead(f)  (p-th root; no extension),
//   * recover w = t^{-1} as a Laurent series from f(w) = z^p - z by Newton
//     lifting (the derivative has unit leading coefficient since p does not
//     divide m),
//   * for each sigma: z -> z + a solve sigma(s) = s g_a from
//     g_a^m (1 + a s^m / c) = 1, divisions only by m,
//
// and then MEASURES the lower jump j = v_L(sigma s - s) - 1 and the different
// degree sum_(sigma != 1) v_L(sigma s - s) from the Galois action, without
// using any jump formula. Residuals (defining equation, sigma-invariance of
// t) certify the working precision.

#include <cstdint>

#include "aswkit/asw.hpp"
#include "aswkit/laurent.hpp"
#include "aswkit/poly.hpp"

namespace aswkit {

struct OracleResult {
    int64_t jump = 0;                       // measured lower jump (= upper jump for e = 1)
    int64_t different = 0;                  // sum over sigma != 1 of v(sigma s - s)
    int64_t equation_residual_valuation = 0;
    int64_t t_invariance_valuation = 0;
    int64_t precision = 0;                  // requested working precision
    bool consistent = false;                // both residuals >= precision
    bool rescale_invariant = false;         // measurements match under s -> s(1+s)
};

inline int64_t oracle_default_precision(int64_t p, int64_t m) {
    return 4 * (m + 1) * (p - 1) + 16;
}

inline OracleResult oracle_e1(const Field& k, const Poly& f, int64_t precision = 0) {
    const int64_t p = k.p();
    auto dm = poly_deg(f);
    if (!dm || *dm < 1)
        throw std::invalid_argument("oracle_e1: f must be nonconstant");
    const int64_t m = *dm;
    if (m % p == 0)
        throw std::invalid_argument("oracle_e1: deg f must be prime to p "
                                    "(standard-form the input first)");
    WittVector wv;
    wv.coords.push_back(f);
    if (!witt_is_standard_form(k, wv))
        throw std::invalid_argument("oracle_e1: f must be in standard form");
    if (in_image_wp(AswClass{k, wv, classify_flags(k, wv)}) != InImage::no)
        throw std::domain_error("oracle_e1: degenerate input, f lies in wp(K); the cover is "
                                "not totally ramified of degree p");
    if (precision <= 0) precision = oracle_default_precision(p, m);

    const int64_t W = p * m + precision + 8;  // working window

    // z = c s^{-m} with c^p = lead f, so the w-series needs no root extraction
    FieldElem c = k.pth_root(poly_lead(k, f));

    // H(y) = s^{pm} (f(y s^{-p}) - (z^p - z)); solve H = 0 with y = 1 + ...
    LaurentPolynomial H(static_cast<size_t>(m) + 1, ls_exact_zero());
    for (int64_t j = 0; j <= m; ++j) {
        FieldElem aj = poly_coeff(k, f, j);
        if (!k.is_zero(aj)) H[static_cast<size_t>(j)] = ls_monomial(k, aj, p * (m - j));
    }
    // subtract z^p - z  =  c^p s^{-pm} - c s^{-m}, shifted by s^{pm}
    H[0] = ls_add(k, H[0], ls_monomial(k, k.neg(k.pow(c, static_cast<uint64_t>(p))), 0));
    H[0] = ls_add(k, H[0], ls_monomial(k, c, (p - 1) * m));

    LaurentSeries init = ls_truncate(k, ls_monomial(k, k.one(), 0), W);
    LaurentSeries y = series_hensel_root(k, H, init, p * m + precision);
    LaurentSeries w = ls_mul(k, y, ls_pow(k, ls_monomial(k, k.one(), 1), -p));

    OracleResult res;
    res.precision = precision;
    {
        LaurentSeries resid = lp_eval(k, H, y);
        int64_t vH = ls_val(resid).has_value() ? *ls_val(resid) : resid.hi();
        res.equation_residual_valuation = vH - p * m;
    }

    // sigma_a(s) = s g_a with g_a^m (1 + (a/c) s^m) = 1
    LaurentSeries s_series = ls_monomial(k, k.one(), 1);
    LaurentSeries s_tilde = ls_add(k, s_series, ls_monomial(k, k.one(), 2));  // s(1+s)
    int64_t different = 0, different_tilde = 0;
    int64_t jump = -1, jump_tilde = -1;
    int64_t t_resid = kLaurentExact;
    for (int64_t a = 1; a < p; ++a) {
        LaurentSeries U = ls_add(k, ls_monomial(k, k.one(), 0),
                                 ls_monomial(k, k.div(k.from_int(a), c), m));
        LaurentPolynomial G(static_cast<size_t>(m) + 1, ls_exact_zero());
        G[0] = ls_monomial(k, k.neg(k.one()), 0);
        G[static_cast<size_t>(m)] = U;
        LaurentSeries g = series_hensel_root(k, G, init, precision);
        LaurentSeries sig_s = ls_mul(k, s_series, g);

        LaurentSeries d = ls_sub(k, sig_s, s_series);
        auto vd = ls_val(d);
        if (!vd.has_value())
            throw std::domain_error("oracle_e1: precision exhausted measuring v(sigma s - s); "
                                    "maximal trusted valuation " + std::to_string(d.hi()));
        different += *vd;
        if (a == 1) jump = *vd - 1;

        // unit-rescale measurement with s~ = s(1+s): sigma(s~) = sig_s (1 + sig_s)
        LaurentSeries sig_tilde =
            ls_mul(k, sig_s, ls_add(k, ls_monomial(k, k.one(), 0), sig_s));
        LaurentSeries dt = ls_sub(k, sig_tilde, s_tilde);
        auto vdt = ls_val(dt);
        if (!vdt.has_value())
            throw std::domain_error("oracle_e1: precision exhausted in the rescale measurement");
        different_tilde += *vdt;
        if (a == 1) jump_tilde = *vdt - 1;

        // sigma-invariance of t = 1/w: compare w after substituting s -> sig_s
        LaurentSeries w_sig = ls_subst(k, w, sig_s);
        LaurentSeries t_sig = ls_inv(k, w_sig);
        LaurentSeries t_ser = ls_inv(k, w);
        LaurentSeries tdiff = ls_sub(k, t_sig, t_ser);
        int64_t bound = ls_val(tdiff).has_value() ? *ls_val(tdiff) : tdiff.hi();
        t_resid = std::min(t_resid, bound);
    }
    res.jump = jump;
    res.different = different;
    res.t_invariance_valuation = t_resid;
    if (different != (p - 1) * (jump + 1))
        throw std::logic_error("oracle_e1: measured different != (p-1)(j+1) (bug)");
    res.rescale_invariant = (jump_tilde == jump) && (different_tilde == different);
    res.consistent = res.equation_residual_valuation >= precision && t_resid >= precision;
    return res;
}

}  // namespace aswkit
