#pragma once

// Artin-Schreier-Witt presentation calculus for cyclic p-power extensions of
// K = k((t)), with generators presented as Witt vectors of polynomials in
// u = t^{-1}.
//
// standard form: no coordinate contains a nonzero term whose u-exponent is a
// positive multiple of p. The reduction subtracts wp of single-slot vectors
// V-placed at slot i with entry b*u^m to kill a term b^p*u^(pm); constants of
// absolute trace zero are absorbed the same way, the others are recorded in
// the certificate (over algebraically closed k they would vanish -- over
// F_{p^n} the gap is made explicit via needs_extension).
//
// Coordinates must be genuine polynomials in u. Inputs with positive-t-
// valuation tails are not accepted here; such tails are wp-absorbable but the
// reduction is not spelled out anywhere we trust, so they are rejected at the
// type level rather than guessed.

#include <cstdint>
#include <optional>

#include "aswkit/field.hpp"
#include "aswkit/poly.hpp"
#include "aswkit/ramification.hpp"
#include "aswkit/witt.hpp"

namespace aswkit {

struct AswFlags {
    bool standard_form = false;
    bool normalized = false;
    bool separable = false;
};

struct AswClass {
    Field field;
    WittVector gen;
    AswFlags flags;

    int length() const { return gen.length(); }
};

inline bool witt_is_standard_form(const Field& k, const WittVector& w) {
    for (auto& coord : w.coords) {
        for (size_t j = static_cast<size_t>(k.p()); j < coord.c.size();
             j += static_cast<size_t>(k.p()))
            if (!k.is_zero(coord.c[j])) return false;
    }
    return true;
}

/// deg q_1 prime to p, and p | deg q_(rho+1) forces deg q_(rho+1) = p deg q_rho.
inline bool witt_is_normalized(const Field& k, const WittVector& w) {
    auto d1 = poly_deg(w.coords[0]);
    if (!d1 || *d1 < 1 || *d1 % k.p() == 0) return false;
    for (size_t i = 1; i < w.coords.size(); ++i) {
        auto dn = poly_deg(w.coords[i]);
        auto dp = poly_deg(w.coords[i - 1]);
        if (!dn) return false;
        if (*dn % k.p() == 0 && *dn != k.p() * *dp) return false;
        if (*dn < k.p() * *dp) return false;
    }
    return true;
}

inline bool witt_is_separable(const Field& k, const WittVector& w) {
    for (auto& coord : w.coords)
        if (!poly_is_separable(k, coord)) return false;
    return true;
}

inline AswFlags classify_flags(const Field& k, const WittVector& w) {
    AswFlags f;
    f.standard_form = witt_is_standard_form(k, w);
    f.normalized = witt_is_normalized(k, w);
    f.separable = f.normalized && witt_is_separable(k, w);
    return f;
}

struct ReductionCertificate {
    WittVector c;  // accumulated single-slot reducers
    std::vector<FieldElem> residual_constants;  // per coordinate; zero when absorbed
    bool needs_extension = false;

    bool has_residuals(const Field& k) const {
        for (auto& g : residual_constants)
            if (!k.is_zero(g)) return true;
        return false;
    }
};

/// The Witt vector sum of the recorded residual constants placed back in
/// their slots; the exact reduction identity is
///   a == ((a_std [+] residual_vector) [+] wp(c)).
inline WittVector residual_vector(const Field& k, const ReductionCertificate& cert, int e) {
    WittVector acc = witt_zero(e);
    for (int i = 0; i < e; ++i) {
        const FieldElem& g = cert.residual_constants[static_cast<size_t>(i)];
        if (k.is_zero(g)) continue;
        acc = witt_add(k, acc, witt_single_slot(e, i + 1, poly_const(k, g)));
    }
    return acc;
}

/// Inductive reduction to standard form, coordinate 1 through e. Idempotent;
/// the returned certificate satisfies the identity above (checked before
/// returning).
inline std::pair<AswClass, ReductionCertificate> standard_form(const AswClass& a) {
    const Field& k = a.field;
    const int e = a.length();
    const int64_t p = k.p();
    WittVector work = a.gen;
    ReductionCertificate cert;
    cert.c = witt_zero(e);
    cert.residual_constants.assign(static_cast<size_t>(e), k.zero());
    WittVector removed_consts = witt_zero(e);  // running [+] of stripped constants

    for (int slot = 1; slot <= e; ++slot) {
        for (;;) {
            const Poly& coord = work.coords[static_cast<size_t>(slot - 1)];
            int64_t bad = -1;
            for (int64_t j = static_cast<int64_t>(coord.c.size()) - 1; j >= p; --j) {
                if (j % p == 0 && !k.is_zero(coord.c[static_cast<size_t>(j)])) {
                    bad = j;
                    break;
                }
            }
            if (bad < 0) break;
            FieldElem b = k.pth_root(coord.c[static_cast<size_t>(bad)]);
            WittVector V = witt_single_slot(e, slot, poly_monomial(k, b, bad / p));
            work = witt_sub(k, work, wp(k, V));
            cert.c = witt_add(k, cert.c, V);
        }
        // constants: absorb when trace-zero, record otherwise
        FieldElem g = poly_coeff(k, work.coords[static_cast<size_t>(slot - 1)], 0);
        if (!k.is_zero(g)) {
            auto sol = k.artin_schreier_preimage(g);
            if (sol.has_value()) {
                WittVector V = witt_single_slot(e, slot, poly_const(k, *sol));
                work = witt_sub(k, work, wp(k, V));
                cert.c = witt_add(k, cert.c, V);
            } else {
                cert.residual_constants[static_cast<size_t>(slot - 1)] = g;
                cert.needs_extension = true;
                WittVector V = witt_single_slot(e, slot, poly_const(k, g));
                work = witt_sub(k, work, V);
            }
        }
    }

    AswClass out{k, work, classify_flags(k, work)};
    if (!out.flags.standard_form)
        throw std::logic_error("standard_form: reduction did not reach standard form (bug)");
    // certificate check: a == (a_std [+] residuals) [+] wp(c)
    WittVector back = witt_add(k, witt_add(k, work, residual_vector(k, cert, e)), wp(k, cert.c));
    if (!witt_eq(back, a.gen))
        throw std::logic_error("standard_form: certificate does not reproduce the input (bug)");
    return {out, cert};
}

enum class InImage { yes, no, yes_after_extension };

/// Exactness of the ASW sequence, decided through the standard form: the
/// class is trivial iff nothing but absorbable constants remains.
inline InImage in_image_wp(const AswClass& a) {
    auto [std_a, cert] = standard_form(a);
    if (!witt_is_zero(std_a.gen)) return InImage::no;
    return cert.has_residuals(a.field) ? InImage::yes_after_extension : InImage::yes;
}

struct ExtensionDegree {
    int m = 0;           // [K_a : K] = p^m
    WittVector b;        // length-m tail presenting the same extension
};

/// [K_a : K] = p^m with m minimal such that the length-(e-m) prefix lies in
/// im(wp). The tail is read off after translating by wp of the prefix
/// certificate.
inline ExtensionDegree extension_degree(const AswClass& a) {
    const Field& k = a.field;
    const int e = a.length();
    for (int m = 0; m <= e; ++m) {
        const int plen = e - m;
        if (plen == 0) {
            ExtensionDegree r;
            r.m = e;
            r.b = a.gen;
            return r;
        }
        WittVector prefix;
        prefix.coords.assign(a.gen.coords.begin(), a.gen.coords.begin() + plen);
        AswClass pc{k, prefix, {}};
        auto [std_p, cert_p] = standard_form(pc);
        if (!witt_is_zero(std_p.gen) || cert_p.has_residuals(k)) continue;
        ExtensionDegree r;
        r.m = m;
        if (m == 0) {
            r.b = WittVector{};
            return r;
        }
        WittVector cext = witt_zero(e);
        for (int i = 0; i < plen; ++i) cext.coords[static_cast<size_t>(i)] =
            cert_p.c.coords[static_cast<size_t>(i)];
        WittVector translated = witt_sub(k, a.gen, wp(k, cext));
        for (int i = 0; i < plen; ++i)
            if (!poly_is_zero(translated.coords[static_cast<size_t>(i)]))
                throw std::logic_error("extension_degree: prefix failed to vanish (bug)");
        r.b.coords.assign(translated.coords.begin() + plen, translated.coords.end());
        return r;
    }
    throw std::logic_error("extension_degree: unreachable");
}

/// Upper jumps of a standard-form (or normalized) generator with p_1 != 0:
/// iota_rho = max{ p iota_(rho-1), deg p_rho }, iota_0 = 0. The Artin
/// conductor comes out as max{ p^(e-rho) deg p_rho }, asserted on the way.
inline JumpSequence upper_jumps(const AswClass& a) {
    const Field& k = a.field;
    if (!a.flags.standard_form && !a.flags.normalized)
        throw std::invalid_argument("upper_jumps: generator must be in standard form "
                                    "(or normalized); reduce first");
    auto d1 = poly_deg(a.gen.coords[0]);
    if (!d1 || *d1 < 1)
        throw std::domain_error(
            "upper_jumps: degenerate presentation (first coordinate constant or zero); the "
            "extension is not totally ramified of full degree -- use extension_degree first");
    std::vector<int64_t> jumps;
    int64_t prev = 0;
    for (auto& coord : a.gen.coords) {
        auto d = poly_deg(coord);
        int64_t iota = k.p() * prev;
        if (d && *d > iota) iota = *d;
        jumps.push_back(iota);
        prev = iota;
    }
    // cross-check the closed form of the Artin conductor
    int64_t direct = 0, pw = 1;
    for (size_t rho = a.gen.coords.size(); rho-- > 0;) {
        auto d = poly_deg(a.gen.coords[rho]);
        if (d && *d * pw > direct) direct = *d * pw;
        pw *= k.p();
    }
    if (direct != jumps.back())
        throw std::logic_error("upper_jumps: conductor formulas disagree (bug)");
    return JumpSequence::upper(k.p(), std::move(jumps));
}

/// Thrown by normalize_generator when the coefficient field provably lacks
/// room; required_extension_multiplier is the smallest tested m with
/// F_{p^(n*m)} succeeding.
struct FieldTooSmallError : std::domain_error {
    int required_extension_multiplier;
    explicit FieldTooSmallError(int m)
        : std::domain_error("normalize_generator: retries exhausted; the field is too small -- "
                            "extend the coefficient field by a factor of " + std::to_string(m)),
          required_extension_multiplier(m) {}
};

struct NormalizeResult {
    AswClass gen;     // normalized + separable
    WittVector c;     // the sampled (h_1, ..., h_e)
    uint64_t seed;
    int attempts;
};

namespace aswdetail {

inline bool normalized_ok(const Field& k, const WittVector& q, const std::vector<int64_t>& iota) {
    for (size_t i = 0; i < q.coords.size(); ++i) {
        auto d = poly_deg(q.coords[i]);
        if (!d || *d != iota[i]) return false;
        if (!poly_is_separable(k, q.coords[i])) return false;
    }
    return true;
}

inline WittVector sample_c(const Field& k, int e, const std::vector<int64_t>& iota,
                           std::mt19937_64& rng) {
    WittVector c = witt_zero(e);
    c.coords[0] = poly_const(k, k.random_elem(rng));
    for (int rho = 2; rho <= e; ++rho) {
        int64_t d = iota[static_cast<size_t>(rho - 2)];  // iota_(rho-1)
        Poly h;
        h.c.assign(static_cast<size_t>(d) + 1, k.zero());
        for (auto& x : h.c) x = k.random_elem(rng);
        h.c.back() = k.random_nonzero(rng);
        c.coords[static_cast<size_t>(rho - 1)] = h;
    }
    return c;
}

}  // namespace aswdetail

/// Def/Remark-style normalization: q = a [+] wp(c) with deg h_rho =
/// iota_(rho-1), sampled from the seeded PRNG and post-verified
/// (deg q_rho = iota_rho exactly, every coordinate separable), with bounded
/// retries. Upper jumps are preserved; the seed is echoed for reproducibility.
inline NormalizeResult normalize_generator(const AswClass& a, uint64_t seed, int retries = 64) {
    const Field& k = a.field;
    if (!a.flags.standard_form)
        throw std::invalid_argument("normalize_generator: input must be in standard form");
    JumpSequence js = upper_jumps(a);
    auto d1 = poly_deg(a.gen.coords[0]);
    if (*d1 % k.p() == 0)
        throw std::invalid_argument("normalize_generator: deg p_1 must be prime to p");
    const int e = a.length();
    const auto& iota = js.jumps();

    auto finish = [&](const WittVector& q, const WittVector& c, int att) {
        AswClass out{k, q, classify_flags(k, q)};
        if (!out.flags.normalized || !out.flags.separable)
            throw std::logic_error("normalize_generator: verification drift (bug)");
        JumpSequence out_js = upper_jumps(out);
        if (!(out_js == js))
            throw std::logic_error("normalize_generator: upper jumps moved (bug)");
        return NormalizeResult{out, c, seed, att};
    };

    if (aswdetail::normalized_ok(k, a.gen, iota)) return finish(a.gen, witt_zero(e), 0);

    std::mt19937_64 rng(seed);
    for (int att = 1; att <= retries; ++att) {
        WittVector c = aswdetail::sample_c(k, e, iota, rng);
        WittVector q = witt_add(k, a.gen, wp(k, c));
        if (aswdetail::normalized_ok(k, q, iota)) return finish(q, c, att);
    }
    // the field is (very likely) too small: probe extensions for the report
    for (int mult = 2; mult <= 4; ++mult) {
        Embedding empb = extend_field(k, mult);
        const Field& K = empb.to;
        WittVector aK;
        for (auto& coord : a.gen.coords) aK.coords.push_back(empb.map(coord));
        std::mt19937_64 rng2(seed ^ 0xabcdefull);
        for (int att = 0; att < 16; ++att) {
            WittVector c = aswdetail::sample_c(K, e, iota, rng2);
            WittVector q = witt_add(K, aK, wp(K, c));
            if (aswdetail::normalized_ok(K, q, iota)) throw FieldTooSmallError(mult);
        }
    }
    throw FieldTooSmallError(4);
}

// ---------------------------------------------------------------------------
// Inertia bounds from Fact-3 style valuation data
// ---------------------------------------------------------------------------

/// Exact Laurent polynomial in t (finitely many terms, no truncation); the
/// valued coordinate entries inertia_bounds inspects.
struct TLaurent {
    int64_t lo = 0;
    std::vector<FieldElem> c;  // coefficient of t^(lo+i)
};

inline void tl_normalize(const Field& k, TLaurent& x) {
    while (!x.c.empty() && k.is_zero(x.c.front())) {
        x.c.erase(x.c.begin());
        ++x.lo;
    }
    while (!x.c.empty() && k.is_zero(x.c.back())) x.c.pop_back();
    if (x.c.empty()) x.lo = 0;
}

inline std::optional<int64_t> tl_val(const Field& k, TLaurent x) {
    tl_normalize(k, x);
    if (x.c.empty()) return std::nullopt;  // v(0) = +infinity
    return x.lo;
}

/// A polynomial in u = t^{-1} as a t-Laurent polynomial.
inline TLaurent tl_from_poly_u(const Field& k, const Poly& f) {
    TLaurent x;
    if (poly_is_zero(f)) return x;
    x.lo = -(static_cast<int64_t>(f.c.size()) - 1);
    x.c.assign(f.c.rbegin(), f.c.rend());
    tl_normalize(k, x);
    return x;
}

struct InertiaBounds {
    int upper_exp = 0;  // T_v contained in p^upper G   (Fact 3, part 1)
    int lower_exp = 0;  // p^lower G contained in T_v   (Fact 3, part 2; e if vacuous)
    bool exact = false; // bounds meet: T_v = p^upper G
};

/// Part 1: the longest prefix with v(a_1..m) >= 0 gives T_v <= p^m G.
/// Part 2: the first m with v(a_m) negative and prime to p gives
/// p^(m-1) G <= T_v (the strongest such bound).
inline InertiaBounds inertia_bounds(const Field& k, const std::vector<TLaurent>& coords) {
    const int e = static_cast<int>(coords.size());
    InertiaBounds b;
    int m = 0;
    while (m < e) {
        auto v = tl_val(k, coords[static_cast<size_t>(m)]);
        if (v.has_value() && *v < 0) break;
        ++m;
    }
    b.upper_exp = m;
    b.lower_exp = e;
    for (int i = 0; i < e; ++i) {
        auto v = tl_val(k, coords[static_cast<size_t>(i)]);
        if (v.has_value() && *v < 0 && ((-*v) % k.p() != 0)) {
            b.lower_exp = i;  // (i+1) - 1 in 1-based terms
            break;
        }
    }
    b.exact = (b.lower_exp == b.upper_exp);
    return b;
}

}  // namespace aswkit
