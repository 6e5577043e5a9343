#pragma once

// Truncated Witt vectors W_e over polynomial rings of characteristic p.
//
// The ring structure comes from the universal addition polynomials S_n and
// negation polynomials I_n, solved once over the integers from the ghost
// component identities
//
//     w_n(Z) = sum_{i<=n} p^i Z_i^(p^(n-i)),
//     w_n(S(X,Y)) = w_n(X) + w_n(Y),   w_n(I(X)) = -w_n(X),
//
// where every division by p^n is exact. The set is verified and cached per
// (p, e); evaluation reduces the coefficients mod p first, which thins the
// polynomials considerably.
//
// Symbolic construction is feasible while p^(e-1) stays small; the guard
// below rejects ranges whose polynomials would be astronomically large.
// e = 5 at p = 5 is allowed but takes a while (the polynomials have weight
// p^4 = 625 monomials in 10 variables) -- smaller e is instantaneous.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "aswkit/poly.hpp"

namespace aswkit {

inline constexpr int kWittDefaultMaxLength = 5;

namespace wittdetail {

using Exp = std::vector<uint32_t>;

struct ExpHash {
    size_t operator()(const Exp& e) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t v : e) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// sparse multivariate polynomial over Z; no zero coefficients stored
using MPoly = std::unordered_map<Exp, mpz_class, ExpHash>;

inline void mp_axpy(MPoly& a, const mpz_class& s, const MPoly& b) {
    if (s == 0) return;
    for (auto& [e, c] : b) {
        auto it = a.find(e);
        if (it == a.end()) {
            a.emplace(e, s * c);
        } else {
            it->second += s * c;
            if (it->second == 0) a.erase(it);
        }
    }
}

inline MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    r.reserve(a.size() + b.size());
    Exp e;
    for (auto& [ea, ca] : a) {
        for (auto& [eb, cb] : b) {
            e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto it = r.find(e);
            if (it == r.end()) {
                r.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return r;
}

inline MPoly mp_pow(const MPoly& a, uint64_t k, size_t nvars) {
    MPoly r;
    r.emplace(Exp(nvars, 0), 1);
    MPoly base = a;
    while (k > 0) {
        if (k & 1) r = mp_mul(r, base);
        k >>= 1;
        if (k) base = mp_mul(base, base);
    }
    return r;
}

inline MPoly mp_div_exact(const MPoly& a, const mpz_class& d) {
    MPoly r;
    r.reserve(a.size());
    for (auto& [e, c] : a) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("witt: inexact division in the ghost recursion (bug)");
        r.emplace(e, q);
    }
    return r;
}

inline bool mp_equal(const MPoly& a, const MPoly& b) { return a == b; }

inline mpz_class mp_eval_z(const MPoly& a, const std::vector<mpz_class>& vals) {
    mpz_class acc = 0;
    for (auto& [e, c] : a) {
        mpz_class t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), vals[i].get_mpz_t(), e[i]);
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

}  // namespace wittdetail

/// One universal polynomial reduced mod p, ready for characteristic-p
/// evaluation.
struct WittModPPoly {
    struct Term {
        int64_t coeff;  // in [1, p)
        wittdetail::Exp exp;
    };
    std::vector<Term> terms;
};

struct UniversalPolySet {
    int64_t p = 0;
    int e = 0;
    // variables: X_i at index i, Y_i at index e+i, for 0 <= i < e
    std::vector<wittdetail::MPoly> S;  // addition
    std::vector<wittdetail::MPoly> I;  // negation (only X variables occur)
    std::vector<WittModPPoly> S_modp;
    std::vector<WittModPPoly> I_modp;
};

namespace wittdetail {

inline MPoly ghost_poly(int64_t p, int e, int n, int var_offset) {
    MPoly g;
    mpz_class pi = 1;
    for (int i = 0; i <= n; ++i) {
        Exp ex(2 * static_cast<size_t>(e), 0);
        uint64_t pw = 1;
        for (int s = 0; s < n - i; ++s) pw *= static_cast<uint64_t>(p);
        ex[static_cast<size_t>(var_offset + i)] = static_cast<uint32_t>(pw);
        MPoly term;
        term.emplace(ex, pi);
        mp_axpy(g, 1, term);
        pi *= p;
    }
    return g;
}

inline WittModPPoly reduce_modp(const MPoly& a, int64_t p) {
    WittModPPoly r;
    mpz_class pz = p;
    for (auto& [e, c] : a) {
        mpz_class m = ((c % pz) + pz) % pz;
        if (m == 0) continue;
        r.terms.push_back({m.get_si(), e});
    }
    return r;
}

inline std::unique_ptr<UniversalPolySet> build_universal(int64_t p, int e) {
    auto set = std::make_unique<UniversalPolySet>();
    set->p = p;
    set->e = e;
    const size_t nvars = 2 * static_cast<size_t>(e);
    std::vector<MPoly> powS, powI;  // powS[i] = S_i^(p^(level-i)) at the current level
    mpz_class pz = p;
    for (int n = 0; n < e; ++n) {
        for (int i = 0; i < n; ++i) {
            powS[static_cast<size_t>(i)] =
                mp_pow(powS[static_cast<size_t>(i)], static_cast<uint64_t>(p), nvars);
            powI[static_cast<size_t>(i)] =
                mp_pow(powI[static_cast<size_t>(i)], static_cast<uint64_t>(p), nvars);
        }
        MPoly targetS = ghost_poly(p, e, n, 0);
        mp_axpy(targetS, 1, ghost_poly(p, e, n, e));
        MPoly targetI;
        mp_axpy(targetI, -1, ghost_poly(p, e, n, 0));

        mpz_class pn = 1;
        MPoly accS, accI;
        for (int i = 0; i < n; ++i) {
            mp_axpy(accS, pn, powS[static_cast<size_t>(i)]);
            mp_axpy(accI, pn, powI[static_cast<size_t>(i)]);
            pn *= pz;
        }
        MPoly numS = targetS;
        mp_axpy(numS, -1, accS);
        MPoly numI = targetI;
        mp_axpy(numI, -1, accI);
        MPoly Sn = mp_div_exact(numS, pn);
        MPoly In = mp_div_exact(numI, pn);

        // multiply-back check of the exact division
        MPoly backS = accS, backI = accI;
        mp_axpy(backS, pn, Sn);
        mp_axpy(backI, pn, In);
        if (!mp_equal(backS, targetS) || !mp_equal(backI, targetI))
            throw std::logic_error("witt: ghost identity failed to close (bug)");

        set->S.push_back(Sn);
        set->I.push_back(In);
        set->S_modp.push_back(reduce_modp(Sn, p));
        set->I_modp.push_back(reduce_modp(In, p));
        powS.push_back(std::move(Sn));
        powI.push_back(std::move(In));
    }

    // numeric ghost spot-checks over Z
    std::mt19937_64 rng(0x5eed ^ static_cast<uint64_t>(p * 1000 + e));
    std::uniform_int_distribution<int64_t> d(-9, 9);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<mpz_class> vals(nvars);
        for (auto& v : vals) v = d(rng);
        for (int n = 0; n < e; ++n) {
            std::vector<mpz_class> svals, ivals;
            for (int i = 0; i <= n; ++i) {
                svals.push_back(mp_eval_z(set->S[static_cast<size_t>(i)], vals));
                ivals.push_back(mp_eval_z(set->I[static_cast<size_t>(i)], vals));
            }
            auto ghost_of = [&](const std::vector<mpz_class>& co) {
                mpz_class g = 0, pi = 1;
                for (int i = 0; i <= n; ++i) {
                    mpz_class pw;
                    uint64_t ex = 1;
                    for (int s = 0; s < n - i; ++s) ex *= static_cast<uint64_t>(p);
                    mpz_pow_ui(pw.get_mpz_t(), co[static_cast<size_t>(i)].get_mpz_t(), ex);
                    g += pi * pw;
                    pi *= p;
                }
                return g;
            };
            std::vector<mpz_class> xs(vals.begin(), vals.begin() + e),
                ys(vals.begin() + e, vals.end());
            xs.resize(static_cast<size_t>(n) + 1);
            ys.resize(static_cast<size_t>(n) + 1);
            if (ghost_of(svals) != ghost_of(xs) + ghost_of(ys))
                throw std::logic_error("witt: ghost spot-check failed for S (bug)");
            if (ghost_of(ivals) != -ghost_of(xs))
                throw std::logic_error("witt: ghost spot-check failed for I (bug)");
        }
    }
    return set;
}

}  // namespace wittdetail

/// The cached universal polynomial set for (p, e). Thread-safe, write-once.
inline const UniversalPolySet& witt_universal_polys(int64_t p, int e,
                                                    int max_e = kWittDefaultMaxLength) {
    if (!detail::is_prime_small(p)) throw std::invalid_argument("witt: p must be prime");
    if (e < 1 || e > max_e)
        throw std::invalid_argument("witt: length e out of range (cap " + std::to_string(max_e) +
                                    "; raise max_e knowingly, cost grows doubly exponentially)");
    double weight = 1;
    for (int i = 0; i < e - 1; ++i) weight *= static_cast<double>(p);
    if (weight > 700)
        throw std::invalid_argument("witt: unsupported (p, e) range: p^(e-1) too large for the "
                                    "universal polynomials");
    static std::map<std::pair<int64_t, int>, std::unique_ptr<UniversalPolySet>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, wittdetail::build_universal(p, e)).first;
    return *it->second;
}

// ---------------------------------------------------------------------------
// Witt vectors with polynomial coordinates over F_{p^n}
// ---------------------------------------------------------------------------

/// coords[i] is the coordinate a_{i+1} of the paper's (a_1, ..., a_e).
struct WittVector {
    std::vector<Poly> coords;

    int length() const { return static_cast<int>(coords.size()); }
};

inline WittVector witt_zero(int e) {
    WittVector w;
    w.coords.assign(static_cast<size_t>(e), Poly{});
    return w;
}

inline bool witt_is_zero(const WittVector& x) {
    for (auto& c : x.coords)
        if (!poly_is_zero(c)) return false;
    return true;
}

inline bool witt_eq(const WittVector& x, const WittVector& y) {
    if (x.coords.size() != y.coords.size()) return false;
    for (size_t i = 0; i < x.coords.size(); ++i)
        if (!poly_eq(x.coords[i], y.coords[i])) return false;
    return true;
}

/// Zero except the (1-based) slot i carries f: the vector the reduction loop
/// V-places at slot i.
inline WittVector witt_single_slot(int e, int slot1, const Poly& f) {
    WittVector w = witt_zero(e);
    w.coords[static_cast<size_t>(slot1 - 1)] = f;
    return w;
}

namespace wittdetail {

struct PowerCache {
    const Field* k;
    std::vector<const Poly*> vars;
    std::vector<std::map<uint32_t, Poly>> memo;

    PowerCache(const Field& kk, std::vector<const Poly*> v)
        : k(&kk), vars(std::move(v)), memo(vars.size()) {}

    const Poly& get(size_t var, uint32_t e) {
        auto& m = memo[var];
        auto it = m.find(e);
        if (it != m.end()) return it->second;
        Poly p = poly_pow(*k, *vars[var], e);
        return m.emplace(e, std::move(p)).first->second;
    }
};

inline Poly eval_modp(const Field& k, const WittModPPoly& P, PowerCache& cache) {
    Poly acc;
    for (auto& t : P.terms) {
        Poly term = poly_from_ints(k, {t.coeff});
        for (size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0) continue;
            term = poly_mul(k, term, cache.get(v, t.exp[v]));
        }
        acc = poly_add(k, acc, term);
    }
    return acc;
}

inline void check_shapes(const Field& k, const WittVector& x, const WittVector& y) {
    if (x.coords.size() != y.coords.size())
        throw std::invalid_argument("witt: mismatched vector lengths");
    (void)k;
}

}  // namespace wittdetail

inline WittVector witt_add(const Field& k, const WittVector& x, const WittVector& y) {
    wittdetail::check_shapes(k, x, y);
    const int e = x.length();
    const auto& U = witt_universal_polys(k.p(), e);
    std::vector<const Poly*> vars;
    for (auto& c : x.coords) vars.push_back(&c);
    for (auto& c : y.coords) vars.push_back(&c);
    wittdetail::PowerCache cache(k, std::move(vars));
    WittVector r;
    r.coords.reserve(static_cast<size_t>(e));
    for (int n = 0; n < e; ++n)
        r.coords.push_back(wittdetail::eval_modp(k, U.S_modp[static_cast<size_t>(n)], cache));
    return r;
}

inline WittVector witt_neg(const Field& k, const WittVector& x) {
    const int e = x.length();
    const auto& U = witt_universal_polys(k.p(), e);
    std::vector<const Poly*> vars;
    for (auto& c : x.coords) vars.push_back(&c);
    Poly zero;
    for (int i = 0; i < e; ++i) vars.push_back(&zero);  // Y variables never occur in I
    wittdetail::PowerCache cache(k, std::move(vars));
    WittVector r;
    r.coords.reserve(static_cast<size_t>(e));
    for (int n = 0; n < e; ++n)
        r.coords.push_back(wittdetail::eval_modp(k, U.I_modp[static_cast<size_t>(n)], cache));
    return r;
}

inline WittVector witt_sub(const Field& k, const WittVector& x, const WittVector& y) {
    return witt_add(k, x, witt_neg(k, y));
}

/// Coordinate-wise p-th power; this is the Witt Frobenius in characteristic p.
inline WittVector witt_frobenius(const Field& k, const WittVector& x) {
    WittVector r;
    r.coords.reserve(x.coords.size());
    for (auto& c : x.coords) r.coords.push_back(poly_frob(k, c));
    return r;
}

/// The Artin-Schreier-Witt operator: Frobenius minus identity.
inline WittVector wp(const Field& k, const WittVector& x) {
    return witt_add(k, witt_frobenius(k, x), witt_neg(k, x));
}

// ---------------------------------------------------------------------------
// Integer lifts (test oracles)
// ---------------------------------------------------------------------------

/// Ghost components w_n of an integer-coordinate vector.
inline std::vector<mpz_class> ghost_z(int64_t p, const std::vector<mpz_class>& x) {
    std::vector<mpz_class> g;
    for (size_t n = 0; n < x.size(); ++n) {
        mpz_class acc = 0, pi = 1;
        for (size_t i = 0; i <= n; ++i) {
            uint64_t ex = 1;
            for (size_t s = 0; s < n - i; ++s) ex *= static_cast<uint64_t>(p);
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), ex);
            acc += pi * pw;
            pi *= p;
        }
        g.push_back(acc);
    }
    return g;
}

/// S evaluated over Z: the characteristic-zero Witt sum of integer lifts.
inline std::vector<mpz_class> witt_add_z(int64_t p, const std::vector<mpz_class>& x,
                                         const std::vector<mpz_class>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("witt_add_z: mismatched lengths");
    const int e = static_cast<int>(x.size());
    const auto& U = witt_universal_polys(p, e);
    std::vector<mpz_class> vals = x;
    vals.insert(vals.end(), y.begin(), y.end());
    std::vector<mpz_class> r;
    for (int n = 0; n < e; ++n)
        r.push_back(wittdetail::mp_eval_z(U.S[static_cast<size_t>(n)], vals));
    return r;
}

inline std::vector<mpz_class> witt_neg_z(int64_t p, const std::vector<mpz_class>& x) {
    const int e = static_cast<int>(x.size());
    const auto& U = witt_universal_polys(p, e);
    std::vector<mpz_class> vals = x;
    vals.resize(2 * x.size(), 0);
    std::vector<mpz_class> r;
    for (int n = 0; n < e; ++n)
        r.push_back(wittdetail::mp_eval_z(U.I[static_cast<size_t>(n)], vals));
    return r;
}

}  // namespace aswkit
