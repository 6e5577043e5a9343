#pragma once

// Univariate polynomials over F_{p^n}. Throughout the library the variable is
// u = t^{-1}, so "degree" of a class representative is (minus) its t-adic
// valuation. deg(0) is the dedicated -infinity sentinel, never an integer.
//
// Also home to the splitting machinery: distinct-degree analysis, splitting
// field construction F_{p^(n*m)} with an explicit embedding, and root
// extraction (Cantor-Zassenhaus for odd p, trace splitting for p = 2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

#include "aswkit/field.hpp"

namespace aswkit {

struct Poly {
    std::vector<FieldElem> c;  // ascending powers of u, no trailing zeros
};

using PolyDeg = std::optional<int64_t>;  // nullopt encodes deg(0) = -infinity

inline void poly_trim(const Field& k, Poly& f) {
    while (!f.c.empty() && k.is_zero(f.c.back())) f.c.pop_back();
}

inline Poly poly_zero() { return {}; }

inline Poly poly_const(const Field& k, const FieldElem& a) {
    Poly f;
    if (!k.is_zero(a)) f.c.push_back(a);
    return f;
}

inline Poly poly_from_ints(const Field& k, const std::vector<int64_t>& cs) {
    Poly f;
    f.c.reserve(cs.size());
    for (auto v : cs) f.c.push_back(k.from_int(v));
    poly_trim(k, f);
    return f;
}

/// Single monomial c*u^m.
inline Poly poly_monomial(const Field& k, const FieldElem& coeff, int64_t m) {
    Poly f;
    if (k.is_zero(coeff)) return f;
    f.c.assign(static_cast<size_t>(m) + 1, k.zero());
    f.c.back() = coeff;
    return f;
}

inline bool poly_is_zero(const Poly& f) { return f.c.empty(); }

inline PolyDeg poly_deg(const Poly& f) {
    if (f.c.empty()) return std::nullopt;
    return static_cast<int64_t>(f.c.size()) - 1;
}

inline FieldElem poly_coeff(const Field& k, const Poly& f, int64_t i) {
    if (i < 0 || i >= static_cast<int64_t>(f.c.size())) return k.zero();
    return f.c[static_cast<size_t>(i)];
}

inline FieldElem poly_lead(const Field& k, const Poly& f) {
    return f.c.empty() ? k.zero() : f.c.back();
}

inline bool poly_eq(const Poly& a, const Poly& b) { return a.c == b.c; }

inline Poly poly_add(const Field& k, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        FieldElem x = i < a.c.size() ? a.c[i] : k.zero();
        FieldElem y = i < b.c.size() ? b.c[i] : k.zero();
        r.c[i] = k.add(x, y);
    }
    poly_trim(k, r);
    return r;
}

inline Poly poly_neg(const Field& k, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = k.neg(x);
    return r;
}

inline Poly poly_sub(const Field& k, const Poly& a, const Poly& b) {
    return poly_add(k, a, poly_neg(k, b));
}

inline Poly poly_scalar(const Field& k, const FieldElem& s, const Poly& a) {
    if (k.is_zero(s)) return {};
    Poly r = a;
    for (auto& x : r.c) x = k.mul(s, x);
    poly_trim(k, r);
    return r;
}

inline Poly poly_mul(const Field& k, const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (k.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
    }
    poly_trim(k, r);
    return r;
}

inline std::pair<Poly, Poly> poly_divrem(const Field& k, const Poly& a, const Poly& b) {
    if (b.c.empty()) throw std::domain_error("poly_divrem: division by zero polynomial");
    Poly q, r = a;
    poly_trim(k, r);
    if (r.c.size() < b.c.size()) return {q, r};
    q.c.assign(r.c.size() - b.c.size() + 1, k.zero());
    FieldElem li = k.inv(b.c.back());
    while (r.c.size() >= b.c.size() && !r.c.empty()) {
        FieldElem f = k.mul(r.c.back(), li);
        size_t sh = r.c.size() - b.c.size();
        q.c[sh] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            r.c[sh + i] = k.sub(r.c[sh + i], k.mul(f, b.c[i]));
        poly_trim(k, r);
    }
    poly_trim(k, q);
    return {q, r};
}

inline Poly poly_mod(const Field& k, const Poly& a, const Poly& b) {
    return poly_divrem(k, a, b).second;
}

inline Poly poly_monic(const Field& k, const Poly& f) {
    if (f.c.empty()) return f;
    return poly_scalar(k, k.inv(f.c.back()), f);
}

inline Poly poly_gcd(const Field& k, Poly a, Poly b) {
    poly_trim(k, a);
    poly_trim(k, b);
    while (!b.c.empty()) {
        Poly r = poly_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(k, a);
}

inline Poly poly_derivative(const Field& k, const Poly& f) {
    Poly r;
    if (f.c.size() < 2) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c[i - 1] = k.scalar_mul(static_cast<int64_t>(i), f.c[i]);
    poly_trim(k, r);
    return r;
}

inline FieldElem poly_eval(const Field& k, const Poly& f, const FieldElem& x) {
    FieldElem acc = k.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = k.add(k.mul(acc, x), f.c[i]);
    return acc;
}

/// f^p by Frobenius: in characteristic p, (sum c_i u^i)^p = sum c_i^p u^(p*i).
inline Poly poly_frob(const Field& k, const Poly& f) {
    if (f.c.empty()) return {};
    Poly r;
    r.c.assign((f.c.size() - 1) * static_cast<size_t>(k.p()) + 1, k.zero());
    for (size_t i = 0; i < f.c.size(); ++i)
        r.c[i * static_cast<size_t>(k.p())] = k.pow(f.c[i], static_cast<uint64_t>(k.p()));
    return r;
}

/// f^e using the base-p expansion of e, so the bulk of the work rides on the
/// cheap Frobenius powers f^(p^i).
inline Poly poly_pow(const Field& k, const Poly& f, uint64_t e) {
    Poly one = poly_from_ints(k, {1});
    if (e == 0) return one;
    if (f.c.empty()) return {};
    std::vector<uint64_t> digits;
    uint64_t m = e;
    while (m > 0) {
        digits.push_back(m % static_cast<uint64_t>(k.p()));
        m /= static_cast<uint64_t>(k.p());
    }
    Poly frobpow = f;  // f^(p^i) at level i
    Poly acc = one;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] > 0) {
            Poly part = frobpow;  // frobpow^digit by little binary powering
            uint64_t d = digits[i];
            Poly sq = frobpow, cur = one;
            while (d > 0) {
                if (d & 1) cur = poly_mul(k, cur, sq);
                d >>= 1;
                if (d) sq = poly_mul(k, sq, sq);
            }
            part = cur;
            acc = poly_mul(k, acc, part);
        }
        if (i + 1 < digits.size()) frobpow = poly_frob(k, frobpow);
    }
    return acc;
}

inline Poly poly_mulmod(const Field& k, const Poly& a, const Poly& b, const Poly& m) {
    return poly_mod(k, poly_mul(k, a, b), m);
}

inline Poly poly_powmod(const Field& k, Poly a, uint64_t e, const Poly& m) {
    Poly r = poly_mod(k, poly_from_ints(k, {1}), m);
    a = poly_mod(k, a, m);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(k, r, a, m);
        a = poly_mulmod(k, a, a, m);
        e >>= 1;
    }
    return r;
}

/// x^(q^d) mod f where q = p^n, computed as d*n successive p-th powers.
inline Poly poly_xq_pow(const Field& k, const Poly& f, int d) {
    Poly x = poly_mod(k, poly_from_ints(k, {0, 1}), f);
    Poly cur = x;
    for (int s = 0; s < d * k.n(); ++s)
        cur = poly_powmod(k, cur, static_cast<uint64_t>(k.p()), f);
    return cur;
}

/// Nonzero f is separable iff gcd(f, f') is constant.
inline bool poly_is_separable(const Field& k, const Poly& f) {
    if (f.c.empty()) return false;
    if (f.c.size() == 1) return true;
    Poly d = poly_derivative(k, f);
    if (d.c.empty()) return false;
    return poly_gcd(k, f, d).c.size() == 1;
}

// ---------------------------------------------------------------------------
// Field extension with explicit embedding
// ---------------------------------------------------------------------------

struct Embedding {
    Field from;
    Field to;
    FieldElem gen_image;  // image of from.gen() in to

    FieldElem operator()(const FieldElem& a) const {
        FieldElem acc = to.zero();
        for (size_t i = a.size(); i-- > 0;)
            acc = to.add(to.mul(acc, gen_image), to.from_int(a[i]));
        return acc;
    }
    Poly map(const Poly& f) const {
        Poly r;
        r.c.reserve(f.c.size());
        for (auto& x : f.c) r.c.push_back((*this)(x));
        return r;
    }
};

inline Embedding identity_embedding(const Field& k) { return {k, k, k.gen()}; }

namespace detail {

// One root of a monic product of distinct linear factors, split recursively.
inline FieldElem extract_one_root(const Field& k, Poly h, std::mt19937_64& rng) {
    for (;;) {
        poly_trim(k, h);
        if (h.c.size() < 2) throw std::logic_error("extract_one_root: no root left");
        if (h.c.size() == 2) return k.neg(k.div(h.c[0], h.c[1]));
        Poly g;
        if (k.p() == 2) {
            // trace splitting: gcd(h, Tr(a x)) with Tr over F_2
            FieldElem a = k.random_nonzero(rng);
            Poly ax = poly_mod(k, poly_monomial(k, a, 1), h);
            Poly tr = ax, cur = ax;
            for (int i = 1; i < k.n(); ++i) {
                cur = poly_mulmod(k, cur, cur, h);
                tr = poly_add(k, tr, cur);
            }
            g = poly_gcd(k, h, tr);
        } else {
            // Cantor-Zassenhaus: gcd(h, (x+a)^((q-1)/2) - 1)
            FieldElem a = k.random_elem(rng);
            Poly xa = poly_add(k, poly_from_ints(k, {0, 1}), poly_const(k, a));
            // (q-1)/2 with q = p^n: exponentiate in stages to dodge overflow
            Poly w = poly_mod(k, xa, h);
            // compute w^((q-1)/2) = prod over base-p digits of (q-1)/2
            // q <= 97^n may exceed 64 bits for large n; stage the powering as
            // (x+a)^((p-1)/2) then repeatedly ^p times ^((p-1)/2) per level:
            // (q-1)/2 = (p-1)/2 * (1 + p + ... + p^(n-1))
            Poly base = poly_powmod(k, w, static_cast<uint64_t>((k.p() - 1) / 2), h);
            Poly acc = base;
            for (int i = 1; i < k.n(); ++i) {
                acc = poly_powmod(k, acc, static_cast<uint64_t>(k.p()), h);
                acc = poly_mulmod(k, acc, base, h);
            }
            Poly w1 = poly_sub(k, acc, poly_from_ints(k, {1}));
            g = poly_gcd(k, h, w1);
        }
        if (g.c.size() > 1 && g.c.size() < h.c.size()) h = std::move(g);
        // otherwise retry with a fresh random shift
    }
}

}  // namespace detail

/// All roots of f in k (f need not split); returned with multiplicities.
inline std::vector<std::pair<FieldElem, int64_t>> poly_roots_in_field(const Field& k, Poly f,
                                                                      std::mt19937_64& rng) {
    std::vector<std::pair<FieldElem, int64_t>> out;
    poly_trim(k, f);
    if (f.c.size() < 2) return out;
    // product of the distinct linear factors: gcd(f, x^q - x)
    Poly xq = poly_xq_pow(k, f, 1);
    Poly lin = poly_gcd(k, f, poly_sub(k, xq, poly_mod(k, poly_from_ints(k, {0, 1}), f)));
    while (lin.c.size() > 1) {
        FieldElem r = detail::extract_one_root(k, lin, rng);
        // multiplicity in f by repeated exact division
        Poly factor = poly_add(k, poly_from_ints(k, {0, 1}), poly_const(k, k.neg(r)));
        int64_t mult = 0;
        for (;;) {
            auto [q, rem] = poly_divrem(k, f, factor);
            if (!rem.c.empty()) break;
            f = q;
            ++mult;
        }
        out.emplace_back(r, mult);
        lin = poly_divrem(k, lin, factor).first;
    }
    return out;
}

/// Degrees of the irreducible factors of squarefree f (distinct-degree
/// factorization, degrees only).
inline std::vector<int> poly_factor_degrees_squarefree(const Field& k, Poly f) {
    std::vector<int> degs;
    poly_trim(k, f);
    f = poly_monic(k, f);
    Poly x = poly_from_ints(k, {0, 1});
    int d = 0;
    Poly h = poly_mod(k, x, f);
    while (f.c.size() > 1) {
        ++d;
        if (2 * d > static_cast<int>(f.c.size()) - 1) {
            degs.push_back(static_cast<int>(f.c.size()) - 1);
            break;
        }
        // h = x^(q^d) mod f
        for (int s = 0; s < k.n(); ++s) h = poly_powmod(k, h, static_cast<uint64_t>(k.p()), f);
        Poly g = poly_gcd(k, f, poly_sub(k, h, poly_mod(k, x, f)));
        if (g.c.size() > 1) {
            int count = (static_cast<int>(g.c.size()) - 1) / d;
            for (int i = 0; i < count; ++i) degs.push_back(d);
            f = poly_divrem(k, f, g).first;
            h = poly_mod(k, h, f);
        }
    }
    return degs;
}

/// Constructs F_{p^(n*m)} together with the embedding of k into it.
/// Deterministic for fixed (k, m): the search RNG is seeded from the inputs.
inline Embedding extend_field(const Field& k, int m) {
    if (m == 1) return identity_embedding(k);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(k.p()) << 32) ^
                        (static_cast<uint64_t>(k.n()) << 16) ^ static_cast<uint64_t>(m));
    Field ext(k.p(), find_irreducible(k.p(), k.n() * m, rng));
    // image of k's generator: a root of k's modulus inside ext
    if (k.n() == 1) return {k, ext, ext.zero()};
    Poly mod_in_ext;
    mod_in_ext.c.reserve(k.modulus().size());
    for (auto c : k.modulus()) mod_in_ext.c.push_back(ext.from_int(c));
    auto roots = poly_roots_in_field(ext, mod_in_ext, rng);
    if (roots.empty()) throw std::logic_error("extend_field: modulus has no root in extension");
    // pick the lexicographically least root so the embedding is canonical
    FieldElem best = roots[0].first;
    for (auto& [r, mu] : roots)
        if (r < best) best = r;
    return {k, ext, best};
}

struct SplitRoots {
    Embedding emb;                                    // k -> splitting field
    int ext_degree = 1;                               // m with splitting field F_{p^(n*m)}
    std::vector<std::pair<FieldElem, int64_t>> roots; // (root, multiplicity) in emb.to
};

/// Splitting field of nonzero f over k plus the full root multiset.
/// max_total_degree caps n*m of the constructed field.
inline SplitRoots split_roots(const Field& k, const Poly& f, int max_total_degree = 24) {
    if (poly_is_zero(f)) throw std::invalid_argument("split_roots: zero polynomial");
    SplitRoots res;
    res.emb = identity_embedding(k);
    if (f.c.size() == 1) return res;  // constants: empty root multiset

    // peel inseparability: f(u) = g(u^(p^pk)) with g' != 0
    Poly g = f;
    int64_t pk = 1;
    for (;;) {
        Poly d = poly_derivative(k, g);
        if (!d.c.empty()) break;
        Poly contracted;
        contracted.c.reserve((g.c.size() - 1) / static_cast<size_t>(k.p()) + 1);
        for (size_t i = 0; i < g.c.size(); i += static_cast<size_t>(k.p()))
            contracted.c.push_back(g.c[i]);
        poly_trim(k, contracted);
        g = std::move(contracted);
        pk *= k.p();
        if (g.c.size() == 1) break;  // f was a constant^p... power; no roots
    }
    if (g.c.size() == 1) return res;

    Poly sqfree = poly_divrem(k, g, poly_gcd(k, g, poly_derivative(k, g))).first;
    auto degs = poly_factor_degrees_squarefree(k, sqfree);
    int m = 1;
    for (int d : degs) m = static_cast<int>(std::lcm(m, d));
    if (k.n() * m > max_total_degree)
        throw std::domain_error("split_roots: splitting field degree " +
                                std::to_string(k.n() * m) + " exceeds bound " +
                                std::to_string(max_total_degree));

    res.emb = extend_field(k, m);
    res.ext_degree = m;
    const Field& K = res.emb.to;
    std::mt19937_64 rng(0xc0ffee ^ (static_cast<uint64_t>(k.p()) << 20) ^
                        static_cast<uint64_t>(f.c.size()));
    Poly gK = res.emb.map(g);
    auto roots_g = poly_roots_in_field(K, gK, rng);
    int64_t degsum = 0;
    for (auto& [r, mu] : roots_g) degsum += mu;
    if (degsum != static_cast<int64_t>(g.c.size()) - 1)
        throw std::logic_error("split_roots: lost roots over the computed splitting field");

    // undo the contraction: unique p^pk-th roots, multiplicities scale by p^pk
    for (auto& [r, mu] : roots_g) {
        FieldElem root = r;
        for (int64_t q = 1; q < pk; q *= k.p()) root = K.pth_root(root);
        res.roots.emplace_back(root, mu * pk);
    }
    std::sort(res.roots.begin(), res.roots.end());

    // reconstruction check: lead * prod (u - r)^mult == f in the extension
    Poly recon = poly_const(K, res.emb(poly_lead(k, f)));
    for (auto& [r, mu] : res.roots) {
        Poly lin = poly_add(K, poly_from_ints(K, {0, 1}), poly_const(K, K.neg(r)));
        for (int64_t i = 0; i < mu; ++i) recon = poly_mul(K, recon, lin);
    }
    if (!poly_eq(recon, res.emb.map(f)))
        throw std::logic_error("split_roots: linear factors do not reproduce the input");
    return res;
}

}  // namespace aswkit
