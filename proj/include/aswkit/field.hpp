#pragma once

// Finite fields F_{p^n} = F_p[w]/(modulus), with the operations the rest of
// the library leans on: Frobenius and its inverse (p-th roots), absolute
// trace, and Artin-Schreier preimages x^p - x = a via F_p-linear algebra.
//
// Elements are coefficient vectors over the prime field, ascending in powers
// of the generator w, always of length n with entries in [0, p).

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace aswkit {

using FieldElem = std::vector<int64_t>;

namespace detail {

inline bool is_prime_small(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over F_p (plain int64 coefficient vectors, ascending),
// used only for modulus handling and irreducibility tests.
using FpPoly = std::vector<int64_t>;

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, int64_t p) {
    fp_trim(a);
    const int64_t dm = static_cast<int64_t>(m.size()) - 1;
    while (static_cast<int64_t>(a.size()) - 1 >= dm) {
        const int64_t k = static_cast<int64_t>(a.size()) - 1 - dm;
        const int64_t c = a.back() % p;
        // m is monic
        for (int64_t i = 0; i <= dm; ++i) {
            a[k + i] = ((a[k + i] - c * m[i]) % p + p) % p;
        }
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return fp_mod(std::move(r), m, p);
}

// x^(p^k) mod m, via k successive p-th powers.
inline FpPoly fp_xq_pow(const FpPoly& m, int64_t p, int k) {
    FpPoly x = {0, 1};
    FpPoly cur = fp_mod(x, m, p);
    for (int step = 0; step < k; ++step) {
        FpPoly acc = {1};
        FpPoly base = cur;
        int64_t e = p;
        while (e > 0) {
            if (e & 1) acc = fp_mulmod(acc, base, m, p);
            base = fp_mulmod(base, base, m, p);
            e >>= 1;
        }
        cur = std::move(acc);
    }
    return cur;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, int64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        int64_t lead = b.back();
        int64_t inv = 1;
        for (int64_t x = 1; x < p; ++x)
            if ((lead * x) % p == 1) { inv = x; break; }
        FpPoly bm = b;
        for (auto& c : bm) c = (c * inv) % p;
        a = fp_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin's test: f monic of degree N is irreducible over F_p iff
// x^(p^N) = x mod f and gcd(x^(p^(N/l)) - x, f) = 1 for prime l | N.
inline bool fp_is_irreducible(const FpPoly& f, int64_t p) {
    const int N = static_cast<int>(f.size()) - 1;
    if (N <= 0) return false;
    if (f.back() != 1) return false;
    FpPoly xqN = fp_xq_pow(f, p, N);
    FpPoly x = fp_mod({0, 1}, f, p);
    FpPoly diff = xqN;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) diff[i] = ((diff[i] - x[i]) % p + p) % p;
    fp_trim(diff);
    if (!diff.empty()) return false;
    for (int l = 2; l <= N; ++l) {
        if (N % l != 0) continue;
        bool lprime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) { lprime = false; break; }
        if (!lprime) continue;
        FpPoly g = fp_xq_pow(f, p, N / l);
        g.resize(std::max(g.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) g[i] = ((g[i] - x[i]) % p + p) % p;
        FpPoly d = fp_gcd(g, f, p);
        if (d.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// Searches a monic irreducible polynomial of degree n over F_p.
/// Deterministic for fixed seed; small degrees are found quickly since a
/// fraction ~1/n of monic polynomials is irreducible.
inline std::vector<int64_t> find_irreducible(int64_t p, int n, std::mt19937_64& rng) {
    if (n == 1) return {0, 1};
    std::uniform_int_distribution<int64_t> coeff(0, p - 1);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        detail::FpPoly f(n + 1, 0);
        f[n] = 1;
        for (int i = 0; i < n; ++i) f[i] = coeff(rng);
        if (f[0] == 0) f[0] = 1 + coeff(rng) % (p - 1);
        if (detail::fp_is_irreducible(f, p)) return f;
    }
    throw std::runtime_error("find_irreducible: search exhausted (p=" + std::to_string(p) +
                             ", n=" + std::to_string(n) + ")");
}

class Field {
public:
    /// Defaults to F_2 so aggregates holding a Field stay regular.
    Field() : Field(2) {}

    /// Prime field F_p.
    explicit Field(int64_t p) : Field(p, {0, 1}) {}

    /// F_{p^n} presented by a monic irreducible modulus of degree n over F_p.
    Field(int64_t p, std::vector<int64_t> modulus) : p_(p), modulus_(std::move(modulus)) {
        if (!detail::is_prime_small(p_) || p_ > 97)
            throw std::invalid_argument("Field: characteristic must be a prime in [2, 97]");
        for (auto& c : modulus_) c = ((c % p_) + p_) % p_;
        detail::fp_trim(modulus_);
        n_ = static_cast<int>(modulus_.size()) - 1;
        if (n_ < 1 || modulus_.back() != 1)
            throw std::invalid_argument("Field: modulus must be monic of degree >= 1");
        if (n_ > 1 && !detail::fp_is_irreducible(modulus_, p_))
            throw std::invalid_argument("Field: modulus is not irreducible over F_p");
    }

    int64_t p() const { return p_; }
    int n() const { return n_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }

    bool operator==(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    FieldElem zero() const { return FieldElem(n_, 0); }
    FieldElem one() const { return from_int(1); }
    FieldElem from_int(int64_t v) const {
        FieldElem e(n_, 0);
        e[0] = ((v % p_) + p_) % p_;
        return e;
    }
    /// The class of w, the generator of the presentation (= 0 in prime fields).
    FieldElem gen() const {
        FieldElem e(n_, 0);
        if (n_ > 1) e[1] = 1;
        return e;
    }

    bool is_zero(const FieldElem& a) const {
        for (auto c : a)
            if (c != 0) return false;
        return true;
    }
    bool is_one(const FieldElem& a) const { return a == one(); }

    FieldElem add(const FieldElem& a, const FieldElem& b) const {
        FieldElem r(n_);
        for (int i = 0; i < n_; ++i) r[i] = (a[i] + b[i]) % p_;
        return r;
    }
    FieldElem sub(const FieldElem& a, const FieldElem& b) const {
        FieldElem r(n_);
        for (int i = 0; i < n_; ++i) r[i] = ((a[i] - b[i]) % p_ + p_) % p_;
        return r;
    }
    FieldElem neg(const FieldElem& a) const {
        FieldElem r(n_);
        for (int i = 0; i < n_; ++i) r[i] = (p_ - a[i]) % p_;
        return r;
    }
    FieldElem mul(const FieldElem& a, const FieldElem& b) const {
        std::vector<int64_t> r(2 * n_ - 1, 0);
        for (int i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < n_; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
        }
        auto m = detail::fp_mod(std::move(r), modulus_, p_);
        m.resize(n_, 0);
        return m;
    }
    FieldElem scalar_mul(int64_t s, const FieldElem& a) const {
        s = ((s % p_) + p_) % p_;
        FieldElem r(n_);
        for (int i = 0; i < n_; ++i) r[i] = (s * a[i]) % p_;
        return r;
    }

    /// Multiplicative inverse via extended Euclid in F_p[x] mod modulus.
    FieldElem inv(const FieldElem& a) const {
        if (is_zero(a)) throw std::domain_error("Field::inv: zero has no inverse");
        detail::FpPoly r0 = modulus_, r1 = a;
        detail::fp_trim(r1);
        detail::FpPoly t0 = {}, t1 = {1};
        while (!r1.empty()) {
            // one division step, r1 made monic on the fly
            int64_t lead = r1.back();
            int64_t li = inv_mod_p(lead);
            detail::FpPoly q;
            detail::FpPoly rem = r0;
            detail::fp_trim(rem);
            if (rem.size() >= r1.size()) {
                q.assign(rem.size() - r1.size() + 1, 0);
                while (rem.size() >= r1.size() && !rem.empty()) {
                    int64_t c = (rem.back() * li) % p_;
                    size_t k = rem.size() - r1.size();
                    q[k] = c;
                    for (size_t i = 0; i < r1.size(); ++i)
                        rem[k + i] = ((rem[k + i] - c * r1[i]) % p_ + p_) % p_;
                    detail::fp_trim(rem);
                }
            }
            // (r0, r1) <- (r1, r0 - q r1);  (t0, t1) <- (t1, t0 - q t1)
            detail::FpPoly qt1;
            if (!q.empty() && !t1.empty()) {
                qt1.assign(q.size() + t1.size() - 1, 0);
                for (size_t i = 0; i < q.size(); ++i)
                    for (size_t j = 0; j < t1.size(); ++j)
                        qt1[i + j] = (qt1[i + j] + q[i] * t1[j]) % p_;
            }
            detail::FpPoly t2 = t0;
            t2.resize(std::max(t2.size(), qt1.size()), 0);
            for (size_t i = 0; i < qt1.size(); ++i)
                t2[i] = ((t2[i] - qt1[i]) % p_ + p_) % p_;
            detail::fp_trim(t2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd, a nonzero constant since the modulus is irreducible
        int64_t gi = inv_mod_p(r0.empty() ? 1 : r0[0]);
        for (auto& c : t0) c = (c * gi) % p_;
        t0.resize(n_, 0);
        return t0;
    }

    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

    FieldElem pow(FieldElem a, uint64_t e) const {
        FieldElem r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElem frobenius(const FieldElem& a) const { return pow(a, static_cast<uint64_t>(p_)); }

    /// Unique p-th root: Frobenius is bijective, and x -> x^(p^(n-1)) inverts it.
    FieldElem pth_root(const FieldElem& a) const {
        FieldElem r = a;
        for (int i = 0; i < n_ - 1; ++i) r = frobenius(r);
        return r;
    }

    /// Absolute trace down to F_p, returned as an integer in [0, p).
    int64_t trace(const FieldElem& a) const {
        FieldElem s = zero(), x = a;
        for (int i = 0; i < n_; ++i) {
            s = add(s, x);
            x = frobenius(x);
        }
        for (int i = 1; i < n_; ++i)
            if (s[i] != 0) throw std::logic_error("Field::trace: result not in prime field");
        return s[0];
    }

    /// Solves x^p - x = a; empty iff trace(a) != 0 (kernel of the F_p-linear
    /// map Frob - Id is F_p, image is the trace-zero hyperplane).
    std::optional<FieldElem> artin_schreier_preimage(const FieldElem& a) const {
        // columns: (basis_j)^p - basis_j
        std::vector<std::vector<int64_t>> m(n_, std::vector<int64_t>(n_ + 1, 0));
        for (int j = 0; j < n_; ++j) {
            FieldElem bj(n_, 0);
            bj[j] = 1;
            FieldElem col = sub(frobenius(bj), bj);
            for (int i = 0; i < n_; ++i) m[i][j] = col[i];
        }
        for (int i = 0; i < n_; ++i) m[i][n_] = a[i];
        // Gaussian elimination over F_p
        std::vector<int> pivot_col(n_, -1);
        int row = 0;
        for (int col = 0; col < n_ && row < n_; ++col) {
            int pr = -1;
            for (int r = row; r < n_; ++r)
                if (m[r][col] != 0) { pr = r; break; }
            if (pr == -1) continue;
            std::swap(m[row], m[pr]);
            int64_t li = inv_mod_p(m[row][col]);
            for (int c = col; c <= n_; ++c) m[row][c] = (m[row][c] * li) % p_;
            for (int r = 0; r < n_; ++r) {
                if (r == row || m[r][col] == 0) continue;
                int64_t f = m[r][col];
                for (int c = col; c <= n_; ++c)
                    m[r][c] = ((m[r][c] - f * m[row][c]) % p_ + p_) % p_;
            }
            pivot_col[row] = col;
            ++row;
        }
        for (int r = row; r < n_; ++r)
            if (m[r][n_] != 0) return std::nullopt;
        FieldElem x(n_, 0);
        for (int r = 0; r < row; ++r)
            if (pivot_col[r] >= 0) x[pivot_col[r]] = m[r][n_];
        return x;
    }

    FieldElem random_elem(std::mt19937_64& rng) const {
        std::uniform_int_distribution<int64_t> d(0, p_ - 1);
        FieldElem e(n_);
        for (auto& c : e) c = d(rng);
        return e;
    }
    FieldElem random_nonzero(std::mt19937_64& rng) const {
        for (;;) {
            FieldElem e = random_elem(rng);
            if (!is_zero(e)) return e;
        }
    }

    /// Number of elements as a double (for sampling heuristics only).
    double size_approx() const {
        double s = 1;
        for (int i = 0; i < n_; ++i) s *= static_cast<double>(p_);
        return s;
    }

    std::string to_string(const FieldElem& a) const {
        std::string s = "[";
        for (int i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(a[i]);
        return s + "]";
    }

private:
    int64_t inv_mod_p(int64_t a) const {
        a = ((a % p_) + p_) % p_;
        int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            int64_t q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        return ((t % p_) + p_) % p_;
    }

    int64_t p_;
    int n_;
    std::vector<int64_t> modulus_;
};

}  // namespace aswkit
