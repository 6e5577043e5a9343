#pragma once

// Jump-profile arithmetic for totally ramified cyclic Z/p^e extensions:
// validation of upper/lower jump sequences, Herbrand conversion, the two
// different-degree formulas, essential decomposition, Katz-Gabber genus and
// the Kato different-equality check.
//
// Everything here is exact int64 arithmetic. Validation caps the admissible
// range (jumps <= 10^6, p^e <= 10^12) so no downstream formula can overflow;
// callers may assume validity after construction.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aswkit {

enum class JumpConvention { upper, lower };

inline constexpr int64_t kMaxJumpValue = 1000000;
inline constexpr int64_t kMaxGroupOrder = 1000000000000;  // cap on p^e

struct JumpCheck {
    bool ok = true;
    std::string detail;  // first violated clause
    int index = -1;      // 1-based rho of the violation
};

namespace rdetail {

inline bool small_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline JumpCheck fail(std::string why, int idx) { return {false, std::move(why), idx}; }

}  // namespace rdetail

/// Upper-convention invariants: iota_1 >= 1 prime to p; for rho >= 2,
/// iota_rho >= p*iota_(rho-1), strictly greater exactly when p does not
/// divide iota_rho.
inline JumpCheck validate_upper_jumps(int64_t p, const std::vector<int64_t>& jumps) {
    if (!rdetail::small_prime(p)) return rdetail::fail("p is not prime", 0);
    if (jumps.empty()) return rdetail::fail("empty jump sequence", 0);
    int64_t pe = 1;
    for (size_t i = 0; i < jumps.size(); ++i) {
        if (pe > kMaxGroupOrder / p) return rdetail::fail("p^e exceeds supported range", 0);
        pe *= p;
    }
    if (jumps[0] < 1) return rdetail::fail("iota_1 must be >= 1", 1);
    if (jumps[0] % p == 0) return rdetail::fail("iota_1 must be prime to p", 1);
    int64_t prev = jumps[0];
    for (size_t i = 1; i < jumps.size(); ++i) {
        int64_t cur = jumps[i];
        if (cur > kMaxJumpValue) return rdetail::fail("jump exceeds supported range", (int)i + 1);
        if (cur < p * prev)
            return rdetail::fail("iota_rho < p*iota_(rho-1)", static_cast<int>(i) + 1);
        if (cur > p * prev && cur % p == 0)
            return rdetail::fail("strict growth requires iota_rho prime to p",
                                 static_cast<int>(i) + 1);
        // cur == p*prev is the equality branch: p | iota_rho automatically
        prev = cur;
    }
    if (jumps[0] > kMaxJumpValue) return rdetail::fail("jump exceeds supported range", 1);
    return {};
}

/// Lower-convention invariants: j_1 >= 1, strictly increasing, and the
/// inverse Herbrand image is a valid upper sequence (integrality included).
inline JumpCheck validate_lower_jumps(int64_t p, const std::vector<int64_t>& jumps) {
    if (!rdetail::small_prime(p)) return rdetail::fail("p is not prime", 0);
    if (jumps.empty()) return rdetail::fail("empty jump sequence", 0);
    if (jumps[0] < 1) return rdetail::fail("j_1 must be >= 1", 1);
    std::vector<int64_t> upper;
    int64_t prev_j = 0, prev_i = 0, pw = 1;
    for (size_t i = 0; i < jumps.size(); ++i) {
        if (i > 0 && jumps[i] <= jumps[i - 1])
            return rdetail::fail("lower jumps must be strictly increasing",
                                 static_cast<int>(i) + 1);
        int64_t diff = jumps[i] - prev_j;
        if (diff % pw != 0)
            return rdetail::fail("j_rho - j_(rho-1) not divisible by p^(rho-1)",
                                 static_cast<int>(i) + 1);
        int64_t iota = prev_i + diff / pw;
        upper.push_back(iota);
        prev_j = jumps[i];
        prev_i = iota;
        if (pw > kMaxGroupOrder / p) return rdetail::fail("p^e exceeds supported range", 0);
        pw *= p;
    }
    JumpCheck up = validate_upper_jumps(p, upper);
    if (!up.ok) up.detail = "inverse Herbrand image invalid: " + up.detail;
    return up;
}

inline JumpCheck validate_jumps(int64_t p, JumpConvention conv,
                                const std::vector<int64_t>& jumps) {
    return conv == JumpConvention::upper ? validate_upper_jumps(p, jumps)
                                         : validate_lower_jumps(p, jumps);
}

/// A validated ramification jump profile. Construction throws on any violated
/// clause, so downstream code does not re-check.
class JumpSequence {
public:
    static JumpSequence upper(int64_t p, std::vector<int64_t> jumps) {
        return JumpSequence(p, JumpConvention::upper, std::move(jumps));
    }
    static JumpSequence lower(int64_t p, std::vector<int64_t> jumps) {
        return JumpSequence(p, JumpConvention::lower, std::move(jumps));
    }

    JumpSequence(int64_t p, JumpConvention conv, std::vector<int64_t> jumps)
        : p_(p), conv_(conv), jumps_(std::move(jumps)) {
        JumpCheck c = validate_jumps(p_, conv_, jumps_);
        if (!c.ok)
            throw std::invalid_argument("JumpSequence: " + c.detail +
                                        (c.index > 0 ? " (at rho=" + std::to_string(c.index) + ")"
                                                     : ""));
    }

    int64_t p() const { return p_; }
    JumpConvention convention() const { return conv_; }
    int e() const { return static_cast<int>(jumps_.size()); }
    const std::vector<int64_t>& jumps() const { return jumps_; }
    int64_t jump(int rho1) const { return rho1 == 0 ? 0 : jumps_.at(static_cast<size_t>(rho1 - 1)); }

    /// Artin conductor: the largest upper jump.
    int64_t artin_conductor() const { return jumps_.back(); }

    int64_t group_order() const {
        int64_t pe = 1;
        for (int i = 0; i < e(); ++i) pe *= p_;
        return pe;
    }

    bool operator==(const JumpSequence& o) const {
        return p_ == o.p_ && conv_ == o.conv_ && jumps_ == o.jumps_;
    }

private:
    int64_t p_;
    JumpConvention conv_;
    std::vector<int64_t> jumps_;
};

/// Herbrand's formula: j_rho - j_(rho-1) = p^(rho-1) (iota_rho - iota_(rho-1)).
/// Exact in both directions; the round trip is the identity.
inline JumpSequence herbrand(const JumpSequence& s, JumpConvention target) {
    if (s.convention() == target) return s;
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(s.e()));
    if (target == JumpConvention::lower) {
        int64_t j = 0, prev = 0, pw = 1;
        for (int rho = 1; rho <= s.e(); ++rho) {
            j += pw * (s.jump(rho) - prev);
            prev = s.jump(rho);
            out.push_back(j);
            pw *= s.p();
        }
        return JumpSequence::lower(s.p(), std::move(out));
    }
    int64_t iota = 0, prev = 0, pw = 1;
    for (int rho = 1; rho <= s.e(); ++rho) {
        int64_t diff = s.jump(rho) - prev;
        if (diff % pw != 0)
            throw std::invalid_argument("herbrand: non-integral inverse image");
        iota += diff / pw;
        prev = s.jump(rho);
        out.push_back(iota);
        pw *= s.p();
    }
    return JumpSequence::upper(s.p(), std::move(out));
}

/// deg D via the convention the sequence carries:
///   upper: sum (iota_rho + 1)(p^rho - p^(rho-1))
///   lower: p^e - 1 + sum (j_rho - j_(rho-1))(p^(e-(rho-1)) - 1)   (Hilbert)
inline int64_t different_degree(const JumpSequence& s) {
    const int64_t p = s.p();
    const int e = s.e();
    if (s.convention() == JumpConvention::upper) {
        int64_t acc = 0, prho = 1;
        for (int rho = 1; rho <= e; ++rho) {
            int64_t next = prho * p;
            acc += (s.jump(rho) + 1) * (next - prho);
            prho = next;
        }
        return acc;
    }
    int64_t pe = s.group_order();
    int64_t acc = pe - 1;
    int64_t pw = pe;  // p^(e-(rho-1)) starts at p^e
    for (int rho = 1; rho <= e; ++rho) {
        acc += (s.jump(rho) - s.jump(rho - 1)) * (pw - 1);
        pw /= p;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Essential decomposition
// ---------------------------------------------------------------------------

/// iota_rho - p*iota_(rho-1) = p*q_rho + eps_rho with 0 <= eps_rho < p.
/// q_rho is the essential part; rho with q_rho > 0 are the essential indices.
struct EssentialDecomposition {
    int64_t p = 0;
    int e = 0;
    std::vector<int64_t> q;    // essential parts, size e
    std::vector<int64_t> eps;  // remainders, size e
    std::vector<int> r;        // essential indices (1-based), strictly increasing
    std::vector<int64_t> d;    // d[0] = 1, d[i] = d[i-1] + q_(r_i); size e0+1
    int64_t N = 1;             // 1 + q_1 + ... + q_e

    int e0() const { return static_cast<int>(r.size()); }
    bool has_essential() const { return !r.empty(); }
    /// Improper upper index convention r_(e0+1) = e + 1.
    int r_at(int i) const {
        if (i >= 1 && i <= e0()) return r[static_cast<size_t>(i - 1)];
        if (i == e0() + 1) return e + 1;
        throw std::out_of_range("EssentialDecomposition::r_at");
    }
};

inline EssentialDecomposition essential_decomposition(const JumpSequence& s) {
    if (s.convention() != JumpConvention::upper)
        throw std::invalid_argument("essential_decomposition: upper convention required");
    EssentialDecomposition d;
    d.p = s.p();
    d.e = s.e();
    d.d.push_back(1);
    for (int rho = 1; rho <= s.e(); ++rho) {
        int64_t diff = s.jump(rho) - s.p() * s.jump(rho - 1);
        int64_t q = diff / s.p();
        int64_t eps = diff % s.p();
        d.q.push_back(q);
        d.eps.push_back(eps);
        d.N += q;
        if (q > 0) {
            d.r.push_back(rho);
            d.d.push_back(d.d.back() + q);
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Katz-Gabber genus and Kato's equality
// ---------------------------------------------------------------------------

/// Genus of the degree-p^e cover of the line totally branched at one point:
/// 2g - 2 = -2 p^e + deg D by Riemann-Hurwitz.
inline int64_t kg_genus(const JumpSequence& s) {
    int64_t degd = different_degree(s);
    int64_t pe = s.group_order();
    int64_t twog = -2 * pe + degd + 2;
    if (twog % 2 != 0 || twog < 0)
        throw std::logic_error("kg_genus: non-integral or negative genus for validated input");
    return twog / 2;
}

struct DifferentReport {
    int64_t special_fiber_degree = 0;
    std::vector<int64_t> per_branch;
    int64_t total_generic_degree = 0;
    bool kato_equal = false;
};

/// The numeric content of Kato's smoothness criterion: deg D_(S|R) equals the
/// special-fiber deg D_(B|A) iff the sum of branch contributions matches.
inline DifferentReport kato_check(int64_t special, std::vector<int64_t> generic_parts) {
    DifferentReport r;
    r.special_fiber_degree = special;
    r.per_branch = std::move(generic_parts);
    for (int64_t v : r.per_branch) r.total_generic_degree += v;
    r.kato_equal = (r.total_generic_degree == special);
    return r;
}

}  // namespace aswkit
