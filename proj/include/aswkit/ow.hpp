#pragma once

// The numerical lifting criterion on consecutive upper jumps.
//
// Condition (*) at nu: there is NO integer m with
//     delta < p m <= delta * iota_(nu+1) / (iota_(nu+1) - iota_nu),
// where delta = iota_(nu+1) - p iota_nu. The reformulation (*)': writing
// iota_(nu+1) = p iota_nu + p r - eta with 0 <= eta < p, the condition holds
// iff r <= eta; the two agree for 1 < nu < e once iota_nu >= p^2, and outside
// that regime both verdicts are reported without an equivalence claim.
//
// All comparisons are exact integer/rational arithmetic; nothing here touches
// floating point.

#include <cstdint>
#include <optional>

#include "aswkit/ramification.hpp"

namespace aswkit {

struct StarEntry {
    int nu = 0;
    int64_t delta = 0;
    int64_t bound_num = 0;  // delta * iota_(nu+1)
    int64_t bound_den = 1;  // iota_(nu+1) - iota_nu
    std::optional<int64_t> witness;  // least violating m, when one exists
    bool holds = true;
};

inline StarEntry star_condition(const JumpSequence& s, int nu) {
    if (s.convention() != JumpConvention::upper)
        throw std::invalid_argument("star_condition: upper convention required");
    if (nu < 1 || nu >= s.e())
        throw std::invalid_argument("star_condition: nu must satisfy 1 <= nu < e");
    const int64_t p = s.p();
    StarEntry r;
    r.nu = nu;
    r.delta = s.jump(nu + 1) - p * s.jump(nu);
    r.bound_num = r.delta * s.jump(nu + 1);
    r.bound_den = s.jump(nu + 1) - s.jump(nu);
    // integers m with delta < p m <= num/den: smallest candidate and largest
    int64_t m_low = r.delta / p + 1;
    int64_t m_high = r.bound_num / (p * r.bound_den);
    if (m_low <= m_high) {
        r.witness = m_low;
        r.holds = false;
    }
    return r;
}

struct StarPrimeEntry {
    int nu = 0;
    int64_t r = 0;
    int64_t eta = 0;
    bool holds = true;
    bool in_remark_regime = false;  // iota_nu >= p^2, where (*) <=> (*)' is proved
};

/// The bare (*)' arithmetic: delta = p r - eta with 0 <= eta < p, condition
/// r <= eta. Exposed separately since it is defined for any delta >= 0.
inline StarPrimeEntry star_prime_arith(int64_t p, int64_t delta) {
    StarPrimeEntry r;
    r.r = (delta + p - 1) / p;  // ceil(delta / p)
    r.eta = r.r * p - delta;    // 0 <= eta < p
    r.holds = (r.r <= r.eta);
    return r;
}

inline StarPrimeEntry star_prime_condition(const JumpSequence& s, int nu) {
    if (s.convention() != JumpConvention::upper)
        throw std::invalid_argument("star_prime_condition: upper convention required");
    if (nu <= 1 || nu >= s.e())
        throw std::invalid_argument("star_prime_condition: nu must satisfy 1 < nu < e");
    const int64_t p = s.p();
    StarPrimeEntry r = star_prime_arith(p, s.jump(nu + 1) - p * s.jump(nu));
    r.nu = nu;
    r.in_remark_regime = (s.jump(nu) >= p * p);
    return r;
}

/// Key-Lemma-2 predicate: liftability granted by the absence of essential
/// ramification. When it applies, (*) must hold at every nu -- that is the
/// content of the lemma's proof, so a counterexample is an internal bug and
/// aborts rather than returning.
inline bool ow_liftable_no_essential(const JumpSequence& s) {
    bool no_essential = !essential_decomposition(s).has_essential();
    if (no_essential) {
        for (int nu = 1; nu < s.e(); ++nu)
            if (!star_condition(s, nu).holds)
                throw std::logic_error(
                    "ow_liftable_no_essential: no-essential sequence violates (*) at nu=" +
                    std::to_string(nu) + " -- this contradicts the established algebra (bug)");
    }
    return no_essential;
}

/// The full Obus-Wewers hypothesis as used for exponents beyond 3:
/// (*) at every nu with 3 <= nu < e (vacuously true for e <= 3).
inline bool obus_wewers_hypothesis(const JumpSequence& s) {
    for (int nu = 3; nu < s.e(); ++nu)
        if (!star_condition(s, nu).holds) return false;
    return true;
}

}  // namespace aswkit
