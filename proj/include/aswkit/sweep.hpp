#pragma once

// Exhaustive desk-scale sweeps over valid upper jump sequences, plus the
// sampled Witt and oracle suites. These back both the CLI `sweep` verb and
// the acceptance binary; each suite returns counts and the first
// counterexample payload on failure.

#include <cstdint>
#include <functional>
#include <sstream>

#include "aswkit/oracle.hpp"
#include "aswkit/ow.hpp"
#include "aswkit/splitting.hpp"
#include "aswkit/witt.hpp"

namespace aswkit {

/// Calls fn for every valid upper sequence with this p, exact length e and
/// iota_e <= max_jump.
template <typename Fn>
void enumerate_upper_sequences(int64_t p, int e, int64_t max_jump, Fn&& fn) {
    std::vector<int64_t> seq(static_cast<size_t>(e));
    auto rec = [&](auto&& self, int level) -> void {
        if (level == e) {
            fn(const_cast<const std::vector<int64_t>&>(seq));
            return;
        }
        if (level == 0) {
            for (int64_t v = 1; v <= max_jump; ++v) {
                if (v % p == 0) continue;
                seq[0] = v;
                self(self, 1);
            }
            return;
        }
        int64_t base = p * seq[static_cast<size_t>(level - 1)];
        if (base > max_jump) return;
        seq[static_cast<size_t>(level)] = base;  // equality branch
        self(self, level + 1);
        for (int64_t v = base + 1; v <= max_jump; ++v) {
            if (v % p == 0) continue;
            seq[static_cast<size_t>(level)] = v;
            self(self, level + 1);
        }
    };
    rec(rec, 0);
}

struct SweepOutcome {
    std::string name;
    uint64_t checked = 0;
    uint64_t failures = 0;
    std::string first_counterexample;

    bool ok() const { return failures == 0 && checked > 0; }
};

namespace sweepdetail {

inline Poly random_sample_poly(const Field& k, int64_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> dd(0, max_deg);
    int64_t d = dd(rng);
    Poly f;
    f.c.assign(static_cast<size_t>(d) + 1, k.zero());
    for (auto& c : f.c) c = k.random_elem(rng);
    poly_trim(k, f);
    return f;
}

inline std::string seq_str(int64_t p, const std::vector<int64_t>& jumps) {
    std::ostringstream os;
    os << "p=" << p << " jumps=(";
    for (size_t i = 0; i < jumps.size(); ++i) os << (i ? "," : "") << jumps[i];
    os << ")";
    return os.str();
}

template <typename Check>
SweepOutcome run_plan_sweep(std::string name, const std::vector<int64_t>& primes, int max_e,
                            int64_t max_jump, Check&& check) {
    SweepOutcome out;
    out.name = std::move(name);
    for (int64_t p : primes) {
        for (int e = 1; e <= max_e; ++e) {
            enumerate_upper_sequences(p, e, max_jump, [&](const std::vector<int64_t>& jumps) {
                ++out.checked;
                std::string why;
                if (!check(p, jumps, why)) {
                    ++out.failures;
                    if (out.first_counterexample.empty())
                        out.first_counterexample = seq_str(p, jumps) + ": " + why;
                }
            });
        }
    }
    return out;
}

}  // namespace sweepdetail

/// Lemma-combinlemma identity (and its rho < r_1 extension) on every plan.
inline SweepOutcome sweep_combinatorial_identity(const std::vector<int64_t>& primes, int max_e,
                                                 int64_t max_jump) {
    return sweepdetail::run_plan_sweep(
        "combinatorial-identity", primes, max_e, max_jump,
        [](int64_t p, const std::vector<int64_t>& jumps, std::string& why) {
            SplitPlan plan = split_plan(JumpSequence::upper(p, jumps));
            if (!plan.verification.combin_identity_ok || !plan.verification.combin_prefix_ok) {
                why = plan.verification.detail;
                return false;
            }
            return true;
        });
}

/// Different conservation: sum of branch differents equals deg D_(L|K).
inline SweepOutcome sweep_different_conservation(const std::vector<int64_t>& primes, int max_e,
                                                 int64_t max_jump) {
    return sweepdetail::run_plan_sweep(
        "different-conservation", primes, max_e, max_jump,
        [](int64_t p, const std::vector<int64_t>& jumps, std::string& why) {
            SplitPlan plan = split_plan(JumpSequence::upper(p, jumps));
            if (!plan.verification.kato_ledger_ok) {
                why = plan.verification.detail;
                return false;
            }
            return true;
        });
}

/// Every branch profile valid and free of essential ramification, with the
/// remaining structural clauses (monotone e_mu, recursions) along for free.
inline SweepOutcome sweep_no_essential_profiles(const std::vector<int64_t>& primes, int max_e,
                                                int64_t max_jump) {
    return sweepdetail::run_plan_sweep(
        "no-essential-profiles", primes, max_e, max_jump,
        [](int64_t p, const std::vector<int64_t>& jumps, std::string& why) {
            SplitPlan plan = split_plan(JumpSequence::upper(p, jumps));
            if (!plan.verification.profiles_valid_ok || !plan.verification.emu_monotone_ok ||
                !plan.verification.recursion_ok) {
                why = plan.verification.detail;
                return false;
            }
            if ((plan.N() == 1) != !plan.dec.has_essential()) {
                why = "N = 1 iff no essential ramification violated";
                return false;
            }
            return true;
        });
}

/// Herbrand round trip plus agreement of the two different formulas.
inline SweepOutcome sweep_herbrand_different(const std::vector<int64_t>& primes, int max_e,
                                             int64_t max_jump) {
    return sweepdetail::run_plan_sweep(
        "herbrand-different", primes, max_e, max_jump,
        [](int64_t p, const std::vector<int64_t>& jumps, std::string& why) {
            JumpSequence s = JumpSequence::upper(p, jumps);
            JumpSequence low = herbrand(s, JumpConvention::lower);
            if (!(herbrand(low, JumpConvention::upper) == s)) {
                why = "herbrand round trip not the identity";
                return false;
            }
            for (size_t i = 1; i < low.jumps().size(); ++i)
                if (low.jumps()[i] <= low.jumps()[i - 1]) {
                    why = "lower sequence not strictly increasing";
                    return false;
                }
            if (different_degree(s) != different_degree(low)) {
                why = "different formulas disagree";
                return false;
            }
            return true;
        });
}

/// KG genus integral and nonnegative (kg_genus throws otherwise).
inline SweepOutcome sweep_genus(const std::vector<int64_t>& primes, int max_e, int64_t max_jump) {
    return sweepdetail::run_plan_sweep(
        "kg-genus", primes, max_e, max_jump,
        [](int64_t p, const std::vector<int64_t>& jumps, std::string& why) {
            try {
                int64_t d = different_degree(JumpSequence::upper(p, jumps));
                if (d % 2 != 0) {
                    why = "odd different degree";
                    return false;
                }
                (void)kg_genus(JumpSequence::upper(p, jumps));
            } catch (const std::exception& ex) {
                why = ex.what();
                return false;
            }
            return true;
        });
}

/// Key Lemma 2 implication: no essential ramification forces (*) to hold at
/// every nu.
inline SweepOutcome sweep_ow_implication(const std::vector<int64_t>& primes, int max_e,
                                         int64_t max_jump) {
    return sweepdetail::run_plan_sweep(
        "ow-implication", primes, max_e, max_jump,
        [](int64_t p, const std::vector<int64_t>& jumps, std::string& why) {
            JumpSequence s = JumpSequence::upper(p, jumps);
            if (essential_decomposition(s).has_essential()) return true;
            for (int nu = 1; nu < s.e(); ++nu) {
                StarEntry e = star_condition(s, nu);
                if (!e.holds) {
                    why = "(*) violated at nu=" + std::to_string(nu) +
                          " with witness m=" + std::to_string(*e.witness);
                    return false;
                }
            }
            return true;
        });
}

/// (*) <=> (*)' wherever the remark claims it: 1 < nu < e and iota_nu >= p^2.
inline SweepOutcome sweep_ow_equivalence(const std::vector<int64_t>& primes, int max_e,
                                         int64_t max_jump) {
    return sweepdetail::run_plan_sweep(
        "ow-equivalence", primes, max_e, max_jump,
        [](int64_t p, const std::vector<int64_t>& jumps, std::string& why) {
            JumpSequence s = JumpSequence::upper(p, jumps);
            for (int nu = 2; nu < s.e(); ++nu) {
                StarPrimeEntry sp = star_prime_condition(s, nu);
                if (!sp.in_remark_regime) continue;
                if (star_condition(s, nu).holds != sp.holds) {
                    why = "(*) and (*)' disagree at nu=" + std::to_string(nu);
                    return false;
                }
            }
            return true;
        });
}

/// Ghost-map additivity over integer lifts plus wp additivity over
/// characteristic-p polynomial samples.
inline SweepOutcome sweep_witt(const std::vector<int64_t>& primes, int max_e, int samples,
                               uint64_t seed) {
    SweepOutcome out;
    out.name = "witt";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> d(-30, 30);
    int per_cell = samples / static_cast<int>(primes.size() * static_cast<size_t>(max_e)) + 1;
    for (int64_t p : primes) {
        Field k(p);
        for (int e = 1; e <= max_e; ++e) {
            // degree budget shrinks as the universal polynomials grow
            int64_t max_deg = (p >= 5 && e >= 4) ? 1 : 3;
            for (int t = 0; t < per_cell; ++t) {
                ++out.checked;
                std::vector<mpz_class> x(static_cast<size_t>(e)), y(static_cast<size_t>(e));
                for (auto& v : x) v = d(rng);
                for (auto& v : y) v = d(rng);
                auto s = witt_add_z(p, x, y);
                auto gs = ghost_z(p, s), gx = ghost_z(p, x), gy = ghost_z(p, y);
                bool ok = true;
                for (int i = 0; i < e; ++i)
                    ok = ok && gs[static_cast<size_t>(i)] ==
                                   gx[static_cast<size_t>(i)] + gy[static_cast<size_t>(i)];
                WittVector a, b;
                for (int i = 0; i < e; ++i) {
                    a.coords.push_back(sweepdetail::random_sample_poly(k, max_deg, rng));
                    b.coords.push_back(sweepdetail::random_sample_poly(k, max_deg, rng));
                }
                ok = ok && witt_eq(wp(k, witt_add(k, a, b)), witt_add(k, wp(k, a), wp(k, b)));
                if (!ok) {
                    ++out.failures;
                    if (out.first_counterexample.empty())
                        out.first_counterexample = "p=" + std::to_string(p) +
                                                   " e=" + std::to_string(e) +
                                                   " sample=" + std::to_string(t);
                }
            }
        }
    }
    return out;
}

/// Oracle equivalence: measured jump and different match the closed forms on
/// random standard-form inputs, with residual and invariance checks.
inline SweepOutcome sweep_oracle(const std::vector<int64_t>& primes, int64_t max_m, int per_cell,
                                 uint64_t seed) {
    SweepOutcome out;
    out.name = "oracle";
    std::mt19937_64 rng(seed);
    for (int64_t p : primes) {
        Field k(p);
        for (int64_t m = 1; m <= max_m; ++m) {
            if (m % p == 0) continue;
            for (int t = 0; t < per_cell; ++t) {
                ++out.checked;
                Poly f;
                f.c.assign(static_cast<size_t>(m) + 1, k.zero());
                for (int64_t j = 1; j <= m; ++j)
                    if (j % p != 0) f.c[static_cast<size_t>(j)] = k.random_elem(rng);
                f.c[static_cast<size_t>(m)] = k.random_nonzero(rng);
                std::string why;
                try {
                    OracleResult r = oracle_e1(k, f);
                    if (r.jump != m) why = "jump " + std::to_string(r.jump);
                    if (r.different != (m + 1) * (p - 1))
                        why += " different " + std::to_string(r.different);
                    if (!r.consistent) why += " residuals below precision";
                    if (!r.rescale_invariant) why += " rescale variance";
                    int64_t formula =
                        different_degree(JumpSequence::upper(p, {m}));
                    if (r.different != formula) why += " formula mismatch";
                } catch (const std::exception& ex) {
                    why = ex.what();
                }
                if (!why.empty()) {
                    ++out.failures;
                    if (out.first_counterexample.empty())
                        out.first_counterexample =
                            "p=" + std::to_string(p) + " m=" + std::to_string(m) + ": " + why;
                }
            }
        }
    }
    return out;
}

}  // namespace aswkit
