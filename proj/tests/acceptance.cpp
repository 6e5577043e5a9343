// Acceptance suite: one line per criterion, exit nonzero on any failure.
//
// Every bound, tolerance and spot value is pinned here in code; the sweeps
// are exhaustive over their stated ranges and the sampled suites state their
// sample counts.

#include <chrono>
#include <cstdio>
#include <string>

#include "aswkit/oracle.hpp"
#include "aswkit/ow.hpp"
#include "aswkit/splitting.hpp"
#include "aswkit/sweep.hpp"

using namespace aswkit;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

std::string stats(const SweepOutcome& o, double secs) {
    std::string s = std::to_string(o.checked) + " checked, " + std::to_string(o.failures) +
                    " failures, " + std::to_string(secs).substr(0, 6) + "s";
    if (!o.first_counterexample.empty()) s += "; first: " + o.first_counterexample;
    return s;
}

}  // namespace

int main() {
    // 1. Witt correctness: exact ghost additivity over >= 10^3 integer-lift
    //    samples and wp additivity over >= 10^3 characteristic-p samples,
    //    p in {2,3,5}, e <= 4, under 60 s.
    {
        Timer t;
        SweepOutcome o = sweep_witt({2, 3, 5}, 4, 1000, 0xACCE97ull);
        double secs = t.seconds();
        report(1, "witt ghost + wp additivity", o.ok() && o.checked >= 1000 && secs < 60.0,
               stats(o, secs));
    }

    // 2. Combinatorial identity for ALL valid upper sequences, p in {2,3,5},
    //    e <= 4, iota_e <= 200; zero failures, under 300 s.
    {
        Timer t;
        SweepOutcome o = sweep_combinatorial_identity({2, 3, 5}, 4, 200);
        double secs = t.seconds();
        report(2, "combinatorial identity sweep", o.ok() && secs < 300.0, stats(o, secs));
    }

    // 3. Different conservation on the same sweep, with the hand ledgers
    //    p=3,(1,7): 34+18=52 and p=2,(1,5): 10+4=14.
    {
        Timer t;
        SweepOutcome o = sweep_different_conservation({2, 3, 5}, 4, 200);
        double secs = t.seconds();
        SplitPlan a = split_plan(JumpSequence::upper(3, {1, 7}));
        SplitPlan b = split_plan(JumpSequence::upper(2, {1, 5}));
        bool spots = a.branch_different == std::vector<int64_t>{34, 18} &&
                     a.special_different == 52 &&
                     b.branch_different == std::vector<int64_t>{10, 4} &&
                     b.special_different == 14;
        report(3, "different conservation sweep + spot ledgers", o.ok() && spots,
               stats(o, secs) + (spots ? "" : "; spot ledger mismatch"));
    }

    // 4. Every branch profile in every plan validates with no essential
    //    ramification.
    {
        Timer t;
        SweepOutcome o = sweep_no_essential_profiles({2, 3, 5}, 4, 200);
        report(4, "branch profiles valid, no essential jumps", o.ok(), stats(o, t.seconds()));
    }

    // 5. Herbrand round trip and the two different formulas, exact, full sweep.
    {
        Timer t;
        SweepOutcome o = sweep_herbrand_different({2, 3, 5}, 4, 200);
        report(5, "herbrand round trip + different agreement", o.ok(), stats(o, t.seconds()));
    }

    // 6. Oracle equivalence: p in {2,3}, m <= 9 prime to p, >= 20 random
    //    standard-form f per cell, default precision, under 120 s.
    {
        Timer t;
        SweepOutcome o = sweep_oracle({2, 3}, 9, 20, 0x0AC1Eull);
        double secs = t.seconds();
        report(6, "oracle jump/different equivalence", o.ok() && secs < 120.0, stats(o, secs));
    }

    // 7. Obus-Wewers implication: no-essential => (*) everywhere, exhaustive
    //    over p in {2,3,5,7}, e <= 4, iota_e <= 500; plus the explicit
    //    violated witness p=2, (3,11) -> m=3.
    {
        Timer t;
        SweepOutcome o = sweep_ow_implication({2, 3, 5, 7}, 4, 500);
        double secs = t.seconds();
        StarEntry w = star_condition(JumpSequence::upper(2, {3, 11}), 1);
        bool witness = !w.holds && w.witness.has_value() && *w.witness == 3;
        report(7, "no-essential implies (*) + explicit witness", o.ok() && witness,
               stats(o, secs) + (witness ? "" : "; witness m=3 not reproduced"));
    }

    // 8. (*) <=> (*)' for all swept nu with 1 < nu < e and iota_nu >= p^2.
    {
        Timer t;
        SweepOutcome o = sweep_ow_equivalence({2, 3, 5, 7}, 4, 500);
        report(8, "(*) equivalent to (*)' in the remark regime", o.ok(), stats(o, t.seconds()));
    }

    // 9. KG genus integral and >= 0 on the full sweep, with spot values
    //    g=0 at (p,m)=(2,1), g=1 at (3,2) and at p=2, iota=(1,2).
    {
        Timer t;
        SweepOutcome o = sweep_genus({2, 3, 5}, 4, 200);
        bool spots = kg_genus(JumpSequence::upper(2, {1})) == 0 &&
                     kg_genus(JumpSequence::upper(3, {2})) == 1 &&
                     kg_genus(JumpSequence::upper(2, {1, 2})) == 1;
        report(9, "KG genus integral, nonnegative + spot values", o.ok() && spots,
               stats(o, t.seconds()) + (spots ? "" : "; spot genus mismatch"));
    }

    std::printf("%s: %d criterion failure(s)\n", g_failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE OK",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
