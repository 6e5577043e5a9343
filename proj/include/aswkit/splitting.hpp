#pragma once

// The essential-ramification splitting planner.
//
// From an upper jump profile iota it builds the N x e theta matrix
//   row 1:            theta_(1,rho) = p theta_(1,rho-1) + eps_rho
//   block i, rows d_(i-1) < mu <= d_i:
//                     theta_(mu,rho) = 0 for rho < r_i,
//                     theta_(mu,rho) = p theta_(mu,rho-1) + p - 1 otherwise
// (single row = iota when there is no essential jump), then derives the
// per-branch-point jump profiles, each free of essential ramification, and
// the different ledger whose total matches deg D of the special fiber. The
// verification report re-checks every claimed identity from scratch.

#include <cstdint>
#include <string>

#include "aswkit/asw.hpp"
#include "aswkit/ramification.hpp"

namespace aswkit {

struct ThetaMatrix {
    int64_t p = 0;
    int e = 0;
    int64_t N = 1;
    std::vector<std::vector<int64_t>> rows;  // rows[mu][rho], 0-based
};

inline ThetaMatrix theta_matrix(const JumpSequence& s) {
    if (s.convention() != JumpConvention::upper)
        throw std::invalid_argument("theta_matrix: upper convention required");
    EssentialDecomposition dec = essential_decomposition(s);
    ThetaMatrix t;
    t.p = s.p();
    t.e = s.e();
    t.N = dec.N;
    t.rows.assign(static_cast<size_t>(dec.N), std::vector<int64_t>(s.e(), 0));
    if (dec.e0() == 0) {
        t.rows[0] = s.jumps();
        return t;
    }
    int64_t prev = 0;  // theta_(mu,0) = 0
    for (int rho = 1; rho <= s.e(); ++rho) {
        t.rows[0][static_cast<size_t>(rho - 1)] =
            s.p() * prev + dec.eps[static_cast<size_t>(rho - 1)];
        prev = t.rows[0][static_cast<size_t>(rho - 1)];
    }
    for (int i = 1; i <= dec.e0(); ++i) {
        int ri = dec.r_at(i);
        for (int64_t mu = dec.d[static_cast<size_t>(i - 1)] + 1;
             mu <= dec.d[static_cast<size_t>(i)]; ++mu) {
            auto& row = t.rows[static_cast<size_t>(mu - 1)];
            int64_t pv = 0;
            for (int rho = ri; rho <= s.e(); ++rho) {
                row[static_cast<size_t>(rho - 1)] = s.p() * pv + s.p() - 1;
                pv = row[static_cast<size_t>(rho - 1)];
            }
        }
    }
    return t;
}

struct PlanVerifyReport {
    bool ok = false;
    bool combin_identity_ok = false;  // iota_rho + 1 = sum_(mu<=d_i) (theta+1), lemma range
    bool combin_prefix_ok = false;    // same identity for rho < r_1 with d_0 = 1
    bool kato_ledger_ok = false;      // sum D_mu = deg D_(L|K)
    bool profiles_valid_ok = false;   // every branch profile valid, no essential jumps
    bool emu_monotone_ok = false;     // (e_mu) non-increasing
    bool recursion_ok = false;        // Key-Lemma recursions on the stripped profiles
    std::string detail;               // first failure, with both sides
};

struct SplitPlan {
    JumpSequence input;
    EssentialDecomposition dec;
    ThetaMatrix theta;
    std::vector<JumpSequence> branch_profiles;  // mu = 1..N, lengths e_mu
    std::vector<int> block_of_branch;           // i for mu (0 for mu = 1)
    std::vector<int64_t> branch_different;      // deg D_mu
    int64_t special_different = 0;              // deg D_(L|K)
    PlanVerifyReport verification;

    int64_t N() const { return theta.N; }
};

inline PlanVerifyReport verify_plan(const SplitPlan& plan);

inline SplitPlan split_plan(const JumpSequence& s) {
    SplitPlan plan{s, essential_decomposition(s), theta_matrix(s), {}, {}, {}, 0, {}};
    const int64_t p = s.p();
    const int e = s.e();
    plan.special_different = different_degree(s);

    for (int64_t mu = 1; mu <= plan.theta.N; ++mu) {
        int block = 0;
        int start_rho = 1;  // row 1 spans every column
        if (mu > 1) {
            while (plan.dec.d[static_cast<size_t>(block)] < mu) ++block;
            start_rho = plan.dec.r_at(block);
        }
        std::vector<int64_t> profile(
            plan.theta.rows[static_cast<size_t>(mu - 1)].begin() + (start_rho - 1),
            plan.theta.rows[static_cast<size_t>(mu - 1)].end());
        plan.branch_profiles.push_back(JumpSequence::upper(p, profile));
        plan.block_of_branch.push_back(mu == 1 ? 0 : block);
        // deg D_mu = p^(r_i - 1) * sum (iota_(mu,nu) + 1)(p^nu - p^(nu-1))
        int64_t scale = 1;
        for (int i = 1; i < start_rho; ++i) scale *= p;
        int64_t dmu = scale * different_degree(plan.branch_profiles.back());
        // cross-check against the theta-indexed form of the same sum
        int64_t direct = 0, prho = 1;
        for (int rho = 1; rho <= e; ++rho) {
            int64_t next = prho * p;
            if (rho >= start_rho)
                direct += (plan.theta.rows[static_cast<size_t>(mu - 1)][static_cast<size_t>(
                               rho - 1)] +
                           1) *
                          (next - prho);
            prho = next;
        }
        if (direct != dmu)
            throw std::logic_error("split_plan: the two D_mu expressions disagree (bug)");
        plan.branch_different.push_back(dmu);
    }
    plan.verification = verify_plan(plan);
    return plan;
}

inline PlanVerifyReport verify_plan(const SplitPlan& plan) {
    PlanVerifyReport rep;
    rep.combin_identity_ok = rep.combin_prefix_ok = rep.kato_ledger_ok = true;
    rep.profiles_valid_ok = rep.emu_monotone_ok = rep.recursion_ok = true;
    const JumpSequence& s = plan.input;
    const EssentialDecomposition& dec = plan.dec;
    const ThetaMatrix& th = plan.theta;
    const int64_t p = s.p();
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (rep.detail.empty()) rep.detail = what;
    };

    // (a) the combinatorial identity, lemma range and the rho < r_1 extension
    for (int rho = 1; rho <= s.e(); ++rho) {
        int i = 0;
        while (i < dec.e0() && dec.r_at(i + 1) <= rho) ++i;
        int64_t di = dec.d[static_cast<size_t>(i)];
        int64_t sum = 0;
        for (int64_t mu = 1; mu <= di; ++mu)
            sum += th.rows[static_cast<size_t>(mu - 1)][static_cast<size_t>(rho - 1)] + 1;
        if (sum != s.jump(rho) + 1) {
            std::string what = "combinatorial identity at rho=" + std::to_string(rho) + ": " +
                               std::to_string(s.jump(rho) + 1) + " vs " + std::to_string(sum);
            fail(i == 0 ? rep.combin_prefix_ok : rep.combin_identity_ok, what);
        }
    }

    // (b) the Kato different ledger
    int64_t total = 0;
    for (int64_t d : plan.branch_different) total += d;
    if (total != plan.special_different)
        fail(rep.kato_ledger_ok, "different ledger: " + std::to_string(plan.special_different) +
                                     " vs sum " + std::to_string(total));

    // (c) every branch profile valid with no essential ramification
    for (size_t mu = 0; mu < plan.branch_profiles.size(); ++mu) {
        const JumpSequence& prof = plan.branch_profiles[mu];
        JumpCheck c = validate_upper_jumps(p, prof.jumps());
        if (!c.ok) {
            fail(rep.profiles_valid_ok,
                 "branch profile mu=" + std::to_string(mu + 1) + " invalid: " + c.detail);
            continue;
        }
        if (essential_decomposition(prof).has_essential())
            fail(rep.profiles_valid_ok,
                 "branch profile mu=" + std::to_string(mu + 1) + " has an essential jump");
    }

    // (d) (e_mu) non-increasing
    for (size_t mu = 1; mu < plan.branch_profiles.size(); ++mu)
        if (plan.branch_profiles[mu].e() > plan.branch_profiles[mu - 1].e())
            fail(rep.emu_monotone_ok, "e_mu increases at mu=" + std::to_string(mu + 1));

    // (e) the Key-Lemma recursions on the stripped profiles
    for (size_t mu = 0; mu < plan.branch_profiles.size(); ++mu) {
        const auto& prof = plan.branch_profiles[mu].jumps();
        int64_t prev = 0;
        for (size_t nu = 0; nu < prof.size(); ++nu) {
            int64_t expect;
            if (mu == 0) {
                expect = p * prev + dec.eps[nu];  // profile 1 has length e
            } else {
                expect = p * prev + p - 1;
            }
            if (prof[nu] != expect) {
                fail(rep.recursion_ok, "profile recursion mu=" + std::to_string(mu + 1) +
                                           " nu=" + std::to_string(nu + 1) + ": " +
                                           std::to_string(prof[nu]) + " vs " +
                                           std::to_string(expect));
                break;
            }
            prev = prof[nu];
        }
    }

    rep.ok = rep.combin_identity_ok && rep.combin_prefix_ok && rep.kato_ledger_ok &&
             rep.profiles_valid_ok && rep.emu_monotone_ok && rep.recursion_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// Materialization: factor the normalized generator along the plan
// ---------------------------------------------------------------------------

struct MaterializedGenerator {
    Embedding emb;                           // base field -> common splitting field
    int ext_multiplier = 1;
    std::vector<std::vector<Poly>> factors;  // factors[rho][mu] = p_(mu,rho) over emb.to
    std::vector<FieldElem> branch_scalars;   // x_mu = c_mu * pi with distinct c_mu
    uint64_t seed = 0;
};

/// Splits each coordinate p_rho of a normalized separable generator into
/// factors of the prescribed degrees: deg p_(1,rho) = theta_(1,rho) and
/// deg p_(mu,rho) = theta_(mu,rho) + 1 for mu > 1 (the factor is 1 where
/// theta vanishes). Root groups are a seeded shuffle; the product of the
/// factors reproduces p_rho in the splitting field.
inline MaterializedGenerator materialize(const AswClass& gen, const SplitPlan& plan,
                                         uint64_t seed, int max_total_degree = 24) {
    const Field& k = gen.field;
    if (!gen.flags.normalized || !gen.flags.separable)
        throw std::invalid_argument("materialize: generator must be normalized and separable");
    JumpSequence js = upper_jumps(gen);
    if (!(js == plan.input))
        throw std::invalid_argument("materialize: generator jumps differ from the plan input");
    const int e = plan.input.e();
    const int64_t p = k.p();
    const int64_t N = plan.N();

    MaterializedGenerator out;
    out.seed = seed;

    // one common splitting field for all coordinates
    int m = 1;
    for (auto& coord : gen.gen.coords) {
        auto degs = poly_factor_degrees_squarefree(k, coord);
        for (int d : degs) m = static_cast<int>(std::lcm(m, d));
    }
    // room for N distinct branch scalars as well
    auto field_size_at = [&](int mult) {
        double sz = 1;
        for (int i = 0; i < k.n() * mult; ++i) sz *= static_cast<double>(p);
        return sz;
    };
    int mult = m;
    while (field_size_at(mult) < static_cast<double>(N) + 1 && k.n() * mult <= max_total_degree)
        mult += m;
    if (k.n() * mult > max_total_degree)
        throw std::domain_error("materialize: required splitting field degree " +
                                std::to_string(k.n() * mult) + " exceeds bound " +
                                std::to_string(max_total_degree));
    out.emb = extend_field(k, mult);
    out.ext_multiplier = mult;
    const Field& K = out.emb.to;

    std::mt19937_64 rng(seed);
    out.factors.assign(static_cast<size_t>(e), {});
    for (int rho = 1; rho <= e; ++rho) {
        const Poly& prho = gen.gen.coords[static_cast<size_t>(rho - 1)];
        Poly mapped = out.emb.map(prho);
        auto& slot = out.factors[static_cast<size_t>(rho - 1)];
        if (N == 1) {
            slot.push_back(mapped);
            continue;
        }
        auto roots = poly_roots_in_field(K, mapped, rng);
        std::vector<FieldElem> flat;
        for (auto& [r, mult_r] : roots) {
            if (mult_r != 1)
                throw std::logic_error("materialize: repeated root of a separable coordinate");
            flat.push_back(r);
        }
        if (static_cast<int64_t>(flat.size()) != js.jump(rho))
            throw std::logic_error("materialize: coordinate failed to split fully (bug)");
        std::shuffle(flat.begin(), flat.end(), rng);

        size_t cursor = 0;
        for (int64_t mu = 1; mu <= N; ++mu) {
            int64_t theta = plan.theta.rows[static_cast<size_t>(mu - 1)][static_cast<size_t>(
                rho - 1)];
            int64_t want = (mu == 1) ? theta : (theta == 0 ? 0 : theta + 1);
            if (want == 0) {
                slot.push_back(poly_from_ints(K, {1}));
                continue;
            }
            if (cursor + static_cast<size_t>(want) > flat.size())
                throw std::logic_error("materialize: degree bookkeeping mismatch (unreachable "
                                       "for verified plans)");
            Poly f = poly_from_ints(K, {1});
            for (int64_t i = 0; i < want; ++i) {
                Poly lin = poly_add(K, poly_from_ints(K, {0, 1}),
                                    poly_const(K, K.neg(flat[cursor++])));
                f = poly_mul(K, f, lin);
            }
            if (mu == 1) f = poly_scalar(K, out.emb(poly_lead(k, prho)), f);
            slot.push_back(f);
        }
        if (cursor != flat.size())
            throw std::logic_error("materialize: leftover roots (unreachable for verified "
                                   "plans)");
        // reconstruction: the factors multiply back to p_rho
        Poly prod = poly_from_ints(K, {1});
        for (auto& f : slot) prod = poly_mul(K, prod, f);
        if (!poly_eq(prod, mapped))
            throw std::logic_error("materialize: factor product does not reproduce p_rho");
    }

    // distinct branch scalars c_mu (x_mu = c_mu * pi in the pi-adic disc)
    std::vector<FieldElem> chosen;
    while (static_cast<int64_t>(chosen.size()) < N) {
        FieldElem c = K.random_elem(rng);
        bool dup = false;
        for (auto& prev : chosen) dup = dup || prev == c;
        if (!dup) chosen.push_back(c);
    }
    out.branch_scalars = std::move(chosen);
    return out;
}

}  // namespace aswkit
