#include <catch2/catch_amalgamated.hpp>

#include "aswkit/witt.hpp"
#include "helpers.hpp"

using namespace aswkit;
using namespace testutil;

namespace {

wittdetail::MPoly mk_mpoly(const std::vector<std::pair<std::vector<uint32_t>, int64_t>>& terms) {
    wittdetail::MPoly p;
    for (auto& [e, c] : terms) p.emplace(e, c);
    return p;
}

WittVector mkw(const Field& k, const std::vector<std::vector<int64_t>>& coords) {
    WittVector w;
    for (auto& c : coords) w.coords.push_back(poly_from_ints(k, c));
    return w;
}

WittVector random_witt(const Field& k, int e, int64_t max_deg, std::mt19937_64& rng) {
    WittVector w;
    for (int i = 0; i < e; ++i) w.coords.push_back(random_poly(k, max_deg, rng));
    return w;
}

}  // namespace

TEST_CASE("universal addition polynomials, hand-expanded cases") {
    // p=2: S_1 = X_1 + Y_1 - X_0 Y_0
    const auto& U2 = witt_universal_polys(2, 2);
    CHECK(U2.S[1] == mk_mpoly({{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}, {{1, 0, 1, 0}, -1}}));
    // p=3: S_1 = X_1 + Y_1 - X_0^2 Y_0 - X_0 Y_0^2
    const auto& U3 = witt_universal_polys(3, 2);
    CHECK(U3.S[1] == mk_mpoly({{{0, 1, 0, 0}, 1},
                               {{0, 0, 0, 1}, 1},
                               {{2, 0, 1, 0}, -1},
                               {{1, 0, 2, 0}, -1}}));
    // p=2: I_1 = -X_0^2 - X_1
    CHECK(U2.I[1] == mk_mpoly({{{2, 0, 0, 0}, -1}, {{0, 1, 0, 0}, -1}}));
    // S_0 = X_0 + Y_0, I_0 = -X_0 always
    CHECK(U2.S[0] == mk_mpoly({{{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}}));
    CHECK(U3.I[0] == mk_mpoly({{{1, 0, 0, 0}, -1}}));
}

TEST_CASE("universal polynomial guard rails") {
    CHECK_THROWS_AS(witt_universal_polys(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(witt_universal_polys(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(witt_universal_polys(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(witt_universal_polys(97, 4), std::invalid_argument);
    CHECK_NOTHROW(witt_universal_polys(2, 6, 6));  // raised cap
}

TEST_CASE("ghost component examples") {
    auto g1 = ghost_z(2, {1, 0});
    CHECK(g1 == std::vector<mpz_class>{1, 1});
    auto g2 = ghost_z(2, {1, 1});
    CHECK(g2 == std::vector<mpz_class>{1, 3});
    auto g3 = ghost_z(3, {2, 1});
    CHECK(g3 == std::vector<mpz_class>{2, 11});
}

TEST_CASE("ghost map is additive on integer lifts") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int64_t> d(-20, 20);
    for (int64_t p : {2, 3, 5}) {
        for (int e = 1; e <= 4; ++e) {
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<mpz_class> x(static_cast<size_t>(e)), y(static_cast<size_t>(e));
                for (auto& v : x) v = d(rng);
                for (auto& v : y) v = d(rng);
                auto s = witt_add_z(p, x, y);
                auto gs = ghost_z(p, s), gx = ghost_z(p, x), gy = ghost_z(p, y);
                for (int i = 0; i < e; ++i)
                    CHECK(gs[static_cast<size_t>(i)] ==
                          gx[static_cast<size_t>(i)] + gy[static_cast<size_t>(i)]);
                auto n = witt_neg_z(p, x);
                auto gn = ghost_z(p, n);
                for (int i = 0; i < e; ++i)
                    CHECK(gn[static_cast<size_t>(i)] == -gx[static_cast<size_t>(i)]);
            }
        }
    }
}

TEST_CASE("witt_add examples in characteristic p") {
    Field k2 = F2();
    // x + 0 = x
    std::mt19937_64 rng(22);
    WittVector x = random_witt(k2, 3, 4, rng);
    CHECK(witt_eq(witt_add(k2, x, witt_zero(3)), x));
    // (u,0) + (u,0) = (0, u^2): the carry X_1 + Y_1 - X_0 Y_0 = -u^2 = u^2
    WittVector u0 = mkw(k2, {{0, 1}, {}});
    WittVector sum = witt_add(k2, u0, u0);
    CHECK(witt_eq(sum, mkw(k2, {{}, {0, 0, 1}})));
    // mismatched shapes
    CHECK_THROWS_AS(witt_add(k2, u0, witt_zero(3)), std::invalid_argument);
}

TEST_CASE("witt_neg examples") {
    Field k3 = F3();
    CHECK(witt_eq(witt_neg(k3, witt_zero(2)), witt_zero(2)));
    // odd p: negation is coordinate-wise
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        WittVector x = random_witt(k3, 3, 3, rng);
        WittVector n = witt_neg(k3, x);
        for (int i = 0; i < 3; ++i)
            CHECK(poly_eq(n.coords[static_cast<size_t>(i)],
                          poly_neg(k3, x.coords[static_cast<size_t>(i)])));
    }
    // p=2: neg(u, u^3) = (u, u^2 + u^3) via I_1 = -X_0^2 - X_1
    Field k2 = F2();
    WittVector x = mkw(k2, {{0, 1}, {0, 0, 0, 1}});
    CHECK(witt_eq(witt_neg(k2, x), mkw(k2, {{0, 1}, {0, 0, 1, 1}})));
}

TEST_CASE("wp examples") {
    Field k2 = F2();
    CHECK(witt_eq(wp(k2, witt_zero(2)), witt_zero(2)));
    // e=1: wp((u)) = (u^2 + u)  [= u^2 - u in characteristic 2]
    WittVector u1;
    u1.coords.push_back(poly_from_ints(k2, {0, 1}));
    CHECK(witt_eq(wp(k2, u1), mkw(k2, {{0, 1, 1}})));
    // e=2: wp((u, 0)) = (u^2 + u, u^3 + u^2)
    WittVector x = mkw(k2, {{0, 1}, {}});
    CHECK(witt_eq(wp(k2, x), mkw(k2, {{0, 1, 1}, {0, 0, 1, 1}})));
}

TEST_CASE("witt ring laws on random polynomial samples") {
    std::mt19937_64 rng(24);
    struct Cell { int64_t p; int n; int e; };
    for (auto [p, n, e] : {Cell{2, 1, 4}, Cell{2, 2, 3}, Cell{3, 1, 4}, Cell{3, 2, 2},
                           Cell{5, 1, 3}}) {
        Field k = (n == 1) ? Field(p)
                           : (p == 2 ? Field(2, {1, 1, 1}) : Field(3, {1, 0, 1}));
        for (int trial = 0; trial < 6; ++trial) {
            WittVector x = random_witt(k, e, 3, rng);
            WittVector y = random_witt(k, e, 3, rng);
            WittVector z = random_witt(k, e, 3, rng);
            CHECK(witt_eq(witt_add(k, x, y), witt_add(k, y, x)));
            CHECK(witt_eq(witt_add(k, witt_add(k, x, y), z),
                          witt_add(k, x, witt_add(k, y, z))));
            CHECK(witt_is_zero(witt_add(k, x, witt_neg(k, x))));
            // wp is additive: Frobenius is a ring endomorphism in char p
            CHECK(witt_eq(wp(k, witt_add(k, x, y)), witt_add(k, wp(k, x), wp(k, y))));
        }
    }
}

TEST_CASE("Fact-2 degree bounds for single-slot perturbations") {
    // The degree bound in part c) needs the geometric profile
    // deg h_(a+1) >= p deg h_a that the normalization construction supplies
    // (deg h_rho = iota_(rho-1)); for arbitrary profiles the cross terms of
    // the Witt sum can exceed it. Sample random instances from that class.
    std::mt19937_64 rng(25);
    for (int64_t p : {2, 3}) {
        Field k(p);
        const int e = 4;
        for (int trial = 0; trial < 30; ++trial) {
            WittVector c = witt_zero(e);
            int64_t d = static_cast<int64_t>(rng() % 3);
            for (int i = 0; i < e; ++i) {
                Poly f;
                f.c.assign(static_cast<size_t>(d) + 1, k.zero());
                for (auto& x : f.c) x = k.random_elem(rng);
                f.c.back() = k.random_nonzero(rng);
                c.coords[static_cast<size_t>(i)] = f;
                d = p * d + static_cast<int64_t>(rng() % 3);
            }
            Poly h = random_poly(k, 4, rng);
            int slot = 1 + static_cast<int>(rng() % e);
            WittVector tilde = witt_add(k, c, witt_single_slot(e, slot, h));
            for (int j = 1; j <= e; ++j) {
                const Poly& before = c.coords[static_cast<size_t>(j - 1)];
                const Poly& after = tilde.coords[static_cast<size_t>(j - 1)];
                if (j < slot) {
                    CHECK(poly_eq(after, before));
                } else if (j == slot) {
                    CHECK(poly_eq(after, poly_add(k, before, h)));
                } else {
                    auto da = poly_deg(after);
                    if (!da.has_value()) continue;
                    int64_t bound = -1;
                    if (auto db = poly_deg(before)) bound = std::max(bound, *db);
                    if (auto dh = poly_deg(h)) {
                        int64_t pw = 1;
                        for (int i = 0; i < j - slot; ++i) pw *= p;
                        bound = std::max(bound, pw * *dh);
                    }
                    CHECK(*da <= bound);
                }
            }
        }
    }
}
