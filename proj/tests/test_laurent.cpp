#include <catch2/catch_amalgamated.hpp>

#include "aswkit/laurent.hpp"
#include "helpers.hpp"

using namespace aswkit;
using namespace testutil;

namespace {

LaurentSeries mk(const Field& k, int64_t lo, const std::vector<int64_t>& cs,
                 int64_t trust = kLaurentExact) {
    LaurentSeries x;
    x.lo = lo;
    x.trust = trust;
    for (auto v : cs) x.c.push_back(k.from_int(v));
    ls_normalize(k, x);
    return x;
}

}  // namespace

TEST_CASE("window arithmetic tracks the minimum justified precision") {
    Field k = F3();
    LaurentSeries a = mk(k, -1, {1, 2}, 5);   // s^-1 + 2 + O(s^5)
    LaurentSeries b = mk(k, 0, {1}, 3);       // 1 + O(s^3)
    LaurentSeries s = ls_add(k, a, b);
    CHECK(s.hi() == 3);
    CHECK(*ls_val(s) == -1);
    LaurentSeries m = ls_mul(k, a, b);
    // hi = min(val(a)+hi(b), val(b)+hi(a)) = min(-1+3, 0+5) = 2
    CHECK(m.hi() == 2);
    CHECK(*ls_val(m) == -1);
}

TEST_CASE("subtraction collapsing to zero keeps the trust bound") {
    Field k = F2();
    LaurentSeries a = mk(k, 0, {1, 1}, 6);
    LaurentSeries d = ls_sub(k, a, a);
    CHECK(ls_is_zero(d));
    CHECK(d.hi() == 6);
    CHECK(!ls_val(d).has_value());
}

TEST_CASE("inverse multiplies back to one within the window") {
    std::mt19937_64 rng(3);
    for (const Field& k : {F2(), F3(), F5()}) {
        for (int trial = 0; trial < 20; ++trial) {
            LaurentSeries x;
            x.lo = static_cast<int64_t>(rng() % 7) - 3;
            x.c.resize(12);
            for (auto& c : x.c) c = k.random_elem(rng);
            x.c[0] = k.random_nonzero(rng);
            x.trust = x.lo + 12;
            LaurentSeries prod = ls_mul(k, x, ls_inv(k, x));
            LaurentSeries one = ls_monomial(k, k.one(), 0);
            LaurentSeries diff = ls_sub(k, prod, one);
            CHECK(!ls_val(diff).has_value());  // zero within the window
            CHECK(diff.hi() >= static_cast<int64_t>(x.c.size()) - 3);
        }
    }
}

TEST_CASE("hensel: fixed point h^3 = 1 over F_2") {
    Field k = F2();
    LaurentPolynomial F = {ls_monomial(k, k.neg(k.one()), 0), ls_exact_zero(), ls_exact_zero(),
                           ls_monomial(k, k.one(), 0)};
    LaurentSeries h = series_hensel_root(k, F, ls_truncate(k, ls_monomial(k, k.one(), 0), 30), 25);
    CHECK(*ls_val(h) == 0);
    CHECK(h.c.size() >= 1);
    CHECK(h.c[0] == k.one());
    LaurentSeries diff = ls_sub(k, h, ls_monomial(k, k.one(), 0));
    CHECK(!ls_val(diff).has_value());
}

TEST_CASE("hensel: square root of 1+s over F_3") {
    Field k = F3();
    // F(h) = h^2 - (1+s)
    LaurentSeries rhs = mk(k, 0, {1, 1});
    LaurentPolynomial F = {ls_neg(k, rhs), ls_exact_zero(), ls_monomial(k, k.one(), 0)};
    LaurentSeries init = ls_truncate(k, ls_monomial(k, k.one(), 0), 24);
    LaurentSeries h = series_hensel_root(k, F, init, 20);
    // h = 1 + 2s + s^2 + ...
    CHECK(ls_coeff(k, h, 0) == k.from_int(1));
    CHECK(ls_coeff(k, h, 1) == k.from_int(2));
    CHECK(ls_coeff(k, h, 2) == k.from_int(1));
    // independent check: square and compare to 1+s
    LaurentSeries sq = ls_mul(k, h, h);
    LaurentSeries diff = ls_sub(k, sq, rhs);
    CHECK(!ls_val(diff).has_value());
    CHECK(diff.hi() >= 20);
}

TEST_CASE("hensel: the oracle's unit equation h^m (1 - s^((p-1)m)) = 1") {
    Field k = F2();
    const int64_t m = 3, pm1m = 3;  // p = 2, (p-1)m = 3
    LaurentSeries U = ls_sub(k, ls_monomial(k, k.one(), 0), ls_monomial(k, k.one(), pm1m));
    LaurentPolynomial F(static_cast<size_t>(m) + 1, ls_exact_zero());
    F[0] = ls_monomial(k, k.neg(k.one()), 0);
    F[static_cast<size_t>(m)] = U;
    LaurentSeries init = ls_truncate(k, ls_monomial(k, k.one(), 0), 40);
    LaurentSeries h = series_hensel_root(k, F, init, 32);
    LaurentSeries resid = lp_eval(k, F, h);
    // back-substitution: the residual vanishes to the requested order
    CHECK(!ls_val(resid).has_value());
    CHECK(resid.hi() >= 32);
    CHECK(*ls_val(h) == 0);
}

TEST_CASE("hensel rejects a vanishing derivative (p-th power equation)") {
    Field k = F2();
    // h^2 - (1+s): F'(h) = 2h = 0 in characteristic 2
    LaurentSeries rhs = mk(k, 0, {1, 1});
    LaurentPolynomial F = {ls_neg(k, rhs), ls_exact_zero(), ls_monomial(k, k.one(), 0)};
    CHECK_THROWS_AS(series_hensel_root(k, F, ls_truncate(k, ls_monomial(k, k.one(), 0), 20), 10),
                    std::domain_error);
}

TEST_CASE("substitution of a uniformizer") {
    Field k = F3();
    // x = s^-2 + s, substitute s -> s(1+s), compare against direct expansion
    LaurentSeries x = mk(k, -2, {1, 0, 0, 1}, 10);
    LaurentSeries g = mk(k, 1, {1, 1});
    LaurentSeries sub = ls_subst(k, x, g);
    LaurentSeries expect =
        ls_add(k, ls_pow(k, g, -2), ls_add(k, g, ls_zero_to(10)));
    LaurentSeries diff = ls_sub(k, sub, expect);
    CHECK(!ls_val(diff).has_value());
}
