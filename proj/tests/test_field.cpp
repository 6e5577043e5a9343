#include <catch2/catch_amalgamated.hpp>

#include "aswkit/field.hpp"
#include "helpers.hpp"

using namespace aswkit;
using namespace testutil;

TEST_CASE("field construction validates its presentation") {
    CHECK_NOTHROW(Field(2));
    CHECK_NOTHROW(Field(97));
    CHECK_NOTHROW(F4());
    CHECK_THROWS_AS(Field(4), std::invalid_argument);
    CHECK_THROWS_AS(Field(101), std::invalid_argument);
    // w^2 + 1 is reducible over F_2
    CHECK_THROWS_AS(Field(2, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("field axioms hold on random samples") {
    std::mt19937_64 rng(1);
    for (const Field& k : {F2(), F3(), F4(), F8(), F9(), F5()}) {
        for (int i = 0; i < 50; ++i) {
            FieldElem a = k.random_elem(rng), b = k.random_elem(rng), c = k.random_elem(rng);
            CHECK(k.add(a, b) == k.add(b, a));
            CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
            CHECK(k.mul(a, b) == k.mul(b, a));
            CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
            CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
            CHECK(k.add(a, k.neg(a)) == k.zero());
            if (!k.is_zero(a)) CHECK(k.mul(a, k.inv(a)) == k.one());
        }
    }
}

TEST_CASE("Frobenius is a bijection inverted by pth_root") {
    for (const Field& k : {F2(), F4(), F8(), F9(), F5()}) {
        for_each_elem(k, [&](const FieldElem& a) {
            CHECK(k.pth_root(k.frobenius(a)) == a);
            CHECK(k.frobenius(k.pth_root(a)) == a);
        });
    }
}

TEST_CASE("pth_root examples") {
    Field k = F4();
    CHECK(k.pth_root(k.zero()) == k.zero());
    CHECK(k.pth_root(k.one()) == k.one());
    // F_4 = F_2[w]/(w^2+w+1): the square root of w is w^2 since (w^2)^2 = w
    FieldElem w = k.gen();
    FieldElem w2 = k.mul(w, w);
    CHECK(k.pth_root(w) == w2);
    // exhaustive: r = pth_root(a) is the unique element with r^p = a
    for_each_elem(k, [&](const FieldElem& a) {
        FieldElem r = k.pth_root(a);
        CHECK(k.pow(r, 2) == a);
    });
}

TEST_CASE("absolute trace") {
    CHECK(F2().trace(F2().one()) == 1);
    Field k4 = F4();
    CHECK(k4.trace(k4.one()) == 0);   // 1 + 1 = 0
    CHECK(k4.trace(k4.gen()) == 1);   // w + w^2 = 1
    Field k9 = F9();
    CHECK(k9.trace(k9.one()) == 2);   // 1 + 1
}

TEST_CASE("Artin-Schreier preimages exist exactly on the trace-zero hyperplane") {
    for (const Field& k : {F2(), F3(), F4(), F8(), F9()}) {
        for_each_elem(k, [&](const FieldElem& a) {
            auto x = k.artin_schreier_preimage(a);
            if (k.trace(a) == 0) {
                REQUIRE(x.has_value());
                CHECK(k.sub(k.frobenius(*x), *x) == a);
            } else {
                CHECK(!x.has_value());
            }
        });
    }
    // wp(F_2) = {0}, so 1 has no preimage over F_2
    CHECK(!F2().artin_schreier_preimage(F2().one()).has_value());
}
