#pragma once

#include <functional>
#include <vector>

#include "aswkit/field.hpp"
#include "aswkit/poly.hpp"

namespace testutil {

inline aswkit::Field F2() { return aswkit::Field(2); }
inline aswkit::Field F3() { return aswkit::Field(3); }
inline aswkit::Field F5() { return aswkit::Field(5); }
inline aswkit::Field F4() { return aswkit::Field(2, {1, 1, 1}); }       // w^2 + w + 1
inline aswkit::Field F8() { return aswkit::Field(2, {1, 1, 0, 1}); }    // w^3 + w + 1
inline aswkit::Field F9() { return aswkit::Field(3, {1, 0, 1}); }       // w^2 + 1

inline void for_each_elem(const aswkit::Field& k,
                          const std::function<void(const aswkit::FieldElem&)>& fn) {
    aswkit::FieldElem e(static_cast<size_t>(k.n()), 0);
    for (;;) {
        fn(e);
        int i = 0;
        while (i < k.n() && ++e[static_cast<size_t>(i)] == k.p()) e[static_cast<size_t>(i++)] = 0;
        if (i == k.n()) break;
    }
}

inline aswkit::Poly random_poly(const aswkit::Field& k, int64_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> dd(0, max_deg);
    int64_t d = dd(rng);
    aswkit::Poly f;
    f.c.resize(static_cast<size_t>(d) + 1, k.zero());
    for (auto& c : f.c) c = k.random_elem(rng);
    aswkit::poly_trim(k, f);
    return f;
}

}  // namespace testutil
