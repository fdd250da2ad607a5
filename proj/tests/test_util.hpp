#pragma once

#include "jorvar/algebra.hpp"

#include <random>

namespace jorvar::testutil {

// Deterministic RNG for property tests.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234);
    return gen;
}

inline Rat random_rat(int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng()), den(rng()));
}

inline RatVec random_vec(int n, int lo = -3, int hi = 3) {
    RatVec v(n);
    for (auto& x : v)
        x = random_rat(lo, hi);
    return v;
}

// Invertible with small entries: unit lower x diagonal x unit upper, then a
// random row permutation. Keeps conjugated tensors small, which matters for
// the exact-arithmetic property suites.
inline RatMatrix random_invertible(int n) {
    std::uniform_int_distribution<int> small(-1, 1);
    std::uniform_int_distribution<int> diag_pick(0, 3);
    static const Rat diag_choices[4] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};
    RatMatrix lower = RatMatrix::identity(n), upper = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lower.at(i, j) = Rat(small(rng()));
            upper.at(j, i) = Rat(small(rng()));
        }
    RatMatrix d(n, n);
    for (int i = 0; i < n; ++i)
        d.at(i, i) = diag_choices[diag_pick(rng())];
    RatMatrix m = lower * d * upper;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng());
    RatMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        p.at(perm[i], i) = Rat(1);
    return p * m;
}

} // namespace jorvar::testutil
