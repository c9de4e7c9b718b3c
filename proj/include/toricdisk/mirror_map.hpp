#pragma once

#include "bmodel.hpp"

namespace toricdisk {

// Frobenius correction coefficient attached to ray i0: nonzero only when the
// pairing at i0 is the unique negative one.
inline Rational E_coeff(const ToricCY3& g, Int i0, const std::vector<Int>& beta) {
    bool zero = std::all_of(beta.begin(), beta.end(), [](Int x) { return x == 0; });
    if (zero) throw Error("E_coeff requires beta != 0");
    Int c0 = pairing(g, beta, i0);
    if (c0 >= 0) return Rational(0);
    Rational v = Rational(sign_pow(-c0 - 1)) * Rational(factorial(-c0 - 1));
    for (Int i = 1; i <= g.r; ++i) {
        if (i == i0) continue;
        Int c = pairing(g, beta, i);
        if (c < 0) return Rational(0);
        v /= Rational(factorial(c));
    }
    return v;
}

// A_i(q) = sum over effective beta > 0 of E_i(beta) q^beta.
inline TruncatedSeries A_series(const ToricCY3& g, Int i, const Grading& grading, Int N) {
    TruncatedSeries s(grading, N);
    for (const auto& beta : enumerate_effective(g, grading, N))
        s.add_term(ExtExponent(0, beta), E_coeff(g, i, beta));
    return s;
}

// Q_a = q_a exp(S_a(q)), a = 0..k; S_0 uses the open charge vector. The
// corrections depend on the closed variables only, so the inverse is
// triangular: the closed sector inverts first, then the open direction.
struct MirrorMap {
    std::vector<TruncatedSeries> S;        // S_0..S_k
    std::vector<TruncatedSeries> inverse;  // q_a as series in Q
};

inline MirrorMap build_mirror_map(const ToricCY3& g, const BraneSpec& b, Int f,
                                  const Grading& grading, Int N) {
    std::vector<TruncatedSeries> A;
    for (Int i = 1; i <= g.r; ++i) A.push_back(A_series(g, i, grading, N));
    MirrorMap mm;
    auto l0 = l0_vector(g, b, f);
    for (Int a = 0; a <= g.k; ++a) {
        TruncatedSeries s(grading, N);
        for (Int i = 1; i <= g.r; ++i) {
            Int c = a == 0 ? l0[i - 1] : g.charge[a - 1][i - 1];
            if (c != 0) s += Rational(c) * A[i - 1];
        }
        mm.S.push_back(std::move(s));
    }
    mm.inverse = invert_diagonal_map(mm.S);
    return mm;
}

// Disk invariants in flat coordinates: W0 with the inverse mirror map
// substituted; the coefficient of Q0^w Q^d is the open invariant at (w, d).
inline TruncatedSeries invariants_in_flat(const ToricCY3& g, const BraneSpec& b, Int f,
                                          const Grading& grading, Int N) {
    auto mm = build_mirror_map(g, b, f, grading, N);
    return substitute(W0_series(g, b, f, grading, N), mm.inverse);
}

}  // namespace toricdisk
