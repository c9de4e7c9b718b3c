#pragma once

#include "toric.hpp"

namespace toricdisk {

struct GammaRatioResult {
    Rational value;
    bool vanished_by_pole = false;
};

// The regularized ratio prod_{m=-inf}^{top}(a+m) / prod_{m=-inf}^{bottom}(a+m):
// a finite product prod_{m=bottom+1}^{top}(a+m) when top >= bottom (zero
// factors allowed), and its reciprocal when top < bottom, with the reciprocal
// of a zero factor (a Gamma-pole) evaluating to 0.
inline GammaRatioResult gamma_ratio(Int a, Int top, Int bottom) {
    GammaRatioResult r{Rational(1), false};
    if (top >= bottom) {
        Integer p = 1;
        for (Int m = bottom + 1; m <= top; ++m) {
            if (a + m == 0) r.vanished_by_pole = true;
            p *= static_cast<long>(a + m);
        }
        r.value = Rational(p);
    } else {
        Integer p = 1;
        bool zero = false;
        for (Int m = top + 1; m <= bottom; ++m) {
            if (a + m == 0) zero = true;
            p *= static_cast<long>(a + m);
        }
        if (zero) {
            r.value = 0;
            r.vanished_by_pole = true;
        } else {
            r.value = Rational(1) / Rational(p);
        }
    }
    return r;
}

// Frobenius coefficient of the superpotential at the extended class bt=(w;d).
// With c2, c3 the pairings at i2, i3 and P the product of reciprocal pairings
// factorials over I\{i2,i3}, the closed form is
//     C = (-1)^{c3+w} * [prod_{m=c2+1}^{-c3-1} m]_reg * P / w,
// where the bracket is the integer Gamma-ratio above (so it vanishes whenever
// c2, c3 are both >= 0 or both < 0, covering those conventions uniformly).
inline Rational C_coeff(const ToricCY3& g, const BraneSpec& b, Int f,
                        const ExtExponent& bt) {
    if (bt.w == 0) throw Error("C_coeff requires w != 0");
    Int c2 = extended_pairing(g, b, f, bt, b.i2);
    Int c3 = extended_pairing(g, b, f, bt, b.i3);
    Rational P(1);
    for (Int i = 1; i <= g.r; ++i) {
        if (i == b.i2 || i == b.i3) continue;
        P *= inv_factorial(extended_pairing(g, b, f, bt, i));
        if (P == 0) return P;
    }
    Rational R = gamma_ratio(0, -c3 - 1, c2).value;
    return Rational(sign_pow(c3 + bt.w)) * R * P / Rational(bt.w);
}

// W0(q0, q; f): sum of C over the extended effective cone, truncated at grade N.
inline TruncatedSeries W0_series(const ToricCY3& g, const BraneSpec& b, Int f,
                                 const Grading& grading, Int N) {
    TruncatedSeries s(grading, N);
    for (const auto& bt : enumerate_extended(g, b, f, grading, N))
        s.add_term(bt, C_coeff(g, b, f, bt));
    return s;
}

}  // namespace toricdisk
