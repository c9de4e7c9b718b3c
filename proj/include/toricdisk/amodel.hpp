#pragma once

#include "bmodel.hpp"

namespace toricdisk {

// Disk factor for positive winding: (-1)^{fw} prod_{m=1}^{w-1}(fw+m) / (w*w!).
inline Rational disk_factor_pos(Int w, Int f) {
    if (w <= 0) throw Error("disk_factor_pos requires w > 0");
    Integer p = 1;
    for (Int m = 1; m <= w - 1; ++m) p *= static_cast<long>(f * w + m);
    return Rational(sign_pow(f * w)) * Rational(p) / (Rational(w) * Rational(factorial(w)));
}

// Disk factor for negative winding on an inner brane, with the edge weight n:
// (-1)^{(f+n)w} prod_{m=1}^{-w-1}((f+n)(-w)+m) / ((-w)*(-w)!).
inline Rational disk_factor_neg(Int w, Int f, Int n) {
    if (w >= 0) throw Error("disk_factor_neg requires w < 0");
    Integer p = 1;
    for (Int m = 1; m <= -w - 1; ++m) p *= static_cast<long>((f + n) * (-w) + m);
    return Rational(sign_pow((f + n) * w)) * Rational(p) /
           (Rational(-w) * Rational(factorial(-w)));
}

// l^- vector of an inner brane: l0 - pairings with the edge class alpha.
inline std::vector<Int> l_minus(const ToricCY3& g, const BraneSpec& b, Int f) {
    if (b.kind != BraneKind::inner) throw ConfigError("l_minus requires an inner brane");
    auto alpha = curve_class_alpha(g, b);
    auto l = l0_vector(g, b, f);
    for (Int i = 1; i <= g.r; ++i) l[i - 1] -= pairing(g, alpha, i);
    return l;
}

// Zero/pole bookkeeping for the product of Gamma-function ratios in one
// bracket coefficient. Zeros and poles in the i2 and i3 factors are not
// independent: their bases fw and (-f-1)w move with opposite slopes under a
// framing deformation f -> f + eps, so an i2 pole can cancel against an i3
// zero (and vice versa); the residual sign is -1 per i3-side occurrence.
struct RegProduct {
    Rational value = 1;   // product of the non-vanishing linear factors
    int zeros = 0;        // vanishing factors in numerators (slope != 0)
    int poles = 0;        // vanishing factors in denominators (slope != 0)
    int sign_flips = 0;   // occurrences on the negative-slope (i3) side
    bool killed = false;  // an exact (slope-0) zero: the term is 0

    // Multiply by prod_{m=bottom+1}^{top} (a+m), or its reciprocal when
    // top < bottom. slope is +1 for the i2 factor, -1 for i3, 0 otherwise.
    void mul_ratio(Int a, Int top, Int bottom, int slope) {
        bool recip = top < bottom;
        Int lo = std::min(top, bottom) + 1, hi = std::max(top, bottom);
        for (Int m = lo; m <= hi; ++m) {
            if (a + m == 0) {
                if (slope == 0) {
                    if (recip) throw Error("unregularized pole in hypergeometric factor");
                    killed = true;
                } else {
                    (recip ? poles : zeros) += 1;
                    if (slope < 0) sign_flips += 1;
                }
            } else if (recip) {
                value /= Rational(a + m);
            } else {
                value *= Rational(a + m);
            }
        }
    }

    Rational result() const {
        if (killed || zeros > poles) return 0;
        if (zeros < poles) throw Error("divergent hypergeometric coefficient");
        return sign_flips % 2 ? -value : value;
    }
};

// Hypergeometric bracket of the winding-w piece:
// 1 + sum_{beta > 0 effective} q^beta prod_i gamma_ratio(w*l_i; 0, <D_i*,beta>),
// with the joint i2/i3 zero-pole cancellation above (pass i2 = i3 = 0 to
// demand that every factor is individually finite).
inline TruncatedSeries J_bracket(const ToricCY3& g, const std::vector<Int>& l, Int w,
                                 Int i2, Int i3, const Grading& grading, Int N) {
    if (w == 0) throw Error("J_bracket requires w != 0");
    TruncatedSeries s = TruncatedSeries::constant(grading, N, 1);
    for (const auto& beta : enumerate_effective(g, grading, N)) {
        RegProduct p;
        for (Int i = 1; i <= g.r; ++i) {
            int slope = i == i2 ? 1 : i == i3 ? -1 : 0;
            p.mul_ratio(w * l[i - 1], 0, pairing(g, beta, i), slope);
            if (p.killed) break;
        }
        Rational c = p.killed ? Rational(0) : p.result();
        if (c != 0) s.add_term(ExtExponent(0, beta), c);
    }
    return s;
}

inline TruncatedSeries J_bracket(const ToricCY3& g, const std::vector<Int>& l, Int w,
                                 const Grading& grading, Int N) {
    return J_bracket(g, l, w, 0, 0, grading, N);
}

// Disk amplitude generating series assembled winding by winding: the positive
// part runs over all w >= 1; an inner brane adds the negative part, whose
// monomials are q0^w q^{beta - w alpha} with beta effective.
inline TruncatedSeries F_q(const ToricCY3& g, const BraneSpec& b, Int f,
                           const Grading& grading, Int N) {
    TruncatedSeries s(grading, N);
    auto l0 = l0_vector(g, b, f);
    for (Int w = 1; w * grading.g0 <= N; ++w) {
        ExtExponent mono(w, std::vector<Int>(g.k, 0));
        s += J_bracket(g, l0, w, b.i2, b.i3, grading, N)
                 .shifted(mono, disk_factor_pos(w, f));
    }
    if (b.kind == BraneKind::inner) {
        auto alpha = curve_class_alpha(g, b);
        Int n = inner_n(g, b);
        auto lm = l_minus(g, b, f);
        for (Int w = -1;; --w) {
            ExtExponent mono(w, std::vector<Int>(g.k, 0));
            for (Int a = 0; a < g.k; ++a) mono.d[a] = -w * alpha[a];
            if (grading.grade(mono) > N) break;
            s += J_bracket(g, lm, w, b.i2, b.i3, grading, N)
                     .shifted(mono, disk_factor_neg(w, f, n));
        }
    }
    return s;
}

}  // namespace toricdisk
