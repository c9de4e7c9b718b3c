#pragma once

#include "log_series.hpp"
#include "mirror_map.hpp"

namespace toricdisk {

// One factor (sum_b c_b theta_b - j) of a GKZ operator.
struct LinearFactor {
    std::vector<Int> c;  // c_0..c_k
    Int j = 0;
};

struct GKZOperator {
    Int a = 0;
    std::vector<LinearFactor> positive_part;
    std::vector<LinearFactor> negative_part;  // premultiplied by q_a on apply
};

// Extended charge entries over slots 1..r+2: row a of the charge matrix padded
// with (0,0), or the open vector padded with (1,-1) for a = 0.
inline Int extended_charge(const ToricCY3& g, const std::vector<Int>& l0, Int a, Int i) {
    if (i <= g.r) return a == 0 ? l0[i - 1] : g.charge[a - 1][i - 1];
    if (i == g.r + 1) return a == 0 ? 1 : 0;
    if (i == g.r + 2) return a == 0 ? -1 : 0;
    throw Error("extended slot out of range");
}

inline GKZOperator build_operator(const ToricCY3& g, const BraneSpec& b, Int f, Int a) {
    if (a < 0 || a > g.k) throw Error("operator index out of range");
    GKZOperator op;
    op.a = a;
    auto l0 = l0_vector(g, b, f);
    for (Int i = 1; i <= g.r + 2; ++i) {
        Int e = extended_charge(g, l0, a, i);
        if (e == 0) continue;
        LinearFactor form;
        for (Int c = 0; c <= g.k; ++c) form.c.push_back(extended_charge(g, l0, c, i));
        for (Int j = 0; j < std::abs(e); ++j) {
            form.j = j;
            (e > 0 ? op.positive_part : op.negative_part).push_back(form);
        }
    }
    return op;
}

inline LogSeries apply_factor(const LinearFactor& fac, const LogSeries& s) {
    LogSeries r(s.grading(), s.order());
    for (std::size_t b = 0; b < fac.c.size(); ++b)
        if (fac.c[b] != 0) r = r + Rational(fac.c[b]) * s.theta(b);
    return r - Rational(fac.j) * s;
}

// D_a(s) = prod(positive factors)(s) - q_a * prod(negative factors)(s),
// truncated to the comparable order N - grade(q_a).
inline LogSeries apply(const GKZOperator& op, const LogSeries& s) {
    LogSeries pos = s, neg = s;
    for (const auto& fac : op.positive_part) pos = apply_factor(fac, pos);
    for (const auto& fac : op.negative_part) neg = apply_factor(fac, neg);
    const Grading& g = s.grading();
    ExtExponent qa(0, std::vector<Int>(g.num_closed(), 0));
    if (op.a == 0)
        qa.w = 1;
    else
        qa.d[op.a - 1] = 1;
    return (pos - neg.shifted(qa)).truncated(s.order() - g.grade(qa));
}

struct AnnihilationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Verifies D_b(1) = 0 and D_b(log q_a + S_a) = 0 for all a, b in 0..k.
inline AnnihilationReport check_annihilation(const ToricCY3& g, const BraneSpec& b, Int f,
                                             const Grading& grading, Int N) {
    AnnihilationReport rep;
    auto mm = build_mirror_map(g, b, f, grading, N);
    std::vector<GKZOperator> ops;
    for (Int a = 0; a <= g.k; ++a) ops.push_back(build_operator(g, b, f, a));
    auto check = [&](const LogSeries& sol, const std::string& name) {
        for (const auto& op : ops) {
            LogSeries res = apply(op, sol);
            if (!res.is_zero())
                rep.failures.push_back("D_" + std::to_string(op.a) + " applied to " +
                                       name + " -> " + res.str());
        }
    };
    check(LogSeries::from_series(TruncatedSeries::constant(grading, N, 1)), "1");
    for (Int a = 0; a <= g.k; ++a)
        check(LogSeries::log_symbol(grading, N, a) + LogSeries::from_series(mm.S[a]),
              "log q_" + std::to_string(a) + " + S_" + std::to_string(a));
    return rep;
}

}  // namespace toricdisk
