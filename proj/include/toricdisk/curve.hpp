#pragma once

#include "bmodel.hpp"

namespace toricdisk {

// A monomial +/- x^ex y^ey q1^{q[0]} ... qk^{q[k-1]} of a mirror curve.
struct SignedMonomial {
    int sign = 1;
    Int ex = 0;
    Int ey = 0;
    std::vector<Int> q;
};

struct CurvePolynomial {
    std::vector<SignedMonomial> terms;
};

// Solves prod_i x_i^{l_i^(a)} = q_a for the non-gauge coordinates under the
// gauge x_{i1} = -x~, x_{i2} = y~, x_{i3} = 1. The k x k charge minor over
// I\I0 is unimodular, so exponents are integers and the sign of x_i is
// (-1)^{x~-exponent} (the only signed gauge coordinate is x_{i1}).
inline std::vector<SignedMonomial> solve_coordinates(const ToricCY3& g,
                                                     const BraneSpec& b) {
    std::vector<Int> rest;
    for (Int i = 1; i <= g.r; ++i)
        if (i != b.i1 && i != b.i2 && i != b.i3) rest.push_back(i);
    QMatrix m;
    for (Int a = 0; a < g.k; ++a) {
        QVector row;
        for (Int i : rest) row.push_back(Rational(g.charge[a][i - 1]));
        m.push_back(std::move(row));
    }
    auto minv = inverse(m);
    if (!minv) throw ConfigError("singular charge minor: brane inconsistent with fan");
    auto solve_int = [&](const QVector& rhs) {
        std::vector<Int> x(g.k, 0);
        for (Int i = 0; i < g.k; ++i) {
            Rational s(0);
            for (Int a = 0; a < g.k; ++a) s += (*minv)[i][a] * rhs[a];
            s.canonicalize();
            if (s.get_den() != 1)
                throw ConfigError("non-integral curve coordinate exponent");
            x[i] = static_cast<Int>(s.get_num().get_si());
        }
        return x;
    };
    QVector rhs_x, rhs_y;
    for (Int a = 0; a < g.k; ++a) {
        rhs_x.push_back(Rational(-g.charge[a][b.i1 - 1]));
        rhs_y.push_back(Rational(-g.charge[a][b.i2 - 1]));
    }
    auto ex = solve_int(rhs_x);
    auto ey = solve_int(rhs_y);
    std::vector<SignedMonomial> out;
    for (Int i = 0; i < g.k; ++i) {
        SignedMonomial t;
        t.ex = ex[i];
        t.ey = ey[i];
        t.sign = sign_pow(t.ex);
        t.q.assign(g.k, 0);
        for (Int c = 0; c < g.k; ++c) {
            Rational s = (*minv)[i][c];
            s.canonicalize();
            if (s.get_den() != 1) throw ConfigError("non-integral curve q-exponent");
            t.q[c] = static_cast<Int>(s.get_num().get_si());
        }
        out.push_back(std::move(t));
    }
    return out;
}

// The framed curve M(x,y,q) = -x y^{-f} + y + 1 + sum_i x_i(x y^{-f}, y, q):
// the substitution x~ = x y^{-f}, y~ = y sends x~^a y~^b to x^a y^{b-fa}.
inline CurvePolynomial framed_curve(const ToricCY3& g, const BraneSpec& b, Int f) {
    CurvePolynomial c;
    c.terms.push_back({-1, 1, -f, std::vector<Int>(g.k, 0)});
    c.terms.push_back({+1, 0, 1, std::vector<Int>(g.k, 0)});
    c.terms.push_back({+1, 0, 0, std::vector<Int>(g.k, 0)});
    for (const auto& t : solve_coordinates(g, b)) {
        SignedMonomial s = t;
        s.ey -= f * s.ex;
        c.terms.push_back(std::move(s));
    }
    return c;
}

// Grading on the (x, q1..qk) ring suitable for both W0 and the curve branch:
// positive on the effective cones and on every non-gauge curve monomial.
inline Grading curve_grading(const ToricCY3& g, const BraneSpec& b, Int f) {
    std::vector<std::vector<Int>> extra;
    for (const auto& t : solve_coordinates(g, b)) {
        std::vector<Int> v{t.ex};
        v.insert(v.end(), t.q.begin(), t.q.end());
        extra.push_back(std::move(v));
    }
    return find_grading(g, &b, f, extra);
}

// The branch y = -(1+u) through y(0,0) = -1, solved by Newton iteration in the
// truncated series ring; u lives in (x = slot 0, q).
inline TruncatedSeries y_branch(const CurvePolynomial& curve, const Grading& grading,
                                Int N) {
    const std::size_t k = grading.num_closed();
    for (const auto& t : curve.terms) {
        if ((t.sign == -1 && t.ex == 1 && t.q == std::vector<Int>(k, 0)) ||
            (t.ex == 0 && t.q == std::vector<Int>(k, 0) && (t.ey == 0 || t.ey == 1)))
            continue;  // gauge terms
        Int grade = grading.grade(ExtExponent(t.ex, t.q));
        if (grade <= 0)
            throw ConfigError("grading not positive on a curve monomial");
    }
    auto eval = [&](const TruncatedSeries& u, bool derivative) {
        TruncatedSeries s(grading, N);
        TruncatedSeries one_plus_u = TruncatedSeries::constant(grading, N, 1) + u;
        for (const auto& t : curve.terms) {
            Int b = t.ey;
            Rational c = Rational(t.sign) * Rational(sign_pow(b));
            TruncatedSeries piece(grading, N);
            if (derivative) {
                if (b == 0) continue;
                piece = Rational(b) * c * pow(one_plus_u, b - 1);
            } else {
                piece = c * pow(one_plus_u, b);
            }
            s += piece.shifted(ExtExponent(t.ex, t.q));
        }
        return s;
    };
    TruncatedSeries u(grading, N);
    Int correct = 0;
    int guard = 0;
    while (correct <= N) {
        TruncatedSeries m = eval(u, false);
        if (m.is_zero()) break;
        u = u - m * inverse(eval(u, true));
        correct = correct == 0 ? 1 : 2 * correct;
        if (++guard > 64) throw Error("curve branch Newton iteration did not converge");
    }
    if (!eval(u, false).is_zero()) throw Error("curve branch residual is nonzero");
    if (u.coeff(ExtExponent(0, std::vector<Int>(k, 0))) != 0)
        throw Error("curve branch has a constant term");
    return u;
}

struct AbelJacobiReport {
    bool unique = false;
    int epsilon = 0;  // the passing sign when unique
    TruncatedSeries remainder;         // x-independent part of the passing R
    TruncatedSeries residual;          // x-dependent part (zero when unique)
    std::string message;
};

// Compares x d/dx W0 against -+ log of the curve branch: R(eps) = theta_0 W0 +
// eps*log(1+u) must be independent of x for exactly one sign eps.
inline AbelJacobiReport abel_jacobi_check(const ToricCY3& g, const BraneSpec& b, Int f,
                                          const Grading& grading, Int N) {
    TruncatedSeries t0 = W0_series(g, b, f, grading, N).theta(0);
    TruncatedSeries lu = log1p(y_branch(framed_curve(g, b, f), grading, N));
    AbelJacobiReport rep;
    rep.remainder = TruncatedSeries(grading, N);
    rep.residual = TruncatedSeries(grading, N);
    int passes = 0;
    for (int eps : {+1, -1}) {
        TruncatedSeries r = t0 + Rational(eps) * lu;
        TruncatedSeries xdep(grading, N), xindep(grading, N);
        for (const auto& [e, c] : r.terms())
            (e.w != 0 ? xdep : xindep).add_term(e, c);
        if (xdep.is_zero()) {
            ++passes;
            rep.epsilon = eps;
            rep.remainder = xindep;
        } else if (passes == 0) {
            rep.residual = xdep;
        }
    }
    rep.unique = (passes == 1);
    rep.message = rep.unique ? "unique branch sign found"
                             : (passes == 0 ? "no sign matches" : "both signs match");
    if (!rep.unique) rep.epsilon = 0;
    return rep;
}

}  // namespace toricdisk
