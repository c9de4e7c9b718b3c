#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bmodel.hpp"
#include "toric.hpp"

namespace toricdisk {

// Built-in geometries with their brane phases. Each phase may carry a closed
// formula ("fixture") for the disk amplitude coefficients, used to cross-check
// the algorithmic pipelines.
struct CatalogPhase {
    BraneSpec brane;
    // Total function of (framing, extended class); zero outside its support.
    // Empty when no closed form is available for this phase.
    std::function<Rational(Int, const ExtExponent&)> fixture;
};

struct CatalogGeometry {
    ToricCY3 geom;
    std::vector<CatalogPhase> phases;
};

namespace fixture_detail {

// Product (f*w + m) for m = lo..hi, as a Gamma-function ratio: when hi < lo-1
// the product is the reciprocal of the complementary one (and vanishes if that
// complementary product contains a zero factor).
inline Rational gp(Int f, Int w, Int lo, Int hi) {
    return gamma_ratio(f * w, hi, lo - 1).value;
}

inline Rational ifac(Int n) { return inv_factorial(n); }

}  // namespace fixture_detail

// -------------------------------------------------------------------------
// Resolved conifold: O(-1) + O(-1) over P^1.

inline CatalogGeometry catalog_conifold() {
    using namespace fixture_detail;
    CatalogGeometry c;
    c.geom.name = "conifold";
    c.geom.r = 4;
    c.geom.k = 1;
    c.geom.charge = {{-1, -1, 1, 1}};
    c.geom.max_cones = {{1, 2, 3}, {1, 2, 4}};
    c.geom.rays = {{{0, 0, 1}, {1, 1, 1}, {1, 0, 1}, {0, 1, 1}}};

    CatalogPhase I;
    I.brane = {"I", BraneKind::inner, 4, 1, 2, 3, 0};
    I.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d = e.d[0];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d)) * gp(f, w, -d + 1, d + w - 1) *
               ifac(w + d) * ifac(d) / Rational(w);
    };

    CatalogPhase II;
    II.brane = {"II", BraneKind::outer, 1, 2, 4, 0, 0};
    II.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d = e.d[0];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d)) * gp(f, w, -d + 1, -d + w - 1) *
               ifac(w - d) * ifac(d) / Rational(w);
    };

    c.phases = {I, II};
    return c;
}

// -------------------------------------------------------------------------
// K_{P^2}: canonical bundle of the projective plane.

inline CatalogGeometry catalog_KP2() {
    using namespace fixture_detail;
    CatalogGeometry c;
    c.geom.name = "KP2";
    c.geom.r = 4;
    c.geom.k = 1;
    c.geom.charge = {{-3, 1, 1, 1}};
    c.geom.max_cones = {{1, 2, 3}, {1, 3, 4}, {1, 2, 4}};
    c.geom.rays = {{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {-1, -1, 1}}};

    CatalogPhase I;
    I.brane = {"I", BraneKind::inner, 2, 3, 1, 4, 0};
    I.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d = e.d[0];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d)) * gp(f, w, d + 1, 3 * d + w - 1) *
               ifac(w + d) * ifac(d) / Rational(w);
    };

    CatalogPhase II;
    II.brane = {"II", BraneKind::inner, 3, 1, 2, 4, 0};
    II.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d = e.d[0];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d)) *
               gp(f, w, -3 * d + 1, -d + w - 1) * ifac(w + d) * ifac(d) /
               Rational(w);
    };

    CatalogPhase III;
    III.brane = {"III", BraneKind::outer, 1, 2, 3, 0, 0};
    III.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d = e.d[0];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d)) * gp(f, w, d + 1, -d + w - 1) *
               ifac(w - 3 * d) * ifac(d) / Rational(w);
    };

    c.phases = {I, II, III};
    return c;
}

// -------------------------------------------------------------------------
// K_{F0}: canonical bundle of P^1 x P^1.

inline CatalogGeometry catalog_KF0() {
    using namespace fixture_detail;
    CatalogGeometry c;
    c.geom.name = "KF0";
    c.geom.r = 5;
    c.geom.k = 2;
    c.geom.charge = {{-2, 1, 1, 0, 0}, {-2, 0, 0, 1, 1}};
    c.geom.max_cones = {{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {1, 2, 5}};
    c.geom.rays = {{{0, 0, 1}, {1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}};

    CatalogPhase I;
    I.brane = {"I", BraneKind::inner, 3, 1, 4, 2, 0};
    I.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d2)) *
               gp(f, w, -2 * d1 - 2 * d2 + 1, -d2 + w - 1) * ifac(w + d1) *
               ifac(d1) * ifac(d2) / Rational(w);
    };

    CatalogPhase II;
    II.brane = {"II", BraneKind::inner, 4, 3, 1, 5, 0};
    II.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w)) *
               gp(f, w, d1 + 1, 2 * d1 + 2 * d2 + w - 1) * ifac(w + d2) *
               ifac(d1) * ifac(d2) / Rational(w);
    };

    CatalogPhase III;
    III.brane = {"III", BraneKind::outer, 1, 4, 3, 0, 0};
    III.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d1)) *
               gp(f, w, d2 + 1, -d1 + w - 1) * ifac(w - 2 * d1 - 2 * d2) *
               ifac(d1) * ifac(d2) / Rational(w);
    };

    c.phases = {I, II, III};
    return c;
}

// -------------------------------------------------------------------------
// K_{dP1}: canonical bundle of the one-point blowup of P^2.

inline CatalogGeometry catalog_KdP1() {
    using namespace fixture_detail;
    CatalogGeometry c;
    c.geom.name = "KdP1";
    c.geom.r = 5;
    c.geom.k = 2;
    c.geom.charge = {{-2, 1, 1, 0, 0}, {-1, 0, -1, 1, 1}};
    c.geom.max_cones = {{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {1, 2, 5}};
    c.geom.rays = {{{0, 0, 1}, {1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {-1, -1, 1}}};

    CatalogPhase I;
    I.brane = {"I", BraneKind::inner, 4, 1, 2, 5, 0};
    I.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d1)) *
               gp(f, w, -2 * d1 - d2 + 1, -d1 + w - 1) * ifac(w + d2) *
               ifac(d1 - d2) * ifac(d2) / Rational(w);
    };

    CatalogPhase II;
    II.brane = {"II", BraneKind::inner, 2, 4, 1, 3, 0};
    II.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d2)) *
               gp(f, w, d2 + 1, 2 * d1 + d2 + w - 1) * ifac(w + d1) *
               ifac(d1 - d2) * ifac(d2) / Rational(w);
    };

    CatalogPhase III;
    III.brane = {"III", BraneKind::inner, 4, 3, 1, 5, 0};
    III.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d2)) *
               gp(f, w, d1 - d2 + 1, 2 * d1 + d2 + w - 1) * ifac(w + d2) *
               ifac(d1) * ifac(d2) / Rational(w);
    };

    CatalogPhase IV;
    IV.brane = {"IV", BraneKind::outer, 1, 2, 4, 0, 0};
    IV.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d2)) *
               gp(f, w, d1 + 1, -d2 + w - 1) * ifac(w - 2 * d1 - d2) *
               ifac(d1 - d2) * ifac(d2) / Rational(w);
    };

    CatalogPhase V;
    V.brane = {"V", BraneKind::outer, 1, 4, 3, 0, 0};
    V.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d1 + d2)) *
               gp(f, w, d2 + 1, -d1 + d2 + w - 1) * ifac(w - 2 * d1 - d2) *
               ifac(d1) * ifac(d2) / Rational(w);
    };

    c.phases = {I, II, III, IV, V};
    return c;
}

// -------------------------------------------------------------------------
// K_{dP2}: canonical bundle of the two-point blowup of P^2.

inline CatalogGeometry catalog_KdP2() {
    using namespace fixture_detail;
    CatalogGeometry c;
    c.geom.name = "KdP2";
    c.geom.r = 6;
    c.geom.k = 3;
    c.geom.charge = {{-2, 1, 1, 0, 0, 0},
                     {-2, 0, 0, 1, 1, 0},
                     {-3, 1, 0, 1, 0, 1}};
    c.geom.max_cones = {{1, 2, 4}, {1, 3, 4}, {1, 3, 6}, {1, 5, 6}, {1, 2, 5}};
    c.geom.rays = {{{0, 0, 1},
                    {1, 0, 1},
                    {-1, 0, 1},
                    {0, 1, 1},
                    {0, -1, 1},
                    {-1, -1, 1}}};

    CatalogPhase I;
    I.brane = {"I", BraneKind::inner, 5, 1, 2, 4, 0};
    I.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1], d3 = e.d[2];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d1 + d3)) *
               gp(f, w, -2 * d1 - 2 * d2 - 3 * d3 + 1, -d1 - d3 + w - 1) *
               ifac(w + d2) * ifac(d1) * ifac(d3) * ifac(d2 + d3) /
               Rational(w);
    };

    CatalogPhase II;
    II.brane = {"II", BraneKind::inner, 2, 5, 1, 6, 0};
    II.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1], d3 = e.d[2];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d3)) *
               gp(f, w, d2 + 1, 2 * d1 + 2 * d2 + 3 * d3 + w - 1) *
               ifac(w + d1 + d3) * ifac(d1) * ifac(d3) * ifac(d2 + d3) /
               Rational(w);
    };

    CatalogPhase III;
    III.brane = {"III", BraneKind::inner, 5, 6, 1, 3, 0};
    III.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1], d3 = e.d[2];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d3)) *
               gp(f, w, d3 + 1, 2 * d1 + 2 * d2 + 3 * d3 + w - 1) *
               ifac(w + d2) * ifac(d1) * ifac(d1 + d3) * ifac(d2 + d3) /
               Rational(w);
    };

    CatalogPhase IV;
    IV.brane = {"IV", BraneKind::outer, 1, 4, 2, 0, 0};
    IV.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1], d3 = e.d[2];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d1 + d3)) *
               gp(f, w, d2 + d3 + 1, -d1 - d3 + w - 1) *
               ifac(w - 2 * d1 - 2 * d2 - 3 * d3) * ifac(d1) * ifac(d2) *
               ifac(d3) / Rational(w);
    };

    CatalogPhase V;
    V.brane = {"V", BraneKind::outer, 1, 2, 5, 0, 0};
    V.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1], d3 = e.d[2];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d2)) *
               gp(f, w, d1 + d3 + 1, -d2 + w - 1) *
               ifac(w - 2 * d1 - 2 * d2 - 3 * d3) * ifac(d1) *
               ifac(d2 + d3) * ifac(d3) / Rational(w);
    };

    CatalogPhase VI;
    VI.brane = {"VI", BraneKind::outer, 1, 5, 6, 0, 0};
    VI.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1], d3 = e.d[2];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d3)) *
               gp(f, w, d2 + 1, -d3 + w - 1) *
               ifac(w - 2 * d1 - 2 * d2 - 3 * d3) * ifac(d1) *
               ifac(d1 + d3) * ifac(d2 + d3) / Rational(w);
    };

    c.phases = {I, II, III, IV, V, VI};
    return c;
}

// -------------------------------------------------------------------------
// K_{dP3}: canonical bundle of the three-point blowup of P^2.

inline CatalogGeometry catalog_KdP3() {
    using namespace fixture_detail;
    CatalogGeometry c;
    c.geom.name = "KdP3";
    c.geom.r = 7;
    c.geom.k = 4;
    c.geom.charge = {{-2, 1, 1, 0, 0, 0, 0},
                     {-2, 0, 0, 1, 1, 0, 0},
                     {-3, 1, 0, 1, 0, 1, 0},
                     {-3, 0, 1, 0, 1, 0, 1}};
    c.geom.max_cones = {{1, 2, 7}, {1, 4, 7}, {1, 3, 4},
                        {1, 3, 6}, {1, 5, 6}, {1, 2, 5}};
    c.geom.rays = {{{0, 0, 1},
                    {1, 0, 1},
                    {-1, 0, 1},
                    {0, 1, 1},
                    {0, -1, 1},
                    {-1, -1, 1},
                    {1, 1, 1}}};

    CatalogPhase I;
    I.brane = {"I", BraneKind::inner, 5, 2, 1, 7, 0};
    I.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1], d3 = e.d[2], d4 = e.d[3];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d3 + d4)) *
               gp(f, w, d1 + d3 + 1,
                  2 * d1 + 2 * d2 + 3 * d3 + 3 * d4 + w - 1) *
               ifac(w + d2 + d4) * ifac(d3) * ifac(d4) * ifac(d2 + d3) *
               ifac(d1 + d4) / Rational(w);
    };

    CatalogPhase II;
    II.brane = {"II", BraneKind::outer, 1, 5, 2, 0, 0};
    II.fixture = [](Int f, const ExtExponent& e) -> Rational {
        Int w = e.w, d1 = e.d[0], d2 = e.d[1], d3 = e.d[2], d4 = e.d[3];
        if (w == 0) return 0;
        return Rational(sign_pow(f * w + d1 + d3)) *
               gp(f, w, d2 + d4 + 1, -d1 - d3 + w - 1) *
               ifac(w - 2 * d1 - 2 * d2 - 3 * d3 - 3 * d4) * ifac(d3) *
               ifac(d4) * ifac(d2 + d3) * ifac(d1 + d4) / Rational(w);
    };

    c.phases = {I, II};
    return c;
}

// -------------------------------------------------------------------------
// Y_m: toric crepant resolution of (O(-1)+O(-1))/Z_m over P^1, m >= 2.
// Rays 1,2 sit above the fiber directions; rays 3..m+3 form the base chain.

// Intersection pairing of ray j against a closed class (d_1,...,d_m).
inline Int ym_ray_pairing(Int m, const std::vector<Int>& d, Int j) {
    Int v = 0;
    if (j == 1 || j == 2) v += d[0];
    if (j == 4) v -= 2 * d[0];
    if (j >= 3 && j <= m + 1) v += d[j - 2];
    if (j >= 4 && j <= m + 2) v -= 2 * d[j - 3];
    if (j >= 5 && j <= m + 3) v += d[j - 4];
    return v;
}

inline CatalogGeometry catalog_Ym(Int m) {
    using namespace fixture_detail;
    if (m < 2) throw ConfigError("Ym requires m >= 2");
    CatalogGeometry c;
    {
        std::ostringstream nm;
        nm << "Y" << m;
        c.geom.name = nm.str();
    }
    c.geom.r = m + 3;
    c.geom.k = m;
    c.geom.charge.assign(m, std::vector<Int>(m + 3, 0));
    c.geom.charge[0][0] = 1;
    c.geom.charge[0][1] = 1;
    c.geom.charge[0][3] = -2;
    for (Int a = 2; a <= m; ++a) {
        c.geom.charge[a - 1][a] = 1;      // ray a+1
        c.geom.charge[a - 1][a + 1] = -2; // ray a+2
        c.geom.charge[a - 1][a + 2] = 1;  // ray a+3
    }
    c.geom.rays.emplace();
    c.geom.rays->push_back({1, 1, 1});
    c.geom.rays->push_back({1, -1, 1});
    for (Int j = 3; j <= m + 3; ++j) c.geom.rays->push_back({j - 3, 0, 1});
    for (Int j = 3; j <= m + 2; ++j) {
        c.geom.max_cones.push_back({1, j, j + 1});
        c.geom.max_cones.push_back({2, j, j + 1});
    }

    // All fixtures share one shape: with i3's pairing chi and i2's pairing p2,
    //   n = (-1)^{f w + chi} * prod_{t=p2+1}^{-chi+w-1} (f w + t)
    //       * (1/w) * prod_{j not in {i2,i3}} 1/(pairing_j + w*[j == i1])!
    auto make_fixture = [m](Int i1, Int i2, Int i3) {
        return [m, i1, i2, i3](Int f, const ExtExponent& e) -> Rational {
            Int w = e.w;
            if (w == 0) return 0;
            Int chi = ym_ray_pairing(m, e.d, i3);
            Int p2 = ym_ray_pairing(m, e.d, i2);
            Rational v = Rational(sign_pow(f * w + chi)) *
                         gp(f, w, p2 + 1, -chi + w - 1) / Rational(w);
            for (Int j = 1; j <= m + 3; ++j) {
                if (j == i2 || j == i3) continue;
                Int pj = ym_ray_pairing(m, e.d, j) + (j == i1 ? w : 0);
                v *= ifac(pj);
                if (v == 0) return v;
            }
            return v;
        };
    };

    CatalogPhase I0;
    I0.brane = {"I0", BraneKind::outer, 4, 3, 1, 0, 0};
    I0.fixture = make_fixture(4, 3, 1);
    c.phases.push_back(I0);

    for (Int b = 1; b <= m; ++b) {
        CatalogPhase P;
        std::ostringstream lb;
        lb << "I" << b;
        if (b <= m - 1)
            P.brane = {lb.str(), BraneKind::inner, b + 2, 1, b + 3, b + 4, 0};
        else
            P.brane = {lb.str(), BraneKind::outer, b + 2, 1, b + 3, 0, 0};
        if (b >= 3 && b <= m - 2) P.fixture = make_fixture(b + 2, 1, b + 3);
        c.phases.push_back(P);
    }
    for (Int b = 1; b <= m; ++b) {
        CatalogPhase P;
        std::ostringstream lb;
        lb << "II" << b;
        P.brane = {lb.str(), BraneKind::inner, 1, b + 3, b + 2, 2, 0};
        if (b >= 3 && b <= m - 2) P.fixture = make_fixture(1, b + 3, b + 2);
        c.phases.push_back(P);
    }
    return c;
}

// -------------------------------------------------------------------------

inline std::vector<std::string> catalog_names() {
    return {"conifold", "KP2", "KF0", "KdP1", "KdP2", "KdP3", "Ym"};
}

// name is one of catalog_names(); "Ym" takes the parameter m (default 3).
inline CatalogGeometry catalog_geometry(const std::string& name, Int m = 3) {
    if (name == "conifold") return catalog_conifold();
    if (name == "KP2") return catalog_KP2();
    if (name == "KF0") return catalog_KF0();
    if (name == "KdP1") return catalog_KdP1();
    if (name == "KdP2") return catalog_KdP2();
    if (name == "KdP3") return catalog_KdP3();
    if (name == "Ym") return catalog_Ym(m);
    throw ConfigError("unknown catalog geometry: " + name);
}

inline const CatalogPhase& catalog_phase(const CatalogGeometry& g,
                                         const std::string& label) {
    for (const auto& p : g.phases)
        if (p.brane.label == label) return p;
    throw ConfigError("unknown brane label: " + label);
}

// Closed mirror-map series A_i(q) for the built-in geometries, transcribed
// closed forms (zero for every i except the listed ones). Degrees d_a range
// over the effective cone; callers pass the closed-sector truncation grading.
inline Rational catalog_A_coeff(const std::string& name, Int m, Int i,
                                const std::vector<Int>& d) {
    using namespace fixture_detail;
    bool all_zero = true;
    for (Int x : d)
        if (x != 0) all_zero = false;
    if (all_zero) return 0;
    if (name == "conifold") return 0;
    if (name == "KP2") {
        Int d1 = d[0];
        if (i != 1 || d1 <= 0) return 0;
        return Rational(sign_pow(d1 - 1)) * Rational(factorial(3 * d1 - 1)) *
               ifac(d1) * ifac(d1) * ifac(d1);
    }
    if (name == "KF0") {
        Int d1 = d[0], d2 = d[1];
        if (i != 1 || d1 < 0 || d2 < 0) return 0;
        return Rational(-1) * Rational(factorial(2 * d1 + 2 * d2 - 1)) *
               ifac(d1) * ifac(d1) * ifac(d2) * ifac(d2);
    }
    if (name == "KdP1") {
        Int d1 = d[0], d2 = d[1];
        if (i != 1 || d2 < 0 || d1 < d2) return 0;
        return Rational(sign_pow(d2 - 1)) *
               Rational(factorial(2 * d1 + d2 - 1)) * ifac(d1) *
               ifac(d1 - d2) * ifac(d2) * ifac(d2);
    }
    if (name == "KdP2") {
        Int d1 = d[0], d2 = d[1], d3 = d[2];
        if (i != 1 || d1 < 0 || d2 < 0 || d3 < 0) return 0;
        return Rational(sign_pow(d3 - 1)) *
               Rational(factorial(2 * d1 + 2 * d2 + 3 * d3 - 1)) * ifac(d1) *
               ifac(d2) * ifac(d3) * ifac(d1 + d3) * ifac(d2 + d3);
    }
    if (name == "KdP3") {
        Int d1 = d[0], d2 = d[1], d3 = d[2], d4 = d[3];
        if (i != 1 || d3 < 0 || d4 < 0 || d1 + d3 < 0 || d1 + d4 < 0 ||
            d2 + d3 < 0 || d2 + d4 < 0)
            return 0;
        return Rational(sign_pow(d3 + d4 - 1)) *
               Rational(factorial(2 * d1 + 2 * d2 + 3 * d3 + 3 * d4 - 1)) *
               ifac(d1 + d3) * ifac(d1 + d4) * ifac(d2 + d3) *
               ifac(d2 + d4) * ifac(d3) * ifac(d4);
    }
    if (name == "Ym") {
        // Nonzero only for the base-chain rays 4..m+3, where the ray's own
        // pairing is negative and every other pairing is nonnegative.
        if (i < 4 || i > m + 3) return 0;
        Int pi = ym_ray_pairing(m, d, i);
        if (pi >= 0) return 0;
        Rational v = Rational(sign_pow(-pi - 1)) * Rational(factorial(-pi - 1));
        for (Int j = 1; j <= m + 3; ++j) {
            if (j == i) continue;
            v *= ifac(ym_ray_pairing(m, d, j));
            if (v == 0) return v;
        }
        return v;
    }
    throw ConfigError("unknown catalog geometry: " + name);
}

}  // namespace toricdisk
