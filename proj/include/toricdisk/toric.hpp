#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "series.hpp"

namespace toricdisk {

// Smooth toric Calabi-Yau threefold, encoded by its charge matrix (rows l^(a),
// a = 1..k, k = r-3) and the maximal cones of a simplicial fan. Rays are
// optional extra data used for smoothness checks only.
struct ToricCY3 {
    std::string name;
    Int r = 0;
    Int k = 0;
    std::vector<std::vector<Int>> charge;        // k rows of length r
    std::vector<std::vector<Int>> max_cones;     // sorted 1-based triples
    std::optional<std::vector<std::array<Int, 3>>> rays;
};

enum class BraneKind { outer, inner };

// A framed brane sits on the edge tau = {i2,i3} of the cone {i1,i2,i3};
// for an inner brane the second cone through tau is {i2,i3,i4}.
struct BraneSpec {
    std::string label;
    BraneKind kind = BraneKind::outer;
    Int i1 = 0, i2 = 0, i3 = 0;
    Int i4 = 0;  // inner only; 0 when absent
    Int framing = 0;
};

inline bool cone_contains(const std::vector<Int>& cone, const std::vector<Int>& sub) {
    for (Int s : sub)
        if (std::find(cone.begin(), cone.end(), s) == cone.end()) return false;
    return true;
}

inline std::vector<std::string> validate(const ToricCY3& g) {
    std::vector<std::string> bad;
    if (g.k != g.r - 3) bad.push_back("k != r-3");
    if (static_cast<Int>(g.charge.size()) != g.k) bad.push_back("charge row count != k");
    for (std::size_t a = 0; a < g.charge.size(); ++a) {
        if (static_cast<Int>(g.charge[a].size()) != g.r) {
            bad.push_back("charge row " + std::to_string(a + 1) + " has wrong length");
            continue;
        }
        Int s = 0;
        for (Int x : g.charge[a]) s += x;
        if (s != 0)
            bad.push_back("charge row " + std::to_string(a + 1) +
                          " violates the Calabi-Yau condition (sum != 0)");
    }
    {
        QMatrix m;
        for (const auto& row : g.charge) {
            QVector v;
            for (Int x : row) v.push_back(Rational(x));
            m.push_back(std::move(v));
        }
        if (!m.empty() && rank(m) != g.k) bad.push_back("charge matrix rank != k");
    }
    std::set<std::vector<Int>> seen;
    for (const auto& c : g.max_cones) {
        if (c.size() != 3) {
            bad.push_back("maximal cone is not a triple");
            continue;
        }
        std::vector<Int> s = c;
        std::sort(s.begin(), s.end());
        if (s[0] < 1 || s[2] > g.r || s[0] == s[1] || s[1] == s[2])
            bad.push_back("maximal cone has out-of-range or repeated rays");
        if (!seen.insert(s).second) bad.push_back("duplicate maximal cone");
    }
    if (g.rays) {
        const auto& v = *g.rays;
        if (static_cast<Int>(v.size()) != g.r)
            bad.push_back("ray count != r");
        else {
            for (Int a = 0; a < g.k; ++a) {
                std::array<Int, 3> s{0, 0, 0};
                for (Int i = 0; i < g.r; ++i)
                    for (int c = 0; c < 3; ++c) s[c] += g.charge[a][i] * v[i][c];
                if (s != std::array<Int, 3>{0, 0, 0})
                    bad.push_back("charge row " + std::to_string(a + 1) +
                                  " is not in the kernel of the ray matrix");
            }
            for (const auto& c : g.max_cones) {
                if (c.size() != 3) continue;
                const auto &p = v[c[0] - 1], &q = v[c[1] - 1], &w = v[c[2] - 1];
                Int det = p[0] * (q[1] * w[2] - q[2] * w[1]) -
                          p[1] * (q[0] * w[2] - q[2] * w[0]) +
                          p[2] * (q[0] * w[1] - q[1] * w[0]);
                if (det != 1 && det != -1)
                    bad.push_back("non-smooth maximal cone (determinant != ±1)");
            }
            // A single hyperplane <m, v_i> = 1 through all rays (CY height-1).
            QMatrix a;
            QVector rhs;
            for (const auto& vi : v) {
                a.push_back({Rational(vi[0]), Rational(vi[1]), Rational(vi[2])});
                rhs.push_back(1);
            }
            if (!solve_unique(a, rhs)) bad.push_back("rays are not at height 1");
        }
    }
    return bad;
}

inline std::vector<std::string> validate_brane(const ToricCY3& g, const BraneSpec& b) {
    std::vector<std::string> bad;
    auto in_range = [&](Int i) { return 1 <= i && i <= g.r; };
    if (!in_range(b.i1) || !in_range(b.i2) || !in_range(b.i3))
        bad.push_back("brane ray index out of range");
    if (b.i1 == b.i2 || b.i1 == b.i3 || b.i2 == b.i3)
        bad.push_back("brane rays i1,i2,i3 not distinct");
    auto is_cone = [&](std::vector<Int> s) {
        std::sort(s.begin(), s.end());
        for (auto c : g.max_cones) {
            std::sort(c.begin(), c.end());
            if (c == s) return true;
        }
        return false;
    };
    if (bad.empty() && !is_cone({b.i1, b.i2, b.i3}))
        bad.push_back("{i1,i2,i3} is not a maximal cone");
    if (b.kind == BraneKind::inner) {
        if (!in_range(b.i4))
            bad.push_back("inner brane requires i4");
        else if (!is_cone({b.i2, b.i3, b.i4}))
            bad.push_back("{i2,i3,i4} is not a maximal cone");
        else if (b.i4 == b.i1)
            bad.push_back("inner brane cones coincide");
    } else if (b.i4 != 0) {
        bad.push_back("outer brane must not carry i4");
    }
    return bad;
}

// Open charge vector: 1 at i1, f at i2, -f-1 at i3, 0 elsewhere.
inline std::vector<Int> l0_vector(const ToricCY3& g, const BraneSpec& b, Int f) {
    std::vector<Int> l(g.r, 0);
    l[b.i1 - 1] = 1;
    l[b.i2 - 1] = f;
    l[b.i3 - 1] = -f - 1;
    return l;
}

inline Int pairing(const ToricCY3& g, const std::vector<Int>& beta, Int i) {
    if (i < 1 || i > g.r) throw Error("ray index out of range");
    Int s = 0;
    for (Int a = 0; a < g.k; ++a) s += beta[a] * g.charge[a][i - 1];
    return s;
}

// Pairing of an extended class (w; d) with D_i*, i in 1..r+2; the two extra
// slots carry the appended charges (+1, -1) of the open direction.
inline Int extended_pairing(const ToricCY3& g, const BraneSpec& b, Int f,
                            const ExtExponent& bt, Int i) {
    if (i == g.r + 1) return bt.w;
    if (i == g.r + 2) return -bt.w;
    if (i < 1 || i > g.r) throw Error("ray index out of range");
    Int s = bt.w * l0_vector(g, b, f)[i - 1];
    for (Int a = 0; a < g.k; ++a) s += bt.d[a] * g.charge[a][i - 1];
    return s;
}

// Anticone test: beta is effective iff its negative support is the ray set of
// a cone of the fan (i.e. a subset of some maximal cone).
inline bool is_effective(const ToricCY3& g, const std::vector<Int>& beta) {
    std::vector<Int> neg;
    for (Int i = 1; i <= g.r; ++i)
        if (pairing(g, beta, i) < 0) neg.push_back(i);
    if (neg.empty()) return true;
    for (const auto& c : g.max_cones)
        if (cone_contains(c, neg)) return true;
    return false;
}

// Solves for beta with prescribed pairings on a constrained set of rays
// (all rays not listed in `free_rays`); pairings outside `ones` are 0.
inline std::optional<std::vector<Int>> solve_class(const ToricCY3& g,
                                                   const std::set<Int>& free_rays,
                                                   const std::set<Int>& ones) {
    QMatrix a;
    QVector rhs;
    for (Int i = 1; i <= g.r; ++i) {
        if (free_rays.count(i)) continue;
        QVector row;
        for (Int c = 0; c < g.k; ++c) row.push_back(Rational(g.charge[c][i - 1]));
        a.push_back(std::move(row));
        rhs.push_back(ones.count(i) ? 1 : 0);
    }
    auto x = solve_unique(a, rhs);
    if (!x) return std::nullopt;
    std::vector<Int> beta;
    for (const auto& q : *x) {
        Rational c = q;
        c.canonicalize();
        if (c.get_den() != 1) return std::nullopt;
        beta.push_back(static_cast<Int>(c.get_num().get_si()));
    }
    return beta;
}

// The curve class of the compact brane edge: pairings 1 at i1 and i4, 0 outside
// {i1,i2,i3,i4}.
inline std::vector<Int> curve_class_alpha(const ToricCY3& g, const BraneSpec& b) {
    if (b.kind != BraneKind::inner) throw ConfigError("alpha requires an inner brane");
    auto beta = solve_class(g, {b.i2, b.i3}, {b.i1, b.i4});
    if (!beta) throw ConfigError("brane edge class has no unique integral solution");
    if (!is_effective(g, *beta)) throw ConfigError("brane edge class is not effective");
    return *beta;
}

inline Int inner_n(const ToricCY3& g, const BraneSpec& b) {
    return -pairing(g, curve_class_alpha(g, b), b.i2) - 1;
}

// Generators of the cone of effective curve classes: classes of the compact
// torus-invariant edges (edges lying in exactly two maximal cones).
inline std::vector<std::vector<Int>> mori_generators(const ToricCY3& g) {
    std::set<std::vector<Int>> out;
    for (Int p = 1; p <= g.r; ++p)
        for (Int q = p + 1; q <= g.r; ++q) {
            std::vector<Int> apex;
            for (const auto& c : g.max_cones)
                if (cone_contains(c, {p, q}))
                    for (Int i : c)
                        if (i != p && i != q) apex.push_back(i);
            if (apex.size() != 2) continue;
            auto beta = solve_class(g, {p, q}, {apex[0], apex[1]});
            if (!beta) throw Error("compact edge class failed to solve");
            if (!is_effective(g, *beta)) throw Error("compact edge class not effective");
            out.insert(*beta);
        }
    if (out.empty()) throw Error("no compact edges found");
    return {out.begin(), out.end()};
}

// The pairing matrix M over I \ {i2,i3} in (w; d)-space. Its k+1 rows are
// (l0_i | l_i^(1..k)); full rank for any valid brane (the rays outside the
// cone {i1,i2,i3} give a unimodular charge minor).
inline QMatrix extended_pairing_matrix(const ToricCY3& g, const BraneSpec& b, Int f) {
    auto l0 = l0_vector(g, b, f);
    QMatrix m;
    for (Int i = 1; i <= g.r; ++i) {
        if (i == b.i2 || i == b.i3) continue;
        QVector row{Rational(l0[i - 1])};
        for (Int a = 0; a < g.k; ++a) row.push_back(Rational(g.charge[a][i - 1]));
        m.push_back(std::move(row));
    }
    return m;
}

// Generator rays of the simplicial cone {M x >= 0}: the columns of M^{-1},
// cleared to primitive integer vectors.
inline std::vector<std::vector<Int>> extended_cone_generators(const ToricCY3& g,
                                                              const BraneSpec& b, Int f) {
    auto minv = inverse(extended_pairing_matrix(g, b, f));
    if (!minv) throw ConfigError("degenerate brane pairing matrix");
    const std::size_t n = minv->size();
    std::vector<std::vector<Int>> gens;
    for (std::size_t j = 0; j < n; ++j) {
        Integer lcm = 1;
        for (std::size_t i = 0; i < n; ++i) {
            Rational c = (*minv)[i][j];
            c.canonicalize();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        std::vector<Int> v;
        Integer gcd = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Rational c = (*minv)[i][j] * Rational(lcm);
            c.canonicalize();
            v.push_back(static_cast<Int>(c.get_num().get_si()));
            mpz_gcd_ui(gcd.get_mpz_t(), gcd.get_mpz_t(),
                       static_cast<unsigned long>(std::abs(v.back())));
        }
        Int d = gcd == 0 ? 1 : static_cast<Int>(gcd.get_si());
        for (auto& x : v) x /= d;
        gens.push_back(std::move(v));
    }
    return gens;
}

// Searches for strictly positive integer weights (g0; g1..gk) that are positive
// on every supplied direction vector. Deterministic: greedy repair with a
// bounded exhaustive fallback.
inline Grading find_grading_for(const std::vector<std::vector<Int>>& dirs, std::size_t dim) {
    auto dot = [&](const std::vector<Int>& w, const std::vector<Int>& v) {
        Int s = 0;
        for (std::size_t i = 0; i < dim; ++i) s += w[i] * v[i];
        return s;
    };
    std::vector<Int> w(dim, 1);
    for (int it = 0; it < 500; ++it) {
        const std::vector<Int>* viol = nullptr;
        for (const auto& v : dirs)
            if (dot(w, v) <= 0) {
                viol = &v;
                break;
            }
        if (!viol) {
            std::vector<Int> gd(w.begin() + 1, w.end());
            return Grading(w[0], gd);
        }
        std::size_t best = dim;
        for (std::size_t i = 0; i < dim; ++i)
            if ((*viol)[i] > 0 && (best == dim || (*viol)[i] > (*viol)[best])) best = i;
        if (best == dim) throw ConfigError("no positive grading exists");
        ++w[best];
    }
    // Exhaustive fallback over a small box, lexicographic for determinism.
    std::vector<Int> cand(dim, 1);
    const Int cap = 8;
    while (true) {
        bool ok = true;
        for (const auto& v : dirs)
            if (dot(cand, v) <= 0) {
                ok = false;
                break;
            }
        if (ok) {
            std::vector<Int> gd(cand.begin() + 1, cand.end());
            return Grading(cand[0], gd);
        }
        std::size_t i = dim;
        while (i > 0) {
            if (++cand[i - 1] <= cap) break;
            cand[i - 1] = 1;
            --i;
        }
        if (i == 0) throw ConfigError("no positive grading found in search box");
    }
}

// Grading positive on the closed effective cone, the brane's extended disk
// cone (when a brane is given), and any extra directions (mirror-curve
// monomials). The open weight slot is always present.
inline Grading find_grading(const ToricCY3& g, const BraneSpec* b, Int f,
                            const std::vector<std::vector<Int>>& extra = {}) {
    std::vector<std::vector<Int>> dirs;
    for (const auto& m : mori_generators(g)) {
        std::vector<Int> v{0};
        v.insert(v.end(), m.begin(), m.end());
        dirs.push_back(std::move(v));
    }
    if (b)
        for (auto& v : extended_cone_generators(g, *b, f)) dirs.push_back(std::move(v));
    for (const auto& v : extra) dirs.push_back(v);
    return find_grading_for(dirs, static_cast<std::size_t>(g.k) + 1);
}

namespace detail {
// Per-coordinate box bound for {sum lambda_j v_j : lambda >= 0, grade <= N}.
inline std::vector<Int> generator_box(const std::vector<std::vector<Int>>& gens,
                                      const Grading& grading, Int N) {
    const std::size_t dim = gens.empty() ? 0 : gens[0].size();
    std::vector<Rational> bound(dim, Rational(0));
    for (const auto& v : gens) {
        Int gv = grading.g0 * v[0];
        for (std::size_t a = 1; a < dim; ++a) gv += grading.gd[a - 1] * v[a];
        if (gv <= 0) throw ConfigError("grading not positive on a cone generator");
        for (std::size_t a = 0; a < dim; ++a)
            bound[a] += Rational(N, gv) * Rational(std::abs(v[a]));
    }
    std::vector<Int> box(dim, 0);
    for (std::size_t a = 0; a < dim; ++a) {
        Rational c = bound[a];
        c.canonicalize();
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
        box[a] = static_cast<Int>(q.get_si());
    }
    return box;
}
}  // namespace detail

// All nonzero effective closed classes of grade <= N, sorted.
inline std::vector<std::vector<Int>> enumerate_effective(const ToricCY3& g,
                                                         const Grading& grading, Int N) {
    auto gens = mori_generators(g);
    std::vector<std::vector<Int>> lifted;
    for (const auto& m : gens) {
        std::vector<Int> v{0};
        v.insert(v.end(), m.begin(), m.end());
        lifted.push_back(std::move(v));
    }
    auto box = detail::generator_box(lifted, grading, N);
    std::vector<std::vector<Int>> out;
    std::vector<Int> d(g.k, 0);
    for (Int a = 0; a < g.k; ++a) d[a] = -box[a + 1];
    while (true) {
        Int grade = 0;
        for (Int a = 0; a < g.k; ++a) grade += grading.gd[a] * d[a];
        bool zero = std::all_of(d.begin(), d.end(), [](Int x) { return x == 0; });
        if (!zero && grade >= 1 && grade <= N && is_effective(g, d)) out.push_back(d);
        Int a = g.k;
        while (a > 0) {
            if (++d[a - 1] <= box[a]) break;
            d[a - 1] = -box[a];
            --a;
        }
        if (a == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All extended classes (w != 0, pairings over I\{i2,i3} nonnegative) of grade
// <= N, sorted lexicographically by (w; d).
inline std::vector<ExtExponent> enumerate_extended(const ToricCY3& g, const BraneSpec& b,
                                                   Int f, const Grading& grading, Int N) {
    auto gens = extended_cone_generators(g, b, f);
    auto box = detail::generator_box(gens, grading, N);
    std::vector<ExtExponent> out;
    ExtExponent e(0, std::vector<Int>(g.k, 0));
    std::vector<Int> cur(g.k + 1);
    for (std::size_t a = 0; a <= static_cast<std::size_t>(g.k); ++a) cur[a] = -box[a];
    while (true) {
        e.w = cur[0];
        for (Int a = 0; a < g.k; ++a) e.d[a] = cur[a + 1];
        if (e.w != 0 && grading.grade(e) <= N) {
            bool ok = true;
            for (Int i = 1; i <= g.r && ok; ++i) {
                if (i == b.i2 || i == b.i3) continue;
                if (extended_pairing(g, b, f, e, i) < 0) ok = false;
            }
            if (ok) out.push_back(e);
        }
        std::size_t a = cur.size();
        while (a > 0) {
            if (++cur[a - 1] <= box[a - 1]) break;
            cur[a - 1] = -box[a - 1];
            --a;
        }
        if (a == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toricdisk
