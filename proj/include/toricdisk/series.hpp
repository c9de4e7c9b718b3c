#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "rational.hpp"

namespace toricdisk {

// Exponent of a monomial q0^w q1^{d1} ... qk^{dk}. w may be negative (Laurent
// direction); the d's may be negative too for intermediate objects.
struct ExtExponent {
    Int w = 0;
    std::vector<Int> d;

    ExtExponent() = default;
    ExtExponent(Int w_, std::vector<Int> d_) : w(w_), d(std::move(d_)) {}

    auto operator<=>(const ExtExponent&) const = default;

    ExtExponent operator+(const ExtExponent& o) const {
        if (d.size() != o.d.size()) throw Error("exponent arity mismatch");
        ExtExponent r(w + o.w, d);
        for (std::size_t a = 0; a < d.size(); ++a) r.d[a] += o.d[a];
        return r;
    }
    ExtExponent operator-() const {
        ExtExponent r(-w, d);
        for (auto& x : r.d) x = -x;
        return r;
    }
    Int component(std::size_t a) const { return a == 0 ? w : d.at(a - 1); }
};

// Strictly positive integer weights (g0; g1..gk); a series is truncated by
// total weighted grade g0*w + sum_a g_a*d_a <= order.
struct Grading {
    Int g0 = 1;
    std::vector<Int> gd;

    Grading() = default;
    Grading(Int g0_, std::vector<Int> gd_) : g0(g0_), gd(std::move(gd_)) {
        if (g0 <= 0) throw ConfigError("grading weights must be positive");
        for (Int g : gd)
            if (g <= 0) throw ConfigError("grading weights must be positive");
    }
    bool operator==(const Grading&) const = default;

    std::size_t num_closed() const { return gd.size(); }
    Int grade(const ExtExponent& e) const {
        if (e.d.size() != gd.size()) throw Error("exponent arity mismatch");
        Int g = g0 * e.w;
        for (std::size_t a = 0; a < gd.size(); ++a) g += gd[a] * e.d[a];
        return g;
    }
};

class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    TruncatedSeries(Grading grading, Int order)
        : grading_(std::move(grading)), order_(order) {}

    static TruncatedSeries constant(const Grading& g, Int order, const Rational& c) {
        TruncatedSeries s(g, order);
        s.add_term(ExtExponent(0, std::vector<Int>(g.num_closed(), 0)), c);
        return s;
    }
    static TruncatedSeries monomial(const Grading& g, Int order, const ExtExponent& e,
                                    const Rational& c = Rational(1)) {
        TruncatedSeries s(g, order);
        s.add_term(e, c);
        return s;
    }
    // The variable q_a (a = 0 for the open variable q0).
    static TruncatedSeries variable(const Grading& g, Int order, std::size_t a) {
        ExtExponent e(0, std::vector<Int>(g.num_closed(), 0));
        if (a == 0)
            e.w = 1;
        else
            e.d.at(a - 1) = 1;
        return monomial(g, order, e);
    }

    const Grading& grading() const { return grading_; }
    Int order() const { return order_; }
    const std::map<ExtExponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const TruncatedSeries& o) const {
        return grading_ == o.grading_ && order_ == o.order_ && terms_ == o.terms_;
    }

    // Coefficient of a monomial; asking beyond the truncation order is an error.
    Rational coeff(const ExtExponent& e) const {
        if (grading_.grade(e) > order_)
            throw Error("coefficient requested beyond truncation order");
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExtExponent& e, const Rational& c) {
        if (c == 0 || grading_.grade(e) > order_) return;
        Rational& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }

    // Smallest grade among terms; order+1 for the zero series.
    Int min_grade() const {
        Int m = order_ + 1;
        for (const auto& [e, c] : terms_) m = std::min(m, grading_.grade(e));
        return m;
    }

    TruncatedSeries truncated(Int new_order) const {
        if (new_order > order_)
            throw Error("cannot raise truncation order of a computed series");
        TruncatedSeries r(grading_, new_order);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(grading_, order_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_ring(a, b);
        TruncatedSeries r(a.grading_, std::min(a.order_, b.order_));
        for (const auto& [e, c] : a.terms_) r.add_term(e, c);
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_ring(a, b);
        TruncatedSeries r(a.grading_, std::min(a.order_, b.order_));
        for (const auto& [ea, ca] : a.terms_) {
            Int ga = a.grading_.grade(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (ga + b.grading_.grade(eb) > r.order_) continue;
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
        TruncatedSeries r(a.grading_, a.order_);
        if (c == 0) return r;
        for (const auto& [e, co] : a.terms_) r.terms_.emplace(e, c * co);
        return r;
    }
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries shifted(const ExtExponent& m, const Rational& c = Rational(1)) const {
        TruncatedSeries r(grading_, order_);
        for (const auto& [e, co] : terms_) r.add_term(e + m, c * co);
        return r;
    }

    // q_a d/dq_a (a = 0 acts on the open variable).
    TruncatedSeries theta(std::size_t a) const {
        TruncatedSeries r(grading_, order_);
        for (const auto& [e, c] : terms_) r.add_term(e, Rational(e.component(a)) * c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << to_string(c) << ")";
            if (e.w != 0) out << "*q0^" << e.w;
            for (std::size_t a = 0; a < e.d.size(); ++a)
                if (e.d[a] != 0) out << "*q" << (a + 1) << "^" << e.d[a];
        }
        return out.str();
    }

  private:
    static void check_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (!(a.grading_ == b.grading_)) throw Error("series grading mismatch");
    }

    Grading grading_;
    Int order_ = 0;
    std::map<ExtExponent, Rational> terms_;
};

// exp of a series with strictly positive minimal grade.
inline TruncatedSeries exp(const TruncatedSeries& s) {
    Int mg = s.min_grade();
    if (mg <= 0) throw Error("exp requires positive minimal grade");
    TruncatedSeries r = TruncatedSeries::constant(s.grading(), s.order(), 1);
    TruncatedSeries term = r;
    for (Int n = 1; n * mg <= s.order(); ++n) {
        term = term * s;
        if (term.is_zero()) break;
        r += Rational(1) / Rational(factorial(n)) * term;
    }
    return r;
}

// log(1 + s) for s with strictly positive minimal grade.
inline TruncatedSeries log1p(const TruncatedSeries& s) {
    Int mg = s.min_grade();
    if (mg <= 0) throw Error("log1p requires positive minimal grade");
    TruncatedSeries r(s.grading(), s.order());
    TruncatedSeries term = TruncatedSeries::constant(s.grading(), s.order(), 1);
    for (Int n = 1; n * mg <= s.order(); ++n) {
        term = term * s;
        if (term.is_zero()) break;
        r += Rational(n % 2 == 1 ? 1 : -1, n) * term;
    }
    return r;
}

// Multiplicative inverse; requires a unique term of minimal grade (the series
// then factors as monomial * unit).
inline TruncatedSeries inverse(const TruncatedSeries& s) {
    if (s.is_zero()) throw Error("inverse of zero series");
    Int mg = s.min_grade();
    const ExtExponent* lead = nullptr;
    int count = 0;
    for (const auto& [e, c] : s.terms())
        if (s.grading().grade(e) == mg) {
            lead = &e;
            ++count;
        }
    if (count != 1) throw Error("inverse requires a unique minimal-grade term");
    ExtExponent m = *lead;
    Rational c = s.terms().at(m);
    // u := s / (c * q^m) - 1 has positive minimal grade.
    TruncatedSeries u = s.shifted(-m, Rational(1) / c) -
                        TruncatedSeries::constant(s.grading(), s.order(), 1);
    TruncatedSeries geom = TruncatedSeries::constant(s.grading(), s.order(), 1);
    TruncatedSeries term = geom;
    Int umg = u.min_grade();
    for (Int n = 1; !u.is_zero() && n * umg <= s.order(); ++n) {
        term = term * u;
        if (term.is_zero()) break;
        geom += Rational(n % 2 == 1 ? -1 : 1) * term;
    }
    return geom.shifted(-m, Rational(1) / c);
}

inline TruncatedSeries pow(const TruncatedSeries& s, Int n) {
    if (n < 0) return pow(inverse(s), -n);
    TruncatedSeries r = TruncatedSeries::constant(s.grading(), s.order(), 1);
    TruncatedSeries base = s;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

// Evaluates the series at q_a = images[a] (a = 0..k). All images must live in
// one common ring, which becomes the ring of the result. Negative exponents
// require the corresponding image to be invertible.
inline TruncatedSeries substitute(const TruncatedSeries& s,
                                  const std::vector<TruncatedSeries>& images) {
    if (images.size() != s.grading().num_closed() + 1)
        throw Error("substitute: wrong number of images");
    const Grading& tg = images[0].grading();
    Int torder = images[0].order();
    for (const auto& im : images) {
        if (!(im.grading() == tg) || im.order() != torder)
            throw Error("substitute: images live in different rings");
    }
    // Per-variable power cache.
    std::vector<std::map<Int, TruncatedSeries>> cache(images.size());
    auto power = [&](std::size_t a, Int e) -> const TruncatedSeries& {
        auto it = cache[a].find(e);
        if (it == cache[a].end())
            it = cache[a].emplace(e, pow(images[a], e)).first;
        return it->second;
    };
    TruncatedSeries r(tg, torder);
    for (const auto& [e, c] : s.terms()) {
        TruncatedSeries t = TruncatedSeries::constant(tg, torder, c);
        if (e.w != 0) t = t * power(0, e.w);
        for (std::size_t a = 0; a < e.d.size(); ++a)
            if (e.d[a] != 0) t = t * power(a + 1, e.d[a]);
        r += t;
    }
    return r;
}

// Given correction series S_0..S_k (each free of q0), inverts the diagonal
// change of variables Q_a = q_a exp(S_a(q_1..q_k)), returning the images
// q_a(Q_0..Q_k) in the same ring. The closed-sector equations close among
// themselves; q0 then follows in one step.
inline std::vector<TruncatedSeries> invert_diagonal_map(
    const std::vector<TruncatedSeries>& corrections) {
    if (corrections.empty()) throw Error("invert_diagonal_map: no corrections");
    const Grading& g = corrections[0].grading();
    const Int order = corrections[0].order();
    const std::size_t k = g.num_closed();
    if (corrections.size() != k + 1)
        throw Error("invert_diagonal_map: wrong number of corrections");
    for (const auto& s : corrections)
        for (const auto& [e, c] : s.terms())
            if (e.w != 0) throw Error("invert_diagonal_map: correction involves q0");

    std::vector<TruncatedSeries> img(k + 1, TruncatedSeries(g, order));
    for (std::size_t a = 0; a <= k; ++a) img[a] = TruncatedSeries::variable(g, order, a);
    for (Int iter = 0; iter <= order + 1; ++iter) {
        std::vector<TruncatedSeries> next = img;
        bool stable = true;
        for (std::size_t a = 1; a <= k; ++a) {
            TruncatedSeries cand = TruncatedSeries::variable(g, order, a) *
                                   exp(-substitute(corrections[a], img));
            if (!(cand == img[a])) stable = false;
            next[a] = std::move(cand);
        }
        img = std::move(next);
        if (stable) {
            img[0] = TruncatedSeries::variable(g, order, 0) *
                     exp(-substitute(corrections[0], img));
            return img;
        }
    }
    throw Error("invert_diagonal_map: fixed point did not converge");
}

}  // namespace toricdisk
