#pragma once

#include "series.hpp"

namespace toricdisk {

// Polynomial in the commuting symbols log q_0 .. log q_k with TruncatedSeries
// coefficients; theta_a = q_a d/dq_a acts with theta_a(log q_b) = delta_ab.
class LogSeries {
  public:
    LogSeries() = default;
    LogSeries(Grading grading, Int order, Int max_log_degree = 2)
        : grading_(std::move(grading)), order_(order), max_log_(max_log_degree) {}

    static LogSeries from_series(const TruncatedSeries& s, Int max_log_degree = 2) {
        LogSeries r(s.grading(), s.order(), max_log_degree);
        r.add_term(std::vector<Int>(s.grading().num_closed() + 1, 0), s);
        return r;
    }
    // The bare symbol log q_a.
    static LogSeries log_symbol(const Grading& g, Int order, std::size_t a,
                                Int max_log_degree = 2) {
        LogSeries r(g, order, max_log_degree);
        std::vector<Int> m(g.num_closed() + 1, 0);
        m[a] = 1;
        r.add_term(m, TruncatedSeries::constant(g, order, 1));
        return r;
    }

    const Grading& grading() const { return grading_; }
    Int order() const { return order_; }
    const std::map<std::vector<Int>, TruncatedSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<Int>& m, const TruncatedSeries& s) {
        if (s.is_zero()) return;
        Int deg = 0;
        for (Int x : m) deg += x;
        if (deg > max_log_) throw Error("log degree exceeds bound");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LogSeries operator+(const LogSeries& o) const {
        LogSeries r(grading_, std::min(order_, o.order_), max_log_);
        for (const auto& [m, s] : terms_) r.add_term(m, s.truncated(r.order_));
        for (const auto& [m, s] : o.terms_) r.add_term(m, s.truncated(r.order_));
        return r;
    }
    LogSeries operator-(const LogSeries& o) const { return *this + Rational(-1) * o; }
    friend LogSeries operator*(const Rational& c, const LogSeries& l) {
        LogSeries r(l.grading_, l.order_, l.max_log_);
        if (c == 0) return r;
        for (const auto& [m, s] : l.terms_) r.add_term(m, c * s);
        return r;
    }

    // theta_a: differentiates coefficients and lowers log powers.
    LogSeries theta(std::size_t a) const {
        LogSeries r(grading_, order_, max_log_);
        for (const auto& [m, s] : terms_) {
            r.add_term(m, s.theta(a));
            if (m[a] > 0) {
                std::vector<Int> m2 = m;
                --m2[a];
                r.add_term(m2, Rational(m[a]) * s);
            }
        }
        return r;
    }

    // Multiplication by the monomial q^e (coefficient-level shift).
    LogSeries shifted(const ExtExponent& e) const {
        LogSeries r(grading_, order_, max_log_);
        for (const auto& [m, s] : terms_) r.add_term(m, s.shifted(e));
        return r;
    }

    LogSeries truncated(Int new_order) const {
        LogSeries r(grading_, new_order, max_log_);
        for (const auto& [m, s] : terms_) r.add_term(m, s.truncated(new_order));
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, s] : terms_) {
            if (!out.empty()) out += " + ";
            out += "[" + s.str() + "]";
            for (std::size_t a = 0; a < m.size(); ++a)
                for (Int t = 0; t < m[a]; ++t) out += "*log(q" + std::to_string(a) + ")";
        }
        return out;
    }

  private:
    Grading grading_;
    Int order_ = 0;
    Int max_log_ = 2;
    std::map<std::vector<Int>, TruncatedSeries> terms_;
};

}  // namespace toricdisk
