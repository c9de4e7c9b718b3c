#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "rational.hpp"

namespace toricdisk {

using Partition = std::vector<Int>;  // weakly decreasing positive parts

inline void check_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw Error("partition parts must be positive");
        if (i && p[i] > p[i - 1]) throw Error("partition parts must be decreasing");
    }
}

inline Int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), Int(0)); }

inline std::vector<Partition> partitions_of(Int d, Int max_part = -1) {
    if (max_part < 0) max_part = d;
    if (d == 0) return {{}};
    std::vector<Partition> out;
    for (Int first = std::min(d, max_part); first >= 1; --first)
        for (auto rest : partitions_of(d - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

// Centralizer order z_mu = |Aut(mu)| * prod mu_j.
inline Integer z_mu(const Partition& mu) {
    check_partition(mu);
    Integer z = 1;
    Int run = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        z *= static_cast<long>(mu[i]);
        run = (i && mu[i] == mu[i - 1]) ? run + 1 : 1;
        z *= static_cast<long>(run);
    }
    return z;
}

inline Int kappa_mu(const Partition& mu) {
    check_partition(mu);
    Int k = 0;
    for (std::size_t j = 0; j < mu.size(); ++j)
        k += mu[j] * (mu[j] - 2 * static_cast<Int>(j + 1) + 1);
    return k;
}

// Symmetric-group character chi_nu on the class mu, by the Murnaghan-Nakayama
// border-strip recursion in beta-number form: with B = {nu_i + L - i}, removing
// a border strip of size p is replacing some b in B by b - p (not already in
// B), with sign (-1)^{#elements of B strictly between b-p and b}.
inline Integer chi(const Partition& nu, Partition mu) {
    check_partition(nu);
    check_partition(mu);
    if (weight(nu) != weight(mu)) throw Error("character arguments of different sizes");
    if (mu.empty()) return 1;
    static std::map<std::pair<Partition, Partition>, Integer> memo;
    auto key = std::make_pair(nu, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Int part = mu.front();
    Partition rest(mu.begin() + 1, mu.end());
    const Int L = static_cast<Int>(nu.size());
    std::vector<Int> beta;
    for (Int i = 0; i < L; ++i) beta.push_back(nu[i] + (L - 1 - i));
    Integer total = 0;
    for (Int idx = 0; idx < L; ++idx) {
        Int b = beta[idx], nb = b - part;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        Int height = 0;
        for (Int x : beta)
            if (nb < x && x < b) ++height;
        std::vector<Int> nbeta = beta;
        nbeta[idx] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        Partition shape;
        for (Int i = 0; i < L; ++i) {
            Int p = nbeta[i] - (L - 1 - i);
            if (p > 0) shape.push_back(p);
        }
        Integer sub = chi(shape, rest);
        if (height % 2) sub = -sub;
        total += sub;
    }
    memo[key] = total;
    return total;
}

// Finitely supported Laurent polynomial in t = e^{lambda/2}.
using HalfLaurent = std::map<Int, Rational>;

// Phi-bullet, the framing-twist kernel: sum over nu of t^{kappa_nu}
// chi_nu(mu+) chi_nu(mu-) / (z_{mu+} z_{mu-}).
inline HalfLaurent phi_bullet(const Partition& mu_plus, const Partition& mu_minus) {
    if (weight(mu_plus) != weight(mu_minus))
        throw Error("phi_bullet arguments of different sizes");
    HalfLaurent out;
    Rational denom = Rational(z_mu(mu_plus)) * Rational(z_mu(mu_minus));
    for (const auto& nu : partitions_of(weight(mu_plus))) {
        Rational c = Rational(chi(nu, mu_plus)) * Rational(chi(nu, mu_minus)) / denom;
        if (c == 0) continue;
        Rational& slot = out[kappa_mu(nu)];
        slot += c;
        if (slot == 0) out.erase(kappa_mu(nu));
    }
    return out;
}

inline Rational eval_at_one(const HalfLaurent& p) {
    Rational s(0);
    for (const auto& [e, c] : p) s += c;
    return s;
}

}  // namespace toricdisk
