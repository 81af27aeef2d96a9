#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "apll/numbers.hpp"

namespace apll {

// Element of a finite abelian group in invariant-factor presentation:
// residue tuple (x_1,...,x_k) with 0 <= x_i < d_i. The trivial group has the
// empty tuple.
struct GroupElement {
    std::vector<std::int64_t> residues;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Finite abelian group C_{d_1} x ... x C_{d_k} with d_1 | d_2 | ... | d_k,
// every d_i >= 2. Elements are canonically ordered by mixed-radix rank of
// their residue tuple (first coordinate most significant); every set-valued
// output of the library is emitted in that order.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
        : factors_(std::move(invariant_factors)) {
        order_ = 1;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 2)
                throw std::invalid_argument("invariant factors must be >= 2");
            if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
                throw std::invalid_argument("invariant factors must form a divisibility chain");
            order_ = checked_mul(order_, factors_[i]);
        }
    }

    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    std::int64_t order() const { return order_; }
    std::size_t component_count() const { return factors_.size(); }

    GroupElement identity() const {
        return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
    }

    bool contains(const GroupElement& g) const {
        if (g.residues.size() != factors_.size()) return false;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) return false;
        return true;
    }

    void require(const GroupElement& g) const {
        if (!contains(g))
            throw std::invalid_argument("element does not belong to this group");
    }

    std::int64_t rank_of(const GroupElement& g) const {
        require(g);
        std::int64_t r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            r = r * factors_[i] + g.residues[i];
        return r;
    }

    GroupElement element_at(std::int64_t rank) const {
        if (rank < 0 || rank >= order_) throw std::out_of_range("element rank out of range");
        GroupElement g{std::vector<std::int64_t>(factors_.size(), 0)};
        for (std::size_t i = factors_.size(); i-- > 0;) {
            g.residues[i] = rank % factors_[i];
            rank /= factors_[i];
        }
        return g;
    }

    GroupElement compose(const GroupElement& a, const GroupElement& b) const {
        require(a); require(b);
        GroupElement r = a;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            r.residues[i] = (r.residues[i] + b.residues[i]) % factors_[i];
        return r;
    }

    GroupElement inverse(const GroupElement& a) const {
        require(a);
        GroupElement r = a;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            r.residues[i] = (factors_[i] - r.residues[i]) % factors_[i];
        return r;
    }

    // g^t for any integer t; negative t goes through the inverse.
    GroupElement power(const GroupElement& a, std::int64_t t) const {
        require(a);
        GroupElement r = a;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            std::int64_t m = factors_[i];
            std::int64_t v = (a.residues[i] % m) * (t % m) % m;
            if (v < 0) v += m;
            r.residues[i] = v;
        }
        return r;
    }

    // rank-level arithmetic used by inner loops
    std::int64_t compose_ranks(std::int64_t a, std::int64_t b) const {
        std::int64_t r = 0;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            std::int64_t m = factors_[i];
            std::int64_t s = (a % m + b % m) % m;
            a /= m; b /= m;
            r += s * stride(i);
        }
        return r;
    }

    std::int64_t inverse_rank(std::int64_t a) const {
        std::int64_t r = 0;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            std::int64_t m = factors_[i];
            r += ((m - a % m) % m) * stride(i);
            a /= m;
        }
        return r;
    }

    std::int64_t power_rank(std::int64_t a, std::int64_t t) const {
        std::int64_t r = 0;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            std::int64_t m = factors_[i];
            std::int64_t v = (a % m) * (t % m) % m;
            if (v < 0) v += m;
            r += v * stride(i);
            a /= m;
        }
        return r;
    }

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::int64_t stride(std::size_t i) const {
        std::int64_t s = 1;
        for (std::size_t j = i + 1; j < factors_.size(); ++j) s *= factors_[j];
        return s;
    }

    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

inline GroupPtr make_group(std::vector<std::int64_t> invariant_factors) {
    return std::make_shared<const FiniteAbelianGroup>(std::move(invariant_factors));
}

namespace detail {

// Partitions of e in weakly decreasing order.
inline std::vector<std::vector<int>> partitions(int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) { out.push_back(cur); return; }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, e, e);
    return out;
}

}  // namespace detail

// One representative per isomorphism class of abelian groups of order m, in
// invariant-factor form, sorted by the factor list. The count is the product
// over primes of the partition numbers of the exponents.
inline std::vector<FiniteAbelianGroup> enumerate_abelian_groups(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("enumerate_abelian_groups: order must be >= 1");
    PrimeFactorization pf = factor(m);
    std::vector<std::vector<std::vector<int>>> per_prime;
    per_prime.reserve(pf.factors.size());
    for (const auto& f : pf.factors) per_prime.push_back(detail::partitions(f.exponent));

    std::vector<std::vector<std::int64_t>> all_factor_lists;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    while (true) {
        // combine the chosen partitions: align largest parts so the factors
        // form a divisibility chain
        std::size_t len = 0;
        for (std::size_t i = 0; i < pick.size(); ++i)
            len = std::max(len, per_prime[i][pick[i]].size());
        std::vector<std::int64_t> inv(len, 1);
        for (std::size_t i = 0; i < pick.size(); ++i) {
            const auto& part = per_prime[i][pick[i]];
            for (std::size_t j = 0; j < part.size(); ++j) {
                std::int64_t q = 1;
                for (int t = 0; t < part[j]; ++t) q = checked_mul(q, pf.factors[i].prime);
                // part[0] is the largest part: multiply into the last factor
                inv[len - 1 - j] = checked_mul(inv[len - 1 - j], q);
            }
        }
        all_factor_lists.push_back(std::move(inv));

        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    if (per_prime.empty()) all_factor_lists.assign(1, {});

    std::sort(all_factor_lists.begin(), all_factor_lists.end());
    all_factor_lists.erase(std::unique(all_factor_lists.begin(), all_factor_lists.end()),
                           all_factor_lists.end());

    std::vector<FiniteAbelianGroup> out;
    out.reserve(all_factor_lists.size());
    for (auto& fl : all_factor_lists) out.emplace_back(std::move(fl));
    return out;
}

}  // namespace apll
