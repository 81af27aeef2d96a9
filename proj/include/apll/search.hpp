#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "apll/certificate.hpp"
#include "apll/group.hpp"

namespace apll {

struct SearchConfig {
    std::int64_t n = 1;
    std::uint64_t work_budget = 1'000'000'000;
    bool dedupe_by_automorphism = false;
    int parallel_width = 1;
    bool pruning = true;  // exists so tests can compare against the unpruned run
};

struct SearchOutcome {
    std::vector<Certificate> certificates;
    bool exhausted = false;  // true only if the whole space was covered in budget
    std::uint64_t nodes_visited = 0;
};

namespace detail {

struct PairTable {
    // inverse pairs {g, g^-1} of non-identity elements, sorted by smaller rank
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::int64_t identity_rank = 0;
};

inline PairTable build_pairs(const FiniteAbelianGroup& g) {
    PairTable t;
    t.identity_rank = g.rank_of(g.identity());
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (std::int64_t r = 0; r < g.order(); ++r) {
        if (r == t.identity_rank || seen[r]) continue;
        std::int64_t inv = g.inverse_rank(r);
        seen[r] = seen[inv] = true;
        t.pairs.emplace_back(std::min(r, inv), std::max(r, inv));
    }
    return t;
}

// One subtree of the search: T0's first chosen pair index is fixed (or -1
// when T0 takes no pairs at all). Runs a full depth-first enumeration with a
// local node cap; completion within the cap sets `complete`.
struct SubtreeResult {
    std::vector<Certificate> certificates;
    std::uint64_t nodes = 0;
    bool complete = true;
};

class Enumerator {
public:
    Enumerator(GroupPtr group, std::int64_t n, const SearchConfig& cfg)
        : group_(std::move(group)), n_(n), cfg_(cfg), table_(build_pairs(*group_)) {
        bool odd = n_ % 2 != 0;
        pairs0_ = odd ? (n_ - 1) / 2 : n_ / 2;
        pairs1_ = odd ? (n_ + 1) / 2 : n_ / 2;
    }

    std::int64_t first_level_options() const {
        return pairs0_ == 0 ? 1
                            : static_cast<std::int64_t>(table_.pairs.size());
    }

    SubtreeResult run_subtree(std::int64_t first, std::uint64_t node_cap) const {
        SubtreeResult res;
        State st(*this);
        if (pairs0_ == 0) {
            choose_t1(st, 0, res, node_cap);
            return res;
        }
        if (first + (pairs0_ - 1) >= static_cast<std::int64_t>(table_.pairs.size()))
            return res;  // not enough pairs left; empty subtree
        if (!st.push_t0(first, cfg_.pruning)) {
            ++res.nodes;
            return res;
        }
        ++res.nodes;
        choose_t0(st, first + 1, 1, res, node_cap);
        return res;
    }

private:
    struct State {
        const Enumerator& e;
        std::vector<std::int64_t> t0_ranks;          // includes identity
        std::vector<std::int64_t> t1_pair_idx;
        std::vector<std::int64_t> t0_pair_idx;
        std::vector<std::int64_t> conv;              // running T0*T1 coefficients
        std::vector<bool> in_t0;

        explicit State(const Enumerator& en)
            : e(en), conv(static_cast<std::size_t>(en.group_->order()), 0),
              in_t0(static_cast<std::size_t>(en.group_->order()), false) {
            t0_ranks.push_back(en.table_.identity_rank);
            in_t0[en.table_.identity_rank] = true;
        }

        // T0-phase prunes: the certificate's set conditions restricted to T0
        // (own squares, distinct products, own cubes). Cheap full recompute;
        // the sets never exceed a handful of elements at feasible n.
        bool t0_conditions_hold() const {
            const auto& g = *e.group_;
            std::int64_t id = e.table_.identity_rank;
            std::set<std::int64_t> squares;
            for (auto r : t0_ranks) squares.insert(g.power_rank(r, 2));
            for (auto r : t0_ranks)
                if (r != id && squares.count(r)) return false;
            for (auto r : t0_ranks) {
                std::int64_t cube = g.power_rank(r, 3);
                if (in_t0[cube] && cube != id) return false;
            }
            for (auto a : t0_ranks)
                for (auto b : t0_ranks) {
                    if (a == b) continue;
                    std::int64_t prod = g.compose_ranks(a, b);
                    if (prod != id && squares.count(prod)) return false;
                }
            return true;
        }

        bool push_t0(std::int64_t pair_idx, bool prune) {
            const auto& p = e.table_.pairs[pair_idx];
            t0_pair_idx.push_back(pair_idx);
            t0_ranks.push_back(p.first);
            t0_ranks.push_back(p.second);
            in_t0[p.first] = in_t0[p.second] = true;
            if (prune && !t0_conditions_hold()) { pop_t0(); return false; }
            return true;
        }

        void pop_t0() {
            const auto& p = e.table_.pairs[t0_pair_idx.back()];
            in_t0[p.first] = in_t0[p.second] = false;
            t0_ranks.pop_back();
            t0_ranks.pop_back();
            t0_pair_idx.pop_back();
        }

        // T1-phase: extend the running convolution by one inverse pair and
        // cut as soon as any coefficient passes 1 or the identity is hit.
        bool push_t1(std::int64_t pair_idx, bool prune) {
            const auto& g = *e.group_;
            const auto& p = e.table_.pairs[pair_idx];
            t1_pair_idx.push_back(pair_idx);
            bool ok = true;
            for (auto a : t0_ranks) {
                std::int64_t r1 = g.compose_ranks(a, p.first);
                std::int64_t r2 = g.compose_ranks(a, p.second);
                ++conv[r1];
                ++conv[r2];
                if (prune && (conv[r1] > 1 || conv[r2] > 1 ||
                              conv[e.table_.identity_rank] > 0))
                    ok = false;
            }
            if (!ok) { pop_t1(); return false; }
            return true;
        }

        void pop_t1() {
            const auto& g = *e.group_;
            const auto& p = e.table_.pairs[t1_pair_idx.back()];
            for (auto a : t0_ranks) {
                --conv[g.compose_ranks(a, p.first)];
                --conv[g.compose_ranks(a, p.second)];
            }
            t1_pair_idx.pop_back();
        }
    };

    void choose_t0(State& st, std::int64_t from, std::int64_t chosen,
                   SubtreeResult& res, std::uint64_t cap) const {
        if (!res.complete) return;
        if (chosen == pairs0_) {
            choose_t1(st, 0, res, cap);
            return;
        }
        for (std::int64_t i = from;
             i < static_cast<std::int64_t>(table_.pairs.size()); ++i) {
            if (res.nodes >= cap) { res.complete = false; return; }
            ++res.nodes;
            if (!st.push_t0(i, cfg_.pruning)) continue;
            choose_t0(st, i + 1, chosen + 1, res, cap);
            st.pop_t0();
            if (!res.complete) return;
        }
    }

    void choose_t1(State& st, std::int64_t from, SubtreeResult& res,
                   std::uint64_t cap) const {
        if (!res.complete) return;
        if (static_cast<std::int64_t>(st.t1_pair_idx.size()) == pairs1_) {
            emit(st, res);
            return;
        }
        for (std::int64_t i = from;
             i < static_cast<std::int64_t>(table_.pairs.size()); ++i) {
            if (res.nodes >= cap) { res.complete = false; return; }
            if (std::find(st.t0_pair_idx.begin(), st.t0_pair_idx.end(), i) !=
                st.t0_pair_idx.end())
                continue;
            ++res.nodes;
            if (!st.push_t1(i, cfg_.pruning)) continue;
            choose_t1(st, i + 1, res, cap);
            st.pop_t1();
            if (!res.complete) return;
        }
    }

    void emit(const State& st, SubtreeResult& res) const {
        Certificate cert;
        cert.group = group_;
        cert.n = n_;
        for (auto r : st.t0_ranks) cert.t0.push_back(group_->element_at(r));
        for (auto idx : st.t1_pair_idx) {
            cert.t1.push_back(group_->element_at(table_.pairs[idx].first));
            cert.t1.push_back(group_->element_at(table_.pairs[idx].second));
        }
        cert.canonicalize();
        if (certificate_valid(cert)) res.certificates.push_back(std::move(cert));
    }

    GroupPtr group_;
    std::int64_t n_;
    SearchConfig cfg_;
    PairTable table_;
    std::int64_t pairs0_ = 0, pairs1_ = 0;

    friend SearchOutcome run_enumeration(const GroupPtr&, std::int64_t,
                                         const SearchConfig&);
};

inline std::vector<std::int64_t> cert_rank_key(const Certificate& c) {
    std::vector<std::int64_t> key;
    for (const auto& g : c.t0) key.push_back(c.group->rank_of(g));
    key.push_back(-1);  // separator
    for (const auto& g : c.t1) key.push_back(c.group->rank_of(g));
    return key;
}

// Orbit representative under the power maps g -> g^t with gcd(t,|H|) = 1;
// for cyclic H this is the full automorphism group.
inline std::vector<std::int64_t> automorphism_canonical_key(const Certificate& c) {
    const auto& g = *c.group;
    std::vector<std::int64_t> best;
    for (std::int64_t t = 1; t < g.order(); ++t) {
        if (std::gcd(t, g.order()) != 1) continue;
        Certificate mapped;
        mapped.group = c.group;
        mapped.n = c.n;
        for (const auto& x : c.t0) mapped.t0.push_back(g.power(x, t));
        for (const auto& x : c.t1) mapped.t1.push_back(g.power(x, t));
        mapped.canonicalize();
        auto key = cert_rank_key(mapped);
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

// Subtrees are explored independently (possibly in parallel) and merged in
// canonical order; the budget is charged against that order, so outcomes and
// node counts are identical for every worker count.
inline SearchOutcome run_enumeration(const GroupPtr& group, std::int64_t n,
                                     const SearchConfig& cfg) {
    std::int64_t expected = checked_add(checked_mul(n, n), n + 1);
    if (group->order() != expected)
        throw std::invalid_argument("search group order must be n^2+n+1");
    if (cfg.work_budget == 0)
        throw std::invalid_argument("search budget must be positive");

    Enumerator en(group, n, cfg);
    std::int64_t options = en.first_level_options();
    std::vector<SubtreeResult> results(static_cast<std::size_t>(options));

    int width = std::max(1, cfg.parallel_width);
    if (width == 1) {
        // subtrees past the merge cut can never be kept, so stop early; the
        // merge below inspects nothing beyond the first violation
        std::uint64_t used = 0;
        for (std::int64_t i = 0; i < options; ++i) {
            results[i] = en.run_subtree(en.pairs0_ == 0 ? -1 : i, cfg.work_budget);
            if (!results[i].complete || used + results[i].nodes > cfg.work_budget) break;
            used += results[i].nodes;
        }
    } else {
        std::vector<std::future<SubtreeResult>> futs;
        futs.reserve(static_cast<std::size_t>(options));
        for (std::int64_t i = 0; i < options; ++i)
            futs.push_back(std::async(std::launch::async, [&en, i, &cfg]() {
                return en.run_subtree(en.pairs0_ == 0 ? -1 : i, cfg.work_budget);
            }));
        for (std::int64_t i = 0; i < options; ++i) results[i] = futs[i].get();
    }

    SearchOutcome out;
    out.exhausted = true;
    std::uint64_t used = 0;
    for (std::int64_t i = 0; i < options; ++i) {
        const auto& r = results[i];
        if (!r.complete || used + r.nodes > cfg.work_budget) {
            out.exhausted = false;
            break;
        }
        used += r.nodes;
        for (const auto& c : r.certificates) out.certificates.push_back(c);
    }
    out.nodes_visited = used;

    if (cfg.dedupe_by_automorphism) {
        std::set<std::vector<std::int64_t>> seen;
        std::vector<Certificate> kept;
        for (auto& c : out.certificates)
            if (seen.insert(automorphism_canonical_key(c)).second)
                kept.push_back(std::move(c));
        out.certificates = std::move(kept);
    }
    return out;
}

}  // namespace detail

// Backtracking enumeration of all certificates over one group: T0 is the
// identity plus inverse pairs, T1 inverse pairs disjoint from T0 (sizes
// forced by the parity of n), with the running product T0*T1 pruned against
// coefficients above 1.
inline SearchOutcome enumerate_certificates(const GroupPtr& group, std::int64_t n,
                                            const SearchConfig& cfg) {
    return detail::run_enumeration(group, n, cfg);
}

// Every isomorphism class of groups of order n^2+n+1 must be covered before
// absence for dimension n can be claimed.
inline std::vector<std::pair<GroupPtr, SearchOutcome>> search_dimension(
    std::int64_t n, const SearchConfig& cfg) {
    if (n < 1) throw std::invalid_argument("search dimension must be >= 1");
    std::int64_t order = checked_add(checked_mul(n, n), n + 1);
    std::vector<std::pair<GroupPtr, SearchOutcome>> out;
    for (auto& g : enumerate_abelian_groups(order)) {
        GroupPtr gp = std::make_shared<const FiniteAbelianGroup>(g);
        out.emplace_back(gp, enumerate_certificates(gp, n, cfg));
    }
    return out;
}

}  // namespace apll
