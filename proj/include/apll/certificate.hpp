#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apll/group_ring.hpp"

namespace apll {

// Candidate witness for an almost perfect linear Lee code of packing radius
// 2 in Z^n: a group H of order n^2+n+1 with inverse-closed subsets T0 (with
// the identity) and T1 satisfying
//   T0*T1          = H - e                          (product equation)
//   T0^2 + T1^2    = 2H - T0^(2) - T1^(2) + 2n*e    (square-sum equation)
struct Certificate {
    GroupPtr group;
    std::int64_t n = 0;
    std::vector<GroupElement> t0;
    std::vector<GroupElement> t1;

    std::int64_t k0() const { return static_cast<std::int64_t>(t0.size()); }
    std::int64_t k1() const { return static_cast<std::int64_t>(t1.size()); }

    void canonicalize() {
        auto by_rank = [this](const GroupElement& a, const GroupElement& b) {
            return group->rank_of(a) < group->rank_of(b);
        };
        std::sort(t0.begin(), t0.end(), by_rank);
        std::sort(t1.begin(), t1.end(), by_rank);
    }
};

enum class CheckStatus { pass, fail, not_applicable };

inline const char* check_status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "not_applicable";
    }
}

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string witness;  // failure detail; empty on pass
};

struct DiagnosticsReport {
    std::vector<CheckResult> checks;

    void add(std::string id, CheckStatus status, std::string witness = "") {
        checks.push_back({std::move(id), status, std::move(witness)});
    }
    void add_bool(std::string id, bool ok, std::string witness_on_fail = "") {
        checks.push_back({std::move(id), ok ? CheckStatus::pass : CheckStatus::fail,
                          ok ? std::string() : std::move(witness_on_fail)});
    }
    void append(const DiagnosticsReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
            return c.status == CheckStatus::fail;
        });
    }
    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

namespace detail {

struct CertContext {
    GroupRingElement a;      // T0 as 0/1 element
    GroupRingElement b;      // T1 as 0/1 element
    GroupRingElement h;      // all-ones
    GroupRingElement e;      // identity indicator
    std::set<std::int64_t> t0_ranks, t1_ranks;

    explicit CertContext(const Certificate& c)
        : a(GroupRingElement::indicator(c.group, c.t0)),
          b(GroupRingElement::indicator(c.group, c.t1)),
          h(GroupRingElement::all_ones(c.group)),
          e(GroupRingElement::identity_indicator(c.group)) {
        for (const auto& g : c.t0) t0_ranks.insert(c.group->rank_of(g));
        for (const auto& g : c.t1) t1_ranks.insert(c.group->rank_of(g));
    }
};

inline std::set<std::int64_t> support_set(const GroupRingElement& x) {
    auto v = x.support_ranks();
    return {v.begin(), v.end()};
}

inline std::string element_str(const FiniteAbelianGroup& g, std::int64_t rank) {
    auto elem = g.element_at(rank);
    std::ostringstream os;
    for (std::size_t i = 0; i < elem.residues.size(); ++i) {
        if (i) os << ',';
        os << elem.residues[i];
    }
    return os.str();
}

// first rank where two ring elements differ, formatted for a witness string
inline std::string first_difference(const GroupRingElement& lhs,
                                    const GroupRingElement& rhs) {
    for (std::int64_t r = 0; r < lhs.order(); ++r)
        if (lhs.coefficient_at(r) != rhs.coefficient_at(r)) {
            std::ostringstream os;
            os << "element (" << element_str(*lhs.group(), r) << "): lhs "
               << lhs.coefficient_at(r) << ", rhs " << rhs.coefficient_at(r);
            return os.str();
        }
    return "";
}

}  // namespace detail

// Structural validity plus the two defining group ring equations. Structural
// failures suppress the equation checks (reported not_applicable) so that a
// report never claims an equation verdict on malformed input.
inline DiagnosticsReport verify_certificate(const Certificate& cert) {
    DiagnosticsReport rep;
    const auto& g = *cert.group;

    bool structural = true;
    std::int64_t expected = checked_add(checked_mul(cert.n, cert.n), cert.n + 1);
    bool order_ok = g.order() == expected && cert.n >= 1;
    rep.add_bool("group_order_is_n2_plus_n_plus_1", order_ok,
                 "order " + std::to_string(g.order()) + ", expected " +
                     std::to_string(expected));
    structural &= order_ok;

    bool id_ok = std::find(cert.t0.begin(), cert.t0.end(), g.identity()) != cert.t0.end();
    rep.add_bool("identity_in_t0", id_ok);
    structural &= id_ok;

    bool inv0 = is_inverse_closed(g, cert.t0);
    bool inv1 = is_inverse_closed(g, cert.t1);
    rep.add_bool("t0_inverse_closed", inv0);
    rep.add_bool("t1_inverse_closed", inv1);
    structural &= inv0 && inv1;

    auto dup_free = [&](const std::vector<GroupElement>& s) {
        std::set<std::int64_t> ranks;
        for (const auto& x : s) ranks.insert(g.rank_of(x));
        return ranks.size() == s.size();
    };
    bool nodup = dup_free(cert.t0) && dup_free(cert.t1);
    rep.add_bool("no_duplicate_elements", nodup);
    structural &= nodup;

    if (!structural) {
        rep.add("product_equation", CheckStatus::not_applicable);
        rep.add("square_sum_equation", CheckStatus::not_applicable);
        return rep;
    }

    detail::CertContext cx(cert);
    GroupRingElement lhs1 = cx.a * cx.b;
    GroupRingElement rhs1 = cx.h - cx.e;
    rep.add_bool("product_equation", lhs1 == rhs1, detail::first_difference(lhs1, rhs1));

    GroupRingElement lhs2 = cx.a * cx.a + cx.b * cx.b;
    GroupRingElement rhs2 =
        2 * cx.h - cx.a.power_map(2) - cx.b.power_map(2) + (2 * cert.n) * cx.e;
    rep.add_bool("square_sum_equation", lhs2 == rhs2, detail::first_difference(lhs2, rhs2));
    return rep;
}

inline bool certificate_valid(const Certificate& cert) {
    return verify_certificate(cert).all_passed();
}

// The eight set-theoretic consequences of the defining equations, evaluated
// directly from T0, T1 and their power maps.
inline DiagnosticsReport necessary_conditions(const Certificate& cert) {
    DiagnosticsReport rep;
    const auto& g = *cert.group;
    detail::CertContext cx(cert);
    std::int64_t id = g.rank_of(g.identity());

    auto t0sq = detail::support_set(cx.a.power_map(2));   // T0^(2)
    auto t1sq = detail::support_set(cx.b.power_map(2));   // T1^(2)
    auto t0cube = detail::support_set(cx.a.power_map(3)); // T0^(3)

    // (a) identity placement
    bool a_ok = cx.t0_ranks.count(id) && !cx.t1_ranks.count(id);
    rep.add_bool("a_identity_in_t0_not_t1", a_ok);

    // (b) T0 and T1 disjoint; squares disjoint
    bool b1 = std::none_of(cx.t0_ranks.begin(), cx.t0_ranks.end(),
                           [&](std::int64_t r) { return cx.t1_ranks.count(r) > 0; });
    bool b2 = std::none_of(t0sq.begin(), t0sq.end(),
                           [&](std::int64_t r) { return t1sq.count(r) > 0; });
    rep.add_bool("b_t0_t1_disjoint_and_squares_disjoint", b1 && b2);

    // (c) T0 meets T0^(2) only at e and avoids T1^(2)
    bool c1 = std::none_of(cx.t0_ranks.begin(), cx.t0_ranks.end(), [&](std::int64_t r) {
        return r != id && t0sq.count(r) > 0;
    });
    bool c2 = std::none_of(cx.t0_ranks.begin(), cx.t0_ranks.end(),
                           [&](std::int64_t r) { return t1sq.count(r) > 0; });
    rep.add_bool("c_t0_avoids_own_squares_and_t1_squares", c1 && c2);

    // (d) products of distinct T0 elements meet T0^(2) only at e
    {
        std::set<std::int64_t> distinct_products;
        std::vector<std::int64_t> t0v(cx.t0_ranks.begin(), cx.t0_ranks.end());
        for (std::size_t i = 0; i < t0v.size(); ++i)
            for (std::size_t j = 0; j < t0v.size(); ++j)
                if (i != j) distinct_products.insert(g.compose_ranks(t0v[i], t0v[j]));
        bool no_extra = true;
        for (auto r : distinct_products)
            if (r != id && t0sq.count(r) > 0) no_extra = false;
        bool e_present = t0v.size() < 2 || distinct_products.count(id) > 0;
        rep.add_bool("d_distinct_t0_products_meet_t0_squares_only_at_e",
                     no_extra && e_present);
    }

    // (e)/(f) forced sizes by parity of n
    if (cert.n % 2 != 0) {
        rep.add_bool("e_sizes_for_odd_n", cert.k0() == cert.n && cert.k1() == cert.n + 1,
                     "k0 " + std::to_string(cert.k0()) + ", k1 " + std::to_string(cert.k1()));
        rep.add("f_sizes_for_even_n", CheckStatus::not_applicable);
    } else {
        rep.add("e_sizes_for_odd_n", CheckStatus::not_applicable);
        rep.add_bool("f_sizes_for_even_n", cert.k0() == cert.n + 1 && cert.k1() == cert.n,
                     "k0 " + std::to_string(cert.k0()) + ", k1 " + std::to_string(cert.k1()));
    }

    // (g) supports of T0^2 and T1^2 share no non-identity element
    {
        auto s0 = detail::support_set(cx.a * cx.a);
        auto s1 = detail::support_set(cx.b * cx.b);
        bool ok = std::none_of(s0.begin(), s0.end(), [&](std::int64_t r) {
            return r != id && s1.count(r) > 0;
        });
        rep.add_bool("g_group_ring_squares_share_only_e", ok);
    }

    // (h) T0 meets T0^(3) exactly at e
    {
        bool e_in = t0cube.count(id) > 0;
        bool no_extra = std::none_of(cx.t0_ranks.begin(), cx.t0_ranks.end(),
                                     [&](std::int64_t r) { return r != id && t0cube.count(r) > 0; });
        rep.add_bool("h_t0_meets_own_cubes_only_at_e", e_in && no_extra);
    }
    return rep;
}

// T0^3 and T1^3 expansions implied by the defining equations.
inline DiagnosticsReport cubic_identities(const Certificate& cert) {
    DiagnosticsReport rep;
    if (!certificate_valid(cert)) {
        rep.add("t0_cube_expansion", CheckStatus::not_applicable);
        rep.add("t1_cube_expansion", CheckStatus::not_applicable);
        return rep;
    }
    detail::CertContext cx(cert);
    std::int64_t n = cert.n, k0 = cert.k0(), k1 = cert.k1();
    GroupRingElement that2 = cx.a.power_map(2) + cx.b.power_map(2);

    GroupRingElement lhs0 = cx.a * cx.a * cx.a;
    GroupRingElement rhs0 =
        (2 * k0 - k1) * cx.h + (2 * n) * cx.a + cx.b - cx.a * that2;
    rep.add_bool("t0_cube_expansion", lhs0 == rhs0, detail::first_difference(lhs0, rhs0));

    GroupRingElement lhs1 = cx.b * cx.b * cx.b;
    GroupRingElement rhs1 =
        (2 * k1 - k0) * cx.h + (2 * n) * cx.b + cx.a - cx.b * that2;
    rep.add_bool("t1_cube_expansion", lhs1 == rhs1, detail::first_difference(lhs1, rhs1));
    return rep;
}

// Degree-five expansions of That^(4) * T0 and That^(4) * T1.
inline DiagnosticsReport quintic_identities(const Certificate& cert) {
    DiagnosticsReport rep;
    if (!certificate_valid(cert)) {
        rep.add("that4_t0_expansion", CheckStatus::not_applicable);
        rep.add("that4_t1_expansion", CheckStatus::not_applicable);
        return rep;
    }
    detail::CertContext cx(cert);
    std::int64_t n = cert.n, k0 = cert.k0(), k1 = cert.k1();
    GroupRingElement that2 = cx.a.power_map(2) + cx.b.power_map(2);
    GroupRingElement that4 = cx.a.power_map(4) + cx.b.power_map(4);

    GroupRingElement a2 = cx.a * cx.a;
    GroupRingElement b2 = cx.b * cx.b;
    GroupRingElement a5 = a2 * a2 * cx.a;
    GroupRingElement b5 = b2 * b2 * cx.b;

    GroupRingElement lhs0 = that4 * cx.a;
    GroupRingElement rhs0 = (5 * k0 + (2 * k0 - k1) * (k0 * k0 - 1)) * cx.h +
                            (4 * n * n + 2 * n - 3) * cx.a + (2 * n) * cx.b -
                            (4 * n) * (that2 * cx.a) - that2 * cx.b - a5;
    rep.add_bool("that4_t0_expansion", lhs0 == rhs0, detail::first_difference(lhs0, rhs0));

    GroupRingElement lhs1 = that4 * cx.b;
    GroupRingElement rhs1 = (5 * k1 + (2 * k1 - k0) * (k1 * k1 - 1)) * cx.h +
                            (4 * n * n + 2 * n - 3) * cx.b + (2 * n) * cx.a -
                            (4 * n) * (that2 * cx.b) - that2 * cx.a - b5;
    rep.add_bool("that4_t1_expansion", lhs1 == rhs1, detail::first_difference(lhs1, rhs1));
    return rep;
}

}  // namespace apll
