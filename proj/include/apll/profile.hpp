#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apll/certificate.hpp"
#include "apll/rational.hpp"

namespace apll {

// Multiplicity profile of a verified certificate. X_i / Y_i (U_i / V_i) are
// the group elements appearing exactly i times in That^(2)*T0 / That^(2)*T1
// (That^(4)*T0 / That^(4)*T1); the count arrays are truncated at the largest
// nonempty class but always expose index 0.
struct PartitionProfile {
    std::vector<std::int64_t> x_counts, y_counts, u_counts, v_counts;
    Rational theta0, theta1;
    std::int64_t ell0 = 0;      // |T1 meet supp T0^(3)|
    std::int64_t u0 = 0;        // |supp T1^(3) meet T0|
    std::int64_t u1 = 0;        // |supp T1^(3) meet T1|
    bool delta_applicable = false;  // twice-repeated cube analysis needs 3 | |H|
    std::int64_t delta0_size = 0, delta1_size = 0;
    std::int64_t delta0_in_t1 = 0;
    std::int64_t delta1_in_t0 = 0, delta1_in_t1 = 0, delta1_outside = 0;
    std::int64_t sigma = 0;     // |X1 meet Y1|
    std::int64_t epsilon = 0;   // |X3 meet Y3|
    std::int64_t eta = 0;       // inclusion-exclusion defect for That^(4)*T1

    // per-element multiplicity classes, indexed by group rank; kept so that
    // intersections of classes can be measured directly
    std::vector<std::int64_t> x_class, y_class;

    std::int64_t u_total() const { return u0 + u1; }

    std::int64_t x(std::size_t i) const { return i < x_counts.size() ? x_counts[i] : 0; }
    std::int64_t y(std::size_t i) const { return i < y_counts.size() ? y_counts[i] : 0; }
    std::int64_t u(std::size_t i) const { return i < u_counts.size() ? u_counts[i] : 0; }
    std::int64_t v(std::size_t i) const { return i < v_counts.size() ? v_counts[i] : 0; }

    std::int64_t class_intersection(std::int64_t xi, std::int64_t yi) const {
        std::int64_t c = 0;
        for (std::size_t r = 0; r < x_class.size(); ++r)
            if (x_class[r] == xi && y_class[r] == yi) ++c;
        return c;
    }
};

namespace detail {

inline std::vector<std::int64_t> histogram(const GroupRingElement& x) {
    std::int64_t mx = 0;
    for (auto c : x.coefficients()) mx = std::max(mx, c);
    std::vector<std::int64_t> h(static_cast<std::size_t>(mx) + 1, 0);
    for (auto c : x.coefficients()) ++h[static_cast<std::size_t>(c)];
    return h;
}

inline std::int64_t count_in(const std::set<std::int64_t>& s,
                             const std::set<std::int64_t>& t) {
    std::int64_t c = 0;
    for (auto r : s)
        if (t.count(r)) ++c;
    return c;
}

}  // namespace detail

// Requires a certificate that passes verify_certificate; the half-integer
// term of theta1 is asserted integral (it always is when T1 is inverse
// closed over a group of odd order).
inline PartitionProfile partition_profile(const Certificate& cert) {
    detail::CertContext cx(cert);
    const auto& g = *cert.group;
    std::int64_t id = g.rank_of(g.identity());

    GroupRingElement that2 = cx.a.power_map(2) + cx.b.power_map(2);
    GroupRingElement that4 = cx.a.power_map(4) + cx.b.power_map(4);
    GroupRingElement xt = that2 * cx.a;
    GroupRingElement yt = that2 * cx.b;
    GroupRingElement ut = that4 * cx.a;
    GroupRingElement vt = that4 * cx.b;

    PartitionProfile p;
    p.x_counts = detail::histogram(xt);
    p.y_counts = detail::histogram(yt);
    p.u_counts = detail::histogram(ut);
    p.v_counts = detail::histogram(vt);
    p.x_class.assign(xt.coefficients().begin(), xt.coefficients().end());
    p.y_class.assign(yt.coefficients().begin(), yt.coefficients().end());

    auto t0sq = detail::support_set(cx.a.power_map(2));
    auto t1sq = detail::support_set(cx.b.power_map(2));
    auto that2s = detail::support_set(that2);
    auto that4s = detail::support_set(that4);
    auto t0sup2 = detail::support_set(cx.a * cx.a);  // supp of the ring square
    auto t1sup2 = detail::support_set(cx.b * cx.b);

    // theta0 = |(T0^2 \ T0^(2)) meet That^(4)|
    std::int64_t th0 = 0;
    for (auto r : t0sup2)
        if (!t0sq.count(r) && that4s.count(r)) ++th0;
    p.theta0 = Rational(th0);

    // theta1 = |T1 meet That^(2)| / 2 + |(T1^2 \ (T1^(2) u {e})) meet That^(4)|
    std::int64_t half_term = detail::count_in(cx.t1_ranks, that2s);
    std::int64_t th1b = 0;
    for (auto r : t1sup2)
        if (r != id && !t1sq.count(r) && that4s.count(r)) ++th1b;
    p.theta1 = Rational(half_term, 2) + Rational(th1b);
    if (!p.theta1.is_integral())
        throw std::domain_error("theta1 is not integral; certificate is malformed");

    GroupRingElement t0cubes = cx.a.power_map(3);
    GroupRingElement t1cubes = cx.b.power_map(3);
    auto t0c_s = detail::support_set(t0cubes);
    auto t1c_s = detail::support_set(t1cubes);
    p.ell0 = detail::count_in(cx.t1_ranks, t0c_s);
    p.u0 = detail::count_in(cx.t0_ranks, t1c_s);
    p.u1 = detail::count_in(cx.t1_ranks, t1c_s);

    p.delta_applicable = cert.n % 3 == 1;
    if (p.delta_applicable) {
        // elements appearing twice, by multiplicity count; the at-most-twice
        // bound is a separate check target, never an input assumption here
        for (std::int64_t r = 0; r < g.order(); ++r) {
            if (t0cubes.coefficient_at(r) == 2) {
                ++p.delta0_size;
                if (cx.t1_ranks.count(r)) ++p.delta0_in_t1;
            }
            if (t1cubes.coefficient_at(r) == 2) {
                ++p.delta1_size;
                if (cx.t0_ranks.count(r))
                    ++p.delta1_in_t0;
                else if (cx.t1_ranks.count(r))
                    ++p.delta1_in_t1;
                else
                    ++p.delta1_outside;
            }
        }
    }

    p.sigma = p.class_intersection(1, 1);
    p.epsilon = p.class_intersection(3, 3);

    // eta = 2(k1-1)k1 - sum over unordered pairs {b_i, b_j} of distinct
    // That^(4) elements of |b_i T1 meet b_j T1|
    {
        std::vector<std::int64_t> bs(that4s.begin(), that4s.end());
        std::int64_t pair_sum = 0;
        for (std::size_t i = 0; i < bs.size(); ++i)
            for (std::size_t j = i + 1; j < bs.size(); ++j) {
                std::int64_t c = g.compose_ranks(g.inverse_rank(bs[i]), bs[j]);
                for (auto t : cx.t1_ranks)
                    if (cx.t1_ranks.count(g.compose_ranks(c, t))) ++pair_sum;
            }
        p.eta = 2 * (cert.k1() - 1) * cert.k1() - pair_sum;
    }
    return p;
}

namespace detail {

inline std::string measured(std::int64_t got) { return "measured " + std::to_string(got); }

inline std::string range_witness(std::int64_t lo3, std::int64_t got3, std::int64_t hi3) {
    std::ostringstream os;
    os << "3*measured " << got3 << " outside [" << lo3 << ", " << hi3 << "]";
    return os.str();
}

// triangular-number weight (s-1)(s-2)/2 used by the distinct-count identities
inline std::int64_t overcount_weight(std::int64_t s) { return (s - 1) * (s - 2) / 2; }

// class weights for the high-class tail bounds
inline std::int64_t tail_weight(std::int64_t i) {
    return i % 3 == 1 ? (i - 1) * (i - 4) / 2 : (i - 2) * (i - 3) / 2;
}

}  // namespace detail

// Exact counting identities tying the class sizes to k0, k1, theta0, theta1
// and eta, plus the low-class lower bound for odd n.
inline DiagnosticsReport counting_identities(const PartitionProfile& p,
                                             const Certificate& cert) {
    DiagnosticsReport rep;
    std::int64_t n = cert.n, k0 = cert.k0(), k1 = cert.k1();
    std::int64_t order = checked_add(checked_mul(n, n), n + 1);

    auto weighted = [](const std::vector<std::int64_t>& c) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            s += static_cast<std::int64_t>(i) * c[i];
        return s;
    };
    auto total = [](const std::vector<std::int64_t>& c) {
        std::int64_t s = 0;
        for (auto v : c) s += v;
        return s;
    };
    auto positive = [](const std::vector<std::int64_t>& c) {
        std::int64_t s = 0;
        for (std::size_t i = 1; i < c.size(); ++i) s += c[i];
        return s;
    };
    auto overcount = [](const std::vector<std::int64_t>& c) {
        std::int64_t s = 0;
        for (std::size_t i = 3; i < c.size(); ++i)
            s += detail::overcount_weight(static_cast<std::int64_t>(i)) * c[i];
        return s;
    };

    rep.add_bool("weighted_total_x", weighted(p.x_counts) == (2 * n + 1) * k0,
                 detail::measured(weighted(p.x_counts)));
    rep.add_bool("weighted_total_y", weighted(p.y_counts) == (2 * n + 1) * k1,
                 detail::measured(weighted(p.y_counts)));
    rep.add_bool("weighted_total_u", weighted(p.u_counts) == (2 * n + 1) * k0,
                 detail::measured(weighted(p.u_counts)));
    rep.add_bool("weighted_total_v", weighted(p.v_counts) == (2 * n + 1) * k1,
                 detail::measured(weighted(p.v_counts)));
    rep.add_bool("partition_total_x", total(p.x_counts) == order);
    rep.add_bool("partition_total_y", total(p.y_counts) == order);
    rep.add_bool("partition_total_u", total(p.u_counts) == order);
    rep.add_bool("partition_total_v", total(p.v_counts) == order);

    std::int64_t th0 = p.theta0.num;
    std::int64_t th1 = p.theta1.num;  // integral by construction
    rep.add_bool("distinct_count_x_with_theta0",
                 positive(p.x_counts) ==
                     (2 * n + 1) * k0 - 2 * (k0 - 1) * k0 + th0 + overcount(p.x_counts),
                 detail::measured(positive(p.x_counts)));
    rep.add_bool("distinct_count_y_with_theta1",
                 positive(p.y_counts) ==
                     (2 * n + 1) * k1 - 2 * (k1 - 1) * k1 + th1 + overcount(p.y_counts),
                 detail::measured(positive(p.y_counts)));
    rep.add_bool("distinct_count_v_with_eta",
                 positive(p.v_counts) ==
                     (2 * n + 1) * k1 - 2 * (k1 - 1) * k1 + p.eta + overcount(p.v_counts),
                 detail::measured(positive(p.v_counts)));
    rep.add_bool("eta_nonnegative", p.eta >= 0, "eta " + std::to_string(p.eta));

    if (n % 2 != 0) {
        std::int64_t lhs = 2 * p.v(1) + 3 * p.v(2) + 3 * p.v(3) + 2 * p.v(4);
        rep.add_bool("v_low_class_lower_bound", lhs >= 2 * n * n + 4 * n + 2,
                     detail::measured(lhs));
    } else {
        rep.add("v_low_class_lower_bound", CheckStatus::not_applicable);
    }
    return rep;
}

// Multiplicity limits on the cube power maps; meaningful only when 3 divides
// the group order, i.e. n = 1 (mod 3).
inline DiagnosticsReport repetition_bounds(const Certificate& cert) {
    DiagnosticsReport rep;
    if (cert.n % 3 != 1) {
        rep.add("cube_multiplicity_at_most_2", CheckStatus::not_applicable);
        rep.add("identity_once_in_t0_cubes", CheckStatus::not_applicable);
        rep.add("twice_repeated_counts", CheckStatus::not_applicable);
        return rep;
    }
    detail::CertContext cx(cert);
    const auto& g = *cert.group;
    GroupRingElement t0c = cx.a.power_map(3);
    GroupRingElement t1c = cx.b.power_map(3);

    std::string over;
    for (std::int64_t r = 0; r < g.order(); ++r) {
        if (t0c.coefficient_at(r) > 2)
            over = "t0 cubes: element (" + detail::element_str(g, r) + ") appears " +
                   std::to_string(t0c.coefficient_at(r)) + " times";
        if (t1c.coefficient_at(r) > 2)
            over = "t1 cubes: element (" + detail::element_str(g, r) + ") appears " +
                   std::to_string(t1c.coefficient_at(r)) + " times";
    }
    rep.add_bool("cube_multiplicity_at_most_2", over.empty(), over);

    std::int64_t e_mult = t0c.coefficient_at(g.rank_of(g.identity()));
    rep.add_bool("identity_once_in_t0_cubes", e_mult == 1,
                 "identity appears " + std::to_string(e_mult) + " times");

    std::int64_t d0 = 0, d1 = 0;
    for (std::int64_t r = 0; r < g.order(); ++r) {
        if (t0c.coefficient_at(r) == 2) ++d0;
        if (t1c.coefficient_at(r) == 2) ++d1;
    }
    rep.add_bool("twice_repeated_counts", (d0 == 0 || d0 == 2) && d1 <= 2,
                 "delta0 " + std::to_string(d0) + ", delta1 " + std::to_string(d1));
    return rep;
}

// Residue-class value/bound checks on the class sizes. All comparisons are
// done at 3x scale so everything stays in exact integers.
inline DiagnosticsReport residue_class_checks(const PartitionProfile& p,
                                                const Certificate& cert) {
    DiagnosticsReport rep;
    std::int64_t n = cert.n;
    std::int64_t r6 = n % 6;
    if (r6 != 1 && r6 != 2 && r6 != 5) {
        rep.add("residue_class_checks", CheckStatus::not_applicable,
                "n = " + std::to_string(r6) + " (mod 6) carries no instance checks");
        return rep;
    }
    std::int64_t th0 = p.theta0.num, th1 = p.theta1.num;
    std::int64_t l0 = p.ell0, u = p.u_total();

    auto tail = [&](const std::vector<std::int64_t>& counts) {
        std::int64_t s = 0;
        for (std::size_t i = 5; i < counts.size(); ++i)
            s += detail::tail_weight(static_cast<std::int64_t>(i)) * counts[i];
        return s;
    };

    if (r6 == 1) {
        // exact X profile: |X0| = (n-1)^2/3, |X1| = n+2, |X2| = 2n-2,
        // |X3| = 2(n-1)^2/3, nothing above class 3
        std::int64_t sq = (n - 1) * (n - 1);
        bool xs_ok = 3 * p.x(0) == sq && p.x(1) == n + 2 && p.x(2) == 2 * n - 2 &&
                     3 * p.x(3) == 2 * sq;
        for (std::size_t i = 4; i < p.x_counts.size(); ++i) xs_ok &= p.x_counts[i] == 0;
        {
            std::ostringstream os;
            os << "x profile";
            for (auto c : p.x_counts) os << ' ' << c;
            rep.add_bool("x_profile_exact", xs_ok, os.str());
        }
        rep.add_bool("t1_avoids_t0_cubes", p.ell0 == 0, detail::measured(p.ell0));
        rep.add_bool("theta0_vanishes", th0 == 0, detail::measured(th0));
        rep.add_bool("delta0_inside_t1", p.delta0_in_t1 == p.delta0_size,
                     std::to_string(p.delta0_in_t1) + " of " +
                         std::to_string(p.delta0_size) + " inside t1");

        std::int64_t d11 = p.delta1_in_t1, d12 = p.delta1_outside;
        std::int64_t y3lo = 2 * n * n - 5 * n - 4 + th1 +
                            3 * (2 * p.u0 + p.u1 + 2 * d11 + d12);
        std::int64_t y3hi = 2 * n * n - 2 * n - 3 + 3 * (p.u0 + p.u1 + d11 + d12);
        rep.add_bool("y3_bounds", y3lo <= 3 * p.y(3) && 3 * p.y(3) <= y3hi,
                     detail::range_witness(y3lo, 3 * p.y(3), y3hi));
        std::int64_t y0lo = n * n - 10 * n - 3 - 3 * (p.u0 + p.u1 + d11 + d12) + 3 * th1;
        std::int64_t y0hi = n * n - n + 1 - th1;
        rep.add_bool("y0_bounds", y0lo <= 3 * p.y(0) && 3 * p.y(0) <= y0hi,
                     detail::range_witness(y0lo, 3 * p.y(0), y0hi));
        return rep;
    }

    // bound sets for n = 5 (mod 6) and n = 2 (mod 6); same shape, shifted
    // constants (k0 and k1 swap roles with the parity of n)
    struct Bounds {
        std::int64_t x0_cap, y0_cap;
        std::int64_t x1_lo, x1_hi, x4_lo, x4_hi;
        std::int64_t y1_lo, y1_hi, y4_lo, y4_hi;
    } b{};
    if (r6 == 5) {
        b.x0_cap = n - 2 * l0 + 1 - th0;
        b.y0_cap = n - 2 * u + 2 - th1;
        b.x1_lo = 2 * n * n - 4 * n + 7 * l0 + 3 + 2 * th0;
        b.x1_hi = 2 * n * n - l0 + 7 - 2 * th0;
        b.x4_lo = n * n - 6 * n + 7 * l0 - 1 + 2 * th0;
        b.x4_hi = n * n - 3 * n + l0 + 2 - th0;
        b.y1_lo = 2 * n * n - 6 * n + 7 * u - 4 + 2 * th1;
        b.y1_hi = 2 * n * n - 2 * n - u + 4 - 2 * th1;
        b.y4_lo = n * n - 4 * n + 7 * u - 7 + 2 * th1;
        b.y4_hi = n * n - n + u - 1 - th1;
    } else {  // r6 == 2
        b.x0_cap = n - 2 * l0 - th0;
        b.y0_cap = n - 2 * u + 3 - th1;
        b.x1_lo = 2 * n * n - 6 * n + 7 * l0 + 3 + 2 * th0;
        b.x1_hi = 2 * n * n - 2 * n - l0 + 3 - 2 * th0;
        b.x4_lo = n * n - 4 * n + 7 * l0 + 2 * th0;
        b.x4_hi = n * n - n + l0 - th0;
        b.y1_lo = 2 * n * n - 4 * n + 7 * u - 4 + 2 * th1;
        b.y1_hi = 2 * n * n - u + 8 - 2 * th1;
        b.y4_lo = n * n - 6 * n + 7 * u - 8 + 2 * th1;
        b.y4_hi = n * n - 3 * n + u + 1 - th1;
    }

    rep.add_bool("x0_upper", 3 * p.x(0) <= b.x0_cap,
                 detail::range_witness(0, 3 * p.x(0), b.x0_cap));
    rep.add_bool("x_high_class_upper", tail(p.x_counts) <= b.x0_cap,
                 detail::measured(tail(p.x_counts)));
    rep.add_bool("y0_upper", 3 * p.y(0) <= b.y0_cap,
                 detail::range_witness(0, 3 * p.y(0), b.y0_cap));
    rep.add_bool("y_high_class_upper", tail(p.y_counts) <= b.y0_cap,
                 detail::measured(tail(p.y_counts)));
    rep.add_bool("x1_bounds", b.x1_lo <= 3 * p.x(1) && 3 * p.x(1) <= b.x1_hi,
                 detail::range_witness(b.x1_lo, 3 * p.x(1), b.x1_hi));
    rep.add_bool("x4_bounds", b.x4_lo <= 3 * p.x(4) && 3 * p.x(4) <= b.x4_hi,
                 detail::range_witness(b.x4_lo, 3 * p.x(4), b.x4_hi));
    rep.add_bool("y1_bounds", b.y1_lo <= 3 * p.y(1) && 3 * p.y(1) <= b.y1_hi,
                 detail::range_witness(b.y1_lo, 3 * p.y(1), b.y1_hi));
    rep.add_bool("y4_bounds", b.y4_lo <= 3 * p.y(4) && 3 * p.y(4) <= b.y4_hi,
                 detail::range_witness(b.y4_lo, 3 * p.y(4), b.y4_hi));
    return rep;
}

// Sandwich bounds on the class intersections, plus the complement-sum bounds
// available when n = 2 (mod 3).
inline DiagnosticsReport intersection_bounds(const PartitionProfile& p,
                                             const Certificate& cert) {
    DiagnosticsReport rep;
    std::int64_t n = cert.n;

    auto sum_ge5 = [](const std::vector<std::int64_t>& c) {
        std::int64_t s = 0;
        for (std::size_t i = 5; i < c.size(); ++i) s += c[i];
        return s;
    };
    std::int64_t x1y4 = p.class_intersection(1, 4);
    std::int64_t y1x4 = p.class_intersection(4, 1);
    std::int64_t x4y4 = p.class_intersection(4, 4);

    std::int64_t lo, hi;
    lo = p.x(1) - p.sigma - p.y(2) - p.y(3) - sum_ge5(p.y_counts);
    hi = p.x(1) - p.sigma;
    rep.add_bool("x1_cap_y4_sandwich", lo <= x1y4 && x1y4 <= hi,
                 detail::range_witness(lo, x1y4, hi));

    lo = p.y(1) - p.sigma - p.x(2) - p.x(3) - sum_ge5(p.x_counts);
    hi = p.y(1) - p.sigma;
    rep.add_bool("y1_cap_x4_sandwich", lo <= y1x4 && y1x4 <= hi,
                 detail::range_witness(lo, y1x4, hi));

    lo = p.x(4) - y1x4 - p.y(2) - p.y(3) - sum_ge5(p.y_counts);
    hi = p.x(4) - y1x4;
    rep.add_bool("x4_cap_y4_sandwich", lo <= x4y4 && x4y4 <= hi,
                 detail::range_witness(lo, x4y4, hi));

    if (n % 3 != 2) {
        rep.add("sum_x_except_4_upper_bound", CheckStatus::not_applicable);
        rep.add("sum_y_except_4_upper_bound", CheckStatus::not_applicable);
        rep.add("sum_y_except_1_4_upper_bound", CheckStatus::not_applicable);
        rep.add("sum_x_except_1_4_upper_bound", CheckStatus::not_applicable);
        return rep;
    }

    std::int64_t th0 = p.theta0.num, th1 = p.theta1.num;
    std::int64_t l0 = p.ell0, u = p.u_total();
    auto except = [&](const std::vector<std::int64_t>& c, bool drop1) {
        std::int64_t s = 0;
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (i == 4) continue;
            if (drop1 && i == 1) continue;
            s += c[i];
        }
        return s;
    };

    // caps at 3x scale; constants differ between the odd and even residue
    std::int64_t cap_x, cap_y, cap_y14, cap_x14;
    if (n % 6 == 5) {
        cap_x = 2 * n * n + 9 * n - 7 * l0 + 4 - 2 * th0;
        cap_y = 2 * n * n + 7 * n - 7 * u + 10 - 2 * th1;
        cap_y14 = 10 * n - 8 * u + 8 - th1;
        cap_x14 = 10 * n - 8 * l0 - 2 - th0;
    } else {
        cap_x = 2 * n * n + 7 * n - 7 * l0 + 3 - 2 * th0;
        cap_y = 2 * n * n + 9 * n - 7 * u + 11 - 2 * th1;
        cap_y14 = 10 * n - 8 * u + 6 - th1;
        cap_x14 = 10 * n - 8 * l0 - th0;
    }
    rep.add_bool("sum_x_except_4_upper_bound", 3 * except(p.x_counts, false) <= cap_x,
                 detail::range_witness(0, 3 * except(p.x_counts, false), cap_x));
    rep.add_bool("sum_y_except_4_upper_bound", 3 * except(p.y_counts, false) <= cap_y,
                 detail::range_witness(0, 3 * except(p.y_counts, false), cap_y));
    rep.add_bool("sum_y_except_1_4_upper_bound", 3 * except(p.y_counts, true) <= cap_y14,
                 detail::range_witness(0, 3 * except(p.y_counts, true), cap_y14));
    rep.add_bool("sum_x_except_1_4_upper_bound", 3 * except(p.x_counts, true) <= cap_x14,
                 detail::range_witness(0, 3 * except(p.x_counts, true), cap_x14));
    return rep;
}

// Full diagnostic battery: core equations, the eight set conditions, cube and
// degree-five expansions, and every profile-based check. Profile checks are
// gated on the core verification passing.
inline DiagnosticsReport analyze_certificate(const Certificate& cert) {
    DiagnosticsReport rep = verify_certificate(cert);
    bool core_ok = rep.all_passed();
    rep.append(necessary_conditions(cert));
    rep.append(cubic_identities(cert));
    rep.append(quintic_identities(cert));
    if (core_ok) {
        PartitionProfile p = partition_profile(cert);
        rep.append(counting_identities(p, cert));
        rep.append(repetition_bounds(cert));
        rep.append(residue_class_checks(p, cert));
        rep.append(intersection_bounds(p, cert));
    } else {
        for (const char* id :
             {"counting_identities", "repetition_bounds", "residue_class_checks",
              "intersection_bounds"})
            rep.add(id, CheckStatus::not_applicable, "core verification failed");
    }
    return rep;
}

}  // namespace apll
