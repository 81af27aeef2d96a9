#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "apll/checked.hpp"
#include "apll/rational.hpp"

namespace apll {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::int64_t lee_distance(std::span<const std::int64_t> x,
                                 std::span<const std::int64_t> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("lee_distance: length mismatch");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t t = checked_sub(x[i], y[i]);
        d = checked_add(d, t < 0 ? -t : t);
    }
    return d;
}

inline std::int64_t lee_weight(std::span<const std::int64_t> x) {
    std::int64_t d = 0;
    for (auto v : x) d = checked_add(d, v < 0 ? -v : v);
    return d;
}

namespace detail {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = checked_mul(r, n - k + i) / i;
    return r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace detail

// |S(n,r)| = sum_i 2^i C(n,i) C(r,i)
inline std::int64_t sphere_size(std::int64_t n, std::int64_t r) {
    if (n < 1 || r < 0) throw std::invalid_argument("sphere_size: need n >= 1, r >= 0");
    std::int64_t total = 0, pow2 = 1;
    for (std::int64_t i = 0; i <= std::min(n, r); ++i) {
        total = checked_add(total,
                            checked_mul(pow2, checked_mul(detail::binomial(n, i),
                                                          detail::binomial(r, i))));
        pow2 = checked_mul(pow2, 2);
    }
    return total;
}

inline constexpr std::int64_t kDefaultSphereBudget = 5'000'000;

// All points with coordinate-absolute-value sum <= r, in lexicographic order.
inline std::vector<std::vector<std::int64_t>> sphere_points(
    std::int64_t n, std::int64_t r, std::int64_t budget = kDefaultSphereBudget) {
    std::int64_t size = sphere_size(n, r);
    if (size > budget)
        throw BudgetExceeded("sphere_points: " + std::to_string(size) +
                             " points exceed enumeration budget " + std::to_string(budget));
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(size));
    std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t rest) -> void {
        if (i == cur.size()) { out.push_back(cur); return; }
        for (std::int64_t v = -rest; v <= rest; ++v) {
            cur[i] = v;
            self(self, i + 1, rest - (v < 0 ? -v : v));
        }
    };
    rec(rec, 0, r);
    return out;
}

// Integer basis of a full-rank sublattice of Z^n; the rows generate.
struct LatticeBasis {
    std::int64_t n = 0;
    std::vector<std::vector<std::int64_t>> rows;

    void validate() const {
        if (n < 1) throw std::invalid_argument("lattice basis: dimension must be >= 1");
        if (static_cast<std::int64_t>(rows.size()) != n)
            throw std::invalid_argument("lattice basis: need n rows");
        for (const auto& row : rows)
            if (static_cast<std::int64_t>(row.size()) != n)
                throw std::invalid_argument("lattice basis: need n entries per row");
    }
};

// |det| by fraction-free (Bareiss) elimination; exact integers throughout.
inline std::int64_t lattice_index(const LatticeBasis& basis) {
    basis.validate();
    auto m = basis.rows;
    std::int64_t n = basis.n;
    std::int64_t sign = 1, prev = 1;
    for (std::int64_t k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            std::int64_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) throw std::invalid_argument("lattice basis is singular");
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::int64_t i = k + 1; i < n; ++i)
            for (std::int64_t j = k + 1; j < n; ++j)
                m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]),
                                      checked_mul(m[i][k], m[k][j])) /
                          prev;
        prev = m[k][k];
    }
    std::int64_t det = checked_mul(sign, m[n - 1][n - 1]);
    if (det == 0) throw std::invalid_argument("lattice basis is singular");
    return det < 0 ? -det : det;
}

enum class PackingClass { perfect, almost_perfect, other };

inline std::string packing_class_str(PackingClass c, std::int64_t r) {
    switch (c) {
        case PackingClass::perfect: return "perfect(" + std::to_string(r) + ")";
        case PackingClass::almost_perfect: return "almost_perfect(" + std::to_string(r) + ")";
        default: return "other";
    }
}

struct PackingReport {
    std::int64_t index = 0;
    std::int64_t min_lee_distance = 0;
    std::int64_t packing_radius = 0;
    std::int64_t covering_radius = 0;
    Rational density;
    PackingClass classification = PackingClass::other;
    std::int64_t radius = 0;  // the r the classification refers to
};

inline constexpr std::int64_t kDefaultCosetBudget = 1'000'000;

namespace detail {

// Row-style Hermite form: upper triangular, positive pivots, entries above
// each pivot reduced into [0, pivot). Rows span the same lattice.
inline std::vector<std::vector<std::int64_t>> hermite_form(const LatticeBasis& basis) {
    auto h = basis.rows;
    std::int64_t n = basis.n;
    for (std::int64_t c = 0; c < n; ++c) {
        for (;;) {
            std::int64_t pivot = -1;
            for (std::int64_t r = c; r < n; ++r) {
                if (h[r][c] == 0) continue;
                if (pivot < 0 || std::abs(h[r][c]) < std::abs(h[pivot][c])) pivot = r;
            }
            if (pivot < 0) throw std::invalid_argument("lattice basis is singular");
            std::swap(h[c], h[pivot]);
            bool clean = true;
            for (std::int64_t r = c + 1; r < n; ++r) {
                if (h[r][c] == 0) continue;
                std::int64_t q = floor_div(h[r][c], h[c][c]);
                for (std::int64_t j = c; j < n; ++j)
                    h[r][j] = checked_sub(h[r][j], checked_mul(q, h[c][j]));
                if (h[r][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (h[c][c] < 0)
            for (std::int64_t j = c; j < n; ++j) h[c][j] = -h[c][j];
    }
    // reduce entries above the pivots
    for (std::int64_t c = 1; c < n; ++c)
        for (std::int64_t r = 0; r < c; ++r) {
            std::int64_t q = floor_div(h[r][c], h[c][c]);
            if (q == 0) continue;
            for (std::int64_t j = c; j < n; ++j)
                h[r][j] = checked_sub(h[r][j], checked_mul(q, h[c][j]));
        }
    return h;
}

// canonical representative of x + L inside the box prod [0, h[i][i])
inline void reduce_mod_lattice(std::vector<std::int64_t>& x,
                               const std::vector<std::vector<std::int64_t>>& h) {
    std::int64_t n = static_cast<std::int64_t>(x.size());
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t q = floor_div(x[i], h[i][i]);
        if (q == 0) continue;
        for (std::int64_t j = i; j < n; ++j)
            x[j] = checked_sub(x[j], checked_mul(q, h[i][j]));
    }
}

// Shortest nonzero Lee weight in the lattice: depth-first search over the
// triangular coefficient expansion, pruning on the partial weight.
inline std::int64_t min_lee_weight(const std::vector<std::vector<std::int64_t>>& h) {
    std::int64_t n = static_cast<std::int64_t>(h.size());
    std::int64_t best = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t w = lee_weight(h[i]);
        if (best == 0 || w < best) best = w;
    }
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::int64_t level, std::int64_t partial,
                   bool nonzero) -> void {
        if (level == n) {
            if (nonzero && partial > 0 && partial < best) best = partial;
            return;
        }
        // v[level] = prefix + c * h[level][level]; coordinates < level are final
        std::int64_t pre = v[level];
        std::int64_t d = h[level][level];
        std::int64_t room = best - 1 - partial;
        if (room < 0) return;
        std::int64_t lo = floor_div(-room - pre, d);
        if (checked_add(checked_mul(lo, d), pre) < -room) ++lo;
        std::int64_t hi = floor_div(room - pre, d);
        for (std::int64_t c = lo; c <= hi; ++c) {
            std::int64_t coord = checked_add(pre, checked_mul(c, d));
            std::int64_t aw = coord < 0 ? -coord : coord;
            if (partial + aw >= best) continue;  // best may have shrunk mid-loop
            // push contribution of c * row(level) to later coordinates
            std::vector<std::int64_t> saved(v.begin() + level, v.end());
            v[level] = coord;
            for (std::int64_t j = level + 1; j < n; ++j)
                v[j] = checked_add(v[j], checked_mul(c, h[level][j]));
            self(self, level + 1, partial + aw, nonzero || c != 0);
            std::copy(saved.begin(), saved.end(), v.begin() + level);
        }
    };
    rec(rec, 0, 0, false);
    return best;
}

// Eccentricity of the origin coset in the quotient Z^n / L under unit steps;
// this is exactly the covering radius.
inline std::int64_t covering_radius(const std::vector<std::vector<std::int64_t>>& h,
                                    std::int64_t index) {
    std::int64_t n = static_cast<std::int64_t>(h.size());
    std::vector<std::int64_t> stride(static_cast<std::size_t>(n), 1);
    for (std::int64_t i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * h[i + 1][i + 1];
    auto id_of = [&](const std::vector<std::int64_t>& x) {
        std::int64_t id = 0;
        for (std::int64_t i = 0; i < n; ++i) id += x[i] * stride[i];
        return id;
    };
    std::vector<std::int64_t> dist(static_cast<std::size_t>(index), -1);
    std::vector<std::vector<std::int64_t>> frontier;
    std::vector<std::int64_t> origin(static_cast<std::size_t>(n), 0);
    dist[0] = 0;
    frontier.push_back(origin);
    std::int64_t radius = 0;
    while (!frontier.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& x : frontier) {
            std::int64_t dx = dist[id_of(x)];
            for (std::int64_t i = 0; i < n; ++i) {
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    auto y = x;
                    y[i] += sgn;
                    reduce_mod_lattice(y, h);
                    std::int64_t id = id_of(y);
                    if (dist[id] < 0) {
                        dist[id] = dx + 1;
                        radius = std::max(radius, dx + 1);
                        next.push_back(std::move(y));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return radius;
}

}  // namespace detail

inline PackingReport classify_packing(const LatticeBasis& basis, std::int64_t r,
                                      std::int64_t coset_budget = kDefaultCosetBudget) {
    if (r < 0) throw std::invalid_argument("classify_packing: radius must be >= 0");
    PackingReport rep;
    rep.radius = r;
    rep.index = lattice_index(basis);
    if (rep.index > coset_budget)
        throw BudgetExceeded("classify_packing: index " + std::to_string(rep.index) +
                             " exceeds coset enumeration budget " +
                             std::to_string(coset_budget));
    auto h = detail::hermite_form(basis);
    rep.min_lee_distance = detail::min_lee_weight(h);
    rep.packing_radius = (rep.min_lee_distance - 1) / 2;
    rep.covering_radius = detail::covering_radius(h, rep.index);
    rep.density = Rational(sphere_size(basis.n, rep.packing_radius), rep.index);
    if (rep.index == sphere_size(basis.n, r) && rep.packing_radius == r &&
        rep.covering_radius == r)
        rep.classification = PackingClass::perfect;
    else if (rep.index == checked_add(sphere_size(basis.n, r), 1) &&
             rep.packing_radius == r && rep.covering_radius == r + 1)
        rep.classification = PackingClass::almost_perfect;
    else
        rep.classification = PackingClass::other;
    return rep;
}

}  // namespace apll
