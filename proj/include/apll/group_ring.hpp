#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "apll/checked.hpp"
#include "apll/group.hpp"

namespace apll {

// Element of the integer group ring Z[H]: a dense coefficient table indexed
// by the mixed-radix rank of the group element. Immutable-by-convention
// after construction; all operations return fresh values.
class GroupRingElement {
public:
    explicit GroupRingElement(GroupPtr group)
        : group_(std::move(group)), coeff_(group_->order(), 0) {}

    static GroupRingElement indicator(const GroupPtr& group,
                                      const std::vector<GroupElement>& elems) {
        GroupRingElement r(group);
        for (const auto& g : elems) r.coeff_[group->rank_of(g)] += 1;
        return r;
    }

    static GroupRingElement all_ones(const GroupPtr& group) {
        GroupRingElement r(group);
        for (auto& c : r.coeff_) c = 1;
        return r;
    }

    static GroupRingElement identity_indicator(const GroupPtr& group) {
        GroupRingElement r(group);
        r.coeff_[group->rank_of(group->identity())] = 1;
        return r;
    }

    const GroupPtr& group() const { return group_; }
    std::int64_t order() const { return group_->order(); }

    std::int64_t coefficient(const GroupElement& g) const {
        return coeff_[group_->rank_of(g)];
    }
    std::int64_t coefficient_at(std::int64_t rank) const { return coeff_.at(rank); }
    void set_coefficient(const GroupElement& g, std::int64_t v) {
        coeff_[group_->rank_of(g)] = v;
    }
    const std::vector<std::int64_t>& coefficients() const { return coeff_; }

    // sum of all coefficients (the ring's augmentation)
    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto c : coeff_) s = checked_add(s, c);
        return s;
    }

    std::vector<GroupElement> support() const {
        std::vector<GroupElement> out;
        for (std::int64_t r = 0; r < order(); ++r)
            if (coeff_[r] > 0) out.push_back(group_->element_at(r));
        return out;
    }

    std::vector<std::int64_t> support_ranks() const {
        std::vector<std::int64_t> out;
        for (std::int64_t r = 0; r < order(); ++r)
            if (coeff_[r] > 0) out.push_back(r);
        return out;
    }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
        a.require_same_group(b);
        GroupRingElement r(a.group_);
        for (std::int64_t i = 0; i < a.order(); ++i)
            r.coeff_[i] = checked_add(a.coeff_[i], b.coeff_[i]);
        return r;
    }

    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
        a.require_same_group(b);
        GroupRingElement r(a.group_);
        for (std::int64_t i = 0; i < a.order(); ++i)
            r.coeff_[i] = checked_sub(a.coeff_[i], b.coeff_[i]);
        return r;
    }

    friend GroupRingElement operator*(std::int64_t lambda, const GroupRingElement& a) {
        GroupRingElement r(a.group_);
        for (std::int64_t i = 0; i < a.order(); ++i)
            r.coeff_[i] = checked_mul(lambda, a.coeff_[i]);
        return r;
    }

    // Full convolution sum_h a_h b_{h^-1 g}. Loops over the nonzero entries
    // of both operands, so sparse-by-dense products stay cheap.
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        a.require_same_group(b);
        GroupRingElement r(a.group_);
        const FiniteAbelianGroup& grp = *a.group_;
        for (std::int64_t i = 0; i < a.order(); ++i) {
            if (a.coeff_[i] == 0) continue;
            for (std::int64_t j = 0; j < b.order(); ++j) {
                if (b.coeff_[j] == 0) continue;
                std::int64_t k = grp.compose_ranks(i, j);
                r.coeff_[k] = checked_mul_add(a.coeff_[i], b.coeff_[j], r.coeff_[k]);
            }
        }
        return r;
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return *a.group_ == *b.group_ && a.coeff_ == b.coeff_;
    }

    // A^(t): image under g -> g^t, multiplicities accumulate.
    GroupRingElement power_map(std::int64_t t) const {
        GroupRingElement r(group_);
        for (std::int64_t i = 0; i < order(); ++i) {
            if (coeff_[i] == 0) continue;
            std::int64_t k = group_->power_rank(i, t);
            r.coeff_[k] = checked_add(r.coeff_[k], coeff_[i]);
        }
        return r;
    }

private:
    void require_same_group(const GroupRingElement& other) const {
        if (!(*group_ == *other.group_))
            throw std::invalid_argument("group ring operands belong to different groups");
    }

    GroupPtr group_;
    std::vector<std::int64_t> coeff_;
};

inline bool is_inverse_closed(const FiniteAbelianGroup& group,
                              const std::vector<GroupElement>& s) {
    std::vector<bool> in(group.order(), false);
    for (const auto& g : s) in[group.rank_of(g)] = true;
    for (const auto& g : s)
        if (!in[group.rank_of(group.inverse(g))]) return false;
    return true;
}

}  // namespace apll
