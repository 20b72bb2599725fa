#include "slicenum/linkform/abelian_group.hpp"

#include "slicenum/errors.hpp"
#include "slicenum/exactmath/number_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace slicenum {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw DomainError("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw DomainError("invariant factors must form a divisibility chain");
        order_ = checked_mul(order_, factors_[i]);
    }
}

Element FiniteAbelianGroup::reduce(const Element &x) const {
    if (x.size() != factors_.size())
        throw DomainError("element has " + std::to_string(x.size()) + " coordinates, group has rank " +
                          std::to_string(factors_.size()));
    Element r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = mod_floor(x[i], factors_[i]);
    return r;
}

bool FiniteAbelianGroup::contains(const Element &x) const {
    if (x.size() != factors_.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0 || x[i] >= factors_[i])
            return false;
    return true;
}

std::int64_t FiniteAbelianGroup::encode(const Element &x) const {
    const Element r = reduce(x);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        idx = idx * factors_[i] + r[i];
    return idx;
}

Element FiniteAbelianGroup::decode(std::int64_t index) const {
    Element x(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        x[i] = index % factors_[i];
        index /= factors_[i];
    }
    return x;
}

Element FiniteAbelianGroup::add(const Element &x, const Element &y) const {
    Element r(factors_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mod_floor(x.at(i) + y.at(i), factors_[i]);
    return r;
}

Element FiniteAbelianGroup::scale(std::int64_t k, const Element &x) const {
    Element r(factors_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mod_floor(static_cast<std::int64_t>((static_cast<__int128>(k) * x.at(i)) % factors_[i]),
                         factors_[i]);
    return r;
}

std::int64_t FiniteAbelianGroup::element_order(const Element &x) const {
    const Element r = reduce(x);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t oi = factors_[i] / std::gcd(factors_[i], r[i]);
        ord = std::lcm(ord, oi);
    }
    return ord;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0)
            s += " + ";
        s += "Z/" + std::to_string(factors_[i]);
    }
    return s;
}

std::vector<std::int64_t> invariant_factors_of(const std::vector<std::int64_t> &cyclic_orders) {
    std::map<std::int64_t, std::vector<std::int64_t>> powers;
    for (std::int64_t n : cyclic_orders) {
        if (n < 1)
            throw DomainError("cyclic orders must be positive");
        for (const auto &[p, e] : factor_small(n)) {
            std::int64_t q = 1;
            for (int i = 0; i < e; ++i)
                q *= p;
            powers[p].push_back(q);
        }
    }
    std::size_t rank = 0;
    for (auto &[p, qs] : powers) {
        std::sort(qs.begin(), qs.end(), std::greater<>());
        rank = std::max(rank, qs.size());
    }
    // The k-th largest invariant factor collects the k-th largest power of
    // every prime.
    std::vector<std::int64_t> out(rank, 1);
    for (const auto &[p, qs] : powers)
        for (std::size_t k = 0; k < qs.size(); ++k)
            out[k] = checked_mul(out[k], qs[k]);
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace slicenum
