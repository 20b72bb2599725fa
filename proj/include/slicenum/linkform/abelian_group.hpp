#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slicenum {

using Element = std::vector<std::int64_t>;

// Z/d1 + Z/d2 + ... with d1 | d2 | ..., every di >= 2.  The empty list is the
// trivial group.  Orders must fit in 63 bits; larger groups are rejected
// with CapacityError since nothing here could enumerate them anyway.
class FiniteAbelianGroup {
  public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

    const std::vector<std::int64_t> &invariant_factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::int64_t order() const { return order_; }
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    bool is_trivial() const { return factors_.empty(); }

    // Reduces each coordinate into [0, di).  Throws DomainError on a
    // coordinate vector of the wrong length.
    Element reduce(const Element &x) const;
    bool contains(const Element &x) const;

    // Mixed-radix index in [0, order()), first coordinate most significant,
    // so index order is lexicographic order on reduced coordinates.
    std::int64_t encode(const Element &x) const;
    Element decode(std::int64_t index) const;

    Element add(const Element &x, const Element &y) const;
    Element scale(std::int64_t k, const Element &x) const;
    std::int64_t element_order(const Element &x) const;

    std::string to_string() const;

    friend bool operator==(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
        return a.factors_ == b.factors_;
    }

  private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

// Invariant factors (each >= 2, in divisibility order) of the direct sum of
// cyclic groups of the given orders.  Orders of 1 are ignored.
std::vector<std::int64_t> invariant_factors_of(const std::vector<std::int64_t> &cyclic_orders);

} // namespace slicenum
