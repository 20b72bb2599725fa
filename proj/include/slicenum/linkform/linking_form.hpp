#pragma once

#include "slicenum/exactmath/fraction.hpp"
#include "slicenum/linkform/abelian_group.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace slicenum {

// Symmetric Q/Z-valued bilinear form on a FiniteAbelianGroup, given by its
// values on the invariant-factor generators.  Entries are stored reduced into
// [0, 1).
class LinkingForm {
  public:
    LinkingForm() = default;
    // Throws DomainError unless gram is rank x rank, symmetric mod 1, and
    // di * gram[i][j] is integral for every i, j.
    LinkingForm(FiniteAbelianGroup group, std::vector<std::vector<Fraction>> gram);

    // Convenience for a cyclic group Z/d with generator self-linking v.
    static LinkingForm cyclic(std::int64_t d, const Fraction &v);

    const FiniteAbelianGroup &group() const { return group_; }
    const std::vector<std::vector<Fraction>> &gram() const { return gram_; }

    // exponent() * gram[i][j], an integer mod exponent().
    std::int64_t scaled(std::size_t i, std::size_t j) const { return scaled_[i * group_.rank() + j]; }

    // beta(x, y) * exponent() mod exponent(), on reduced or unreduced
    // coordinates of the right length.
    std::int64_t pairing_scaled(const Element &x, const Element &y) const;

    LinkingForm negated() const;

    std::string to_string() const;

  private:
    FiniteAbelianGroup group_;
    std::vector<std::vector<Fraction>> gram_;
    std::vector<std::int64_t> scaled_;
};

// beta(x, y) in [0, 1).  Throws DomainError unless x and y are reduced
// coordinate vectors of the form's group.
Fraction pairing_eval(const LinkingForm &f, const Element &x, const Element &y);

// p-primary summand of a form together with its inclusion into the original
// group: coordinate a of the part maps to multiplier[a] times generator
// source[a] of the original.
struct PrimaryPart {
    std::int64_t prime = 0;
    LinkingForm form;
    std::vector<std::size_t> source;
    std::vector<std::int64_t> multiplier;

    Element lift(const Element &x, const FiniteAbelianGroup &ambient) const;
};

std::map<std::int64_t, PrimaryPart> primary_decompose(const LinkingForm &f);

// True iff some unit u mod p has a = u^2 b mod 1.  Both a and b must have
// denominators dividing p.
bool cyclic_form_equivalent(std::int64_t p, const Fraction &a, const Fraction &b);

} // namespace slicenum
