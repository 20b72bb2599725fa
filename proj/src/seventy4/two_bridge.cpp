#include "slicenum/seventy4/two_bridge.hpp"

#include "slicenum/errors.hpp"

#include <numeric>

namespace slicenum {

Fraction cf_to_fraction(const std::vector<std::int64_t> &terms) {
    if (terms.empty())
        throw DomainError("continued fraction needs at least one term");
    Fraction x = terms.back();
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        if (x == 0)
            throw DomainError("continued fraction divides by zero at term " + std::to_string(i + 2));
        x = Fraction(terms[i]) - 1 / x;
    }
    return x;
}

LinkingForm lens_linking_form(std::int64_t p, std::int64_t q) {
    if (p < 2)
        throw DomainError("lens space L(p, q) needs p >= 2");
    if (std::gcd(p, q) != 1)
        throw DomainError("lens space L(p, q) needs gcd(p, q) = 1");
    return LinkingForm::cyclic(p, make_fraction(q, p));
}

} // namespace slicenum
