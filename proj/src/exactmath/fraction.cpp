#include "slicenum/exactmath/fraction.hpp"

#include "slicenum/errors.hpp"

namespace slicenum {

Fraction make_fraction(const BigInt &num, const BigInt &den) {
    if (den == 0)
        throw DomainError("fraction with zero denominator");
    Fraction x(num, den);
    x.canonicalize();
    return x;
}

BigInt floor_div(const BigInt &a, const BigInt &b) {
    if (b == 0)
        throw DomainError("division by zero");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_floor(const BigInt &a, const BigInt &m) {
    BigInt r = a - floor_div(a, m) * m;
    if (r < 0)
        r += abs(m);
    return r;
}

Fraction mod_one(const Fraction &x) {
    BigInt r = mod_floor(x.get_num(), x.get_den());
    return make_fraction(r, x.get_den());
}

bool is_perfect_square(const BigInt &n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::string to_string(const BigInt &n) { return n.get_str(); }

std::string to_string(const Fraction &x) {
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace slicenum
