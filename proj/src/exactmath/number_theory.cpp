#include "slicenum/exactmath/number_theory.hpp"

#include "slicenum/errors.hpp"

namespace slicenum {

std::vector<std::pair<std::int64_t, int>> factor_small(std::int64_t n) {
    if (n < 1)
        throw DomainError("factor_small needs n >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p <= n / p; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::pair<std::int64_t, int> prime_power_part(std::int64_t n, std::int64_t p) {
    std::int64_t q = 1;
    int e = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        q *= p;
        ++e;
    }
    return {q, e};
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw CapacityError("integer product exceeds 64 bits");
    return r;
}

} // namespace slicenum
