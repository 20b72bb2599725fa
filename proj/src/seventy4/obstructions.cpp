#include "slicenum/seventy4/obstructions.hpp"

#include "slicenum/errors.hpp"
#include "slicenum/exactmath/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slicenum {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i)
        r = checked_mul(r, b);
    return r;
}

std::int64_t isqrt_exact(std::int64_t n) {
    if (n < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r * r == n ? r : -1;
}

} // namespace

std::int64_t AdmissibleOrder::magnitude() const {
    return checked_mul(checked_mul(ipow(5, 2 * k + 1), ipow(3, 2 * j + 1)), checked_mul(q, q));
}

std::int64_t AdmissibleOrder::value() const { return sign * magnitude(); }

std::string AdmissibleOrder::to_string() const {
    std::string s = sign < 0 ? "-" : "+";
    s += "5^" + std::to_string(2 * k + 1) + "*3^" + std::to_string(2 * j + 1);
    if (q != 1)
        s += "*" + std::to_string(q) + "^2";
    return s + " = " + std::to_string(value());
}

std::vector<AdmissibleOrder> admissible_orders(std::int64_t bound) {
    if (bound < 15)
        throw DomainError("admissible orders start at 15; bound " + std::to_string(bound) + " is too small");
    std::vector<AdmissibleOrder> out;
    for (int k = 0; ipow(5, 2 * k + 1) * 3 <= bound; ++k)
        for (int j = 0; ipow(5, 2 * k + 1) * ipow(3, 2 * j + 1) <= bound; ++j) {
            const std::int64_t base = ipow(5, 2 * k + 1) * ipow(3, 2 * j + 1);
            for (std::int64_t q = 1; checked_mul(base, q * q) <= bound; ++q) {
                if (std::gcd(q, std::int64_t{30}) != 1)
                    continue;
                out.push_back({-1, k, j, q});
                out.push_back({1, k, j, q});
            }
        }
    std::sort(out.begin(), out.end(), [](const AdmissibleOrder &x, const AdmissibleOrder &y) {
        if (x.magnitude() != y.magnitude())
            return x.magnitude() < y.magnitude();
        return x.sign < y.sign;
    });
    return out;
}

LinkingForm theorem1_form(std::int64_t p) {
    const std::int64_t n = p < 0 ? -p : p;
    if (n == 0 || n % 15 != 0)
        throw DomainError("theorem1_form needs 15 | p, got " + std::to_string(p));
    return LinkingForm(FiniteAbelianGroup({15, n}), {{make_fraction(4, 15), 0}, {0, make_fraction(2, p)}});
}

std::vector<Theorem1Row> theorem1_verify(std::int64_t bound, long long budget) {
    std::vector<Theorem1Row> rows;
    for (const AdmissibleOrder &ord : admissible_orders(bound)) {
        const LinkingForm form = theorem1_form(ord.value());
        const LinkingForm five = primary_decompose(form).at(5).form;
        MetabolizerSearch s = search_metabolizer(five, budget);
        rows.push_back({ord, five, std::move(s.witness), s.candidates});
    }
    return rows;
}

std::set<std::int64_t> qr_set_mod(std::int64_t m) {
    if (m < 2)
        throw DomainError("qr_set_mod needs m >= 2");
    std::set<std::int64_t> out;
    for (std::int64_t x = 0; x < m; ++x)
        out.insert(static_cast<std::int64_t>(static_cast<__int128>(x) * x % m));
    return out;
}

std::vector<Triple> norm_form_search(std::int64_t m, std::int64_t d, std::int64_t bound) {
    if (bound < 1)
        throw DomainError("search bound must be >= 1");
    std::vector<Triple> out;
    for (std::int64_t c = 1; c <= bound; ++c) {
        const __int128 rhs = static_cast<__int128>(m) * c * c;
        for (std::int64_t b = 0; b <= bound; ++b) {
            const __int128 a2 = rhs - static_cast<__int128>(d) * b * b;
            if (a2 < 0) {
                if (d > 0)
                    break;
                continue;
            }
            if (a2 > static_cast<__int128>(bound) * bound)
                continue;
            const std::int64_t a = isqrt_exact(static_cast<std::int64_t>(a2));
            if (a < 0 || std::gcd(std::gcd(a, b), c) != 1)
                continue;
            // Sign variants of a zero coordinate repeat; removed below.
            for (std::int64_t sa : {a, -a})
                for (std::int64_t sb : {b, -b}) {
                    out.push_back({sa, sb, c});
                    if (b == 0)
                        break;
                }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Triple> lemma_diophantine_search(std::int64_t bound) {
    std::vector<Triple> out = norm_form_search(2, 15, bound);
    for (const Triple &t : norm_form_search(-2, 15, bound))
        out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace slicenum
