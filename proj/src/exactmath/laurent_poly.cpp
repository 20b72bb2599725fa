#include "slicenum/exactmath/laurent_poly.hpp"

#include "slicenum/errors.hpp"

namespace slicenum {

LaurentPoly::LaurentPoly(long c) { add_term(0, BigInt(c)); }

LaurentPoly::LaurentPoly(const BigInt &c) { add_term(0, c); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms) {
    for (const auto &[e, c] : terms)
        add_term(e, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(const BigInt &c, Exponent e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<BigInt> &c, Exponent shift) {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        p.add_term(shift + static_cast<Exponent>(i), c[i]);
    return p;
}

void LaurentPoly::add_term(Exponent e, const BigInt &c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

BigInt LaurentPoly::coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
    if (terms_.empty())
        throw DomainError("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
    if (terms_.empty())
        throw DomainError("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

const BigInt &LaurentPoly::lowest_coeff() const {
    if (terms_.empty())
        throw DomainError("lowest_coeff of zero polynomial");
    return terms_.begin()->second;
}

const BigInt &LaurentPoly::leading_coeff() const {
    if (terms_.empty())
        throw DomainError("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

std::vector<BigInt> LaurentPoly::dense() const {
    if (terms_.empty())
        return {};
    std::vector<BigInt> out(static_cast<std::size_t>(span() + 1));
    const Exponent lo = min_exponent();
    for (const auto &[e, c] : terms_)
        out[static_cast<std::size_t>(e - lo)] = c;
    return out;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly r;
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
    LaurentPoly r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly lp_ring_op(const LaurentPoly &a, const LaurentPoly &b, RingOp which) {
    switch (which) {
    case RingOp::add:
        return a + b;
    case RingOp::sub:
        return a - b;
    case RingOp::mul:
        return a * b;
    }
    return {};
}

LaurentPoly conjugate(const LaurentPoly &a) {
    LaurentPoly r;
    for (const auto &[e, c] : a.terms())
        r += LaurentPoly::monomial(c, -e);
    return r;
}

namespace {

Fraction power(const Fraction &x, LaurentPoly::Exponent e) {
    Fraction base = x;
    if (e < 0) {
        base = 1 / x;
        e = -e;
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_fraction(num, den);
}

} // namespace

Fraction evaluate(const LaurentPoly &a, const Fraction &x) {
    if (x == 0 && !a.is_zero() && a.min_exponent() < 0)
        throw DomainError("evaluating a negative power of t at 0");
    Fraction sum = 0;
    for (const auto &[e, c] : a.terms())
        sum += c * (e == 0 ? Fraction(1) : power(x, e));
    return sum;
}

BigInt evaluate(const LaurentPoly &a, const BigInt &x) {
    Fraction v = evaluate(a, Fraction(x));
    if (v.get_den() != 1)
        throw DomainError("integer evaluation with a non-integral value");
    return v.get_num();
}

LaurentPoly normalize_units(const LaurentPoly &a) {
    if (a.is_zero())
        throw DomainError("cannot normalize the zero polynomial");
    LaurentPoly r = a.shifted(-a.min_exponent());
    if (r.lowest_coeff() < 0)
        r = -r;
    return r;
}

bool associated(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return normalize_units(a) == normalize_units(b);
}

std::vector<BigInt> reduce_mod_tn_minus_1(const LaurentPoly &a, std::int64_t n) {
    if (n < 1)
        throw DomainError("reduction modulo t^n - 1 needs n >= 1");
    std::vector<BigInt> out(static_cast<std::size_t>(n));
    for (const auto &[e, c] : a.terms()) {
        std::int64_t r = e % n;
        if (r < 0)
            r += n;
        out[static_cast<std::size_t>(r)] += c;
    }
    return out;
}

EvenOddSums even_odd_sums(const LaurentPoly &a) {
    EvenOddSums s{0, 0};
    for (const auto &[e, c] : a.terms()) {
        if (e % 2 == 0)
            s.even += c;
        else
            s.odd += c;
    }
    return s;
}

std::optional<LaurentPoly> exact_quotient(const LaurentPoly &a, const LaurentPoly &b) {
    if (b.is_zero())
        throw DomainError("division by the zero polynomial");
    if (a.is_zero())
        return LaurentPoly{};
    // Strip powers of t so both sides are polynomials with nonzero constant
    // term; the quotient is then an ordinary polynomial.
    std::vector<BigInt> num = a.dense();
    const std::vector<BigInt> den = b.dense();
    if (num.size() < den.size())
        return std::nullopt;
    const std::size_t qlen = num.size() - den.size() + 1;
    std::vector<BigInt> q(qlen);
    const BigInt &lead = den.back();
    for (std::size_t k = qlen; k-- > 0;) {
        BigInt &top = num[k + den.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        BigInt c = top / lead;
        q[k] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[k + i] -= c * den[i];
    }
    for (const BigInt &r : num)
        if (r != 0)
            return std::nullopt;
    return LaurentPoly::from_coeffs(q, a.min_exponent() - b.min_exponent());
}

} // namespace slicenum
