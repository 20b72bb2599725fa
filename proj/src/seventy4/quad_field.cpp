#include "slicenum/seventy4/quad_field.hpp"

#include "slicenum/errors.hpp"

namespace slicenum {

QuadFieldElement::QuadFieldElement(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (c_ == 0)
        throw DomainError("quadratic field element with zero denominator");
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    const BigInt g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

QuadFieldElement QuadFieldElement::rational(const Fraction &x) { return {x.get_num(), 0, x.get_den()}; }

QuadFieldElement QuadFieldElement::conjugate() const { return {a_, -b_, c_}; }

QuadFieldElement QuadFieldElement::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero in Q(sqrt(-15))");
    // 1/x = c * conj(a + b w) / (a^2 + 15 b^2)
    const BigInt n = a_ * a_ + 15 * b_ * b_;
    return {c_ * a_, -c_ * b_, n};
}

QuadFieldElement operator+(const QuadFieldElement &x, const QuadFieldElement &y) {
    return {x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_};
}

QuadFieldElement operator-(const QuadFieldElement &x, const QuadFieldElement &y) {
    return {x.a_ * y.c_ - y.a_ * x.c_, x.b_ * y.c_ - y.b_ * x.c_, x.c_ * y.c_};
}

QuadFieldElement operator*(const QuadFieldElement &x, const QuadFieldElement &y) {
    return {x.a_ * y.a_ - 15 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_};
}

std::string QuadFieldElement::to_string() const {
    if (b_ == 0)
        return slicenum::to_string(make_fraction(a_, c_));
    const BigInt mag = abs(b_);
    std::string root = (mag == 1 ? std::string() : mag.get_str() + "*") + "sqrt(-15)";
    std::string s;
    if (a_ == 0)
        s = (b_ < 0 ? "-" : "") + root;
    else
        s = a_.get_str() + (b_ < 0 ? " - " : " + ") + root;
    if (c_ == 1)
        return s;
    return (a_ == 0 ? s : "(" + s + ")") + "/" + c_.get_str();
}

Fraction quadfield_norm(const QuadFieldElement &x) {
    return make_fraction(x.a() * x.a() + 15 * x.b() * x.b(), x.c() * x.c());
}

QuadFieldElement phi_root() { return {7, 1, 8}; }

namespace {

QuadFieldElement power(QuadFieldElement base, LaurentPoly::Exponent e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    QuadFieldElement r = QuadFieldElement::rational(1);
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

} // namespace

QuadFieldElement phi_embed(const LaurentPoly &p) {
    const QuadFieldElement t = phi_root();
    QuadFieldElement sum;
    for (const auto &[e, c] : p.terms())
        sum = sum + QuadFieldElement::rational(c) * power(t, e);
    return sum;
}

QuadFieldElement quarter_value_check() {
    const QuadFieldElement x{7, 1, 4};
    const QuadFieldElement four = QuadFieldElement::rational(4);
    const QuadFieldElement seven = QuadFieldElement::rational(7);
    return four * x * x - seven * x + four;
}

} // namespace slicenum
