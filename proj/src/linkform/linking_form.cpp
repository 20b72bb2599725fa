#include "slicenum/linkform/linking_form.hpp"

#include "slicenum/errors.hpp"
#include "slicenum/exactmath/number_theory.hpp"

#include <numeric>

namespace slicenum {

LinkingForm::LinkingForm(FiniteAbelianGroup group, std::vector<std::vector<Fraction>> gram)
    : group_(std::move(group)), gram_(std::move(gram)) {
    const std::size_t r = group_.rank();
    if (gram_.size() != r)
        throw DomainError("Gram matrix has " + std::to_string(gram_.size()) + " rows, group rank is " +
                          std::to_string(r));
    for (auto &row : gram_) {
        if (row.size() != r)
            throw DomainError("Gram matrix is not square");
        for (auto &x : row)
            x = mod_one(x);
    }
    const BigInt e = group_.exponent();
    scaled_.resize(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (gram_[i][j] != gram_[j][i])
                throw DomainError("Gram matrix is not symmetric mod 1");
            const Fraction di_gij = Fraction(group_.invariant_factors()[i]) * gram_[i][j];
            if (di_gij.get_den() != 1)
                throw DomainError("Gram entry " + slicenum::to_string(gram_[i][j]) +
                                  " is not well defined on a generator of order " +
                                  std::to_string(group_.invariant_factors()[i]));
            const Fraction s = e * gram_[i][j];
            scaled_[i * r + j] = s.get_num().get_si();
        }
}

LinkingForm LinkingForm::cyclic(std::int64_t d, const Fraction &v) {
    return LinkingForm(FiniteAbelianGroup({d}), {{v}});
}

std::int64_t LinkingForm::pairing_scaled(const Element &x, const Element &y) const {
    const std::size_t r = group_.rank();
    if (x.size() != r || y.size() != r)
        throw DomainError("element length does not match the group rank");
    const std::int64_t e = group_.exponent();
    __int128 acc = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (y[j] == 0)
                continue;
            acc = (acc + static_cast<__int128>(x[i]) * y[j] % e * scaled_[i * r + j]) % e;
        }
    }
    std::int64_t v = static_cast<std::int64_t>(acc % e);
    return v < 0 ? v + e : v;
}

LinkingForm LinkingForm::negated() const {
    auto g = gram_;
    for (auto &row : g)
        for (auto &x : row)
            x = -x;
    return LinkingForm(group_, std::move(g));
}

std::string LinkingForm::to_string() const {
    std::string s = group_.to_string() + " [";
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if (i > 0)
            s += "; ";
        for (std::size_t j = 0; j < gram_[i].size(); ++j)
            s += (j ? " " : "") + slicenum::to_string(gram_[i][j]);
    }
    return s + "]";
}

Fraction pairing_eval(const LinkingForm &f, const Element &x, const Element &y) {
    if (!f.group().contains(x) || !f.group().contains(y))
        throw DomainError("coordinate out of range for " + f.group().to_string());
    return make_fraction(f.pairing_scaled(x, y), f.group().exponent());
}

Element PrimaryPart::lift(const Element &x, const FiniteAbelianGroup &ambient) const {
    Element out(ambient.rank(), 0);
    for (std::size_t a = 0; a < source.size(); ++a)
        out[source[a]] = mod_floor(x.at(a) * multiplier[a], ambient.invariant_factors()[source[a]]);
    return out;
}

std::map<std::int64_t, PrimaryPart> primary_decompose(const LinkingForm &f) {
    const auto &d = f.group().invariant_factors();
    std::map<std::int64_t, PrimaryPart> parts;
    if (d.empty())
        return parts;
    // Every prime dividing the group divides the top invariant factor.
    for (const auto &[p, unused] : factor_small(d.back())) {
        PrimaryPart part;
        part.prime = p;
        std::vector<std::int64_t> orders;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const auto [q, e] = prime_power_part(d[i], p);
            if (e == 0)
                continue;
            part.source.push_back(i);
            part.multiplier.push_back(d[i] / q);
            orders.push_back(q);
        }
        const std::size_t r = orders.size();
        std::vector<std::vector<Fraction>> gram(r, std::vector<Fraction>(r));
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                gram[a][b] = Fraction(part.multiplier[a]) * part.multiplier[b] *
                             f.gram()[part.source[a]][part.source[b]];
        part.form = LinkingForm(FiniteAbelianGroup(orders), std::move(gram));
        parts.emplace(p, std::move(part));
    }
    return parts;
}

bool cyclic_form_equivalent(std::int64_t p, const Fraction &a, const Fraction &b) {
    if (p < 1)
        throw DomainError("cyclic_form_equivalent needs p >= 1");
    const BigInt pz = p;
    if (!mpz_divisible_p(pz.get_mpz_t(), a.get_den_mpz_t()) ||
        !mpz_divisible_p(pz.get_mpz_t(), b.get_den_mpz_t()))
        throw DomainError("form values must have denominators dividing " + std::to_string(p));
    const std::int64_t an = mod_floor(Fraction(p * a).get_num(), pz).get_si();
    const std::int64_t bn = mod_floor(Fraction(p * b).get_num(), pz).get_si();
    if (p == 1)
        return true;
    for (std::int64_t u = 1; u < p; ++u) {
        if (std::gcd(u, p) != 1)
            continue;
        const __int128 v = static_cast<__int128>(u) * u % p * bn % p;
        if (v == an)
            return true;
    }
    return false;
}

} // namespace slicenum
