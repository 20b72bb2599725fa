#include "slicenum/factor/factorization.hpp"

#include "slicenum/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

namespace slicenum {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Prime factorization of |n| > 0 when it can be completed by trial division
// up to kTrialLimit plus one probable-prime cofactor.
std::optional<std::vector<std::pair<BigInt, int>>> factor_bigint(BigInt n) {
    n = abs(n);
    std::vector<std::pair<BigInt, int>> out;
    for (unsigned long p = 2; p <= kTrialLimit && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(BigInt(p), e);
    }
    if (n > 1) {
        if (BigInt(kTrialLimit) * kTrialLimit < n && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            return std::nullopt;
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<BigInt> positive_divisors(const std::vector<std::pair<BigInt, int>> &pf) {
    std::vector<BigInt> divs{1};
    for (const auto &[p, e] : pf) {
        const std::size_t base = divs.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

BigInt content(const LaurentPoly &p) {
    BigInt g = 0;
    for (const auto &[e, c] : p.terms())
        g = gcd(g, c);
    return g;
}

bool poly_less(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.span() != b.span())
        return a.span() < b.span();
    const auto da = a.dense(), db = b.dense();
    // Compare from the leading coefficient down, larger first.
    for (std::size_t i = da.size(); i-- > 0;)
        if (da[i] != db[i])
            return da[i] > db[i];
    return false;
}

struct Node {
    BigInt x;
    BigInt value;
    std::vector<BigInt> divisors;
};

class Kronecker {
  public:
    explicit Kronecker(const LaurentPoly &p) : p_(p), degree_(p.max_exponent()) {}

    // Irreducible factor of least degree, or nullopt when p_ is irreducible.
    std::optional<LaurentPoly> smallest_factor() {
        for (long d = 1; 2 * d <= degree_; ++d) {
            if (d == 1)
                if (auto root = integer_root())
                    return LaurentPoly{{1, 1}} - LaurentPoly(*root);
            if (auto g = factor_of_degree(d))
                return g;
        }
        return std::nullopt;
    }

  private:
    std::optional<BigInt> integer_root() {
        // Any integer root divides the constant term.
        const auto pf = factor_bigint(p_.coeff(0));
        if (!pf)
            return std::nullopt;
        for (const BigInt &d : positive_divisors(*pf))
            for (const BigInt &x : {d, BigInt(-d)})
                if (evaluate(p_, x) == 0)
                    return x;
        return std::nullopt;
    }

    void choose_nodes() {
        if (!nodes_.empty())
            return;
        std::vector<std::tuple<std::size_t, long, Node>> ranked;
        const long reach = 4 * degree_ + 8;
        for (long k = 0; k <= 2 * reach; ++k) {
            const long x = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
            const BigInt v = evaluate(p_, BigInt(x));
            if (v == 0)
                continue;
            auto pf = factor_bigint(v);
            if (!pf)
                continue;
            Node n{x, v, positive_divisors(*pf)};
            ranked.emplace_back(n.divisors.size(), std::labs(x), std::move(n));
        }
        std::stable_sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
            return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
        });
        for (auto &r : ranked)
            nodes_.push_back(std::move(std::get<2>(r)));
    }

    std::optional<LaurentPoly> factor_of_degree(long d) {
        choose_nodes();
        if (nodes_.size() < static_cast<std::size_t>(d + 1))
            throw CapacityError("not enough factorable evaluation points for Kronecker's method");
        d_ = d;
        table_.assign(static_cast<std::size_t>(d + 1), {});
        return assign(0);
    }

    // Chooses g(x_k) among the signed divisors of p(x_k), keeping the Newton
    // divided differences integral.
    std::optional<LaurentPoly> assign(std::size_t k) {
        const Node &node = nodes_[k];
        for (const BigInt &dv : node.divisors) {
            for (int s = 0; s < (k == 0 ? 1 : 2); ++s) {
                std::vector<BigInt> row(k + 1);
                row[0] = s == 0 ? dv : BigInt(-dv);
                bool integral = true;
                for (std::size_t j = 1; j <= k && integral; ++j) {
                    const BigInt num = row[j - 1] - table_[k - 1][j - 1];
                    const BigInt den = node.x - nodes_[k - j].x;
                    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
                        integral = false;
                    else
                        row[j] = num / den;
                }
                if (!integral)
                    continue;
                table_[k] = std::move(row);
                if (k + 1 < static_cast<std::size_t>(d_ + 1)) {
                    if (auto g = assign(k + 1))
                        return g;
                } else if (auto g = candidate()) {
                    return g;
                }
            }
        }
        return std::nullopt;
    }

    std::optional<LaurentPoly> candidate() const {
        const auto d = static_cast<std::size_t>(d_);
        const BigInt &lead = table_[d][d];
        if (lead == 0 || !mpz_divisible_p(p_.leading_coeff().get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        std::vector<BigInt> coeffs{lead};
        for (std::size_t k = d; k-- > 0;) {
            std::vector<BigInt> next(coeffs.size() + 1);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] += coeffs[i];
                next[i] -= coeffs[i] * nodes_[k].x;
            }
            next[0] += table_[k][k];
            coeffs = std::move(next);
        }
        if (coeffs[0] == 0 || !mpz_divisible_p(p_.coeff(0).get_mpz_t(), coeffs[0].get_mpz_t()))
            return std::nullopt;
        LaurentPoly g = LaurentPoly::from_coeffs(coeffs);
        if (!exact_quotient(p_, g))
            return std::nullopt;
        return g;
    }

    const LaurentPoly &p_;
    long degree_;
    long d_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::vector<BigInt>> table_;
};

LaurentPoly positive_lead(const LaurentPoly &p) { return p.leading_coeff() < 0 ? -p : p; }

void factor_primitive(const LaurentPoly &p, std::map<std::vector<BigInt>, std::pair<LaurentPoly, int>> &acc) {
    if (p.is_constant())
        return;
    LaurentPoly rest = p;
    for (;;) {
        Kronecker k(rest);
        auto g = k.smallest_factor();
        if (!g) {
            auto &slot = acc[rest.dense()];
            slot.first = rest;
            ++slot.second;
            return;
        }
        LaurentPoly f = positive_lead(*g);
        auto &slot = acc[f.dense()];
        slot.first = f;
        ++slot.second;
        rest = positive_lead(*exact_quotient(rest, f));
        if (rest.is_constant())
            return;
    }
}

} // namespace

LaurentPoly Factorization::expand() const {
    LaurentPoly r = LaurentPoly::monomial(sign, shift);
    for (const auto &[f, m] : factors)
        for (int i = 0; i < m; ++i)
            r *= f;
    return r;
}

bool Factorization::is_irreducible() const {
    return factors.size() == 1 && factors.front().second == 1 && !factors.front().first.is_constant();
}

Factorization factor_integer_poly(const LaurentPoly &p) {
    if (p.is_zero())
        throw DomainError("cannot factor the zero polynomial");
    if (p.span() > kMaxFactorSpan)
        throw CapacityError("exponent span " + std::to_string(p.span()) + " exceeds the factoring cap of " +
                            std::to_string(kMaxFactorSpan));
    Factorization out;
    out.shift = p.min_exponent();
    LaurentPoly q = p.shifted(-out.shift);
    if (q.leading_coeff() < 0) {
        out.sign = -1;
        q = -q;
    }
    const BigInt c = content(q);
    if (c != 1) {
        q = *exact_quotient(q, LaurentPoly(c));
        auto pf = factor_bigint(c);
        if (pf) {
            for (const auto &[prime, e] : *pf)
                out.factors.emplace_back(LaurentPoly(prime), e);
        } else {
            out.factors.emplace_back(LaurentPoly(c), 1);
        }
    }
    std::map<std::vector<BigInt>, std::pair<LaurentPoly, int>> acc;
    factor_primitive(q, acc);
    std::vector<std::pair<LaurentPoly, int>> nonconst;
    for (auto &[key, fm] : acc)
        nonconst.push_back(std::move(fm));
    std::sort(nonconst.begin(), nonconst.end(), [](const auto &a, const auto &b) { return poly_less(a.first, b.first); });
    for (auto &fm : nonconst)
        out.factors.push_back(std::move(fm));
    return out;
}

LaurentPoly reciprocal(const LaurentPoly &q) {
    if (q.is_zero())
        return q;
    const LaurentPoly r = conjugate(q).shifted(q.max_exponent());
    return positive_lead(r.shifted(-r.min_exponent()));
}

std::optional<LaurentPoly> fox_milnor(const LaurentPoly &delta) {
    const Factorization fz = factor_integer_poly(delta);
    LaurentPoly f = 1;
    std::map<std::vector<BigInt>, int> remaining;
    for (const auto &[q, m] : fz.factors)
        remaining[q.dense()] += m;

    for (const auto &[q, m] : fz.factors) {
        auto it = remaining.find(q.dense());
        if (it == remaining.end() || it->second == 0)
            continue;
        if (q.is_constant()) {
            // f(1)^2 carries the content, so every prime appears evenly.
            if (m % 2 != 0)
                return std::nullopt;
            for (int i = 0; i < m / 2; ++i)
                f *= q;
            it->second = 0;
            continue;
        }
        const LaurentPoly rq = reciprocal(q);
        if (rq == q) {
            if (m % 2 != 0)
                return std::nullopt;
            for (int i = 0; i < m / 2; ++i)
                f *= q;
            it->second = 0;
            continue;
        }
        auto jt = remaining.find(rq.dense());
        if (jt == remaining.end() || jt->second != m)
            return std::nullopt;
        // q and its reciprocal pair off; keep the larger leading coefficient.
        const LaurentPoly &keep = poly_less(q, rq) ? q : rq;
        for (int i = 0; i < m; ++i)
            f *= keep;
        it->second = 0;
        jt->second = 0;
    }
    if (!associated(delta, f * conjugate(f)))
        throw std::logic_error("Fox-Milnor witness failed re-expansion");
    return f;
}

} // namespace slicenum
