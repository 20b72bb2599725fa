#pragma once

#include "slicenum/linkform/linking_form.hpp"
#include "slicenum/linkform/metabolizer.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace slicenum {

// Surgery coefficient numerator p = sign * 5^(2k+1) * 3^(2j+1) * q^2 with
// gcd(q, 30) = 1: the values for which Z/15 + Z/|p| has square order.
struct AdmissibleOrder {
    int sign = 1;
    int k = 0;
    int j = 0;
    std::int64_t q = 1;

    std::int64_t value() const;
    std::int64_t magnitude() const;
    std::string to_string() const;
};

// Every admissible order with |value| <= bound, sorted by magnitude with the
// negative sign first.  Throws DomainError for bound < 15.
std::vector<AdmissibleOrder> admissible_orders(std::int64_t bound);

// diag(4/15, 2/p) on Z/15 + Z/|p|: the form on H1 of the double branched
// cover of J after sliding the crossing circle off the 15/4-framed curve.
LinkingForm theorem1_form(std::int64_t p);

struct Theorem1Row {
    AdmissibleOrder order;
    LinkingForm five_part;
    std::optional<Subgroup> witness; // a witness would contradict the obstruction
    long long candidates = 0;
};

// Runs the metabolizer search on the 5-primary part of theorem1_form(p) for
// every admissible p.  BudgetExceeded propagates.
std::vector<Theorem1Row> theorem1_verify(std::int64_t bound, long long budget = kDefaultBudget);

// {x^2 mod m}.  Throws DomainError for m < 2.
std::set<std::int64_t> qr_set_mod(std::int64_t m);

struct Triple {
    std::int64_t a, b, c;
    friend bool operator==(const Triple &, const Triple &) = default;
    friend auto operator<=>(const Triple &, const Triple &) = default;
};

// Primitive (a, b, c) with c > 0, gcd(a, b, c) = 1, max(|a|, |b|, c) <= bound
// and a^2 + d b^2 = m c^2.  Sorted.
std::vector<Triple> norm_form_search(std::int64_t m, std::int64_t d, std::int64_t bound);

// Solutions of +-2 c^2 = a^2 + 15 b^2.  Throws DomainError for bound < 1.
std::vector<Triple> lemma_diophantine_search(std::int64_t bound);

} // namespace slicenum
