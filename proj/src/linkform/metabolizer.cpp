#include "slicenum/linkform/metabolizer.hpp"

#include "slicenum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace slicenum {

std::vector<std::int64_t> subgroup_elements(const FiniteAbelianGroup &g, const std::vector<Element> &generators) {
    std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
    std::vector<Element> elems{Element(g.rank(), 0)};
    member[0] = 1;
    for (const Element &gen : generators) {
        const Element step = g.reduce(gen);
        const std::size_t base = elems.size();
        Element kg = step;
        while (!member[static_cast<std::size_t>(g.encode(kg))]) {
            for (std::size_t s = 0; s < base; ++s) {
                Element e = g.add(elems[s], kg);
                member[static_cast<std::size_t>(g.encode(e))] = 1;
                elems.push_back(std::move(e));
            }
            kg = g.add(kg, step);
        }
    }
    std::vector<std::int64_t> idx;
    idx.reserve(elems.size());
    for (const Element &e : elems)
        idx.push_back(g.encode(e));
    std::sort(idx.begin(), idx.end());
    return idx;
}

Subgroup make_subgroup(const FiniteAbelianGroup &g, std::vector<Element> generators) {
    Subgroup h;
    h.order = static_cast<std::int64_t>(subgroup_elements(g, generators).size());
    h.generators = std::move(generators);
    return h;
}

bool is_metabolizer(const LinkingForm &f, const Subgroup &h) {
    const FiniteAbelianGroup &g = f.group();
    const auto idx = subgroup_elements(g, h.generators);
    const auto n = static_cast<std::int64_t>(idx.size());
    if (n != h.order || n * n != g.order())
        return false;
    std::vector<Element> elems;
    elems.reserve(idx.size());
    for (std::int64_t i : idx)
        elems.push_back(g.decode(i));
    for (const Element &x : elems)
        for (const Element &y : elems)
            if (f.pairing_scaled(x, y) != 0)
                return false;
    return true;
}

namespace {

std::int64_t exact_sqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(n))));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r * r == n ? r : -1;
}

class Searcher {
  public:
    Searcher(const LinkingForm &f, long long budget, long long &candidates)
        : f_(f), g_(f.group()), budget_(budget), candidates_(candidates) {}

    std::optional<std::vector<Element>> run() {
        const std::int64_t n = g_.order();
        target_ = exact_sqrt(n);
        if (target_ < 0)
            return std::nullopt;
        if (target_ == 1)
            return std::vector<Element>{};
        if (n > budget_)
            throw BudgetExceeded("group of order " + std::to_string(n) + " exceeds the search budget", budget_);
        for (std::int64_t i = 1; i < n; ++i) {
            Element x = g_.decode(i);
            if (f_.pairing_scaled(x, x) == 0)
                isotropic_.push_back(std::move(x));
        }
        Level root;
        root.member.assign(static_cast<std::size_t>(n), 0);
        root.member[0] = 1;
        root.elems.push_back(Element(g_.rank(), 0));
        if (dfs(root))
            return path_;
        return std::nullopt;
    }

  private:
    struct Level {
        std::vector<char> member;
        std::vector<Element> elems;
    };

    bool dfs(const Level &cur) {
        const auto order = static_cast<std::int64_t>(cur.elems.size());
        if (order == target_)
            return true;
        for (const Element &gen : isotropic_) {
            if (cur.member[static_cast<std::size_t>(g_.encode(gen))])
                continue;
            bool orthogonal = true;
            for (const Element &h : path_)
                if (f_.pairing_scaled(gen, h) != 0) {
                    orthogonal = false;
                    break;
                }
            if (!orthogonal)
                continue;
            if (++candidates_ > budget_)
                throw BudgetExceeded("metabolizer search exceeded its budget of " + std::to_string(budget_) +
                                         " candidate generating sets",
                                     budget_);
            Level next = extend(cur, gen);
            const auto next_order = static_cast<std::int64_t>(next.elems.size());
            if (next_order > target_)
                continue;
            std::vector<std::int64_t> key;
            key.reserve(next.elems.size());
            for (const Element &e : next.elems)
                key.push_back(g_.encode(e));
            std::sort(key.begin(), key.end());
            if (!seen_.insert(std::move(key)).second)
                continue;
            path_.push_back(gen);
            if (dfs(next))
                return true;
            path_.pop_back();
        }
        return false;
    }

    Level extend(const Level &cur, const Element &gen) const {
        Level next = cur;
        const std::size_t base = cur.elems.size();
        Element kg = gen;
        while (!cur.member[static_cast<std::size_t>(g_.encode(kg))]) {
            for (std::size_t s = 0; s < base; ++s) {
                Element e = g_.add(cur.elems[s], kg);
                next.member[static_cast<std::size_t>(g_.encode(e))] = 1;
                next.elems.push_back(std::move(e));
            }
            kg = g_.add(kg, gen);
        }
        return next;
    }

    const LinkingForm &f_;
    const FiniteAbelianGroup &g_;
    long long budget_;
    long long &candidates_;
    std::int64_t target_ = 0;
    std::vector<Element> isotropic_;
    std::vector<Element> path_;
    std::set<std::vector<std::int64_t>> seen_;
};

} // namespace

MetabolizerSearch search_metabolizer(const LinkingForm &f, long long budget, SearchStrategy strategy) {
    MetabolizerSearch out;
    const FiniteAbelianGroup &g = f.group();
    if (exact_sqrt(g.order()) < 0)
        return out;
    if (strategy == SearchStrategy::whole_group) {
        auto gens = Searcher(f, budget, out.candidates).run();
        if (gens)
            out.witness = make_subgroup(g, std::move(*gens));
        return out;
    }
    // A subgroup is the direct sum of its p-parts and pairings between
    // different primary parts vanish, so H is a metabolizer exactly when
    // each H_p is one for the p-part.
    std::vector<Element> generators;
    for (const auto &[p, part] : primary_decompose(f)) {
        auto gens = Searcher(part.form, budget, out.candidates).run();
        if (!gens)
            return out;
        for (const Element &x : *gens)
            generators.push_back(part.lift(x, g));
    }
    out.witness = make_subgroup(g, std::move(generators));
    return out;
}

std::optional<Subgroup> find_metabolizer(const LinkingForm &f, long long budget) {
    return search_metabolizer(f, budget).witness;
}

std::string to_string(SliceVerdict v) {
    switch (v) {
    case SliceVerdict::obstructed_by_order:
        return "obstructed-by-order";
    case SliceVerdict::obstructed_by_form:
        return "obstructed-by-form";
    case SliceVerdict::passes:
        return "passes";
    }
    return "?";
}

SliceCheck slice_obstruction_check(const LinkingForm &f, long long budget) {
    const std::int64_t n = f.group().order();
    const std::int64_t r = exact_sqrt(n);
    if (r < 0 || r % 2 == 0)
        return {SliceVerdict::obstructed_by_order, std::nullopt};
    auto witness = find_metabolizer(f, budget);
    if (!witness)
        return {SliceVerdict::obstructed_by_form, std::nullopt};
    return {SliceVerdict::passes, std::move(witness)};
}

} // namespace slicenum
