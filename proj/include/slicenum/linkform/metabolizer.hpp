#pragma once

#include "slicenum/linkform/linking_form.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slicenum {

// Subgroup generated by `generators`; `order` is the size of the closure.
struct Subgroup {
    std::vector<Element> generators;
    std::int64_t order = 1;
};

// All elements of the subgroup generated by `generators`, as sorted
// encode() indices.
std::vector<std::int64_t> subgroup_elements(const FiniteAbelianGroup &g, const std::vector<Element> &generators);

Subgroup make_subgroup(const FiniteAbelianGroup &g, std::vector<Element> generators);

inline constexpr long long kDefaultBudget = 10'000'000;

enum class SearchStrategy {
    // Split into p-primary summands and search each one.
    primary,
    // Search the whole group directly; used as a cross-check.
    whole_group,
};

struct MetabolizerSearch {
    std::optional<Subgroup> witness;
    long long candidates = 0;
};

// Searches for H with |H|^2 = |G| and beta identically zero on H.
// Candidate generating sets are grown one isotropic generator at a time in
// lexicographic order and deduplicated by the subgroup they generate, so the
// returned witness is deterministic.  Throws BudgetExceeded when more than
// `budget` candidate generating sets would be examined.
MetabolizerSearch search_metabolizer(const LinkingForm &f, long long budget = kDefaultBudget,
                                     SearchStrategy strategy = SearchStrategy::primary);

std::optional<Subgroup> find_metabolizer(const LinkingForm &f, long long budget = kDefaultBudget);

// Order of the generated subgroup squared equals |G| and every pair of
// elements pairs to zero, checked by enumeration.
bool is_metabolizer(const LinkingForm &f, const Subgroup &h);

enum class SliceVerdict { obstructed_by_order, obstructed_by_form, passes };

std::string to_string(SliceVerdict v);

struct SliceCheck {
    SliceVerdict verdict;
    std::optional<Subgroup> witness;
};

// Order test (|G| must be an odd square) followed by the metabolizer test.
// `passes` is a necessary condition for sliceness only.
SliceCheck slice_obstruction_check(const LinkingForm &f, long long budget = kDefaultBudget);

} // namespace slicenum
