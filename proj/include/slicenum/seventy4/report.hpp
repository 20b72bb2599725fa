#pragma once

#include "slicenum/exactmath/laurent_poly.hpp"
#include "slicenum/knotinv/seifert.hpp"
#include "slicenum/seventy4/obstructions.hpp"
#include "slicenum/seventy4/quad_field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slicenum {

// Genus-1 Seifert matrix reproducing Alexander polynomial 4t^2 - 7t + 4 and
// determinant 15.
IntMatrix seifert_74();

struct VerifyOptions {
    std::int64_t p_bound = 1000;
    std::int64_t dioph_bound = 500;
    int trials = 200;
    std::uint64_t seed = 74;
    long long budget = kDefaultBudget;
};

struct Stage {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Conclusion {
    // g_s = 1: Fox-Milnor fails (g_s >= 1) and a genus-1 Seifert surface
    // exists (g_s <= 1).
    std::optional<int> slice_genus;
    // u_s >= 2: no single crossing change yields a slice knot.
    std::optional<int> slicing_number_lower_bound;
    // u_s = 2: the lower bound together with two crossing changes that unknot
    // 7_4, which is quoted rather than recomputed.
    std::optional<int> slicing_number;
};

struct ObstructionReport {
    VerifyOptions options;

    // Alexander polynomial stage.
    std::size_t seifert_genus = 0;
    LaurentPoly alexander;
    std::optional<LaurentPoly> fox_milnor_witness;
    BigInt determinant;
    FiniteAbelianGroup homology;
    int signature = 0;

    // Double branched cover as the lens space L(15, 4).
    Fraction two_bridge_fraction;
    Fraction lens_self_linking;
    Fraction n1_self_linking;

    std::vector<Theorem1Row> theorem1_table;
    std::vector<Triple> lemma_solutions;

    QuadFieldElement phi_t;
    QuadFieldElement phi_t_sum;
    QuadFieldElement phi_t_product;
    QuadFieldElement phi_delta;
    // 4x^2 - 7x + 4 at the printed (7 + sqrt(-15))/4; nonzero.
    QuadFieldElement printed_root_value;

    int det_identity_passed = 0;
    int parity_passed = 0;
    int linking_divisible = 0;

    std::vector<Stage> stages;

    bool conclusive() const;
    // Name of the first failing stage, empty when conclusive.
    std::string failing_stage() const;
    Conclusion conclusion() const;
};

// Runs every stage on `seifert` (the shipped 7_4 matrix unless a caller is
// exercising a negative control) and assembles the verdict.  Stage failures
// and budget overruns mark the report inconclusive instead of throwing.
ObstructionReport verify_74(const VerifyOptions &opts = {}, const IntMatrix &seifert = seifert_74());

} // namespace slicenum
