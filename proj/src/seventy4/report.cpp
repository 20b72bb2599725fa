#include "slicenum/seventy4/report.hpp"

#include "slicenum/errors.hpp"
#include "slicenum/factor/factorization.hpp"
#include "slicenum/seventy4/cover.hpp"
#include "slicenum/seventy4/two_bridge.hpp"

#include <random>

namespace slicenum {

IntMatrix seifert_74() { return IntMatrix{{2, 1}, {0, 2}}; }

bool ObstructionReport::conclusive() const { return failing_stage().empty(); }

std::string ObstructionReport::failing_stage() const {
    for (const Stage &s : stages)
        if (!s.ok)
            return s.name;
    return {};
}

Conclusion ObstructionReport::conclusion() const {
    Conclusion c;
    auto passed = [this](const std::string &name) {
        for (const Stage &s : stages)
            if (s.name == name)
                return s.ok;
        return false;
    };
    if (passed("seifert") && passed("fox-milnor"))
        c.slice_genus = 1;
    if (conclusive()) {
        c.slicing_number_lower_bound = 2;
        c.slicing_number = 2;
    }
    return c;
}

namespace {

void knot_stages(ObstructionReport &r, const IntMatrix &matrix) {
    std::optional<SeifertMatrix> s;
    try {
        s.emplace(matrix);
    } catch (const DomainError &e) {
        r.stages.push_back({"seifert", false, e.what()});
        return;
    }
    r.seifert_genus = s->genus();
    r.stages.push_back({"seifert", r.seifert_genus == 1,
                        "genus " + std::to_string(r.seifert_genus) + " Seifert surface bounds g_s <= 1"});

    r.alexander = alexander_polynomial(*s);
    try {
        r.fox_milnor_witness = fox_milnor(r.alexander);
        r.stages.push_back({"fox-milnor", !r.fox_milnor_witness,
                            r.fox_milnor_witness ? "Alexander polynomial factors as f(t)f(t^-1)"
                                                 : "Alexander polynomial is not of the form f(t)f(t^-1)"});
    } catch (const CapacityError &e) {
        r.stages.push_back({"fox-milnor", false, e.what()});
    }

    r.determinant = knot_determinant(*s);
    r.signature = knot_signature(*s);
    r.homology = branched_cover_homology(*s);
    bool form_ok = false;
    if (r.homology == FiniteAbelianGroup({15})) {
        const LinkingForm beta = branched_cover_linking_form(*s);
        form_ok = cyclic_form_equivalent(15, beta.gram()[0][0], make_fraction(4, 15));
    }
    r.stages.push_back({"determinant", r.determinant == 15 && form_ok,
                        "H1 = " + r.homology.to_string() + ", linking form ~ 4/15: " + (form_ok ? "yes" : "no")});
}

void lens_stage(ObstructionReport &r) {
    r.two_bridge_fraction = cf_to_fraction({4, 4});
    const LinkingForm lens = lens_linking_form(15, 4);
    r.lens_self_linking = lens.gram()[0][0];
    r.n1_self_linking = pairing_eval(lens, {3}, {3});
    const bool ok = r.two_bridge_fraction == make_fraction(15, 4) && r.lens_self_linking == make_fraction(4, 15) &&
                    r.n1_self_linking == make_fraction(2, 5) && qr_set_mod(5) == std::set<std::int64_t>{0, 1, 4};
    r.stages.push_back({"two-bridge", ok, "[4,4] -> " + to_string(r.two_bridge_fraction) + ", beta(3m1,3m1) = " +
                                              to_string(r.n1_self_linking)});
}

void theorem1_stage(ObstructionReport &r) {
    try {
        r.theorem1_table = theorem1_verify(r.options.p_bound, r.options.budget);
    } catch (const BudgetExceeded &e) {
        r.stages.push_back({"theorem1", false, e.what()});
        return;
    }
    std::size_t witnesses = 0;
    for (const Theorem1Row &row : r.theorem1_table)
        witnesses += row.witness ? 1 : 0;
    r.stages.push_back({"theorem1", witnesses == 0,
                        std::to_string(r.theorem1_table.size()) + " admissible orders, " + std::to_string(witnesses) +
                            " with a 5-primary metabolizer"});
}

void phi_stage(ObstructionReport &r) {
    const LaurentPoly t = LaurentPoly::t();
    r.phi_t = phi_embed(t);
    r.phi_t_sum = phi_embed(t + conjugate(t));
    r.phi_t_product = phi_embed(t) * phi_embed(conjugate(t));
    r.phi_delta = phi_embed(delta_74());
    r.printed_root_value = quarter_value_check();
    const bool ok = r.phi_t_sum == QuadFieldElement::rational(make_fraction(7, 4)) &&
                    r.phi_t_product == QuadFieldElement::rational(1) && r.phi_delta.is_zero();
    r.stages.push_back({"phi", ok,
                        "t -> " + r.phi_t.to_string() + "; (7 + sqrt(-15))/4 gives " + r.printed_root_value.to_string() +
                            ", not a root"});
}

void lemma_stage(ObstructionReport &r) {
    r.lemma_solutions = lemma_diophantine_search(r.options.dioph_bound);
    r.stages.push_back({"lemma", r.lemma_solutions.empty(),
                        std::to_string(r.lemma_solutions.size()) + " primitive solutions of +-2c^2 = a^2 + 15b^2 up to " +
                            std::to_string(r.options.dioph_bound)});
}

void trial_stages(ObstructionReport &r) {
    std::mt19937_64 rng(r.options.seed);
    for (int i = 0; i < r.options.trials; ++i) {
        const LaurentPoly f = random_symmetric_unit_at_one(rng, 6);
        const LaurentPoly g = random_vanishing_at_one(rng, 6);
        if (det_identity_check(CoverPresentation(f, g)))
            ++r.det_identity_passed;
    }
    r.stages.push_back({"det-identity", r.det_identity_passed == r.options.trials,
                        std::to_string(r.det_identity_passed) + "/" + std::to_string(r.options.trials)});

    for (int i = 0; i < r.options.trials; ++i) {
        const LaurentPoly h = random_laurent(rng, 8);
        if (theorem2_parity_check(h).passes)
            ++r.parity_passed;
        const LaurentPoly g = LaurentPoly{{1, 1}, {0, -1}} * delta_74() * h;
        const auto lk = cover_linking_coefficients(g, 2);
        if (lk[0] % 15 == 0 && lk[1] % 15 == 0)
            ++r.linking_divisible;
    }
    r.stages.push_back({"parity", r.parity_passed == r.options.trials && r.linking_divisible == r.options.trials,
                        std::to_string(r.parity_passed) + "/" + std::to_string(r.options.trials) +
                            " parity, " + std::to_string(r.linking_divisible) + "/" +
                            std::to_string(r.options.trials) + " linking numbers divisible by 15"});
}

} // namespace

ObstructionReport verify_74(const VerifyOptions &opts, const IntMatrix &seifert) {
    if (opts.p_bound < 15)
        throw DomainError("p_bound must be >= 15");
    if (opts.dioph_bound < 1)
        throw DomainError("dioph_bound must be >= 1");
    if (opts.trials < 1)
        throw DomainError("trials must be >= 1");
    ObstructionReport r;
    r.options = opts;
    knot_stages(r, seifert);
    lens_stage(r);
    theorem1_stage(r);
    phi_stage(r);
    lemma_stage(r);
    trial_stages(r);
    return r;
}

} // namespace slicenum
