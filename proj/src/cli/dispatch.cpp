#include "slicenum/cli/dispatch.hpp"

#include "slicenum/cli/parse.hpp"
#include "slicenum/errors.hpp"
#include "slicenum/factor/factorization.hpp"
#include "slicenum/knotinv/seifert.hpp"
#include "slicenum/linkform/metabolizer.hpp"
#include "slicenum/seventy4/cover.hpp"
#include "slicenum/seventy4/obstructions.hpp"
#include "slicenum/seventy4/report.hpp"
#include "slicenum/seventy4/two_bridge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#ifndef SLICENUM_VERSION
#define SLICENUM_VERSION "0.0.0"
#endif

namespace slicenum::cli {

using json = nlohmann::ordered_json;

std::string version() { return SLICENUM_VERSION; }

namespace {

struct Flags {
    std::string seifert;
    std::string poly;
    std::string cf;
    std::string group;
    std::string gram;
    std::string json_path;
    std::optional<std::int64_t> bound;
    std::optional<std::int64_t> dioph_bound;
    long long budget = kDefaultBudget;
    int trials = 200;
    std::uint64_t seed = 74;
};

class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

json poly_json(const LaurentPoly &p) { return format_polynomial(p); }

json fraction_json(const Fraction &x) { return to_string(x); }

json group_json(const FiniteAbelianGroup &g) { return g.invariant_factors(); }

json form_json(const LinkingForm &f) {
    json gram = json::array();
    for (const auto &row : f.gram()) {
        json r = json::array();
        for (const Fraction &x : row)
            r.push_back(fraction_json(x));
        gram.push_back(r);
    }
    return {{"group", group_json(f.group())}, {"gram", gram}};
}

json subgroup_json(const Subgroup &h) {
    json gens = json::array();
    for (const Element &x : h.generators)
        gens.push_back(x);
    return {{"order", h.order}, {"generators", gens}};
}

json triples_json(const std::vector<Triple> &ts) {
    json out = json::array();
    for (const Triple &t : ts)
        out.push_back({t.a, t.b, t.c});
    return out;
}

std::string gram_text(const LinkingForm &f) {
    std::string s;
    for (std::size_t i = 0; i < f.gram().size(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < f.gram()[i].size(); ++j)
            s += (j ? " " : "") + to_string(f.gram()[i][j]);
    }
    return s;
}

// Which inputs a subcommand accepts.
enum Source : unsigned {
    kNone = 0,
    kSeifert = 1,
    kPoly = 2,
    kCf = 4,
    kGroup = 8,
};

class Runner {
  public:
    Runner(const Flags &flags, std::ostream &out) : f_(flags), out_(out) {}

    json doc;

    void run(const std::string &name) {
        doc["subcommand"] = name;
        doc["inputs"] = json::object();
        doc["result"] = json::object();
        doc["provenance"] = {{"version", version()}};
        if (name == "alex")
            alex();
        else if (name == "det")
            det();
        else if (name == "sig")
            sig();
        else if (name == "homology")
            homology();
        else if (name == "linkform")
            linkform();
        else if (name == "metabolizer")
            metabolizer();
        else if (name == "fox-milnor")
            fox_milnor_cmd();
        else if (name == "two-bridge")
            two_bridge();
        else if (name == "lens-form")
            lens_form();
        else if (name == "lemma-search")
            lemma_search();
        else if (name == "parity")
            parity();
        else if (name == "det-identity")
            det_identity();
        else if (name == "verify-74")
            verify();
    }

  private:
    Source source(unsigned allowed, bool required) {
        unsigned given = kNone;
        given |= f_.seifert.empty() ? 0u : kSeifert;
        given |= f_.poly.empty() ? 0u : kPoly;
        given |= f_.cf.empty() ? 0u : kCf;
        given |= (f_.group.empty() && f_.gram.empty()) ? 0u : kGroup;
        if (given & ~allowed)
            throw InputError("input flag not accepted by this subcommand");
        if (given != kNone && (given & (given - 1)) != 0)
            throw InputError("give exactly one input source");
        if (given == kNone && required)
            throw InputError("an input source is required");
        return static_cast<Source>(given);
    }

    SeifertMatrix seifert() {
        doc["inputs"]["seifert"] = f_.seifert;
        return SeifertMatrix(read_matrix_file(f_.seifert));
    }

    LaurentPoly poly() {
        doc["inputs"]["poly"] = f_.poly;
        return parse_polynomial(f_.poly);
    }

    std::vector<std::int64_t> cf() {
        doc["inputs"]["cf"] = f_.cf;
        return parse_int_list(f_.cf);
    }

    LinkingForm given_form() {
        if (f_.group.empty() || f_.gram.empty())
            throw InputError("--group and --gram go together");
        doc["inputs"]["group"] = f_.group;
        doc["inputs"]["gram"] = f_.gram;
        return LinkingForm(FiniteAbelianGroup(parse_int_list(f_.group)), parse_gram(f_.gram));
    }

    LinkingForm lens_from_cf() {
        const Fraction x = cf_to_fraction(cf());
        const BigInt p = abs(x.get_num());
        if (!p.fits_slong_p() || !x.get_den().fits_slong_p())
            throw CapacityError("lens space order exceeds 64 bits");
        return lens_linking_form(p.get_si(), x.get_den().get_si());
    }

    LinkingForm form_input(unsigned allowed) {
        switch (source(allowed, true)) {
        case kSeifert:
            return branched_cover_linking_form(seifert());
        case kCf:
            return lens_from_cf();
        default:
            return given_form();
        }
    }

    void alex() {
        source(kSeifert, true);
        const LaurentPoly d = alexander_polynomial(seifert());
        doc["result"]["alexander"] = poly_json(d);
        out_ << format_polynomial(d) << "\n";
    }

    void det() {
        BigInt d;
        if (source(kSeifert | kPoly, true) == kSeifert) {
            d = knot_determinant(seifert());
        } else {
            d = abs(evaluate(poly(), BigInt(-1)));
        }
        doc["result"]["determinant"] = d.get_str();
        out_ << d.get_str() << "\n";
    }

    void sig() {
        source(kSeifert, true);
        const int s = knot_signature(seifert());
        doc["result"]["signature"] = s;
        out_ << s << "\n";
    }

    void homology() {
        source(kSeifert, true);
        const FiniteAbelianGroup g = branched_cover_homology(seifert());
        doc["result"]["invariant_factors"] = group_json(g);
        doc["result"]["order"] = g.order();
        out_ << g.to_string() << "\n";
    }

    void linkform() {
        const LinkingForm form = form_input(kSeifert | kGroup | kCf);
        doc["result"]["form"] = form_json(form);
        json parts = json::array();
        out_ << "group: " << form.group().to_string() << "\n";
        out_ << "gram: " << gram_text(form) << "\n";
        for (const auto &[p, part] : primary_decompose(form)) {
            parts.push_back({{"prime", p}, {"form", form_json(part.form)}});
            out_ << p << "-part: " << part.form.group().to_string() << " [" << gram_text(part.form) << "]\n";
        }
        doc["result"]["primary_parts"] = parts;
    }

    void metabolizer() {
        const LinkingForm form = form_input(kSeifert | kGroup | kCf);
        doc["provenance"]["budget"] = f_.budget;
        const SliceCheck check = slice_obstruction_check(form, f_.budget);
        doc["result"]["form"] = form_json(form);
        doc["result"]["verdict"] = to_string(check.verdict);
        doc["result"]["witness"] = check.witness ? subgroup_json(*check.witness) : json(nullptr);
        out_ << to_string(check.verdict) << "\n";
        if (check.witness && check.witness->generators.empty()) {
            out_ << "trivial metabolizer\n";
        } else if (check.witness) {
            out_ << "metabolizer of order " << check.witness->order << " generated by";
            for (const Element &x : check.witness->generators)
                out_ << " " << format_element(x);
            out_ << "\n";
        }
    }

    void fox_milnor_cmd() {
        const LaurentPoly d = source(kSeifert | kPoly, true) == kSeifert ? alexander_polynomial(seifert()) : poly();
        const std::optional<LaurentPoly> w = fox_milnor(d);
        const Factorization fac = factor_integer_poly(d);
        json factors = json::array();
        for (const auto &[q, m] : fac.factors)
            factors.push_back({{"factor", poly_json(q)}, {"multiplicity", m}});
        doc["result"]["polynomial"] = poly_json(d);
        doc["result"]["factors"] = factors;
        doc["result"]["witness"] = w ? poly_json(*w) : json(nullptr);
        out_ << (w ? "witness " + format_polynomial(*w) : std::string("no witness")) << "\n";
    }

    void two_bridge() {
        source(kCf, true);
        const Fraction x = cf_to_fraction(cf());
        doc["result"]["fraction"] = fraction_json(x);
        const std::string lens = "L(" + BigInt(abs(x.get_num())).get_str() + ", " + x.get_den().get_str() + ")";
        doc["result"]["lens_space"] = lens;
        out_ << to_string(x) << "\n" << lens << "\n";
    }

    void lens_form() {
        source(kCf, true);
        const LinkingForm form = lens_from_cf();
        doc["result"]["form"] = form_json(form);
        out_ << form.group().to_string() << " [" << gram_text(form) << "]\n";
    }

    void lemma_search() {
        source(kNone, false);
        const std::int64_t bound = f_.bound.value_or(500);
        doc["provenance"]["dioph_bound"] = bound;
        const std::vector<Triple> sols = lemma_diophantine_search(bound);
        const std::int64_t control_bound = std::min<std::int64_t>(bound, 10);
        const std::vector<Triple> control = norm_form_search(4, 15, control_bound);
        doc["result"]["solutions"] = triples_json(sols);
        doc["result"]["control"] = {{"equation", "a^2 + 15b^2 = 4c^2"},
                                    {"bound", control_bound},
                                    {"solutions", triples_json(control)}};
        out_ << sols.size() << " primitive solutions of +-2c^2 = a^2 + 15b^2 with max(|a|,|b|,c) <= " << bound
             << "\n";
        out_ << "control a^2 + 15b^2 = 4c^2: " << control.size() << " solutions\n";
    }

    void trial_provenance() {
        doc["provenance"]["trials"] = f_.trials;
        doc["provenance"]["seed"] = f_.seed;
        if (f_.trials < 1)
            throw InputError("--trials must be >= 1");
    }

    void parity() {
        if (source(kPoly, false) == kPoly) {
            const LaurentPoly h = poly();
            const ParityCheck c = theorem2_parity_check(h);
            const LaurentPoly g = LaurentPoly{{1, 1}, {0, -1}} * delta_74() * h;
            json lk = json::array();
            for (const BigInt &x : cover_linking_coefficients(g, 2))
                lk.push_back(x.get_str());
            doc["result"] = {{"even", c.even.get_str()},
                             {"odd", c.odd.get_str()},
                             {"passes", c.passes},
                             {"linking_coefficients", lk}};
            out_ << "even " << c.even.get_str() << ", odd " << c.odd.get_str() << ": "
                 << (c.passes ? "passes" : "fails") << "\n";
            return;
        }
        trial_provenance();
        std::mt19937_64 rng(f_.seed);
        int passed = 0;
        for (int i = 0; i < f_.trials; ++i)
            passed += theorem2_parity_check(random_laurent(rng, 8)).passes ? 1 : 0;
        doc["result"] = {{"trials", f_.trials}, {"passed", passed}};
        out_ << passed << "/" << f_.trials << " parity checks passed\n";
    }

    void det_identity() {
        source(kNone, false);
        trial_provenance();
        std::mt19937_64 rng(f_.seed);
        int passed = 0;
        for (int i = 0; i < f_.trials; ++i) {
            const LaurentPoly f = random_symmetric_unit_at_one(rng, 6);
            const LaurentPoly g = random_vanishing_at_one(rng, 6);
            passed += det_identity_check(CoverPresentation(f, g)) ? 1 : 0;
        }
        doc["result"] = {{"trials", f_.trials}, {"passed", passed}};
        out_ << passed << "/" << f_.trials << " determinant identities hold\n";
    }

    void verify() {
        VerifyOptions opts;
        opts.p_bound = f_.bound.value_or(opts.p_bound);
        opts.dioph_bound = f_.dioph_bound.value_or(opts.dioph_bound);
        opts.trials = f_.trials;
        opts.seed = f_.seed;
        opts.budget = f_.budget;
        const bool custom = source(kSeifert, false) == kSeifert;
        const IntMatrix matrix = custom ? read_matrix_file(f_.seifert) : seifert_74();
        if (custom)
            doc["inputs"]["seifert"] = f_.seifert;
        doc["provenance"]["p_bound"] = opts.p_bound;
        doc["provenance"]["dioph_bound"] = opts.dioph_bound;
        doc["provenance"]["trials"] = opts.trials;
        doc["provenance"]["seed"] = opts.seed;
        doc["provenance"]["budget"] = opts.budget;
        try {
            report_ = verify_74(opts, matrix);
        } catch (const DomainError &e) {
            throw InputError(e.what());
        }
        emit_report(*report_);
    }

    void emit_report(const ObstructionReport &r) {
        json stages = json::array();
        for (const Stage &s : r.stages) {
            stages.push_back({{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
            out_ << "[" << (s.ok ? "ok" : "FAIL") << "] " << s.name << ": " << s.detail << "\n";
        }
        json table = json::array();
        for (const Theorem1Row &row : r.theorem1_table) {
            table.push_back({{"p", row.order.value()},
                             {"order", row.order.to_string()},
                             {"five_part", form_json(row.five_part)},
                             {"witness", row.witness ? subgroup_json(*row.witness) : json(nullptr)},
                             {"candidates", row.candidates}});
            out_ << "  p = " << row.order.to_string() << ": 5-part " << row.five_part.group().to_string() << " ["
                 << gram_text(row.five_part) << "], " << row.candidates << " candidates, "
                 << (row.witness ? "metabolizer found" : "no metabolizer") << "\n";
        }
        const Conclusion c = r.conclusion();
        auto opt = [](const std::optional<int> &v) { return v ? json(*v) : json(nullptr); };
        doc["result"] = {
            {"alexander", poly_json(r.alexander)},
            {"fox_milnor_witness", r.fox_milnor_witness ? poly_json(*r.fox_milnor_witness) : json(nullptr)},
            {"determinant", r.determinant.get_str()},
            {"signature", r.signature},
            {"homology", group_json(r.homology)},
            {"two_bridge_fraction", fraction_json(r.two_bridge_fraction)},
            {"lens_self_linking", fraction_json(r.lens_self_linking)},
            {"n1_self_linking", fraction_json(r.n1_self_linking)},
            {"theorem1_table", table},
            {"lemma_solutions", triples_json(r.lemma_solutions)},
            {"phi",
             {{"t", r.phi_t.to_string()},
              {"t_plus_inverse", r.phi_t_sum.to_string()},
              {"t_times_inverse", r.phi_t_product.to_string()},
              {"alexander", r.phi_delta.to_string()},
              {"printed_root_value", r.printed_root_value.to_string()}}},
            {"det_identity_passed", r.det_identity_passed},
            {"parity_passed", r.parity_passed},
            {"linking_divisible", r.linking_divisible},
            {"stages", stages},
            {"conclusive", r.conclusive()},
            {"failing_stage", r.conclusive() ? json(nullptr) : json(r.failing_stage())},
            {"slice_genus", opt(c.slice_genus)},
            {"slicing_number_lower_bound", opt(c.slicing_number_lower_bound)},
            {"slicing_number", opt(c.slicing_number)},
        };
        if (c.slice_genus)
            out_ << "g_s(7_4) = " << *c.slice_genus << "\n";
        if (c.slicing_number)
            out_ << "u_s(7_4) = " << *c.slicing_number << "\n";
        else
            out_ << "inconclusive: stage " << r.failing_stage() << " failed\n";
    }

    const Flags &f_;
    std::ostream &out_;
    std::optional<ObstructionReport> report_;
};

const char *const kSubcommands[][2] = {
    {"alex", "Alexander polynomial of a Seifert matrix"},
    {"det", "knot determinant"},
    {"sig", "knot signature"},
    {"homology", "first homology of the double branched cover"},
    {"linkform", "linking form of the double branched cover, or of --group/--gram"},
    {"metabolizer", "slice obstruction check with metabolizer search"},
    {"fox-milnor", "Fox-Milnor condition on an Alexander polynomial"},
    {"two-bridge", "continued fraction of a two-bridge knot"},
    {"lens-form", "linking form of the lens space of a continued fraction"},
    {"lemma-search", "search for primitive solutions of +-2c^2 = a^2 + 15b^2"},
    {"parity", "coefficient parity check for (t-1)(4t^2-7t+4)h"},
    {"det-identity", "randomized determinant identity check"},
    {"verify-74", "full obstruction pipeline for 7_4"},
};

void add_flags(CLI::App *sub, Flags &f) {
    sub->add_option("--seifert", f.seifert, "Seifert matrix file");
    sub->add_option("--poly", f.poly, "Laurent polynomial, e.g. \"4t^2 - 7t + 4\"");
    sub->add_option("--cf", f.cf, "continued fraction terms a,b,...");
    sub->add_option("--group", f.group, "invariant factors d1,d2,...");
    sub->add_option("--gram", f.gram, "Gram rows, entries num/den, rows separated by ';'");
    sub->add_option("--bound", f.bound, "search bound");
    sub->add_option("--dioph-bound", f.dioph_bound, "diophantine search bound for verify-74");
    sub->add_option("--budget", f.budget, "metabolizer candidate budget")->check(CLI::PositiveNumber);
    sub->add_option("--trials", f.trials, "randomized trials");
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--json", f.json_path, "write the machine-readable report to PATH");
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact sliceness obstructions for knots", "slicenum"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);
    Flags flags;
    for (const auto &[name, help] : kSubcommands)
        add_flags(app.add_subcommand(name, help), flags);

    std::vector<const char *> argv{"slicenum"};
    for (const std::string &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion &) {
        out << version() << "\n";
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInputError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    std::ostringstream text;
    Runner runner(flags, text);
    try {
        runner.run(name);
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const SyntaxError &e) {
        err << "syntax error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error &e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
    out << text.str();

    if (!flags.json_path.empty()) {
        std::ofstream js(flags.json_path);
        if (!js) {
            err << "input error: cannot write " << flags.json_path << "\n";
            return kInputError;
        }
        js << runner.doc.dump(2) << "\n";
    }
    return kOk;
}

} // namespace slicenum::cli
