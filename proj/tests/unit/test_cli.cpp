#include "gen.hpp"

#include "slicenum/cli/dispatch.hpp"
#include "slicenum/cli/parse.hpp"
#include "slicenum/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace slicenum;
using namespace slicenum::cli;

namespace {

const std::string corpus = SLICENUM_CORPUS_DIR;

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = dispatch(args, out, err);
    return {status, out.str(), err.str()};
}

std::size_t syntax_position(const std::string &s) {
    try {
        parse_polynomial(s);
    } catch (const SyntaxError &e) {
        return e.position();
    }
    return std::string::npos;
}

std::size_t matrix_error_line(const std::string &s) {
    try {
        parse_matrix(s);
    } catch (const SyntaxError &e) {
        return e.position();
    }
    return 0;
}

nlohmann::json run_json(std::vector<std::string> args) {
    const auto path = std::filesystem::temp_directory_path() / "slicenum_cli_test.json";
    args.push_back("--json");
    args.push_back(path.string());
    REQUIRE(run(args).status == 0);
    std::ifstream in(path);
    return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("polynomial parsing") {
    CHECK(parse_polynomial("4t^2 - 7t + 4") == LaurentPoly{{2, 4}, {1, -7}, {0, 4}});
    CHECK(parse_polynomial("4t - 7 + 4t^-1") == LaurentPoly{{1, 4}, {0, -7}, {-1, 4}});
    CHECK(parse_polynomial("t - t").is_zero());
    CHECK(parse_polynomial("2t^2-5t+2") == LaurentPoly{{2, 2}, {1, -5}, {0, 2}});
    CHECK(parse_polynomial(" - 3 * t ^ - 2 + t") == LaurentPoly{{-2, -3}, {1, 1}});
    CHECK(parse_polynomial("t") == LaurentPoly::t());
    CHECK(parse_polynomial("-t^3") == LaurentPoly::monomial(-1, 3));
    CHECK(parse_polynomial("0") == LaurentPoly());
    CHECK(parse_polynomial("123456789012345678901234567890t").coeff(1) ==
          BigInt("123456789012345678901234567890"));
}

TEST_CASE("polynomial syntax errors carry the character position") {
    CHECK(syntax_position("") == 0);
    CHECK(syntax_position("4t^") == 3);
    CHECK(syntax_position("4t^^2") == 3);
    CHECK(syntax_position("4t 7") == 3);
    CHECK(syntax_position("4 * 7") == 4);
    CHECK(syntax_position("4x") == 1);
    CHECK(syntax_position("t + ") == 4);
    CHECK(syntax_position("t^2 + t") == std::string::npos);
}

TEST_CASE("polynomial formatting") {
    CHECK(format_polynomial(LaurentPoly{{2, 4}, {1, -7}, {0, 4}}) == "4t^2 - 7t + 4");
    CHECK(format_polynomial(LaurentPoly{{1, 4}, {0, -7}, {-1, 4}}) == "4t - 7 + 4t^-1");
    CHECK(format_polynomial(LaurentPoly()) == "0");
    CHECK(format_polynomial(LaurentPoly(-1)) == "-1");
    CHECK(format_polynomial(LaurentPoly{{1, -1}, {-3, 1}}) == "-t + t^-3");
    CHECK(format_polynomial(LaurentPoly{{1, 2}, {0, -1}}) == "2t - 1");
}

TEST_CASE("parse and format round trip") {
    for (const char *s : {"4t^2 - 7t + 4", "4t - 7 + 4t^-1", "0", "t", "-t^-1", "2t - 1", "-5t^3 + t - 12"})
        CHECK(format_polynomial(parse_polynomial(s)) == s);
    testgen::Rng rng(701);
    for (int i = 0; i < 500; ++i) {
        const LaurentPoly p = testgen::poly(rng, -6, 6, 30);
        CHECK(parse_polynomial(format_polynomial(p)) == p);
    }
}

TEST_CASE("matrix parsing") {
    CHECK(parse_matrix("2 1\n0 2") == IntMatrix{{2, 1}, {0, 2}});
    CHECK(parse_matrix("1") == IntMatrix{{1}});
    CHECK(parse_matrix("# comment\n\n  -2 +1 \n\t0 3\n# tail\n") == IntMatrix{{-2, 1}, {0, 3}});
    CHECK(matrix_error_line("1 2\n3") == 2);
    CHECK(matrix_error_line("# c\n1 2\n\n3 x") == 4);
    CHECK(matrix_error_line("1 2.5") == 1);
    CHECK(matrix_error_line("# only comments\n") > 0);
    CHECK(read_matrix_file(corpus + "/7_4.mat") == IntMatrix{{2, 1}, {0, 2}});
    CHECK_THROWS_AS(read_matrix_file(corpus + "/missing.mat"), std::invalid_argument);
}

TEST_CASE("fraction, list and Gram parsing") {
    CHECK(parse_fraction("4/15") == make_fraction(4, 15));
    CHECK(parse_fraction("-2/4") == make_fraction(-1, 2));
    CHECK(parse_fraction("3") == 3);
    CHECK_THROWS_AS(parse_fraction("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_fraction("a/2"), SyntaxError);
    CHECK(parse_int_list("4, 4") == std::vector<std::int64_t>{4, 4});
    CHECK_THROWS_AS(parse_int_list("4,,4"), SyntaxError);
    const auto g = parse_gram("4/15 0; 0 2/15");
    CHECK(g == std::vector<std::vector<Fraction>>{{make_fraction(4, 15), 0}, {0, make_fraction(2, 15)}});
    const LinkingForm f(FiniteAbelianGroup({15}), parse_gram("19/15"));
    CHECK(f.gram()[0][0] == make_fraction(4, 15));
}

TEST_CASE("dispatch examples") {
    const Run alex = run({"alex", "--seifert", corpus + "/7_4.mat"});
    CHECK(alex.status == 0);
    CHECK(alex.out == "4t^2 - 7t + 4\n");
    const Run fm = run({"fox-milnor", "--poly", "2t^2-5t+2"});
    CHECK(fm.status == 0);
    CHECK(fm.out == "witness 2t - 1\n");
    CHECK(run({"fox-milnor", "--poly", "4t^2-7t+4"}).out == "no witness\n");
    CHECK(run({"det", "--seifert", corpus + "/7_4.mat"}).out == "15\n");
    CHECK(run({"homology", "--seifert", corpus + "/7_4.mat"}).out == "Z/15\n");
    CHECK(run({"sig", "--seifert", corpus + "/trefoil.mat"}).out == "2\n");
    CHECK(run({"two-bridge", "--cf", "4,4"}).out == "15/4\nL(15, 4)\n");
    CHECK(run({"lens-form", "--cf", "4,4"}).out == "Z/15 [4/15]\n");
    CHECK(run({"metabolizer", "--seifert", corpus + "/6_1.mat"}).out.starts_with("passes\n"));
    CHECK(run({"metabolizer", "--group", "3,3", "--gram", "1/3 0; 0 1/3"}).out == "obstructed-by-form\n");

    const Run v = run({"verify-74", "--trials", "20", "--dioph-bound", "100"});
    CHECK(v.status == 0);
    CHECK(v.out.ends_with("u_s(7_4) = 2\n"));
}

TEST_CASE("exit status reflects computation, not verdict") {
    CHECK(run({"metabolizer", "--cf", "4,4"}).status == 0);
    CHECK(run({"metabolizer", "--cf", "3,2,2,2"}).status == 0);
    const Run tampered = run({"verify-74", "--seifert", corpus + "/6_1.mat", "--bound", "15", "--trials", "3",
                              "--dioph-bound", "10"});
    CHECK(tampered.status == 0);
    CHECK(tampered.out.find("inconclusive: stage fox-milnor failed") != std::string::npos);
}

TEST_CASE("input errors exit with status 1") {
    const Run unknown = run({"frobnicate"});
    CHECK(unknown.status == 1);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).status == 1);
    CHECK(run({"alex"}).status == 1);
    CHECK(run({"alex", "--seifert", corpus + "/7_4.mat", "--poly", "t"}).status == 1);
    CHECK(run({"det", "--seifert", corpus + "/7_4.mat", "--poly", "t"}).status == 1);
    CHECK(run({"alex", "--seifert", corpus + "/nope.mat"}).status == 1);
    CHECK(run({"fox-milnor", "--poly", "4t^^2"}).status == 1);
    CHECK(run({"linkform", "--group", "15"}).status == 1);
    CHECK(run({"linkform", "--group", "15", "--gram", "1/2"}).status == 1);
    CHECK(run({"two-bridge", "--cf", "2,1,1"}).status == 1);
    CHECK(run({"verify-74", "--bound", "14"}).status == 1);
    CHECK(run({"det-identity", "--trials", "0"}).status == 1);
    CHECK(run({"lemma-search", "--bound", "0"}).status == 1);
    CHECK(run({"lemma-search", "--bound", "ten"}).status == 1);
}

TEST_CASE("capacity errors exit with status 2") {
    CHECK(run({"metabolizer", "--group", "3,9,27", "--gram", "1/3 0 0; 0 1/9 0; 0 0 1/27", "--budget", "3"}).status ==
          2);
    CHECK(run({"fox-milnor", "--poly", "t^17 + 1"}).status == 2);
}

TEST_CASE("machine-readable documents") {
    const auto alex = run_json({"alex", "--seifert", corpus + "/7_4.mat"});
    CHECK(alex["subcommand"] == "alex");
    CHECK(alex["result"]["alexander"] == "4t^2 - 7t + 4");
    CHECK(alex["provenance"]["version"] == version());

    const auto v = run_json({"verify-74", "--bound", "15", "--dioph-bound", "20", "--trials", "4", "--seed", "9"});
    CHECK(v["result"]["slicing_number"] == 2);
    CHECK(v["result"]["slice_genus"] == 1);
    CHECK(v["result"]["theorem1_table"].size() == 2);
    CHECK(v["provenance"]["seed"] == 9);
    CHECK(v["provenance"]["p_bound"] == 15);
    CHECK(v["provenance"]["dioph_bound"] == 20);
    CHECK(v["result"]["phi"]["t"] == "(7 + sqrt(-15))/8");

    const auto lemma = run_json({"lemma-search", "--bound", "30"});
    CHECK(lemma["result"]["solutions"].empty());
    CHECK(lemma["result"]["control"]["solutions"].size() > 0);

    const auto det_id = run_json({"det-identity", "--trials", "7", "--seed", "3"});
    CHECK(det_id["result"]["passed"] == 7);
}
