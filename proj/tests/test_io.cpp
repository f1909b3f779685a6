#include <doctest.h>

#include "fixtures_data.hpp"
#include "qwalg/io.hpp"
#include "qwalg/report.hpp"

using namespace qwalg;

#ifndef QWALG_FIXTURE_DIR
#define QWALG_FIXTURE_DIR "fixtures"
#endif

namespace {

std::string fixture_path(const char* name) {
    return std::string(QWALG_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("fixture files parse to the transcribed tables") {
    auto p36 = parse_algebra_file(fixture_path("remark-3.6.alg"));
    REQUIRE(std::holds_alternative<FiniteAlgebra>(p36));
    const auto& r36 = std::get<FiniteAlgebra>(p36);
    CHECK(r36 == fixtures::remark36());
    CHECK(r36.order() == 7);
    CHECK(r36.one() == 1);

    auto p319 = parse_algebra_file(fixture_path("example-3.19.alg"));
    REQUIRE(std::holds_alternative<FiniteAlgebra>(p319));
    const auto& a319 = std::get<FiniteAlgebra>(p319);
    CHECK(a319 == fixtures::example319());
    CHECK(derive(a319).star == std::vector<int>{4, 2, 1, 3, 0});
    CHECK(a319.label(1) == "a");

    auto p414 = parse_algebra_file(fixture_path("example-4.14.alg"));
    CHECK(std::get<FiniteAlgebra>(p414) == fixtures::example414());

    auto p55 = parse_algebra_file(fixture_path("example-5.5.alg"));
    REQUIRE(std::holds_alternative<ProductAlgebra>(p55));
    CHECK(std::get<ProductAlgebra>(p55) == fixtures::example55());

    auto p56 = parse_algebra_file(fixture_path("example-5.6.alg"));
    REQUIRE(std::holds_alternative<ProductAlgebra>(p56));
    CHECK(std::get<ProductAlgebra>(p56) == fixtures::example56());
}

TEST_CASE("product files convert on demand") {
    auto p55 = parse_algebra_file(fixture_path("example-5.5.alg"));
    CHECK(as_implication(p55) == fixtures::example319());
}

TEST_CASE("parse errors carry positions and kinds") {
    CHECK_THROWS_AS(parse_algebra(""), ParseError);
    CHECK_THROWS_AS(parse_algebra("one 0\norder 2\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("order 2\none 0\nimp\n0 0\n0 3\n"),
                    IndexOutOfRangeError);
    CHECK_THROWS_AS(
        parse_algebra("order 2\none 0\nimp\n0 0\n0 0\nimp\n0 0\n0 0\n"),
        DuplicateBlockError);
    CHECK_THROWS_AS(parse_algebra("order 2\none 0\nimp\n0 0 0\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("order 2\none 0\nimp\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("order 2\nimp\n0 0\n0 0\n"), ParseError);
    // star requires op prod, and op prod requires star
    CHECK_THROWS_AS(parse_algebra("order 2\none 0\nstar 1 0\nimp\n0 0\n0 0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_algebra("order 2\none 0\nop prod\n0 0\n0 0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_algebra("order 2\none 0\nnames x\nimp\n0 0\n0 0\n"),
                    ParseError);
    try {
        parse_algebra("order 2\none 0\nimp\n0 0\n0 3\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
        CHECK(e.column() == 2);
    }
}

TEST_CASE("comments and flexible whitespace are accepted") {
    auto parsed = parse_algebra(
        "# heading\norder 2\n# mid\none   1\nnames 0 1\nimp\n  1 1\n0   1\n");
    const auto& alg = std::get<FiniteAlgebra>(parsed);
    CHECK(alg.order() == 2);
    CHECK(alg.imp(1, 0) == 0);
}

TEST_CASE("write/parse round trips") {
    for (const auto& alg : fixtures::implication_fixtures()) {
        std::string text = write_algebra(alg);
        auto reparsed = parse_algebra(text);
        CHECK(std::get<FiniteAlgebra>(reparsed) == alg);
        // The writer is canonical: a second round trip is byte-identical.
        CHECK(write_algebra(std::get<FiniteAlgebra>(reparsed)) == text);
        CHECK(std::get<FiniteAlgebra>(reparsed).names() == alg.names());
    }
    ProductAlgebra p = fixtures::example55();
    auto reparsed = parse_algebra(write_algebra(p));
    CHECK(std::get<ProductAlgebra>(reparsed) == p);
}

TEST_CASE("report documents are schema-tagged and witnesses revalidate") {
    auto alg = fixtures::remark36();
    auto ops = derive(alg);
    auto rep = classify(alg, ops);
    auto doc = report::document(
        "classify", report::classification_json(alg, ops, rep));
    CHECK(doc["schema"] == report::kSchema);
    CHECK(doc["kind"] == "classify");
    const auto& axioms = doc["report"]["axioms"];
    bool saw_qw = false;
    for (const auto& a : axioms) {
        if (a["id"] == "QW") {
            saw_qw = true;
            CHECK(a["holds"] == false);
            CHECK(a["witness"]["tuple"] == nlohmann::json({2, 0, 6}));
        }
    }
    CHECK(saw_qw);
    CHECK(doc["report"]["classes"]["involutiveBE"] == true);
}

TEST_CASE("a corrupted witness is rejected at report time") {
    auto alg = fixtures::remark36();
    auto ops = derive(alg);
    AxiomReport r = check_axiom(alg, ops, AxiomId::QW);
    REQUIRE_FALSE(r.holds);
    r.witness->lhs ^= 1;
    CHECK_THROWS_AS(report::axiom_report_json(alg, ops, r), std::logic_error);
}
